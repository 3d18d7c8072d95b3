#include "bibliolens_cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "bibliolens/citation_profile.hpp"
#include "bibliolens/content.hpp"
#include "bibliolens/errors.hpp"
#include "bibliolens/impact.hpp"
#include "bibliolens/productivity.hpp"
#include "bibliolens/report.hpp"
#include "bibliolens/svg.hpp"

namespace bibliolens::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string input;
    std::string out;
    std::string format;
    std::string plot;
    std::string home;
    std::string journal;
    std::string places;
    std::string regions;
    std::string age_counting = "inclusive";
    int zones = 3;
    int window = 2;
    bool strict = true;
    bool truncate_display = true;
    bool originals_only = false;
    std::size_t top = 20;
    std::uint64_t core_min = 10;

    std::optional<double> lotka_c;
    std::string lotka_method = "two-point";

    std::optional<int> year;
    std::string aggregate;
    std::optional<int> citing_year;

    bool include_own_journal = false;
};

enum class InputKind { corpus, histogram };

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

InputKind input_kind(const Settings& s) {
    if (s.input.empty()) throw UsageError("--input is required");
    auto ext = lower(fs::path(s.input).extension().string());
    if (ext == ".json") return InputKind::corpus;
    if (ext == ".csv") return InputKind::histogram;
    throw UsageError("cannot tell the input kind of '" + s.input + "': expected a .json corpus or a .csv histogram");
}

Corpus load(const Settings& s, std::ostream& err) {
    if (input_kind(s) != InputKind::corpus) throw UsageError("this command needs a corpus (.json) input");
    LoadOptions options;
    options.strict = s.strict;
    options.on_warning = [&err](const std::string& m) { err << "warning: " << m << '\n'; };
    return load_corpus(s.input, options);
}

AgeCounting age_counting(const Settings& s) {
    if (s.age_counting == "inclusive") return AgeCounting::inclusive;
    if (s.age_counting == "elapsed") return AgeCounting::elapsed;
    throw UsageError("--age-counting must be 'inclusive' or 'elapsed'");
}

ReportOptions report_options(const Settings& s, const Corpus* corpus) {
    ReportOptions o;
    o.home = corpus ? resolve_home(*corpus, s.home) : s.home;
    o.journal = s.journal;
    o.age_counting = age_counting(s);
    o.zones = s.zones;
    o.impact.window = s.window;
    o.impact.originals_only = s.originals_only;
    o.truncate_impact = s.truncate_display;
    o.core_author_min = s.core_min;
    o.top_journals = s.top;
    o.top_keywords = s.top;
    if (!s.places.empty()) o.places = load_place_list(s.places);
    if (!s.regions.empty()) o.regions = load_region_map(s.regions);
    return o;
}

Format output_format(const Settings& s) {
    if (!s.format.empty()) return parse_format(s.format);
    if (!s.out.empty()) {
        auto ext = lower(fs::path(s.out).extension().string());
        if (ext == ".csv") return Format::csv;
        if (ext == ".json") return Format::json;
    }
    return Format::md;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

void emit(const Document& doc, const Settings& s, std::ostream& out) {
    auto text = render(doc, output_format(s));
    if (s.out.empty())
        out << text;
    else
        write_file(s.out, text);
}

// Writes the SVG at --plot and the plotted series beside it as CSV.
void emit_plot(const ChartSpec& chart, const Settings& s) {
    if (s.plot.empty()) return;
    fs::path svg(s.plot);
    write_file(svg, line_chart_svg(chart));
    write_file(fs::path(svg).replace_extension(".csv"), chart_csv(chart));
}

Document document(std::string title, std::vector<Table> tables) { return Document{std::move(title), std::move(tables)}; }

ChartSpec age_chart(const AgeProfile& p) {
    return ChartSpec{"Half-life of cited references", "Age (years)", "Cumulative citations",
                     {Series{"cumulative citations", age_curve(p)}}};
}

int cmd_validate(const Settings& s, std::ostream& out, std::ostream& err) {
    if (input_kind(s) == InputKind::histogram) {
        auto h = load_histogram(s.input, KeyKind::mixed);
        out << h.size() << " bins OK (total " << h.total() << ")\n";
        return kExitOk;
    }
    auto corpus = load(s, err);
    unique_authors(corpus);
    out << corpus.size() << " articles OK\n";
    return kExitOk;
}

Document cmd_summary(const Settings& s, std::ostream& err) {
    if (input_kind(s) == InputKind::histogram) {
        auto h = load_histogram(s.input, KeyKind::mixed);
        Table t{"summary", "Histogram summary", {"Measure", "Value"}, {}, {}};
        t.add_row({Cell::text("Bins"), Cell::count(h.size())});
        t.add_row({Cell::text("Total"), Cell::count(h.total())});
        if (!h.empty()) {
            auto top = h.ranked().front();
            t.add_row({Cell::text("Largest bin"), Cell::text(key_to_string(top.first))});
            t.add_row({Cell::text("Largest count"), Cell::count(top.second)});
        }
        return document("Summary of " + s.input, {t});
    }
    auto corpus = load(s, err);
    return document("Summary of " + corpus.journal(), summary_tables(corpus));
}

Document cmd_lotka(const Settings& s, std::ostream& err) {
    Histogram observed = input_kind(s) == InputKind::corpus ? author_productivity(load(s, err))
                                                            : load_histogram(s.input, KeyKind::integer);
    LotkaFit fit;
    std::string id;
    if (s.lotka_c) {
        fit = lotka_fit_fixed(observed, *s.lotka_c);
        id = "lotka_fixed";
    } else if (s.lotka_method == "two-point") {
        fit = lotka_fit_two_point(observed);
        id = "lotka_two_point";
    } else if (s.lotka_method == "lsq") {
        fit = lotka_fit_lsq(observed);
        id = "lotka_lsq";
    } else {
        throw UsageError("--method must be 'two-point' or 'lsq'");
    }
    return document("Lotka's law", lotka_tables(fit, id));
}

Document cmd_collab(const Settings& s, std::ostream& err) {
    auto corpus = load(s, err);
    return document("Collaboration", collaboration_tables(corpus, resolve_home(corpus, s.home)));
}

Document cmd_refs(const Settings& s, std::ostream& err) {
    auto corpus = load(s, err);
    auto options = report_options(s, &corpus);
    emit_plot(age_chart(age_profile(corpus, options.age_counting)), s);
    return document("References", reference_tables(corpus, options));
}

Document cmd_bradford(const Settings& s, std::ostream& err) {
    Histogram journals;
    if (input_kind(s) == InputKind::corpus) {
        JournalFrequencyOptions jf;
        jf.include_own_journal = s.include_own_journal;
        journals = journal_frequency(load(s, err), jf);
    } else {
        journals = load_histogram(s.input, KeyKind::text);
    }
    auto partition = bradford_partition(journals, s.zones);
    emit_plot(ChartSpec{"Bradford distribution", "Journals cumulative (log)", "Cumulative citations",
                        {Series{"cumulative citations", bradford_curve(journals)}}},
              s);
    auto tables = bradford_tables(partition);
    for (auto& t : journal_tables(journals, s.top)) tables.push_back(std::move(t));
    return document("Bradford zones", std::move(tables));
}

Document cmd_halflife(const Settings& s, std::ostream& err) {
    AgeProfile profile = input_kind(s) == InputKind::corpus ? age_profile(load(s, err), age_counting(s))
                                                            : age_profile(load_histogram(s.input, KeyKind::mixed));
    emit_plot(age_chart(profile), s);
    return document("Citation half-life", age_tables(profile));
}

std::pair<int, int> parse_span(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) throw std::invalid_argument(text);
        std::size_t used1 = 0, used2 = 0;
        auto a = text.substr(0, dots), b = text.substr(dots + 2);
        int first = std::stoi(a, &used1), last = std::stoi(b, &used2);
        if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(text);
        return {first, last};
    } catch (const std::exception&) {
        throw UsageError("--aggregate expects FIRST..LAST, got '" + text + "'");
    }
}

Document cmd_impact(const Settings& s, std::ostream& err) {
    auto corpus = load(s, err);
    auto options = report_options(s, &corpus);
    if (!s.aggregate.empty()) {
        auto [first, last] = parse_span(s.aggregate);
        auto in = impact_factor_aggregate(corpus, first, last, s.citing_year.value_or(last + 1), s.originals_only);
        return document("Aggregate impact factor", impact_factor_tables({in}, s.truncate_display, "impact_factor_aggregate"));
    }
    if (s.year) {
        auto in = impact_factor_for(corpus, *s.year, options.impact);
        return document("Impact factor", impact_factor_tables({in}, s.truncate_display, "impact_factor"));
    }
    return document("Citations received and impact", impact_tables(corpus, options));
}

Document cmd_content(const Settings& s, std::ostream& err) {
    auto corpus = load(s, err);
    return document("Content", content_tables(corpus, report_options(s, &corpus)));
}

Document cmd_report(const Settings& s, std::ostream& err) {
    auto corpus = load(s, err);
    auto options = report_options(s, &corpus);
    return full_report(corpus, options);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Bibliometric indicators for journal article corpora", "bibliolens"};
    app.require_subcommand(1, 1);
    app.allow_config_extras(false);
    app.set_config("--config", "", "key=value defaults file (also BIBLIOLENS_CONFIG)")->envname("BIBLIOLENS_CONFIG");

    app.add_option("--input,-i", s.input, "Corpus JSON or histogram CSV (chosen by extension)");
    app.add_option("--out,-o", s.out, "Write results here instead of stdout");
    app.add_option("--format,-f", s.format, "csv, json or md (default: from --out extension, else md)")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    app.add_option("--plot", s.plot, "Write an SVG chart here plus its data as CSV beside it");
    app.add_option("--home", s.home, "Home country (default: most frequent author country)");
    app.add_option("--journal", s.journal, "Journal name for self-citation (default: corpus journal)");
    app.add_option("--zones", s.zones, "Number of Bradford zones")->check(CLI::Range(2, 100));
    app.add_flag("--strict,!--lenient", s.strict, "Reject (default) or warn about unknown corpus keys");
    app.add_option("--places", s.places, "Place-name list, one per line");
    app.add_option("--regions", s.regions, "Country to region CSV (country,region)");
    app.add_option("--age-counting", s.age_counting, "inclusive (default) or elapsed")
        ->check(CLI::IsMember({"inclusive", "elapsed"}));
    app.add_option("--window", s.window, "Impact factor window in years")->check(CLI::PositiveNumber);
    app.add_flag("--truncate-display,!--round-display", s.truncate_display,
                 "Truncate (default) or round impact factors at 3 decimals");
    app.add_flag("--originals-only", s.originals_only, "Count only original articles in the impact denominator");
    app.add_option("--top", s.top, "Rows in ranked tables")->check(CLI::PositiveNumber);
    app.add_option("--core-min", s.core_min, "Minimum articles for the core-author table")->check(CLI::PositiveNumber);

    auto sub = [&app](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    auto* validate = sub("validate", "Check a corpus or histogram file");
    validate->add_option("path", s.input, "File to check");
    sub("summary", "Corpus totals");
    auto* lotka = sub("lotka", "Lotka's law fit on author productivity");
    lotka->add_option("--c", s.lotka_c, "Use this fixed exponent")->check(CLI::PositiveNumber);
    lotka->add_option("--method", s.lotka_method, "two-point (default) or lsq")
        ->check(CLI::IsMember({"two-point", "lsq"}));
    sub("collab", "Co-authorship and collaboration");
    sub("refs", "Reference formats, ages, journals and self-citation");
    auto* bradford = sub("bradford", "Bradford zones of cited journals");
    bradford->add_flag("--include-own-journal", s.include_own_journal, "Keep references to the corpus journal");
    sub("halflife", "Age profile and half-life of references");
    auto* impact = sub("impact", "Citations received and impact factors");
    impact->add_option("--year", s.year, "Impact factor for one target year");
    impact->add_option("--aggregate", s.aggregate, "Publication span FIRST..LAST for an aggregate impact factor");
    impact->add_option("--citing-year", s.citing_year, "Citing year for --aggregate (default LAST+1)");
    sub("content", "Keywords, titles and funding");
    sub("report", "Every table in one document");

    if (const char* cfg = std::getenv("BIBLIOLENS_CONFIG"); cfg && *cfg && !fs::exists(cfg)) {
        err << "error: BIBLIOLENS_CONFIG points to a missing file: " << cfg << '\n';
        return kExitUsage;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "validate") return cmd_validate(s, out, err);
        Document doc;
        if (command == "summary") doc = cmd_summary(s, err);
        else if (command == "lotka") doc = cmd_lotka(s, err);
        else if (command == "collab") doc = cmd_collab(s, err);
        else if (command == "refs") doc = cmd_refs(s, err);
        else if (command == "bradford") doc = cmd_bradford(s, err);
        else if (command == "halflife") doc = cmd_halflife(s, err);
        else if (command == "impact") doc = cmd_impact(s, err);
        else if (command == "content") doc = cmd_content(s, err);
        else doc = cmd_report(s, err);
        emit(doc, s, out);
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const AnalysisError& e) {
        err << "analysis error: " << e.what() << '\n';
        return kExitAnalysis;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace bibliolens::cli
