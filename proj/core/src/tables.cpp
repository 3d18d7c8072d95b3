#include <algorithm>
#include <map>
#include <set>

#include "bibliolens/collaboration.hpp"
#include "bibliolens/content.hpp"
#include "bibliolens/report.hpp"

namespace bibliolens {

namespace {

using C = Cell;

std::int64_t s64(std::uint64_t v) { return static_cast<std::int64_t>(v); }

Ratio share(std::uint64_t part, std::uint64_t whole) { return Ratio{s64(part), whole ? s64(whole) : 1}; }

Table make(std::string id, std::string title, std::vector<std::string> columns) {
    Table t;
    t.id = std::move(id);
    t.title = std::move(title);
    t.columns = std::move(columns);
    return t;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

Table year_series_table(const YearSeries& s, const std::string& id, const std::string& title, const std::string& what) {
    Table t = make(id, title, {"Year", what, "Percentage (%)", "Cumulative (%)"});
    for (const auto& r : s.rows)
        t.add_row({C::integer(r.year), C::count(r.count), C::percent(r.share), C::percent(r.cumulative)});
    t.add_row({C::text("Total"), C::count(s.total), C::percent(share(s.total, s.total)), C::text("")});
    t.add_row({C::text("Mean per year"), C::rounded(s.mean_per_year, 2), C::text(""), C::text("")});
    return t;
}

std::string impact_display(Ratio r, bool truncate_display) {
    return truncate_display ? truncate(r, 3) : round_half_up(r, 3);
}

}  // namespace

std::string resolve_home(const Corpus& corpus, const std::string& requested) {
    if (!requested.empty()) return requested;
    std::map<std::string, std::uint64_t> counts;
    for (const auto& a : corpus.articles())
        for (const auto& au : a.authors)
            if (au.country != kUnknownCountry) ++counts[au.country];
    if (counts.empty()) return std::string(kUnknownCountry);
    return std::max_element(counts.begin(), counts.end(), [](const auto& x, const auto& y) { return x.second < y.second; })
        ->first;
}

std::vector<Table> summary_tables(const Corpus& corpus) {
    auto authors = unique_authors(corpus);
    std::uint64_t authorships = 0, references = 0, received = 0;
    for (const auto& [name, n] : authors) authorships += n;
    for (const auto& a : corpus.articles()) {
        references += a.references.size();
        received += a.received.size();
    }
    Table t = make("summary", "Corpus summary", {"Measure", "Value"});
    t.add_row({C::text("Journal"), C::text(corpus.journal())});
    t.add_row({C::text("Years"), C::text(std::to_string(corpus.years().first) + "-" + std::to_string(corpus.years().last))});
    t.add_row({C::text("Articles"), C::count(corpus.size())});
    t.add_row({C::text("Authorships"), C::count(authorships)});
    t.add_row({C::text("Unique authors"), C::count(authors.size())});
    t.add_row({C::text("References"), C::count(references)});
    t.add_row({C::text("Citations received"), C::count(received)});
    return {t};
}

std::vector<Table> productivity_tables(const Corpus& corpus, std::uint64_t core_author_min) {
    std::vector<Table> out;
    out.push_back(year_series_table(articles_per_year(corpus), "articles_per_year", "Articles per year", "Articles"));
    out.push_back(
        year_series_table(authorships_per_year(corpus), "authorships_per_year", "Authorships per year", "Authorships"));

    Table cohorts = make("core_authors", "Most productive authors (at least " + std::to_string(core_author_min) + " articles)",
                         {"Cohort", "Articles", "Author", "Affiliation"});
    for (const auto& c : core_authors(corpus, core_author_min))
        for (const auto& m : c.members)
            cohorts.add_row({C::integer(c.rank_group), C::count(c.paper_count), C::text(m.name), C::text(m.affiliation)});
    out.push_back(std::move(cohorts));
    return out;
}

std::vector<Table> lotka_tables(const LotkaFit& fit, const std::string& id) {
    Table dist = make(id, "Authors with n articles, observed and expected",
                      {"n", "Observed authors", "Observed (%)", "Expected authors", "Expected (%)"});
    for (const auto& r : fit.rows)
        dist.add_row({C::integer(r.n), C::count(r.observed), C::percent(r.observed_share), C::count(r.expected),
                      C::percent(r.expected_share)});
    dist.add_row({C::text("Total"), C::count(fit.total_observed), C::text(""), C::count(fit.total_expected), C::text("")});

    Table params = make(id + "_fit", "Lotka fit", {"Parameter", "Value"});
    const char* method = fit.method == LotkaMethod::two_point       ? "two-point"
                         : fit.method == LotkaMethod::least_squares ? "least-squares (log-log)"
                                                                    : "fixed exponent";
    params.add_row({C::text("Method"), C::text(method)});
    params.add_row({C::text("c"), C::rounded(fit.c, 3)});
    if (fit.method == LotkaMethod::two_point)
        params.add_row({C::text("c (logs truncated to 3 decimals)"), C::rounded(fit.c_truncated_logs, 1)});
    params.add_row({C::text("a1"), C::count(fit.a1)});
    params.add_row({C::text("Max |observed - expected|"), C::count(fit.max_abs_dev)});
    params.add_row({C::text("Chi-square (expected >= 5)"), C::rounded(fit.chi_square, 3)});
    params.add_row({C::text("Chi-square bins"), C::integer(fit.chi_square_bins)});
    return {dist, params};
}

std::vector<Table> collaboration_tables(const Corpus& corpus, const std::string& home) {
    std::vector<Table> out;

    auto co = coauthorship_histogram(corpus);
    {
        std::vector<std::string> cols{"Authors"};
        for (const auto& [year, h] : co.per_year) cols.push_back(std::to_string(year));
        cols.insert(cols.end(), {"Total", "Percentage (%)"});
        Table t = make("coauthorship", "Co-authorship pattern", cols);
        for (const auto& [key, total] : co.total.bins()) {
            std::vector<Cell> row{C::text(key_to_string(key))};
            for (const auto& [year, h] : co.per_year) row.push_back(C::count(h.count(key)));
            row.push_back(C::count(total));
            row.push_back(C::percent(share(total, co.total.total())));
            t.add_row(std::move(row));
        }
        std::vector<Cell> total_row{C::text("Total")};
        for (const auto& [year, h] : co.per_year) total_row.push_back(C::count(h.total()));
        total_row.push_back(C::count(co.total.total()));
        total_row.push_back(C::percent(share(co.total.total(), co.total.total())));
        t.add_row(std::move(total_row));
        out.push_back(std::move(t));
    }

    if (!corpus.empty()) {
        auto dc = degree_of_collaboration(corpus);
        Table t = make("degree_of_collaboration", "Degree of collaboration C = Nm / (Nm + Ns)",
                       {"Year", "Ns", "Nm", "C", "C (%)"});
        for (const auto& [year, c] : dc.per_year)
            t.add_row({C::integer(year), C::count(c.ns), C::count(c.nm), C::rounded(c.c(), 4), C::percent(c.c())});
        t.add_row({C::text("Total"), C::count(dc.total.ns), C::count(dc.total.nm), C::rounded(dc.total.c(), 4),
                   C::percent(dc.total.c())});
        out.push_back(std::move(t));
    }

    {
        auto cc = collaboration_classes(corpus);
        Table t = make("collaboration_classes", "Single and multi-author collaboration pattern",
                       {"Year", "Single", "Same affiliation", "Different affiliations, same country",
                        "Different countries", "Total"});
        auto row = [&](Cell label, const CollabClassCounts& c) {
            t.add_row({std::move(label), C::count(c.single), C::count(c.same_affiliation),
                       C::count(c.diff_affiliation_same_country), C::count(c.diff_countries), C::count(c.total())});
        };
        for (const auto& [year, c] : cc.per_year) row(C::integer(year), c);
        row(C::text("Total"), cc.total);
        out.push_back(std::move(t));
    }

    auto split = country_split(corpus, home);
    {
        Table t = make("authorship_origin", "Home and foreign authorships (home: " + home + ")",
                       {"Year", "Home", "Home (%)", "Foreign", "Foreign (%)", "Unknown", "Total"});
        auto row = [&](Cell label, const HomeForeign& h) {
            auto total = h.home + h.foreign + h.unknown;
            t.add_row({std::move(label), C::count(h.home), C::percent(share(h.home, total)), C::count(h.foreign),
                       C::percent(share(h.foreign, total)), C::count(h.unknown), C::count(total)});
        };
        for (const auto& [year, h] : split.authorships_per_year) row(C::integer(year), h);
        row(C::text("Total"), split.authorships);
        out.push_back(std::move(t));
    }
    {
        Table t = make("article_origin", "Articles by author origin",
                       {"Year", "Purely home", "Home and foreign", "Purely foreign", "Unknown country", "Without authors"});
        auto row = [&](Cell label, const ArticleOrigin& o) {
            t.add_row({std::move(label), C::count(o.purely_home), C::count(o.mixed), C::count(o.purely_foreign),
                       C::count(o.unknown_origin), C::count(o.without_authors)});
        };
        for (const auto& [year, o] : split.articles_per_year) row(C::integer(year), o);
        row(C::text("Total"), split.articles);
        out.push_back(std::move(t));
    }
    {
        Table t = make("foreign_authors", "Foreign authors by country", {"Country", "Authors", "Percentage (%)"});
        for (const auto& [key, n] : split.foreign_authors_by_country.ranked())
            t.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, split.foreign_authors_by_country.total()))});
        out.push_back(std::move(t));
    }
    {
        auto matrix = country_pair_matrix(corpus);
        std::vector<std::pair<CountrySet, std::uint64_t>> rows(matrix.begin(), matrix.end());
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
        Table t = make("country_collaborations", "Collaborations between countries", {"Countries", "Articles"});
        for (const auto& [set, n] : rows) t.add_row({C::text(join(set, " + ")), C::count(n)});
        out.push_back(std::move(t));
    }
    {
        auto d = affiliation_type_distribution(corpus, home);
        Table t = make("affiliation_types", "Affiliation types",
                       {"Type", "Affiliations (home)", "Affiliations (foreign)", "Affiliations", "Affiliations (%)",
                        "Authors (home)", "Authors (foreign)", "Authors", "Authors (%)"});
        for (const auto& [type, c] : d.by_type)
            t.add_row({C::text(std::string(to_string(type))), C::count(c.affiliations_home), C::count(c.affiliations_foreign),
                       C::count(c.affiliations()), C::percent(share(c.affiliations(), d.unique_affiliations)),
                       C::count(c.authors_home), C::count(c.authors_foreign), C::count(c.authors()),
                       C::percent(share(c.authors(), d.unique_authors))});
        t.add_row({C::text("Total"), C::text(""), C::text(""), C::count(d.unique_affiliations), C::text(""), C::text(""),
                   C::text(""), C::count(d.unique_authors), C::text("")});
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Table> age_tables(const AgeProfile& p) {
    Table t = make("reference_age", "Age of cited references",
                   {"Age (years)", "References", "Cumulative", "Cumulative (%)"});
    std::uint64_t cumulative = 0;
    for (const auto& [key, n] : p.ages.bins()) {
        cumulative += n;
        t.add_row({C::text(key_to_string(key)), C::count(n), C::count(cumulative), C::percent(share(cumulative, p.total))});
    }
    t.add_row({C::text("undated"), C::count(p.undated), C::text(""), C::text("")});
    t.add_row({C::text("Total"), C::count(p.total), C::text(""), C::text("")});

    Table h = make("half_life", "Citation half-life", {"Measure", "Value"});
    h.add_row({C::text("Dated references"), C::count(p.dated)});
    h.add_row({C::text("Undated references"), C::count(p.undated)});
    h.add_row({C::text("Half-life (years)"), p.half_life_integer ? C::integer(*p.half_life_integer) : C::text("n/a")});
    h.add_row({C::text("Half-life, interpolated (years)"),
               p.half_life_interpolated ? C::rounded(*p.half_life_interpolated, 2) : C::text("n/a")});
    return {t, h};
}

std::vector<Table> bradford_tables(const BradfordPartition& p) {
    Table t = make("bradford_zones", "Bradford zones",
                   {"Zone", "Journals", "Citations", "Citations (%)", "Ratio to zone 1"});
    for (std::size_t i = 0; i < p.zones.size(); ++i) {
        const auto& z = p.zones[i];
        t.add_row({C::integer(static_cast<std::int64_t>(i + 1)), C::count(z.journal_count), C::count(z.citation_count),
                   C::percent(share(z.citation_count, p.total_citations)), C::rounded(p.ratios[i], 2)});
    }
    std::uint64_t journals = 0;
    for (const auto& z : p.zones) journals += z.journal_count;
    t.add_row({C::text("Total"), C::count(journals), C::count(p.total_citations), C::text(""), C::text("")});
    t.notes.push_back("Multiplier b = " + round_half_up(p.b_estimate, 2) +
                      (p.regular ? "" : "; some zone boundaries were forced by the zone count"));
    return {t};
}

std::vector<Table> journal_tables(const Histogram& journals, std::size_t top) {
    Table t = make("cited_journals", "Most cited journals", {"Rank", "Journal", "Citations", "Percentage (%)"});
    std::int64_t rank = 0;
    for (const auto& [key, n] : journals.ranked()) {
        if (static_cast<std::size_t>(rank) >= top) break;
        t.add_row({C::integer(++rank), C::text(key_to_string(key)), C::count(n), C::percent(share(n, journals.total()))});
    }
    t.notes.push_back(std::to_string(journals.size()) + " distinct journals, " + std::to_string(journals.total()) +
                      " citations");
    return {t};
}

std::vector<Table> reference_tables(const Corpus& corpus, const ReportOptions& options) {
    std::vector<Table> out;
    auto refs = references_per_year(corpus);
    {
        Table t = make("references_per_year", "References per year",
                       {"Year", "Articles", "References", "Mean per article"});
        for (const auto& [key, n] : refs.per_year.bins()) {
            auto year = static_cast<int>(std::get<std::int64_t>(key));
            auto articles = refs.articles_per_year.at(year);
            t.add_row({C::integer(year), C::count(articles), C::count(n), C::rounded(share(n, articles), 2)});
        }
        t.add_row({C::text("Total"), C::count(refs.articles), C::count(refs.total), C::rounded(refs.mean_per_article, 2)});
        out.push_back(std::move(t));
    }
    {
        Table t = make("references_per_article", "Range of references per article",
                       {"References", "Articles", "Percentage (%)"});
        for (const auto& b : refs_per_article_ranges(corpus))
            t.add_row({C::text(b.label()), C::count(b.count), C::percent(b.share)});
        out.push_back(std::move(t));
    }
    {
        auto f = format_distribution(corpus);
        std::vector<std::string> cols{"Format"};
        for (const auto& [year, m] : f.per_year) cols.push_back(std::to_string(year));
        cols.insert(cols.end(), {"Total", "Percentage (%)"});
        Table t = make("reference_formats", "Bibliographic format of references", cols);
        for (const auto& [type, n] : f.total) {
            std::vector<Cell> row{C::text(std::string(to_string(type)))};
            for (const auto& [year, m] : f.per_year) {
                auto it = m.find(type);
                row.push_back(C::count(it == m.end() ? 0 : it->second));
            }
            row.push_back(C::count(n));
            row.push_back(C::percent(share(n, f.references)));
            t.add_row(std::move(row));
        }
        out.push_back(std::move(t));
    }
    for (auto& t : age_tables(age_profile(corpus, options.age_counting))) out.push_back(std::move(t));
    {
        auto m = publication_year_matrix(corpus);
        std::vector<std::string> cols{"Published"};
        for (const auto& [key, n] : m.column_totals.bins()) cols.push_back(key_to_string(key));
        cols.push_back("Total");
        Table t = make("publication_year_matrix", "Publication year of references against citing year", cols);
        for (auto it = m.cells.rbegin(); it != m.cells.rend(); ++it) {
            std::vector<Cell> row{C::text(key_to_string(it->first))};
            for (const auto& [key, n] : m.column_totals.bins()) {
                auto cell = it->second.find(static_cast<int>(std::get<std::int64_t>(key)));
                row.push_back(C::count(cell == it->second.end() ? 0 : cell->second));
            }
            row.push_back(C::count(m.row_totals.count(it->first)));
            t.add_row(std::move(row));
        }
        std::vector<Cell> total{C::text("Total")};
        for (const auto& [key, n] : m.column_totals.bins()) total.push_back(C::count(n));
        total.push_back(C::count(m.column_totals.total()));
        t.add_row(std::move(total));
        out.push_back(std::move(t));
    }
    auto journals = journal_frequency(corpus);
    for (auto& t : journal_tables(journals, options.top_journals)) out.push_back(std::move(t));
    if (journals.size() >= static_cast<std::size_t>(options.zones))
        for (auto& t : bradford_tables(bradford_partition(journals, options.zones))) out.push_back(std::move(t));
    {
        const auto& name = options.journal.empty() ? corpus.journal() : options.journal;
        auto s = self_citation(corpus, name);
        Table t = make("self_citation", "Journal self-citation (" + name + ")",
                       {"Year", "Articles", "Citing articles", "Self-citations", "References", "Rate (%)"});
        auto row = [&](Cell label, const SelfCitationRow& r) {
            t.add_row({std::move(label), C::count(r.articles), C::count(r.citing_articles), C::count(r.self_citations),
                       C::count(r.references), C::percent(r.references ? r.rate() : Ratio{0, 1})});
        };
        for (const auto& [year, r] : s.per_year) row(C::integer(year), r);
        row(C::text("Total"), s.total);
        out.push_back(std::move(t));
    }
    {
        auto l = language_distribution(corpus);
        Table t = make("reference_languages", "Language of references",
                       {"Language", "References", "Percentage (%)", "Journal titles"});
        for (const auto& [key, n] : l.references.ranked()) {
            auto lang = key_to_string(key);
            auto it = l.journal_titles.find(lang);
            t.add_row({C::text(lang), C::count(n), C::percent(share(n, l.references.total())),
                       C::count(it == l.journal_titles.end() ? 0 : it->second.size())});
        }
        t.notes.push_back("Other than " + std::string(kDefaultLanguage) + ": " + std::to_string(l.other_language_references) +
                          " references in " + std::to_string(l.other_language_titles) + " journal titles");
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Table> impact_factor_tables(const std::vector<ImpactFactorInput>& rows, bool truncate_display,
                                        const std::string& id) {
    Table t = make(id, "Impact factor IF = A / B",
                   {"Target year", "Publication years", "A (citations)", "B (articles)", "IF"});
    for (const auto& r : rows) {
        auto v = r.value();
        t.add_row({C::integer(r.target_year), C::text(std::to_string(r.first_year) + "-" + std::to_string(r.last_year)),
                   C::count(r.citations), C::count(r.publications), C::real(v.value(), impact_display(v, truncate_display))});
    }
    t.notes.push_back(truncate_display ? "IF display truncated to 3 decimals" : "IF display rounded half-up to 3 decimals");
    return {t};
}

std::vector<Table> impact_tables(const Corpus& corpus, const ReportOptions& options) {
    std::vector<Table> out;
    auto rs = received_summary(corpus);
    {
        std::set<int> citing_years;
        for (const auto& [y, c] : rs.total.by_citing_year) citing_years.insert(y);
        std::vector<std::string> cols{"Published", "Articles", "Cited articles"};
        for (int y : citing_years) cols.push_back(std::to_string(y));
        cols.insert(cols.end(), {"Citations", "Coverage (%)"});
        Table t = make("citations_received", "Citations received by publication year", cols);
        auto row = [&](Cell label, const ReceivedRow& r) {
            std::vector<Cell> cells{std::move(label), C::count(r.articles), C::count(r.cited_articles)};
            for (int y : citing_years) {
                auto it = r.by_citing_year.find(y);
                cells.push_back(C::count(it == r.by_citing_year.end() ? 0 : it->second));
            }
            cells.push_back(C::count(r.citations));
            cells.push_back(C::percent(r.coverage()));
            t.add_row(std::move(cells));
        };
        for (const auto& [year, r] : rs.by_publication_year) row(C::integer(year), r);
        row(C::text("Total"), rs.total);
        out.push_back(std::move(t));
    }
    {
        auto h = citing_doc_types(corpus);
        Table t = make("citing_documents", "Types of citing documents", {"Document type", "Citations", "Percentage (%)"});
        for (const auto& [key, n] : h.ranked())
            t.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, h.total()))});
        t.add_row({C::text("Total"), C::count(h.total()), C::text("")});
        out.push_back(std::move(t));
    }
    {
        auto cc = citing_countries(corpus, options.regions);
        Table t = make("citing_countries", "Countries of citing authors", {"Country", "Citations", "Percentage (%)"});
        for (const auto& [key, n] : cc.countries.ranked())
            t.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, cc.countries.total()))});
        t.notes.push_back(std::to_string(cc.without_country) + " citations carry no country");
        out.push_back(std::move(t));
        if (!options.regions.empty()) {
            Table r = make("citing_regions", "Regions of citing authors", {"Region", "Citations", "Percentage (%)"});
            for (const auto& [key, n] : cc.regions.ranked())
                r.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, cc.regions.total()))});
            out.push_back(std::move(r));
        }
        std::vector<std::pair<std::vector<std::string>, std::uint64_t>> collab(cc.collaborations.begin(),
                                                                               cc.collaborations.end());
        std::stable_sort(collab.begin(), collab.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
        Table k = make("citing_collaborations", "Multi-country citing collaborations", {"Countries", "Citations"});
        for (const auto& [set, n] : collab) k.add_row({C::text(join(set, " + ")), C::count(n)});
        out.push_back(std::move(k));
    }
    if (corpus.years().last - corpus.years().first + 1 >= options.impact.window) {
        std::vector<ImpactFactorInput> rows;
        for (const auto& [year, in] : impact_factor_series(corpus, options.impact))
            if (in.publications) rows.push_back(in);
        auto agg = impact_factor_aggregate(corpus, corpus.years().first, corpus.years().last, corpus.years().last + 1,
                                           options.impact.originals_only);
        for (auto& t : impact_factor_tables(rows, options.truncate_impact, "impact_factor")) out.push_back(std::move(t));
        if (agg.publications)
            for (auto& t : impact_factor_tables({agg}, options.truncate_impact, "impact_factor_aggregate"))
                out.push_back(std::move(t));
    }
    return out;
}

std::vector<Table> content_tables(const Corpus& corpus, const ReportOptions& options) {
    std::vector<Table> out;
    auto kw = keyword_frequency(corpus, options.places);
    {
        Table t = make("keywords", "Most frequent keywords", {"Rank", "Keyword", "Articles"});
        std::int64_t rank = 0;
        for (const auto& [key, n] : kw.general.ranked()) {
            if (static_cast<std::size_t>(rank) >= options.top_keywords) break;
            t.add_row({C::integer(++rank), C::text(key_to_string(key)), C::count(n)});
        }
        t.notes.push_back(std::to_string(kw.general.size() + kw.places.size()) + " distinct keywords, " +
                          std::to_string(kw.general.total() + kw.places.total()) + " occurrences");
        out.push_back(std::move(t));
        Table p = make("place_keywords", "Geographic keywords", {"Place", "Articles"});
        for (const auto& [key, n] : kw.places.ranked()) p.add_row({C::text(key_to_string(key)), C::count(n)});
        out.push_back(std::move(p));
    }
    {
        auto d = keywords_per_article(corpus);
        Table t = make("keywords_per_article", "Keywords per article", {"Keywords", "Articles", "Percentage (%)"});
        for (const auto& [key, n] : d.bins.bins())
            t.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, d.bins.total()))});
        t.add_row({C::text("Mean"), C::rounded(d.mean, 4), C::text("")});
        out.push_back(std::move(t));
    }
    {
        auto s = title_word_stats(corpus);
        Table t = make("title_words", "Words per title", {"Words", "Articles", "Percentage (%)"});
        for (const auto& [key, n] : s.bins.bins())
            t.add_row({C::text(key_to_string(key)), C::count(n), C::percent(share(n, s.bins.total()))});
        out.push_back(std::move(t));
        Table st = make("title_word_stats", "Title length statistics", {"Measure", "Value"});
        st.add_row({C::text("Minimum"), C::integer(s.min)});
        st.add_row({C::text("Maximum"), C::integer(s.max)});
        st.add_row({C::text("Mean"), C::rounded(s.mean, 3)});
        st.add_row({C::text("Mode"), C::integer(s.mode)});
        st.add_row({C::text("Articles at mode"), C::count(s.mode_count)});
        out.push_back(std::move(st));
    }
    {
        auto f = funding_summary(corpus);
        std::vector<std::string> cols{"Funder"};
        for (const auto& [year, y] : f.per_year) cols.push_back(std::to_string(year));
        cols.push_back("Total");
        Table t = make("funders", "Research funders", cols);
        for (const auto& [key, n] : f.funder_totals.ranked()) {
            auto name = key_to_string(key);
            const auto& years = f.per_funder.at(name);
            std::vector<Cell> row{C::text(name)};
            for (const auto& [year, y] : f.per_year) {
                auto it = years.find(year);
                row.push_back(C::count(it == years.end() ? 0 : it->second));
            }
            row.push_back(C::count(n));
            t.add_row(std::move(row));
        }
        out.push_back(std::move(t));
        Table y = make("funding_per_year", "Funded original articles per year",
                       {"Year", "Original articles", "Funded", "Funded (%)", "Funder mentions"});
        auto row = [&](Cell label, const FundingYear& r) {
            y.add_row({std::move(label), C::count(r.originals), C::count(r.funded_originals), C::percent(r.funded_ratio()),
                       C::count(r.funder_mentions)});
        };
        for (const auto& [year, r] : f.per_year) row(C::integer(year), r);
        row(C::text("Total"), f.total);
        out.push_back(std::move(y));
    }
    return out;
}

Document full_report(const Corpus& corpus, const ReportOptions& options) {
    Document doc;
    doc.title = "Bibliometric report: " + corpus.journal() + " " + std::to_string(corpus.years().first) + "-" +
                std::to_string(corpus.years().last);
    auto append = [&](std::vector<Table> tables) {
        for (auto& t : tables) doc.tables.push_back(std::move(t));
    };
    append(summary_tables(corpus));
    append(productivity_tables(corpus, options.core_author_min));
    auto productivity = author_productivity(corpus);
    if (productivity.count(BinKey{std::int64_t{1}}) && productivity.count(BinKey{std::int64_t{2}})) {
        auto two_point = lotka_fit_two_point(productivity);
        append(lotka_tables(two_point, "lotka_two_point"));
        append(lotka_tables(lotka_fit_c2(productivity), "lotka_c2"));
    }
    if (!corpus.empty()) append(collaboration_tables(corpus, resolve_home(corpus, options.home)));
    append(reference_tables(corpus, options));
    append(impact_tables(corpus, options));
    append(content_tables(corpus, options));
    return doc;
}

}  // namespace bibliolens
