#include "bibliolens/impact.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "bibliolens/errors.hpp"
#include "csv.hpp"

namespace bibliolens {

ReceivedSummary received_summary(const Corpus& corpus) {
    ReceivedSummary s;
    for (const auto& a : corpus.articles()) {
        for (auto* row : {&s.total, &s.by_publication_year[a.year]}) {
            ++row->articles;
            row->citations += a.received.size();
            if (!a.received.empty()) ++row->cited_articles;
            for (const auto& r : a.received) ++row->by_citing_year[r.citing_year];
        }
    }
    return s;
}

Histogram citing_doc_types(const Corpus& corpus) {
    Histogram h("doc_type");
    for (const auto& a : corpus.articles())
        for (const auto& r : a.received) h.add(BinKey{std::string(to_string(r.doc_type))});
    return h;
}

RegionMap load_region_map(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    csv::Reader reader(in);
    RegionMap map;
    bool header = true;
    while (auto rec = reader.next()) {
        auto at = path.string() + ":" + std::to_string(rec->line);
        if (rec->fields.size() == 1 && rec->fields[0].empty()) continue;
        if (rec->fields.size() != 2) throw SchemaError(at, "expected 2 fields");
        if (header) {
            if (rec->fields[0] != "country" || rec->fields[1] != "region")
                throw SchemaError(at, "expected header 'country,region'");
            header = false;
            continue;
        }
        if (rec->fields[0].empty() || rec->fields[1].empty()) throw SchemaError(at, "empty country or region");
        map[rec->fields[0]] = rec->fields[1];
    }
    return map;
}

CitingCountries citing_countries(const Corpus& corpus, const RegionMap& regions) {
    CitingCountries out;
    out.countries.set_label("country");
    out.regions.set_label("region");
    for (const auto& a : corpus.articles()) {
        for (const auto& r : a.received) {
            std::set<std::string> set(r.citing_countries.begin(), r.citing_countries.end());
            if (set.empty()) {
                ++out.without_country;
            } else if (set.size() == 1) {
                out.countries.add(BinKey{*set.begin()});
            } else {
                ++out.collaborations[std::vector<std::string>(set.begin(), set.end())];
            }
        }
    }
    if (!regions.empty()) {
        for (const auto& [key, count] : out.countries.bins()) {
            auto it = regions.find(std::get<std::string>(key));
            out.regions.add(BinKey{it == regions.end() ? std::string("Other") : it->second}, count);
        }
    }
    return out;
}

Ratio impact_factor(std::uint64_t citations, std::uint64_t publications) {
    if (publications == 0) throw ZeroDenominator("impact factor needs at least one publication in the window");
    return Ratio{static_cast<std::int64_t>(citations), static_cast<std::int64_t>(publications)};
}

ImpactFactorInput impact_factor_aggregate(const Corpus& corpus, int first, int last, int citing_year,
                                          bool originals_only) {
    if (first > last) throw InsufficientYears("empty publication window");
    ImpactFactorInput in{citing_year, first, last, 0, 0};
    for (const auto& a : corpus.articles()) {
        if (a.year < first || a.year > last) continue;
        if (!originals_only || a.type == ArticleType::original) ++in.publications;
        in.citations += static_cast<std::uint64_t>(std::count_if(
            a.received.begin(), a.received.end(), [&](const ReceivedCitation& r) { return r.citing_year == citing_year; }));
    }
    return in;
}

ImpactFactorInput impact_factor_for(const Corpus& corpus, int target_year, const ImpactOptions& options) {
    if (options.window < 1) throw InsufficientYears("window must be at least 1 year");
    int first = target_year - options.window;
    if (first < corpus.years().first)
        throw InsufficientYears("window " + std::to_string(first) + ".." + std::to_string(target_year - 1) +
                                " starts before the corpus (" + std::to_string(corpus.years().first) + ")");
    if (target_year - 1 > corpus.years().last)
        throw InsufficientYears("window ends after the corpus (" + std::to_string(corpus.years().last) + ")");
    return impact_factor_aggregate(corpus, first, target_year - 1, target_year, options.originals_only);
}

std::map<int, ImpactFactorInput> impact_factor_series(const Corpus& corpus, const ImpactOptions& options) {
    if (options.window < 1) throw InsufficientYears("window must be at least 1 year");
    std::map<int, ImpactFactorInput> out;
    for (int y = corpus.years().first + options.window; y <= corpus.years().last + 1; ++y)
        out.emplace(y, impact_factor_for(corpus, y, options));
    if (out.empty()) throw InsufficientYears("corpus spans fewer years than the window");
    return out;
}

}  // namespace bibliolens
