#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "bibliolens/corpus.hpp"
#include "bibliolens/decimal.hpp"
#include "bibliolens/histogram.hpp"

namespace bibliolens {

struct ReceivedRow {
    std::uint64_t articles = 0;
    std::uint64_t cited_articles = 0;
    std::uint64_t citations = 0;
    std::map<int, std::uint64_t> by_citing_year;

    Ratio coverage() const {
        return Ratio{static_cast<std::int64_t>(cited_articles), articles ? static_cast<std::int64_t>(articles) : 1};
    }
};

struct ReceivedSummary {
    ReceivedRow total;
    std::map<int, ReceivedRow> by_publication_year;
};

ReceivedSummary received_summary(const Corpus& corpus);

Histogram citing_doc_types(const Corpus& corpus);

// Country -> region label.
using RegionMap = std::map<std::string, std::string>;

// CSV with header "country,region".
RegionMap load_region_map(const std::filesystem::path& path);

struct CitingCountries {
    Histogram countries;  // citations attributed to exactly one country
    Histogram regions;    // roll-up of `countries`; unmapped countries fall under "Other"
    std::map<std::vector<std::string>, std::uint64_t> collaborations;  // sorted country set -> citations
    std::uint64_t without_country = 0;
};

CitingCountries citing_countries(const Corpus& corpus, const RegionMap& regions = {});

// A / B. Throws ZeroDenominator when B is 0.
Ratio impact_factor(std::uint64_t citations, std::uint64_t publications);

struct ImpactFactorInput {
    int target_year = 0;
    int first_year = 0;  // publication window [first_year, last_year]
    int last_year = 0;
    std::uint64_t citations = 0;     // A
    std::uint64_t publications = 0;  // B

    Ratio value() const { return impact_factor(citations, publications); }
};

struct ImpactOptions {
    int window = 2;
    // Count only original articles in B (A still counts every citation).
    bool originals_only = false;
};

// A = citations made in `target_year` to articles from the `window` preceding
// years; B = articles in those years. Throws InsufficientYears when the window
// starts before the corpus.
ImpactFactorInput impact_factor_for(const Corpus& corpus, int target_year, const ImpactOptions& options = {});

// Every target year whose window fits inside the corpus, from
// year_start + window through year_end + 1.
std::map<int, ImpactFactorInput> impact_factor_series(const Corpus& corpus, const ImpactOptions& options = {});

// Citations made in `citing_year` to articles published in [first, last].
ImpactFactorInput impact_factor_aggregate(const Corpus& corpus, int first, int last, int citing_year,
                                          bool originals_only = false);

}  // namespace bibliolens
