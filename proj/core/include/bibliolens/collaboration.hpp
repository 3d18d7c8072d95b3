#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bibliolens/corpus.hpp"
#include "bibliolens/decimal.hpp"
#include "bibliolens/histogram.hpp"

namespace bibliolens {

struct CoauthorshipTable {
    Histogram total;                   // author count -> articles
    std::map<int, Histogram> per_year; // year -> (author count -> articles)
};

CoauthorshipTable coauthorship_histogram(const Corpus& corpus);

struct CollaborationCounts {
    std::uint64_t ns = 0;  // single-authored
    std::uint64_t nm = 0;  // multi-authored
    Ratio c() const { return Ratio{static_cast<std::int64_t>(nm), static_cast<std::int64_t>(nm + ns)}; }
};

struct CollaborationSummary {
    CollaborationCounts total;
    std::map<int, CollaborationCounts> per_year;
};

// Articles without authors are left out of both Ns and Nm.
CollaborationSummary degree_of_collaboration(const Corpus& corpus);

enum class CollabClass { single, same_affiliation, diff_affiliation_same_country, diff_countries };

std::string_view to_string(CollabClass c);

CollabClass classify_collaboration(const Article& article);

struct CollabClassCounts {
    std::uint64_t single = 0;
    std::uint64_t same_affiliation = 0;
    std::uint64_t diff_affiliation_same_country = 0;
    std::uint64_t diff_countries = 0;

    std::uint64_t total() const { return single + same_affiliation + diff_affiliation_same_country + diff_countries; }
    void add(CollabClass c);
};

struct CollabClassTable {
    CollabClassCounts total;
    std::map<int, CollabClassCounts> per_year;
};

CollabClassTable collaboration_classes(const Corpus& corpus);

struct HomeForeign {
    std::uint64_t home = 0;
    std::uint64_t foreign = 0;
    std::uint64_t unknown = 0;  // authorships whose country is "unknown"
};

struct ArticleOrigin {
    std::uint64_t purely_home = 0;
    std::uint64_t mixed = 0;
    std::uint64_t purely_foreign = 0;
    std::uint64_t without_authors = 0;
    std::uint64_t unknown_origin = 0;  // every author's country is "unknown"
};

struct CountrySplit {
    std::string home;
    HomeForeign authorships;
    std::map<int, HomeForeign> authorships_per_year;
    ArticleOrigin articles;
    std::map<int, ArticleOrigin> articles_per_year;
    Histogram foreign_authors_by_country;  // unique foreign author names per country
};

CountrySplit country_split(const Corpus& corpus, const std::string& home);

// Sorted set of known countries on an article -> number of articles, for
// articles with at least two distinct known countries.
using CountrySet = std::vector<std::string>;
std::map<CountrySet, std::uint64_t> country_pair_matrix(const Corpus& corpus);

struct AffiliationTypeCounts {
    std::uint64_t affiliations_home = 0;
    std::uint64_t affiliations_foreign = 0;
    std::uint64_t authors_home = 0;
    std::uint64_t authors_foreign = 0;

    std::uint64_t affiliations() const { return affiliations_home + affiliations_foreign; }
    std::uint64_t authors() const { return authors_home + authors_foreign; }
};

struct AffiliationTypeDistribution {
    std::map<AffiliationType, AffiliationTypeCounts> by_type;
    std::uint64_t unique_affiliations = 0;
    std::uint64_t unique_authors = 0;
};

// Unique affiliations are non-empty normalized affiliation strings; each takes
// the type and side of its first occurrence. Each unique author is counted
// once, under their most frequent (affiliation, type, country) record.
// Any country other than `home`, including "unknown", counts as foreign here.
AffiliationTypeDistribution affiliation_type_distribution(const Corpus& corpus, const std::string& home);

}  // namespace bibliolens
