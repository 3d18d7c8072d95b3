#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bibliolens/corpus.hpp"
#include "bibliolens/curve.hpp"
#include "bibliolens/decimal.hpp"
#include "bibliolens/histogram.hpp"

namespace bibliolens {

struct ReferenceCounts {
    Histogram per_year;                        // year -> references
    std::map<int, std::uint64_t> articles_per_year;
    std::uint64_t total = 0;
    std::uint64_t articles = 0;
    Ratio mean_per_article;
};

ReferenceCounts references_per_year(const Corpus& corpus);

struct RangeBucket {
    std::int64_t lo = 0;
    std::optional<std::int64_t> hi;  // empty for the open overflow bucket
    std::uint64_t count = 0;
    Ratio share;

    std::string label() const;
};

// {0, 10, 20, ..., 90}: buckets 0-10, 11-20, ..., 81-90.
std::vector<std::int64_t> default_reference_edges();

// Edges e0 < e1 < ... < em give buckets [e0, e1], [e1+1, e2], ...; articles
// above em land in an overflow bucket that only appears when non-empty.
std::vector<RangeBucket> refs_per_article_ranges(const Corpus& corpus,
                                                 const std::vector<std::int64_t>& edges = default_reference_edges());

struct FormatDistribution {
    std::map<SourceType, std::uint64_t> total;
    std::map<int, std::map<SourceType, std::uint64_t>> per_year;
    std::uint64_t references = 0;
};

FormatDistribution format_distribution(const Corpus& corpus);

enum class AgeCounting {
    inclusive,  // citing - published + 1; same-year references are 1 year old
    elapsed,    // citing - published, clamped at 0, with 0 merged into 1
};

struct AgeProfile {
    Histogram ages;  // age -> references; range rows keyed by their lower bound
    std::uint64_t undated = 0;
    std::uint64_t dated = 0;
    std::uint64_t total = 0;
    std::optional<std::int64_t> half_life_integer;   // empty when nothing is dated
    std::optional<double> half_life_interpolated;
};

AgeProfile age_profile(const Corpus& corpus, AgeCounting counting = AgeCounting::inclusive);

// Integer keys are ages; the text key "undated" carries undated references.
AgeProfile age_profile(const Histogram& ages);

// References aged <= `age` over all references, undated included.
Ratio cumulative_share(const AgeProfile& profile, std::int64_t age);

inline constexpr std::string_view kUndatedKey = "undated";

struct PublicationYearMatrix {
    // Row key: publication year, or "undated". Column: citing year.
    std::map<BinKey, std::map<int, std::uint64_t>> cells;
    Histogram row_totals;
    Histogram column_totals;
};

PublicationYearMatrix publication_year_matrix(const Corpus& corpus);

struct JournalFrequencyOptions {
    // References to the corpus's own journal are left out unless set.
    bool include_own_journal = false;
};

// Counts journal references per normalized title. Each bin is keyed by the
// most frequent raw spelling of that title (ties: lexicographically first).
Histogram journal_frequency(const Corpus& corpus, const JournalFrequencyOptions& options = {});

struct BradfordZone {
    std::uint64_t journal_count = 0;
    std::uint64_t citation_count = 0;
    std::vector<std::string> titles;
};

struct BradfordPartition {
    std::vector<BradfordZone> zones;
    std::vector<double> ratios;  // journal counts relative to zone 1
    double b_estimate = 0.0;     // (n_k / n_1)^(1 / (k - 1))
    std::uint64_t total_citations = 0;
    // False when some zone had to close early (to leave a journal for each
    // later zone) or late (one journal crossed several thresholds).
    bool regular = true;
};

// Walks `freqs` in ranked order; zone m closes at the first journal that
// brings the running total to at least m*T/k. That journal stays in zone m.
BradfordPartition bradford_partition(const Histogram& freqs, int k = 3);

// (ln cumulative rank, cumulative citations) over the ranked list.
std::vector<CurvePoint> bradford_curve(const Histogram& freqs);

// (age, cumulative dated references).
std::vector<CurvePoint> age_curve(const AgeProfile& profile);

struct SelfCitationRow {
    std::uint64_t articles = 0;
    std::uint64_t citing_articles = 0;  // articles with at least one self-citation
    std::uint64_t self_citations = 0;
    std::uint64_t references = 0;

    Ratio rate() const {
        return Ratio{static_cast<std::int64_t>(self_citations), static_cast<std::int64_t>(references)};
    }
};

struct SelfCitation {
    SelfCitationRow total;
    std::map<int, SelfCitationRow> per_year;
};

SelfCitation self_citation(const Corpus& corpus, const std::string& journal_name);

struct LanguageDistribution {
    Histogram references;  // language -> references
    std::map<std::string, std::set<std::string>> journal_titles;  // language -> normalized titles
    std::uint64_t other_language_references = 0;  // language != English
    std::uint64_t other_language_titles = 0;
};

LanguageDistribution language_distribution(const Corpus& corpus);

}  // namespace bibliolens
