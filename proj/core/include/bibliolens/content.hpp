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

struct KeywordFrequency {
    Histogram general;  // non-place keywords
    Histogram places;   // keywords matching the place list
};

// Keywords are grouped by normalize_keyword; each bin is labelled with the
// most frequent surface form. Place matching is case-insensitive.
KeywordFrequency keyword_frequency(const Corpus& corpus, const std::vector<std::string>& places = {});

// One place name per line; blank lines and lines starting with '#' are skipped.
std::vector<std::string> load_place_list(const std::filesystem::path& path);

struct CountDistribution {
    Histogram bins;  // count -> articles
    Ratio mean;
};

CountDistribution keywords_per_article(const Corpus& corpus);

struct TitleWordStats {
    Histogram bins;  // words -> articles
    std::int64_t min = 0;
    std::int64_t max = 0;
    Ratio mean;
    std::int64_t mode = 0;  // smallest most frequent length
    std::uint64_t mode_count = 0;
};

// A word is a maximal run of non-whitespace characters.
std::size_t count_words(std::string_view title);
TitleWordStats title_word_stats(const Corpus& corpus);

struct FundingYear {
    std::uint64_t originals = 0;
    std::uint64_t funded_originals = 0;
    std::uint64_t funder_mentions = 0;

    Ratio funded_ratio() const {
        return Ratio{static_cast<std::int64_t>(funded_originals), originals ? static_cast<std::int64_t>(originals) : 1};
    }
};

struct FundingSummary {
    std::map<std::string, std::map<int, std::uint64_t>> per_funder;  // funder -> year -> mentions
    Histogram funder_totals;
    FundingYear total;
    std::map<int, FundingYear> per_year;
};

FundingSummary funding_summary(const Corpus& corpus);

}  // namespace bibliolens
