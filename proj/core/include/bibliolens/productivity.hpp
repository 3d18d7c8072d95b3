#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bibliolens/corpus.hpp"
#include "bibliolens/decimal.hpp"
#include "bibliolens/histogram.hpp"

namespace bibliolens {

struct YearShare {
    int year = 0;
    std::uint64_t count = 0;
    Ratio share;       // count / total
    Ratio cumulative;  // running count / total
};

struct YearSeries {
    Histogram counts;  // year -> count
    std::vector<YearShare> rows;
    std::uint64_t total = 0;
    Ratio mean_per_year;  // total / number of years present
};

YearSeries articles_per_year(const Corpus& corpus);
YearSeries authorships_per_year(const Corpus& corpus);

// n -> number of authors with exactly n articles.
Histogram author_productivity(const Corpus& corpus);

enum class LotkaMethod { two_point, least_squares, fixed };

struct LotkaRow {
    std::int64_t n = 0;
    std::uint64_t observed = 0;
    std::uint64_t expected = 0;
    Ratio observed_share;
    Ratio expected_share;
};

struct LotkaFit {
    LotkaMethod method = LotkaMethod::two_point;
    double c = 0.0;
    // Two-point exponent with both base-10 logs truncated to 3 decimals
    // before dividing; equals `c` for other methods.
    double c_truncated_logs = 0.0;
    std::uint64_t a1 = 0;
    Histogram observed;
    Histogram expected;
    std::vector<LotkaRow> rows;
    std::uint64_t max_abs_dev = 0;
    double chi_square = 0.0;  // over bins with expected >= 5
    int chi_square_bins = 0;
    std::uint64_t total_observed = 0;
    std::uint64_t total_expected = 0;
};

// c = log(a1/a2) / log 2.
LotkaFit lotka_fit_two_point(const Histogram& observed);
// Ordinary least squares on (log n, log a_n) over non-empty bins; expected
// values stay anchored at a1. Not part of the classical method.
LotkaFit lotka_fit_lsq(const Histogram& observed);
LotkaFit lotka_fit_fixed(const Histogram& observed, double c);
LotkaFit lotka_fit_c2(const Histogram& observed);

// Each bin n -> round-half-up(a1 / n^c).
Histogram lotka_expected(std::uint64_t a1, double c, const std::vector<std::int64_t>& ns);

struct AuthorCohort {
    int rank_group = 0;
    std::uint64_t paper_count = 0;
    struct Member {
        std::string name;
        std::string affiliation;
    };
    std::vector<Member> members;
};

std::vector<AuthorCohort> core_authors(const Corpus& corpus, std::uint64_t min_count);

}  // namespace bibliolens
