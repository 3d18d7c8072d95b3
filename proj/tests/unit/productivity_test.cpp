#include <gtest/gtest.h>

#include <cmath>

#include "bibliolens/errors.hpp"
#include "bibliolens/productivity.hpp"
#include "support.hpp"

using namespace bibliolens;
using test::article;
using test::author;
using test::corpus_of;

namespace {

Histogram hist(std::initializer_list<std::pair<std::int64_t, std::uint64_t>> bins) {
    Histogram h;
    for (auto [k, v] : bins) h.add(BinKey{k}, v);
    return h;
}

Histogram observed_table() { return load_histogram(test::fixture("lotka_observed.csv"), KeyKind::integer); }

std::map<std::int64_t, std::uint64_t> as_map(const Histogram& h) {
    std::map<std::int64_t, std::uint64_t> m;
    for (const auto& [k, v] : h.bins()) m[std::get<std::int64_t>(k)] = v;
    return m;
}

}  // namespace

TEST(ArticlesPerYear, Fixture) {
    auto s = articles_per_year(test::fixture_corpus());
    EXPECT_EQ(as_map(s.counts), (std::map<std::int64_t, std::uint64_t>{
                                    {2004, 139}, {2005, 102}, {2006, 104}, {2007, 100}, {2008, 135}}));
    EXPECT_EQ(s.total, 580u);
    EXPECT_EQ(round_half_up(s.mean_per_year, 0), "116");
    EXPECT_EQ(percent(s.rows[0].share), "23.97");
    EXPECT_EQ(percent(s.rows.back().cumulative), "100.00");
}

TEST(ArticlesPerYear, EmptyAndSingle) {
    EXPECT_TRUE(articles_per_year(corpus_of({})).counts.empty());
    auto s = articles_per_year(corpus_of({article("A", 2006, {author("X")})}));
    ASSERT_EQ(s.rows.size(), 1u);
    EXPECT_EQ(s.rows[0].year, 2006);
    EXPECT_EQ(percent(s.rows[0].share), "100.00");
}

TEST(AuthorshipsPerYear, Fixture) {
    auto s = authorships_per_year(test::fixture_corpus());
    EXPECT_EQ(as_map(s.counts), (std::map<std::int64_t, std::uint64_t>{
                                    {2004, 478}, {2005, 367}, {2006, 412}, {2007, 352}, {2008, 568}}));
    EXPECT_EQ(s.total, 2177u);
}

TEST(AuthorshipsPerYear, CountsSlotsNotNames) {
    auto s = authorships_per_year(corpus_of({article("A", 2005, {author("X"), author("Y"), author("Z")})}));
    EXPECT_EQ(as_map(s.counts), (std::map<std::int64_t, std::uint64_t>{{2005, 3}}));
    EXPECT_TRUE(authorships_per_year(corpus_of({})).counts.empty());
}

TEST(LotkaTwoPoint, ProductivityTableExponent) {
    auto fit = lotka_fit_two_point(observed_table());
    EXPECT_GE(fit.c, 2.40);
    EXPECT_LE(fit.c, 2.42);
    EXPECT_NEAR(fit.c, std::log(1084.0 / 204.0) / std::log(2.0), 1e-12);
    EXPECT_EQ(round_half_up(fit.c_truncated_logs, 1), "2.4");
    EXPECT_NEAR(fit.c_truncated_logs, 0.725 / 0.301, 1e-12);
    EXPECT_EQ(fit.a1, 1084u);
    EXPECT_EQ(fit.total_observed, 1435u);
}

TEST(LotkaTwoPoint, ExactExponents) {
    EXPECT_DOUBLE_EQ(lotka_fit_two_point(hist({{1, 100}, {2, 25}})).c, 2.0);
    EXPECT_DOUBLE_EQ(lotka_fit_two_point(hist({{1, 60}, {2, 30}})).c, 1.0);
}

TEST(LotkaTwoPoint, MissingBins) {
    EXPECT_THROW(lotka_fit_two_point(hist({{1, 100}})), MissingBin);
    EXPECT_THROW(lotka_fit_two_point(hist({{2, 100}})), MissingBin);
    EXPECT_THROW(lotka_fit_two_point(hist({{1, 100}, {2, 0}})), MissingBin);
}

TEST(LotkaTwoPoint, NonDecreasingDataRejected) {
    EXPECT_THROW(lotka_fit_two_point(hist({{1, 10}, {2, 20}})), AnalysisError);
}

TEST(LotkaExpected, Examples) {
    EXPECT_EQ(lotka_expected(1084, 2.4, {2}).count(BinKey{std::int64_t{2}}), 205u);
    EXPECT_EQ(lotka_expected(1084, 2.4, {1}).count(BinKey{std::int64_t{1}}), 1084u);
    auto all = lotka_expected(1084, 2.4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 19});
    EXPECT_EQ(as_map(all), (std::map<std::int64_t, std::uint64_t>{{1, 1084}, {2, 205}, {3, 78}, {4, 39}, {5, 23},
                                                                 {6, 15}, {7, 10}, {8, 7}, {9, 6}, {10, 4},
                                                                 {11, 3}, {12, 3}, {14, 2}, {15, 2}, {19, 1}}));
    EXPECT_EQ(all.total(), 1482u);
}

TEST(LotkaC2, ProductivityTable) {
    auto fit = lotka_fit_c2(observed_table());
    EXPECT_EQ(fit.expected.count(BinKey{std::int64_t{2}}), 271u);
    EXPECT_EQ(fit.expected.count(BinKey{std::int64_t{3}}), 120u);
    EXPECT_EQ(fit.expected.count(BinKey{std::int64_t{4}}), 68u);
    EXPECT_EQ(fit.expected.count(BinKey{std::int64_t{5}}), 43u);
    EXPECT_EQ(fit.c, 2.0);
}

TEST(LotkaC2, SmallCases) {
    EXPECT_EQ(lotka_fit_c2(hist({{1, 4}, {2, 0}})).expected.count(BinKey{std::int64_t{2}}), 1u);
    EXPECT_EQ(lotka_fit_c2(hist({{1, 1084}, {3, 1}})).expected.count(BinKey{std::int64_t{3}}), 120u);
    EXPECT_THROW(lotka_fit_c2(hist({{2, 5}})), MissingBin);
}

TEST(LotkaFit, Diagnostics) {
    auto fit = lotka_fit_fixed(observed_table(), 2.4);
    EXPECT_EQ(fit.total_expected, 1482u);
    EXPECT_EQ(fit.max_abs_dev, 13u);  // n=3: 65 observed against 78
    double chi = 0;
    int bins = 0;
    for (const auto& r : fit.rows)
        if (r.expected >= 5) {
            double d = static_cast<double>(r.observed) - static_cast<double>(r.expected);
            chi += d * d / static_cast<double>(r.expected);
            ++bins;
        }
    EXPECT_DOUBLE_EQ(fit.chi_square, chi);
    EXPECT_EQ(fit.chi_square_bins, bins);
}

TEST(LotkaLsq, RecoversExactPowerLaw) {
    Histogram h;
    for (std::int64_t n = 1; n <= 6; ++n) h.add(BinKey{n}, static_cast<std::uint64_t>(std::llround(64000.0 / std::pow(n, 3.0))));
    EXPECT_NEAR(lotka_fit_lsq(h).c, 3.0, 1e-3);
    EXPECT_EQ(lotka_fit_lsq(h).method, LotkaMethod::least_squares);
}

TEST(CoreAuthors, FixtureCohorts) {
    auto cohorts = core_authors(test::fixture_corpus(), 10);
    ASSERT_GE(cohorts.size(), 2u);
    EXPECT_EQ(cohorts[0].paper_count, 19u);
    EXPECT_EQ(cohorts[0].members.size(), 1u);
    EXPECT_EQ(cohorts[0].members[0].name, "RUSZYMAH B.H.I");
    EXPECT_EQ(cohorts[1].paper_count, 15u);
    EXPECT_EQ(cohorts[1].members.size(), 2u);
    EXPECT_LT(cohorts[1].members[0].name, cohorts[1].members[1].name);
}

TEST(CoreAuthors, AllAuthorsAtMinimumOne) {
    auto cohorts = core_authors(test::fixture_corpus(), 1);
    std::size_t authors = 0;
    std::uint64_t authorships = 0;
    for (const auto& c : cohorts) {
        authors += c.members.size();
        authorships += c.paper_count * c.members.size();
    }
    EXPECT_EQ(authors, 1435u);
    EXPECT_EQ(authorships, 2177u);
}

TEST(CoreAuthors, DistinctAuthorsGiveNoCohortAtTwo) {
    auto c = corpus_of({article("A", 2004, {author("X")}), article("B", 2004, {author("Y")})});
    EXPECT_TRUE(core_authors(c, 2).empty());
}

TEST(CoreAuthors, MostFrequentAffiliationWins) {
    auto c = corpus_of({article("A", 2004, {author("X", "B Hospital")}), article("B", 2004, {author("X", "A Hospital")}),
                        article("C", 2004, {author("X", "B Hospital")})});
    EXPECT_EQ(core_authors(c, 1)[0].members[0].affiliation, "B Hospital");
}
