#include "bibliolens/productivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bibliolens/errors.hpp"

namespace bibliolens {

namespace {

YearSeries series_from(Histogram counts) {
    YearSeries s;
    s.total = counts.total();
    auto total = static_cast<std::int64_t>(s.total);
    std::int64_t running = 0;
    for (const auto& [key, n] : counts.bins()) {
        running += static_cast<std::int64_t>(n);
        s.rows.push_back({static_cast<int>(std::get<std::int64_t>(key)), n,
                          Ratio{static_cast<std::int64_t>(n), total}, Ratio{running, total}});
    }
    s.mean_per_year = Ratio{total, static_cast<std::int64_t>(counts.size())};
    s.counts = std::move(counts);
    return s;
}

std::int64_t as_n(const BinKey& key) {
    const auto* n = std::get_if<std::int64_t>(&key);
    if (!n || *n < 1) throw MissingBin("productivity histogram keys must be integers n >= 1");
    return *n;
}

std::vector<std::int64_t> keys_of(const Histogram& observed) {
    std::vector<std::int64_t> ns;
    for (const auto& [key, count] : observed.bins()) ns.push_back(as_n(key));
    return ns;
}

std::uint64_t require_bin(const Histogram& h, std::int64_t n) {
    auto v = h.count(BinKey{n});
    if (v == 0) throw MissingBin("bin n=" + std::to_string(n) + " is absent or zero");
    return v;
}

LotkaFit finish(LotkaMethod method, const Histogram& observed, double c) {
    if (!(c > 0.0) || !std::isfinite(c))
        throw AnalysisError("Lotka exponent must be positive and finite, got " + format_exact(c));
    LotkaFit fit;
    fit.method = method;
    fit.c = c;
    fit.c_truncated_logs = c;
    fit.a1 = require_bin(observed, 1);
    fit.observed = observed;
    fit.observed.set_label("observed");
    fit.expected = lotka_expected(fit.a1, c, keys_of(observed));
    fit.total_observed = observed.total();
    fit.total_expected = fit.expected.total();
    for (const auto& [key, obs] : observed.bins()) {
        auto exp = fit.expected.count(key);
        fit.rows.push_back({std::get<std::int64_t>(key), obs, exp,
                            Ratio{static_cast<std::int64_t>(obs), static_cast<std::int64_t>(fit.total_observed)},
                            Ratio{static_cast<std::int64_t>(exp), static_cast<std::int64_t>(fit.total_expected)}});
        fit.max_abs_dev = std::max(fit.max_abs_dev, obs > exp ? obs - exp : exp - obs);
        if (exp >= 5) {
            double d = static_cast<double>(obs) - static_cast<double>(exp);
            fit.chi_square += d * d / static_cast<double>(exp);
            ++fit.chi_square_bins;
        }
    }
    return fit;
}

double truncate3(double x) { return std::trunc(x * 1000.0) / 1000.0; }

}  // namespace

YearSeries articles_per_year(const Corpus& corpus) {
    Histogram h("articles");
    for (const auto& a : corpus.articles()) h.add(BinKey{std::int64_t{a.year}});
    return series_from(std::move(h));
}

YearSeries authorships_per_year(const Corpus& corpus) {
    Histogram h("authorships");
    for (const auto& a : corpus.articles())
        if (!a.authors.empty()) h.add(BinKey{std::int64_t{a.year}}, a.authors.size());
    return series_from(std::move(h));
}

Histogram author_productivity(const Corpus& corpus) {
    Histogram h("authors");
    for (const auto& [name, n] : unique_authors(corpus)) h.add(BinKey{static_cast<std::int64_t>(n)});
    return h;
}

Histogram lotka_expected(std::uint64_t a1, double c, const std::vector<std::int64_t>& ns) {
    if (!(c > 0.0)) throw AnalysisError("Lotka exponent must be positive");
    Histogram h("expected");
    for (auto n : ns) {
        if (n < 1) throw MissingBin("n must be >= 1");
        double v = static_cast<double>(a1) / std::pow(static_cast<double>(n), c);
        h.add(BinKey{n}, static_cast<std::uint64_t>(round_half_up_int(v)));
    }
    return h;
}

LotkaFit lotka_fit_two_point(const Histogram& observed) {
    auto a1 = static_cast<double>(require_bin(observed, 1));
    auto a2 = static_cast<double>(require_bin(observed, 2));
    LotkaFit fit = finish(LotkaMethod::two_point, observed, std::log(a1 / a2) / std::log(2.0));
    fit.c_truncated_logs = truncate3(std::log10(a1 / a2)) / truncate3(std::log10(2.0));
    return fit;
}

LotkaFit lotka_fit_lsq(const Histogram& observed) {
    require_bin(observed, 1);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& [key, count] : observed.bins()) {
        if (count == 0) continue;
        double x = std::log(static_cast<double>(as_n(key)));
        double y = std::log(static_cast<double>(count));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    double denom = m * sxx - sx * sx;
    if (m < 2 || denom == 0.0) throw MissingBin("least-squares fit needs at least two non-empty bins");
    double slope = (m * sxy - sx * sy) / denom;
    return finish(LotkaMethod::least_squares, observed, -slope);
}

LotkaFit lotka_fit_fixed(const Histogram& observed, double c) { return finish(LotkaMethod::fixed, observed, c); }

LotkaFit lotka_fit_c2(const Histogram& observed) { return lotka_fit_fixed(observed, 2.0); }

std::vector<AuthorCohort> core_authors(const Corpus& corpus, std::uint64_t min_count) {
    if (min_count < 1) throw AnalysisError("min_count must be at least 1");
    auto counts = unique_authors(corpus);

    std::map<std::string, std::map<std::string, std::uint64_t>> affiliations;
    for (const auto& a : corpus.articles())
        for (const auto& au : a.authors) ++affiliations[au.name][au.affiliation];

    std::map<std::uint64_t, std::vector<AuthorCohort::Member>, std::greater<>> grouped;
    for (const auto& [name, n] : counts) {
        if (n < min_count) continue;
        const auto& affs = affiliations[name];
        // Most frequent affiliation; std::map order makes the tie-break lexicographic.
        auto best = std::max_element(affs.begin(), affs.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
        grouped[n].push_back({name, best->first});
    }

    std::vector<AuthorCohort> out;
    int rank = 0;
    for (auto& [n, members] : grouped) out.push_back({++rank, n, std::move(members)});
    return out;
}

}  // namespace bibliolens
