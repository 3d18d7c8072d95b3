#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "bibliolens/citation_profile.hpp"
#include "bibliolens/collaboration.hpp"
#include "bibliolens/productivity.hpp"
#include "bibliolens/report.hpp"

using namespace bibliolens;

namespace {

std::filesystem::path fixture(const char* name) { return std::filesystem::path(BIBLIOLENS_FIXTURES) / name; }

const Corpus& fixture_corpus() {
    static const Corpus corpus = load_corpus(fixture("corpus.json"));
    return corpus;
}

// The fixture repeated `times` over with fresh ids.
Corpus scaled_corpus(int times) {
    const auto& base = fixture_corpus();
    std::vector<Article> articles;
    articles.reserve(base.size() * static_cast<std::size_t>(times));
    for (int t = 0; t < times; ++t)
        for (auto a : base.articles()) {
            a.id += "#" + std::to_string(t);
            articles.push_back(std::move(a));
        }
    return Corpus(base.journal(), base.years(), std::move(articles));
}

Histogram zipf_journals(std::size_t n) {
    Histogram h;
    std::mt19937_64 rng(1);
    for (std::size_t i = 0; i < n; ++i)
        h.add(BinKey{"J" + std::to_string(i)}, 1 + 5000 / (i + 1) + rng() % 3);
    return h;
}

void BM_LoadCorpus(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(load_corpus(fixture("corpus.json")));
}
BENCHMARK(BM_LoadCorpus)->Unit(benchmark::kMillisecond);

void BM_LotkaTwoPoint(benchmark::State& state) {
    auto observed = load_histogram(fixture("lotka_observed.csv"), KeyKind::integer);
    for (auto _ : state) benchmark::DoNotOptimize(lotka_fit_two_point(observed));
}
BENCHMARK(BM_LotkaTwoPoint);

void BM_Bradford(benchmark::State& state) {
    auto freqs = zipf_journals(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bradford_partition(freqs, 3));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Bradford)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

void BM_DegreeOfCollaboration(benchmark::State& state) {
    auto corpus = scaled_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(degree_of_collaboration(corpus));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_DegreeOfCollaboration)->Arg(1)->Arg(10)->Arg(50);

void BM_AgeProfile(benchmark::State& state) {
    auto corpus = scaled_corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(age_profile(corpus));
}
BENCHMARK(BM_AgeProfile)->Arg(1)->Arg(10);

void BM_FullReport(benchmark::State& state) {
    ReportOptions options;
    for (auto _ : state) benchmark::DoNotOptimize(full_report(fixture_corpus(), options));
}
BENCHMARK(BM_FullReport)->Unit(benchmark::kMillisecond);

void BM_RenderMarkdown(benchmark::State& state) {
    auto doc = full_report(fixture_corpus(), ReportOptions{});
    for (auto _ : state) benchmark::DoNotOptimize(render(doc, Format::md));
}
BENCHMARK(BM_RenderMarkdown)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
