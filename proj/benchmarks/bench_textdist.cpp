#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "litbench/textdist.hpp"

namespace {

// Two strings of the requested length that agree on most positions, the
// shape document lines actually have.
std::pair<std::u32string, std::u32string> similar_pair(int len) {
    std::mt19937_64 rng(7);
    std::u32string a;
    std::u32string b;
    a.reserve(len);
    b.reserve(len);
    for (int i = 0; i < len; ++i) {
        const char32_t c = U'a' + static_cast<char32_t>(rng() % 26);
        a.push_back(c);
        b.push_back(rng() % 10 == 0 ? U'#' : c);
    }
    return {a, b};
}

void BM_levenshtein(benchmark::State& state) {
    const auto [a, b] = similar_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::levenshtein(a, b));
    }
    state.SetComplexityN(state.range(0));
}

void BM_ned_pair_utf8(benchmark::State& state) {
    // UTF-8 in, so the decode cost is part of the measurement.
    std::mt19937_64 rng(11);
    std::string a;
    std::string b;
    for (int i = 0; i < state.range(0); ++i) {
        const char c = 'a' + static_cast<char>(rng() % 26);
        a.push_back(c);
        b.push_back(rng() % 10 == 0 ? 'z' : c);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::ned_pair(a, b));
    }
}

}  // namespace

BENCHMARK(BM_levenshtein)->Range(64, 8192)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ned_pair_utf8)->Range(64, 8192);

BENCHMARK_MAIN();
