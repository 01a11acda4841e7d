#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "litbench/dedup.hpp"
#include "litbench/minhash.hpp"

namespace {

std::string random_words(std::mt19937_64& rng, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        out += "w" + std::to_string(rng() % 5000) + " ";
    }
    return out;
}

void BM_shingle(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const std::string text = random_words(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::shingle(text));
    }
}

void BM_signature(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const litbench::ShingleSet s =
        litbench::shingle(random_words(rng, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::signature(s));
    }
}

void BM_dedup_corpus(benchmark::State& state) {
    // A corpus where every fourth record is a near copy of the previous one,
    // roughly the duplicate density curation actually sees.
    std::mt19937_64 rng(9);
    std::vector<litbench::DedupRecord> records;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) {
        std::string text = i % 4 == 1 ? records.back().text + "tail "
                                      : random_words(rng, 120);
        records.push_back({"r" + std::to_string(i), std::move(text), ""});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::dedup(records));
    }
}

}  // namespace

BENCHMARK(BM_shingle)->Range(64, 4096);
BENCHMARK(BM_signature)->Range(64, 4096);
BENCHMARK(BM_dedup_corpus)->Range(32, 256);
