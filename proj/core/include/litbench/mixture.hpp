#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace litbench {

struct MixtureSource {
    std::string name;
    std::filesystem::path path;
    double ratio = 0.0;
};

// Named JSONL sources with sampling ratios that must be positive and sum to
// 1 within 1e-9.
struct MixtureSpec {
    std::vector<MixtureSource> sources;

    void validate() const;  // throws std::invalid_argument

    // {"sources": [{"name": ..., "path": ..., "ratio": ...}, ...]}
    static MixtureSpec from_json(const nlohmann::json& j);
};

struct MixtureDraw {
    std::size_t source = 0;
    std::size_t record = 0;
};

// The sampling core, free of I/O: `total` draws, each picking a source by
// ratio and then a record uniformly (with replacement) within that source.
// Fully deterministic given the seed.
std::vector<MixtureDraw> sample_mixture_draws(std::span<const double> ratios,
                                              std::span<const std::size_t> sizes,
                                              std::size_t total,
                                              std::uint64_t seed);

// Reads each source as JSONL (blank lines skipped; every source must be
// readable and non-empty, errors name the source) and materializes the draws
// as (source name, raw record line) pairs.
std::vector<std::pair<std::string, std::string>> sample_mixture(
    const MixtureSpec& spec, std::size_t total, std::uint64_t seed);

}  // namespace litbench
