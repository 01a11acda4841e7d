#include "litbench/mixture.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

#include "litbench/errors.hpp"

namespace litbench {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased draw from [0, n) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

}  // namespace

void MixtureSpec::validate() const {
    if (sources.empty()) {
        throw std::invalid_argument("mixture needs at least one source");
    }
    std::set<std::string> names;
    double sum = 0.0;
    for (const MixtureSource& s : sources) {
        if (s.name.empty()) throw std::invalid_argument("source name is empty");
        if (!names.insert(s.name).second) {
            throw std::invalid_argument("duplicate source name \"" + s.name + "\"");
        }
        if (!(s.ratio > 0.0)) {
            throw std::invalid_argument("source \"" + s.name +
                                        "\" ratio must be > 0");
        }
        sum += s.ratio;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("source ratios must sum to 1");
    }
}

MixtureSpec MixtureSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sources") || !j.at("sources").is_array()) {
        throw std::invalid_argument("mixture spec needs a \"sources\" array");
    }
    MixtureSpec spec;
    for (const nlohmann::json& e : j.at("sources")) {
        if (!e.is_object() || !e.contains("name") || !e.at("name").is_string() ||
            !e.contains("path") || !e.at("path").is_string() ||
            !e.contains("ratio") || !e.at("ratio").is_number()) {
            throw std::invalid_argument(
                "each source needs string \"name\", string \"path\", and "
                "numeric \"ratio\"");
        }
        spec.sources.push_back({e.at("name").get<std::string>(),
                                std::filesystem::path(e.at("path").get<std::string>()),
                                e.at("ratio").get<double>()});
    }
    spec.validate();
    return spec;
}

std::vector<MixtureDraw> sample_mixture_draws(std::span<const double> ratios,
                                              std::span<const std::size_t> sizes,
                                              std::size_t total,
                                              std::uint64_t seed) {
    if (ratios.size() != sizes.size() || ratios.empty()) {
        throw std::invalid_argument("ratios and sizes must align and be non-empty");
    }
    for (const std::size_t n : sizes) {
        if (n == 0) throw std::invalid_argument("every source must be non-empty");
    }

    std::mt19937_64 rng(seed);
    std::vector<MixtureDraw> draws;
    draws.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        const double u = uniform01(rng);
        std::size_t source = ratios.size() - 1;
        double cum = 0.0;
        for (std::size_t s = 0; s < ratios.size(); ++s) {
            cum += ratios[s];
            if (u < cum) {
                source = s;
                break;
            }
        }
        const std::size_t record =
            static_cast<std::size_t>(bounded(rng, sizes[source]));
        draws.push_back({source, record});
    }
    return draws;
}

std::vector<std::pair<std::string, std::string>> sample_mixture(
    const MixtureSpec& spec, std::size_t total, std::uint64_t seed) {
    spec.validate();

    std::vector<std::vector<std::string>> records;
    for (const MixtureSource& s : spec.sources) {
        std::ifstream in(s.path, std::ios::binary);
        if (!in) {
            throw Error("source \"" + s.name + "\": cannot open " +
                        s.path.string());
        }
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) lines.push_back(line);
        }
        if (lines.empty()) {
            throw Error("source \"" + s.name + "\": no records");
        }
        records.push_back(std::move(lines));
    }

    std::vector<double> ratios;
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < spec.sources.size(); ++i) {
        ratios.push_back(spec.sources[i].ratio);
        sizes.push_back(records[i].size());
    }

    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(total);
    for (const MixtureDraw& d : sample_mixture_draws(ratios, sizes, total, seed)) {
        out.emplace_back(spec.sources[d.source].name, records[d.source][d.record]);
    }
    return out;
}

}  // namespace litbench
