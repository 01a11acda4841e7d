#include "litbench/minhash.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "litbench/unicode.hpp"

namespace litbench {

namespace {

// 2^61 - 1, a Mersenne prime; the permutation family is a*x + b mod p.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % kPrime);
}

}  // namespace

ShingleSet shingle(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("shingle size must be >= 1");
    const std::vector<std::string> words = uni::split_ws(uni::to_lower(text));

    ShingleSet out;
    const std::size_t width = static_cast<std::size_t>(n);
    if (words.size() < width) {
        // Short-text fallback: one shingle over the whole normalized text.
        std::string joined;
        for (const std::string& w : words) {
            if (!joined.empty()) joined += ' ';
            joined += w;
        }
        out.hashes.push_back(fnv1a(joined));
        return out;
    }
    out.hashes.reserve(words.size() - width + 1);
    for (std::size_t i = 0; i + width <= words.size(); ++i) {
        std::string gram;
        for (std::size_t j = 0; j < width; ++j) {
            if (j) gram += ' ';
            gram += words[i + j];
        }
        out.hashes.push_back(fnv1a(gram));
    }
    std::sort(out.hashes.begin(), out.hashes.end());
    out.hashes.erase(std::unique(out.hashes.begin(), out.hashes.end()),
                     out.hashes.end());
    return out;
}

double exact_jaccard(const ShingleSet& a, const ShingleSet& b) {
    if (a.hashes.empty() && b.hashes.empty()) return 1.0;
    std::size_t inter = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.hashes.size() && j < b.hashes.size()) {
        if (a.hashes[i] == b.hashes[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a.hashes[i] < b.hashes[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const std::size_t uni = a.hashes.size() + b.hashes.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

MinHashSignature signature(const ShingleSet& s, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("signature length must be >= 1");
    MinHashSignature sig;
    sig.seed = seed;
    sig.minima.assign(static_cast<std::size_t>(k), kPrime);

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sig.minima.size(); ++i) {
        const std::uint64_t a = rng() % (kPrime - 1) + 1;
        const std::uint64_t b = rng() % kPrime;
        std::uint64_t best = kPrime;
        for (const std::uint64_t x : s.hashes) {
            const std::uint64_t h = (mulmod(a, x % kPrime) + b) % kPrime;
            best = std::min(best, h);
        }
        sig.minima[i] = best;
    }
    return sig;
}

double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b) {
    if (a.seed != b.seed) {
        throw std::invalid_argument("signatures built with different seeds");
    }
    if (a.minima.size() != b.minima.size() || a.minima.empty()) {
        throw std::invalid_argument("signatures built with different k");
    }
    std::size_t agree = 0;
    for (std::size_t i = 0; i < a.minima.size(); ++i) {
        if (a.minima[i] == b.minima[i]) ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(a.minima.size());
}

}  // namespace litbench
