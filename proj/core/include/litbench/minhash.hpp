#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace litbench {

inline constexpr std::uint64_t kDefaultMinHashSeed = 0x6c697462;

// Hashes of a text's word n-grams, sorted and deduplicated. Never empty:
// texts with fewer than n words contribute one whole-text shingle.
struct ShingleSet {
    std::vector<std::uint64_t> hashes;

    friend bool operator==(const ShingleSet&, const ShingleSet&) = default;
};

// Lowercases, splits on whitespace, and hashes every consecutive n-gram.
ShingleSet shingle(std::string_view text, int n = 5);

// |a ∩ b| / |a ∪ b|; 1.0 when both sets are empty.
double exact_jaccard(const ShingleSet& a, const ShingleSet& b);

// One minimum per seeded hash permutation. Signatures are comparable only
// when k and seed match.
struct MinHashSignature {
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> minima;
};

MinHashSignature signature(const ShingleSet& s, int k = 128,
                           std::uint64_t seed = kDefaultMinHashSeed);

// Fraction of agreeing minima: an unbiased estimate of the exact Jaccard
// similarity. Throws when k or seed differ.
double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b);

}  // namespace litbench
