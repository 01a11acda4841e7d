#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace litbench {

// Levenshtein distance (unit insert/delete/substitute) counted over Unicode
// code points, not bytes. Runs in O(|a|·|b|) time and O(min(|a|,|b|)) memory,
// so document-length inputs are fine.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(std::string_view a_utf8, std::string_view b_utf8);

struct PairScore {
    std::size_t distance = 0;
    double similarity = 0.0;  // 1 - distance / max(len); 1.0 when both empty
};

PairScore ned_pair(std::string_view pred, std::string_view gt);

// Mean pairwise similarity. The corpus must be non-empty.
double corpus_ned(std::span<const std::pair<std::string, std::string>> pairs);

}  // namespace litbench
