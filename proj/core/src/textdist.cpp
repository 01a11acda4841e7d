#include "litbench/textdist.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "litbench/unicode.hpp"

namespace litbench {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
    // Shared prefixes and suffixes cost nothing; trimming them keeps the DP
    // small for near-identical documents, the common case in evaluation.
    while (!a.empty() && !b.empty() && a.front() == b.front()) {
        a.remove_prefix(1);
        b.remove_prefix(1);
    }
    while (!a.empty() && !b.empty() && a.back() == b.back()) {
        a.remove_suffix(1);
        b.remove_suffix(1);
    }
    if (a.empty()) return b.size();
    if (b.empty()) return a.size();
    if (a.size() < b.size()) std::swap(a, b);  // b indexes the row

    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::size_t levenshtein(std::string_view a_utf8, std::string_view b_utf8) {
    return levenshtein(uni::decode_utf8(a_utf8), uni::decode_utf8(b_utf8));
}

PairScore ned_pair(std::string_view pred, std::string_view gt) {
    const std::u32string a = uni::decode_utf8(pred);
    const std::u32string b = uni::decode_utf8(gt);
    const std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return {0, 1.0};
    const std::size_t d = levenshtein(a, b);
    return {d, 1.0 - static_cast<double>(d) / static_cast<double>(longest)};
}

double corpus_ned(std::span<const std::pair<std::string, std::string>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("corpus_ned: empty corpus");
    double total = 0.0;
    for (const auto& [pred, gt] : pairs) total += ned_pair(pred, gt).similarity;
    return total / static_cast<double>(pairs.size());
}

}  // namespace litbench
