#include "litbench/align.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "litbench/unicode.hpp"

namespace litbench {

namespace {

std::string strip_markup(std::string_view markdown) {
    std::string out(markdown);
    for (char& c : out) {
        switch (c) {
            case '#':
            case '*':
            case '|':
            case '`':
            case '[':
            case ']':
            case '(':
            case ')':
                c = ' ';
                break;
            default:
                break;
        }
    }
    return out;
}

}  // namespace

double alignment_ratio(std::string_view image_text, std::string_view markdown_text) {
    std::unordered_map<std::string, std::size_t> image_counts;
    for (std::string& w : uni::split_ws(image_text)) {
        ++image_counts[std::move(w)];
    }
    std::unordered_map<std::string, std::size_t> md_counts;
    for (std::string& w : uni::split_ws(strip_markup(markdown_text))) {
        ++md_counts[std::move(w)];
    }

    std::size_t inter = 0;
    std::size_t uni = 0;
    for (const auto& [word, n] : image_counts) {
        const auto it = md_counts.find(word);
        const std::size_t m = it == md_counts.end() ? 0 : it->second;
        inter += std::min(n, m);
        uni += std::max(n, m);
    }
    for (const auto& [word, m] : md_counts) {
        if (!image_counts.count(word)) uni += m;
    }
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<AlignPair> filter_aligned(std::span<const AlignPair> pairs,
                                      double min_ratio) {
    if (!(min_ratio >= 0.0 && min_ratio <= 1.0)) {
        throw std::invalid_argument("min-ratio must be in [0, 1]");
    }
    std::vector<AlignPair> kept;
    for (const AlignPair& p : pairs) {
        if (alignment_ratio(p.image_text, p.markdown_text) > min_ratio) {
            kept.push_back(p);
        }
    }
    return kept;
}

}  // namespace litbench
