#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace litbench {

// Word-multiset intersection-over-union between the text extracted from a
// page image and its paired markdown. Markdown markup characters
// (# * | ` [ ] ( )) are replaced with spaces on the markdown side before
// tokenizing, so pure decoration does not depress the ratio. 1.0 when both
// sides have no words.
double alignment_ratio(std::string_view image_text, std::string_view markdown_text);

struct AlignPair {
    std::string id;
    std::string image_text;
    std::string markdown_text;

    friend bool operator==(const AlignPair&, const AlignPair&) = default;
};

// Keeps pairs whose ratio is strictly greater than min_ratio; a pair sitting
// exactly on the boundary is dropped. min_ratio must be in [0, 1].
std::vector<AlignPair> filter_aligned(std::span<const AlignPair> pairs,
                                      double min_ratio = 0.95);

}  // namespace litbench
