#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "litbench/box.hpp"

namespace litbench {

// One reading-order text line on a page. The box is optional: plain-text
// ground truth and box-free model output both omit it.
struct TextLine {
    std::string text;
    std::optional<BoundingBox> bbox;

    friend bool operator==(const TextLine&, const TextLine&) = default;
};

// A page as the models see it: pixel dimensions plus lines in reading order.
struct PageDocument {
    int width = 0;
    int height = 0;
    std::vector<TextLine> lines;

    friend bool operator==(const PageDocument&, const PageDocument&) = default;
};

// One rule broken by a page. `line` is empty for page-level rules.
struct Violation {
    std::optional<std::size_t> line;
    std::string rule;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks page dimensions, line text, and box placement. Returns every broken
// rule rather than stopping at the first, so callers can report them all.
std::vector<Violation> validate_page(const PageDocument& page);

// Full markdown text of one document. Construction rejects invalid UTF-8 and
// stores the canonically composed (NFC) form.
class MarkdownDocument {
public:
    MarkdownDocument() = default;
    explicit MarkdownDocument(std::string_view raw);

    const std::string& source() const { return source_; }

    friend bool operator==(const MarkdownDocument&, const MarkdownDocument&) = default;

private:
    std::string source_;
};

}  // namespace litbench
