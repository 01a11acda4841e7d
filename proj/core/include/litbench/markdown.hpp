#pragma once

#include <vector>

#include "litbench/doctree.hpp"
#include "litbench/page.hpp"

namespace litbench {

// Parsing is total: every string yields a tree, and anything outside the
// supported subset falls back to paragraph text. Diagnostics report lossy
// recoveries (nesting flattened past depth 64, unterminated code fences).
struct MarkdownParse {
    DocTree tree;
    std::vector<std::string> diagnostics;
};

// Parses a fixed markdown subset into a DocTree rooted at "root":
// ATX headings (h1-h6), unordered (-, *, +) and ordered (1.) lists, pipe
// tables with --- separator rows, fenced and inline code, bold (**), italic
// (* or _), links, inline <sup>/<sub>/<br> tags, horizontal rules, and
// blank-line-separated paragraphs. Text leaves carry their trimmed,
// whitespace-collapsed content as "text:<content>".
MarkdownParse parse_markdown_ex(const MarkdownDocument& doc);
DocTree parse_markdown(const MarkdownDocument& doc);

}  // namespace litbench
