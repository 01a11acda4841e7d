#include "litbench/markdown.hpp"

#include <algorithm>
#include <string_view>
#include <utility>

#include "litbench/unicode.hpp"

namespace litbench {

namespace {

constexpr int kMaxDepth = 64;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool starts_with_at(std::string_view s, std::size_t i, std::string_view pat) {
    return s.size() - i >= pat.size() && s.substr(i, pat.size()) == pat;
}

struct Parser {
    std::vector<std::string> diagnostics;
    bool depth_reported = false;

    void add_text(std::vector<TreeNode>& out, std::string_view raw) {
        const std::string collapsed = uni::collapse_ws(raw);
        if (!collapsed.empty()) out.push_back({"text:" + collapsed, {}});
    }

    // Wraps inline content in `label`, parsing the interior one level deeper.
    TreeNode span(const std::string& label, std::string_view inner, int depth) {
        return {label, parse_inline(inner, depth + 1)};
    }

    std::vector<TreeNode> parse_inline(std::string_view s, int depth) {
        std::vector<TreeNode> out;
        if (depth >= kMaxDepth) {
            if (!depth_reported) {
                diagnostics.push_back(
                    "inline nesting deeper than 64 flattened to text");
                depth_reported = true;
            }
            add_text(out, s);
            return out;
        }
        std::string literal;
        const auto flush = [&] {
            add_text(out, literal);
            literal.clear();
        };
        std::size_t i = 0;
        while (i < s.size()) {
            const char c = s[i];
            if (c == '`') {
                const std::size_t close = s.find('`', i + 1);
                if (close != std::string_view::npos) {
                    flush();
                    TreeNode code{"code", {}};
                    add_text(code.children, s.substr(i + 1, close - i - 1));
                    out.push_back(std::move(code));
                    i = close + 1;
                    continue;
                }
            } else if (starts_with_at(s, i, "**")) {
                const std::size_t close = s.find("**", i + 2);
                if (close != std::string_view::npos) {
                    flush();
                    out.push_back(span("strong", s.substr(i + 2, close - i - 2), depth));
                    i = close + 2;
                    continue;
                }
            } else if (c == '*' || c == '_') {
                const std::size_t close = s.find(c, i + 1);
                if (close != std::string_view::npos) {
                    flush();
                    out.push_back(span("em", s.substr(i + 1, close - i - 1), depth));
                    i = close + 1;
                    continue;
                }
            } else if (c == '[') {
                const std::size_t close = s.find(']', i + 1);
                if (close != std::string_view::npos && close + 1 < s.size() &&
                    s[close + 1] == '(') {
                    const std::size_t paren = s.find(')', close + 2);
                    if (paren != std::string_view::npos) {
                        // The destination is an attribute, not tree structure;
                        // only the link text becomes nodes.
                        flush();
                        out.push_back(span("a", s.substr(i + 1, close - i - 1), depth));
                        i = paren + 1;
                        continue;
                    }
                }
            } else if (c == '<') {
                if (starts_with_at(s, i, "<br>") || starts_with_at(s, i, "<br/>") ||
                    starts_with_at(s, i, "<br />")) {
                    flush();
                    out.push_back({"br", {}});
                    i += starts_with_at(s, i, "<br>") ? 4
                         : starts_with_at(s, i, "<br/>") ? 5
                                                         : 6;
                    continue;
                }
                bool matched = false;
                for (const std::string_view tag : {"sup", "sub"}) {
                    const std::string open = "<" + std::string(tag) + ">";
                    const std::string close_tag = "</" + std::string(tag) + ">";
                    if (!starts_with_at(s, i, open)) continue;
                    const std::size_t close = s.find(close_tag, i + open.size());
                    if (close == std::string_view::npos) break;
                    flush();
                    out.push_back(span(std::string(tag),
                                       s.substr(i + open.size(), close - i - open.size()),
                                       depth));
                    i = close + close_tag.size();
                    matched = true;
                    break;
                }
                if (matched) continue;
            }
            literal += c;
            ++i;
        }
        flush();
        return out;
    }
};

bool is_heading(std::string_view line, int& level, std::string_view& rest) {
    std::size_t n = 0;
    while (n < line.size() && line[n] == '#') ++n;
    if (n < 1 || n > 6) return false;
    if (n < line.size() && line[n] != ' ') return false;
    level = static_cast<int>(n);
    rest = n < line.size() ? trim(line.substr(n + 1)) : std::string_view{};
    return true;
}

bool is_rule(std::string_view line) {
    if (line.size() < 3) return false;
    const char c = line.front();
    if (c != '-' && c != '*' && c != '_') return false;
    return std::all_of(line.begin(), line.end(), [c](char x) { return x == c; });
}

bool is_bullet(std::string_view line, std::string_view& rest) {
    if (line.size() < 2) return false;
    const char c = line.front();
    if ((c != '-' && c != '*' && c != '+') || line[1] != ' ') return false;
    rest = trim(line.substr(2));
    return true;
}

bool is_ordered(std::string_view line, std::string_view& rest) {
    std::size_t n = 0;
    while (n < line.size() && line[n] >= '0' && line[n] <= '9') ++n;
    if (n < 1 || n > 9) return false;
    if (n + 1 >= line.size() || line[n] != '.' || line[n + 1] != ' ') return false;
    rest = trim(line.substr(n + 2));
    return true;
}

// Splits `| a | b |` into trimmed cell contents. A row without a trailing
// pipe (`| a | b`) is tolerated.
std::vector<std::string_view> table_cells(std::string_view row) {
    row.remove_prefix(1);
    if (!row.empty() && row.back() == '|') row.remove_suffix(1);
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = row.find('|', start);
        const std::size_t stop = bar == std::string_view::npos ? row.size() : bar;
        cells.push_back(trim(row.substr(start, stop - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return cells;
}

bool is_separator_row(const std::vector<std::string_view>& cells) {
    if (cells.empty()) return false;
    for (std::string_view cell : cells) {
        if (cell.empty()) return false;
        std::size_t i = 0;
        if (cell[i] == ':') ++i;
        const std::size_t dashes = i;
        while (i < cell.size() && cell[i] == '-') ++i;
        if (i == dashes) return false;
        if (i < cell.size() && cell[i] == ':') ++i;
        if (i != cell.size()) return false;
    }
    return true;
}

struct BlockParser {
    Parser inl;
    TreeNode root{"root", {}};

    std::vector<std::string> paragraph;
    TreeNode list{};
    bool list_open = false;
    TreeNode table{};
    bool table_open = false;
    std::size_t table_rows_seen = 0;
    bool in_fence = false;
    std::string fence_body;
    bool fence_first_line = true;

    void close_paragraph() {
        if (paragraph.empty()) return;
        std::string joined;
        for (const std::string& l : paragraph) {
            if (!joined.empty()) joined += ' ';
            joined += l;
        }
        paragraph.clear();
        root.children.push_back({"p", inl.parse_inline(joined, 0)});
    }

    void close_list() {
        if (!list_open) return;
        root.children.push_back(std::move(list));
        list = {};
        list_open = false;
    }

    void close_table() {
        if (!table_open) return;
        root.children.push_back(std::move(table));
        table = {};
        table_open = false;
        table_rows_seen = 0;
    }

    void close_blocks() {
        close_paragraph();
        close_list();
        close_table();
    }

    void close_fence() {
        TreeNode code{"code", {}};
        inl.add_text(code.children, fence_body);
        root.children.push_back({"pre", {std::move(code)}});
        fence_body.clear();
        fence_first_line = true;
        in_fence = false;
    }

    void list_item(const char* kind, std::string_view content) {
        close_paragraph();
        close_table();
        if (list_open && list.label != kind) close_list();
        if (!list_open) {
            list = {kind, {}};
            list_open = true;
        }
        list.children.push_back({"li", inl.parse_inline(content, 0)});
    }

    void table_row(std::string_view line) {
        close_paragraph();
        close_list();
        if (!table_open) {
            table = {"table", {}};
            table_open = true;
        }
        const std::vector<std::string_view> cells = table_cells(line);
        const bool header = table_rows_seen == 0;
        ++table_rows_seen;
        if (is_separator_row(cells)) return;  // syntax only, no nodes
        TreeNode tr{"tr", {}};
        for (std::string_view cell : cells) {
            tr.children.push_back({header ? "th" : "td", inl.parse_inline(cell, 0)});
        }
        table.children.push_back(std::move(tr));
    }

    void feed(std::string_view raw) {
        if (in_fence) {
            if (trim(raw).substr(0, 3) == "```") {
                close_fence();
            } else {
                if (!fence_first_line) fence_body += '\n';
                fence_body += raw;
                fence_first_line = false;
            }
            return;
        }
        const std::string_view line = trim(raw);
        if (line.empty()) {
            close_blocks();
            return;
        }
        if (line.substr(0, 3) == "```") {
            close_blocks();
            in_fence = true;
            return;
        }
        int level = 0;
        std::string_view rest;
        if (is_heading(line, level, rest)) {
            close_blocks();
            root.children.push_back(
                {"h" + std::to_string(level), inl.parse_inline(rest, 0)});
            return;
        }
        if (is_rule(line)) {
            close_blocks();
            root.children.push_back({"hr", {}});
            return;
        }
        if (is_bullet(line, rest)) {
            list_item("ul", rest);
            return;
        }
        if (is_ordered(line, rest)) {
            list_item("ol", rest);
            return;
        }
        if (line.front() == '|') {
            table_row(line);
            return;
        }
        close_list();
        close_table();
        paragraph.emplace_back(line);
    }

    MarkdownParse finish() {
        if (in_fence) {
            inl.diagnostics.push_back("unterminated code fence closed at end of input");
            close_fence();
        }
        close_blocks();
        return {DocTree{std::move(root)}, std::move(inl.diagnostics)};
    }
};

}  // namespace

MarkdownParse parse_markdown_ex(const MarkdownDocument& doc) {
    BlockParser parser;
    const std::string& src = doc.source();
    std::size_t start = 0;
    while (start <= src.size()) {
        const std::size_t end = src.find('\n', start);
        const std::size_t stop = end == std::string::npos ? src.size() : end;
        std::string_view line(src.data() + start, stop - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        parser.feed(line);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return parser.finish();
}

DocTree parse_markdown(const MarkdownDocument& doc) {
    return parse_markdown_ex(doc).tree;
}

}  // namespace litbench
