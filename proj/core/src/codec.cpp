#include "litbench/codec.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "litbench/errors.hpp"
#include "litbench/unicode.hpp"

namespace litbench {

namespace {

void check_cfg(const CodecConfig& cfg) {
    if (cfg.bins < 1) throw std::invalid_argument("codec bin count must be >= 1");
}

void check_page_dims(int page_w, int page_h) {
    if (page_w <= 0 || page_h <= 0) {
        throw std::invalid_argument("page dimensions must be positive");
    }
}

int quantize_coord(int v, int dim, int bins) {
    const auto bin = static_cast<long long>(v) * bins / dim;
    return static_cast<int>(std::min<long long>(bin, bins - 1));
}

// Maps a bin to the first pixel at or past its left edge. Rounding up rather
// than down is what makes quantize(dequantize(b)) == b hold for every bin on
// pages at least `bins` wide, and keeps every on-page pixel's round trip
// strictly within one cell.
int dequantize_coord(int bin, int dim, int bins) {
    const auto num = static_cast<long long>(bin) * dim;
    return static_cast<int>((num + bins - 1) / bins);
}

void check_encodable(const PageDocument& doc) {
    const std::vector<Violation> violations = validate_page(doc);
    if (!violations.empty()) {
        throw std::invalid_argument("page fails validation: " +
                                    violations.front().rule);
    }
}

[[noreturn]] void fail_token(std::size_t offset, const std::string& what) {
    throw ParseError("token " + std::to_string(offset) + ": " + what, offset);
}

std::string describe(const Token& t) {
    if (t.kind == Token::Kind::text) return "text";
    return "<" + t.value + ">";
}

bool is_frame_special(std::string_view name) {
    return name == "s" || name == "/s" || name == "image" || name == "/image" ||
           name == "ocr" || name == "md" || name == "bbox" || name == "/bbox";
}

// Reads the coordinate special for `axis` at stream[i], advancing i.
int expect_coord(const TokenStream& s, std::size_t& i, char axis,
                 const CodecConfig& cfg) {
    const std::string want = std::string("<") + axis + "_i>";
    if (i >= s.size()) fail_token(i, "stream ended, expected " + want);
    const Token& t = s[i];
    if (t.kind != Token::Kind::special) {
        fail_token(i, "expected " + want + ", got text");
    }
    const auto coord = parse_coord_name(t.value);
    if (!coord || coord->first != axis) {
        fail_token(i, "expected " + want + ", got " + describe(t));
    }
    if (coord->second >= cfg.bins) {
        fail_token(i, "coordinate bin " + std::to_string(coord->second) +
                          " outside [0, " + std::to_string(cfg.bins) + ")");
    }
    ++i;
    return coord->second;
}

// Parses one `bbox ... /bbox text` block starting at stream[i] (which must be
// <bbox>), advancing i past the block.
QuantizedLine parse_block(const TokenStream& s, std::size_t& i,
                          const CodecConfig& cfg) {
    ++i;  // consume <bbox>
    QuantizedLine line;
    line.box.x_tl = expect_coord(s, i, 'x', cfg);
    line.box.y_tl = expect_coord(s, i, 'y', cfg);
    const std::size_t x_br_at = i;
    line.box.x_br = expect_coord(s, i, 'x', cfg);
    const std::size_t y_br_at = i;
    line.box.y_br = expect_coord(s, i, 'y', cfg);
    if (line.box.x_br < line.box.x_tl) fail_token(x_br_at, "box bins out of order");
    if (line.box.y_br < line.box.y_tl) fail_token(y_br_at, "box bins out of order");
    if (i >= s.size()) fail_token(i, "stream ended, expected </bbox>");
    if (!s[i].is_special("/bbox")) {
        fail_token(i, "expected </bbox>, got " + describe(s[i]));
    }
    ++i;
    if (i >= s.size()) fail_token(i, "stream ended, expected line text");
    if (s[i].kind != Token::Kind::text) {
        fail_token(i, "expected line text, got " + describe(s[i]));
    }
    line.text = s[i].value;
    ++i;
    return line;
}

std::size_t skip_to_resync(const TokenStream& s, std::size_t from) {
    while (from < s.size() && !s[from].is_special("bbox") &&
           !s[from].is_special("/s")) {
        ++from;
    }
    return from;
}

TextLine to_text_line(const QuantizedLine& q, int page_w, int page_h,
                      const CodecConfig& cfg) {
    return {uni::nfc(q.text), dequantize(q.box, page_w, page_h, cfg)};
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

// Parses `[x_A] [y_B] [x_C] [y_D]: text`. Text may be empty and may itself
// contain ": "; the separator match right after the fourth group wins.
QuantizedLine parse_bracketed_line(std::string_view s, std::size_t line_no) {
    std::size_t pos = 0;
    const auto expect = [&](char c, const char* what) {
        if (pos >= s.size() || s[pos] != c) {
            fail_line(line_no, std::string("expected ") + what + " at column " +
                                   std::to_string(pos + 1));
        }
        ++pos;
    };
    const auto group = [&](char axis) {
        expect('[', "'['");
        expect(axis, axis == 'x' ? "'x'" : "'y'");
        expect('_', "'_'");
        const std::size_t digits = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == digits) fail_line(line_no, "expected bin digits");
        if (pos - digits > 9) fail_line(line_no, "bin index too large");
        int value = 0;
        std::from_chars(s.data() + digits, s.data() + pos, value);
        expect(']', "']'");
        return value;
    };

    QuantizedLine line;
    line.box.x_tl = group('x');
    expect(' ', "' '");
    line.box.y_tl = group('y');
    expect(' ', "' '");
    line.box.x_br = group('x');
    expect(' ', "' '");
    line.box.y_br = group('y');
    expect(':', "':'");
    expect(' ', "' '");
    if (line.box.x_br < line.box.x_tl || line.box.y_br < line.box.y_tl) {
        fail_line(line_no, "box bins out of order");
    }
    line.text = std::string(s.substr(pos));
    if (line.text.find('\n') != std::string::npos) {
        fail_line(line_no, "text contains a newline");
    }
    return line;
}

template <typename PerLine>
void for_each_bracketed_line(std::string_view text, PerLine&& per_line) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        const std::size_t stop = end == std::string_view::npos ? text.size() : end;
        ++line_no;
        std::string_view line = text.substr(start, stop - start);
        if (!line.empty()) per_line(line, line_no);
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
}

}  // namespace

std::string coord_name(char axis, int bin) {
    return std::string(1, axis) + "_" + std::to_string(bin);
}

std::optional<std::pair<char, int>> parse_coord_name(std::string_view name) {
    if (name.size() < 3 || (name[0] != 'x' && name[0] != 'y') || name[1] != '_') {
        return std::nullopt;
    }
    const std::string_view digits = name.substr(2);
    if (digits.size() > 9) return std::nullopt;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return std::make_pair(name[0], value);
}

std::vector<std::string> coordinate_specials(const CodecConfig& cfg) {
    check_cfg(cfg);
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(cfg.bins) * 2 + 2);
    for (int i = 0; i < cfg.bins; ++i) out.push_back(coord_name('x', i));
    for (int i = 0; i < cfg.bins; ++i) out.push_back(coord_name('y', i));
    out.push_back("bbox");
    out.push_back("/bbox");
    return out;
}

QuantizedBox quantize(const BoundingBox& box, int page_w, int page_h,
                      const CodecConfig& cfg) {
    check_cfg(cfg);
    check_page_dims(page_w, page_h);
    if (!box.well_formed()) {
        throw std::invalid_argument("box corners out of order");
    }
    if (box.x_br > page_w || box.y_br > page_h) {
        throw std::out_of_range("box extends past the page edge");
    }
    return {quantize_coord(box.x_tl, page_w, cfg.bins),
            quantize_coord(box.y_tl, page_h, cfg.bins),
            quantize_coord(box.x_br, page_w, cfg.bins),
            quantize_coord(box.y_br, page_h, cfg.bins)};
}

BoundingBox dequantize(const QuantizedBox& qbox, int page_w, int page_h,
                       const CodecConfig& cfg) {
    check_cfg(cfg);
    check_page_dims(page_w, page_h);
    const auto check_bin = [&](int bin) {
        if (bin < 0 || bin >= cfg.bins) {
            throw std::out_of_range("bin index " + std::to_string(bin) +
                                    " outside [0, " + std::to_string(cfg.bins) +
                                    ")");
        }
    };
    check_bin(qbox.x_tl);
    check_bin(qbox.y_tl);
    check_bin(qbox.x_br);
    check_bin(qbox.y_br);
    if (qbox.x_br < qbox.x_tl || qbox.y_br < qbox.y_tl) {
        throw std::invalid_argument("box bins out of order");
    }
    return {dequantize_coord(qbox.x_tl, page_w, cfg.bins),
            dequantize_coord(qbox.y_tl, page_h, cfg.bins),
            dequantize_coord(qbox.x_br, page_w, cfg.bins),
            dequantize_coord(qbox.y_br, page_h, cfg.bins)};
}

std::vector<QuantizedLine> quantize_lines(const PageDocument& doc,
                                          const CodecConfig& cfg) {
    check_encodable(doc);
    check_page_dims(doc.width, doc.height);
    std::vector<QuantizedLine> out;
    out.reserve(doc.lines.size());
    for (std::size_t n = 0; n < doc.lines.size(); ++n) {
        const TextLine& line = doc.lines[n];
        if (!line.bbox) {
            throw std::invalid_argument("line " + std::to_string(n) +
                                        " has no bounding box");
        }
        out.push_back({quantize(*line.bbox, doc.width, doc.height, cfg), line.text});
    }
    return out;
}

PageDocument to_page(std::span<const QuantizedLine> lines, int page_w, int page_h,
                     const CodecConfig& cfg) {
    PageDocument doc;
    doc.width = page_w;
    doc.height = page_h;
    doc.lines.reserve(lines.size());
    for (const QuantizedLine& q : lines) {
        doc.lines.push_back(to_text_line(q, page_w, page_h, cfg));
    }
    return doc;
}

TokenStream encode_layout(const PageDocument& doc, const CodecConfig& cfg) {
    return encode_layout(std::span<const QuantizedLine>(quantize_lines(doc, cfg)));
}

TokenStream encode_layout(std::span<const QuantizedLine> lines) {
    TokenStream out;
    out.reserve(lines.size() * 7 + 1);
    for (const QuantizedLine& q : lines) {
        out.push_back(Token::special("bbox"));
        out.push_back(Token::special(coord_name('x', q.box.x_tl)));
        out.push_back(Token::special(coord_name('y', q.box.y_tl)));
        out.push_back(Token::special(coord_name('x', q.box.x_br)));
        out.push_back(Token::special(coord_name('y', q.box.y_br)));
        out.push_back(Token::special("/bbox"));
        out.push_back(Token::text(q.text));
    }
    out.push_back(Token::special("/s"));
    return out;
}

PageDocument decode_layout(const TokenStream& stream, int page_w, int page_h,
                           const CodecConfig& cfg) {
    check_page_dims(page_w, page_h);
    return to_page(decode_layout(stream, cfg), page_w, page_h, cfg);
}

std::vector<QuantizedLine> decode_layout(const TokenStream& stream,
                                         const CodecConfig& cfg) {
    check_cfg(cfg);
    std::vector<QuantizedLine> lines;
    std::size_t i = 0;
    while (i < stream.size() && stream[i].is_special("bbox")) {
        lines.push_back(parse_block(stream, i, cfg));
    }
    if (i >= stream.size()) fail_token(i, "stream ended without </s>");
    if (!stream[i].is_special("/s")) {
        if (stream[i].kind == Token::Kind::text) {
            fail_token(i, "text token outside a line block");
        }
        fail_token(i, "expected <bbox> or </s>, got " + describe(stream[i]));
    }
    ++i;
    if (i != stream.size()) fail_token(i, "unexpected token after </s>");
    return lines;
}

LenientLayout decode_layout_lenient(const TokenStream& stream, int page_w,
                                    int page_h, const CodecConfig& cfg) {
    check_cfg(cfg);
    check_page_dims(page_w, page_h);
    LenientLayout out;
    out.doc.width = page_w;
    out.doc.height = page_h;
    std::size_t i = 0;
    bool closed = false;
    while (i < stream.size()) {
        if (stream[i].is_special("/s")) {
            if (i + 1 < stream.size()) {
                out.issues.push_back("token " + std::to_string(i + 1) +
                                     ": trailing tokens after </s> ignored");
            }
            closed = true;
            break;
        }
        if (stream[i].is_special("bbox")) {
            std::size_t j = i;
            try {
                const QuantizedLine q = parse_block(stream, j, cfg);
                out.doc.lines.push_back(to_text_line(q, page_w, page_h, cfg));
                i = j;
                continue;
            } catch (const ParseError& e) {
                out.issues.push_back(std::string("dropped block: ") + e.what());
                i = skip_to_resync(stream, i + 1);
                continue;
            }
        }
        out.issues.push_back("token " + std::to_string(i) + ": stray " +
                             describe(stream[i]) + " outside a line block");
        i = skip_to_resync(stream, i + 1);
    }
    if (!closed) out.issues.push_back("stream ended without </s>");
    return out;
}

std::string encode_bracketed(const PageDocument& doc, const CodecConfig& cfg) {
    return encode_bracketed(std::span<const QuantizedLine>(quantize_lines(doc, cfg)));
}

std::string encode_bracketed(std::span<const QuantizedLine> lines) {
    std::string out;
    for (const QuantizedLine& q : lines) {
        out += '[' + coord_name('x', q.box.x_tl) + "] [" +
               coord_name('y', q.box.y_tl) + "] [" + coord_name('x', q.box.x_br) +
               "] [" + coord_name('y', q.box.y_br) + "]: " + q.text + "\n";
    }
    return out;
}

std::vector<QuantizedLine> decode_bracketed(std::string_view text) {
    std::vector<QuantizedLine> out;
    for_each_bracketed_line(text, [&](std::string_view line, std::size_t line_no) {
        out.push_back(parse_bracketed_line(line, line_no));
    });
    return out;
}

LenientBracketed decode_bracketed_lenient(std::string_view text) {
    LenientBracketed out;
    for_each_bracketed_line(text, [&](std::string_view line, std::size_t line_no) {
        try {
            out.lines.push_back(parse_bracketed_line(line, line_no));
        } catch (const ParseError& e) {
            out.issues.push_back(std::string("dropped line: ") + e.what());
        }
    });
    return out;
}

TokenStream build_prompt(Task task) {
    return {Token::special("s"), Token::special("image"),
            Token::text("Image Embedding"), Token::special("/image"),
            Token::special(task == Task::ocr ? "ocr" : "md")};
}

nlohmann::json tokens_to_json(const TokenStream& stream) {
    nlohmann::json out = nlohmann::json::array();
    for (const Token& t : stream) {
        out.push_back({{"t", t.kind == Token::Kind::special ? "special" : "text"},
                       {"v", t.value}});
    }
    return out;
}

TokenStream tokens_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("token 0: expected a JSON array", 0);
    TokenStream out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const nlohmann::json& e = j[i];
        if (!e.is_object() || !e.contains("t") || !e.contains("v") ||
            !e.at("t").is_string() || !e.at("v").is_string()) {
            fail_token(i, "expected {\"t\": ..., \"v\": ...}");
        }
        const std::string kind = e.at("t").get<std::string>();
        std::string value = e.at("v").get<std::string>();
        if (kind == "text") {
            out.push_back(Token::text(std::move(value)));
        } else if (kind == "special") {
            if (!is_frame_special(value) && !parse_coord_name(value)) {
                fail_token(i, "unknown special token <" + value + ">");
            }
            out.push_back(Token::special(std::move(value)));
        } else {
            fail_token(i, "token kind must be \"special\" or \"text\"");
        }
    }
    return out;
}

}  // namespace litbench
