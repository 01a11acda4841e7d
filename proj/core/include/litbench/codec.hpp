#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litbench/page.hpp"
#include "litbench/sample.hpp"

namespace litbench {

// Location-token codec configuration. Each axis is split into `bins` equal
// cells; with the default 4096 the coordinate/box special vocabulary has
// 2*4096 + 2 = 8194 members.
struct CodecConfig {
    int bins = 4096;
};

// Box coordinates quantized to bin indices, each in [0, bins).
struct QuantizedBox {
    int x_tl = 0;
    int y_tl = 0;
    int x_br = 0;
    int y_br = 0;

    friend bool operator==(const QuantizedBox&, const QuantizedBox&) = default;
};

struct QuantizedLine {
    QuantizedBox box;
    std::string text;

    friend bool operator==(const QuantizedLine&, const QuantizedLine&) = default;
};

// One element of a model-facing token sequence: either a special drawn from
// the closed vocabulary (s, /s, image, /image, ocr, md, bbox, /bbox, x_i, y_j)
// or a span of literal text. Special names are stored without angle brackets.
struct Token {
    enum class Kind { special, text };

    Kind kind = Kind::text;
    std::string value;

    static Token special(std::string name) {
        return {Kind::special, std::move(name)};
    }
    static Token text(std::string content) {
        return {Kind::text, std::move(content)};
    }
    bool is_special(std::string_view name) const {
        return kind == Kind::special && value == name;
    }

    friend bool operator==(const Token&, const Token&) = default;
};

using TokenStream = std::vector<Token>;

// Coordinate-token helpers. coord_name('x', 52) == "x_52"; parse_coord_name
// returns the axis and bin for such names and nullopt for everything else.
std::string coord_name(char axis, int bin);
std::optional<std::pair<char, int>> parse_coord_name(std::string_view name);

// All 2L + 2 coordinate/box special names: x_0..x_{L-1}, y_0..y_{L-1}, bbox,
// /bbox. The task-frame specials (s, /s, image, /image, ocr, md) are not
// counted here.
std::vector<std::string> coordinate_specials(const CodecConfig& cfg);

QuantizedBox quantize(const BoundingBox& box, int page_w, int page_h,
                      const CodecConfig& cfg);
BoundingBox dequantize(const QuantizedBox& qbox, int page_w, int page_h,
                       const CodecConfig& cfg);

std::vector<QuantizedLine> quantize_lines(const PageDocument& doc,
                                          const CodecConfig& cfg);
PageDocument to_page(std::span<const QuantizedLine> lines, int page_w, int page_h,
                     const CodecConfig& cfg);

// Token-stream wire format: per line `bbox x_a y_b x_c y_d /bbox <text>` in
// reading order, then a closing /s.
TokenStream encode_layout(const PageDocument& doc, const CodecConfig& cfg);
PageDocument decode_layout(const TokenStream& stream, int page_w, int page_h,
                           const CodecConfig& cfg);

// Quantized-level variants of the same wire format. No page dimensions are
// involved, so decode followed by encode is byte-preserving; the round-trip
// tool works at this level. decode applies the same strict grammar and bin
// range checks as the page-level decoder.
TokenStream encode_layout(std::span<const QuantizedLine> lines);
std::vector<QuantizedLine> decode_layout(const TokenStream& stream,
                                         const CodecConfig& cfg);
std::string encode_bracketed(std::span<const QuantizedLine> lines);

// Lenient decoding for model output: unparseable regions are skipped and
// reported instead of aborting the run.
struct LenientLayout {
    PageDocument doc;
    std::vector<std::string> issues;
};
LenientLayout decode_layout_lenient(const TokenStream& stream, int page_w,
                                    int page_h, const CodecConfig& cfg);

// Bracketed text wire format, one physical line per text line:
// `[x_52] [y_113] [x_756] [y_145]: Hi`. The coordinate/text separator is
// ": " and the first such separator after the fourth bracket group wins, so
// text may itself contain colons.
std::string encode_bracketed(const PageDocument& doc, const CodecConfig& cfg);
std::vector<QuantizedLine> decode_bracketed(std::string_view text);

struct LenientBracketed {
    std::vector<QuantizedLine> lines;
    std::vector<std::string> issues;
};
LenientBracketed decode_bracketed_lenient(std::string_view text);

// Task prompt frame: [s, image, Text("Image Embedding"), /image, ocr|md].
TokenStream build_prompt(Task task);

// Debug serialization: JSON array of {"t": "special"|"text", "v": value}.
nlohmann::json tokens_to_json(const TokenStream& stream);
TokenStream tokens_from_json(const nlohmann::json& j);

}  // namespace litbench
