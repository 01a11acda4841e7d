#include "litbench/page.hpp"

#include <stdexcept>

#include "litbench/unicode.hpp"

namespace litbench {

std::vector<Violation> validate_page(const PageDocument& page) {
    std::vector<Violation> out;
    if (page.width <= 0) {
        out.push_back({std::nullopt, "page.width", "width must be positive"});
    }
    if (page.height <= 0) {
        out.push_back({std::nullopt, "page.height", "height must be positive"});
    }
    for (std::size_t i = 0; i < page.lines.size(); ++i) {
        const TextLine& line = page.lines[i];
        if (line.text.find('\n') != std::string::npos) {
            out.push_back({i, "line.text", "text contains a newline"});
        }
        if (!line.bbox) continue;
        const BoundingBox& b = *line.bbox;
        if (!b.well_formed()) {
            out.push_back({i, "bbox.order",
                           "corners must satisfy 0 <= top-left <= bottom-right"});
            continue;  // placement checks assume an ordered box
        }
        if (page.width > 0 && page.height > 0 &&
            (b.x_br > page.width || b.y_br > page.height)) {
            out.push_back({i, "bbox.bounds", "box extends past the page edge"});
        }
    }
    return out;
}

MarkdownDocument::MarkdownDocument(std::string_view raw) {
    if (!uni::valid_utf8(raw)) {
        throw std::invalid_argument("markdown source is not valid utf-8");
    }
    source_ = uni::nfc(raw);
}

}  // namespace litbench
