#pragma once

#include <algorithm>
#include <cstdint>

namespace litbench {

// Axis-aligned box in integer pixel coordinates, top-left origin.
// Well-formed means 0 <= x_tl <= x_br and 0 <= y_tl <= y_br; a zero-width or
// zero-height box is legal and has zero area.
struct BoundingBox {
    int x_tl = 0;
    int y_tl = 0;
    int x_br = 0;
    int y_br = 0;

    bool well_formed() const {
        return x_tl >= 0 && y_tl >= 0 && x_tl <= x_br && y_tl <= y_br;
    }

    std::int64_t width() const { return std::int64_t{x_br} - x_tl; }
    std::int64_t height() const { return std::int64_t{y_br} - y_tl; }
    std::int64_t area() const { return width() * height(); }

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

inline std::int64_t intersection_area(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t w =
        std::min(a.x_br, b.x_br) - std::int64_t{std::max(a.x_tl, b.x_tl)};
    const std::int64_t h =
        std::min(a.y_br, b.y_br) - std::int64_t{std::max(a.y_tl, b.y_tl)};
    if (w <= 0 || h <= 0) return 0;
    return w * h;
}

inline std::int64_t union_area(const BoundingBox& a, const BoundingBox& b) {
    return a.area() + b.area() - intersection_area(a, b);
}

}  // namespace litbench
