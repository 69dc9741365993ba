#include "sfc/gilbert.hpp"

#include <cstdlib>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

int sgn(std::int64_t v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Recursive half-splitting over an oriented frame: the region starts at
// (x,y), extends along the major vector (ax,ay) and the minor vector
// (bx,by), and is traversed from the (x,y) corner to the far corner of the
// major axis. Wide regions split along the major axis; otherwise the region
// is covered by a rotated head, a straight body and a rotated tail. Split
// lengths are kept even so the three parts stay connectable.
void generate(std::int64_t x, std::int64_t y,
              std::int64_t ax, std::int64_t ay,
              std::int64_t bx, std::int64_t by,
              std::vector<GridPoint>& out) {
    const std::int64_t w = std::llabs(ax + ay);
    const std::int64_t h = std::llabs(bx + by);
    const int dax = sgn(ax), day = sgn(ay);
    const int dbx = sgn(bx), dby = sgn(by);

    if (h == 1) {
        for (std::int64_t i = 0; i < w; ++i) {
            out.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
            x += dax;
            y += day;
        }
        return;
    }
    if (w == 1) {
        for (std::int64_t i = 0; i < h; ++i) {
            out.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
            x += dbx;
            y += dby;
        }
        return;
    }

    std::int64_t ax2 = ax / 2, ay2 = ay / 2;
    std::int64_t bx2 = bx / 2, by2 = by / 2;
    const std::int64_t w2 = std::llabs(ax2 + ay2);
    const std::int64_t h2 = std::llabs(bx2 + by2);

    if (2 * w > 3 * h) {
        if ((w2 % 2) && (w > 2)) {
            ax2 += dax;
            ay2 += day;
        }
        generate(x, y, ax2, ay2, bx, by, out);
        generate(x + ax2, y + ay2, ax - ax2, ay - ay2, bx, by, out);
    } else {
        if ((h2 % 2) && (h > 2)) {
            bx2 += dbx;
            by2 += dby;
        }
        generate(x, y, bx2, by2, ax2, ay2, out);
        generate(x + bx2, y + by2, ax, ay, bx - bx2, by - by2, out);
        generate(x + (ax - dax) + (bx2 - dbx), y + (ay - day) + (by2 - dby),
                 -bx2, -by2, -(ax - ax2), -(ay - ay2), out);
    }
}

} // namespace

std::vector<GridPoint> gilbert_traversal(std::uint32_t width, std::uint32_t height) {
    if (width < 1 || height < 1) {
        throw domain_error("gilbert_traversal: dimensions must be >= 1 (got " +
                           std::to_string(width) + "x" + std::to_string(height) + ")");
    }
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(width) * height);

    // A corner-to-corner unit-step path exists iff the major side is even,
    // or both sides are odd. Pick the major axis accordingly; ties go to
    // the longer side so runs follow the long axis.
    const std::int64_t w = width, h = height;
    bool horizontal;
    if (w >= h) {
        horizontal = !(w % 2 == 1 && h % 2 == 0);
    } else {
        horizontal = (h % 2 == 1 && w % 2 == 0);
    }
    if (horizontal) {
        generate(0, 0, w, 0, 0, h, out);
    } else {
        generate(0, 0, 0, h, w, 0, out);
    }
    return out;
}

} // namespace sfc
