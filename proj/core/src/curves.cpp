#include "sfc/curves.hpp"

#include "sfc/errors.hpp"

namespace sfc {
namespace {

void check_order(const char* op, unsigned order) {
    if (order < 1 || order > kMaxOrder) {
        throw domain_error(std::string(op) + ": order n=" + std::to_string(order) +
                           " outside supported range [1, " + std::to_string(kMaxOrder) + "]");
    }
}

void check_index(const char* op, unsigned order, std::uint64_t d) {
    const std::uint64_t n_cells = std::uint64_t{1} << (2 * order);
    if (d >= n_cells) {
        throw domain_error(std::string(op) + ": d=" + std::to_string(d) +
                           " out of range [0, " + std::to_string(n_cells) +
                           ") for order n=" + std::to_string(order));
    }
}

void check_point(const char* op, unsigned order, GridPoint p) {
    const std::uint64_t side = std::uint64_t{1} << order;
    if (p.x >= side || p.y >= side) {
        throw domain_error(std::string(op) + ": cell (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ") outside the " + std::to_string(side) +
                           "x" + std::to_string(side) + " grid of order n=" +
                           std::to_string(order));
    }
}

// Rotate/reflect a quadrant of side s into curve-local frame.
void hilbert_rot(std::uint64_t s, std::uint64_t& x, std::uint64_t& y,
                 std::uint64_t rx, std::uint64_t ry) {
    if (ry == 0) {
        if (rx == 1) {
            x = s - 1 - x;
            y = s - 1 - y;
        }
        std::swap(x, y);
    }
}

// Spread the low 32 bits of v so bit k lands at position 2k.
std::uint64_t spread_bits(std::uint64_t v) {
    v &= 0xffffffffULL;
    v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
    v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & 0x5555555555555555ULL;
    return v;
}

// Inverse of spread_bits: collect the even-position bits of v.
std::uint64_t compact_bits(std::uint64_t v) {
    v &= 0x5555555555555555ULL;
    v = (v | (v >> 1)) & 0x3333333333333333ULL;
    v = (v | (v >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v >> 4)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v >> 8)) & 0x0000ffff0000ffffULL;
    v = (v | (v >> 16)) & 0x00000000ffffffffULL;
    return v;
}

} // namespace

const char* to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Hilbert: return "hilbert";
        case CurveKind::Morton: return "morton";
        case CurveKind::Zigzag: return "zigzag";
        case CurveKind::GeneralizedHilbert: return "ghilbert";
    }
    return "?";
}

std::optional<CurveKind> curve_from_string(std::string_view name) {
    if (name == "hilbert") return CurveKind::Hilbert;
    if (name == "morton") return CurveKind::Morton;
    if (name == "zigzag") return CurveKind::Zigzag;
    if (name == "ghilbert") return CurveKind::GeneralizedHilbert;
    return std::nullopt;
}

GridPoint hilbert_d2xy(unsigned order, std::uint64_t d) {
    check_order("hilbert_d2xy", order);
    check_index("hilbert_d2xy", order, d);
    const std::uint64_t side = std::uint64_t{1} << order;
    std::uint64_t x = 0, y = 0, t = d;
    for (std::uint64_t s = 1; s < side; s <<= 1) {
        const std::uint64_t rx = 1 & (t >> 1);
        const std::uint64_t ry = 1 & (t ^ rx);
        hilbert_rot(s, x, y, rx, ry);
        x += s * rx;
        y += s * ry;
        t >>= 2;
    }
    return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

std::uint64_t hilbert_xy2d(unsigned order, GridPoint p) {
    check_order("hilbert_xy2d", order);
    check_point("hilbert_xy2d", order, p);
    const std::uint64_t side = std::uint64_t{1} << order;
    std::uint64_t x = p.x, y = p.y, d = 0;
    for (std::uint64_t s = side >> 1; s > 0; s >>= 1) {
        const std::uint64_t rx = (x & s) ? 1 : 0;
        const std::uint64_t ry = (y & s) ? 1 : 0;
        d += s * s * ((3 * rx) ^ ry);
        hilbert_rot(s, x, y, rx, ry);
    }
    return d;
}

GridPoint morton_d2xy(unsigned order, std::uint64_t d) {
    check_order("morton_d2xy", order);
    check_index("morton_d2xy", order, d);
    return {static_cast<std::uint32_t>(compact_bits(d)),
            static_cast<std::uint32_t>(compact_bits(d >> 1))};
}

std::uint64_t morton_xy2d(unsigned order, GridPoint p) {
    check_order("morton_xy2d", order);
    check_point("morton_xy2d", order, p);
    return spread_bits(p.x) | (spread_bits(p.y) << 1);
}

GridPoint zigzag_d2xy(unsigned order, std::uint64_t d) {
    check_order("zigzag_d2xy", order);
    check_index("zigzag_d2xy", order, d);
    const std::uint64_t side = std::uint64_t{1} << order;
    return {static_cast<std::uint32_t>(d % side), static_cast<std::uint32_t>(d / side)};
}

std::uint64_t zigzag_xy2d(unsigned order, GridPoint p) {
    check_order("zigzag_xy2d", order);
    check_point("zigzag_xy2d", order, p);
    return std::uint64_t{p.y} * (std::uint64_t{1} << order) + p.x;
}

} // namespace sfc
