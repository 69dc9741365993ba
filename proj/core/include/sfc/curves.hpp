#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sfc {

/// Integer cell coordinate on a W x H grid. x is the column, y the row.
struct GridPoint {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Families of space-filling traversals. Hilbert, Morton and Zigzag are
/// defined on square grids of side 2^n (n >= 1); GeneralizedHilbert covers
/// any W >= 1, H >= 1 rectangle.
enum class CurveKind {
    Hilbert,
    Morton,
    Zigzag,
    GeneralizedHilbert,
};

const char* to_string(CurveKind kind);
std::optional<CurveKind> curve_from_string(std::string_view name);

/// Largest supported side exponent: indices stay below 2^62.
inline constexpr unsigned kMaxOrder = 31;

/// Cell visited at step d of the order-n Hilbert traversal of the
/// 2^n x 2^n grid. The traversal enters at (0,0) and exits at (2^n-1, 0);
/// consecutive steps are 4-adjacent.
GridPoint hilbert_d2xy(unsigned order, std::uint64_t d);

/// Inverse of hilbert_d2xy.
std::uint64_t hilbert_xy2d(unsigned order, GridPoint p);

/// Morton (Z-order) traversal: bit 2k of d is bit k of x, bit 2k+1 is bit k
/// of y. x owns the least-significant interleave lane.
GridPoint morton_d2xy(unsigned order, std::uint64_t d);
std::uint64_t morton_xy2d(unsigned order, GridPoint p);

/// Raster order: x = d mod 2^n, y = d div 2^n.
GridPoint zigzag_d2xy(unsigned order, std::uint64_t d);
std::uint64_t zigzag_xy2d(unsigned order, GridPoint p);

} // namespace sfc
