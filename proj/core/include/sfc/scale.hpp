#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/curves.hpp"

namespace sfc {

/// Exact rational in [0,1]; used for the fold parameters of scale traces.
struct Dyadic {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

/// Parses "P/Q" (or a bare integer P meaning P/1).
Dyadic parse_fraction(std::string_view text);

std::string to_string(const Dyadic& value);

/// Distances between the fold images of two fixed parameters across a
/// ladder of grid orders. distances[j] is the unit-square distance between
/// the cell centers of floor(t1*4^n) and floor(t2*4^n) at n = n_min + j;
/// ratios[j] = d_n / d_{n+1} (NaN where d_{n+1} is zero).
struct ScaleTrace {
    CurveKind kind = CurveKind::Hilbert;
    Dyadic t1;
    Dyadic t2;
    unsigned n_min = 1;
    unsigned n_max = 1;
    std::vector<double> distances;
    std::vector<double> ratios;
};

/// Both parameters must be representable as k/4^n_max.
ScaleTrace scale_trace(CurveKind kind, Dyadic t1, Dyadic t2, unsigned n_min, unsigned n_max);

/// Index of the cell containing parameter t at order n: floor(t * 4^n),
/// clamped to 4^n - 1.
std::uint64_t fold_index(Dyadic t, unsigned order);

/// Number of cells (x,y) of the 2^(n+1) grid where the order-(n+1) index
/// quartered disagrees with the order-n index of the parent cell:
/// xy2d(n+1,x,y) div 4 != xy2d(n, x div 2, y div 2). Zero means the curve
/// nests hierarchically across scales.
std::uint64_t hierarchy_check(CurveKind kind, unsigned order);

std::string to_json(const ScaleTrace& trace);

} // namespace sfc
