#pragma once

#include <cstdint>
#include <string>

#include "sfc/curve_map.hpp"

namespace sfc {

enum class DilationMode {
    AllPairs,     // every index pair; permitted for order <= 5
    AdjacentOnly, // consecutive index pairs (d, d+1)
};

const char* to_string(DilationMode mode);

/// Empirical square-to-linear dilation of a curve: the maximum over sampled
/// index pairs of ||p(d1) - p(d2)||^2 / (|d1 - d2| / 4^n), with p(d) the
/// unit-square cell center ((x+0.5)/2^n, (y+0.5)/2^n). The maximizing pair
/// is reported with lexicographic tie-breaking, so results are
/// deterministic for any worker count.
struct DilationReport {
    CurveKind kind = CurveKind::Zigzag;
    unsigned order = 0;
    DilationMode mode = DilationMode::AllPairs;
    double empirical_max = 0.0;
    std::uint64_t argmax_d1 = 0;
    std::uint64_t argmax_d2 = 0;
    double theoretical_bound = 0.0;
    std::string notes;
};

DilationReport dilation(const CurveMap& map, DilationMode mode);

std::string to_json(const DilationReport& report);

} // namespace sfc
