#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sfc/curves.hpp"

namespace sfc {

/// Materialized bijection between sequence indices and grid cells.
/// forward[d] is the cell visited at step d; inverse[y*width + x] recovers
/// the step. Immutable once built; safe for concurrent readers.
struct CurveMap {
    CurveKind kind = CurveKind::Zigzag;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<GridPoint> forward;
    std::vector<std::uint64_t> inverse;

    std::uint64_t size() const { return forward.size(); }

    GridPoint cell_of(std::uint64_t d) const;
    std::uint64_t index_of(GridPoint p) const;
};

/// Materializes and validates a CurveMap. Hilbert/Morton/Zigzag require a
/// square power-of-two grid (side >= 2); GeneralizedHilbert accepts any
/// W >= 1, H >= 1.
CurveMap build_map(CurveKind kind, std::uint32_t width, std::uint32_t height);

/// Hilbert-style map for an arbitrary rectangle.
CurveMap generalized_hilbert(std::uint32_t width, std::uint32_t height);

/// Permutation feeding patches to token slots: slot k receives the patch at
/// raster index result[k], following the (generalized) Hilbert traversal of
/// the patch grid.
std::vector<std::uint64_t> patch_order(std::uint32_t grid_w, std::uint32_t grid_h);

/// CSV with header "d,x,y", one row per step in ascending d.
void write_curve_map_csv(const CurveMap& map, std::ostream& os);

/// CSV with header "slot,raster_index".
void write_patch_order_csv(std::span<const std::uint64_t> order, std::ostream& os);

} // namespace sfc
