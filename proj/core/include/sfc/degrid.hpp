#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sfc/curve_map.hpp"

namespace sfc {

/// Per-position grid-structure deformation of a flattened sequence.
/// values[i] is the mean 2-D distance, in cell-length units, from the cell
/// at sequence position i to the cells of its surviving sequence neighbors
/// within k_radius steps. Positions near the sequence ends use only the
/// neighbors that exist.
struct DeGridField {
    CurveKind kind = CurveKind::Zigzag;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    unsigned k_radius = 1;
    bool squared = false;
    std::vector<double> values;
};

/// squared=true averages squared distances instead of distances.
DeGridField degrid(const CurveMap& map, unsigned k_radius, bool squared = false);

struct PreservationRow {
    double epsilon = 0.0;
    double percent = 0.0;
};

/// percent(eps) = 100 * |{i : values[i] <= eps}| / N for each threshold.
std::vector<PreservationRow> preservation_sweep(const DeGridField& field,
                                                std::span<const double> thresholds);

/// 64 log-spaced thresholds spanning [vmin*0.99, vmax*1.01], so a sweep
/// over them brackets 0% and 100%.
std::vector<double> default_thresholds(double vmin, double vmax, std::size_t steps = 64);

/// CSV "position,x,y,degrid".
void write_degrid_csv(const DeGridField& field, const CurveMap& map, std::ostream& os);

/// ASCII PGM heatmap over the grid: pixel at forward(i) is
/// round(255 * values[i] / max(values)).
void write_degrid_pgm(const DeGridField& field, const CurveMap& map, std::ostream& os);

/// CSV "epsilon,hf_pct,mf_pct,zf_pct": one row per threshold, percentages
/// for the Hilbert, Morton and Zigzag fields.
void write_preservation_csv(std::span<const double> thresholds,
                            const DeGridField& hilbert_field,
                            const DeGridField& morton_field,
                            const DeGridField& zigzag_field, std::ostream& os);

} // namespace sfc
