#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sfc/curves.hpp"
#include "sfc/toyset.hpp"

namespace sfc {

enum class DtwNormalize {
    None,     // raw accumulated cost
    PathMean, // cost divided by the optimal path's step count
};

/// Minimal accumulated |a_i - b_j| cost over monotone alignments matching
/// (0,0) to (|a|-1,|b|-1), step set {(1,0),(0,1),(1,1)}.
double dtw(std::span<const double> a, std::span<const double> b);

struct DtwAlignment {
    double cost = 0.0;
    std::uint64_t path_steps = 0; // cells on the optimal path, ties broken
                                  // toward shorter paths
};

DtwAlignment dtw_alignment(std::span<const double> a, std::span<const double> b);

/// One comparison column of the toy-shape study: two specs sharing a shape.
struct DtwComparison {
    ShapeScale scale_a;
    std::uint32_t res_a;
    ShapeScale scale_b;
    std::uint32_t res_b;
};

/// The six comparison columns, e.g. L32 vs S32, ..., L32 vs S128.
std::span<const DtwComparison> dtw_comparisons();

std::string comparison_label(const DtwComparison& comparison);

struct DtwCell {
    Shape shape;
    DtwComparison comparison;
    CurveKind curve;
    double cost = 0.0;
};

struct DtwTableResult {
    std::vector<Shape> shapes;
    std::vector<CurveKind> curves;
    DtwNormalize normalize = DtwNormalize::None;
    std::vector<DtwCell> cells; // shape-major, then comparison, then curve
};

/// Flattens each shape image at its native resolution with every curve and
/// computes the pairwise DTW costs for the six comparisons. Cells are
/// independent and computed in parallel; results are bit-identical for any
/// worker count.
DtwTableResult dtw_table(std::span<const CurveKind> curves,
                         DtwNormalize normalize = DtwNormalize::None);
DtwTableResult dtw_table(std::span<const CurveKind> curves, std::span<const Shape> shapes,
                         DtwNormalize normalize);

/// CSV with rows per shape and one column per comparison x curve.
void write_dtw_table_csv(const DtwTableResult& table, std::ostream& os);

} // namespace sfc
