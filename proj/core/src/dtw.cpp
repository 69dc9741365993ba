#include "sfc/dtw.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <ostream>

#include "sfc/errors.hpp"
#include "sfc/image.hpp"
#include "sfc/parallel.hpp"
#include "sfc/text.hpp"

namespace sfc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nonempty(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw domain_error("dtw: sequences must be nonempty");
    }
}

// (cost, steps) cell for the tie-broken alignment DP.
struct Cell {
    double cost = kInf;
    std::uint64_t steps = 0;
};

bool cell_less(const Cell& a, const Cell& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.steps < b.steps;
}

const std::array<DtwComparison, 6> kComparisons = {{
    {ShapeScale::Large, 32, ShapeScale::Small, 32},
    {ShapeScale::Large, 32, ShapeScale::Large, 64},
    {ShapeScale::Large, 64, ShapeScale::Small, 64},
    {ShapeScale::Large, 64, ShapeScale::Large, 128},
    {ShapeScale::Large, 128, ShapeScale::Small, 128},
    {ShapeScale::Large, 32, ShapeScale::Small, 128},
}};

unsigned side_exponent_of(std::uint32_t res) {
    unsigned n = 0;
    while ((std::uint32_t{1} << (n + 1)) <= res) ++n;
    return n;
}

std::vector<double> flatten_with(const GrayImage& img, CurveKind kind) {
    const unsigned order = side_exponent_of(img.width);
    std::vector<double> out;
    out.reserve(std::size_t{img.width} * img.height);
    const std::uint64_t n = std::uint64_t{img.width} * img.height;
    for (std::uint64_t d = 0; d < n; ++d) {
        GridPoint p{};
        switch (kind) {
            case CurveKind::Morton: p = morton_d2xy(order, d); break;
            case CurveKind::Zigzag: p = zigzag_d2xy(order, d); break;
            case CurveKind::Hilbert:
            case CurveKind::GeneralizedHilbert: p = hilbert_d2xy(order, d); break;
        }
        out.push_back(img.at(p.x, p.y));
    }
    return out;
}

} // namespace

double dtw(std::span<const double> a, std::span<const double> b) {
    check_nonempty(a, b);
    const std::size_t m = b.size();
    std::vector<double> prev(m + 1, kInf), cur(m + 1, kInf);
    prev[0] = 0.0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = kInf;
        const double ai = a[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            const double local = std::abs(ai - b[j - 1]);
            double best = prev[j - 1];
            if (prev[j] < best) best = prev[j];
            if (cur[j - 1] < best) best = cur[j - 1];
            cur[j] = local + best;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

DtwAlignment dtw_alignment(std::span<const double> a, std::span<const double> b) {
    check_nonempty(a, b);
    const std::size_t m = b.size();
    std::vector<Cell> prev(m + 1), cur(m + 1);
    prev[0] = {0.0, 0};
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = {kInf, 0};
        const double ai = a[i - 1];
        for (std::size_t j = 1; j <= m; ++j) {
            const double local = std::abs(ai - b[j - 1]);
            Cell best = prev[j - 1];
            if (cell_less(prev[j], best)) best = prev[j];
            if (cell_less(cur[j - 1], best)) best = cur[j - 1];
            cur[j] = {local + best.cost, best.steps + 1};
        }
        std::swap(prev, cur);
    }
    return {prev[m].cost, prev[m].steps};
}

std::span<const DtwComparison> dtw_comparisons() {
    return kComparisons;
}

std::string comparison_label(const DtwComparison& c) {
    return std::string(to_string(c.scale_a)) + std::to_string(c.res_a) + "v" +
           to_string(c.scale_b) + std::to_string(c.res_b);
}

DtwTableResult dtw_table(std::span<const CurveKind> curves, DtwNormalize normalize) {
    const std::array<Shape, 3> shapes = {Shape::Circle, Shape::Square, Shape::Triangle};
    return dtw_table(curves, shapes, normalize);
}

DtwTableResult dtw_table(std::span<const CurveKind> curves, std::span<const Shape> shapes,
                         DtwNormalize normalize) {
    if (curves.empty()) {
        throw domain_error("dtw_table: curve list is empty");
    }
    if (shapes.empty()) {
        throw domain_error("dtw_table: shape list is empty");
    }
    DtwTableResult table;
    table.shapes.assign(shapes.begin(), shapes.end());
    table.curves.assign(curves.begin(), curves.end());
    table.normalize = normalize;

    for (const Shape shape : shapes) {
        for (const DtwComparison& comparison : kComparisons) {
            for (const CurveKind curve : curves) {
                table.cells.push_back({shape, comparison, curve, 0.0});
            }
        }
    }

    parallel_for_blocks(0, table.cells.size(), thread_count(),
                        [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            DtwCell& cell = table.cells[i];
            const GrayImage img_a =
                generate_shape({cell.shape, cell.comparison.scale_a, cell.comparison.res_a});
            const GrayImage img_b =
                generate_shape({cell.shape, cell.comparison.scale_b, cell.comparison.res_b});
            const std::vector<double> seq_a = flatten_with(img_a, cell.curve);
            const std::vector<double> seq_b = flatten_with(img_b, cell.curve);
            if (normalize == DtwNormalize::PathMean) {
                const DtwAlignment al = dtw_alignment(seq_a, seq_b);
                cell.cost = al.cost / static_cast<double>(al.path_steps);
            } else {
                cell.cost = dtw(seq_a, seq_b);
            }
        }
    });
    return table;
}

void write_dtw_table_csv(const DtwTableResult& table, std::ostream& os) {
    os << "shape";
    for (const DtwComparison& comparison : kComparisons) {
        for (const CurveKind curve : table.curves) {
            os << ',' << comparison_label(comparison) << '_' << to_string(curve);
        }
    }
    os << '\n';
    std::size_t idx = 0;
    for (const Shape shape : table.shapes) {
        os << to_string(shape);
        for (std::size_t c = 0; c < kComparisons.size() * table.curves.size(); ++c) {
            os << ',' << format_double(table.cells[idx++].cost);
        }
        os << '\n';
    }
}

} // namespace sfc
