// Test-only reference implementations, kept deliberately independent of the
// library's codecs: the Hilbert oracle expands quadrants recursively, the
// Morton oracle walks digits, the Zigzag oracle fills nested loops, the DTW
// oracle enumerates alignments, and the DeGrid oracle is the definition
// verbatim.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "sfc/curve_map.hpp"
#include "sfc/curves.hpp"

namespace sfc::test {

// Order-n Hilbert traversal by explicit recursive expansion: the order-1
// cup (0,0),(0,1),(1,1),(1,0), then per order a transposed copy, two
// shifted copies and an anti-transposed copy.
inline std::vector<GridPoint> hilbert_oracle(unsigned order) {
    std::vector<GridPoint> curve = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    for (unsigned n = 2; n <= order; ++n) {
        const std::uint32_t h = std::uint32_t{1} << (n - 1);
        std::vector<GridPoint> next;
        next.reserve(curve.size() * 4);
        for (const GridPoint p : curve) next.push_back({p.y, p.x});
        for (const GridPoint p : curve) next.push_back({p.x, p.y + h});
        for (const GridPoint p : curve) next.push_back({p.x + h, p.y + h});
        for (const GridPoint p : curve) next.push_back({2 * h - 1 - p.y, h - 1 - p.x});
        curve = std::move(next);
    }
    if (order < 1) curve.clear();
    return curve;
}

// Digit-by-digit interleave: base-4 digit k of d supplies bit k of x (low
// bit) and bit k of y (high bit).
inline GridPoint morton_oracle(unsigned order, std::uint64_t d) {
    std::uint32_t x = 0, y = 0;
    for (unsigned k = 0; k < order; ++k) {
        const std::uint64_t digit = (d >> (2 * k)) & 3;
        x |= static_cast<std::uint32_t>(digit & 1) << k;
        y |= static_cast<std::uint32_t>((digit >> 1) & 1) << k;
    }
    return {x, y};
}

inline std::vector<GridPoint> zigzag_oracle(unsigned order) {
    const std::uint32_t side = std::uint32_t{1} << order;
    std::vector<GridPoint> out;
    out.reserve(std::size_t{side} * side);
    for (std::uint32_t y = 0; y < side; ++y) {
        for (std::uint32_t x = 0; x < side; ++x) {
            out.push_back({x, y});
        }
    }
    return out;
}

// Exhaustive minimal-cost monotone alignment (no DP): explores every path
// of {(1,0),(0,1),(1,1)} steps from (0,0) to (|a|-1,|b|-1). Exponential;
// use only for short sequences.
inline double dtw_oracle(std::span<const double> a, std::span<const double> b) {
    struct Search {
        std::span<const double> a, b;
        double run(std::size_t i, std::size_t j) const {
            const double local = std::abs(a[i] - b[j]);
            if (i + 1 == a.size() && j + 1 == b.size()) return local;
            double best = std::numeric_limits<double>::infinity();
            if (i + 1 < a.size()) best = std::min(best, run(i + 1, j));
            if (j + 1 < b.size()) best = std::min(best, run(i, j + 1));
            if (i + 1 < a.size() && j + 1 < b.size()) best = std::min(best, run(i + 1, j + 1));
            return local + best;
        }
    };
    return Search{a, b}.run(0, 0);
}

// The DeGrid definition as a naive double loop over positions and offsets.
inline std::vector<double> degrid_oracle(const CurveMap& map, int k_radius, bool squared) {
    const std::int64_t n = static_cast<std::int64_t>(map.size());
    std::vector<double> values;
    values.reserve(map.size());
    for (std::int64_t i = 0; i < n; ++i) {
        double sum = 0.0;
        int count = 0;
        for (std::int64_t k = -k_radius; k <= k_radius; ++k) {
            const std::int64_t j = i + k;
            if (k == 0 || j < 0 || j >= n) continue;
            const GridPoint p = map.forward[static_cast<std::uint64_t>(i)];
            const GridPoint q = map.forward[static_cast<std::uint64_t>(j)];
            const double dx = double(q.x) - double(p.x);
            const double dy = double(q.y) - double(p.y);
            sum += squared ? dx * dx + dy * dy : std::sqrt(dx * dx + dy * dy);
            ++count;
        }
        values.push_back(count > 0 ? sum / count : 0.0);
    }
    return values;
}

// Brute-force dilation maximum over all index pairs of an arbitrary forward
// map, returned as an exact rational with the lexicographically smallest
// maximizing pair.
struct DilationOracleResult {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    double value() const { return double(num) / double(den); }
};

inline DilationOracleResult dilation_oracle(std::span<const GridPoint> forward) {
    DilationOracleResult best;
    bool have = false;
    for (std::uint64_t d1 = 0; d1 < forward.size(); ++d1) {
        for (std::uint64_t d2 = d1 + 1; d2 < forward.size(); ++d2) {
            const std::int64_t dx = std::int64_t{forward[d1].x} - forward[d2].x;
            const std::int64_t dy = std::int64_t{forward[d1].y} - forward[d2].y;
            const std::uint64_t num = static_cast<std::uint64_t>(dx * dx + dy * dy);
            const std::uint64_t den = d2 - d1;
            const auto lhs = static_cast<unsigned __int128>(num) * best.den;
            const auto rhs = static_cast<unsigned __int128>(best.num) * den;
            if (!have || lhs > rhs) {
                best = {num, den, d1, d2};
                have = true;
            }
        }
    }
    return best;
}

} // namespace sfc::test
