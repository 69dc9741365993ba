#include "sfc/degrid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sfc/errors.hpp"
#include "sfc/parallel.hpp"
#include "sfc/text.hpp"

namespace sfc {

DeGridField degrid(const CurveMap& map, unsigned k_radius, bool squared) {
    if (k_radius < 1) {
        throw domain_error("degrid: k_radius must be >= 1 (the neighborhood is empty otherwise)");
    }
    DeGridField field;
    field.kind = map.kind;
    field.width = map.width;
    field.height = map.height;
    field.k_radius = k_radius;
    field.squared = squared;
    const std::int64_t n = static_cast<std::int64_t>(map.size());
    field.values.assign(map.size(), 0.0);

    parallel_for_blocks(0, map.size(), thread_count(),
                        [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        const std::int64_t radius = static_cast<std::int64_t>(k_radius);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GridPoint c = map.forward[i];
            double sum = 0.0;
            unsigned count = 0;
            const std::int64_t si = static_cast<std::int64_t>(i);
            for (std::int64_t k = -radius; k <= radius; ++k) {
                if (k == 0 || si + k < 0 || si + k >= n) continue;
                const GridPoint q = map.forward[static_cast<std::uint64_t>(si + k)];
                const double dx = static_cast<double>(q.x) - static_cast<double>(c.x);
                const double dy = static_cast<double>(q.y) - static_cast<double>(c.y);
                const double d2 = dx * dx + dy * dy;
                sum += squared ? d2 : std::sqrt(d2);
                ++count;
            }
            field.values[i] = count > 0 ? sum / count : 0.0;
        }
    });
    return field;
}

std::vector<PreservationRow> preservation_sweep(const DeGridField& field,
                                                std::span<const double> thresholds) {
    if (thresholds.empty()) {
        throw domain_error("preservation_sweep: threshold list is empty");
    }
    for (const double eps : thresholds) {
        if (!(eps > 0.0)) {
            throw domain_error("preservation_sweep: thresholds must be > 0 (got " +
                               format_double(eps) + ")");
        }
    }
    std::vector<PreservationRow> rows;
    rows.reserve(thresholds.size());
    const double n = static_cast<double>(field.values.size());
    for (const double eps : thresholds) {
        std::uint64_t kept = 0;
        for (const double v : field.values) {
            if (v <= eps) ++kept;
        }
        rows.push_back({eps, 100.0 * static_cast<double>(kept) / n});
    }
    return rows;
}

std::vector<double> default_thresholds(double vmin, double vmax, std::size_t steps) {
    if (!(vmin > 0.0) || vmax < vmin || steps < 2) {
        throw domain_error("default_thresholds: requires 0 < vmin <= vmax and steps >= 2");
    }
    const double lo = vmin * 0.99;
    const double hi = vmax * 1.01;
    std::vector<double> eps;
    eps.reserve(steps);
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        eps.push_back(std::exp(log_lo + t * (log_hi - log_lo)));
    }
    eps.front() = lo;
    eps.back() = hi;
    return eps;
}

void write_degrid_csv(const DeGridField& field, const CurveMap& map, std::ostream& os) {
    os << "position,x,y,degrid\n";
    for (std::uint64_t i = 0; i < map.size(); ++i) {
        const GridPoint p = map.forward[i];
        os << i << ',' << p.x << ',' << p.y << ',' << format_double(field.values[i]) << '\n';
    }
}

void write_degrid_pgm(const DeGridField& field, const CurveMap& map, std::ostream& os) {
    const double vmax = field.values.empty()
                            ? 0.0
                            : *std::max_element(field.values.begin(), field.values.end());
    os << "P2\n" << map.width << ' ' << map.height << "\n255\n";
    std::vector<int> gray(field.values.size(), 0);
    for (std::uint64_t i = 0; i < map.size(); ++i) {
        const GridPoint p = map.forward[i];
        const double v = vmax > 0.0 ? field.values[i] / vmax : 0.0;
        gray[std::size_t{p.y} * map.width + p.x] = static_cast<int>(std::lround(255.0 * v));
    }
    for (std::uint32_t y = 0; y < map.height; ++y) {
        for (std::uint32_t x = 0; x < map.width; ++x) {
            os << gray[std::size_t{y} * map.width + x];
            os << (x + 1 == map.width ? '\n' : ' ');
        }
    }
}

void write_preservation_csv(std::span<const double> thresholds,
                            const DeGridField& hilbert_field,
                            const DeGridField& morton_field,
                            const DeGridField& zigzag_field, std::ostream& os) {
    const auto hf = preservation_sweep(hilbert_field, thresholds);
    const auto mf = preservation_sweep(morton_field, thresholds);
    const auto zf = preservation_sweep(zigzag_field, thresholds);
    os << "epsilon,hf_pct,mf_pct,zf_pct\n";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        os << format_double(thresholds[i]) << ',' << format_double(hf[i].percent) << ','
           << format_double(mf[i].percent) << ',' << format_double(zf[i].percent) << '\n';
    }
}

} // namespace sfc
