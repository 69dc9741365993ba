#include "sfc/curve_map.hpp"

#include <bit>
#include <cstdlib>
#include <ostream>

#include "sfc/errors.hpp"
#include "sfc/gilbert.hpp"

namespace sfc {
namespace {

std::string dims_str(std::uint32_t w, std::uint32_t h) {
    return std::to_string(w) + "x" + std::to_string(h);
}

// Side exponent for the classic square curves, or a config_error.
unsigned order_for(CurveKind kind, std::uint32_t width, std::uint32_t height) {
    if (width != height || !std::has_single_bit(width) || width < 2) {
        throw config_error(std::string(to_string(kind)) +
                           " is only defined on square power-of-two grids (side 2^n, n >= 1); got " +
                           dims_str(width, height) +
                           ". The ghilbert curve supports arbitrary rectangles.");
    }
    return static_cast<unsigned>(std::countr_zero(width));
}

void validate(const CurveMap& map) {
    const std::uint64_t n = map.size();
    if (n != std::uint64_t{map.width} * map.height || map.inverse.size() != n) {
        throw internal_error("curve map arrays do not cover the grid");
    }
    std::vector<bool> seen(n, false);
    for (std::uint64_t d = 0; d < n; ++d) {
        const GridPoint p = map.forward[d];
        if (p.x >= map.width || p.y >= map.height) {
            throw internal_error("curve map cell out of grid at d=" + std::to_string(d));
        }
        const std::uint64_t flat = std::uint64_t{p.y} * map.width + p.x;
        if (seen[flat]) {
            throw internal_error("curve map revisits cell at d=" + std::to_string(d));
        }
        seen[flat] = true;
        if (map.inverse[flat] != d) {
            throw internal_error("curve map inverse mismatch at d=" + std::to_string(d));
        }
    }
    if (map.kind == CurveKind::Hilbert || map.kind == CurveKind::GeneralizedHilbert) {
        for (std::uint64_t d = 0; d + 1 < n; ++d) {
            const GridPoint a = map.forward[d];
            const GridPoint b = map.forward[d + 1];
            const std::int64_t manhattan = std::llabs(std::int64_t{a.x} - b.x) +
                                           std::llabs(std::int64_t{a.y} - b.y);
            if (manhattan != 1) {
                throw internal_error("curve map breaks adjacency between d=" +
                                     std::to_string(d) + " and d=" + std::to_string(d + 1));
            }
        }
    }
}

} // namespace

GridPoint CurveMap::cell_of(std::uint64_t d) const {
    if (d >= size()) {
        throw domain_error("cell_of: d=" + std::to_string(d) + " out of range [0, " +
                           std::to_string(size()) + ")");
    }
    return forward[d];
}

std::uint64_t CurveMap::index_of(GridPoint p) const {
    if (p.x >= width || p.y >= height) {
        throw domain_error("index_of: cell (" + std::to_string(p.x) + "," +
                           std::to_string(p.y) + ") outside the " + dims_str(width, height) +
                           " grid");
    }
    return inverse[std::uint64_t{p.y} * width + p.x];
}

CurveMap build_map(CurveKind kind, std::uint32_t width, std::uint32_t height) {
    if (width < 1 || height < 1) {
        throw config_error("build_map: dimensions must be >= 1 (got " +
                           dims_str(width, height) + ")");
    }
    CurveMap map;
    map.kind = kind;
    map.width = width;
    map.height = height;
    const std::uint64_t n = std::uint64_t{width} * height;

    if (kind == CurveKind::GeneralizedHilbert) {
        map.forward = gilbert_traversal(width, height);
    } else {
        const unsigned order = order_for(kind, width, height);
        map.forward.reserve(n);
        for (std::uint64_t d = 0; d < n; ++d) {
            switch (kind) {
                case CurveKind::Hilbert: map.forward.push_back(hilbert_d2xy(order, d)); break;
                case CurveKind::Morton: map.forward.push_back(morton_d2xy(order, d)); break;
                case CurveKind::Zigzag: map.forward.push_back(zigzag_d2xy(order, d)); break;
                case CurveKind::GeneralizedHilbert: break; // handled above
            }
        }
    }

    map.inverse.assign(n, 0);
    for (std::uint64_t d = 0; d < map.forward.size(); ++d) {
        const GridPoint p = map.forward[d];
        if (p.x < width && p.y < height) {
            map.inverse[std::uint64_t{p.y} * width + p.x] = d;
        }
    }
    validate(map);
    return map;
}

CurveMap generalized_hilbert(std::uint32_t width, std::uint32_t height) {
    if (width < 1 || height < 1) {
        throw domain_error("generalized_hilbert: dimensions must be >= 1 (got " +
                           dims_str(width, height) + ")");
    }
    return build_map(CurveKind::GeneralizedHilbert, width, height);
}

std::vector<std::uint64_t> patch_order(std::uint32_t grid_w, std::uint32_t grid_h) {
    if (grid_w < 1 || grid_h < 1) {
        throw domain_error("patch_order: grid dimensions must be >= 1 (got " +
                           dims_str(grid_w, grid_h) + ")");
    }
    std::vector<std::uint64_t> order;
    const std::uint64_t n = std::uint64_t{grid_w} * grid_h;
    order.reserve(n);
    if (grid_w == grid_h && std::has_single_bit(grid_w) && grid_w >= 2) {
        const unsigned side_exp = static_cast<unsigned>(std::countr_zero(grid_w));
        for (std::uint64_t d = 0; d < n; ++d) {
            const GridPoint p = hilbert_d2xy(side_exp, d);
            order.push_back(std::uint64_t{p.y} * grid_w + p.x);
        }
    } else {
        for (const GridPoint p : gilbert_traversal(grid_w, grid_h)) {
            order.push_back(std::uint64_t{p.y} * grid_w + p.x);
        }
    }
    return order;
}

void write_curve_map_csv(const CurveMap& map, std::ostream& os) {
    os << "d,x,y\n";
    for (std::uint64_t d = 0; d < map.size(); ++d) {
        const GridPoint p = map.forward[d];
        os << d << ',' << p.x << ',' << p.y << '\n';
    }
}

void write_patch_order_csv(std::span<const std::uint64_t> order, std::ostream& os) {
    os << "slot,raster_index\n";
    for (std::size_t k = 0; k < order.size(); ++k) {
        os << k << ',' << order[k] << '\n';
    }
}

} // namespace sfc
