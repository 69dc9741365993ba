#include "sfc/scale.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "sfc/curve_map.hpp"
#include "sfc/errors.hpp"

namespace sfc {
namespace {

GridPoint forward_cell(CurveKind kind, unsigned order, std::uint64_t d) {
    switch (kind) {
        case CurveKind::Morton: return morton_d2xy(order, d);
        case CurveKind::Zigzag: return zigzag_d2xy(order, d);
        case CurveKind::Hilbert:
        case CurveKind::GeneralizedHilbert:
            // On square power-of-two grids the generalized traversal
            // coincides with the classic codec.
            return hilbert_d2xy(order, d);
    }
    throw internal_error("forward_cell: unhandled curve kind");
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw domain_error(std::string("parse_fraction: malformed ") + what + " in '" +
                           std::string(text) + "'");
    }
    return v;
}

bool representable_at(Dyadic t, unsigned order) {
    // t * 4^order integral <=> (num << 2*order) % den == 0
    const unsigned __int128 scaled = static_cast<unsigned __int128>(t.num) << (2 * order);
    return scaled % t.den == 0;
}

} // namespace

Dyadic parse_fraction(std::string_view text) {
    const auto slash = text.find('/');
    Dyadic t;
    if (slash == std::string_view::npos) {
        t.num = parse_u64(text, "numerator");
        t.den = 1;
    } else {
        t.num = parse_u64(text.substr(0, slash), "numerator");
        t.den = parse_u64(text.substr(slash + 1), "denominator");
    }
    if (t.den == 0) {
        throw domain_error("parse_fraction: zero denominator in '" + std::string(text) + "'");
    }
    if (t.num > t.den) {
        throw domain_error("parse_fraction: value " + std::string(text) +
                           " outside [0, 1]");
    }
    return t;
}

std::string to_string(const Dyadic& value) {
    return std::to_string(value.num) + "/" + std::to_string(value.den);
}

std::uint64_t fold_index(Dyadic t, unsigned order) {
    if (order < 1 || order > kMaxOrder) {
        throw domain_error("fold_index: order n=" + std::to_string(order) +
                           " outside supported range [1, " + std::to_string(kMaxOrder) + "]");
    }
    const std::uint64_t n_cells = std::uint64_t{1} << (2 * order);
    const unsigned __int128 scaled = static_cast<unsigned __int128>(t.num) << (2 * order);
    std::uint64_t d = static_cast<std::uint64_t>(scaled / t.den);
    if (d >= n_cells) d = n_cells - 1;
    return d;
}

ScaleTrace scale_trace(CurveKind kind, Dyadic t1, Dyadic t2, unsigned n_min, unsigned n_max) {
    if (n_min < 1 || n_max > kMaxOrder || n_min > n_max) {
        throw domain_error("scale_trace: requires 1 <= n_min <= n_max <= " +
                           std::to_string(kMaxOrder));
    }
    const auto cross1 = static_cast<unsigned __int128>(t1.num) * t2.den;
    const auto cross2 = static_cast<unsigned __int128>(t2.num) * t1.den;
    if (cross1 == cross2) {
        throw domain_error("scale_trace: degenerate input, t1 == t2 == " + to_string(t1));
    }
    for (const Dyadic& t : {t1, t2}) {
        if (!representable_at(t, n_max)) {
            throw domain_error("scale_trace: " + to_string(t) +
                               " is not representable as k/4^" + std::to_string(n_max));
        }
    }

    ScaleTrace trace;
    trace.kind = kind;
    trace.t1 = t1;
    trace.t2 = t2;
    trace.n_min = n_min;
    trace.n_max = n_max;
    trace.distances.reserve(n_max - n_min + 1);
    for (unsigned n = n_min; n <= n_max; ++n) {
        const GridPoint a = forward_cell(kind, n, fold_index(t1, n));
        const GridPoint b = forward_cell(kind, n, fold_index(t2, n));
        const double side = static_cast<double>(std::uint64_t{1} << n);
        const double dx = (static_cast<double>(a.x) - static_cast<double>(b.x)) / side;
        const double dy = (static_cast<double>(a.y) - static_cast<double>(b.y)) / side;
        trace.distances.push_back(std::sqrt(dx * dx + dy * dy));
    }
    for (std::size_t j = 0; j + 1 < trace.distances.size(); ++j) {
        const double next = trace.distances[j + 1];
        trace.ratios.push_back(next > 0.0 ? trace.distances[j] / next
                                          : std::numeric_limits<double>::quiet_NaN());
    }
    return trace;
}

std::uint64_t hierarchy_check(CurveKind kind, unsigned order) {
    if (order < 1 || order + 1 > kMaxOrder) {
        throw domain_error("hierarchy_check: order n=" + std::to_string(order) +
                           " outside supported range [1, " + std::to_string(kMaxOrder - 1) + "]");
    }
    const std::uint64_t side = std::uint64_t{1} << (order + 1);
    auto inverse = [&](unsigned n, std::uint32_t x, std::uint32_t y) {
        switch (kind) {
            case CurveKind::Morton: return morton_xy2d(n, {x, y});
            case CurveKind::Zigzag: return zigzag_xy2d(n, {x, y});
            case CurveKind::Hilbert:
            case CurveKind::GeneralizedHilbert: return hilbert_xy2d(n, {x, y});
        }
        throw internal_error("hierarchy_check: unhandled curve kind");
    };
    std::uint64_t violations = 0;
    for (std::uint32_t y = 0; y < side; ++y) {
        for (std::uint32_t x = 0; x < side; ++x) {
            const std::uint64_t fine = inverse(order + 1, x, y);
            const std::uint64_t coarse = inverse(order, x / 2, y / 2);
            if (fine / 4 != coarse) ++violations;
        }
    }
    return violations;
}

std::string to_json(const ScaleTrace& trace) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(trace.kind);
    j["t1"] = to_string(trace.t1);
    j["t2"] = to_string(trace.t2);
    j["n_min"] = trace.n_min;
    j["n_max"] = trace.n_max;
    j["distances"] = trace.distances;
    j["ratios"] = trace.ratios; // NaN serializes as null
    return j.dump();
}

} // namespace sfc
