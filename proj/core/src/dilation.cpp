#include "sfc/dilation.hpp"

#include <bit>
#include <vector>

#include <nlohmann/json.hpp>

#include "sfc/errors.hpp"
#include "sfc/parallel.hpp"

namespace sfc {
namespace {

// Candidate maximum as an exact rational (squared cell distance over index
// distance); the unit-square normalization cancels.
struct Candidate {
    std::uint64_t num = 0; // dx^2 + dy^2
    std::uint64_t den = 1; // |d1 - d2|
    std::uint64_t d1 = 0;
    std::uint64_t d2 = 0;
    bool valid = false;
};

// True if a is a strictly better maximum than b (larger ratio, or equal
// ratio with lexicographically smaller pair).
bool better(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
    if (lhs != rhs) return lhs > rhs;
    if (a.d1 != b.d1) return a.d1 < b.d1;
    return a.d2 < b.d2;
}

void consider(Candidate& best, const CurveMap& map, std::uint64_t d1, std::uint64_t d2) {
    const GridPoint a = map.forward[d1];
    const GridPoint b = map.forward[d2];
    const std::int64_t dx = std::int64_t{a.x} - std::int64_t{b.x};
    const std::int64_t dy = std::int64_t{a.y} - std::int64_t{b.y};
    Candidate c{static_cast<std::uint64_t>(dx * dx + dy * dy), d2 - d1, d1, d2, true};
    if (better(c, best)) best = c;
}

unsigned side_exponent(const CurveMap& map) {
    if (map.width != map.height || !std::has_single_bit(map.width) || map.width < 2) {
        throw config_error("dilation: requires a square power-of-two map; got " +
                           std::to_string(map.width) + "x" + std::to_string(map.height));
    }
    return static_cast<unsigned>(std::countr_zero(map.width));
}

double zigzag_like_bound(unsigned n) {
    // 4^n - 2^(n+1) + 2: squared distance of a full row wrap over one step.
    const double fourn = static_cast<double>(std::uint64_t{1} << (2 * n));
    const double two_np1 = static_cast<double>(std::uint64_t{1} << (n + 1));
    return fourn - two_np1 + 2.0;
}

} // namespace

const char* to_string(DilationMode mode) {
    return mode == DilationMode::AllPairs ? "all-pairs" : "adjacent";
}

DilationReport dilation(const CurveMap& map, DilationMode mode) {
    const unsigned order = side_exponent(map);
    if (mode == DilationMode::AllPairs && order > 5) {
        throw config_error("dilation: all-pairs mode is limited to order <= 5 (got n=" +
                           std::to_string(order) + "); use adjacent mode");
    }
    const std::uint64_t n_cells = map.size();

    const unsigned workers = thread_count();
    std::vector<Candidate> block_best(workers > 0 ? workers : 1);
    if (mode == DilationMode::AllPairs) {
        parallel_for_blocks(0, n_cells - 1, workers,
                            [&](unsigned block, std::uint64_t lo, std::uint64_t hi) {
            Candidate best;
            for (std::uint64_t d1 = lo; d1 < hi; ++d1) {
                for (std::uint64_t d2 = d1 + 1; d2 < n_cells; ++d2) {
                    consider(best, map, d1, d2);
                }
            }
            block_best[block] = best;
        });
    } else {
        parallel_for_blocks(0, n_cells - 1, workers,
                            [&](unsigned block, std::uint64_t lo, std::uint64_t hi) {
            Candidate best;
            for (std::uint64_t d1 = lo; d1 < hi; ++d1) {
                consider(best, map, d1, d1 + 1);
            }
            block_best[block] = best;
        });
    }
    Candidate best;
    for (const Candidate& c : block_best) {
        if (better(c, best)) best = c;
    }
    if (!best.valid) {
        throw internal_error("dilation: no pair sampled");
    }

    DilationReport report;
    report.kind = map.kind;
    report.order = order;
    report.mode = mode;
    report.empirical_max = static_cast<double>(best.num) / static_cast<double>(best.den);
    report.argmax_d1 = best.d1;
    report.argmax_d2 = best.d2;
    switch (map.kind) {
        case CurveKind::Hilbert:
        case CurveKind::GeneralizedHilbert:
            report.theoretical_bound = 6.0;
            report.notes = "supremum of the continuous curve; finite orders stay below it";
            break;
        case CurveKind::Zigzag:
            report.theoretical_bound = zigzag_like_bound(order);
            report.notes = "4^n-2^(n+1)+2, attained by a row wrap; diverges with n";
            break;
        case CurveKind::Morton:
            report.theoretical_bound = zigzag_like_bound(order);
            report.notes = "4^n-2^(n+1)+2 under the side-exponent convention used here "
                           "(the form 2^n-2^-n arises when n counts total index bits); "
                           "attained at the half-sequence boundary; diverges with n";
            break;
    }
    return report;
}

std::string to_json(const DilationReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(report.kind);
    j["order"] = report.order;
    j["mode"] = to_string(report.mode);
    j["empirical_max"] = report.empirical_max;
    j["argmax_pair"] = {report.argmax_d1, report.argmax_d2};
    j["theoretical_bound"] = report.theoretical_bound;
    j["notes"] = report.notes;
    return j.dump();
}

} // namespace sfc
