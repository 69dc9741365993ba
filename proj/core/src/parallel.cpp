#include "sfc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace sfc {

unsigned thread_count() {
    if (const char* env = std::getenv("SFC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for_blocks(std::uint64_t begin, std::uint64_t end, unsigned workers,
                         const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (begin >= end) return;
    const std::uint64_t total = end - begin;
    const unsigned blocks =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total));

    if (blocks == 1) {
        fn(0, begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(blocks);
    const std::uint64_t chunk = total / blocks;
    const std::uint64_t rest = total % blocks;
    std::uint64_t lo = begin;
    for (unsigned b = 0; b < blocks; ++b) {
        const std::uint64_t hi = lo + chunk + (b < rest ? 1 : 0);
        pool.emplace_back([&fn, b, lo, hi] { fn(b, lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

} // namespace sfc
