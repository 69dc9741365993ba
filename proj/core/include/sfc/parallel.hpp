#pragma once

#include <cstdint>
#include <functional>

namespace sfc {

/// Worker count: SFC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency. Always >= 1.
unsigned thread_count();

/// Runs fn(begin, end) over a static partition of [begin, end) into
/// contiguous blocks, one per worker. The partition depends only on the
/// range and worker count, so any order-independent reduction composed of
/// exact comparisons yields bit-identical results for any worker count.
void parallel_for_blocks(std::uint64_t begin, std::uint64_t end, unsigned workers,
                         const std::function<void(unsigned block, std::uint64_t lo,
                                                  std::uint64_t hi)>& fn);

} // namespace sfc
