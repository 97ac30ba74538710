#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tdl {

/// Worker count: requested if > 0, else TDL_THREADS, else hardware.
unsigned resolve_threads(int requested = 0);

/// Runs fn(worker, begin, end) over a contiguous split of [0, total).
/// Work item results must depend only on the item index, so the split is
/// invisible in the merged output.
void parallel_chunks(std::uint64_t total, unsigned threads,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace tdl
