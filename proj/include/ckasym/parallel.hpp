#pragma once

#include <cstddef>
#include <functional>

namespace ckasym::parallel {

// 0 means "use hardware concurrency". Thread count never changes results:
// each index writes only its own outputs and all reductions have a fixed
// association order.
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs body(lo, hi) over a block partition of [0, n). Nested calls execute
// inline on the calling worker.
void for_blocks(std::size_t n,
                const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ckasym::parallel
