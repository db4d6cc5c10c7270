#pragma once

#include <cstddef>
#include <functional>

namespace cylwig {

/// Worker cap: CYLWIG_THREADS if set, else hardware concurrency.
int max_threads();

/// Runs body(i) for i in [0, n). Each index is handled exactly once and
/// writes only its own slot, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cylwig
