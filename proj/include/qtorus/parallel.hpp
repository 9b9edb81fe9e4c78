#pragma once

#include <functional>

namespace qtorus {

/// Bound the worker count used by parallel_for.  t <= 0 means "all cores".
void set_max_threads(int t);
int max_threads();

/// Run fn(i) for i in [begin, end) across up to max_threads() workers.
/// Each index must own its output slot; under that contract results are
/// identical for any thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace qtorus
