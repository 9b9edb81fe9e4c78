#pragma once

#include "qtorus/types.hpp"

#include <iosfwd>

namespace qtorus {

/// Run the core invariant suite at dimension n, writing one line per group
/// to `out`.  Returns true iff everything holds.
bool run_self_check(Dimension n, std::ostream& out);

}  // namespace qtorus
