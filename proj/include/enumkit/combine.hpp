#pragma once

#include <functional>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// Enumerate A(x) ∪ B(x), each member once, from repetition-free machines for
// the two parts. Priority scheme: take the next solution of `a`; when it also
// belongs to B (per `member_of_b`) emit the next solution of `b` instead, and
// drain the rest of `b` after `a` finishes. Delay adds up, it does not blow up.
Machine interleave_union(Machine a, Machine b, std::function<bool(const Solution&)> member_of_b);

// Enumerate all concatenated pairs (y_a, y_b), outer loop on `a`. `b` is
// restarted from its initial snapshot for every solution of `a`.
Machine cartesian_product(Machine a, Machine b);

}  // namespace enumkit
