#pragma once

#include <cstdint>

#include "enumkit/enumerator.hpp"

namespace enumkit {

// Loopless reflected binary code: emits all 2^n words, consecutive words at
// Hamming distance one, O(1) bookkeeping per word via the set-bit list and
// ones parity. With an even number of ones the last bit flips, otherwise the
// bit left of the rightmost one flips.
Machine gray_code(uint32_t n);

}  // namespace enumkit
