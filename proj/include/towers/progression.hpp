#pragma once

#include "towers/polytower.hpp"

namespace towers {

// Pure iterated power of one pillar: height 0 is 1, height 1 is x_k,
// height 2 is x_k^(x_k), ...
[[nodiscard]] Tower pure_tower(PrimeIndex k, unsigned height);

// S_n = 1 + x + x^x + ...: the n+1 pure towers of pillar 1, heights 0..n.
[[nodiscard]] Polytower build_progression(unsigned n);

// Verifies, term for term and without evaluating anything,
//   S_{n+1} = 1 + R(x, S_n)
//   S_{n+1} = S_n + (top term of S_{n+1})
// and that their difference cancels exactly.
[[nodiscard]] bool check_relation(unsigned n);

}  // namespace towers
