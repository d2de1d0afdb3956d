#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towers/polytower.hpp"

namespace towers {

// How the generated set looked after one expansion round.
struct SieveIteration {
  unsigned iteration = 0;
  Polytower generated;        // post-prune snapshot
  std::size_t pruned = 0;     // candidate terms discarded for exceeding the bound
  BigInt max_coefficient = 0;  // 1 in every healthy round
};

struct SieveTrace {
  std::vector<SieveIteration> iterations;
  bool stopped = false;
  std::string stop_reason;
};

struct SieveResult {
  // Integers in [2^t, 2^(t+1)] the expansion never produced.
  std::vector<BigInt> primes;
  SieveTrace trace;
};

// 1 + x_k + x_k^(x_k) + ...: every pure iterated power of the pillar whose
// value is strictly below bound, and nothing else.
[[nodiscard]] Polytower truncated_geometric(PrimeIndex k, const BigInt& bound);

// One full product round over the prime list:
//   current -> prod_k (1 + R(p_k, current))
// discarding terms beyond the bound as they appear. A value never shrinks
// under multiplication, so discarding early equals discarding at the end.
// Coefficients are expected to stay at 1; a merge that pushes one higher
// aborts with DuplicateGenerated.
[[nodiscard]] Polytower sieve_step(const Polytower& current,
                                   const std::vector<std::uint64_t>& primes,
                                   const std::optional<BigInt>& bound,
                                   SieveIteration* stats = nullptr);

// Prime discovery between 2^t and 2^(t+1), t >= 2: seed with the truncated
// geometric series of every prime below 2^t, expand rounds at bound 2^(t+1)
// until the set stops changing, and report the integers in range that never
// appeared. Every composite there factors over primes below 2^t, so the
// holes are exactly the primes.
[[nodiscard]] SieveResult primes_in_range(unsigned t);

// Plain ascending list of primes <= limit, found the classical way.
[[nodiscard]] std::vector<std::uint64_t> eratosthenes(std::uint64_t limit);

// "iteration=2 terms=14 pruned=9 max_coefficient=1"
[[nodiscard]] std::string trace_line(const SieveIteration& it);

}  // namespace towers
