#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "towers/polytower.hpp"

namespace towers {

// Maps a list of primes to their pillar indices, checking primality and
// distinctness on the way; the result is ascending. Throws DomainError on a
// bad entry.
[[nodiscard]] std::vector<PrimeIndex> pillars_of(
    const std::vector<std::uint64_t>& primes);

// n-th round of the product recursion  G_{n+1} = prod_k (1 + R(p_k, G_n)).
// With a bound, G_0 is the product of truncated geometric series and every
// round prunes at the bound. Without one, G_0 = prod_k (1 + x_k) and the
// expansion grows freely, so keep the iteration count small.
[[nodiscard]] Polytower euler_iterate(
    const std::vector<std::uint64_t>& primes, unsigned iterations,
    const std::optional<BigInt>& bound = std::nullopt,
    unsigned cap_bits = kDefaultCapBits);

// Bounded enumeration staying close to the plain recursion: unit seed
// prod_k (1 + x_k), then `iterations` pruned rounds. Lists every tower the
// recursion reaches whose value is <= bound.
[[nodiscard]] Polytower generate_towers(const std::vector<std::uint64_t>& primes,
                                        unsigned iterations,
                                        const BigInt& bound);

struct CoverageReport {
  BigInt bound;
  unsigned iterations = 0;        // rounds until the bounded set stabilized
  std::vector<BigInt> generated;  // values the expansion produced, ascending
  std::vector<BigInt> expected;   // values the direct classifier accepts
  std::vector<BigInt> missing;    // expected but never generated
  std::vector<BigInt> unexpected;  // generated but outside the class

  [[nodiscard]] bool ok() const {
    return missing.empty() && unexpected.empty();
  }
};

// Runs the bounded expansion to its fixed point and compares the produced
// values against a direct arithmetic classification of every integer up to
// bound: all prime factors in the list, all exponents passing recursively.
[[nodiscard]] CoverageReport coverage_check(
    const std::vector<std::uint64_t>& primes, const BigInt& bound);

struct ReciprocalSumReport {
  Rational partial_sum;     // sum of 1/v over the generated values
  Rational euler_bound;     // prod p/(p-1) over the prime list
  bool degenerate = false;  // empty prime list: both sides are exactly 1
  bool pass = false;        // partial_sum < euler_bound, strictly
};

// The reciprocals of the generated values, summed exactly, stay strictly
// under the Euler product of the prime list. Fails (and flags degenerate)
// for the empty list, where both sides are 1.
[[nodiscard]] ReciprocalSumReport reciprocal_sum_check(
    const std::vector<std::uint64_t>& primes, const BigInt& bound);

// n-th round of the signed recursion
//   H_n = prod_k ( R(1/p_k, G) + 1 + R(p_k, G) ),   G = euler_iterate(n-1),
// whose terms carry reciprocal pillars. iterations = 0 gives the unit.
[[nodiscard]] Polytower rational_iterate(
    const std::vector<std::uint64_t>& primes, unsigned iterations,
    unsigned cap_bits = kDefaultCapBits);

// Share of the integers 2..limit whose tower mentions the pillar anywhere;
// exact fraction of count over (limit - 1).
[[nodiscard]] Rational pillar_frequency(PrimeIndex pillar, const BigInt& limit);

}  // namespace towers
