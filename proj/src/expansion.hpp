#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "towers/polytower.hpp"

// Product-expansion engine shared by the sieve and the series module:
// polytower terms annotated with their values so pruning never re-evaluates,
// plus the (1 + R(p, current)) factor builder. Internal to the library.

namespace towers::detail {

struct ValuedTerm {
  BigInt coefficient;
  BigInt value;  // meaningful only in bounded mode
};

using ValuedMap = std::map<Tower, ValuedTerm, TowerLess>;

struct Expansion {
  ValuedMap terms;
  std::optional<BigInt> bound;
  std::size_t pruned = 0;

  // The unit expansion: just the term 1.
  static Expansion start(const std::optional<BigInt>& bound);

  // Annotates a polytower; bounded mode drops terms beyond the bound.
  static Expansion annotate(const Polytower& p,
                            const std::optional<BigInt>& bound);

  void insert(Tower t, const BigInt& coefficient, BigInt value);

  // *this becomes *this x factor, pruning along the way.
  void cross(const Expansion& factor, unsigned cap_bits);

  // The factor (1 + R(p_k, current)) with values filled in.
  static Expansion raise_factor(std::uint64_t prime, PrimeIndex pillar,
                                const Expansion& current,
                                const std::optional<BigInt>& bound);

  [[nodiscard]] Polytower to_polytower() const;
  [[nodiscard]] BigInt max_coefficient() const;
  // Throws DuplicateGenerated when a coefficient sits above 1.
  void require_unit_coefficients(const char* context) const;
};

// Checks primality and distinctness; returns the pillar indices ascending.
[[nodiscard]] std::vector<PrimeIndex> validated_pillars(
    const std::vector<std::uint64_t>& primes);

}  // namespace towers::detail
