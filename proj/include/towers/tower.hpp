#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "towers/bigint.hpp"

namespace towers {

// 1-based position in the prime sequence: pillar 1 stands for 2, pillar 2
// for 3, pillar 3 for 5, and so on.
using PrimeIndex = std::uint32_t;

struct Factor;
class Tower;

namespace detail {
// Wraps an already-canonical factor list without re-validation. Internal;
// callers are responsible for the shape.
Tower trusted_tower(std::vector<Factor>&& factors);
}  // namespace detail

// Recursive factorization form of a positive rational: a list of prime
// pillars, each raised to an exponent that is itself a tower. The empty
// list is the number 1 and is its only representation.
//
// Canonical shape, enforced on construction:
//   - factors strictly ascending by pillar (so each pillar appears once),
//   - exponents positive all the way down,
//   - a reciprocal (negative) pillar may appear only at the top level.
//
// Towers are immutable values; every operation builds new ones.
class Tower {
 public:
  Tower() = default;  // the number 1

  [[nodiscard]] static Tower pillar(PrimeIndex k);
  [[nodiscard]] static Tower power(PrimeIndex k, Tower exponent,
                                   bool negative = false);
  // Validates the canonical shape; throws CanonicalError when it fails.
  [[nodiscard]] static Tower from_factors(std::vector<Factor> factors);

  [[nodiscard]] const std::vector<Factor>& factors() const noexcept {
    return factors_;
  }
  [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }
  // True when no top-level factor is reciprocal, i.e. the value is a whole
  // number.
  [[nodiscard]] bool is_integral() const noexcept;
  // Nesting depth: 1 has height 0, a bare pillar height 1, x^x height 2.
  [[nodiscard]] std::size_t height() const;
  [[nodiscard]] std::size_t node_count() const;

  bool operator==(const Tower& other) const;

 private:
  struct Trusted {};
  Tower(std::vector<Factor> factors, Trusted) : factors_(std::move(factors)) {}
  friend Tower detail::trusted_tower(std::vector<Factor>&& factors);

  std::vector<Factor> factors_;
};

struct Factor {
  PrimeIndex pillar = 0;
  bool negative = false;  // reciprocal pillar
  Tower exponent;         // empty tower = exponent 1

  bool operator==(const Factor& other) const = default;
};

// Total order used for canonical term storage. Purely structural: cheap,
// never evaluates, and unrelated to numeric order.
[[nodiscard]] std::strong_ordering structural_order(const Tower& a,
                                                    const Tower& b);

struct TowerLess {
  [[nodiscard]] bool operator()(const Tower& a, const Tower& b) const {
    return structural_order(a, b) < 0;
  }
};

enum class Ordering { less, equal, greater };

// Numeric comparison on exact values.
[[nodiscard]] Ordering compare(const Tower& a, const Tower& b,
                               unsigned cap_bits = kDefaultCapBits);

// Product of two towers: union of pillars, where a pillar present on both
// sides gets the exponent sum, carried out on exponent values and encoded
// back. Opposite signs cancel; a pillar whose exponents cancel completely
// drops out.
[[nodiscard]] Tower multiply(const Tower& a, const Tower& b,
                             unsigned cap_bits = kDefaultCapBits);

}  // namespace towers
