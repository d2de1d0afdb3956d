#pragma once

#include <cstddef>
#include <vector>

#include "towers/tower.hpp"

namespace towers {

// Sum by evaluation: decode both sides, add, encode the result.
[[nodiscard]] Tower add(const Tower& a, const Tower& b,
                        unsigned cap_bits = kDefaultCapBits);

// a - b. Throws NonRepresentable when the difference is not positive:
// there is no tower for zero.
[[nodiscard]] Tower sub(const Tower& a, const Tower& b,
                        unsigned cap_bits = kDefaultCapBits);

// Square root taken on the shape: every top-level exponent value must be
// even and is halved. Throws NotPerfectSquare otherwise.
[[nodiscard]] Tower sqrt_tower(const Tower& a,
                               unsigned cap_bits = kDefaultCapBits);

// Sum through the identity n + m = (sqrt(n) + sqrt(m))^2 - 2*sqrt(n)*sqrt(m),
// recursing on the inner sum while both operands stay perfect squares and
// finishing small operands from a fixed addition table. Both inputs must be
// perfect squares (NotApplicable otherwise); agrees with add.
[[nodiscard]] Tower add_via_sqrt(const Tower& a, const Tower& b,
                                 unsigned cap_bits = kDefaultCapBits);

// |value(a) - value(b)| for integral towers.
[[nodiscard]] BigInt distance(const Tower& a, const Tower& b,
                              unsigned cap_bits = kDefaultCapBits);

// Value-sorted list of candidate towers with values cached up front, so a
// search never re-evaluates its universe.
class SearchUniverse {
 public:
  explicit SearchUniverse(std::vector<Tower> towers,
                          unsigned cap_bits = kDefaultCapBits);

  // Towers of every whole number in [lo, hi].
  [[nodiscard]] static SearchUniverse over_range(const BigInt& lo,
                                                 const BigInt& hi);

  [[nodiscard]] std::size_t size() const noexcept { return towers_.size(); }
  [[nodiscard]] const Tower& tower_at(std::size_t i) const {
    return towers_[i];
  }
  [[nodiscard]] const BigInt& value_at(std::size_t i) const {
    return values_[i];
  }

 private:
  std::vector<Tower> towers_;
  std::vector<BigInt> values_;
};

// Sum by lookup: the unique universe element p with p >= a, p >= b,
// distance(a, p) >= value(b) and distance(a, p) <= value(b). Throws
// NotFound when the universe has no such element.
[[nodiscard]] Tower add_via_search(const Tower& a, const Tower& b,
                                   const SearchUniverse& universe,
                                   unsigned cap_bits = kDefaultCapBits);

}  // namespace towers
