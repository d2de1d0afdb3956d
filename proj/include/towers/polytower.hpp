#pragma once

#include <map>

#include "towers/tower.hpp"

namespace towers {

// Finite integer-linear combination of towers: canonical tower -> nonzero
// coefficient. The empty map is the zero combination. Storage follows the
// structural tower order, so equal combinations are identical object state.
class Polytower {
 public:
  using TermMap = std::map<Tower, BigInt, TowerLess>;

  Polytower() = default;  // zero

  [[nodiscard]] static Polytower unit();  // the combination "1"
  [[nodiscard]] static Polytower single(Tower t, BigInt coefficient = 1);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t term_count() const noexcept {
    return terms_.size();
  }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  // 0 when the tower is absent.
  [[nodiscard]] BigInt coefficient(const Tower& t) const;

  // Merges one term in, dropping the entry if the coefficient reaches zero.
  void accumulate(Tower t, BigInt coefficient);

  bool operator==(const Polytower& other) const = default;

 private:
  TermMap terms_;
};

[[nodiscard]] Polytower poly_add(const Polytower& a, const Polytower& b);
[[nodiscard]] Polytower poly_sub(const Polytower& a, const Polytower& b);
[[nodiscard]] Polytower poly_mul(const Polytower& a, const Polytower& b,
                                 unsigned cap_bits = kDefaultCapBits);

// Raises the base to every term: c*T becomes c*(base^T). For a bare pillar
// base the exponent simply becomes T (no arithmetic at all); for a composite
// base every exponent of the base is multiplied by T.
[[nodiscard]] Polytower raiser(const Tower& base, const Polytower& s,
                               unsigned cap_bits = kDefaultCapBits);

}  // namespace towers
