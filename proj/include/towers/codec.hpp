#pragma once

#include <optional>
#include <vector>

#include "towers/polytower.hpp"

namespace towers {

// Decoded value of a tower with reciprocal pillars: a reduced fraction with
// positive numerator and denominator.
using RationalValue = Rational;

// Canonical tower of a whole number n >= 1: factor n, encode each exponent
// recursively. encode(1) is the empty tower.
[[nodiscard]] Tower encode(const BigInt& n);

// Canonical tower of a positive rational: numerator pillars positive,
// denominator pillars reciprocal.
[[nodiscard]] Tower encode_rational(const Rational& q);

// Exact value. Throws OverflowError once any intermediate outgrows cap_bits.
[[nodiscard]] Rational decode(const Tower& t,
                              unsigned cap_bits = kDefaultCapBits);

// Same, but insists on a whole result; throws DomainError for a reciprocal.
[[nodiscard]] BigInt decode_integer(const Tower& t,
                                    unsigned cap_bits = kDefaultCapBits);

// Value of an integral tower when it is <= bound, nullopt otherwise. The
// bound does the capping, so this never throws on size.
[[nodiscard]] std::optional<BigInt> decode_within(const Tower& t,
                                                  const BigInt& bound);

// Whether the pillar appears anywhere in the tree, exponents included.
[[nodiscard]] bool contains_prime(const Tower& t, PrimeIndex pillar);

// Dense univariate polynomial over the integers; index = degree. Trailing
// zero coefficients are stripped, the zero polynomial has no coefficients.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<BigInt> coefficients);

  [[nodiscard]] static UniPolynomial one();
  // Bits of n (n >= 1) as 0/1 coefficients: 11 = 1011b gives 1 + x + x^3.
  [[nodiscard]] static UniPolynomial binary_expansion(const BigInt& n);

  [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept {
    return coefficients_;
  }
  [[nodiscard]] std::size_t degree() const noexcept {
    return coefficients_.empty() ? 0 : coefficients_.size() - 1;
  }
  [[nodiscard]] BigInt evaluate(const BigInt& x) const;

  // degree_cap guards against exponent blowups; OverflowError past it.
  [[nodiscard]] UniPolynomial times(const UniPolynomial& other,
                                    unsigned degree_cap) const;
  [[nodiscard]] UniPolynomial pow(const BigInt& e, unsigned degree_cap) const;

  bool operator==(const UniPolynomial& other) const = default;

 private:
  std::vector<BigInt> coefficients_;
};

// Forgets the tree structure one level deep: each base pillar becomes the
// binary expansion of its prime, raised to the exponent's plain value, and
// the factor polynomials are multiplied out. Evaluating the result at 2
// gives back the tower's value.
[[nodiscard]] UniPolynomial to_polynomial(const Tower& t,
                                          unsigned cap_bits = kDefaultCapBits);

}  // namespace towers
