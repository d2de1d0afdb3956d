#include "towers/codec.hpp"

#include <cstdint>
#include <limits>
#include <utility>

#include "towers/errors.hpp"
#include "towers/primes.hpp"

namespace towers {

namespace {

// Thread-local mirror of the shared prime table; spares the factorization
// loops a lock per lookup.
std::uint64_t cached_prime(std::size_t index) {
  static thread_local std::vector<std::uint64_t> mirror;
  while (mirror.size() < index) {
    mirror.push_back(PrimeTable::prime(mirror.size() + 1));
  }
  return mirror[index - 1];
}

Tower encode_u64(std::uint64_t n) {
  std::vector<Factor> factors;
  for (std::size_t i = 1; n > 1; ++i) {
    const std::uint64_t p = cached_prime(i);
    if (p > n / p) {
      // No divisor up to the square root: the remainder is prime.
      const auto index = PrimeTable::index_of(n);
      factors.push_back(
          Factor{static_cast<PrimeIndex>(*index), false, Tower()});
      break;
    }
    if (n % p == 0) {
      std::uint64_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.push_back(Factor{static_cast<PrimeIndex>(i), false,
                               e == 1 ? Tower() : encode_u64(e)});
    }
  }
  return detail::trusted_tower(std::move(factors));
}

Tower encode_big(BigInt n) {
  std::vector<Factor> factors;
  for (std::size_t i = 1; n > 1; ++i) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
      Tower rest = encode_u64(n.convert_to<std::uint64_t>());
      factors.insert(factors.end(), rest.factors().begin(),
                     rest.factors().end());
      break;
    }
    const BigInt p = cached_prime(i);
    if (p * p > n) {
      throw DomainError("prime factor too large to index");
    }
    if (n % p == 0) {
      std::uint64_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.push_back(Factor{static_cast<PrimeIndex>(i), false,
                               e == 1 ? Tower() : encode_u64(e)});
    }
  }
  return detail::trusted_tower(std::move(factors));
}

}  // namespace

Tower encode(const BigInt& n) {
  if (n <= 0) {
    throw DomainError("only positive numbers have towers");
  }
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return encode_u64(n.convert_to<std::uint64_t>());
  }
  return encode_big(n);
}

Tower encode_rational(const Rational& q) {
  if (q <= 0) {
    throw DomainError("only positive numbers have towers");
  }
  const Tower num = encode(numerator(q));
  const Tower den = encode(denominator(q));
  // The fraction is reduced, so the two factor lists share no pillar.
  std::vector<Factor> merged;
  merged.reserve(num.factors().size() + den.factors().size());
  auto in = num.factors().begin();
  auto id = den.factors().begin();
  while (in != num.factors().end() || id != den.factors().end()) {
    if (id == den.factors().end() ||
        (in != num.factors().end() && in->pillar < id->pillar)) {
      merged.push_back(*in++);
    } else {
      merged.push_back(Factor{id->pillar, true, id->exponent});
      ++id;
    }
  }
  return detail::trusted_tower(std::move(merged));
}

BigInt decode_integer(const Tower& t, unsigned cap_bits) {
  BigInt acc = 1;
  for (const Factor& f : t.factors()) {
    if (f.negative) {
      throw DomainError("reciprocal tower where a whole number is required");
    }
    const BigInt e = decode_integer(f.exponent, cap_bits);
    const auto p = pow_within_bits(BigInt(PrimeTable::prime(f.pillar)), e,
                                   cap_bits);
    if (!p) {
      throw OverflowError("tower value exceeds the evaluation cap");
    }
    acc *= *p;
    if (bit_length(acc) > cap_bits) {
      throw OverflowError("tower value exceeds the evaluation cap");
    }
  }
  return acc;
}

Rational decode(const Tower& t, unsigned cap_bits) {
  BigInt num = 1;
  BigInt den = 1;
  for (const Factor& f : t.factors()) {
    const BigInt e = decode_integer(f.exponent, cap_bits);
    const auto p = pow_within_bits(BigInt(PrimeTable::prime(f.pillar)), e,
                                   cap_bits);
    if (!p) {
      throw OverflowError("tower value exceeds the evaluation cap");
    }
    BigInt& side = f.negative ? den : num;
    side *= *p;
    if (bit_length(side) > cap_bits) {
      throw OverflowError("tower value exceeds the evaluation cap");
    }
  }
  return Rational(num, den);
}

std::optional<BigInt> decode_within(const Tower& t, const BigInt& bound) {
  if (bound < 1) {
    return std::nullopt;
  }
  BigInt acc = 1;
  for (const Factor& f : t.factors()) {
    if (f.negative) {
      throw DomainError("reciprocal tower where a whole number is required");
    }
    const auto e = decode_within(f.exponent, BigInt(bit_length(bound)));
    if (!e) {
      return std::nullopt;
    }
    const auto p =
        pow_within_bound(BigInt(PrimeTable::prime(f.pillar)), *e, bound);
    if (!p) {
      return std::nullopt;
    }
    acc *= *p;
    if (acc > bound) {
      return std::nullopt;
    }
  }
  return acc;
}

bool contains_prime(const Tower& t, PrimeIndex pillar) {
  for (const Factor& f : t.factors()) {
    if (f.pillar == pillar || contains_prime(f.exponent, pillar)) {
      return true;
    }
  }
  return false;
}

UniPolynomial::UniPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

UniPolynomial UniPolynomial::one() { return UniPolynomial({BigInt(1)}); }

UniPolynomial UniPolynomial::binary_expansion(const BigInt& n) {
  if (n < 1) {
    throw DomainError("binary expansion needs a positive number");
  }
  std::vector<BigInt> coeffs;
  BigInt rest = n;
  while (rest > 0) {
    coeffs.push_back(rest & 1);
    rest >>= 1;
  }
  return UniPolynomial(std::move(coeffs));
}

BigInt UniPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPolynomial UniPolynomial::times(const UniPolynomial& other,
                                   unsigned degree_cap) const {
  if (coefficients_.empty() || other.coefficients_.empty()) {
    return UniPolynomial();
  }
  if (degree() + other.degree() > degree_cap) {
    throw OverflowError("polynomial degree exceeds the cap");
  }
  std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1,
                          BigInt(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::pow(const BigInt& e, unsigned degree_cap) const {
  if (e < 0) {
    throw DomainError("polynomial exponents are nonnegative");
  }
  if (e == 0) {
    return one();
  }
  if (BigInt(degree()) * e > degree_cap) {
    throw OverflowError("polynomial degree exceeds the cap");
  }
  auto k = e.convert_to<unsigned long>();
  UniPolynomial acc = one();
  UniPolynomial sq = *this;
  for (;;) {
    if (k & 1) {
      acc = acc.times(sq, degree_cap);
    }
    k >>= 1;
    if (k == 0) {
      break;
    }
    sq = sq.times(sq, degree_cap);
  }
  return acc;
}

UniPolynomial to_polynomial(const Tower& t, unsigned cap_bits) {
  if (!t.is_integral()) {
    throw DomainError("only integral towers flatten to a polynomial");
  }
  UniPolynomial acc = UniPolynomial::one();
  for (const Factor& f : t.factors()) {
    const BigInt e = decode_integer(f.exponent, cap_bits);
    const auto base =
        UniPolynomial::binary_expansion(BigInt(PrimeTable::prime(f.pillar)));
    acc = acc.times(base.pow(e, cap_bits), cap_bits);
  }
  return acc;
}

}  // namespace towers
