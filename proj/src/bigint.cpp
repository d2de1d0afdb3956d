#include "towers/bigint.hpp"

namespace towers {

unsigned bit_length(const BigInt& n) {
  if (n == 0) {
    return 0;
  }
  const BigInt magnitude = abs(n);
  return static_cast<unsigned>(boost::multiprecision::msb(magnitude)) + 1;
}

std::optional<BigInt> pow_within_bits(const BigInt& base, const BigInt& exp,
                                      unsigned cap_bits) {
  if (exp == 0) {
    return BigInt(1);
  }
  // base >= 2, so base^exp needs at least exp+1 bits.
  if (exp >= cap_bits) {
    return std::nullopt;
  }
  const auto e = exp.convert_to<unsigned long>();
  if (static_cast<unsigned long long>(e) * (bit_length(base) - 1) >
      cap_bits) {
    return std::nullopt;
  }
  BigInt result = boost::multiprecision::pow(base, static_cast<unsigned>(e));
  if (bit_length(result) > cap_bits) {
    return std::nullopt;
  }
  return result;
}

std::optional<BigInt> pow_within_bound(const BigInt& base, const BigInt& exp,
                                       const BigInt& bound) {
  if (exp == 0) {
    return BigInt(1);
  }
  if (base > bound) {
    return std::nullopt;
  }
  // base >= 2, so more than bit_length(bound) squarings cannot fit.
  if (exp > bit_length(bound)) {
    return std::nullopt;
  }
  const auto e = exp.convert_to<unsigned long>();
  BigInt result = 1;
  for (unsigned long i = 0; i < e; ++i) {
    result *= base;
    if (result > bound) {
      return std::nullopt;
    }
  }
  return result;
}

}  // namespace towers
