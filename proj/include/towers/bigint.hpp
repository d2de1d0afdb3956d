#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace towers {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ceiling, in bits, on any value produced while evaluating a tower. An
// innocent-looking tree can stand for a number too large to write down, so
// every operation that needs exact values takes a cap and fails loudly
// instead of filling memory.
inline constexpr unsigned kDefaultCapBits = 4096;

// Number of bits in |n|; bit_length(0) == 0.
[[nodiscard]] unsigned bit_length(const BigInt& n);

// base^exp when the result fits in cap_bits bits, nullopt otherwise.
// base >= 2, exp >= 0.
[[nodiscard]] std::optional<BigInt> pow_within_bits(const BigInt& base,
                                                    const BigInt& exp,
                                                    unsigned cap_bits);

// base^exp when the result is <= bound, nullopt otherwise. base >= 2, exp >= 0.
[[nodiscard]] std::optional<BigInt> pow_within_bound(const BigInt& base,
                                                     const BigInt& exp,
                                                     const BigInt& bound);

}  // namespace towers
