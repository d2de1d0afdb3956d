#include "towers/arithmetic.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "towers/codec.hpp"
#include "towers/errors.hpp"

namespace towers {

namespace {

// Largest operand value settled straight from the addition table.
constexpr std::uint64_t kTableLimit = 32;

const Tower& table_sum(std::uint64_t a, std::uint64_t b) {
  static const std::vector<Tower> sums = [] {
    std::vector<Tower> v(2 * kTableLimit + 1);
    for (std::size_t s = 2; s < v.size(); ++s) {
      v[s] = encode(BigInt(s));
    }
    return v;
  }();
  return sums[a + b];
}

bool is_perfect_square(const Tower& t, unsigned cap_bits) {
  if (!t.is_integral()) {
    return false;
  }
  for (const Factor& f : t.factors()) {
    if (decode_integer(f.exponent, cap_bits) % 2 != 0) {
      return false;
    }
  }
  return true;
}

Tower inner_add(const Tower& a, const Tower& b, unsigned cap_bits);

Tower via_sqrt(const Tower& a, const Tower& b, unsigned cap_bits) {
  const Tower ra = sqrt_tower(a, cap_bits);
  const Tower rb = sqrt_tower(b, cap_bits);
  const Tower cross =
      multiply(encode(2), multiply(ra, rb, cap_bits), cap_bits);
  const Tower s = inner_add(ra, rb, cap_bits);
  return sub(multiply(s, s, cap_bits), cross, cap_bits);
}

// The square roots shrink fast, so a few levels down the operands either
// land in the table or stop being perfect squares.
Tower inner_add(const Tower& a, const Tower& b, unsigned cap_bits) {
  const BigInt va = decode_integer(a, cap_bits);
  const BigInt vb = decode_integer(b, cap_bits);
  if (va <= kTableLimit && vb <= kTableLimit) {
    return table_sum(va.convert_to<std::uint64_t>(),
                     vb.convert_to<std::uint64_t>());
  }
  if (is_perfect_square(a, cap_bits) && is_perfect_square(b, cap_bits)) {
    return via_sqrt(a, b, cap_bits);
  }
  return add(a, b, cap_bits);
}

}  // namespace

Tower add(const Tower& a, const Tower& b, unsigned cap_bits) {
  return encode_rational(decode(a, cap_bits) + decode(b, cap_bits));
}

Tower sub(const Tower& a, const Tower& b, unsigned cap_bits) {
  const Rational v = decode(a, cap_bits) - decode(b, cap_bits);
  if (v <= 0) {
    throw NonRepresentable("no tower stands for zero or a negative number");
  }
  return encode_rational(v);
}

Tower sqrt_tower(const Tower& a, unsigned cap_bits) {
  std::vector<Factor> out;
  out.reserve(a.factors().size());
  for (const Factor& f : a.factors()) {
    const BigInt e = decode_integer(f.exponent, cap_bits);
    if (e % 2 != 0) {
      throw NotPerfectSquare("exponent of p" + std::to_string(f.pillar) +
                             " is odd");
    }
    out.push_back(Factor{f.pillar, f.negative, encode(e / 2)});
  }
  return detail::trusted_tower(std::move(out));
}

Tower add_via_sqrt(const Tower& a, const Tower& b, unsigned cap_bits) {
  if (!is_perfect_square(a, cap_bits) || !is_perfect_square(b, cap_bits)) {
    throw NotApplicable("both summands must be perfect squares");
  }
  return via_sqrt(a, b, cap_bits);
}

BigInt distance(const Tower& a, const Tower& b, unsigned cap_bits) {
  const BigInt va = decode_integer(a, cap_bits);
  const BigInt vb = decode_integer(b, cap_bits);
  return va >= vb ? va - vb : vb - va;
}

SearchUniverse::SearchUniverse(std::vector<Tower> towers, unsigned cap_bits) {
  std::vector<std::pair<BigInt, Tower>> items;
  items.reserve(towers.size());
  for (Tower& t : towers) {
    BigInt v = decode_integer(t, cap_bits);
    items.emplace_back(std::move(v), std::move(t));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  towers_.reserve(items.size());
  values_.reserve(items.size());
  for (auto& [v, t] : items) {
    values_.push_back(std::move(v));
    towers_.push_back(std::move(t));
  }
}

SearchUniverse SearchUniverse::over_range(const BigInt& lo, const BigInt& hi) {
  if (lo < 1) {
    throw DomainError("the universe starts at 1");
  }
  std::vector<Tower> towers;
  for (BigInt v = lo; v <= hi; ++v) {
    towers.push_back(encode(v));
  }
  return SearchUniverse(std::move(towers));
}

Tower add_via_search(const Tower& a, const Tower& b,
                     const SearchUniverse& universe, unsigned cap_bits) {
  const BigInt va = decode_integer(a, cap_bits);
  const BigInt vb = decode_integer(b, cap_bits);
  const BigInt target = va + vb;
  std::size_t lo = 0;
  std::size_t hi = universe.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (universe.value_at(mid) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  for (std::size_t i = lo; i < universe.size(); ++i) {
    const BigInt& vp = universe.value_at(i);
    if (vp > target) {
      break;
    }
    const BigInt d = vp >= va ? vp - va : va - vp;
    if (vp >= va && vp >= vb && d >= vb && d <= vb) {
      return universe.tower_at(i);
    }
  }
  throw NotFound("no tower in the universe sits at the required distance");
}

}  // namespace towers
