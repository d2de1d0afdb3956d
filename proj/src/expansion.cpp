#include "expansion.hpp"

#include <algorithm>
#include <string>

#include "towers/codec.hpp"
#include "towers/errors.hpp"
#include "towers/primes.hpp"

namespace towers::detail {

Expansion Expansion::start(const std::optional<BigInt>& bound) {
  Expansion e;
  e.bound = bound;
  e.terms.emplace(Tower(), ValuedTerm{1, 1});
  return e;
}

Expansion Expansion::annotate(const Polytower& p,
                              const std::optional<BigInt>& bound) {
  Expansion e;
  e.bound = bound;
  for (const auto& [t, c] : p.terms()) {
    if (bound) {
      auto v = decode_within(t, *bound);
      if (!v) {
        ++e.pruned;
        continue;
      }
      e.terms.emplace(t, ValuedTerm{c, std::move(*v)});
    } else {
      e.terms.emplace(t, ValuedTerm{c, 0});
    }
  }
  return e;
}

void Expansion::insert(Tower t, const BigInt& coefficient, BigInt value) {
  auto [it, inserted] =
      terms.emplace(std::move(t), ValuedTerm{coefficient, std::move(value)});
  if (!inserted) {
    it->second.coefficient += coefficient;
  }
}

void Expansion::cross(const Expansion& factor, unsigned cap_bits) {
  ValuedMap out;
  for (const auto& [ta, va] : terms) {
    for (const auto& [tb, vb] : factor.terms) {
      BigInt value = 0;
      if (bound) {
        value = va.value * vb.value;
        if (value > *bound) {
          ++pruned;
          continue;
        }
      }
      Tower product = multiply(ta, tb, cap_bits);
      auto [it, inserted] = out.emplace(
          std::move(product),
          ValuedTerm{va.coefficient * vb.coefficient, std::move(value)});
      if (!inserted) {
        it->second.coefficient += va.coefficient * vb.coefficient;
      }
    }
  }
  terms = std::move(out);
  pruned += factor.pruned;
}

Expansion Expansion::raise_factor(std::uint64_t prime, PrimeIndex pillar,
                                  const Expansion& current,
                                  const std::optional<BigInt>& bound) {
  Expansion out;
  out.bound = bound;
  out.terms.emplace(Tower(), ValuedTerm{1, 1});
  for (const auto& [t, vt] : current.terms) {
    BigInt value = 0;
    if (bound) {
      auto v = pow_within_bound(BigInt(prime), vt.value, *bound);
      if (!v) {
        ++out.pruned;
        continue;
      }
      value = std::move(*v);
    }
    out.insert(Tower::power(pillar, t), 1, std::move(value));
  }
  return out;
}

Polytower Expansion::to_polytower() const {
  Polytower out;
  for (const auto& [t, vt] : terms) {
    out.accumulate(t, vt.coefficient);
  }
  return out;
}

BigInt Expansion::max_coefficient() const {
  BigInt m = 0;
  for (const auto& [t, vt] : terms) {
    m = std::max(m, vt.coefficient);
  }
  return m;
}

void Expansion::require_unit_coefficients(const char* context) const {
  for (const auto& [t, vt] : terms) {
    if (vt.coefficient != 1) {
      throw DuplicateGenerated(std::string(context) +
                               " produced a repeated term");
    }
  }
}

std::vector<PrimeIndex> validated_pillars(
    const std::vector<std::uint64_t>& primes) {
  std::vector<PrimeIndex> pillars;
  pillars.reserve(primes.size());
  for (std::uint64_t p : primes) {
    const auto index = PrimeTable::index_of(p);
    if (!index) {
      throw DomainError(std::to_string(p) + " is not prime");
    }
    pillars.push_back(static_cast<PrimeIndex>(*index));
  }
  std::sort(pillars.begin(), pillars.end());
  if (std::adjacent_find(pillars.begin(), pillars.end()) != pillars.end()) {
    throw DomainError("the prime list has a repeated entry");
  }
  return pillars;
}

}  // namespace towers::detail
