#include "towers/polytower.hpp"

#include <utility>

#include "towers/errors.hpp"

namespace towers {

Polytower Polytower::unit() { return single(Tower()); }

Polytower Polytower::single(Tower t, BigInt coefficient) {
  Polytower p;
  p.accumulate(std::move(t), std::move(coefficient));
  return p;
}

BigInt Polytower::coefficient(const Tower& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polytower::accumulate(Tower t, BigInt coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(std::move(t), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Polytower poly_add(const Polytower& a, const Polytower& b) {
  Polytower out = a;
  for (const auto& [t, c] : b.terms()) {
    out.accumulate(t, c);
  }
  return out;
}

Polytower poly_sub(const Polytower& a, const Polytower& b) {
  Polytower out = a;
  for (const auto& [t, c] : b.terms()) {
    out.accumulate(t, -c);
  }
  return out;
}

Polytower poly_mul(const Polytower& a, const Polytower& b, unsigned cap_bits) {
  Polytower out;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      out.accumulate(multiply(ta, tb, cap_bits), ca * cb);
    }
  }
  return out;
}

Polytower raiser(const Tower& base, const Polytower& s, unsigned cap_bits) {
  Polytower out;
  for (const auto& [t, c] : s.terms()) {
    if (!t.is_integral()) {
      throw CanonicalError("exponent towers must be integral");
    }
    std::vector<Factor> factors;
    factors.reserve(base.factors().size());
    for (const Factor& f : base.factors()) {
      // (p^e)^t = p^(e*t); for a bare pillar e is 1 and this is just t.
      factors.push_back(Factor{f.pillar, f.negative,
                               multiply(f.exponent, t, cap_bits)});
    }
    out.accumulate(detail::trusted_tower(std::move(factors)), c);
  }
  return out;
}

}  // namespace towers
