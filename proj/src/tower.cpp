#include "towers/tower.hpp"

#include <algorithm>
#include <utility>

#include "towers/codec.hpp"
#include "towers/errors.hpp"

namespace towers {

namespace detail {

Tower trusted_tower(std::vector<Factor>&& factors) {
  return Tower(std::move(factors), Tower::Trusted{});
}

}  // namespace detail

namespace {

void validate(const std::vector<Factor>& factors, bool top_level) {
  PrimeIndex previous = 0;
  for (const Factor& f : factors) {
    if (f.pillar == 0) {
      throw CanonicalError("pillar indices start at 1");
    }
    if (f.pillar <= previous) {
      throw CanonicalError("factors must be strictly ascending by pillar");
    }
    previous = f.pillar;
    if (f.negative && !top_level) {
      throw CanonicalError("reciprocal pillars are only allowed at the top");
    }
    validate(f.exponent.factors(), false);
  }
}

}  // namespace

Tower Tower::pillar(PrimeIndex k) { return power(k, Tower()); }

Tower Tower::power(PrimeIndex k, Tower exponent, bool negative) {
  if (k == 0) {
    throw CanonicalError("pillar indices start at 1");
  }
  validate(exponent.factors(), false);
  std::vector<Factor> fs;
  fs.push_back(Factor{k, negative, std::move(exponent)});
  return Tower(std::move(fs), Trusted{});
}

Tower Tower::from_factors(std::vector<Factor> factors) {
  validate(factors, true);
  return Tower(std::move(factors), Trusted{});
}

bool Tower::is_integral() const noexcept {
  return std::none_of(factors_.begin(), factors_.end(),
                      [](const Factor& f) { return f.negative; });
}

std::size_t Tower::height() const {
  std::size_t h = 0;
  for (const Factor& f : factors_) {
    h = std::max(h, 1 + f.exponent.height());
  }
  return h;
}

std::size_t Tower::node_count() const {
  std::size_t n = 0;
  for (const Factor& f : factors_) {
    n += 1 + f.exponent.node_count();
  }
  return n;
}

bool Tower::operator==(const Tower& other) const {
  return factors_ == other.factors_;
}

namespace {

std::strong_ordering factor_order(const Factor& x, const Factor& y) {
  if (auto c = x.pillar <=> y.pillar; c != 0) {
    return c;
  }
  // Positive before reciprocal.
  if (auto c = static_cast<int>(x.negative) <=> static_cast<int>(y.negative);
      c != 0) {
    return c;
  }
  return structural_order(x.exponent, y.exponent);
}

}  // namespace

std::strong_ordering structural_order(const Tower& a, const Tower& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  return std::lexicographical_compare_three_way(
      fa.begin(), fa.end(), fb.begin(), fb.end(), factor_order);
}

Ordering compare(const Tower& a, const Tower& b, unsigned cap_bits) {
  if (a == b) {
    return Ordering::equal;
  }
  const Rational va = decode(a, cap_bits);
  const Rational vb = decode(b, cap_bits);
  if (va < vb) {
    return Ordering::less;
  }
  if (vb < va) {
    return Ordering::greater;
  }
  return Ordering::equal;
}

Tower multiply(const Tower& a, const Tower& b, unsigned cap_bits) {
  std::vector<Factor> out;
  out.reserve(a.factors().size() + b.factors().size());
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  const auto ea = a.factors().end();
  const auto eb = b.factors().end();
  while (ia != ea && ib != eb) {
    if (ia->pillar < ib->pillar) {
      out.push_back(*ia++);
    } else if (ib->pillar < ia->pillar) {
      out.push_back(*ib++);
    } else {
      const BigInt va = decode_integer(ia->exponent, cap_bits);
      const BigInt vb = decode_integer(ib->exponent, cap_bits);
      const BigInt sum =
          (ia->negative ? -va : va) + (ib->negative ? -vb : vb);
      if (sum != 0) {
        out.push_back(Factor{ia->pillar, sum < 0, encode(abs(sum))});
      }
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  return detail::trusted_tower(std::move(out));
}

}  // namespace towers
