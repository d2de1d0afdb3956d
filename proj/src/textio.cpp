#include "towers/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "towers/errors.hpp"

namespace towers {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedValue run() {
    Polytower combination;
    parse_signed_term(combination);
    skip_ws();
    while (!eof() && peek() == '+') {
      ++pos_;
      saw_sum_ = true;
      parse_signed_term(combination);
      skip_ws();
    }
    if (!eof()) {
      fail("unexpected trailing input");
    }
    if (!saw_sum_ && !saw_coefficient_) {
      // A bare tower stays a tower.
      return first_tower_;
    }
    return combination;
  }

 private:
  void parse_signed_term(Polytower& into) {
    skip_ws();
    if (eof()) {
      fail("expected a term");
    }
    BigInt coefficient = 1;
    bool explicit_coefficient = false;
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t mark = pos_;
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
        skip_ws();
      }
      BigInt magnitude = parse_integer();
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        coefficient = negative ? -magnitude : magnitude;
        explicit_coefficient = true;
      } else if (!negative && magnitude == 1) {
        // The tower "1" on its own; first_tower_ already holds it.
        into.accumulate(Tower(), 1);
        return;
      } else {
        pos_ = mark;
        fail("a coefficient must be followed by '*'");
      }
    }
    if (explicit_coefficient) {
      saw_coefficient_ = true;
    }
    Tower t = parse_tower_node(true);
    if (!saw_sum_ && !saw_coefficient_) {
      first_tower_ = t;
    }
    into.accumulate(std::move(t), std::move(coefficient));
  }

  Tower parse_tower_node(bool top_level) {
    skip_ws();
    if (eof()) {
      fail("expected a tower");
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t mark = pos_;
      if (parse_integer() != 1) {
        pos_ = mark;
        fail("the only literal tower is 1");
      }
      return Tower();
    }
    std::vector<Factor> factors;
    factors.push_back(parse_factor(top_level));
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      factors.push_back(parse_factor(top_level));
      skip_ws();
    }
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) {
                return a.pillar < b.pillar;
              });
    for (std::size_t i = 1; i < factors.size(); ++i) {
      if (factors[i].pillar == factors[i - 1].pillar) {
        throw CanonicalError("pillar p" + std::to_string(factors[i].pillar) +
                             " appears twice in one tower");
      }
    }
    return Tower::from_factors(std::move(factors));
  }

  Factor parse_factor(bool top_level) {
    skip_ws();
    if (eof() || peek() != 'p') {
      fail("expected a pillar like p1");
    }
    ++pos_;
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a pillar index");
    }
    const BigInt index = parse_integer();
    if (index < 1 || index > std::numeric_limits<PrimeIndex>::max()) {
      fail("pillar index out of range");
    }
    Factor f;
    f.pillar = index.convert_to<PrimeIndex>();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      expect('(');
      skip_ws();
      if (!eof() && peek() == '-') {
        ++pos_;
        if (!top_level) {
          throw CanonicalError(
              "reciprocal pillars are only allowed at the top");
        }
        f.negative = true;
      }
      f.exponent = parse_parenthesized_tower();
      skip_ws();
      expect(')');
    }
    return f;
  }

  // The exponent proper, with any number of redundant parentheses around it.
  Tower parse_parenthesized_tower() {
    skip_ws();
    if (!eof() && peek() == '(') {
      ++pos_;
      Tower t = parse_parenthesized_tower();
      skip_ws();
      expect(')');
      return t;
    }
    return parse_tower_node(false);
  }

  BigInt parse_integer() {
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected digits");
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[nodiscard]] bool eof() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool saw_sum_ = false;
  bool saw_coefficient_ = false;
  Tower first_tower_;
};

void print_tower(std::string& out, const Tower& t) {
  if (t.is_one()) {
    out += '1';
    return;
  }
  bool first = true;
  for (const Factor& f : t.factors()) {
    if (!first) {
      out += '*';
    }
    first = false;
    out += 'p';
    out += std::to_string(f.pillar);
    if (f.negative) {
      out += "^(-";
      print_tower(out, f.exponent);
      out += ')';
    } else if (!f.exponent.is_one()) {
      out += "^(";
      print_tower(out, f.exponent);
      out += ')';
    }
  }
}

}  // namespace

ParsedValue parse_value(std::string_view text) {
  return Parser(text).run();
}

Tower parse_tower(std::string_view text) {
  ParsedValue v = parse_value(text);
  if (std::holds_alternative<Tower>(v)) {
    return std::get<Tower>(v);
  }
  const Polytower& p = std::get<Polytower>(v);
  if (p.term_count() == 1 && p.terms().begin()->second == 1) {
    return p.terms().begin()->first;
  }
  throw SyntaxError("expected a single tower", 0);
}

Polytower parse_polytower(std::string_view text) {
  ParsedValue v = parse_value(text);
  if (std::holds_alternative<Polytower>(v)) {
    return std::get<Polytower>(v);
  }
  return Polytower::single(std::get<Tower>(v));
}

std::string to_text(const Tower& t) {
  std::string out;
  print_tower(out, t);
  return out;
}

std::string to_text(const Polytower& v) {
  if (v.is_zero()) {
    return "0*1";
  }
  struct Item {
    const Tower* tower;
    const BigInt* coefficient;
    std::optional<Rational> value;
  };
  std::vector<Item> items;
  items.reserve(v.term_count());
  for (const auto& [t, c] : v.terms()) {
    Item item{&t, &c, std::nullopt};
    try {
      item.value = decode(t, kDefaultCapBits);
    } catch (const OverflowError&) {
      // Too large to evaluate: sorts after every evaluable term.
    }
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.value.has_value() != b.value.has_value()) {
      return a.value.has_value();
    }
    if (a.value && b.value && *a.value != *b.value) {
      return *a.value < *b.value;
    }
    return structural_order(*a.tower, *b.tower) < 0;
  });
  std::string out;
  bool first = true;
  for (const Item& item : items) {
    if (!first) {
      out += " + ";
    }
    first = false;
    if (*item.coefficient != 1) {
      out += item.coefficient->str();
      out += '*';
    }
    print_tower(out, *item.tower);
  }
  return out;
}

std::string to_text(const UniPolynomial& p) {
  if (p.coefficients().empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
    const BigInt& c = p.coefficients()[d];
    if (c == 0) {
      continue;
    }
    if (!first) {
      out += " + ";
    }
    first = false;
    if (d == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) {
      out += c.str();
      out += '*';
    }
    out += 'x';
    if (d > 1) {
      out += '^';
      out += std::to_string(d);
    }
  }
  return out;
}

std::string to_text(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) {
    out += '/';
    out += denominator(q).str();
  }
  return out;
}

}  // namespace towers
