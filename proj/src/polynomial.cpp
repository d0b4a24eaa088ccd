// Copyright 2026 The dgdensity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dgd/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "dgd/detail/expression_parser.hpp"
#include "dgd/errors.hpp"

namespace dgd {

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
  return os << '(' << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ')';
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(ExponentVector{}, constant);
}

Polynomial Polynomial::variable(int index) {
  if (index < 0 || index >= kVariableCount) throw DomainError("variable index out of range");
  ExponentVector e;
  e[index] = 1;
  return monomial(Rational(1), e);
}

Polynomial Polynomial::monomial(const Rational& coefficient, const ExponentVector& exponents) {
  Polynomial p;
  p.add_term(exponents, coefficient);
  return p;
}

Polynomial Polynomial::parse(std::string_view text) {
  auto resolve = [](std::string_view name) -> Polynomial {
    if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '4') {
      return Polynomial::variable(name[1] - '1');
    }
    throw ParseError("unknown variable '" + std::string(name) + "' (expected a1..a4)");
  };
  return detail::parse_expression<Polynomial>(text, resolve);
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({c, e});
  return out;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Grlex puts the highest total degree first.
  return static_cast<long>(terms_.begin()->first.total_degree());
}

Rational Polynomial::coefficient(const ExponentVector& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& exponents, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(int variable) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    const auto power = e[variable];
    if (power == 0) continue;
    ExponentVector lowered = e;
    --lowered[variable];
    out.terms_.emplace_hint(out.terms_.end(), lowered, c * power);
  }
  return out;
}

Rational Polynomial::evaluate(const Point& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kVariableCount; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out = *this;
  out *= factor;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  Rational product;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      product = cl * cr;
      out.add_term(el + er, product);
    }
  }
  return out;
}

Polynomial operator-(Polynomial p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

namespace {

void write_monomial(std::ostream& os, const ExponentVector& e) {
  bool first = true;
  for (int i = 0; i < kVariableCount; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'a' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = e == ExponentVector{};
    if (constant) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str() << '*';
      write_monomial(os, e);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }
Rational evaluate(const Polynomial& p, const Point& point) { return p.evaluate(point); }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial, kVariableCount> images) {
  // powers[i][k] = images[i]^k, grown on demand.
  std::array<std::vector<Polynomial>, kVariableCount> powers;
  for (int i = 0; i < kVariableCount; ++i) powers[static_cast<std::size_t>(i)].emplace_back(Rational(1));
  auto power = [&](int i, std::uint32_t k) -> const Polynomial& {
    auto& table = powers[static_cast<std::size_t>(i)];
    while (table.size() <= k) table.push_back(table.back() * images[static_cast<std::size_t>(i)]);
    return table[k];
  };
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    Polynomial term(c);
    for (int i = 0; i < kVariableCount; ++i) {
      if (e[i] > 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

SurfaceParameters SurfaceParameters::from_n(int n) {
  if (n < 2) throw DomainError("surface index n must be at least 2, got " + std::to_string(n));
  return SurfaceParameters(n);
}

SurfaceParameters SurfaceParameters::from_b(int b) {
  if (b < 1) throw DomainError("parameter b must be at least 1, got " + std::to_string(b));
  return SurfaceParameters(b + 1);
}

Polynomial defining_polynomial(const SurfaceParameters& params) {
  Polynomial f = Polynomial::monomial(Rational(1), {1, 0, 0, 1});
  f.add_term({0, static_cast<std::uint32_t>(params.b()), 1, 0}, Rational(-1));
  f.add_term({}, Rational(-1));
  return f;
}

Polynomial normal_form(const Polynomial& p, const SurfaceParameters& params) {
  const auto b = static_cast<std::uint32_t>(params.b());
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t m = std::min(e[0], e[3]);
    if (m == 0) {
      out.add_term(e, c);
      continue;
    }
    // (a1 a4)^m = (a2^b a3 + 1)^m
    for (std::uint32_t j = 0; j <= m; ++j) {
      const ExponentVector image{e[0] - m, e[1] + b * j, e[2] + j, e[3] - m};
      out.add_term(image, c * Rational(binomial(m, j)));
    }
  }
  return out;
}

QuotientPolynomial reduce(const Polynomial& p, const SurfaceParameters& params) {
  return QuotientPolynomial(normal_form(p, params), params);
}

bool is_reduced(const Polynomial& p) {
  return std::none_of(p.terms().begin(), p.terms().end(),
                      [](const auto& term) { return term.first[0] > 0 && term.first[3] > 0; });
}

bool equals_mod_ideal(const Polynomial& p, const Polynomial& q, const SurfaceParameters& params) {
  return normal_form(p - q, params).is_zero();
}

bool lies_on_surface(const Point& point, const SurfaceParameters& params) {
  return defining_polynomial(params).evaluate(point) == 0;
}

}  // namespace dgd
