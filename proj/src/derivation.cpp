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

#include "dgd/derivation.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "dgd/errors.hpp"

namespace dgd {

namespace {

void require_same_surface(const SurfaceParameters& a, const SurfaceParameters& b) {
  if (!(a == b)) {
    throw ParameterMismatch("fields belong to different surfaces (n = " + std::to_string(a.n()) +
                            " vs n = " + std::to_string(b.n()) + ")");
  }
}

// p(images) with every intermediate product reduced; power tables are
// shared across the polynomials substituted through one instance.
class ReducingSubstitution {
 public:
  ReducingSubstitution(const RingAutomorphism::Images& images, const SurfaceParameters& params)
      : images_(images), params_(params) {
    for (auto& table : powers_) table.emplace_back(Rational(1));
  }

  Polynomial operator()(const Polynomial& p) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
      Polynomial term(c);
      for (int i = 0; i < kVariableCount; ++i) {
        if (e[i] == 0) continue;
        term = normal_form(term * power(i, e[i]), params_);
      }
      out += term;
    }
    return out;
  }

 private:
  const Polynomial& power(int i, std::uint32_t k) {
    auto& table = powers_[static_cast<std::size_t>(i)];
    while (table.size() <= k) {
      table.push_back(normal_form(table.back() * images_[static_cast<std::size_t>(i)], params_));
    }
    return table[k];
  }

  const RingAutomorphism::Images& images_;
  SurfaceParameters params_;
  std::array<std::vector<Polynomial>, kVariableCount> powers_;
};

}  // namespace

Derivation::Derivation(Coefficients coefficients, const SurfaceParameters& params)
    : params_(params) {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coefficients_[i] = normal_form(coefficients[i], params);
  }
}

Derivation Derivation::zero(const SurfaceParameters& params) { return Derivation({}, params); }

Derivation Derivation::coordinate(int index, const SurfaceParameters& params) {
  if (index < 0 || index >= kVariableCount) throw DomainError("coordinate index out of range");
  Coefficients c;
  c[static_cast<std::size_t>(index)] = Polynomial(Rational(1));
  return Derivation(std::move(c), params);
}

Derivation Derivation::parse(std::string_view text, const SurfaceParameters& params) {
  Coefficients c;
  std::size_t start = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto end = text.find(';', start);
    const bool last = i + 1 == c.size();
    if (last != (end == std::string_view::npos)) {
      throw ParseError("a field needs exactly four ';'-separated coefficients: '" +
                       std::string(text) + "'");
    }
    c[i] = Polynomial::parse(text.substr(start, last ? std::string_view::npos : end - start));
    start = end + 1;
  }
  return Derivation(std::move(c), params);
}

bool Derivation::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

Derivation Derivation::times(const Polynomial& f) const {
  Coefficients c;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f * coefficients_[i];
  return Derivation(std::move(c), params_);
}

Derivation& Derivation::operator+=(const Derivation& rhs) {
  require_same_surface(params_, rhs.params_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& rhs) {
  require_same_surface(params_, rhs.params_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  return *this;
}

Derivation operator-(const Derivation& x) {
  Derivation out = x;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

Derivation operator*(const Rational& s, const Derivation& x) {
  Derivation out = x;
  for (auto& c : out.coefficients_) c *= s;
  return out;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i > 0) os << "; ";
    os << coefficients_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Derivation& x) { return os << x.to_string(); }

Polynomial apply(const Derivation& x, const Polynomial& p) {
  Polynomial out;
  for (int i = 0; i < kVariableCount; ++i) {
    const Polynomial& c = x.coefficient(i);
    if (c.is_zero()) continue;
    const Polynomial dp = p.partial(i);
    if (dp.is_zero()) continue;
    out += c * dp;
  }
  return out;
}

Derivation bracket(const Derivation& x, const Derivation& y) {
  require_same_surface(x.params(), y.params());
  Derivation::Coefficients c;
  for (int i = 0; i < kVariableCount; ++i) {
    c[static_cast<std::size_t>(i)] = apply(x, y.coefficient(i)) - apply(y, x.coefficient(i));
  }
  return Derivation(std::move(c), x.params());
}

bool is_tangent(const Derivation& x) {
  return normal_form(apply(x, defining_polynomial(x.params())), x.params()).is_zero();
}

Point evaluate_field(const Derivation& x, const Point& point) {
  Point out;
  for (int i = 0; i < kVariableCount; ++i) {
    out[static_cast<std::size_t>(i)] = x.coefficient(i).evaluate(point);
  }
  return out;
}

std::optional<NilpotencyOrders> is_locally_nilpotent(const Derivation& x, unsigned bound) {
  if (bound < 1) throw DomainError("nilpotency bound must be at least 1");
  NilpotencyOrders orders{};
  for (int i = 0; i < kVariableCount; ++i) {
    Polynomial current = Polynomial::variable(i);
    unsigned m = 0;
    while (!current.is_zero()) {
      if (m == bound) return std::nullopt;
      current = normal_form(apply(x, current), x.params());
      ++m;
    }
    orders[static_cast<std::size_t>(i)] = m;
  }
  return orders;
}

unsigned default_nilpotency_bound(const Derivation& x) {
  long degree = 0;
  for (const auto& c : x.coefficients()) degree = std::max(degree, c.total_degree());
  return static_cast<unsigned>(4 * degree + 4);
}

RingAutomorphism::RingAutomorphism(Images images, Images inverse_images,
                                   const SurfaceParameters& params)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)), params_(params) {}

RingAutomorphism RingAutomorphism::identity(const SurfaceParameters& params) {
  Images id;
  for (int i = 0; i < kVariableCount; ++i) id[static_cast<std::size_t>(i)] = Polynomial::variable(i);
  return RingAutomorphism(id, id, params);
}

Polynomial RingAutomorphism::apply(const Polynomial& p) const {
  return ReducingSubstitution(images_, params_)(p);
}

Polynomial RingAutomorphism::apply_inverse(const Polynomial& p) const {
  return ReducingSubstitution(inverse_images_, params_)(p);
}

RingAutomorphism RingAutomorphism::inverse() const {
  return RingAutomorphism(inverse_images_, images_, params_);
}

bool RingAutomorphism::is_identity() const {
  for (int i = 0; i < kVariableCount; ++i) {
    if (!equals_mod_ideal(images_[static_cast<std::size_t>(i)], Polynomial::variable(i), params_)) {
      return false;
    }
  }
  return true;
}

bool RingAutomorphism::preserves_defining_polynomial() const {
  const Polynomial f = defining_polynomial(params_);
  return equals_mod_ideal(apply(f), f, params_);
}

bool RingAutomorphism::fixes_defining_polynomial_exactly() const {
  const Polynomial f = defining_polynomial(params_);
  return substitute(f, images_) == f;
}

bool RingAutomorphism::inverse_is_consistent() const {
  return compose(*this, inverse()).is_identity() && compose(inverse(), *this).is_identity();
}

RingAutomorphism compose(const RingAutomorphism& outer, const RingAutomorphism& inner) {
  if (!(outer.params() == inner.params())) {
    throw ParameterMismatch("automorphisms belong to different surfaces");
  }
  ReducingSubstitution forward(outer.images(), outer.params());
  ReducingSubstitution backward(inner.inverse_images(), inner.params());
  RingAutomorphism::Images images;
  RingAutomorphism::Images inverse_images;
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = forward(inner.images()[i]);
    inverse_images[i] = backward(outer.inverse_images()[i]);
  }
  return RingAutomorphism(std::move(images), std::move(inverse_images), outer.params());
}

namespace {

RingAutomorphism::Images exponential_images(const Derivation& x, unsigned bound) {
  RingAutomorphism::Images images;
  for (int i = 0; i < kVariableCount; ++i) {
    Polynomial iterate = Polynomial::variable(i);
    Polynomial sum;
    unsigned j = 0;
    Integer j_factorial = 1;
    while (!iterate.is_zero()) {
      if (j == bound) {
        throw NilpotencyBoundExceeded("derivation is not nilpotent on a" + std::to_string(i + 1) +
                                      " within " + std::to_string(bound) + " iterations");
      }
      sum += iterate.scaled(Rational(1, 1) / Rational(j_factorial));
      iterate = normal_form(apply(x, iterate), x.params());
      ++j;
      j_factorial *= j;
    }
    images[static_cast<std::size_t>(i)] = std::move(sum);
  }
  return images;
}

}  // namespace

RingAutomorphism exp_lnd(const Derivation& x, std::optional<unsigned> bound) {
  const unsigned limit = bound.value_or(default_nilpotency_bound(x));
  auto forward = exponential_images(x, limit);
  auto backward = exponential_images(-x, limit);
  return RingAutomorphism(std::move(forward), std::move(backward), x.params());
}

Derivation pushforward(const RingAutomorphism& alpha, const Derivation& x) {
  require_same_surface(alpha.params(), x.params());
  ReducingSubstitution forward(alpha.images(), alpha.params());
  Derivation::Coefficients c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = forward(normal_form(apply(x, alpha.inverse_images()[i]), x.params()));
  }
  return Derivation(std::move(c), x.params());
}

}  // namespace dgd
