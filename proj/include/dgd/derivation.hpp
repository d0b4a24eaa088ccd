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

#pragma once

// Polynomial vector fields on C^4 restricted to F_n, their Lie brackets,
// and the polynomial automorphisms obtained by exponentiating locally
// nilpotent ones.

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dgd/polynomial.hpp"

namespace dgd {

/// sum_i c_i * d/da_i. Coefficients are kept in normal form modulo the
/// defining relation, so equality is equality of vector fields on F_n.
class Derivation {
 public:
  using Coefficients = std::array<Polynomial, kVariableCount>;

  Derivation(Coefficients coefficients, const SurfaceParameters& params);

  static Derivation zero(const SurfaceParameters& params);
  /// d/da_{index+1}.
  static Derivation coordinate(int index, const SurfaceParameters& params);
  /// "c1; c2; c3; c4" in polynomial syntax.
  static Derivation parse(std::string_view text, const SurfaceParameters& params);

  const Coefficients& coefficients() const { return coefficients_; }
  const Polynomial& coefficient(int index) const {
    return coefficients_[static_cast<std::size_t>(index)];
  }
  const SurfaceParameters& params() const { return params_; }
  bool is_zero() const;

  /// f * X for a function f.
  Derivation times(const Polynomial& f) const;

  Derivation& operator+=(const Derivation& rhs);
  Derivation& operator-=(const Derivation& rhs);
  friend Derivation operator+(Derivation lhs, const Derivation& rhs) { return lhs += rhs; }
  friend Derivation operator-(Derivation lhs, const Derivation& rhs) { return lhs -= rhs; }
  friend Derivation operator-(const Derivation& x);
  friend Derivation operator*(const Rational& s, const Derivation& x);
  friend bool operator==(const Derivation&, const Derivation&) = default;

  std::string to_string() const;

 private:
  Coefficients coefficients_;
  SurfaceParameters params_;
};

std::ostream& operator<<(std::ostream& os, const Derivation& x);

/// sum_i c_i * dp/da_i in the ambient ring (no reduction).
Polynomial apply(const Derivation& x, const Polynomial& p);

/// [X, Y]_i = X(Y_i) - Y(X_i). Throws ParameterMismatch for different surfaces.
Derivation bracket(const Derivation& x, const Derivation& y);

/// X(F) lies in the ideal (F), F = a1*a4 - a2^b*a3 - 1.
bool is_tangent(const Derivation& x);

Point evaluate_field(const Derivation& x, const Point& point);

using NilpotencyOrders = std::array<unsigned, kVariableCount>;

/// For each coordinate the least m <= bound with X^m(a_i) = 0 on F_n, or
/// nothing when some coordinate survives bound iterations.
std::optional<NilpotencyOrders> is_locally_nilpotent(const Derivation& x, unsigned bound);

/// 4 * (largest total degree among the coefficients) + 4.
unsigned default_nilpotency_bound(const Derivation& x);

/// Ring endomorphism a_i -> images[i] of C[F_n], stored together with its
/// inverse.
class RingAutomorphism {
 public:
  using Images = std::array<Polynomial, kVariableCount>;

  RingAutomorphism(Images images, Images inverse_images, const SurfaceParameters& params);

  static RingAutomorphism identity(const SurfaceParameters& params);

  const Images& images() const { return images_; }
  const Images& inverse_images() const { return inverse_images_; }
  const SurfaceParameters& params() const { return params_; }

  /// p(images), reduced.
  Polynomial apply(const Polynomial& p) const;
  Polynomial apply_inverse(const Polynomial& p) const;
  RingAutomorphism inverse() const;

  bool is_identity() const;
  /// Image of F equals F in the quotient ring.
  bool preserves_defining_polynomial() const;
  /// Image of F equals F as an ambient polynomial.
  bool fixes_defining_polynomial_exactly() const;
  /// images and inverse_images compose to the identity in both orders.
  bool inverse_is_consistent() const;

  friend bool operator==(const RingAutomorphism&, const RingAutomorphism&) = default;

 private:
  Images images_;
  Images inverse_images_;
  SurfaceParameters params_;
};

/// (outer o inner)(p) = outer(inner(p)).
RingAutomorphism compose(const RingAutomorphism& outer, const RingAutomorphism& inner);

/// exp(X) = sum_j X^j / j!, finite for locally nilpotent X; the inverse is
/// exp(-X). Throws NilpotencyBoundExceeded when X is not nilpotent within
/// the bound.
RingAutomorphism exp_lnd(const Derivation& x, std::optional<unsigned> bound = std::nullopt);

/// alpha o X o alpha^-1: coefficient i is alpha(X(alpha^-1(a_i))).
Derivation pushforward(const RingAutomorphism& alpha, const Derivation& x);

}  // namespace dgd
