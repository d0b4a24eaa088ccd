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

// Sparse polynomials over Q in a1..a4 and their normal form modulo the
// defining relation a1*a4 - a2^b*a3 - 1 of the threefold F_n.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgd/rational.hpp"

namespace dgd {

inline constexpr int kVariableCount = 4;

struct ExponentVector {
  std::array<std::uint32_t, kVariableCount> e{};

  constexpr ExponentVector() = default;
  constexpr ExponentVector(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3, std::uint32_t e4)
      : e{e1, e2, e3, e4} {}

  constexpr std::uint32_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  constexpr std::uint32_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  std::uint64_t total_degree() const {
    return std::uint64_t{e[0]} + e[1] + e[2] + e[3];
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
  }
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& e);

/// Graded lexicographic order, a1 > a2 > a3 > a4, largest monomial first.
struct GrlexGreater {
  bool operator()(const ExponentVector& lhs, const ExponentVector& rhs) const {
    const auto dl = lhs.total_degree();
    const auto dr = rhs.total_degree();
    if (dl != dr) return dl > dr;
    return lhs.e > rhs.e;
  }
};

struct Monomial {
  Rational coefficient;
  ExponentVector exponents;
};

using Point = std::array<Rational, kVariableCount>;

class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);

  static Polynomial variable(int index);
  static Polynomial monomial(const Rational& coefficient, const ExponentVector& exponents);
  static Polynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  std::vector<Monomial> monomials() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  long total_degree() const;
  Rational coefficient(const ExponentVector& exponents) const;

  /// Adds c * a^e in place, dropping the term if it cancels.
  void add_term(const ExponentVector& exponents, const Rational& coefficient);

  Polynomial partial(int variable) const;
  Rational evaluate(const Point& point) const;
  Polynomial scaled(const Rational& factor) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator-(Polynomial p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);
Rational evaluate(const Polynomial& p, const Point& point);
Polynomial pow(const Polynomial& p, unsigned exponent);

/// Ambient substitution a_i -> images[i], no reduction.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial, kVariableCount> images);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// The surface index n together with b = n - 1 and d = n - 2.
class SurfaceParameters {
 public:
  static SurfaceParameters from_n(int n);
  static SurfaceParameters from_b(int b);

  int n() const { return n_; }
  int b() const { return n_ - 1; }
  int d() const { return n_ - 2; }

  friend bool operator==(const SurfaceParameters&, const SurfaceParameters&) = default;

 private:
  explicit SurfaceParameters(int n) : n_(n) {}
  int n_;
};

/// A polynomial with no monomial divisible by a1*a4.
class QuotientPolynomial {
 public:
  const Polynomial& value() const { return value_; }
  const SurfaceParameters& params() const { return params_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const QuotientPolynomial&, const QuotientPolynomial&) = default;
  friend QuotientPolynomial reduce(const Polynomial& p, const SurfaceParameters& params);

 private:
  QuotientPolynomial(Polynomial value, SurfaceParameters params)
      : value_(std::move(value)), params_(params) {}
  Polynomial value_;
  SurfaceParameters params_;
};

/// a1*a4 - a2^b*a3 - 1.
Polynomial defining_polynomial(const SurfaceParameters& params);

/// Normal form modulo (a1*a4 - a2^b*a3 - 1): every a1^m*a4^m factor is
/// replaced by (a2^b*a3 + 1)^m.
QuotientPolynomial reduce(const Polynomial& p, const SurfaceParameters& params);
Polynomial normal_form(const Polynomial& p, const SurfaceParameters& params);

bool is_reduced(const Polynomial& p);
bool equals_mod_ideal(const Polynomial& p, const Polynomial& q, const SurfaceParameters& params);
bool lies_on_surface(const Point& point, const SurfaceParameters& params);

}  // namespace dgd
