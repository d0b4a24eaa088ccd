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

// Monomials in the invariant generators y = a1*a2, z = a1*a4 and
// x_k = a2^(b-k)*a3*a4^k (0 <= k <= b), the relations among the x_k, and
// the x-normal form x0^M * x_h * xb^N.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgd/polynomial.hpp"

namespace dgd {

/// Generator slots: 0 -> y, 1 -> z, 2 + k -> x_k.
inline constexpr std::size_t kGeneratorY = 0;
inline constexpr std::size_t kGeneratorZ = 1;
inline constexpr std::size_t generator_x(int k) { return 2 + static_cast<std::size_t>(k); }

std::size_t generator_count(const SurfaceParameters& params);
std::string generator_name(std::size_t slot);
ExponentVector generator_lift(std::size_t slot, const SurfaceParameters& params);

class GeneratorWord {
 public:
  explicit GeneratorWord(const SurfaceParameters& params);
  GeneratorWord(const SurfaceParameters& params, std::vector<unsigned> exponents);

  static GeneratorWord y(const SurfaceParameters& params, unsigned power = 1);
  static GeneratorWord z(const SurfaceParameters& params, unsigned power = 1);
  static GeneratorWord x(int k, const SurfaceParameters& params, unsigned power = 1);
  /// Monomial syntax only, e.g. "y^2*x0*x1" or "1".
  static GeneratorWord parse(std::string_view text, const SurfaceParameters& params);

  const SurfaceParameters& params() const { return params_; }
  const std::vector<unsigned>& exponents() const { return exponents_; }
  unsigned exponent(std::size_t slot) const { return exponents_.at(slot); }
  unsigned y_exponent() const { return exponents_[kGeneratorY]; }
  unsigned z_exponent() const { return exponents_[kGeneratorZ]; }
  unsigned x_exponent(int k) const { return exponents_.at(generator_x(k)); }

  /// Number of generator factors.
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_x_word() const { return y_exponent() == 0 && z_exponent() == 0; }

  GeneratorWord with_exponent(std::size_t slot, unsigned power) const;
  GeneratorWord pow(unsigned power) const;

  friend GeneratorWord operator*(const GeneratorWord& lhs, const GeneratorWord& rhs);
  friend bool operator==(const GeneratorWord& lhs, const GeneratorWord& rhs) {
    return lhs.exponents_ == rhs.exponents_ && lhs.params_ == rhs.params_;
  }
  friend auto operator<=>(const GeneratorWord& lhs, const GeneratorWord& rhs) {
    return lhs.exponents_ <=> rhs.exponents_;
  }

  /// Factors in the order y, z, x0..xb joined by `separator`; "1" if empty.
  std::string to_string(std::string_view separator = "*") const;

 private:
  SurfaceParameters params_;
  std::vector<unsigned> exponents_;
};

std::ostream& operator<<(std::ostream& os, const GeneratorWord& w);

ExponentVector lift_exponents(const GeneratorWord& w);
/// The word as a monomial in a1..a4.
Polynomial lift(const GeneratorWord& w);

/// Q-linear combination of generator words.
class WordPolynomial {
 public:
  struct WordOrder {
    bool operator()(const GeneratorWord& lhs, const GeneratorWord& rhs) const;
  };
  using TermMap = std::map<GeneratorWord, Rational, WordOrder>;

  explicit WordPolynomial(const SurfaceParameters& params);
  WordPolynomial(const SurfaceParameters& params, const Rational& constant);
  explicit WordPolynomial(const GeneratorWord& word, const Rational& coefficient = 1);

  static WordPolynomial parse(std::string_view text, const SurfaceParameters& params);

  const SurfaceParameters& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const GeneratorWord& word, const Rational& coefficient);

  WordPolynomial& operator+=(const WordPolynomial& rhs);
  WordPolynomial& operator-=(const WordPolynomial& rhs);
  friend WordPolynomial operator+(WordPolynomial lhs, const WordPolynomial& rhs) { return lhs += rhs; }
  friend WordPolynomial operator-(WordPolynomial lhs, const WordPolynomial& rhs) { return lhs -= rhs; }
  friend WordPolynomial operator-(WordPolynomial p);
  friend WordPolynomial operator*(const WordPolynomial& lhs, const WordPolynomial& rhs);
  friend bool operator==(const WordPolynomial& lhs, const WordPolynomial& rhs) {
    return lhs.params_ == rhs.params_ && lhs.terms_ == rhs.terms_;
  }

  Polynomial lift() const;
  std::string to_string(std::string_view separator = "*") const;

 private:
  SurfaceParameters params_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const WordPolynomial& p);

/// x_k * x_h = x_{h+k} * x_0 when h + k <= b, and x_b * x_{h+k-b} otherwise.
std::pair<int, int> rewrite_pair(int k, int h, const SurfaceParameters& params);

/// x0^M * x_h * xb^N with h strictly between 0 and b when present.
struct XNormalForm {
  int b = 1;
  unsigned M = 0;
  std::optional<int> h;
  unsigned N = 0;

  GeneratorWord word(const SurfaceParameters& params) const;
  /// "x0^M*x_h*xb^N" with absent factors dropped; "1" if all are absent.
  std::string to_string() const;
  friend bool operator==(const XNormalForm&, const XNormalForm&) = default;
};

/// Combines middle factors (indices strictly between 0 and b) two at a
/// time, smallest indices first, until at most one is left. Rejects words
/// containing y or z.
XNormalForm x_normal_form(const GeneratorWord& w);

/// The intermediate words of x_normal_form, starting with the input.
std::vector<GeneratorWord> x_normal_form_trace(const GeneratorWord& w);

/// Replaces z^T by (1 + x0)^T.
WordPolynomial eliminate_z(const GeneratorWord& w);
WordPolynomial eliminate_z(const WordPolynomial& p);

}  // namespace dgd
