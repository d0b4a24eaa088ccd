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

#include "dgd/genring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dgd/detail/expression_parser.hpp"
#include "dgd/errors.hpp"

namespace dgd {

std::size_t generator_count(const SurfaceParameters& params) {
  return static_cast<std::size_t>(params.b()) + 3;
}

std::string generator_name(std::size_t slot) {
  if (slot == kGeneratorY) return "y";
  if (slot == kGeneratorZ) return "z";
  return "x" + std::to_string(slot - 2);
}

ExponentVector generator_lift(std::size_t slot, const SurfaceParameters& params) {
  if (slot == kGeneratorY) return {1, 1, 0, 0};
  if (slot == kGeneratorZ) return {1, 0, 0, 1};
  const auto b = static_cast<std::uint32_t>(params.b());
  const auto k = static_cast<std::uint32_t>(slot - 2);
  if (k > b) throw DomainError("generator index x" + std::to_string(k) + " exceeds b");
  return {0, b - k, 1, k};
}

GeneratorWord::GeneratorWord(const SurfaceParameters& params)
    : params_(params), exponents_(generator_count(params), 0) {}

GeneratorWord::GeneratorWord(const SurfaceParameters& params, std::vector<unsigned> exponents)
    : params_(params), exponents_(std::move(exponents)) {
  if (exponents_.size() != generator_count(params)) {
    throw DomainError("generator word needs " + std::to_string(generator_count(params)) +
                      " exponents, got " + std::to_string(exponents_.size()));
  }
}

GeneratorWord GeneratorWord::y(const SurfaceParameters& params, unsigned power) {
  return GeneratorWord(params).with_exponent(kGeneratorY, power);
}

GeneratorWord GeneratorWord::z(const SurfaceParameters& params, unsigned power) {
  return GeneratorWord(params).with_exponent(kGeneratorZ, power);
}

GeneratorWord GeneratorWord::x(int k, const SurfaceParameters& params, unsigned power) {
  if (k < 0 || k > params.b()) {
    throw DomainError("x index " + std::to_string(k) + " outside [0, " +
                      std::to_string(params.b()) + "]");
  }
  return GeneratorWord(params).with_exponent(generator_x(k), power);
}

GeneratorWord GeneratorWord::parse(std::string_view text, const SurfaceParameters& params) {
  const WordPolynomial p = WordPolynomial::parse(text, params);
  if (p.terms().size() != 1 || p.terms().begin()->second != 1) {
    throw ParseError("expected a single generator monomial, got '" + std::string(text) + "'");
  }
  return p.terms().begin()->first;
}

unsigned GeneratorWord::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
}

GeneratorWord GeneratorWord::with_exponent(std::size_t slot, unsigned power) const {
  GeneratorWord out = *this;
  out.exponents_.at(slot) = power;
  return out;
}

GeneratorWord GeneratorWord::pow(unsigned power) const {
  GeneratorWord out = *this;
  for (auto& e : out.exponents_) e *= power;
  return out;
}

GeneratorWord operator*(const GeneratorWord& lhs, const GeneratorWord& rhs) {
  if (!(lhs.params_ == rhs.params_)) throw ParameterMismatch("generator words of different surfaces");
  GeneratorWord out = lhs;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += rhs.exponents_[i];
  return out;
}

std::string GeneratorWord::to_string(std::string_view separator) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t slot = 0; slot < exponents_.size(); ++slot) {
    if (exponents_[slot] == 0) continue;
    if (!first) os << separator;
    first = false;
    os << generator_name(slot);
    if (exponents_[slot] > 1) os << '^' << exponents_[slot];
  }
  return first ? "1" : os.str();
}

std::ostream& operator<<(std::ostream& os, const GeneratorWord& w) { return os << w.to_string(); }

ExponentVector lift_exponents(const GeneratorWord& w) {
  ExponentVector total;
  for (std::size_t slot = 0; slot < w.exponents().size(); ++slot) {
    const unsigned power = w.exponents()[slot];
    if (power == 0) continue;
    const ExponentVector g = generator_lift(slot, w.params());
    for (int i = 0; i < kVariableCount; ++i) total[i] += power * g[i];
  }
  return total;
}

Polynomial lift(const GeneratorWord& w) { return Polynomial::monomial(Rational(1), lift_exponents(w)); }

bool WordPolynomial::WordOrder::operator()(const GeneratorWord& lhs, const GeneratorWord& rhs) const {
  const unsigned dl = lhs.degree();
  const unsigned dr = rhs.degree();
  if (dl != dr) return dl < dr;
  return lhs.exponents() > rhs.exponents();
}

WordPolynomial::WordPolynomial(const SurfaceParameters& params) : params_(params) {}

WordPolynomial::WordPolynomial(const SurfaceParameters& params, const Rational& constant)
    : params_(params) {
  add_term(GeneratorWord(params), constant);
}

WordPolynomial::WordPolynomial(const GeneratorWord& word, const Rational& coefficient)
    : params_(word.params()) {
  add_term(word, coefficient);
}

WordPolynomial WordPolynomial::parse(std::string_view text, const SurfaceParameters& params) {
  auto resolve = [&params](std::string_view name) -> WordPolynomial {
    if (name == "y") return WordPolynomial(GeneratorWord::y(params));
    if (name == "z") return WordPolynomial(GeneratorWord::z(params));
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        name.size() <= 4) {
      const int k = std::stoi(std::string(name.substr(1)));
      if (k <= params.b()) return WordPolynomial(GeneratorWord::x(k, params));
    }
    throw ParseError("unknown generator '" + std::string(name) + "' (expected y, z, x0..x" +
                     std::to_string(params.b()) + ")");
  };
  auto constant = [&params](const Rational& c) { return WordPolynomial(params, c); };
  return detail::parse_expression<WordPolynomial>(text, resolve, constant);
}

void WordPolynomial::add_term(const GeneratorWord& word, const Rational& coefficient) {
  if (!(word.params() == params_)) throw ParameterMismatch("word of a different surface");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

WordPolynomial operator-(WordPolynomial p) {
  for (auto& [w, c] : p.terms_) c = -c;
  return p;
}

WordPolynomial operator*(const WordPolynomial& lhs, const WordPolynomial& rhs) {
  if (!(lhs.params_ == rhs.params_)) throw ParameterMismatch("word polynomials of different surfaces");
  WordPolynomial out(lhs.params_);
  for (const auto& [wl, cl] : lhs.terms_) {
    for (const auto& [wr, cr] : rhs.terms_) out.add_term(wl * wr, cl * cr);
  }
  return out;
}

Polynomial WordPolynomial::lift() const {
  Polynomial out;
  for (const auto& [w, c] : terms_) out.add_term(lift_exponents(w), c);
  return out;
}

std::string WordPolynomial::to_string(std::string_view separator) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (w.is_one()) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str() << separator;
      os << w.to_string(separator);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const WordPolynomial& p) { return os << p.to_string(); }

std::pair<int, int> rewrite_pair(int k, int h, const SurfaceParameters& params) {
  const int b = params.b();
  if (k < 0 || k > b || h < 0 || h > b) {
    throw DomainError("rewrite_pair indices must lie in [0, " + std::to_string(b) + "]");
  }
  if (h + k <= b) return {h + k, 0};
  return {b, h + k - b};
}

GeneratorWord XNormalForm::word(const SurfaceParameters& params) const {
  GeneratorWord w = GeneratorWord::x(0, params, M) * GeneratorWord::x(params.b(), params, N);
  if (h) w = w * GeneratorWord::x(*h, params);
  return w;
}

std::string XNormalForm::to_string() const {
  return word(SurfaceParameters::from_b(b)).to_string();
}

namespace {

void require_x_word(const GeneratorWord& w) {
  if (!w.is_x_word()) {
    throw DomainError("x-normal form applies to words in x0..xb only, got " + w.to_string());
  }
}

// One rewrite of the two smallest middle factors; false if fewer than two.
bool rewrite_once(std::vector<unsigned>& x, int b) {
  int first = -1;
  int second = -1;
  for (int k = 1; k < b && second < 0; ++k) {
    const unsigned available = x[static_cast<std::size_t>(k)];
    if (available == 0) continue;
    if (first < 0) {
      first = k;
      if (available >= 2) second = k;
    } else {
      second = k;
    }
  }
  if (second < 0) return false;
  --x[static_cast<std::size_t>(first)];
  --x[static_cast<std::size_t>(second)];
  const int sum = first + second;
  if (sum <= b) {
    ++x[static_cast<std::size_t>(sum)];
    ++x[0];
  } else {
    ++x[static_cast<std::size_t>(b)];
    ++x[static_cast<std::size_t>(sum - b)];
  }
  return true;
}

std::vector<unsigned> x_part(const GeneratorWord& w) {
  return {w.exponents().begin() + 2, w.exponents().end()};
}

GeneratorWord from_x_part(const SurfaceParameters& params, const std::vector<unsigned>& x) {
  std::vector<unsigned> e{0, 0};
  e.insert(e.end(), x.begin(), x.end());
  return GeneratorWord(params, std::move(e));
}

}  // namespace

std::vector<GeneratorWord> x_normal_form_trace(const GeneratorWord& w) {
  require_x_word(w);
  std::vector<GeneratorWord> trace{w};
  std::vector<unsigned> x = x_part(w);
  while (rewrite_once(x, w.params().b())) trace.push_back(from_x_part(w.params(), x));
  return trace;
}

XNormalForm x_normal_form(const GeneratorWord& w) {
  require_x_word(w);
  const int b = w.params().b();
  std::vector<unsigned> x = x_part(w);
  while (rewrite_once(x, b)) {
  }
  XNormalForm out;
  out.b = b;
  out.M = x[0];
  out.N = x[static_cast<std::size_t>(b)];
  for (int k = 1; k < b; ++k) {
    if (x[static_cast<std::size_t>(k)] > 0) out.h = k;
  }
  return out;
}

WordPolynomial eliminate_z(const GeneratorWord& w) {
  const unsigned t = w.z_exponent();
  const GeneratorWord rest = w.with_exponent(kGeneratorZ, 0);
  WordPolynomial out(w.params());
  for (unsigned j = 0; j <= t; ++j) {
    out.add_term(rest * GeneratorWord::x(0, w.params(), j), Rational(binomial(t, j)));
  }
  return out;
}

WordPolynomial eliminate_z(const WordPolynomial& p) {
  WordPolynomial out(p.params());
  for (const auto& [w, c] : p.terms()) {
    const WordPolynomial expanded = eliminate_z(w);
    for (const auto& [v, d] : expanded.terms()) out.add_term(v, c * d);
  }
  return out;
}

}  // namespace dgd
