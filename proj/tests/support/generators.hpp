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

// Seeded random generators and independent oracles shared by the unit and
// acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "dgd/derivation.hpp"
#include "dgd/genring.hpp"
#include "dgd/lie/standard_fields.hpp"
#include "dgd/polynomial.hpp"

namespace dgd::testing {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// p/q with |p| <= 9, 1 <= q <= 4.
  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 4));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r = 0;
    while (r == 0) r = rational();
    return r;
  }

  ExponentVector exponents(unsigned max_each) {
    ExponentVector e;
    for (int i = 0; i < kVariableCount; ++i) e[i] = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_each)));
    return e;
  }

  Polynomial polynomial(unsigned max_terms = 5, unsigned max_each = 3) {
    Polynomial p;
    const int terms = integer(0, static_cast<int>(max_terms));
    for (int t = 0; t < terms; ++t) p.add_term(exponents(max_each), nonzero_rational());
    return p;
  }

  /// A point of F_n: a2, a3 random, a1 nonzero, a4 = (1 + a2^b a3) / a1.
  Point surface_point(const SurfaceParameters& params) {
    const Rational a1 = nonzero_rational();
    const Rational a2 = rational();
    const Rational a3 = rational();
    Rational a2b = 1;
    for (int i = 0; i < params.b(); ++i) a2b *= a2;
    return Point{a1, a2, a3, Rational((1 + a2b * a3) / a1)};
  }

  Point point() { return Point{rational(), rational(), rational(), rational()}; }

  Derivation derivation(const SurfaceParameters& params, unsigned max_terms = 3, unsigned max_each = 2) {
    Derivation::Coefficients c;
    for (auto& p : c) p = polynomial(max_terms, max_each);
    return Derivation(c, params);
  }

  GeneratorWord word(const SurfaceParameters& params, unsigned max_degree) {
    std::vector<unsigned> e(generator_count(params), 0);
    const int degree = integer(0, static_cast<int>(max_degree));
    for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(e.size()) - 1))];
    return GeneratorWord(params, std::move(e));
  }

  /// Torus-invariant tangent field: sum of c * (invariant word) * mu with
  /// mu among delta, delta', eps, E.
  Derivation tangent_field(const SurfaceParameters& params, int terms = 2, unsigned word_degree = 2) {
    Derivation out = Derivation::zero(params);
    for (int t = 0; t < terms; ++t) {
      const auto mu = static_cast<StandardField>(integer(0, 3));
      out += make_standard_field(mu, params).times(nonzero_rational() * lift(word(params, word_degree)));
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

/// Reduces one rewritable monomial at a time, picking it with `choose` from
/// the current list of rewritable monomials, until none is left.
inline Polynomial stepwise_reduce(Polynomial p, const SurfaceParameters& params,
                                  const std::function<std::size_t(const std::vector<Monomial>&)>& choose) {
  const int b = params.b();
  for (;;) {
    std::vector<Monomial> reducible;
    for (const Monomial& m : p.monomials()) {
      if (m.exponents[0] > 0 && m.exponents[3] > 0) reducible.push_back(m);
    }
    if (reducible.empty()) return p;
    const Monomial m = reducible[choose(reducible)];
    ExponentVector rest = m.exponents;
    rest[0] -= 1;
    rest[3] -= 1;
    ExponentVector shifted = rest;
    shifted[1] += static_cast<std::uint32_t>(b);
    shifted[2] += 1;
    p.add_term(m.exponents, -m.coefficient);
    p.add_term(shifted, m.coefficient);
    p.add_term(rest, m.coefficient);
  }
}

/// All multiplicity vectors over the generators whose lifts add up to e.
/// Depth-first over the generator slots; stops after `limit` solutions.
inline std::vector<std::vector<unsigned>> brute_force_decompositions(const ExponentVector& e,
                                                                     const SurfaceParameters& params,
                                                                     std::size_t limit = 1) {
  const std::size_t count = generator_count(params);
  std::vector<ExponentVector> lifts;
  for (std::size_t s = 0; s < count; ++s) lifts.push_back(generator_lift(s, params));
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current(count, 0);
  std::function<void(std::size_t, ExponentVector)> search = [&](std::size_t slot, ExponentVector remaining) {
    if (out.size() >= limit) return;
    if (slot == count) {
      if (remaining == ExponentVector{}) out.push_back(current);
      return;
    }
    for (unsigned m = 0;; ++m) {
      current[slot] = m;
      search(slot + 1, remaining);
      bool fits = true;
      for (int i = 0; i < kVariableCount; ++i) {
        if (remaining[i] < lifts[slot][i]) fits = false;
      }
      if (!fits || lifts[slot] == ExponentVector{}) break;
      for (int i = 0; i < kVariableCount; ++i) remaining[i] -= lifts[slot][i];
    }
    current[slot] = 0;
  };
  search(0, e);
  return out;
}

/// Every exponent vector of total degree <= max_degree with weight zero.
inline std::vector<ExponentVector> invariant_vectors(const SurfaceParameters& params, unsigned max_degree) {
  std::vector<ExponentVector> out;
  const long b = params.b();
  for (unsigned x = 0; x <= max_degree; ++x) {
    for (unsigned y = 0; x + y <= max_degree; ++y) {
      for (unsigned z = 0; x + y + z <= max_degree; ++z) {
        const long w = static_cast<long>(x) - static_cast<long>(y) + b * static_cast<long>(z);
        if (w < 0 || x + y + z + static_cast<unsigned long>(w) > max_degree) continue;
        ExponentVector e;
        e[0] = x;
        e[1] = y;
        e[2] = z;
        e[3] = static_cast<std::uint32_t>(w);
        out.push_back(e);
      }
    }
  }
  return out;
}

/// All x-words x_{k1}...x_{kr} with r <= max_length (as multisets).
inline std::vector<GeneratorWord> x_words(const SurfaceParameters& params, unsigned max_length) {
  std::vector<GeneratorWord> out;
  std::function<void(int, unsigned, GeneratorWord)> build = [&](int from, unsigned left, GeneratorWord w) {
    out.push_back(w);
    if (left == 0) return;
    for (int k = from; k <= params.b(); ++k) build(k, left - 1, w * GeneratorWord::x(k, params));
  };
  build(0, max_length, GeneratorWord(params));
  return out;
}

/// Term-by-term exponential series of a locally nilpotent X on a_i,
/// without reduction: sum_j X^j(a_i) / j!.
inline Polynomial exp_series(const Derivation& x, int i, unsigned max_terms = 64) {
  Polynomial term = Polynomial::variable(i);
  Polynomial sum = term;
  for (unsigned j = 1; j < max_terms; ++j) {
    term = apply(x, term) * Rational(1, j);
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw std::runtime_error("series did not terminate");
}

}  // namespace dgd::testing
