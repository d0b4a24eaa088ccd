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

#include "dgd/torus.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "dgd/errors.hpp"

namespace dgd {

WeightVector WeightVector::for_surface(const SurfaceParameters& params) {
  return {{-1, 1, -static_cast<long>(params.b()), 1}};
}

long weight_of_monomial(const ExponentVector& e, const SurfaceParameters& params) {
  const auto w = WeightVector::for_surface(params).w;
  long total = 0;
  for (int i = 0; i < kVariableCount; ++i) total += w[static_cast<std::size_t>(i)] * static_cast<long>(e[i]);
  return total;
}

std::vector<GeneratorDescriptor> generator_table(const SurfaceParameters& params) {
  std::vector<GeneratorDescriptor> table;
  for (std::size_t slot = 0; slot < generator_count(params); ++slot) {
    table.push_back({generator_name(slot), generator_lift(slot, params)});
  }
  return table;
}

bool is_invariant_field(const Derivation& x) {
  const auto w = WeightVector::for_surface(x.params()).w;
  for (int i = 0; i < kVariableCount; ++i) {
    for (const auto& [e, c] : x.coefficient(i).terms()) {
      if (weight_of_monomial(e, x.params()) != w[static_cast<std::size_t>(i)]) return false;
    }
  }
  return true;
}

namespace {

// Splits `total` into `parts` values in [0, b], greedily from the front.
std::vector<unsigned> greedy_split(unsigned total, unsigned parts, unsigned b) {
  std::vector<unsigned> out(parts, 0);
  for (auto& part : out) {
    part = std::min(b, total);
    total -= part;
  }
  assert(total == 0 && "split exceeds parts * b");
  return out;
}

}  // namespace

Decomposition decompose_invariant(const ExponentVector& e, const SurfaceParameters& params) {
  if (weight_of_monomial(e, params) != 0) {
    std::ostringstream os;
    os << "exponent vector " << e << " has weight " << weight_of_monomial(e, params)
       << ", not invariant";
    throw DomainError(os.str());
  }
  const unsigned b = static_cast<unsigned>(params.b());
  const unsigned X = e[0];
  const unsigned Y = e[1];
  const unsigned Z = e[2];
  const unsigned W = e[3];
  GeneratorWord word(params);
  auto add = [&](std::size_t slot, unsigned count) {
    word = word.with_exponent(slot, word.exponent(slot) + count);
  };
  DecompositionBranch branch;

  if (Z == 0) {
    // Invariance forces X = Y + W.
    branch = DecompositionBranch::kNoA3;
    add(kGeneratorZ, W);
    add(kGeneratorY, Y);
  } else if (W < b * Z) {
    branch = DecompositionBranch::kWBelowBZ;
    for (unsigned k : greedy_split(W, Z, b)) add(generator_x(static_cast<int>(k)), 1);
    add(kGeneratorY, X);
  } else {
    branch = DecompositionBranch::kWAtLeastBZ;
    const unsigned M = Y / (b * Z);
    const unsigned r_prime = Y - M * b * Z;
    for (unsigned part : greedy_split(r_prime, Z, b)) add(generator_x(static_cast<int>(b - part)), 1);
    add(kGeneratorZ, X - M * b * Z);
    add(kGeneratorY, M * b * Z);
  }

  if (lift_exponents(word) != e) {
    std::ostringstream os;
    os << "internal error: decomposition " << word << " of " << e << " does not lift back";
    throw std::logic_error(os.str());
  }
  return {word, branch};
}

WordPolynomial express_invariant_polynomial(const Polynomial& p, const SurfaceParameters& params) {
  WordPolynomial out(params);
  for (const auto& [e, c] : p.terms()) out.add_term(decompose_invariant(e, params).word, c);
  return out;
}

WordPolynomial express_invariant_polynomial(const QuotientPolynomial& p) {
  return express_invariant_polynomial(p.value(), p.params());
}

}  // namespace dgd
