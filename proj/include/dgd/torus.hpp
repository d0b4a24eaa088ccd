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

// The one-torus t.(a1, a2, a3, a4) = (t^-1 a1, t a2, t^-b a3, t a4) acting on
// F_n: weights, invariance of fields, and the decomposition of invariant
// monomials into the generators y, z, x0..xb.

#include <array>
#include <string>
#include <vector>

#include "dgd/derivation.hpp"
#include "dgd/genring.hpp"
#include "dgd/polynomial.hpp"

namespace dgd {

struct WeightVector {
  std::array<long, kVariableCount> w{};

  /// (-1, 1, -b, 1).
  static WeightVector for_surface(const SurfaceParameters& params);
};

/// -e1 + e2 - b*e3 + e4.
long weight_of_monomial(const ExponentVector& e, const SurfaceParameters& params);

struct GeneratorDescriptor {
  std::string name;
  ExponentVector lift;
};

/// y, z, x0, ..., xb in that order.
std::vector<GeneratorDescriptor> generator_table(const SurfaceParameters& params);

/// Every monomial of coefficient i has weight w_i, so X commutes with the
/// torus action.
bool is_invariant_field(const Derivation& x);

enum class DecompositionBranch {
  kNoA3,        // Z = 0: W copies of z and Y copies of y
  kWBelowBZ,    // W < bZ: X copies of y and Z factors x_{k_i} with sum k_i = W
  kWAtLeastBZ,  // W >= bZ: Y = MbZ + r', Z factors with sum (b - k_i) = r'
};

struct Decomposition {
  /// Multiplicity of each generator, as a word.
  GeneratorWord word;
  DecompositionBranch branch;

  const std::vector<unsigned>& multiplicities() const { return word.exponents(); }
};

/// Writes an invariant exponent vector (X, Y, Z, W) as a non-negative
/// combination of generator lifts. The x_k indices are split greedily,
/// k_i = min(b, remainder). Throws DomainError on nonzero weight.
Decomposition decompose_invariant(const ExponentVector& e, const SurfaceParameters& params);

/// Rewrites each monomial of an invariant polynomial as a generator word.
WordPolynomial express_invariant_polynomial(const QuotientPolynomial& p);
/// Monomial by monomial without reducing first, so a1*a4 becomes z.
WordPolynomial express_invariant_polynomial(const Polynomial& p, const SurfaceParameters& params);

}  // namespace dgd
