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

// Tables of the closed-form identities between the standard fields and the
// invariant generators. Each check recomputes the left side with the
// derivation calculus and compares it with the closed form in the
// quotient ring.

#include <string>
#include <vector>

#include "dgd/polynomial.hpp"

namespace dgd {

struct IdentityCheck {
  /// Family, e.g. "eps(x_k) = -k*x_k".
  std::string family;
  /// Instance, e.g. "eps(x2) = -2*x2".
  std::string instance;
  bool holds = false;
  /// Reduced (left - right), written out; "0" when the identity holds.
  std::string difference;
};

/// eps(x_k) = -k x_k, eps(y) = y, delta(y) = 1 + n x0,
/// delta(x_k) = (b-k) x_{k+1}, delta'(x0) = y^b, delta'(y) = 0,
/// one check per generator index.
std::vector<IdentityCheck> function_identities(const SurfaceParameters& params);

/// E(g) = 0 for every invariant generator g.
std::vector<IdentityCheck> torus_annihilation_identities(const SurfaceParameters& params);

/// [eps, delta] = -delta and [eps, delta'] = b delta'.
std::vector<IdentityCheck> commutation_identities(const SurfaceParameters& params);

/// X_1 = [delta, x0 eps], X_s = [delta, X_{s-1}] against
/// s b(b-1)...(b-s+2) x_{s-1} delta + b(b-1)...(b-s+1) x_s eps, 1 <= s <= b.
std::vector<IdentityCheck> x_chain_identities(const SurfaceParameters& params);

/// [x0 eps, xb delta] = -(1+b) x0 xb delta - b x1 xb eps,
/// [delta, x0 xb eps] = x0 xb delta + b x1 xb eps, and their sum -b x0 xb delta.
std::vector<IdentityCheck> delta_start_identities(const SurfaceParameters& params);

bool all_hold(const std::vector<IdentityCheck>& checks);

}  // namespace dgd
