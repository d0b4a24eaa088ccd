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

#include <optional>
#include <string>
#include <string_view>

#include "dgd/derivation.hpp"

namespace dgd {

enum class StandardField {
  kDelta,       // b a2^(b-1) a3 d/da1 + a4 d/da2
  kDeltaPrime,  // a1^b d/da3 + a1^(b-1) a2^b d/da4
  kEpsilon,     // a1 d/da1 - a4 d/da4
  kTorus,       // -a1 d/da1 + a2 d/da2 - b a3 d/da3 + a4 d/da4, generator of the torus action
};

/// "delta", "deltaprime", "eps", "E".
std::string_view standard_field_name(StandardField field);
std::optional<StandardField> standard_field_from_name(std::string_view name);

Derivation make_standard_field(StandardField field, const SurfaceParameters& params);

struct StandardFields {
  Derivation delta;
  Derivation delta_prime;
  Derivation epsilon;
  Derivation torus;

  const Derivation& get(StandardField field) const;
};

/// Builds the four fields and checks that all are tangent, that delta,
/// delta' and eps are torus-invariant, and that delta, delta' are locally
/// nilpotent. Throws std::logic_error if a check fails.
StandardFields standard_fields(const SurfaceParameters& params);

/// A standard field name or raw "c1; c2; c3; c4" coefficient syntax.
Derivation parse_field(std::string_view text, const SurfaceParameters& params);

/// "c*name" when x is a rational multiple of a standard field ("-delta",
/// "2*eps"), otherwise the raw coefficient form.
std::string describe_field(const Derivation& x);

}  // namespace dgd
