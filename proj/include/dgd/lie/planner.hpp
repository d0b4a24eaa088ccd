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

// Generates membership scripts for the field families shown to lie in the
// Lie algebra generated by complete fields on V_n. Claims are written from
// closed-form bracket formulas, so verify_script checks those formulas
// against the bracket calculus.

#include "dgd/genring.hpp"
#include "dgd/lie/script.hpp"

namespace dgd {

/// Script whose last step is coefficient * base. Supported targets:
///   base = delta: x-words with x-normal form xb^N, x0*xb^N or x_h*xb^N (N > 0);
///   base = eps:   y^R * z^T * (x-word) where, after z = 1 + x0 and the
///                 x-normal form x0^M * x_h * xb^N, either R = 0 and
///                 (N > 0 or no middle factor), or R >= b and
///                 (N > 0 or no middle factor).
/// Throws DomainError for anything else.
MembershipScript plan_membership(const GeneratorWord& coefficient, StandardField base);

/// x0 * x1 * ... * xb * y^b, the coefficient of the module generator.
GeneratorWord module_generator_word(const SurfaceParameters& params);

/// Script for coefficient * (x0 * x1 * ... * xb * y^b) * eps.
MembershipScript plan_module_element(const GeneratorWord& coefficient);

}  // namespace dgd
