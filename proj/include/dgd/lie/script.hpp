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

// Membership scripts: finite derivations of a vector field from complete
// leaves by Lie brackets and rational linear combinations, each step
// carrying the field it claims to produce.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgd/derivation.hpp"
#include "dgd/genring.hpp"
#include "dgd/lie/completeness.hpp"
#include "dgd/lie/standard_fields.hpp"

namespace dgd {

/// coefficient * word * base.
struct FieldTerm {
  Rational coefficient;
  GeneratorWord word;
  StandardField base;
};

/// A field written symbolically over generator words, e.g.
/// -(1+b)*x0*xb*delta - b*x1*xb*eps.
class FieldExpr {
 public:
  explicit FieldExpr(const SurfaceParameters& params) : params_(params) {}
  FieldExpr(const Rational& coefficient, const GeneratorWord& word, StandardField base);

  const std::vector<FieldTerm>& terms() const { return terms_; }
  const SurfaceParameters& params() const { return params_; }

  FieldExpr& add(const Rational& coefficient, const GeneratorWord& word, StandardField base);
  friend FieldExpr operator+(FieldExpr lhs, const FieldExpr& rhs);

  Derivation lift() const;
  std::string to_string() const;

 private:
  SurfaceParameters params_;
  std::vector<FieldTerm> terms_;
};

enum class StepKind { kLeaf, kBracket, kLinearCombination };

/// "leaf", "bracket", "lincomb".
std::string_view step_kind_name(StepKind kind);

struct ScriptStep {
  std::size_t id;
  StepKind kind;
  std::vector<std::size_t> refs;
  std::vector<Rational> scalars;
  std::optional<CompletenessCertificate> certificate;
  Derivation claimed;
  std::string label;
};

struct MembershipScript {
  SurfaceParameters params;
  std::string target;
  std::vector<ScriptStep> steps;
  /// When present, the last step must claim exactly this field.
  std::optional<Derivation> target_field;

  const ScriptStep& final_step() const { return steps.back(); }
};

struct ScriptVerdict {
  bool ok = false;
  std::optional<std::size_t> failing_step;
  std::string reason;
  /// claimed - recomputed at the failing step.
  std::optional<Derivation> difference;
  std::size_t steps_checked = 0;
};

/// Re-checks every step in order: leaves must carry a verifying
/// certificate for exactly the claimed field, which must be tangent and
/// torus-invariant; bracket and linear-combination steps must reproduce
/// their claimed field from the claims they reference. Stops at the first
/// failing step. Finally the last claim must equal target_field if set.
ScriptVerdict verify_script(const MembershipScript& script);

/// The same script with every claim and leaf certificate transported by
/// alpha. Brackets and linear combinations are kept as they are.
MembershipScript pushforward_script(const RingAutomorphism& alpha, const MembershipScript& script);

}  // namespace dgd
