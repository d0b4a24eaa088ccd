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

#include "dgd/lie/script.hpp"

#include <sstream>

#include "dgd/errors.hpp"
#include "dgd/torus.hpp"

namespace dgd {

FieldExpr::FieldExpr(const Rational& coefficient, const GeneratorWord& word, StandardField base)
    : params_(word.params()) {
  add(coefficient, word, base);
}

FieldExpr& FieldExpr::add(const Rational& coefficient, const GeneratorWord& word,
                          StandardField base) {
  if (!(word.params() == params_)) throw ParameterMismatch("field term of a different surface");
  if (coefficient != 0) terms_.push_back({coefficient, word, base});
  return *this;
}

FieldExpr operator+(FieldExpr lhs, const FieldExpr& rhs) {
  for (const auto& t : rhs.terms_) lhs.add(t.coefficient, t.word, t.base);
  return lhs;
}

Derivation FieldExpr::lift() const {
  Derivation out = Derivation::zero(params_);
  for (const auto& t : terms_) {
    out += make_standard_field(t.base, params_).times(dgd::lift(t.word).scaled(t.coefficient));
  }
  return out;
}

std::string FieldExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Rational magnitude = negative ? Rational(-t.coefficient) : t.coefficient;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1) os << magnitude.get_str() << '*';
    if (!t.word.is_one()) os << t.word.to_string() << '*';
    os << standard_field_name(t.base);
  }
  return os.str();
}

std::string_view step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kLeaf:
      return "leaf";
    case StepKind::kBracket:
      return "bracket";
    case StepKind::kLinearCombination:
      return "lincomb";
  }
  return "?";
}

namespace {

ScriptVerdict fail_at(std::size_t index, std::string reason,
                      std::optional<Derivation> difference = std::nullopt) {
  ScriptVerdict v;
  v.ok = false;
  v.failing_step = index;
  v.reason = std::move(reason);
  v.difference = std::move(difference);
  v.steps_checked = index;
  return v;
}

}  // namespace

ScriptVerdict verify_script(const MembershipScript& script) {
  const auto& steps = script.steps;
  if (steps.empty()) return fail_at(0, "script has no steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ScriptStep& step = steps[i];
    if (step.id != i) return fail_at(i, "step id " + std::to_string(step.id) + " out of sequence");
    if (!(step.claimed.params() == script.params)) return fail_at(i, "claimed field of another surface");
    for (std::size_t r : step.refs) {
      if (r >= i) return fail_at(i, "reference to step " + std::to_string(r) + " is not earlier");
    }
    switch (step.kind) {
      case StepKind::kLeaf: {
        if (!step.certificate) return fail_at(i, "leaf without completeness certificate");
        if (!(step.certificate->field == step.claimed)) {
          return fail_at(i, "certificate is for a different field", step.claimed - step.certificate->field);
        }
        if (auto why = completeness_failure(*step.certificate)) {
          return fail_at(i, "completeness certificate fails: " + *why);
        }
        if (!is_tangent(step.claimed)) return fail_at(i, "leaf is not tangent to F_n");
        if (!is_invariant_field(step.claimed)) return fail_at(i, "leaf is not torus-invariant");
        break;
      }
      case StepKind::kBracket: {
        if (step.refs.size() != 2) return fail_at(i, "bracket step needs two references");
        const Derivation recomputed =
            bracket(steps[step.refs[0]].claimed, steps[step.refs[1]].claimed);
        if (!(recomputed == step.claimed)) {
          return fail_at(i, "claimed bracket differs from the recomputed one", step.claimed - recomputed);
        }
        break;
      }
      case StepKind::kLinearCombination: {
        if (step.refs.empty() || step.refs.size() != step.scalars.size()) {
          return fail_at(i, "linear combination needs matching references and scalars");
        }
        Derivation recomputed = Derivation::zero(script.params);
        for (std::size_t j = 0; j < step.refs.size(); ++j) {
          recomputed += step.scalars[j] * steps[step.refs[j]].claimed;
        }
        if (!(recomputed == step.claimed)) {
          return fail_at(i, "claimed combination differs from the recomputed one",
                         step.claimed - recomputed);
        }
        break;
      }
    }
  }
  if (script.target_field && !(steps.back().claimed == *script.target_field)) {
    return fail_at(steps.size() - 1, "last step is not the target field", steps.back().claimed - *script.target_field);
  }
  ScriptVerdict v;
  v.ok = true;
  v.steps_checked = steps.size();
  return v;
}

MembershipScript pushforward_script(const RingAutomorphism& alpha, const MembershipScript& script) {
  MembershipScript out{script.params, "pushforward of " + script.target, {}, std::nullopt};
  if (script.target_field) out.target_field = pushforward(alpha, *script.target_field);
  out.steps.reserve(script.steps.size());
  for (const ScriptStep& step : script.steps) {
    ScriptStep pushed = step;
    pushed.label = "pushforward of " + step.label;
    if (step.certificate) {
      pushed.certificate = conjugate_certificate(alpha, *step.certificate);
      pushed.claimed = pushed.certificate->field;
    } else {
      pushed.claimed = pushforward(alpha, step.claimed);
    }
    out.steps.push_back(std::move(pushed));
  }
  return out;
}

}  // namespace dgd
