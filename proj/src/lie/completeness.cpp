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

#include "dgd/lie/completeness.hpp"

#include <algorithm>

namespace dgd {

std::string_view completeness_kind_name(CompletenessKind kind) {
  switch (kind) {
    case CompletenessKind::kLocallyNilpotent:
      return "LND";
    case CompletenessKind::kDiagonal:
      return "DIAGONAL";
    case CompletenessKind::kFunctionTimesField:
      return "FUNCTION_TIMES_FIELD";
    case CompletenessKind::kConjugate:
      return "CONJUGATE";
  }
  return "?";
}

std::optional<CompletenessCertificate> certify_locally_nilpotent(const Derivation& x,
                                                                 std::optional<unsigned> bound) {
  auto orders = is_locally_nilpotent(x, bound.value_or(default_nilpotency_bound(x)));
  if (!orders) return std::nullopt;
  return CompletenessCertificate{CompletenessKind::kLocallyNilpotent, x, *orders, {}, {}, {}};
}

namespace {

// Scalar s with c = s * a_i, if any.
std::optional<Rational> diagonal_scale(const Polynomial& c, int i) {
  if (c.is_zero()) return Rational(0);
  if (c.size() != 1) return std::nullopt;
  ExponentVector e;
  e[i] = 1;
  const auto& [exponents, coefficient] = *c.terms().begin();
  if (exponents != e) return std::nullopt;
  return coefficient;
}

bool is_diagonal(const Derivation& x) {
  for (int i = 0; i < kVariableCount; ++i) {
    if (!diagonal_scale(x.coefficient(i), i)) return false;
  }
  return true;
}

}  // namespace

std::optional<CompletenessCertificate> certify_diagonal(const Derivation& x) {
  if (!is_diagonal(x)) return std::nullopt;
  return CompletenessCertificate{CompletenessKind::kDiagonal, x, {}, {}, {}, {}};
}

CompletenessCertificate certify_function_times_field(const Polynomial& f,
                                                     const CompletenessCertificate& base) {
  return CompletenessCertificate{CompletenessKind::kFunctionTimesField,
                                 base.field.times(f),
                                 {},
                                 normal_form(f, base.field.params()),
                                 std::make_shared<const CompletenessCertificate>(base),
                                 {}};
}

CompletenessCertificate conjugate_certificate(const RingAutomorphism& alpha,
                                              const CompletenessCertificate& c) {
  return CompletenessCertificate{CompletenessKind::kConjugate,
                                 pushforward(alpha, c.field),
                                 {},
                                 {},
                                 std::make_shared<const CompletenessCertificate>(c),
                                 std::make_shared<const RingAutomorphism>(alpha)};
}

std::optional<std::string> completeness_failure(const CompletenessCertificate& c) {
  const SurfaceParameters& params = c.field.params();
  switch (c.kind) {
    case CompletenessKind::kLocallyNilpotent: {
      for (int i = 0; i < kVariableCount; ++i) {
        Polynomial iterate = Polynomial::variable(i);
        const unsigned m = c.orders[static_cast<std::size_t>(i)];
        for (unsigned j = 0; j < m && !iterate.is_zero(); ++j) {
          iterate = normal_form(apply(c.field, iterate), params);
        }
        if (!iterate.is_zero()) {
          return "X^" + std::to_string(m) + "(a" + std::to_string(i + 1) + ") = " +
                 iterate.to_string() + " is not zero";
        }
      }
      return std::nullopt;
    }
    case CompletenessKind::kDiagonal:
      if (!is_diagonal(c.field)) return "field is not diagonal: " + c.field.to_string();
      return std::nullopt;
    case CompletenessKind::kFunctionTimesField: {
      if (!c.base || !c.factor) return "missing factor or base certificate";
      if (auto why = completeness_failure(*c.base)) return "base field: " + *why;
      if (!(c.base->field.times(*c.factor) == c.field)) {
        return "field is not factor * base field";
      }
      const Polynomial mu_f = normal_form(apply(c.base->field, *c.factor), params);
      const Polynomial mu2_f = normal_form(apply(c.base->field, mu_f), params);
      if (!mu2_f.is_zero()) return "mu^2(f) = " + mu2_f.to_string() + " is not zero";
      return std::nullopt;
    }
    case CompletenessKind::kConjugate: {
      if (!c.base || !c.conjugator) return "missing conjugator or base certificate";
      if (auto why = completeness_failure(*c.base)) return "conjugated field: " + *why;
      if (!c.conjugator->inverse_is_consistent()) return "conjugator inverse is inconsistent";
      if (!c.conjugator->preserves_defining_polynomial()) {
        return "conjugator does not preserve the defining polynomial";
      }
      if (!(pushforward(*c.conjugator, c.base->field) == c.field)) {
        return "field is not the pushforward of the conjugated field";
      }
      return std::nullopt;
    }
  }
  return "unknown certificate kind";
}

}  // namespace dgd
