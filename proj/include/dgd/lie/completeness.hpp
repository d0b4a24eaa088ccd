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

// Machine-checkable evidence that a vector field on F_n is complete.

#include <memory>
#include <optional>
#include <string>

#include "dgd/derivation.hpp"

namespace dgd {

enum class CompletenessKind {
  kLocallyNilpotent,    // X^{m_i}(a_i) = 0 for stored orders m_i
  kDiagonal,            // coefficient i is a scalar multiple of a_i
  kFunctionTimesField,  // f * mu with mu complete and mu(mu(f)) = 0
  kConjugate,           // alpha o Y o alpha^-1 with Y complete and alpha an automorphism
};

std::string_view completeness_kind_name(CompletenessKind kind);

struct CompletenessCertificate {
  CompletenessKind kind;
  Derivation field;
  NilpotencyOrders orders{};
  std::optional<Polynomial> factor;
  /// mu for kFunctionTimesField, the conjugated certificate for kConjugate.
  std::shared_ptr<const CompletenessCertificate> base;
  std::shared_ptr<const RingAutomorphism> conjugator;
};

std::optional<CompletenessCertificate> certify_locally_nilpotent(
    const Derivation& x, std::optional<unsigned> bound = std::nullopt);
std::optional<CompletenessCertificate> certify_diagonal(const Derivation& x);

/// Certificate for f * base.field. Not checked here; see verify_completeness.
CompletenessCertificate certify_function_times_field(const Polynomial& f,
                                                     const CompletenessCertificate& base);

/// Transports a certificate along an automorphism: the new field is
/// pushforward(alpha, c.field).
CompletenessCertificate conjugate_certificate(const RingAutomorphism& alpha,
                                              const CompletenessCertificate& c);

/// Empty when the certificate re-verifies, otherwise the reason it does not.
std::optional<std::string> completeness_failure(const CompletenessCertificate& c);

inline bool verify_completeness(const CompletenessCertificate& c) {
  return !completeness_failure(c).has_value();
}

}  // namespace dgd
