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

#include "dgd/lie/standard_fields.hpp"

#include <array>
#include <stdexcept>

#include "dgd/errors.hpp"
#include "dgd/torus.hpp"

namespace dgd {

namespace {

constexpr std::array kAllFields{StandardField::kDelta, StandardField::kDeltaPrime,
                                StandardField::kEpsilon, StandardField::kTorus};

}  // namespace

std::string_view standard_field_name(StandardField field) {
  switch (field) {
    case StandardField::kDelta:
      return "delta";
    case StandardField::kDeltaPrime:
      return "deltaprime";
    case StandardField::kEpsilon:
      return "eps";
    case StandardField::kTorus:
      return "E";
  }
  return "?";
}

std::optional<StandardField> standard_field_from_name(std::string_view name) {
  for (StandardField f : kAllFields) {
    if (standard_field_name(f) == name) return f;
  }
  return std::nullopt;
}

Derivation make_standard_field(StandardField field, const SurfaceParameters& params) {
  const auto b = static_cast<std::uint32_t>(params.b());
  Derivation::Coefficients c;
  switch (field) {
    case StandardField::kDelta:
      c[0] = Polynomial::monomial(Rational(params.b()), {0, b - 1, 1, 0});
      c[1] = Polynomial::monomial(Rational(1), {0, 0, 0, 1});
      break;
    case StandardField::kDeltaPrime:
      c[2] = Polynomial::monomial(Rational(1), {b, 0, 0, 0});
      c[3] = Polynomial::monomial(Rational(1), {b - 1, b, 0, 0});
      break;
    case StandardField::kEpsilon:
      c[0] = Polynomial::variable(0);
      c[3] = -Polynomial::variable(3);
      break;
    case StandardField::kTorus:
      c[0] = -Polynomial::variable(0);
      c[1] = Polynomial::variable(1);
      c[2] = Polynomial::variable(2).scaled(Rational(-params.b()));
      c[3] = Polynomial::variable(3);
      break;
  }
  return Derivation(std::move(c), params);
}

const Derivation& StandardFields::get(StandardField field) const {
  switch (field) {
    case StandardField::kDelta:
      return delta;
    case StandardField::kDeltaPrime:
      return delta_prime;
    case StandardField::kEpsilon:
      return epsilon;
    case StandardField::kTorus:
      return torus;
  }
  throw std::logic_error("unknown standard field");
}

StandardFields standard_fields(const SurfaceParameters& params) {
  StandardFields out{make_standard_field(StandardField::kDelta, params),
                     make_standard_field(StandardField::kDeltaPrime, params),
                     make_standard_field(StandardField::kEpsilon, params),
                     make_standard_field(StandardField::kTorus, params)};
  for (StandardField f : kAllFields) {
    if (!is_tangent(out.get(f))) {
      throw std::logic_error(std::string(standard_field_name(f)) + " is not tangent to F_n");
    }
  }
  for (StandardField f : {StandardField::kDelta, StandardField::kDeltaPrime, StandardField::kEpsilon}) {
    if (!is_invariant_field(out.get(f))) {
      throw std::logic_error(std::string(standard_field_name(f)) + " is not torus-invariant");
    }
  }
  for (StandardField f : {StandardField::kDelta, StandardField::kDeltaPrime}) {
    const Derivation& x = out.get(f);
    if (!is_locally_nilpotent(x, default_nilpotency_bound(x))) {
      throw std::logic_error(std::string(standard_field_name(f)) + " is not locally nilpotent");
    }
  }
  return out;
}

Derivation parse_field(std::string_view text, const SurfaceParameters& params) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  const std::string_view trimmed =
      first == std::string_view::npos ? std::string_view{} : text.substr(first, last - first + 1);
  if (auto named = standard_field_from_name(trimmed)) return make_standard_field(*named, params);
  if (trimmed.find(';') == std::string_view::npos) {
    throw ParseError("expected a standard field name (eps, delta, deltaprime, E) or "
                     "'c1; c2; c3; c4', got '" + std::string(text) + "'");
  }
  return Derivation::parse(trimmed, params);
}

std::string describe_field(const Derivation& x) {
  if (x.is_zero()) return "0";
  for (StandardField f : kAllFields) {
    const Derivation base = make_standard_field(f, x.params());
    // Ratio of the leading coefficients of the first nonzero component.
    for (int i = 0; i < kVariableCount; ++i) {
      const Polynomial& bi = base.coefficient(i);
      if (bi.is_zero()) continue;
      const Polynomial& xi = x.coefficient(i);
      if (xi.is_zero()) break;
      const Rational scale = xi.terms().begin()->second / bi.terms().begin()->second;
      if (!(scale * base == x)) break;
      const std::string name(standard_field_name(f));
      if (scale == 1) return name;
      if (scale == -1) return "-" + name;
      return scale.get_str() + "*" + name;
    }
  }
  return x.to_string();
}

}  // namespace dgd
