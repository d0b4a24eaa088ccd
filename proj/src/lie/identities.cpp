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

#include "dgd/lie/identities.hpp"

#include <algorithm>

#include "dgd/derivation.hpp"
#include "dgd/genring.hpp"
#include "dgd/lie/standard_fields.hpp"

namespace dgd {

namespace {

IdentityCheck compare(std::string family, std::string instance, const Polynomial& lhs,
                      const Polynomial& rhs, const SurfaceParameters& params) {
  const Polynomial diff = normal_form(lhs - rhs, params);
  return IdentityCheck{std::move(family), std::move(instance), diff.is_zero(), diff.to_string()};
}

IdentityCheck compare(std::string family, std::string instance, const Derivation& lhs,
                      const Derivation& rhs) {
  const Derivation diff = lhs - rhs;
  return IdentityCheck{std::move(family), std::move(instance), diff.is_zero(), diff.to_string()};
}

std::string scaled_name(const Rational& c, const std::string& word) {
  if (c == 0) return "0";
  if (c == 1) return word;
  if (c == -1) return "-" + word;
  return to_string(c) + "*" + word;
}

Rational falling(int b, int j) {
  Integer out = 1;
  for (int i = 0; i < j; ++i) out *= (b - i);
  return Rational(out);
}

}  // namespace

std::vector<IdentityCheck> function_identities(const SurfaceParameters& params) {
  const StandardFields f = standard_fields(params);
  const int b = params.b();
  const Polynomial y = lift(GeneratorWord::y(params));
  const Polynomial x0 = lift(GeneratorWord::x(0, params));
  std::vector<IdentityCheck> out;

  for (int k = 0; k <= b; ++k) {
    const Polynomial xk = lift(GeneratorWord::x(k, params));
    const std::string name = "x" + std::to_string(k);
    out.push_back(compare("eps(x_k) = -k*x_k", "eps(" + name + ") = " + scaled_name(-k, name),
                          apply(f.epsilon, xk), Rational(-k) * xk, params));
  }
  out.push_back(compare("eps(y) = y", "eps(y) = y", apply(f.epsilon, y), y, params));
  out.push_back(compare("delta(y) = 1 + n*x0", "delta(y) = 1 + " + std::to_string(params.n()) + "*x0",
                        apply(f.delta, y), Polynomial(1) + Rational(params.n()) * x0, params));
  for (int k = 0; k <= b; ++k) {
    const Polynomial xk = lift(GeneratorWord::x(k, params));
    const Polynomial rhs = k < b ? Rational(b - k) * lift(GeneratorWord::x(k + 1, params)) : Polynomial();
    const std::string rhs_name = k < b ? scaled_name(b - k, "x" + std::to_string(k + 1)) : "0";
    out.push_back(compare("delta(x_k) = (b-k)*x_{k+1}",
                          "delta(x" + std::to_string(k) + ") = " + rhs_name, apply(f.delta, xk), rhs,
                          params));
  }
  out.push_back(compare("delta'(x0) = y^b", "delta'(x0) = y^" + std::to_string(b),
                        apply(f.delta_prime, x0), pow(y, static_cast<unsigned>(b)), params));
  out.push_back(compare("delta'(y) = 0", "delta'(y) = 0", apply(f.delta_prime, y), Polynomial(), params));
  return out;
}

std::vector<IdentityCheck> torus_annihilation_identities(const SurfaceParameters& params) {
  const Derivation e = make_standard_field(StandardField::kTorus, params);
  std::vector<IdentityCheck> out;
  for (std::size_t slot = 0; slot < generator_count(params); ++slot) {
    const Polynomial g = Polynomial::monomial(1, generator_lift(slot, params));
    out.push_back(compare("E(g) = 0", "E(" + generator_name(slot) + ") = 0", apply(e, g), Polynomial(),
                          params));
  }
  return out;
}

std::vector<IdentityCheck> commutation_identities(const SurfaceParameters& params) {
  const StandardFields f = standard_fields(params);
  const int b = params.b();
  return {
      compare("[eps, delta] = -delta", "[eps, delta] = -delta", bracket(f.epsilon, f.delta), -f.delta),
      compare("[eps, delta'] = b*delta'", "[eps, delta'] = " + scaled_name(b, "delta'"),
              bracket(f.epsilon, f.delta_prime), Rational(b) * f.delta_prime),
  };
}

std::vector<IdentityCheck> x_chain_identities(const SurfaceParameters& params) {
  const StandardFields f = standard_fields(params);
  const int b = params.b();
  auto x = [&](int k) { return lift(GeneratorWord::x(k, params)); };
  std::vector<IdentityCheck> out;
  Derivation chain = f.epsilon.times(x(0));
  for (int s = 1; s <= b; ++s) {
    chain = bracket(f.delta, chain);
    const Rational a = Rational(s) * falling(b, s - 1);
    const Rational c = falling(b, s);
    const Derivation closed = f.delta.times(a * x(s - 1)) + f.epsilon.times(c * x(s));
    out.push_back(compare("X_s = s*b(b-1)...(b-s+2)*x_{s-1}*delta + b(b-1)...(b-s+1)*x_s*eps",
                          "X_" + std::to_string(s) + " = " +
                              scaled_name(a, "x" + std::to_string(s - 1) + "*delta") + " + " +
                              scaled_name(c, "x" + std::to_string(s) + "*eps"),
                          chain, closed));
  }
  return out;
}

std::vector<IdentityCheck> delta_start_identities(const SurfaceParameters& params) {
  const StandardFields f = standard_fields(params);
  const int b = params.b();
  const Polynomial x0 = lift(GeneratorWord::x(0, params));
  const Polynomial x1 = lift(GeneratorWord::x(1, params));
  const Polynomial xb = lift(GeneratorWord::x(b, params));

  const Derivation s1 = bracket(f.epsilon.times(x0), f.delta.times(xb));
  const Derivation s1_closed =
      f.delta.times(Rational(-(1 + b)) * x0 * xb) + f.epsilon.times(Rational(-b) * x1 * xb);
  const Derivation s2 = bracket(f.delta, f.epsilon.times(x0 * xb));
  const Derivation s2_closed = f.delta.times(x0 * xb) + f.epsilon.times(Rational(b) * x1 * xb);
  const Derivation sum_closed = f.delta.times(Rational(-b) * x0 * xb);

  const std::string bs = std::to_string(b);
  return {
      compare("[x0*eps, xb*delta] = -(1+b)*x0*xb*delta - b*x1*xb*eps",
              "[x0*eps, x" + bs + "*delta] = " + scaled_name(-(1 + b), "x0*x" + bs + "*delta") + " - " +
                  scaled_name(b, "x1*x" + bs + "*eps"),
              s1, s1_closed),
      compare("[delta, x0*xb*eps] = x0*xb*delta + b*x1*xb*eps",
              "[delta, x0*x" + bs + "*eps] = x0*x" + bs + "*delta + " + scaled_name(b, "x1*x" + bs + "*eps"),
              s2, s2_closed),
      compare("sum of the two brackets = -b*x0*xb*delta",
              "sum = " + scaled_name(-b, "x0*x" + bs + "*delta"), s1 + s2, sum_closed),
  };
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

}  // namespace dgd
