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

#include <doctest.h>

#include <algorithm>

#include "dgd/errors.hpp"
#include "dgd/lie/completeness.hpp"
#include "dgd/lie/identities.hpp"
#include "dgd/lie/planner.hpp"
#include "dgd/lie/script.hpp"
#include "dgd/lie/standard_fields.hpp"
#include "dgd/torus.hpp"
#include "generators.hpp"

using namespace dgd;
using dgd::testing::Gen;

namespace {

const SurfaceParameters kB2 = SurfaceParameters::from_n(3);

Derivation field(StandardField f, const SurfaceParameters& p = kB2) { return make_standard_field(f, p); }
Polynomial x(int k, const SurfaceParameters& p = kB2) { return lift(GeneratorWord::x(k, p)); }
GeneratorWord W(const char* text, const SurfaceParameters& p = kB2) { return GeneratorWord::parse(text, p); }

CompletenessCertificate lnd(StandardField f, const SurfaceParameters& p = kB2) {
  auto c = certify_locally_nilpotent(field(f, p));
  REQUIRE(c);
  return *c;
}

CompletenessCertificate diag(const SurfaceParameters& p = kB2) {
  auto c = certify_diagonal(field(StandardField::kEpsilon, p));
  REQUIRE(c);
  return *c;
}

ScriptStep leaf(std::size_t id, const CompletenessCertificate& c) {
  return ScriptStep{id, StepKind::kLeaf, {}, {}, c, c.field, ""};
}

ScriptStep bracket_step(std::size_t id, std::size_t i, std::size_t j, const Derivation& claim) {
  return ScriptStep{id, StepKind::kBracket, {i, j}, {}, std::nullopt, claim, ""};
}

ScriptStep combination(std::size_t id, std::vector<std::size_t> refs, std::vector<Rational> scalars,
                       const Derivation& claim) {
  return ScriptStep{id, StepKind::kLinearCombination, std::move(refs), std::move(scalars), std::nullopt, claim, ""};
}

// Negates the coefficient of one monomial of one coefficient polynomial.
Derivation flip_one_sign(const Derivation& d, Gen& g) {
  Derivation::Coefficients c = d.coefficients();
  std::vector<int> nonzero;
  for (int i = 0; i < 4; ++i) {
    if (!c[static_cast<std::size_t>(i)].is_zero()) nonzero.push_back(i);
  }
  REQUIRE_FALSE(nonzero.empty());
  Polynomial& p = c[static_cast<std::size_t>(nonzero[static_cast<std::size_t>(g.integer(0, static_cast<int>(nonzero.size()) - 1))])];
  const auto ms = p.monomials();
  const Monomial& m = ms[static_cast<std::size_t>(g.integer(0, static_cast<int>(ms.size()) - 1))];
  p.add_term(m.exponents, -2 * m.coefficient);
  return Derivation(c, d.params());
}

}  // namespace

TEST_CASE("standard fields") {
  CHECK(field(StandardField::kDelta) == Derivation::parse("2*a2*a3; a4; 0; 0", kB2));
  CHECK(field(StandardField::kDeltaPrime) == Derivation::parse("0; 0; a1^2; a1*a2^2", kB2));
  for (int n = 2; n <= 7; ++n) {
    const auto p = SurfaceParameters::from_n(n);
    CHECK(field(StandardField::kEpsilon, p) == Derivation::parse("a1; 0; 0; -a4", p));
    CHECK_NOTHROW(standard_fields(p));
  }
  CHECK(describe_field(-field(StandardField::kDelta)) == "-delta");
  CHECK(describe_field(Rational(2) * field(StandardField::kDeltaPrime)) == "2*deltaprime");
  CHECK(describe_field(Derivation::zero(kB2)) == "0");
}

TEST_CASE("completeness certificates") {
  const auto x0_eps = certify_function_times_field(x(0), diag());
  CHECK(verify_completeness(x0_eps));
  const auto x1_delta = certify_function_times_field(x(1), lnd(StandardField::kDelta));
  CHECK(verify_completeness(x1_delta));
  const auto y_eps = certify_function_times_field(lift(GeneratorWord::y(kB2)), diag());
  CHECK_FALSE(verify_completeness(y_eps));
  REQUIRE(completeness_failure(y_eps));
  CHECK(completeness_failure(y_eps)->find("mu^2(f)") != std::string::npos);

  CHECK_FALSE(certify_locally_nilpotent(field(StandardField::kEpsilon)));
  CHECK_FALSE(certify_diagonal(field(StandardField::kDelta)));
  CHECK(verify_completeness(lnd(StandardField::kDeltaPrime)));

  // x0 delta is not complete by this criterion: delta^2(x0) = 2 x2 != 0
  CHECK_FALSE(verify_completeness(certify_function_times_field(x(0), lnd(StandardField::kDelta))));

  // Wrong nilpotency orders are rejected.
  auto bad = lnd(StandardField::kDelta);
  bad.orders[0] = 2;
  CHECK_FALSE(verify_completeness(bad));
}

TEST_CASE("conjugated certificates") {
  const RingAutomorphism phi = exp_lnd(field(StandardField::kDelta).times(x(2)));
  for (const auto& c : {diag(), lnd(StandardField::kDeltaPrime), certify_function_times_field(x(0), diag())}) {
    const auto pushed = conjugate_certificate(phi, c);
    CHECK(verify_completeness(pushed));
    CHECK(is_tangent(pushed.field));
    CHECK(is_invariant_field(pushed.field));
  }
  auto forged = conjugate_certificate(phi, diag());
  forged.field = forged.field + field(StandardField::kDelta);
  CHECK_FALSE(verify_completeness(forged));
}

TEST_CASE("function and commutation tables") {
  for (int b = 1; b <= 6; ++b) {
    const auto p = SurfaceParameters::from_b(b);
    const auto functions = function_identities(p);
    CHECK(functions.size() == static_cast<std::size_t>(2 * (b + 1) + 4));
    CHECK(all_hold(functions));
    CHECK(all_hold(commutation_identities(p)));
    CHECK(all_hold(torus_annihilation_identities(p)));
    CHECK(all_hold(delta_start_identities(p)));
  }
  for (int b = 1; b <= 5; ++b) CHECK(all_hold(x_chain_identities(SurfaceParameters::from_b(b))));
  const auto chain = x_chain_identities(kB2);
  REQUIRE(chain.size() == 2);
  CHECK(chain[1].instance == "X_2 = 4*x1*delta + 2*x2*eps");
}

TEST_CASE("bracket of f*X with g*Y") {
  Gen g(61);
  const StandardField fields[] = {StandardField::kDelta, StandardField::kDeltaPrime, StandardField::kEpsilon};
  for (int i = 0; i < 40; ++i) {
    const auto p = SurfaceParameters::from_n(2 + i % 4);
    const Polynomial f = lift(g.word(p, 3)) * g.nonzero_rational();
    const Polynomial h = lift(g.word(p, 3)) * g.nonzero_rational();
    const Derivation X = field(fields[g.integer(0, 2)], p);
    const Derivation Y = field(fields[g.integer(0, 2)], p);
    const Derivation lhs = bracket(X.times(f), Y.times(h));
    const Derivation rhs = bracket(X, Y).times(f * h) + Y.times(f * apply(X, h)) - X.times(h * apply(Y, f));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("hand-written scripts") {
  const Derivation eps = field(StandardField::kEpsilon);
  const Derivation delta = field(StandardField::kDelta);
  const int b = 2;

  SUBCASE("the two brackets whose sum is -b x0 xb delta") {
    CHECK_FALSE(verify_completeness(certify_function_times_field(x(0) * x(b), diag())));
    MembershipScript s{kB2, "-2*x0*x2*delta", {}, std::nullopt};
    s.steps.push_back(leaf(0, certify_function_times_field(x(0), diag())));
    s.steps.push_back(leaf(1, certify_function_times_field(x(b), lnd(StandardField::kDelta))));
    s.steps.push_back(leaf(2, lnd(StandardField::kDelta)));
    s.steps.push_back(bracket_step(3, 2, 0, delta.times(x(0)) + eps.times(Rational(2) * x(1))));
    s.steps.push_back(bracket_step(4, 2, 3, delta.times(Rational(4) * x(1)) + eps.times(Rational(2) * x(2))));
    s.steps.push_back(leaf(5, certify_function_times_field(x(1), lnd(StandardField::kDelta))));
    s.steps.push_back(combination(6, {4, 5}, {Rational(1, 2), -2}, eps.times(x(2))));
    s.steps.push_back(bracket_step(7, 0, 6, eps.times(Rational(-2) * x(0) * x(b))));
    s.steps.push_back(combination(8, {7}, {Rational(-1, 2)}, eps.times(x(0) * x(b))));
    s.steps.push_back(bracket_step(9, 0, 1, delta.times(Rational(-3) * x(0) * x(b)) + eps.times(Rational(-2) * x(1) * x(b))));
    s.steps.push_back(bracket_step(10, 2, 8, delta.times(x(0) * x(b)) + eps.times(Rational(2) * x(1) * x(b))));
    s.steps.push_back(combination(11, {9, 10}, {1, 1}, delta.times(Rational(-2) * x(0) * x(b))));
    s.target_field = delta.times(Rational(-2) * x(0) * x(b));
    const ScriptVerdict v = verify_script(s);
    CHECK_MESSAGE(v.ok, v.reason);
    CHECK(v.steps_checked == 12);
  }

  SUBCASE("a wrong sign in [eps, delta] is caught at that step") {
    MembershipScript s{kB2, "", {}, std::nullopt};
    s.steps.push_back(leaf(0, diag()));
    s.steps.push_back(leaf(1, lnd(StandardField::kDelta)));
    s.steps.push_back(bracket_step(2, 0, 1, delta));
    const ScriptVerdict v = verify_script(s);
    CHECK_FALSE(v.ok);
    CHECK(v.failing_step == 2u);
    REQUIRE(v.difference);
    CHECK(*v.difference == Rational(2) * delta);
  }

  SUBCASE("the iterated bracket chain ending in X_b") {
    for (int bb = 1; bb <= 5; ++bb) {
      const auto p = SurfaceParameters::from_b(bb);
      const Derivation e = field(StandardField::kEpsilon, p), d = field(StandardField::kDelta, p);
      MembershipScript s{p, "X_b", {}, std::nullopt};
      s.steps.push_back(leaf(0, lnd(StandardField::kDelta, p)));
      s.steps.push_back(leaf(1, certify_function_times_field(x(0, p), diag(p))));
      Integer falling = 1;
      for (int step = 1; step <= bb; ++step) {
        const Integer prev = falling;
        falling *= (bb - step + 1);
        const Derivation claim = d.times(Rational(step * prev) * x(step - 1, p)) + e.times(Rational(falling) * x(step, p));
        s.steps.push_back(bracket_step(s.steps.size(), 0, s.steps.size() - 1, claim));
      }
      // X_b = b! xb eps + b^2 (b-1) ... 2 x_{b-1} delta
      const Rational bf(factorial(static_cast<unsigned long>(bb)));
      s.target_field = e.times(bf * x(bb, p)) + d.times(Rational(bb) * bf * x(bb - 1, p));
      CHECK(verify_script(s).ok);
    }
  }

  SUBCASE("structural errors") {
    MembershipScript s{kB2, "", {}, std::nullopt};
    CHECK_FALSE(verify_script(s).ok);
    s.steps.push_back(leaf(0, diag()));
    s.steps.push_back(bracket_step(1, 0, 1, Derivation::zero(kB2)));
    CHECK(verify_script(s).failing_step == 1u);
    s.steps[1] = combination(1, {0}, {}, eps);
    CHECK_FALSE(verify_script(s).ok);
    s.steps[1] = combination(2, {0}, {1}, eps);
    CHECK_FALSE(verify_script(s).ok);
    s.steps[1] = ScriptStep{1, StepKind::kLeaf, {}, {}, std::nullopt, eps, ""};
    CHECK(verify_script(s).reason == "leaf without completeness certificate");
    // a2 * eps is complete (eps(a2) = 0) but not torus invariant.
    s.steps[1] = leaf(1, certify_function_times_field(Polynomial::parse("a2"), diag()));
    REQUIRE(verify_completeness(*s.steps[1].certificate));
    CHECK(verify_script(s).reason == "leaf is not torus-invariant");
  }
}

TEST_CASE("planned scripts for the documented targets") {
  SUBCASE("x0 xb delta comes from the two-bracket sum") {
    const MembershipScript s = plan_membership(W("x0*x2"), StandardField::kDelta);
    CHECK(verify_script(s).ok);
    CHECK(s.final_step().claimed == field(StandardField::kDelta).times(x(0) * x(2)));
    const bool has_sum = std::any_of(s.steps.begin(), s.steps.end(), [](const ScriptStep& st) {
      return st.label == "-2*x0*x2*delta";
    });
    CHECK(has_sum);
  }
  SUBCASE("y^b eps uses the complete leaf x0 delta'") {
    const MembershipScript s = plan_membership(W("y^2"), StandardField::kEpsilon);
    CHECK(verify_script(s).ok);
    const auto it = std::find_if(s.steps.begin(), s.steps.end(), [](const ScriptStep& st) {
      return st.kind == StepKind::kLeaf && st.label == "x0*deltaprime";
    });
    REQUIRE(it != s.steps.end());
    CHECK(it->certificate->kind == CompletenessKind::kFunctionTimesField);
    CHECK(s.final_step().claimed == field(StandardField::kEpsilon).times(lift(W("y^2"))));
  }
  SUBCASE("the module generator for b = 2") {
    const GeneratorWord g = module_generator_word(kB2);
    CHECK(g.to_string() == "y^2*x0*x1*x2");
    CHECK(x_normal_form(W("x0*x1*x2")).to_string() == "x0*x1*x2");
    CHECK(x_normal_form(W("x0*x1*x1*x2")).to_string() == "x0^2*x2^2");
    const MembershipScript s = plan_module_element(GeneratorWord(kB2));
    CHECK(verify_script(s).ok);
    CHECK(s.final_step().claimed == field(StandardField::kEpsilon).times(lift(g)));
    const MembershipScript s2 = plan_module_element(W("x1"));
    CHECK(verify_script(s2).ok);
    CHECK(s2.final_step().claimed == field(StandardField::kEpsilon).times(lift(g) * x(1)));
  }
  SUBCASE("z powers are eliminated") {
    const MembershipScript s = plan_module_element(W("z^2*y"));
    CHECK(verify_script(s).ok);
  }
  SUBCASE("unsupported targets are rejected") {
    CHECK_THROWS_AS(plan_membership(W("y"), StandardField::kEpsilon), DomainError);
    CHECK_THROWS_AS(plan_membership(W("x1"), StandardField::kEpsilon), DomainError);
    CHECK_THROWS_AS(plan_membership(W("y*x2"), StandardField::kDelta), DomainError);
    CHECK_THROWS_AS(plan_membership(W("x0^2*x2"), StandardField::kDelta), DomainError);
    CHECK_THROWS_AS(plan_membership(W("x2"), StandardField::kDeltaPrime), DomainError);
  }
}

TEST_CASE("planned script families verify") {
  for (int b = 1; b <= 3; ++b) {
    const auto p = SurfaceParameters::from_b(b);
    const auto X = [&](int k, unsigned e = 1) { return GeneratorWord::x(k, p, e); };
    for (unsigned N = 1; N <= 2; ++N) {
      for (int k = 0; k <= b; ++k) {
        CHECK(verify_script(plan_membership(X(k) * X(b, N), StandardField::kDelta)).ok);
        for (unsigned M = 0; M <= 2; ++M) {
          CHECK(verify_script(plan_membership(X(0, M) * X(k) * X(b, N), StandardField::kEpsilon)).ok);
          CHECK(verify_script(plan_membership(GeneratorWord::y(p, static_cast<unsigned>(b) + M) * X(0, M) * X(k) * X(b, N),
                                              StandardField::kEpsilon))
                    .ok);
        }
      }
    }
  }
}

TEST_CASE("changing one claim breaks a planned script at that step") {
  Gen g(71);
  const MembershipScript s = plan_module_element(W("x1*z"));
  REQUIRE(verify_script(s).ok);
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    MembershipScript mutated = s;
    mutated.steps[i].claimed = flip_one_sign(mutated.steps[i].claimed, g);
    const ScriptVerdict v = verify_script(mutated);
    CHECK_FALSE(v.ok);
    CHECK(v.failing_step == i);

    MembershipScript extended = s;
    extended.steps[i].claimed = extended.steps[i].claimed + field(StandardField::kEpsilon).times(x(0) * x(0));
    const ScriptVerdict w = verify_script(extended);
    CHECK_FALSE(w.ok);
    CHECK(w.failing_step == i);
  }
}

TEST_CASE("pushing a script along the flow keeps it valid") {
  for (int b = 1; b <= 3; ++b) {
    const auto p = SurfaceParameters::from_b(b);
    const RingAutomorphism phi = exp_lnd(field(StandardField::kDelta, p).times(x(b, p)));
    const MembershipScript s = plan_module_element(GeneratorWord(p));
    const MembershipScript pushed = pushforward_script(phi, s);
    CHECK(verify_script(pushed).ok);
    for (const auto& step : pushed.steps) {
      if (step.kind == StepKind::kLeaf) CHECK(step.certificate->kind == CompletenessKind::kConjugate);
    }
    const Derivation g = field(StandardField::kEpsilon, p).times(lift(module_generator_word(p)));
    CHECK(pushed.final_step().claimed == pushforward(phi, g));
  }
}
