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

#include "dgd/derivation.hpp"
#include "dgd/errors.hpp"
#include "dgd/genring.hpp"
#include "dgd/lie/standard_fields.hpp"
#include "dgd/torus.hpp"
#include "generators.hpp"

using namespace dgd;
using dgd::testing::Gen;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

const SurfaceParameters kB2 = SurfaceParameters::from_n(3);

Derivation field(StandardField f, const SurfaceParameters& p = kB2) { return make_standard_field(f, p); }

}  // namespace

TEST_CASE("apply") {
  const Polynomial y = lift(GeneratorWord::y(kB2));
  const Polynomial delta_y = apply(field(StandardField::kDelta), y);
  CHECK(delta_y == P("2*a2^2*a3 + a1*a4"));
  CHECK(equals_mod_ideal(delta_y, Polynomial(1) + Rational(3) * lift(GeneratorWord::x(0, kB2)), kB2));
  for (int k = 0; k <= 2; ++k) {
    const Polynomial xk = lift(GeneratorWord::x(k, kB2));
    CHECK(apply(field(StandardField::kEpsilon), xk) == Rational(-k) * xk);
  }
  CHECK(apply(field(StandardField::kDeltaPrime), y).is_zero());
}

TEST_CASE("bracket") {
  const Derivation eps = field(StandardField::kEpsilon);
  const Derivation delta = field(StandardField::kDelta);
  const Derivation dp = field(StandardField::kDeltaPrime);
  CHECK(bracket(eps, delta) == -delta);
  CHECK(bracket(eps, dp) == Rational(2) * dp);
  CHECK(bracket(delta, delta).is_zero());
  CHECK_THROWS_AS(bracket(eps, field(StandardField::kDelta, SurfaceParameters::from_n(4))), ParameterMismatch);
}

TEST_CASE("tangency") {
  CHECK(is_tangent(field(StandardField::kDelta)));
  CHECK_FALSE(is_tangent(Derivation::coordinate(0, kB2)));
  // d/da1 applied to F is a4, which is nonzero at (1, 1, 1, 2)
  CHECK(apply(Derivation::coordinate(0, kB2), defining_polynomial(kB2)) == P("a4"));
  CHECK(evaluate(P("a4"), Point{1, 1, 1, 2}) != 0);
  CHECK(is_tangent(field(StandardField::kTorus)));
  for (int n = 2; n <= 7; ++n) {
    const auto p = SurfaceParameters::from_n(n);
    for (StandardField f : {StandardField::kDelta, StandardField::kDeltaPrime, StandardField::kEpsilon,
                            StandardField::kTorus}) {
      CHECK(apply(field(f, p), defining_polynomial(p)).is_zero());
    }
  }
}

TEST_CASE("evaluate_field") {
  CHECK(evaluate_field(field(StandardField::kEpsilon), Point{1, 1, 1, 2}) == Point{1, 0, 0, -2});
  CHECK(evaluate_field(field(StandardField::kDelta), Point{1, 1, 1, 2}) == Point{2, 2, 0, 0});
  CHECK(evaluate_field(Derivation::zero(kB2), Point{3, 1, 4, 1}) == Point{0, 0, 0, 0});
}

TEST_CASE("field text") {
  const Derivation x = Derivation::parse("a1; 0; -2*a3; a4", kB2);
  CHECK(x.coefficient(2) == P("-2*a3"));
  CHECK(Derivation::parse(x.to_string(), kB2) == x);
  CHECK_THROWS_AS(Derivation::parse("a1; a2", kB2), ParseError);
  CHECK(parse_field("eps", kB2) == field(StandardField::kEpsilon));
  CHECK(parse_field("deltaprime", kB2) == field(StandardField::kDeltaPrime));
  CHECK_THROWS_AS(parse_field("nope", kB2), ParseError);
}

TEST_CASE("local nilpotency") {
  const auto orders = is_locally_nilpotent(field(StandardField::kDelta), 20);
  REQUIRE(orders);
  CHECK(*orders == NilpotencyOrders{3, 2, 1, 1});
  CHECK_FALSE(is_locally_nilpotent(field(StandardField::kEpsilon), 50));
  CHECK(is_locally_nilpotent(Derivation::zero(kB2), 1) == NilpotencyOrders{1, 1, 1, 1});
  CHECK(default_nilpotency_bound(field(StandardField::kDelta)) == 4 * 2 + 4);
}

TEST_CASE("exp_lnd") {
  CHECK(exp_lnd(Derivation::zero(kB2)).is_identity());

  const Derivation x = field(StandardField::kDelta).times(lift(GeneratorWord::x(2, kB2)));
  const RingAutomorphism phi = exp_lnd(x);
  CHECK(phi.images()[0] == P("a1 + 2*a2*a3^2*a4^2 + a3^3*a4^5"));
  CHECK(phi.images()[1] == P("a2 + a3*a4^3"));
  CHECK(phi.images()[2] == P("a3"));
  CHECK(phi.images()[3] == P("a4"));
  for (int i = 0; i < 4; ++i) CHECK(phi.images()[static_cast<std::size_t>(i)] == testing::exp_series(x, i));
  CHECK(substitute(defining_polynomial(kB2), std::span<const Polynomial, 4>(phi.images())) ==
        defining_polynomial(kB2));
  CHECK(phi.fixes_defining_polynomial_exactly());
  CHECK(phi.inverse_is_consistent());

  const RingAutomorphism psi = exp_lnd(field(StandardField::kDeltaPrime));
  CHECK(psi.apply(P("a3")) == P("a3 + a1^2"));

  CHECK_THROWS_AS(exp_lnd(field(StandardField::kEpsilon), 5), NilpotencyBoundExceeded);
}

TEST_CASE("pushforward") {
  Gen g(5);
  const RingAutomorphism id = RingAutomorphism::identity(kB2);
  const Derivation x = g.tangent_field(kB2);
  CHECK(pushforward(id, x) == x);

  const Polynomial x2 = lift(GeneratorWord::x(2, kB2));
  const RingAutomorphism phi = exp_lnd(field(StandardField::kDelta).times(x2));
  const Derivation pushed = pushforward(phi, field(StandardField::kEpsilon));
  CHECK(pushed == field(StandardField::kEpsilon) + field(StandardField::kDelta).times(Rational(3) * x2));
  CHECK(is_tangent(pushed));
  // At a point with x2(p) = 0 this is eps_p + eps_p(x2) delta_p, since eps(x2) = -2 x2 vanishes there.
  const Point p{1, 1, 0, 1};
  REQUIRE(lies_on_surface(p, kB2));
  REQUIRE(evaluate(x2, p) == 0);
  const Point expected = evaluate_field(field(StandardField::kEpsilon), p);
  CHECK(evaluate_field(pushed, p) == expected);
  CHECK(evaluate(normal_form(apply(field(StandardField::kEpsilon), x2), kB2), p) == 0);
}

TEST_CASE("pushforward preserves brackets") {
  Gen g(7);
  for (int n : {2, 3, 4}) {
    const auto params = SurfaceParameters::from_n(n);
    const RingAutomorphism phi =
        exp_lnd(field(StandardField::kDelta, params).times(lift(GeneratorWord::x(params.b(), params))));
    for (int i = 0; i < 10; ++i) {
      const Derivation x = g.tangent_field(params), y = g.tangent_field(params);
      CHECK(pushforward(phi, bracket(x, y)) == bracket(pushforward(phi, x), pushforward(phi, y)));
    }
  }
}

TEST_CASE("Jacobi identity on random triples") {
  Gen g(31);
  for (int i = 0; i < 50; ++i) {
    const auto params = SurfaceParameters::from_n(2 + i % 3);
    const Derivation x = g.tangent_field(params), y = g.tangent_field(params), z = g.tangent_field(params);
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
  }
}

TEST_CASE("Leibniz rule") {
  Gen g(37);
  for (int i = 0; i < 50; ++i) {
    const Derivation x = g.derivation(kB2);
    const Polynomial p = g.polynomial(), q = g.polynomial();
    CHECK(apply(x, p * q) == apply(x, p) * q + p * apply(x, q));
  }
}

TEST_CASE("tangency and invariance are closed under brackets") {
  Gen g(41);
  for (int i = 0; i < 30; ++i) {
    const auto params = SurfaceParameters::from_n(2 + i % 4);
    const Derivation x = g.tangent_field(params), y = g.tangent_field(params);
    REQUIRE(is_tangent(x));
    REQUIRE(is_invariant_field(x));
    CHECK(is_tangent(bracket(x, y)));
    CHECK(is_invariant_field(bracket(x, y)));
  }
}

TEST_CASE("automorphisms from locally nilpotent fields") {
  Gen g(43);
  for (int n : {2, 3, 4}) {
    const auto params = SurfaceParameters::from_n(n);
    for (const Derivation& x :
         {field(StandardField::kDelta, params), field(StandardField::kDeltaPrime, params),
          field(StandardField::kDelta, params).times(lift(GeneratorWord::x(params.b(), params)))}) {
      const RingAutomorphism a = exp_lnd(x);
      const RingAutomorphism b = exp_lnd(-x);
      CHECK(compose(a, b).is_identity());
      CHECK(compose(b, a).is_identity());
      CHECK(a.preserves_defining_polynomial());
      for (int i = 0; i < 5; ++i) {
        const Polynomial p = g.polynomial(3, 2), q = g.polynomial(3, 2);
        CHECK(equals_mod_ideal(a.apply(p * q), a.apply(p) * a.apply(q), params));
      }
    }
  }
}
