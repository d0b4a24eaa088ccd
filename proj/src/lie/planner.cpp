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

#include "dgd/lie/planner.hpp"

#include <map>
#include <optional>
#include <string>

#include "dgd/errors.hpp"

namespace dgd {

namespace {

using Field = StandardField;

// b (b-1) ... (b-j+1), j factors.
Rational falling(int b, int j) {
  Integer out = 1;
  for (int i = 0; i < j; ++i) out *= (b - i);
  return Rational(out);
}

class Planner {
 public:
  explicit Planner(const SurfaceParameters& params)
      : params_(params),
        b_(params.b()),
        delta_cert_(*certify_locally_nilpotent(make_standard_field(Field::kDelta, params))),
        delta_prime_cert_(*certify_locally_nilpotent(make_standard_field(Field::kDeltaPrime, params))),
        eps_cert_(*certify_diagonal(make_standard_field(Field::kEpsilon, params))) {}

  MembershipScript finish(std::string target, const Derivation& field) {
    return MembershipScript{params_, std::move(target), std::move(steps_), field};
  }

  GeneratorWord one() const { return GeneratorWord(params_); }
  GeneratorWord x(int k, unsigned power = 1) const { return GeneratorWord::x(k, params_, power); }
  GeneratorWord y(unsigned power) const { return GeneratorWord::y(params_, power); }
  FieldExpr term(const Rational& c, const GeneratorWord& w, Field f) const { return FieldExpr(c, w, f); }

  // f * mu, complete because mu(mu(f)) = 0.
  std::size_t leaf(const GeneratorWord& w, Field mu) {
    const FieldExpr claim = term(1, w, mu);
    const std::string key = "leaf " + claim.to_string();
    if (auto hit = lookup(key)) return *hit;
    const CompletenessCertificate& base = base_certificate(mu);
    CompletenessCertificate cert = w.is_one() ? base : certify_function_times_field(lift(w), base);
    return emit(key, StepKind::kLeaf, {}, {}, std::move(cert), claim);
  }

  std::size_t bracket_step(std::size_t lhs, std::size_t rhs, const FieldExpr& claim) {
    const std::string key = "[" + std::to_string(lhs) + "," + std::to_string(rhs) + "]";
    if (auto hit = lookup(key)) return *hit;
    return emit(key, StepKind::kBracket, {lhs, rhs}, {}, std::nullopt, claim);
  }

  std::size_t combine(std::vector<std::size_t> refs, std::vector<Rational> scalars,
                      const FieldExpr& claim) {
    const std::string key = "field " + claim.to_string();
    if (auto hit = lookup(key)) return *hit;
    return emit(key, StepKind::kLinearCombination, std::move(refs), std::move(scalars),
                std::nullopt, claim);
  }

  std::optional<std::size_t> known(const FieldExpr& claim) const { return lookup("field " + claim.to_string()); }

  // X_1 = [delta, x0 eps], X_s = [delta, X_{s-1}]
  //     = s b(b-1)...(b-s+2) x_{s-1} delta + b(b-1)...(b-s+1) x_s eps.
  std::size_t x_chain(int s) {
    const std::size_t previous = s == 1 ? leaf(x(0), Field::kEpsilon) : x_chain(s - 1);
    FieldExpr claim = term(Rational(s) * falling(b_, s - 1), x(s - 1), Field::kDelta);
    claim.add(falling(b_, s), x(s), Field::kEpsilon);
    return bracket_step(leaf(one(), Field::kDelta), previous, claim);
  }

  // xb eps = (X_b - b*b! x_{b-1} delta) / b!, with x_{b-1} delta complete.
  std::size_t xb_eps() {
    const FieldExpr target = term(1, x(b_), Field::kEpsilon);
    if (auto hit = known(target)) return *hit;
    const std::size_t chain = x_chain(b_);
    const std::size_t tail = leaf(x(b_ - 1), Field::kDelta);
    const Rational bf(factorial(static_cast<unsigned long>(b_)));
    const Rational lead = Rational(b_) * falling(b_, b_ - 1);
    return combine({chain, tail}, {1 / bf, -lead / bf}, target);
  }

  // [x0 eps, xb eps] = -b x0 xb eps.
  std::size_t x0xb_eps() {
    const FieldExpr target = term(1, x(0) * x(b_), Field::kEpsilon);
    if (auto hit = known(target)) return *hit;
    const std::size_t br =
        bracket_step(leaf(x(0), Field::kEpsilon), xb_eps(), term(-b_, x(0) * x(b_), Field::kEpsilon));
    return combine({br}, {Rational(-1, b_)}, target);
  }

  // x_k xb^N delta, N >= 1, 0 <= k <= b.
  std::size_t delta_field(int k, unsigned N) {
    if (k == b_) return leaf(x(b_, N + 1), Field::kDelta);
    const FieldExpr target = term(1, x(k) * x(b_, N), Field::kDelta);
    if (auto hit = known(target)) return *hit;

    if (k == 0 && N == 1) {
      // [x0 eps, xb delta] = -(1+b) x0 xb delta - b x1 xb eps
      FieldExpr s1_claim = term(-(1 + b_), x(0) * x(b_), Field::kDelta);
      s1_claim.add(-b_, x(1) * x(b_), Field::kEpsilon);
      const std::size_t s1 =
          bracket_step(leaf(x(0), Field::kEpsilon), leaf(x(b_), Field::kDelta), s1_claim);
      // [delta, x0 xb eps] = x0 xb delta + b x1 xb eps
      FieldExpr s2_claim = term(1, x(0) * x(b_), Field::kDelta);
      s2_claim.add(b_, x(1) * x(b_), Field::kEpsilon);
      const std::size_t s2 = bracket_step(leaf(one(), Field::kDelta), x0xb_eps(), s2_claim);
      const std::size_t sum = combine({s1, s2}, {1, 1}, term(-b_, x(0) * x(b_), Field::kDelta));
      return combine({sum}, {Rational(-1, b_)}, target);
    }

    if (k == 0) {
      // [x0 eps, x_{b-1} delta] = -b x0 x_{b-1} delta - b x0 xb eps, using x1 x_{b-1} = x0 xb.
      FieldExpr t_claim = term(-b_, x(0) * x(b_ - 1), Field::kDelta);
      t_claim.add(-b_, x(0) * x(b_), Field::kEpsilon);
      const std::size_t tail = leaf(x(b_ - 1), Field::kDelta);
      const std::size_t t = bracket_step(leaf(x(0), Field::kEpsilon), tail, t_claim);
      const std::size_t u = combine({t, x0xb_eps()}, {Rational(-1, b_), -1},
                                    term(1, x(0) * x(b_ - 1), Field::kDelta));
      // y xb = (1 + x0) x_{b-1}
      const std::size_t v = combine({u, tail}, {1, 1}, term(1, y(1) * x(b_), Field::kDelta));
      // [xb^(N-1) delta, y xb delta] = xb^N (1 + n x0) delta
      FieldExpr w_claim = term(1, x(b_, N), Field::kDelta);
      w_claim.add(params_.n(), x(0) * x(b_, N), Field::kDelta);
      const std::size_t w = bracket_step(leaf(x(b_, N - 1), Field::kDelta), v, w_claim);
      const Rational inv_n(1, params_.n());
      return combine({w, leaf(x(b_, N), Field::kDelta)}, {inv_n, -inv_n}, target);
    }

    // [xb^(N-1) delta, x_{k-1} xb delta] = (b-k+1) x_k xb^N delta
    const std::size_t previous = delta_field(k - 1, 1);
    const std::size_t br = bracket_step(leaf(x(b_, N - 1), Field::kDelta), previous,
                                        term(b_ - k + 1, x(k) * x(b_, N), Field::kDelta));
    return combine({br}, {Rational(1, b_ - k + 1)}, target);
  }

  // x_k xb^N eps for 1 <= k <= b, N >= 1:
  // [xb^(N-1) delta, x_{k-1} xb eps] = (1 + b(N-1)) x_{k-1} xb^N delta + (b-k+1) x_k xb^N eps.
  std::size_t eps_step(int k, unsigned N) {
    const FieldExpr target = term(1, x(k) * x(b_, N), Field::kEpsilon);
    if (auto hit = known(target)) return *hit;
    const std::size_t previous_eps = k == 1 ? x0xb_eps() : eps_field(0, k - 1, 1);
    const std::size_t previous_delta = delta_field(k - 1, N);
    const Rational shift(1 + b_ * static_cast<int>(N - 1));
    const Rational gain(b_ - k + 1);
    FieldExpr claim = term(shift, x(k - 1) * x(b_, N), Field::kDelta);
    claim.add(gain, x(k) * x(b_, N), Field::kEpsilon);
    const std::size_t br = bracket_step(leaf(x(b_, N - 1), Field::kDelta), previous_eps, claim);
    return combine({br, previous_delta}, {1 / gain, -shift / gain}, target);
  }

  // x0^M x_h xb^N eps for a normal-form key.
  std::size_t eps_field(unsigned M, std::optional<int> h, unsigned N) {
    if (!h && N == 0) return leaf(x(0, M), Field::kEpsilon);
    if (h && N == 0) {
      throw DomainError("x0^M * x_h * eps with a middle factor and no xb factor is not a supported target");
    }
    GeneratorWord word = x(0, M) * x(b_, N);
    if (h) word = word * x(*h);
    const FieldExpr target = term(1, word, Field::kEpsilon);
    if (auto hit = known(target)) return *hit;

    if (M > 0) {
      // [x0^M eps, x_h xb^N eps] = -(h + bN) x0^M x_h xb^N eps
      const Rational weight(h.value_or(0) + b_ * static_cast<int>(N));
      const std::size_t inner = eps_field(0, h, N);
      const std::size_t br =
          bracket_step(leaf(x(0, M), Field::kEpsilon), inner, term(-weight, word, Field::kEpsilon));
      return combine({br}, {-1 / weight}, target);
    }
    if (!h) return N == 1 ? xb_eps() : eps_step(b_, N - 1);
    return eps_step(*h, N);
  }

  // [x0 eps, y^R delta'] = (b+R) x0 y^R delta' - y^(b+R) eps.
  std::size_t ey(unsigned R) {
    const FieldExpr target = term(1, y(b_ + R), Field::kEpsilon);
    if (auto hit = known(target)) return *hit;
    const std::size_t x0_eps = leaf(x(0), Field::kEpsilon);
    const std::size_t yr = leaf(y(R), Field::kDeltaPrime);
    const std::size_t x0yr = leaf(x(0) * y(R), Field::kDeltaPrime);
    const Rational c(b_ + static_cast<int>(R));
    FieldExpr claim = term(c, x(0) * y(R), Field::kDeltaPrime);
    claim.add(-1, y(b_ + R), Field::kEpsilon);
    const std::size_t br = bracket_step(x0_eps, yr, claim);
    return combine({x0yr, br}, {c, -1}, target);
  }

  // [y^(b+R) eps, K eps] = -(h + bN + b + R) y^(b+R) K eps for K = x0^M x_h xb^N.
  std::size_t prop_d(unsigned R, unsigned M, std::optional<int> h, unsigned N) {
    if (M == 0 && !h && N == 0) return ey(R);
    GeneratorWord word = y(b_ + R) * x(0, M) * x(b_, N);
    if (h) word = word * x(*h);
    const FieldExpr target = term(1, word, Field::kEpsilon);
    if (auto hit = known(target)) return *hit;
    const std::size_t inner = eps_field(M, h, N);
    const Rational c = -Rational(h.value_or(0) + b_ * static_cast<int>(N) + b_ + static_cast<int>(R));
    const std::size_t br = bracket_step(ey(R), inner, term(c, word, Field::kEpsilon));
    return combine({br}, {1 / c}, target);
  }

  std::size_t epsilon_target(const GeneratorWord& w) {
    std::vector<std::size_t> refs;
    std::vector<Rational> scalars;
    const WordPolynomial expanded = eliminate_z(w);
    for (const auto& [v, c] : expanded.terms()) {
      const unsigned R = v.y_exponent();
      const XNormalForm nf = x_normal_form(v.with_exponent(kGeneratorY, 0));
      if (R == 0) {
        refs.push_back(eps_field(nf.M, nf.h, nf.N));
      } else if (R >= static_cast<unsigned>(b_)) {
        if (nf.h && nf.N == 0) {
          throw DomainError("target " + w.to_string() + "*eps: middle factor without xb is not supported");
        }
        refs.push_back(prop_d(R - static_cast<unsigned>(b_), nf.M, nf.h, nf.N));
      } else {
        throw DomainError("target " + w.to_string() + "*eps: y exponent must be 0 or at least b");
      }
      scalars.push_back(c);
    }
    return finish_target(refs, scalars, term(1, w, Field::kEpsilon));
  }

  std::size_t delta_target(const GeneratorWord& w) {
    if (!w.is_x_word()) {
      throw DomainError("target " + w.to_string() + "*delta: only x-words are supported");
    }
    const XNormalForm nf = x_normal_form(w);
    std::size_t idx;
    if (nf.M == 0 && !nf.h) {
      idx = leaf(x(b_, nf.N), Field::kDelta);
    } else if (nf.M == 1 && !nf.h && nf.N >= 1) {
      idx = delta_field(0, nf.N);
    } else if (nf.M == 0 && nf.h && nf.N >= 1) {
      idx = delta_field(*nf.h, nf.N);
    } else {
      throw DomainError("target " + w.to_string() + "*delta is not of the form x_k*xb^N with N > 0");
    }
    return finish_target({idx}, {1}, term(1, w, Field::kDelta));
  }

 private:
  // Reuses the single reference when it already is the target, otherwise
  // adds the combination (this is where z = 1 + x0 and the x-relations are
  // checked).
  std::size_t finish_target(const std::vector<std::size_t>& refs, const std::vector<Rational>& scalars,
                            const FieldExpr& target) {
    if (refs.size() == 1 && scalars[0] == 1 && steps_[refs[0]].claimed == target.lift()) {
      return refs[0];
    }
    return combine(refs, scalars, target);
  }

  const CompletenessCertificate& base_certificate(Field f) const {
    switch (f) {
      case Field::kDelta:
        return delta_cert_;
      case Field::kDeltaPrime:
        return delta_prime_cert_;
      case Field::kEpsilon:
        return eps_cert_;
      case Field::kTorus:
        break;
    }
    throw std::logic_error("no base certificate for the torus field");
  }

  std::optional<std::size_t> lookup(const std::string& key) const {
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t emit(const std::string& key, StepKind kind, std::vector<std::size_t> refs,
                   std::vector<Rational> scalars, std::optional<CompletenessCertificate> cert,
                   const FieldExpr& claim) {
    const std::size_t id = steps_.size();
    steps_.push_back(ScriptStep{id, kind, std::move(refs), std::move(scalars), std::move(cert),
                                claim.lift(), claim.to_string()});
    memo_.emplace(key, id);
    return id;
  }

  SurfaceParameters params_;
  int b_;
  CompletenessCertificate delta_cert_;
  CompletenessCertificate delta_prime_cert_;
  CompletenessCertificate eps_cert_;
  std::vector<ScriptStep> steps_;
  std::map<std::string, std::size_t> memo_;
};

}  // namespace

MembershipScript plan_membership(const GeneratorWord& coefficient, StandardField base) {
  Planner planner(coefficient.params());
  switch (base) {
    case StandardField::kDelta:
      planner.delta_target(coefficient);
      break;
    case StandardField::kEpsilon:
      planner.epsilon_target(coefficient);
      break;
    default:
      throw DomainError("membership targets are words times delta or eps");
  }
  const FieldExpr target(1, coefficient, base);
  return planner.finish(target.to_string(), target.lift());
}

GeneratorWord module_generator_word(const SurfaceParameters& params) {
  GeneratorWord w = GeneratorWord::y(params, static_cast<unsigned>(params.b()));
  for (int k = 0; k <= params.b(); ++k) w = w * GeneratorWord::x(k, params);
  return w;
}

MembershipScript plan_module_element(const GeneratorWord& coefficient) {
  const GeneratorWord word = coefficient * module_generator_word(coefficient.params());
  Planner planner(coefficient.params());
  planner.epsilon_target(word);
  return planner.finish(coefficient.to_string() + " * (" +
                            module_generator_word(coefficient.params()).to_string() + ")*eps",
                        FieldExpr(1, word, StandardField::kEpsilon).lift());
}

}  // namespace dgd
