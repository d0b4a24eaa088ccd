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

#include "dgd/serialization.hpp"

#include <cmath>
#include <memory>

#include <json.hpp>

#include "dgd/errors.hpp"

namespace dgd {

namespace {

using nlohmann::json;

json polys_to_json(const std::array<Polynomial, kVariableCount>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::array<Polynomial, kVariableCount> polys_from_json(const json& j) {
  if (!j.is_array() || j.size() != kVariableCount) throw ParseError("expected an array of four polynomials");
  std::array<Polynomial, kVariableCount> out;
  for (std::size_t i = 0; i < kVariableCount; ++i) out[i] = Polynomial::parse(j.at(i).get<std::string>());
  return out;
}

json certificate_json(const CompletenessCertificate& c) {
  json out{{"kind", std::string(completeness_kind_name(c.kind))}, {"field", c.field.to_string()}};
  switch (c.kind) {
    case CompletenessKind::kLocallyNilpotent:
      out["orders"] = c.orders;
      break;
    case CompletenessKind::kDiagonal:
      break;
    case CompletenessKind::kFunctionTimesField:
      if (c.factor) out["factor"] = c.factor->to_string();
      if (c.base) out["base"] = certificate_json(*c.base);
      break;
    case CompletenessKind::kConjugate:
      if (c.conjugator) {
        out["conjugator"] = {{"images", polys_to_json(c.conjugator->images())},
                             {"inverse_images", polys_to_json(c.conjugator->inverse_images())}};
      }
      if (c.base) out["base"] = certificate_json(*c.base);
      break;
  }
  return out;
}

CompletenessKind kind_from_name(const std::string& name) {
  for (CompletenessKind k : {CompletenessKind::kLocallyNilpotent, CompletenessKind::kDiagonal,
                             CompletenessKind::kFunctionTimesField, CompletenessKind::kConjugate}) {
    if (completeness_kind_name(k) == name) return k;
  }
  throw ParseError("unknown certificate kind '" + name + "'");
}

CompletenessCertificate certificate_from(const json& j, const SurfaceParameters& params) {
  if (!j.is_object()) throw ParseError("certificate must be an object");
  CompletenessCertificate c{kind_from_name(j.at("kind").get<std::string>()),
                            Derivation::parse(j.at("field").get<std::string>(), params),
                            {},
                            {},
                            {},
                            {}};
  if (j.contains("orders")) c.orders = j.at("orders").get<NilpotencyOrders>();
  if (j.contains("factor")) c.factor = Polynomial::parse(j.at("factor").get<std::string>());
  if (j.contains("base")) c.base = std::make_shared<const CompletenessCertificate>(certificate_from(j.at("base"), params));
  if (j.contains("conjugator")) {
    const json& a = j.at("conjugator");
    c.conjugator = std::make_shared<const RingAutomorphism>(polys_from_json(a.at("images")),
                                                            polys_from_json(a.at("inverse_images")), params);
  }
  return c;
}

StepKind step_kind_from_name(const std::string& name) {
  for (StepKind k : {StepKind::kLeaf, StepKind::kBracket, StepKind::kLinearCombination}) {
    if (step_kind_name(k) == name) return k;
  }
  throw ParseError("unknown step kind '" + name + "'");
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

double round_millis(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

}  // namespace

std::string certificate_to_json(const CompletenessCertificate& c, int indent) {
  return certificate_json(c).dump(indent);
}

CompletenessCertificate certificate_from_json(std::string_view text, const SurfaceParameters& params) {
  return guarded([&] { return certificate_from(json::parse(text), params); });
}

std::string script_to_json(const MembershipScript& script, int indent) {
  json steps = json::array();
  for (const auto& s : script.steps) {
    json scalars = json::array();
    for (const auto& q : s.scalars) scalars.push_back(to_string(q));
    json step{{"id", s.id},
              {"kind", std::string(step_kind_name(s.kind))},
              {"refs", s.refs},
              {"scalars", scalars},
              {"claimed_field", s.claimed.to_string()},
              {"label", s.label}};
    if (s.certificate) step["certificate"] = certificate_json(*s.certificate);
    steps.push_back(std::move(step));
  }
  json out{{"format", "dgdensity-script"},
           {"n", script.params.n()},
           {"target", script.target},
           {"steps", std::move(steps)}};
  if (script.target_field) out["target_field"] = script.target_field->to_string();
  return out.dump(indent);
}

MembershipScript script_from_json(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    if (j.value("format", "") != "dgdensity-script") throw ParseError("not a dgdensity script");
    const SurfaceParameters params = SurfaceParameters::from_n(j.at("n").get<int>());
    MembershipScript script{params, j.value("target", ""), {}, std::nullopt};
    if (j.contains("target_field")) {
      script.target_field = Derivation::parse(j.at("target_field").get<std::string>(), params);
    }
    for (const json& s : j.at("steps")) {
      std::vector<Rational> scalars;
      for (const json& q : s.value("scalars", json::array())) {
        scalars.push_back(q.is_string() ? parse_rational(q.get<std::string>()) : Rational(q.get<long>()));
      }
      std::optional<CompletenessCertificate> cert;
      if (s.contains("certificate")) cert = certificate_from(s.at("certificate"), params);
      script.steps.push_back(ScriptStep{s.at("id").get<std::size_t>(),
                                        step_kind_from_name(s.at("kind").get<std::string>()),
                                        s.value("refs", std::vector<std::size_t>{}),
                                        std::move(scalars),
                                        std::move(cert),
                                        Derivation::parse(s.at("claimed_field").get<std::string>(), params),
                                        s.value("label", "")});
    }
    return script;
  });
}

std::string report_to_json(const VerificationReport& report, int indent) {
  const RunConfig& c = report.config;
  const SurfaceParameters params = SurfaceParameters::from_n(c.n);
  json stages = json::array();
  for (const auto& s : report.stages) {
    stages.push_back({{"name", s.name},
                      {"status", std::string(stage_status_name(s.status))},
                      {"checked", s.checked},
                      {"details", s.details},
                      {"counterexample", s.counterexample ? json(*s.counterexample) : json(nullptr)},
                      {"elapsed", round_millis(s.elapsed_seconds)}});
  }
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(
        {{"topic", d.topic}, {"stated", d.stated}, {"recomputed", d.recomputed}, {"resolution", d.resolution}});
  }
  json selected = json::array();
  for (const auto& name : stage_names()) {
    if (c.selects(name)) selected.push_back(name);
  }
  const json out{
      {"tool", "dgdensity"},
      {"version", report.version},
      {"timestamp", report.timestamp},
      {"config",
       {{"n", c.n},
        {"b", params.b()},
        {"d", params.d()},
        {"nmax", c.n_max},
        {"mmax", c.m_max},
        {"rmax", c.r_max},
        {"word_degree", c.word_degree},
        {"module_samples", c.module_samples},
        {"bracket_pairs", c.bracket_pairs},
        {"seed", c.seed},
        {"stages", selected},
        {"max_candidates", c.max_candidates}}},
      {"status", report.passed() ? "PASS" : "FAIL"},
      {"stages", stages},
      {"assumptions", report.assumptions},
      {"discrepancies", discrepancies},
  };
  return out.dump(indent);
}

}  // namespace dgd
