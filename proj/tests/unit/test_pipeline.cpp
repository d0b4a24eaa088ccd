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

#include <json.hpp>
#include <thread>

#include "dgd/errors.hpp"
#include "dgd/lie/pipeline.hpp"
#include "dgd/lie/planner.hpp"
#include "dgd/serialization.hpp"

using namespace dgd;
using nlohmann::json;

namespace {

const SurfaceParameters kB2 = SurfaceParameters::from_n(3);

json strip_timing(json report) {
  report.erase("timestamp");
  for (auto& s : report["stages"]) s.erase("elapsed");
  return report;
}

}  // namespace

TEST_CASE("run configuration") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.n = 1;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.n = 3;
  c.stages = {"commutation", "bogus"};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c.stages = {"commutation"};
  CHECK(c.selects("commutation"));
  CHECK_FALSE(c.selects("flow"));
  c.n_max = 0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK_THROWS_AS(density_pipeline(RunConfig{.n = 1}), DomainError);
  CHECK(stage_names().size() == 11);
}

TEST_CASE("all stages pass for n = 2 and n = 3") {
  for (int n : {2, 3}) {
    RunConfig c;
    c.n = n;
    const VerificationReport r = density_pipeline(c);
    CHECK(r.passed());
    REQUIRE(r.stages.size() == stage_names().size());
    for (std::size_t i = 0; i < r.stages.size(); ++i) {
      CAPTURE(r.stages[i].name);
      CHECK(r.stages[i].name == stage_names()[i]);
      CHECK(r.stages[i].status == StageStatus::kPass);
      CHECK(r.stages[i].checked > 0);
      CHECK_FALSE(r.stages[i].counterexample);
    }
    CHECK(r.discrepancies.size() == 3);
    CHECK(r.assumptions.size() == 4);
  }
}

TEST_CASE("stage filter") {
  RunConfig c;
  c.n = 4;
  c.stages = {"commutation"};
  const VerificationReport r = density_pipeline(c);
  REQUIRE(r.stages.size() == 1);
  CHECK(r.stages[0].name == "commutation");
  CHECK(r.stages[0].checked == 2);
  CHECK(r.passed());
}

TEST_CASE("reports are reproducible and ordered by stage") {
  RunConfig c;
  c.n = 3;
  c.module_samples = 10;
  const std::string a = report_to_json(density_pipeline(c));
  const std::string b = report_to_json(density_pipeline(c));
  CHECK(strip_timing(json::parse(a)) == strip_timing(json::parse(b)));

  c.jobs = 4;
  const std::string parallel = report_to_json(density_pipeline(c));
  CHECK(strip_timing(json::parse(parallel)) == strip_timing(json::parse(a)));

  const json j = json::parse(a);
  CHECK(j["status"] == "PASS");
  CHECK(j["config"]["b"] == 2);
  for (const auto& s : j["stages"]) {
    CHECK(s.contains("name"));
    CHECK(s.contains("status"));
    CHECK(s.contains("details"));
    CHECK(s["elapsed"].is_number());
  }
}

TEST_CASE("the accumulator orders results from several threads") {
  ReportAccumulator acc;
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < 8; ++i) {
    threads.emplace_back([&acc, i] {
      StageResult r;
      r.index = 7 - i;
      r.name = std::to_string(7 - i);
      acc.add(r);
    });
  }
  for (auto& t : threads) t.join();
  const auto results = acc.results();
  REQUIRE(results.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(results[i].index == i);
}

TEST_CASE("script JSON round-trips") {
  const MembershipScript s = plan_module_element(GeneratorWord::parse("z*x1", kB2));
  const std::string text = script_to_json(s);
  const MembershipScript back = script_from_json(text);
  CHECK(back.steps.size() == s.steps.size());
  CHECK(back.target == s.target);
  REQUIRE(back.target_field);
  CHECK(*back.target_field == *s.target_field);
  CHECK(verify_script(back).ok);
  CHECK(script_to_json(back) == text);

  const json j = json::parse(text);
  CHECK(j["steps"][0]["kind"] == "leaf");
  CHECK(j["steps"][0].contains("certificate"));
  CHECK(j["steps"].back()["kind"] == "lincomb");

  // Tampering with a claim is detected after loading.
  json tampered = j;
  tampered["steps"][0]["claimed_field"] = "a1; 0; 0; a4";
  CHECK_FALSE(verify_script(script_from_json(tampered.dump())).ok);

  // Pushed scripts carry conjugated certificates with their automorphism.
  const RingAutomorphism phi = exp_lnd(make_standard_field(StandardField::kDelta, kB2).times(
      lift(GeneratorWord::x(2, kB2))));
  const MembershipScript pushed = pushforward_script(phi, plan_module_element(GeneratorWord(kB2)));
  const MembershipScript pushed_back = script_from_json(script_to_json(pushed));
  CHECK(verify_script(pushed_back).ok);
  CHECK(json::parse(script_to_json(pushed))["steps"][0]["certificate"]["kind"] == "CONJUGATE");
}

TEST_CASE("malformed scripts") {
  CHECK_THROWS_AS(script_from_json("{"), ParseError);
  CHECK_THROWS_AS(script_from_json("{}"), ParseError);
  CHECK_THROWS_AS(script_from_json(R"({"format": "dgdensity-script", "n": 3})"), ParseError);
  CHECK_THROWS_AS(
      script_from_json(R"({"format": "dgdensity-script", "n": 3, "steps": [{"id": 0, "kind": "twist", "claimed_field": "0;0;0;0"}]})"),
      ParseError);
  CHECK_THROWS_AS(script_from_json(R"({"format": "dgdensity-script", "n": 1, "steps": []})"), DomainError);
  CHECK_THROWS_AS(certificate_from_json(R"({"kind": "LND", "field": "a1; a2"})", kB2), ParseError);
}
