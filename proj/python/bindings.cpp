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


// Python bindings. Values cross the boundary as text in the same syntax the
// command line accepts; reports and scripts as JSON strings.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgd/derivation.hpp"
#include "dgd/errors.hpp"
#include "dgd/genring.hpp"
#include "dgd/lie/pipeline.hpp"
#include "dgd/lie/planner.hpp"
#include "dgd/lie/script.hpp"
#include "dgd/lie/standard_fields.hpp"
#include "dgd/serialization.hpp"
#include "dgd/torus.hpp"
#include "dgd/version.hpp"

namespace py = pybind11;

namespace {

std::string normal_form_text(const std::string& poly, int n) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  return dgd::normal_form(dgd::Polynomial::parse(poly), params).to_string();
}

std::string decompose_text(const std::array<long, dgd::kVariableCount>& exponents, int n) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  dgd::ExponentVector e;
  for (int i = 0; i < dgd::kVariableCount; ++i) {
    const long v = exponents[static_cast<std::size_t>(i)];
    if (v < 0) throw dgd::DomainError("exponents must be non-negative");
    e[i] = static_cast<std::uint32_t>(v);
  }
  return dgd::decompose_invariant(e, params).word.to_string();
}

std::string x_normal_form_text(const std::string& word, int n) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  return dgd::x_normal_form(dgd::GeneratorWord::parse(word, params)).to_string();
}

std::string bracket_text(const std::string& x, const std::string& y, int n) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  return dgd::describe_field(dgd::bracket(dgd::parse_field(x, params), dgd::parse_field(y, params)));
}

std::string verify_json(int n, std::optional<std::vector<std::string>> stages, unsigned long long seed,
                        unsigned nmax, unsigned mmax, unsigned rmax, unsigned word_degree) {
  dgd::RunConfig config;
  config.n = n;
  config.seed = seed;
  config.n_max = nmax;
  config.m_max = mmax;
  config.r_max = rmax;
  config.word_degree = word_degree;
  if (stages) config.stages = *stages;
  config.validate();
  py::gil_scoped_release release;
  return dgd::report_to_json(dgd::density_pipeline(config));
}

std::string plan_json(const std::string& word, int n, const std::string& field, bool module) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  const dgd::GeneratorWord w = dgd::GeneratorWord::parse(word, params);
  if (module) return dgd::script_to_json(dgd::plan_module_element(w));
  const auto base = dgd::standard_field_from_name(field);
  if (!base) throw dgd::ParseError("unknown base field '" + field + "'");
  return dgd::script_to_json(dgd::plan_membership(w, *base));
}

py::dict check_script(const std::string& text) {
  const dgd::MembershipScript script = dgd::script_from_json(text);
  const dgd::ScriptVerdict v = dgd::verify_script(script);
  py::dict out;
  out["ok"] = v.ok;
  out["target"] = script.target;
  out["steps_checked"] = v.steps_checked;
  out["failing_step"] = v.failing_step ? py::cast(*v.failing_step) : py::none();
  out["reason"] = v.reason;
  out["difference"] = v.difference ? py::cast(v.difference->to_string()) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification engine for Danilov-Gizatullin surfaces";
  m.attr("__version__") = std::string(dgd::kVersion);

  const auto error = py::register_exception<dgd::Error>(m, "Error");
  py::register_exception<dgd::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<dgd::ParameterMismatch>(m, "ParameterMismatch", error.ptr());
  py::register_exception<dgd::DomainError>(m, "DomainError", error.ptr());
  py::register_exception<dgd::NilpotencyBoundExceeded>(m, "NilpotencyBoundExceeded", error.ptr());

  m.def("normal_form", &normal_form_text, py::arg("polynomial"), py::arg("n"),
        "Reduced representative of a polynomial modulo a1*a4 - a2^b*a3 - 1.");
  m.def("decompose", &decompose_text, py::arg("exponents"), py::arg("n"),
        "Invariant monomial a1^X a2^Y a3^Z a4^W as a word in y, z, x_k.");
  m.def("x_normal_form", &x_normal_form_text, py::arg("word"), py::arg("n"));
  m.def("bracket", &bracket_text, py::arg("x"), py::arg("y"), py::arg("n"));
  m.def("stage_names", &dgd::stage_names);
  m.def("verify", &verify_json, py::arg("n"), py::arg("stages") = py::none(), py::arg("seed") = 20231017ULL,
        py::arg("nmax") = 3u, py::arg("mmax") = 3u, py::arg("rmax") = 3u, py::arg("word_degree") = 4u,
        "Runs the pipeline and returns the report as JSON text.");
  m.def("plan", &plan_json, py::arg("word"), py::arg("n"), py::arg("field") = "eps", py::arg("module") = false,
        "Membership script for word*field (or word times the module generator) as JSON text.");
  m.def("check_script", &check_script, py::arg("script"));
}
