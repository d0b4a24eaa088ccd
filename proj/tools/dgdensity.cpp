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

// dgdensity: command-line driver for the verification pipeline and the
// individual calculators.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

dgd::ExponentVector parse_exponents(const std::string& text) {
  const auto parts = split_csv(text);
  if (parts.size() != dgd::kVariableCount) throw dgd::ParseError("expected four exponents X,Y,Z,W, got '" + text + "'");
  dgd::ExponentVector e;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[i].size() || v < 0) throw dgd::ParseError("exponent '" + parts[i] + "' is not a non-negative integer");
    e[static_cast<int>(i)] = static_cast<std::uint32_t>(v);
  }
  return e;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dgd::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_verify(dgd::RunConfig config, const std::string& stages_csv, std::string report_path, bool quiet) {
  config.stages = split_csv(stages_csv);
  config.validate();
  if (report_path.empty()) report_path = "dgdensity-report-n" + std::to_string(config.n) + ".json";
  const dgd::VerificationReport report = dgd::density_pipeline(config);
  write_file(report_path, dgd::report_to_json(report));
  if (!quiet) {
    for (const auto& s : report.stages) {
      std::cout << dgd::stage_status_name(s.status) << "  " << s.name << "  (" << s.checked << (s.checked == 1 ? " check, " : " checks, ") << std::fixed
                << std::setprecision(3) << s.elapsed_seconds << " s)  " << s.details << '\n';
      if (s.counterexample) std::cout << "      counterexample: " << *s.counterexample << '\n';
    }
    for (const auto& d : report.discrepancies) {
      std::cout << "note: " << d.topic << ": stated " << d.stated << ", recomputed " << d.recomputed << '\n';
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << " n=" << config.n << "; report written to " << report_path
              << '\n';
  }
  return report.passed() ? kExitPass : kExitFail;
}

int cmd_decompose(int n, const std::string& exponents) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  const dgd::ExponentVector e = parse_exponents(exponents);
  const dgd::Decomposition d = dgd::decompose_invariant(e, params);
  const bool ok = dgd::lift_exponents(d.word) == e;
  std::cout << d.word.to_string(" * ") << '\n' << "lift check: " << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_normal_form(int n, const std::string& word_text) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  const dgd::GeneratorWord word = dgd::GeneratorWord::parse(word_text, params);
  const dgd::XNormalForm nf = dgd::x_normal_form(word);
  const bool ok = dgd::equals_mod_ideal(dgd::lift(word), dgd::lift(nf.word(params)), params);
  std::cout << nf.to_string() << '\n' << "lift check: " << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_bracket(int n, const std::string& x_text, const std::string& y_text) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  const dgd::Derivation x = dgd::parse_field(x_text, params);
  const dgd::Derivation y = dgd::parse_field(y_text, params);
  std::cout << dgd::describe_field(dgd::bracket(x, y)) << '\n';
  return kExitPass;
}

int cmd_plan(int n, const std::string& word_text, const std::string& base, bool module, const std::string& output) {
  const auto params = dgd::SurfaceParameters::from_n(n);
  const dgd::GeneratorWord word = dgd::GeneratorWord::parse(word_text, params);
  dgd::MembershipScript script = [&] {
    if (module) return dgd::plan_module_element(word);
    const auto field = dgd::standard_field_from_name(base);
    if (!field) throw dgd::ParseError("unknown base field '" + base + "'");
    return dgd::plan_membership(word, *field);
  }();
  const std::string text = dgd::script_to_json(script);
  if (output.empty()) {
    std::cout << text << '\n';
  } else {
    write_file(output, text);
  }
  return kExitPass;
}

int cmd_check_script(const std::string& path, bool quiet) {
  const dgd::MembershipScript script = dgd::script_from_json(read_file(path));
  const dgd::ScriptVerdict v = dgd::verify_script(script);
  if (!quiet) {
    if (v.ok) {
      std::cout << "PASS " << script.target << " (" << v.steps_checked << " steps)\n";
    } else {
      std::cout << "FAIL " << script.target << " at step "
                << (v.failing_step ? std::to_string(*v.failing_step) : std::string("?")) << ": " << v.reason << '\n';
      if (v.difference) std::cout << "difference: " << v.difference->to_string() << '\n';
    }
  }
  return v.ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic verification of the algebraic density property for Danilov-Gizatullin surfaces"};
  app.set_version_flag("--version", dgd::kVersion);
  app.require_subcommand(1);

  dgd::RunConfig config;
  std::string stages_csv;
  std::string report_path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline for V_n");
  verify->add_option("--n", config.n, "Surface parameter n >= 2")->required();
  verify->add_option("--report", report_path, "Report path (default dgdensity-report-n<N>.json)");
  verify->add_option("--nmax", config.n_max, "Largest xb exponent N in the script families");
  verify->add_option("--mmax", config.m_max, "Largest x0 exponent M in the script families");
  verify->add_option("--rmax", config.r_max, "Largest extra y exponent R in the script families");
  verify->add_option("--word-degree", config.word_degree, "Largest degree of sampled module coefficient words");
  verify->add_option("--samples", config.module_samples, "Number of module coefficient words");
  verify->add_option("--pairs", config.bracket_pairs, "Random tangent pairs for the flow bracket check");
  verify->add_option("--max-candidates", config.max_candidates, "Spanning search limit");
  verify->add_option("--stages", stages_csv, "Comma-separated stage names (default: all)");
  verify->add_option("--seed", config.seed, "Seed for sampled words and fields");
  verify->add_option("--jobs", config.jobs, "Stages run concurrently");
  verify->add_flag("--quiet", quiet, "Print nothing; rely on the exit code and report");

  int n = 3;
  std::string exponents;
  auto* decompose = app.add_subcommand("decompose", "Write an invariant monomial in the generators y, z, x_k");
  decompose->add_option("--n", n, "Surface parameter n >= 2")->required();
  decompose->add_option("--exponents", exponents, "Exponents X,Y,Z,W of a1^X a2^Y a3^Z a4^W")->required();

  std::string word;
  auto* normal = app.add_subcommand("normal-form", "x-normal form x0^M*x_h*xb^N of an x-word");
  normal->add_option("--n", n, "Surface parameter n >= 2")->required();
  normal->add_option("--word", word, "Word in x0..xb, e.g. x0*x1^2*x2")->required();

  std::string x_text;
  std::string y_text;
  auto* br = app.add_subcommand("bracket", "Lie bracket of two fields");
  br->add_option("--n", n, "Surface parameter n >= 2")->required();
  br->add_option("--x", x_text, "Field: eps, delta, deltaprime, E or 'c1; c2; c3; c4'")->required();
  br->add_option("--y", y_text, "Second field")->required();

  std::string base = "eps";
  bool module = false;
  std::string output;
  auto* plan = app.add_subcommand("plan", "Emit a membership script as JSON");
  plan->add_option("--n", n, "Surface parameter n >= 2")->required();
  plan->add_option("--word", word, "Coefficient word, e.g. y^2*x0*x2")->required();
  plan->add_option("--field", base, "delta or eps");
  plan->add_flag("--module", module, "Target word * (x0*x1*...*xb*y^b) * eps");
  plan->add_option("--output", output, "Write the script here instead of stdout");

  std::string script_path;
  auto* check = app.add_subcommand("check-script", "Verify a membership script file");
  check->add_option("script", script_path, "Script JSON file")->required();
  check->add_flag("--quiet", quiet, "Print nothing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(config, stages_csv, report_path, quiet);
    if (*decompose) return cmd_decompose(n, exponents);
    if (*normal) return cmd_normal_form(n, word);
    if (*br) return cmd_bracket(n, x_text, y_text);
    if (*plan) return cmd_plan(n, word, base, module, output);
    if (*check) return cmd_check_script(script_path, quiet);
  } catch (const dgd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInvalid;
}
