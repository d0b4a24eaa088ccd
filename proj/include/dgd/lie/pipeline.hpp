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

// The full verification run for one surface: stage table, configuration
// and report.

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgd/polynomial.hpp"

namespace dgd {

struct RunConfig {
  int n = 3;
  unsigned n_max = 3;
  unsigned m_max = 3;
  unsigned r_max = 3;
  unsigned word_degree = 4;
  /// Random coefficient words for the module stage.
  unsigned module_samples = 50;
  /// Random tangent pairs for the bracket-preservation check of the flow.
  unsigned bracket_pairs = 20;
  std::uint64_t seed = 20231017;
  /// Stage names to run; empty runs every stage.
  std::vector<std::string> stages;
  std::size_t max_candidates = 100;
  unsigned jobs = 1;

  /// Throws DomainError on n < 2, zero limits or unknown stage names.
  void validate() const;
  bool selects(std::string_view stage) const;
};

enum class StageStatus { kPass, kFail };
std::string_view stage_status_name(StageStatus status);

/// A place where a stated formula and the recomputed one disagree.
struct Discrepancy {
  std::string topic;
  std::string stated;
  std::string recomputed;
  std::string resolution;
};

struct StageResult {
  std::size_t index = 0;
  std::string name;
  StageStatus status = StageStatus::kPass;
  std::size_t checked = 0;
  std::string details;
  std::optional<std::string> counterexample;
  double elapsed_seconds = 0;
  std::vector<Discrepancy> discrepancies;
};

struct VerificationReport {
  std::string version;
  std::string timestamp;
  RunConfig config;
  std::vector<StageResult> stages;
  std::vector<std::string> assumptions;
  std::vector<Discrepancy> discrepancies;

  bool passed() const;
};

/// fields, functions, commutation, epsilon, delta, xe, ey, prop_d, module,
/// flow, spanning.
const std::vector<std::string>& stage_names();

/// Collects stage results from any thread; results() is ordered by stage index.
class ReportAccumulator {
 public:
  void add(StageResult result);
  std::vector<StageResult> results() const;

 private:
  mutable std::mutex mutex_;
  std::vector<StageResult> results_;
};

StageResult run_stage(std::string_view name, const RunConfig& config);

/// Runs the selected stages (config.jobs at a time) and assembles the report.
/// Stage failures are recorded, never thrown.
VerificationReport density_pipeline(const RunConfig& config);

std::vector<std::string> report_assumptions();

}  // namespace dgd
