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

// JSON forms of scripts, certificates and reports.
//
// Script:  {"format": "dgdensity-script", "n", "target", "target_field"?, "steps": [
//            {"id", "kind": "leaf"|"bracket"|"lincomb", "refs", "scalars",
//             "claimed_field", "label", "certificate"?}]}
// Certificate: {"kind", "field", "orders"?, "factor"?, "base"?, "conjugator"?}
// Report: see docs/report.schema.json.

#include <string>
#include <string_view>

#include "dgd/lie/completeness.hpp"
#include "dgd/lie/pipeline.hpp"
#include "dgd/lie/script.hpp"

namespace dgd {

std::string certificate_to_json(const CompletenessCertificate& c, int indent = -1);
/// Throws ParseError on malformed input.
CompletenessCertificate certificate_from_json(std::string_view text, const SurfaceParameters& params);

std::string script_to_json(const MembershipScript& script, int indent = 2);
/// Throws ParseError on malformed input. Nothing is verified here.
MembershipScript script_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& report, int indent = 2);

}  // namespace dgd
