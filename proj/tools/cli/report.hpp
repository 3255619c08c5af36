// Copyright 2026 The sosgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>

#include "cli/cli.hpp"
#include "sosgap/analysis.hpp"

namespace sosgap::cli {

struct CheckReport {
  std::uint64_t limit = 0;
  Convention convention = Convention::kZeroAllowed;
  CrossCheckResult result;
};

// Ratios are rendered with 12 significant digits, integers exactly. The json
// forms are single documents; csv forms always start with a header row.
std::string emit_report(const VerificationReport& report, OutputFormat format);
std::string emit_report(std::span<const GapRecord> records, OutputFormat format);
std::string emit_report(std::span<const DensityPoint> points, OutputFormat format);
std::string emit_report(const CheckReport& report, OutputFormat format);

}  // namespace sosgap::cli
