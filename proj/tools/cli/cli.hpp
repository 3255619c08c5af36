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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "sosgap/analysis.hpp"

namespace sosgap::cli {

enum class Subcommand { kVerify, kRecords, kDensity, kCheck };
enum class OutputFormat { kHuman, kJson, kCsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, bad values, unreadable inputs. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kVerify;
  std::uint64_t limit = 100'000'000;
  std::optional<Threshold> threshold;  // verify only; defaults to 2414/1000
  std::uint64_t segment_size = std::uint64_t{1} << 24;
  unsigned workers = 1;
  std::optional<std::filesystem::path> checkpoint_path;
  bool resume = false;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 28;
  OutputFormat output_format = OutputFormat::kHuman;
  std::optional<std::filesystem::path> output_path;
  Convention convention = Convention::kZeroAllowed;
  bool quiet = false;

  /// Throws UsageError naming the offending field.
  void validate() const;
  ScanOptions scan_options() const;
};

/// Accepts plain integers and the shorthand "1e8".
std::uint64_t parse_limit(std::string_view text);

/// Returns the parsed config, or an exit status when parsing already
/// produced the final outcome (help output, usage error).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_status = kExitOk;
};
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out,
                        std::ostream& err);

/// Executes the subcommand; the report goes to `out` (or output_path),
/// diagnostics and progress to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sosgap::cli
