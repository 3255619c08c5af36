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

#include "cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <span>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cli/report.hpp"

namespace sosgap::cli {
namespace {

constexpr std::string_view kDefaultThreshold = "2414/1000";

std::string_view name(Subcommand s) {
  switch (s) {
    case Subcommand::kVerify: return "verify";
    case Subcommand::kRecords: return "records";
    case Subcommand::kDensity: return "density";
    case Subcommand::kCheck: return "check";
  }
  return "?";
}

std::vector<std::uint64_t> density_points(std::uint64_t limit) {
  std::vector<std::uint64_t> points;
  for (std::uint64_t x = 10; x <= limit; x *= 10) {
    points.push_back(x);
    if (x > limit / 10) break;
  }
  if (points.empty() || points.back() != limit) points.push_back(limit);
  return points;
}

// Throttled progress lines on the diagnostic stream.
class Progress {
 public:
  Progress(std::ostream& err, bool quiet, std::uint64_t limit)
      : err_(err), quiet_(quiet), limit_(limit), started_(Clock::now()), last_(started_) {}

  void operator()(const Checkpoint& st) {
    if (quiet_) return;
    const auto now = Clock::now();
    if (now - last_ < std::chrono::seconds(2)) return;
    last_ = now;
    const double secs = std::chrono::duration<double>(now - started_).count();
    const double done = static_cast<double>(std::min(st.position, limit_));
    err_ << "[sosgap] scanned " << std::min(st.position, limit_) << " / " << limit_ << " ("
         << format_ratio(100.0 * done / static_cast<double>(limit_)) << "%)";
    if (st.current_max) {
      err_ << " max s=" << st.current_max->s << " gap=" << st.current_max->gap
           << " ratio=" << format_ratio(st.current_max->ratio_display);
    }
    if (secs > 0) err_ << " rate=" << format_ratio(done / secs) << "/s";
    err_ << '\n';
  }

 private:
  using Clock = std::chrono::steady_clock;
  std::ostream& err_;
  bool quiet_;
  std::uint64_t limit_;
  Clock::time_point started_;
  Clock::time_point last_;
};

}  // namespace

std::uint64_t parse_limit(std::string_view text) {
  static const std::regex kPattern(R"(([0-9]+)(?:[eE]([0-9]+))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw UsageError("--limit: expected a positive integer, got '" + std::string(text) + "'");
  }
  try {
    std::uint64_t v = std::stoull(m[1].str());
    const int exp = m[2].matched ? std::stoi(m[2].str()) : 0;
    for (int i = 0; i < exp; ++i) {
      if (v > std::numeric_limits<std::uint64_t>::max() / 10) throw std::out_of_range("limit");
      v *= 10;
    }
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("--limit: value '" + std::string(text) + "' is out of range");
  }
}

void RunConfig::validate() const {
  if (limit < 2) throw UsageError("--limit: must be at least 2");
  if (limit > kMaxS) throw UsageError("--limit: exceeds the overflow budget of 1e12");
  if (threshold && subcommand != Subcommand::kVerify) {
    throw UsageError("--threshold: only valid for verify");
  }
  if (resume && !checkpoint_path) throw UsageError("--resume: requires --checkpoint");
  if (checkpoint_path && subcommand != Subcommand::kVerify) {
    throw UsageError("--checkpoint: only valid for verify");
  }
  if (workers == 0) throw UsageError("--workers: must be positive");
  if (checkpoint_every == 0) throw UsageError("--checkpoint-every: must be positive");
  try {
    scan_options().sieve.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--segment-size: ") + e.what());
  }
}

ScanOptions RunConfig::scan_options() const {
  ScanOptions o;
  o.sieve.segment_size = segment_size;
  o.sieve.convention = convention;
  o.workers = workers;
  return o;
}

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of two squares in short intervals: gap records and threshold verification",
               "sosgap"};
  app.require_subcommand(0, 1);

  std::string limit = "100000000";
  std::string threshold;
  std::uint64_t segment_size = std::uint64_t{1} << 24;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::string checkpoint;
  bool resume = false;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 28;
  std::string format = "human";
  std::string output;
  std::string convention = "zero-allowed";
  bool quiet = false;

  app.add_option("--limit", limit, "Scan every n (or pair start s) up to this value")
      ->capture_default_str();
  app.add_option("--threshold", threshold, "Constant c as p/q or a decimal (verify only)");
  app.add_option("--segment-size", segment_size, "Numbers per sieve window (power of two)")
      ->capture_default_str();
  app.add_option("--workers", workers, "Worker threads")->capture_default_str();
  app.add_option("--checkpoint", checkpoint, "Checkpoint file (verify only)");
  app.add_flag("--resume", resume, "Resume from --checkpoint");
  app.add_option("--checkpoint-every", checkpoint_every, "Integers between checkpoint writes")
      ->capture_default_str();
  app.add_option("--format", format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--convention", convention, "zero-allowed or zero-disallowed")
      ->check(CLI::IsMember({"zero-allowed", "zero-disallowed"}))
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "Suppress progress on stderr");

  auto* verify = app.add_subcommand("verify", "Check every interval (n, n + c n^(1/4)) up to limit");
  auto* records = app.add_subcommand("records", "List record gaps with normalizations");
  auto* dens = app.add_subcommand("density", "Count sums of two squares at decades up to limit");
  auto* check = app.add_subcommand("check", "Cross-check the sieve against factorization");
  for (auto* sub : {verify, records, dens, check}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return {std::nullopt, kExitOk};
    }
    err << "sosgap: " << e.what() << '\n';
    return {std::nullopt, kExitUsage};
  }

  try {
    RunConfig c;
    if (records->parsed()) c.subcommand = Subcommand::kRecords;
    else if (dens->parsed()) c.subcommand = Subcommand::kDensity;
    else if (check->parsed()) c.subcommand = Subcommand::kCheck;
    c.limit = parse_limit(limit);
    if (!threshold.empty()) {
      try {
        c.threshold = Threshold::parse(threshold);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--threshold: ") + e.what());
      }
    } else if (c.subcommand == Subcommand::kVerify) {
      c.threshold = Threshold::parse(kDefaultThreshold);
    }
    c.segment_size = segment_size;
    c.workers = workers;
    if (!checkpoint.empty()) c.checkpoint_path = checkpoint;
    c.resume = resume;
    c.checkpoint_every = checkpoint_every;
    c.output_format = format == "json"  ? OutputFormat::kJson
                      : format == "csv" ? OutputFormat::kCsv
                                        : OutputFormat::kHuman;
    if (!output.empty()) c.output_path = output;
    c.convention = *parse_convention(convention);
    c.quiet = quiet;
    c.validate();
    return {c, kExitOk};
  } catch (const UsageError& e) {
    err << "sosgap: " << e.what() << '\n';
    return {std::nullopt, kExitUsage};
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string report;
  int status = kExitOk;
  try {
    config.validate();
    const ScanOptions options = config.scan_options();
    switch (config.subcommand) {
      case Subcommand::kVerify: {
        std::optional<Checkpoint> resume_from;
        if (config.resume) {
          try {
            resume_from = load_checkpoint(*config.checkpoint_path);
          } catch (const std::runtime_error& e) {
            throw UsageError(std::string("--checkpoint: ") + e.what());
          }
        }
        RunHooks hooks;
        hooks.checkpoint_path = config.checkpoint_path;
        hooks.checkpoint_every = config.checkpoint_every;
        Progress progress(err, config.quiet, config.limit);
        hooks.on_progress = [&](const Checkpoint& st) { progress(st); };
        const Threshold t = config.threshold.value_or(Threshold::parse(kDefaultThreshold));
        VerificationReport r;
        try {
          r = verify(config.limit, t, options, resume_from, hooks);
        } catch (const std::invalid_argument& e) {
          if (resume_from) throw UsageError(std::string("--checkpoint: ") + e.what());
          throw;
        }
        if (!config.quiet) {
          err << "[sosgap] verify finished in " << format_ratio(r.elapsed_seconds) << " s\n";
        }
        report = emit_report(r, config.output_format);
        status = r.passed.value_or(false) ? kExitOk : kExitFailed;
        break;
      }
      case Subcommand::kRecords: {
        const auto recs = gap_records(config.limit, options);
        report = emit_report(std::span<const GapRecord>(recs), config.output_format);
        break;
      }
      case Subcommand::kDensity: {
        const auto pts = density(density_points(config.limit), options);
        report = emit_report(std::span<const DensityPoint>(pts), config.output_format);
        break;
      }
      case Subcommand::kCheck: {
        CheckReport r{config.limit, config.convention, cross_check(config.limit, options)};
        report = emit_report(r, config.output_format);
        status = r.result.mismatches == 0 ? kExitOk : kExitFailed;
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "sosgap " << name(config.subcommand) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "sosgap " << name(config.subcommand) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "sosgap " << name(config.subcommand) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "sosgap " << name(config.subcommand) << ": " << e.what() << '\n';
    return kExitUsage;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "sosgap: --output: cannot open '" << config.output_path->string() << "'\n";
      return kExitUsage;
    }
    file << report;
  } else {
    out << report;
  }
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ParseOutcome parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_status;
  return run(*parsed.config, out, err);
}

}  // namespace sosgap::cli
