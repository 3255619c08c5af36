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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "sosgap/sieve.hpp"

namespace sosgap {

// Overflow budget for exact fourth-power cross-multiplication. Within it
// every product stays below 2^127:
//   gap^4 * s   <= 1e20 * 1e12
//   gap^4 * q^4 <= 1e20 * 1e12
//   p^4 * s     <= 8^4 * 1e12 * 1e12
inline constexpr std::uint64_t kMaxGap = 100'000;
inline constexpr std::uint64_t kMaxS = 1'000'000'000'000;
inline constexpr std::uint64_t kMaxDenominator = 1'000;
inline constexpr std::uint64_t kMaxThresholdRatio = 8;

/// A rational constant c = p / q, stored reduced.
class Threshold {
 public:
  /// Throws std::invalid_argument unless 0 < p/q <= 8 and the reduced
  /// denominator is at most 1000.
  Threshold(std::uint64_t p, std::uint64_t q);

  /// Accepts "p/q" or a decimal with at most three fractional digits.
  static Threshold parse(std::string_view text);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }
  std::string to_string() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

/// gap / s^(1/4), for display only; never used to order records.
double display_ratio(std::uint64_t gap, std::uint64_t s);

/// Renders a ratio with 12 significant digits.
std::string format_ratio(double ratio);

struct RatioRecord {
  std::uint64_t s = 0;
  std::uint64_t gap = 0;
  double ratio_display = 0.0;

  static RatioRecord from(const GapPair& pair) {
    return {pair.s, pair.gap(), display_ratio(pair.gap(), pair.s)};
  }
  GapPair pair() const { return {s, s + gap}; }
};

/// gap_a / s_a^(1/4) < gap_b / s_b^(1/4), decided as
/// gap_a^4 * s_b < gap_b^4 * s_a in 128-bit arithmetic.
/// Throws std::out_of_range outside the overflow budget.
bool ratio_less(const GapPair& a, const GapPair& b);

/// gap / s^(1/4) >= p / q, decided as gap^4 * q^4 >= p^4 * s. Equality counts
/// as exceeding because the open interval (s, s + c s^(1/4)) then misses
/// s_next. Throws std::out_of_range outside the overflow budget.
bool exceeds_threshold(const GapPair& pair, const Threshold& t);

struct GapRecord {
  std::uint64_t gap = 0;
  std::uint64_t first_s = 0;

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

struct ScanOptions {
  SieveOptions sieve;
  unsigned workers = 1;
};

/// Resumable scanner state. Also the on-disk checkpoint document.
struct Checkpoint {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::uint64_t limit = 0;
  Convention convention = Convention::kZeroAllowed;
  std::optional<Threshold> threshold;
  std::uint64_t position = 0;            // next unscanned value
  std::uint64_t last_representable = 0;  // 0 until the first s >= 1 is seen
  std::optional<RatioRecord> current_max;
  std::vector<GapRecord> gap_records;
  std::uint64_t pairs_scanned = 0;
  std::optional<GapPair> first_offender;

  /// True once a representable value beyond limit has been seen.
  bool finished() const { return last_representable > limit; }
};

std::string to_text(const Checkpoint& checkpoint);
/// Throws std::runtime_error on malformed input, unknown or duplicate keys,
/// missing keys, or an unsupported version.
Checkpoint parse_checkpoint(std::string_view text);
/// Writes to a sibling temporary file then renames over `path`.
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

struct VerificationReport {
  std::uint64_t limit = 0;
  Convention convention = Convention::kZeroAllowed;
  RatioRecord max_record;
  std::optional<Threshold> threshold;
  std::optional<bool> passed;
  std::optional<GapPair> first_offender;
  std::uint64_t pairs_scanned = 0;
  double elapsed_seconds = 0.0;
};

/// Walks consecutive representable pairs with s <= limit window by window,
/// folding per-window summaries in ascending order.
class Scanner {
 public:
  /// Throws std::invalid_argument / std::out_of_range for limit outside
  /// [2, 1e12] or invalid options.
  Scanner(std::uint64_t limit, std::optional<Threshold> threshold,
          const ScanOptions& options);

  /// Continues from a checkpoint. Throws std::invalid_argument when its
  /// version, limit, threshold or convention disagree with the arguments.
  static Scanner resume(const Checkpoint& checkpoint, std::uint64_t limit,
                        std::optional<Threshold> threshold,
                        const ScanOptions& options);

  /// Scans at least one more window and roughly `budget` integers. Returns
  /// finished().
  bool step(std::uint64_t budget);
  void run_to_end();

  bool finished() const { return state_.finished(); }
  const Checkpoint& state() const { return state_; }
  VerificationReport report() const;

 private:
  Scanner(Checkpoint state, const ScanOptions& options);

  Checkpoint state_;
  ScanOptions options_;
};

struct RunHooks {
  std::optional<std::filesystem::path> checkpoint_path;
  std::uint64_t checkpoint_every = std::uint64_t{1} << 28;
  std::chrono::milliseconds checkpoint_interval{30'000};
  /// Called after every step with the current state; diagnostic use only.
  std::function<void(const Checkpoint&)> on_progress;
};

/// Threshold scan over all pairs with s <= limit. Never stops at the first
/// failure: max_record always covers the whole range.
VerificationReport verify(std::uint64_t limit, const Threshold& threshold,
                          const ScanOptions& options = {},
                          const std::optional<Checkpoint>& resume_from = std::nullopt,
                          const RunHooks& hooks = {});

/// Pair with the largest gap / s^(1/4) over s <= limit; smaller s wins ties.
RatioRecord critical_constant(std::uint64_t limit, const ScanOptions& options = {});

/// Record gaps (strictly larger than every earlier gap) with first s.
std::vector<GapRecord> gap_records(std::uint64_t limit, const ScanOptions& options = {});

struct NormalizedGapStats {
  std::uint64_t s = 0;
  std::uint64_t gap = 0;
  double erdos_norm = 0.0;   // gap / (ln s / sqrt(ln ln s))
  double cramer_norm = 0.0;  // gap / (ln s)^2
};

inline constexpr std::uint64_t kMinNormalizedS = 16;

/// Throws std::invalid_argument for s < 16.
NormalizedGapStats normalize_gap(std::uint64_t s, std::uint64_t gap);

/// Normalizations for the record gaps with s >= 16.
std::vector<NormalizedGapStats> normalized_gaps(std::uint64_t limit,
                                                const ScanOptions& options = {});

struct DensityPoint {
  std::uint64_t x = 0;
  std::uint64_t count = 0;   // representable n with 1 <= n <= x
  double normalized = 0.0;   // count * sqrt(ln x) / x
};

/// Results follow the order of `points`. Throws std::invalid_argument for
/// any x < 2.
std::vector<DensityPoint> density(std::span<const std::uint64_t> points,
                                  const ScanOptions& options = {});

struct CrossCheckResult {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::uint64_t> first_mismatch;
};

/// Compares sieve membership with the factorization oracle for every
/// 1 <= n <= limit.
CrossCheckResult cross_check(std::uint64_t limit, const ScanOptions& options = {});

}  // namespace sosgap
