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

#include "sosgap/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "sosgap/int_math.hpp"
#include "sosgap/parallel.hpp"

namespace sosgap {
namespace {

void check_budget(const GapPair& pair) {
  if (pair.s == 0 || pair.s_next <= pair.s) {
    throw std::out_of_range("gap pair must satisfy 0 < s < s_next");
  }
  if (pair.gap() > kMaxGap || pair.s > kMaxS) {
    throw std::out_of_range("gap pair (s=" + std::to_string(pair.s) +
                            ", gap=" + std::to_string(pair.gap()) +
                            ") exceeds the overflow budget (gap <= 1e5, s <= 1e12)");
  }
}

void check_limit(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("limit must be at least 2");
  if (limit > kMaxS) throw std::out_of_range("limit exceeds 1e12 (overflow budget)");
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("threshold: invalid " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return v;
}

// Everything a window contributes, computed without knowledge of earlier
// windows. Pairs inside the window have s <= limit; the pair bridging from
// the previous window is formed during the fold.
struct WindowSummary {
  std::uint64_t hi = 0;
  std::optional<std::uint64_t> first;
  std::optional<std::uint64_t> last;
  std::uint64_t pairs = 0;
  std::optional<GapPair> best;
  std::optional<GapPair> first_offender;
  std::vector<GapRecord> records;  // strictly increasing gaps within the window
};

WindowSummary summarize(std::uint64_t lo, std::uint64_t hi, std::uint64_t limit,
                        const std::optional<Threshold>& threshold,
                        const SieveOptions& sieve) {
  const Segment seg = mark_segment(lo, hi, sieve);
  WindowSummary sum;
  sum.hi = hi;
  seg.for_each([&](std::uint64_t v) {
    if (v == 0) return true;
    if (!sum.first) sum.first = v;
    if (sum.last) {
      const GapPair pair{*sum.last, v};
      ++sum.pairs;
      if (!sum.best || ratio_less(*sum.best, pair)) sum.best = pair;
      if (threshold && !sum.first_offender && exceeds_threshold(pair, *threshold)) {
        sum.first_offender = pair;
      }
      if (sum.records.empty() || pair.gap() > sum.records.back().gap) {
        sum.records.push_back({pair.gap(), pair.s});
      }
    }
    sum.last = v;
    return v <= limit;
  });
  return sum;
}

void take_pair(Checkpoint& st, const GapPair& pair, bool check_threshold) {
  ++st.pairs_scanned;
  if (!st.current_max || ratio_less(st.current_max->pair(), pair)) {
    st.current_max = RatioRecord::from(pair);
  }
  if (check_threshold && st.threshold && !st.first_offender &&
      exceeds_threshold(pair, *st.threshold)) {
    st.first_offender = pair;
  }
  if (st.gap_records.empty() || pair.gap() > st.gap_records.back().gap) {
    st.gap_records.push_back({pair.gap(), pair.s});
  }
}

void fold(Checkpoint& st, const WindowSummary& sum) {
  st.position = sum.hi;
  if (!sum.first) return;
  if (st.last_representable != 0) take_pair(st, {st.last_representable, *sum.first}, true);
  st.pairs_scanned += sum.pairs;
  if (sum.best && (!st.current_max || ratio_less(st.current_max->pair(), *sum.best))) {
    st.current_max = RatioRecord::from(*sum.best);
  }
  if (!st.first_offender && sum.first_offender) st.first_offender = sum.first_offender;
  for (const GapRecord& r : sum.records) {
    if (st.gap_records.empty() || r.gap > st.gap_records.back().gap) {
      st.gap_records.push_back(r);
    }
  }
  st.last_representable = *sum.last;
}

}  // namespace

Threshold::Threshold(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) {
    throw std::invalid_argument("threshold: numerator and denominator must be positive");
  }
  const std::uint64_t g = gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  if (q_ > kMaxDenominator) {
    throw std::invalid_argument("threshold: reduced denominator " + std::to_string(q_) +
                                " exceeds 1000");
  }
  if (p_ > kMaxThresholdRatio * q_) {
    throw std::invalid_argument("threshold: value " + std::to_string(p_) + "/" +
                                std::to_string(q_) + " exceeds 8");
  }
}

Threshold Threshold::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_u64(text.substr(0, slash), "numerator"),
            parse_u64(text.substr(slash + 1), "denominator")};
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return {parse_u64(text, "value"), 1};
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 3) {
    throw std::invalid_argument("threshold: decimal '" + std::string(text) +
                                "' must have 1 to 3 fractional digits");
  }
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, "integer part");
  if (w > kMaxThresholdRatio) {
    throw std::invalid_argument("threshold: value '" + std::string(text) + "' exceeds 8");
  }
  return {w * scale + parse_u64(frac, "fractional part"), scale};
}

std::string Threshold::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

double display_ratio(std::uint64_t gap, std::uint64_t s) {
  const long double root = std::sqrt(std::sqrt(static_cast<long double>(s)));
  return static_cast<double>(static_cast<long double>(gap) / root);
}

std::string format_ratio(double ratio) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", ratio);
  return buf;
}

bool ratio_less(const GapPair& a, const GapPair& b) {
  check_budget(a);
  check_budget(b);
  return pow4(a.gap()) * b.s < pow4(b.gap()) * a.s;
}

bool exceeds_threshold(const GapPair& pair, const Threshold& t) {
  check_budget(pair);
  if (t.q() > kMaxDenominator) throw std::out_of_range("threshold denominator exceeds 1000");
  return pow4(pair.gap()) * pow4(t.q()) >= pow4(t.p()) * pair.s;
}

Scanner::Scanner(std::uint64_t limit, std::optional<Threshold> threshold,
                 const ScanOptions& options)
    : options_(options) {
  check_limit(limit);
  options_.sieve.validate();
  if (options_.workers == 0) throw std::invalid_argument("workers must be positive");
  state_.limit = limit;
  state_.threshold = threshold;
  state_.convention = options.sieve.convention;
}

Scanner::Scanner(Checkpoint state, const ScanOptions& options)
    : state_(std::move(state)), options_(options) {}

Scanner Scanner::resume(const Checkpoint& checkpoint, std::uint64_t limit,
                        std::optional<Threshold> threshold, const ScanOptions& options) {
  Scanner fresh(limit, threshold, options);
  if (checkpoint.version != Checkpoint::kVersion) {
    throw std::invalid_argument("checkpoint: unsupported version " +
                                std::to_string(checkpoint.version));
  }
  if (checkpoint.limit != limit) {
    throw std::invalid_argument("checkpoint: limit " + std::to_string(checkpoint.limit) +
                                " does not match requested limit " + std::to_string(limit));
  }
  if (checkpoint.threshold != threshold) {
    throw std::invalid_argument("checkpoint: threshold does not match the requested threshold");
  }
  if (checkpoint.convention != options.sieve.convention) {
    throw std::invalid_argument("checkpoint: convention does not match");
  }
  if (checkpoint.last_representable != 0 &&
      checkpoint.last_representable >= checkpoint.position) {
    throw std::invalid_argument("checkpoint: last_representable must be below position");
  }
  return Scanner(checkpoint, fresh.options_);
}

bool Scanner::step(std::uint64_t budget) {
  if (finished()) return true;
  const std::uint64_t seg = options_.sieve.segment_size;
  const std::uint64_t start = state_.position;
  // Past limit + 1 only one window at a time is needed to find s_next.
  std::uint64_t span = seg;
  if (start <= state_.limit) span = std::max(std::min(budget, state_.limit + 1 - start), seg);
  const std::size_t windows = static_cast<std::size_t>((span + seg - 1) / seg);

  const std::uint64_t limit = state_.limit;
  const std::optional<Threshold> threshold = state_.threshold;
  const SieveOptions sieve = options_.sieve;
  ordered_map_reduce(
      windows, options_.workers,
      [&](std::size_t i) {
        const std::uint64_t lo = start + i * seg;
        return summarize(lo, lo + seg, limit, threshold, sieve);
      },
      [&](WindowSummary&& sum) {
        fold(state_, sum);
        return !finished();
      });
  return finished();
}

void Scanner::run_to_end() {
  while (!step(std::uint64_t{1} << 30)) {
  }
}

VerificationReport Scanner::report() const {
  VerificationReport r;
  r.limit = state_.limit;
  r.convention = state_.convention;
  if (state_.current_max) r.max_record = *state_.current_max;
  r.threshold = state_.threshold;
  if (state_.threshold && finished()) r.passed = !state_.first_offender.has_value();
  r.first_offender = state_.first_offender;
  r.pairs_scanned = state_.pairs_scanned;
  return r;
}

VerificationReport verify(std::uint64_t limit, const Threshold& threshold,
                          const ScanOptions& options,
                          const std::optional<Checkpoint>& resume_from, const RunHooks& hooks) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  Scanner scanner = resume_from ? Scanner::resume(*resume_from, limit, threshold, options)
                                : Scanner(limit, threshold, options);

  const std::uint64_t per_step =
      options.sieve.segment_size * std::max(1U, options.workers) * 4;
  std::uint64_t last_saved_at = scanner.state().position;
  auto last_saved_time = Clock::now();
  while (!scanner.finished()) {
    std::uint64_t budget = per_step;
    if (hooks.checkpoint_path) {
      const std::uint64_t due = last_saved_at + hooks.checkpoint_every;
      const std::uint64_t pos = scanner.state().position;
      budget = std::min(budget, due > pos ? due - pos : 1);
    }
    scanner.step(budget);
    if (hooks.on_progress) hooks.on_progress(scanner.state());
    if (hooks.checkpoint_path && !scanner.finished()) {
      const std::uint64_t pos = scanner.state().position;
      if (pos - last_saved_at >= hooks.checkpoint_every ||
          Clock::now() - last_saved_time >= hooks.checkpoint_interval) {
        save_checkpoint(*hooks.checkpoint_path, scanner.state());
        last_saved_at = pos;
        last_saved_time = Clock::now();
      }
    }
  }
  VerificationReport report = scanner.report();
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return report;
}

RatioRecord critical_constant(std::uint64_t limit, const ScanOptions& options) {
  Scanner scanner(limit, std::nullopt, options);
  scanner.run_to_end();
  return *scanner.state().current_max;
}

std::vector<GapRecord> gap_records(std::uint64_t limit, const ScanOptions& options) {
  Scanner scanner(limit, std::nullopt, options);
  scanner.run_to_end();
  return scanner.state().gap_records;
}

NormalizedGapStats normalize_gap(std::uint64_t s, std::uint64_t gap) {
  if (s < kMinNormalizedS) {
    throw std::invalid_argument("normalized gap stats need s >= 16, got " + std::to_string(s));
  }
  const double ln = std::log(static_cast<double>(s));
  const double g = static_cast<double>(gap);
  return {s, gap, g / (ln / std::sqrt(std::log(ln))), g / (ln * ln)};
}

std::vector<NormalizedGapStats> normalized_gaps(std::uint64_t limit, const ScanOptions& options) {
  if (limit < kMinNormalizedS) throw std::invalid_argument("limit must be at least 16");
  std::vector<NormalizedGapStats> out;
  for (const GapRecord& r : gap_records(limit, options)) {
    if (r.first_s >= kMinNormalizedS) out.push_back(normalize_gap(r.first_s, r.gap));
  }
  return out;
}

std::vector<DensityPoint> density(std::span<const std::uint64_t> points,
                                  const ScanOptions& options) {
  options.sieve.validate();
  std::vector<std::uint64_t> sorted(points.begin(), points.end());
  for (std::uint64_t x : sorted) {
    if (x < 2) throw std::invalid_argument("density points must be at least 2");
    if (x >= kMaxFactorInput) throw std::out_of_range("density point exceeds 2^63 - 2");
  }
  std::vector<DensityPoint> out;
  if (sorted.empty()) return out;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const std::uint64_t seg = options.sieve.segment_size;
  const std::uint64_t end = sorted.back() + 1;
  const std::size_t windows = static_cast<std::size_t>((end + seg - 1) / seg);

  struct WindowCounts {
    std::uint64_t total = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prefix;  // (x, count in [lo, x])
  };
  std::vector<std::uint64_t> counts;
  counts.reserve(sorted.size());
  std::uint64_t running = 0;
  ordered_map_reduce(
      windows, std::max(1U, options.workers),
      [&](std::size_t i) {
        const std::uint64_t lo = i * seg;
        const std::uint64_t hi = std::min(lo + seg, end);
        const Segment s = mark_segment(lo, hi, options.sieve);
        const std::uint64_t from = std::max<std::uint64_t>(lo, 1);
        WindowCounts wc;
        wc.total = s.count(from, hi);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
        for (; it != sorted.end() && *it < hi; ++it) {
          wc.prefix.emplace_back(*it, s.count(from, *it + 1));
        }
        return wc;
      },
      [&](WindowCounts&& wc) {
        for (const auto& [x, c] : wc.prefix) counts.push_back(running + c);
        running += wc.total;
        return true;
      });

  out.reserve(points.size());
  for (std::uint64_t x : points) {
    const auto idx = std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    const std::uint64_t c = counts[static_cast<std::size_t>(idx)];
    const double xd = static_cast<double>(x);
    out.push_back({x, c, static_cast<double>(c) * std::sqrt(std::log(xd)) / xd});
  }
  return out;
}

CrossCheckResult cross_check(std::uint64_t limit, const ScanOptions& options) {
  options.sieve.validate();
  if (limit < 1) throw std::invalid_argument("limit must be positive");
  if (limit >= kMaxFactorInput) throw std::out_of_range("limit exceeds 2^63 - 2");
  const std::uint64_t seg = options.sieve.segment_size;
  const std::uint64_t end = limit + 1;
  const std::size_t windows = static_cast<std::size_t>((end + seg - 1) / seg);
  CrossCheckResult result;
  ordered_map_reduce(
      windows, std::max(1U, options.workers),
      [&](std::size_t i) {
        const std::uint64_t lo = i * seg;
        const std::uint64_t hi = std::min(lo + seg, end);
        const Segment s = mark_segment(lo, hi, options.sieve);
        CrossCheckResult local;
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 1); n < hi; ++n) {
          ++local.checked;
          if (s.contains(n) != is_sum_of_two_squares(n, options.sieve.convention)) {
            ++local.mismatches;
            if (!local.first_mismatch) local.first_mismatch = n;
          }
        }
        return local;
      },
      [&](CrossCheckResult&& local) {
        result.checked += local.checked;
        result.mismatches += local.mismatches;
        if (!result.first_mismatch) result.first_mismatch = local.first_mismatch;
        return true;
      });
  return result;
}

}  // namespace sosgap
