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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "sosgap/representability.hpp"

namespace sosgap {

struct SieveOptions {
  /// Numbers per window. Must be a power of two, at least 64.
  std::uint64_t segment_size = std::uint64_t{1} << 24;
  /// Upper bound on a single window's bitmap, in bytes.
  std::uint64_t memory_cap_bytes = std::uint64_t{1} << 30;
  Convention convention = Convention::kZeroAllowed;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Bitmap over the half-open window [lo, hi); bit i is set when lo + i is a
/// sum of two squares.
class Segment {
 public:
  Segment() = default;
  Segment(std::uint64_t lo, std::uint64_t hi);

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  std::uint64_t size() const { return hi_ - lo_; }

  /// False for values outside the window.
  bool contains(std::uint64_t n) const {
    if (n < lo_ || n >= hi_) return false;
    const std::uint64_t i = n - lo_;
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  void set_offset(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  /// Number of set values in [from, to), clipped to the window.
  std::uint64_t count(std::uint64_t from, std::uint64_t to) const;
  std::uint64_t count() const { return count(lo_, hi_); }

  std::optional<std::uint64_t> first() const;
  std::optional<std::uint64_t> last() const;

  /// Calls f(value) for every set value, ascending. Stops early when f
  /// returns false.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        if (!f(lo_ + (static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(b))) {
          return;
        }
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Marks x^2 + y^2 for x <= y inside [lo, hi).
/// Throws std::invalid_argument when hi <= lo, hi > 2^63 - 1, or the bitmap
/// would exceed options.memory_cap_bytes.
Segment mark_segment(std::uint64_t lo, std::uint64_t hi,
                     const SieveOptions& options = {});

/// Two consecutive representable integers.
struct GapPair {
  std::uint64_t s = 0;
  std::uint64_t s_next = 0;

  std::uint64_t gap() const { return s_next - s; }

  friend bool operator==(const GapPair&, const GapPair&) = default;
};

/// Pull-based stream of consecutive representable pairs (s, s_next) with
/// max(start, 1) <= s <= limit, in increasing s. The pair straddling limit
/// is emitted; the stream reads into later windows to find its s_next.
class GapStream {
 public:
  GapStream(std::uint64_t start, std::uint64_t limit,
            const SieveOptions& options = {});

  std::optional<GapPair> next();

 private:
  void fill();

  std::uint64_t start_;
  std::uint64_t limit_;
  SieveOptions options_;
  std::uint64_t position_;
  std::optional<std::uint64_t> last_;
  std::deque<GapPair> pending_;
  bool done_ = false;
};

/// Drains a GapStream into a vector.
std::vector<GapPair> gap_stream(std::uint64_t start, std::uint64_t limit,
                                const SieveOptions& options = {});

}  // namespace sosgap
