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

#include "sosgap/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sosgap/int_math.hpp"

namespace sosgap {

void SieveOptions::validate() const {
  if (segment_size < 64 || !std::has_single_bit(segment_size)) {
    throw std::invalid_argument("segment_size must be a power of two >= 64, got " +
                                std::to_string(segment_size));
  }
  if (memory_cap_bytes == 0) {
    throw std::invalid_argument("memory_cap_bytes must be positive");
  }
  if ((segment_size + 7) / 8 > memory_cap_bytes) {
    throw std::invalid_argument("segment_size " + std::to_string(segment_size) +
                                " exceeds memory_cap_bytes " +
                                std::to_string(memory_cap_bytes));
  }
}

Segment::Segment(std::uint64_t lo, std::uint64_t hi)
    : lo_(lo), hi_(hi), words_((hi - lo + 63) / 64, 0) {}

std::uint64_t Segment::count(std::uint64_t from, std::uint64_t to) const {
  from = std::max(from, lo_);
  to = std::min(to, hi_);
  if (from >= to) return 0;
  const std::uint64_t a = from - lo_;
  const std::uint64_t b = to - lo_;
  const std::uint64_t wa = a >> 6;
  const std::uint64_t wb = b >> 6;
  auto mask_from = [](std::uint64_t bit) { return ~std::uint64_t{0} << bit; };
  if (wa == wb) {
    const std::uint64_t m = mask_from(a & 63) & ~mask_from(b & 63);
    return static_cast<std::uint64_t>(std::popcount(words_[wa] & m));
  }
  std::uint64_t total = static_cast<std::uint64_t>(std::popcount(words_[wa] & mask_from(a & 63)));
  for (std::uint64_t w = wa + 1; w < wb; ++w) {
    total += static_cast<std::uint64_t>(std::popcount(words_[w]));
  }
  if ((b & 63) != 0) {
    total += static_cast<std::uint64_t>(std::popcount(words_[wb] & ~mask_from(b & 63)));
  }
  return total;
}

std::optional<std::uint64_t> Segment::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return lo_ + (static_cast<std::uint64_t>(w) << 6) +
             static_cast<std::uint64_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> Segment::last() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return lo_ + (static_cast<std::uint64_t>(w) << 6) + 63 -
             static_cast<std::uint64_t>(std::countl_zero(words_[w]));
    }
  }
  return std::nullopt;
}

Segment mark_segment(std::uint64_t lo, std::uint64_t hi, const SieveOptions& options) {
  if (hi <= lo) {
    throw std::invalid_argument("mark_segment: hi (" + std::to_string(hi) +
                                ") must exceed lo (" + std::to_string(lo) + ")");
  }
  if (hi > kMaxFactorInput) {
    throw std::invalid_argument("mark_segment: hi exceeds 2^63 - 1");
  }
  const std::uint64_t bytes = (hi - lo + 63) / 64 * 8;
  if (bytes > options.memory_cap_bytes) {
    throw std::invalid_argument("mark_segment: window of " + std::to_string(hi - lo) +
                                " numbers exceeds memory cap of " +
                                std::to_string(options.memory_cap_bytes) + " bytes");
  }

  Segment seg(lo, hi);
  const std::uint64_t x0 = options.convention == Convention::kZeroAllowed ? 0 : 1;
  // Least y with x^2 + y^2 >= lo; non-increasing in x, so it only walks down.
  std::uint64_t y_lo = ceil_sqrt(lo);
  // y >= x, so x^2 + y^2 >= 2x^2 bounds the outer loop.
  for (std::uint64_t x = x0; 2 * x * x < hi; ++x) {
    const std::uint64_t xx = x * x;
    while (y_lo > x && xx + (y_lo - 1) * (y_lo - 1) >= lo) --y_lo;
    std::uint64_t y = std::max(x, y_lo);
    std::uint64_t v = xx + y * y;
    // (y + 1)^2 - y^2 = 2y + 1
    while (v < hi) {
      seg.set_offset(v - lo);
      v += 2 * y + 1;
      ++y;
    }
  }
  return seg;
}

GapStream::GapStream(std::uint64_t start, std::uint64_t limit, const SieveOptions& options)
    : start_(std::max<std::uint64_t>(start, 1)),
      limit_(limit),
      options_(options),
      position_(start) {
  options_.validate();
  if (start >= limit) {
    throw std::invalid_argument("gap_stream: start must be below limit");
  }
}

void GapStream::fill() {
  if (position_ >= kMaxFactorInput) {
    done_ = true;
    return;
  }
  const std::uint64_t hi = std::min(position_ + options_.segment_size, kMaxFactorInput);
  const Segment seg = mark_segment(position_, hi, options_);
  position_ = hi;
  seg.for_each([&](std::uint64_t v) {
    if (v == 0) return true;
    if (last_ && *last_ >= start_) pending_.push_back({*last_, v});
    last_ = v;
    if (v > limit_) {
      done_ = true;
      return false;
    }
    return true;
  });
}

std::optional<GapPair> GapStream::next() {
  while (pending_.empty() && !done_) fill();
  if (pending_.empty()) return std::nullopt;
  GapPair p = pending_.front();
  pending_.pop_front();
  return p;
}

std::vector<GapPair> gap_stream(std::uint64_t start, std::uint64_t limit,
                                const SieveOptions& options) {
  GapStream stream(start, limit, options);
  std::vector<GapPair> out;
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

}  // namespace sosgap
