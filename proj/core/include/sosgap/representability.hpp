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
#include <optional>
#include <string_view>
#include <vector>

namespace sosgap {

/// Which pairs (x, y) count as a representation n = x^2 + y^2.
enum class Convention {
  kZeroAllowed,     // x, y >= 0
  kZeroDisallowed,  // x, y >= 1
};

std::string_view to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view text);

inline constexpr std::uint64_t kMaxFactorInput = 0x7fffffffffffffffULL;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  /// Product of prime^exponent over all factors.
  std::uint64_t value() const;
};

/// Canonical witness n = x^2 + y^2 with x <= y.
struct Witness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Complete factorization of 1 <= n <= 2^63 - 1. Trial division handles
/// small factors; any cofactor left above 2^32 is split with Pollard-Brent.
/// Throws std::invalid_argument for n == 0 or n > 2^63 - 1.
Factorization factorize(std::uint64_t n);

/// Fermat's criterion: every prime p == 3 (mod 4) occurs to an even power.
/// Under kZeroDisallowed a perfect square additionally needs a prime
/// factor p == 1 (mod 4), otherwise its only representation is k^2 + 0^2.
/// Throws std::invalid_argument for n == 0.
bool is_sum_of_two_squares(std::uint64_t n,
                           Convention convention = Convention::kZeroAllowed);
bool is_sum_of_two_squares(const Factorization& f,
                           Convention convention = Convention::kZeroAllowed);

/// Smallest-x witness found by scanning x up to floor(sqrt(n / 2)).
/// Empty exactly when is_sum_of_two_squares(n, convention) is false.
std::optional<Witness> find_witness(
    std::uint64_t n, Convention convention = Convention::kZeroAllowed);

}  // namespace sosgap
