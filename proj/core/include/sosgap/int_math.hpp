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
#include <string>

namespace sosgap {

__extension__ typedef unsigned __int128 u128;

/// floor(sqrt(n)), exact for every 64-bit input.
std::uint64_t isqrt(std::uint64_t n);

/// ceil(sqrt(n)).
std::uint64_t ceil_sqrt(std::uint64_t n);

bool is_square(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Fourth power in 128 bits; caller guarantees a < 2^32.
inline u128 pow4(std::uint64_t a) {
  const u128 sq = static_cast<u128>(a) * a;
  return sq * sq;
}

std::string to_string(u128 v);

}  // namespace sosgap
