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

#include "sosgap/int_math.hpp"

#include <algorithm>
#include <cmath>

namespace sosgap {

std::uint64_t isqrt(std::uint64_t n) {
  // The double estimate is within a few units; fix it up exactly.
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  r = std::min<std::uint64_t>(r, 0xffffffffULL);
  while (static_cast<u128>(r) * r > n) --r;
  while (r < 0xffffffffULL && static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

bool is_square(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace sosgap
