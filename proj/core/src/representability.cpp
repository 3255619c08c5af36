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

#include "sosgap/representability.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "sosgap/int_math.hpp"

namespace sosgap {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n is odd, composite and not a prime power of a small prime.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t r = isqrt(n);
  if (r * r == n) {
    split(r, primes);
    split(r, primes);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split(d, primes);
  split(n / d, primes);
}

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
}

}  // namespace

std::string_view to_string(Convention c) {
  return c == Convention::kZeroAllowed ? "zero-allowed" : "zero-disallowed";
}

std::optional<Convention> parse_convention(std::string_view text) {
  if (text == "zero-allowed") return Convention::kZeroAllowed;
  if (text == "zero-disallowed") return Convention::kZeroDisallowed;
  return std::nullopt;
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) v *= p;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13,
                                                           17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n);
  if (n > kMaxFactorInput) {
    throw std::invalid_argument("n exceeds 2^63 - 1: " + std::to_string(n));
  }
  Factorization f{n, {}};
  std::uint64_t m = n;
  auto take = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e != 0) f.factors.push_back({p, e});
  };
  take(2);
  // Trial division covers every cofactor below 2^32 completely.
  constexpr std::uint64_t kTrialBound = 1U << 16;
  for (std::uint64_t d = 3; d <= kTrialBound && d * d <= m; d += 2) take(d);
  if (m == 1) return f;
  if (m < kTrialBound * kTrialBound) {
    f.factors.push_back({m, 1});
    return f;
  }
  std::vector<std::uint64_t> primes;
  split(m, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

bool is_sum_of_two_squares(const Factorization& f, Convention convention) {
  bool has_one_mod_four = false;
  for (const auto& [p, e] : f.factors) {
    if (p % 4 == 3 && e % 2 != 0) return false;
    if (p % 4 == 1) has_one_mod_four = true;
  }
  if (convention == Convention::kZeroAllowed) return true;
  // Nonsquares have no representation with a zero term. For n = k^2 the
  // count r2(n) exceeds the four trivial ones iff some p == 1 (mod 4) divides.
  return !is_square(f.n) || has_one_mod_four;
}

bool is_sum_of_two_squares(std::uint64_t n, Convention convention) {
  return is_sum_of_two_squares(factorize(n), convention);
}

std::optional<Witness> find_witness(std::uint64_t n, Convention convention) {
  if (!is_sum_of_two_squares(n, convention)) return std::nullopt;
  const std::uint64_t x_max = isqrt(n / 2);
  for (std::uint64_t x = convention == Convention::kZeroAllowed ? 0 : 1; x <= x_max; ++x) {
    const std::uint64_t rest = n - x * x;
    const std::uint64_t y = isqrt(rest);
    if (y * y == rest) return Witness{x, y};
  }
  return std::nullopt;
}

}  // namespace sosgap
