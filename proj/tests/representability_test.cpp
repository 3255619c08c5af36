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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sosgap/representability.hpp"
#include "support/oracles.hpp"

using namespace sosgap;

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> as_pairs(const Factorization& f) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (const auto& [p, e] : f.factors) out.emplace_back(p, e);
  return out;
}

void check_factorization(std::uint64_t n) {
  const Factorization f = factorize(n);
  REQUIRE(f.n == n);
  REQUIRE(f.value() == n);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    REQUIRE(is_prime(f.factors[i].prime));
    REQUIRE(f.factors[i].exponent >= 1);
    if (i > 0) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
  }
}

}  // namespace

TEST_CASE("factorize examples") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1493).factors == std::vector<PrimePower>{{1493, 1}});
  CHECK(factorize(1508).factors == std::vector<PrimePower>{{2, 2}, {13, 1}, {29, 1}});
}

TEST_CASE("factorize rejects out-of-range input") {
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kMaxFactorInput + 1), std::invalid_argument);
  CHECK_NOTHROW(factorize(kMaxFactorInput));
}

TEST_CASE("factorize agrees with trial division up to 10^5") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    REQUIRE(as_pairs(factorize(n)) == testing::trial_factor(n));
  }
}

TEST_CASE("factorize round-trips for every n <= 10^6") {
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    const Factorization f = factorize(n);
    REQUIRE(f.value() == n);
  }
}

TEST_CASE("factorize round-trips random 63-bit values") {
  std::mt19937_64 rng(1493);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = (rng() >> 1) | 1;
    check_factorization(n);
  }
  // Semiprimes with two large factors exercise Pollard-Brent.
  check_factorization(4294967291ULL * 2147483647ULL);
  check_factorization(3037000493ULL * 3037000493ULL);
  check_factorization(9223372036854775783ULL);  // largest prime below 2^63
}

TEST_CASE("is_prime small table") {
  int count = 0;
  for (std::uint64_t n = 0; n < 10000; ++n) count += is_prime(n) ? 1 : 0;
  CHECK(count == 1229);
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("is_sum_of_two_squares examples") {
  CHECK(is_sum_of_two_squares(25));
  CHECK_FALSE(is_sum_of_two_squares(21));
  CHECK(is_sum_of_two_squares(410));
  CHECK_FALSE(is_sum_of_two_squares(1500));
  CHECK(is_sum_of_two_squares(9));
  for (std::uint64_t n = 21; n <= 24; ++n) CHECK_FALSE(is_sum_of_two_squares(n));
  for (std::uint64_t n = 1494; n <= 1507; ++n) CHECK_FALSE(is_sum_of_two_squares(n));
  CHECK(is_sum_of_two_squares(1493));
  CHECK(is_sum_of_two_squares(1508));
  CHECK_THROWS_AS(is_sum_of_two_squares(0), std::invalid_argument);
}

TEST_CASE("zero-disallowed convention") {
  const auto zd = Convention::kZeroDisallowed;
  CHECK_FALSE(is_sum_of_two_squares(1, zd));
  CHECK(is_sum_of_two_squares(2, zd));
  CHECK_FALSE(is_sum_of_two_squares(4, zd));
  CHECK_FALSE(is_sum_of_two_squares(9, zd));
  CHECK(is_sum_of_two_squares(25, zd));   // 3^2 + 4^2
  CHECK_FALSE(is_sum_of_two_squares(36, zd));
  CHECK(is_sum_of_two_squares(50, zd));   // 1^2 + 7^2
}

TEST_CASE("criterion, witness and brute force agree for n <= 20000") {
  for (bool zero : {true, false}) {
    const auto conv = zero ? Convention::kZeroAllowed : Convention::kZeroDisallowed;
    for (std::uint64_t n = 1; n <= 20000; ++n) {
      const bool brute = testing::brute_is_sum(n, zero);
      REQUIRE(is_sum_of_two_squares(n, conv) == brute);
      const auto w = find_witness(n, conv);
      REQUIRE(w.has_value() == brute);
      if (w) {
        REQUIRE(w->x <= w->y);
        REQUIRE(w->x * w->x + w->y * w->y == n);
        if (!zero) REQUIRE(w->x >= 1);
      }
    }
  }
}

TEST_CASE("find_witness examples") {
  const auto w25 = find_witness(25);
  REQUIRE(w25);
  CHECK(((*w25 == Witness{3, 4}) || (*w25 == Witness{0, 5})));
  CHECK(find_witness(1508) == Witness{8, 38});
  CHECK_FALSE(find_witness(23).has_value());
  CHECK(find_witness(25, Convention::kZeroDisallowed) == Witness{3, 4});
}

TEST_CASE("representability is multiplicative") {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<std::uint64_t> dist(1, 10000);
  int tested = 0;
  while (tested < 5000) {
    const std::uint64_t a = dist(rng), b = dist(rng);
    if (!is_sum_of_two_squares(a) || !is_sum_of_two_squares(b)) continue;
    REQUIRE(is_sum_of_two_squares(a * b));
    ++tested;
  }
}

TEST_CASE("convention names round-trip") {
  for (auto c : {Convention::kZeroAllowed, Convention::kZeroDisallowed}) {
    CHECK(parse_convention(to_string(c)) == c);
  }
  CHECK_FALSE(parse_convention("zero").has_value());
}
