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

#include <atomic>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sosgap/parallel.hpp"

using sosgap::ordered_map_reduce;

TEST_CASE("results reach reduce in index order") {
  for (unsigned workers : {1U, 2U, 8U}) {
    std::vector<std::size_t> seen;
    ordered_map_reduce(
        1000, workers, [](std::size_t i) { return i * i; },
        [&](std::size_t v) {
          seen.push_back(v);
          return true;
        });
    REQUIRE(seen.size() == 1000);
    for (std::size_t i = 0; i < seen.size(); ++i) REQUIRE(seen[i] == i * i);
  }
}

TEST_CASE("reduce can stop early") {
  for (unsigned workers : {1U, 4U}) {
    std::size_t reduced = 0;
    ordered_map_reduce(
        500, workers, [](std::size_t i) { return i; },
        [&](std::size_t v) {
          ++reduced;
          return v < 9;
        });
    CHECK(reduced == 10);
  }
}

TEST_CASE("map exceptions propagate") {
  for (unsigned workers : {1U, 3U}) {
    std::atomic<int> calls{0};
    CHECK_THROWS_AS(ordered_map_reduce(
                        100, workers,
                        [&](std::size_t i) {
                          ++calls;
                          if (i == 17) throw std::runtime_error("boom");
                          return i;
                        },
                        [](std::size_t) { return true; }),
                    std::runtime_error);
  }
}

TEST_CASE("reduce exceptions propagate") {
  CHECK_THROWS_AS(ordered_map_reduce(
                      100, 4, [](std::size_t i) { return i; },
                      [](std::size_t v) -> bool {
                        if (v == 50) throw std::logic_error("stop");
                        return true;
                      }),
                  std::logic_error);
}

TEST_CASE("zero items") {
  int reduced = 0;
  ordered_map_reduce(0, 4, [](std::size_t i) { return i; }, [&](std::size_t) {
    ++reduced;
    return true;
  });
  CHECK(reduced == 0);
}
