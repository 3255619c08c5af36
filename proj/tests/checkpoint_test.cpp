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

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sosgap/analysis.hpp"

using namespace sosgap;

namespace {

Checkpoint sample() {
  Checkpoint c;
  c.limit = 10000000;
  c.threshold = Threshold(2414, 1000);
  c.position = 4194304;
  c.last_representable = 4194301;
  c.current_max = RatioRecord::from({1493, 1508});
  c.gap_records = {{1, 1}, {2, 2}, {3, 5}, {5, 20}};
  c.pairs_scanned = 123456;
  return c;
}

std::string replace_line(std::string text, const std::string& key, const std::string& line) {
  const auto at = text.find(key + " =");
  REQUIRE(at != std::string::npos);
  const auto end = text.find('\n', at);
  return text.replace(at, end - at, line);
}

}  // namespace

TEST_CASE("text form round-trips") {
  const Checkpoint c = sample();
  const Checkpoint back = parse_checkpoint(to_text(c));
  CHECK(to_text(back) == to_text(c));
  CHECK(back.threshold == c.threshold);
  CHECK(back.current_max->s == 1493);
  CHECK(back.current_max->gap == 15);
  CHECK(back.gap_records == c.gap_records);

  Checkpoint empty;
  empty.limit = 5;
  empty.position = 0;
  const Checkpoint e = parse_checkpoint(to_text(empty));
  CHECK_FALSE(e.current_max.has_value());
  CHECK(e.gap_records.empty());
  CHECK_FALSE(e.threshold.has_value());

  Checkpoint failing = sample();
  failing.first_offender = GapPair{1493, 1508};
  failing.convention = Convention::kZeroDisallowed;
  const Checkpoint f = parse_checkpoint(to_text(failing));
  CHECK(f.first_offender == GapPair{1493, 1508});
  CHECK(f.convention == Convention::kZeroDisallowed);
}

TEST_CASE("the document is plain key = value text") {
  const std::string text = to_text(sample());
  CHECK(text.find("version = 1\n") != std::string::npos);
  CHECK(text.find("limit = 10000000\n") != std::string::npos);
  CHECK(text.find("threshold = 1207/500\n") != std::string::npos);
  CHECK(text.find("current_max = 1493:15\n") != std::string::npos);
  CHECK(text.find("gap_records = 1:1,2:2,3:5,5:20\n") != std::string::npos);
  CHECK(text.find("first_offender = none\n") != std::string::npos);
}

TEST_CASE("parser tolerates comments, blank lines and CRLF") {
  std::string text = "# header\n\n" + to_text(sample());
  std::string crlf;
  for (char ch : text) {
    if (ch == '\n') crlf += '\r';
    crlf += ch;
  }
  CHECK(to_text(parse_checkpoint(crlf)) == to_text(sample()));
}

TEST_CASE("parser rejects malformed documents") {
  const std::string good = to_text(sample());
  CHECK_THROWS_AS(parse_checkpoint(good + "extra = 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(good + "limit = 5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "version", "version = 2")),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "limit", "limit = ten")),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "limit", "")), std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "convention", "convention = maybe")),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "threshold", "threshold = 1/0")),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "current_max", "current_max = 1493")),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint(replace_line(good, "gap_records", "gap_records = 1:1,x")),
                  std::runtime_error);
  CHECK_THROWS_AS(
      parse_checkpoint(replace_line(good, "first_offender", "first_offender = 20:10")),
      std::runtime_error);
  CHECK_THROWS_AS(
      parse_checkpoint(replace_line(good, "last_representable", "last_representable = 4194304")),
      std::runtime_error);
  CHECK_THROWS_AS(parse_checkpoint("this is not a checkpoint\n"), std::runtime_error);
}

TEST_CASE("save is atomic and load reads it back") {
  const auto dir = std::filesystem::temp_directory_path() / "sosgap_checkpoint_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "run.ckpt";
  save_checkpoint(path, sample());
  CHECK_FALSE(std::filesystem::exists(dir / "run.ckpt.tmp"));
  CHECK(to_text(load_checkpoint(path)) == to_text(sample()));

  Checkpoint next = sample();
  next.position = 8388608;
  next.last_representable = 8388605;
  save_checkpoint(path, next);
  CHECK(load_checkpoint(path).position == 8388608);

  CHECK_THROWS_AS(load_checkpoint(dir / "missing.ckpt"), std::runtime_error);
  CHECK_THROWS_AS(save_checkpoint(dir / "no_such_dir" / "x.ckpt", sample()), std::runtime_error);
  std::filesystem::remove_all(dir);
}
