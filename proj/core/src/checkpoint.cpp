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

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "sosgap/analysis.hpp"

// Checkpoint document: UTF-8 text, one "key = value" per line. Blank lines
// and lines starting with '#' are ignored. Every key below must appear
// exactly once:
//
//   version            1
//   limit              integer
//   convention         zero-allowed | zero-disallowed
//   threshold          p/q | none
//   position           integer
//   last_representable integer
//   current_max        s:gap | none
//   gap_records        gap:first_s,gap:first_s,...   (may be empty)
//   pairs_scanned      integer
//   first_offender     s:s_next | none

namespace sosgap {
namespace {

constexpr const char* kKeys[] = {"version",       "limit",          "convention",
                                 "threshold",     "position",       "last_representable",
                                 "current_max",   "gap_records",    "pairs_scanned",
                                 "first_offender"};

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("checkpoint: " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t to_u64(std::string_view text, std::string_view key) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    fail("field '" + std::string(key) + "' has invalid integer '" + std::string(text) + "'");
  }
  return v;
}

std::pair<std::uint64_t, std::uint64_t> to_u64_pair(std::string_view text, std::string_view key) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail("field '" + std::string(key) + "' expects a:b, got '" + std::string(text) + "'");
  }
  return {to_u64(text.substr(0, colon), key), to_u64(text.substr(colon + 1), key)};
}

}  // namespace

std::string to_text(const Checkpoint& c) {
  std::ostringstream out;
  out << "# sosgap checkpoint\n";
  out << "version = " << c.version << '\n';
  out << "limit = " << c.limit << '\n';
  out << "convention = " << to_string(c.convention) << '\n';
  out << "threshold = " << (c.threshold ? c.threshold->to_string() : "none") << '\n';
  out << "position = " << c.position << '\n';
  out << "last_representable = " << c.last_representable << '\n';
  out << "current_max = ";
  if (c.current_max) {
    out << c.current_max->s << ':' << c.current_max->gap;
  } else {
    out << "none";
  }
  out << '\n';
  out << "gap_records = ";
  for (std::size_t i = 0; i < c.gap_records.size(); ++i) {
    if (i != 0) out << ',';
    out << c.gap_records[i].gap << ':' << c.gap_records[i].first_s;
  }
  out << '\n';
  out << "pairs_scanned = " << c.pairs_scanned << '\n';
  out << "first_offender = ";
  if (c.first_offender) {
    out << c.first_offender->s << ':' << c.first_offender->s_next;
  } else {
    out << "none";
  }
  out << '\n';
  return out.str();
}

Checkpoint parse_checkpoint(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail("line " + std::to_string(line_no) + " is not 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) fail("unknown field '" + key + "'");
    if (!fields.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
      fail("duplicate field '" + key + "'");
    }
  }
  for (const char* k : kKeys) {
    if (!fields.contains(k)) fail(std::string("missing field '") + k + "'");
  }

  Checkpoint c;
  const std::uint64_t version = to_u64(fields["version"], "version");
  if (version != Checkpoint::kVersion) {
    fail("unsupported version " + std::to_string(version));
  }
  c.version = static_cast<int>(version);
  c.limit = to_u64(fields["limit"], "limit");
  const auto conv = parse_convention(fields["convention"]);
  if (!conv) fail("field 'convention' has invalid value '" + fields["convention"] + "'");
  c.convention = *conv;
  if (fields["threshold"] != "none") {
    try {
      c.threshold = Threshold::parse(fields["threshold"]);
    } catch (const std::invalid_argument& e) {
      fail(std::string("field 'threshold': ") + e.what());
    }
  }
  c.position = to_u64(fields["position"], "position");
  c.last_representable = to_u64(fields["last_representable"], "last_representable");
  if (fields["current_max"] != "none") {
    const auto [s, gap] = to_u64_pair(fields["current_max"], "current_max");
    if (s == 0 || gap == 0) fail("field 'current_max' must have positive s and gap");
    c.current_max = RatioRecord{s, gap, display_ratio(gap, s)};
  }
  std::string_view records = fields["gap_records"];
  while (!records.empty()) {
    const auto comma = records.find(',');
    const auto [gap, first_s] = to_u64_pair(trim(records.substr(0, comma)), "gap_records");
    c.gap_records.push_back({gap, first_s});
    records = comma == std::string_view::npos ? std::string_view{} : records.substr(comma + 1);
  }
  c.pairs_scanned = to_u64(fields["pairs_scanned"], "pairs_scanned");
  if (fields["first_offender"] != "none") {
    const auto [s, s_next] = to_u64_pair(fields["first_offender"], "first_offender");
    if (s_next <= s) fail("field 'first_offender' must have s < s_next");
    c.first_offender = GapPair{s, s_next};
  }
  if (c.last_representable != 0 && c.last_representable >= c.position) {
    fail("last_representable must be below position");
  }
  return c;
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot open '" + tmp.string() + "' for writing");
    out << to_text(checkpoint);
    out.flush();
    if (!out) fail("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail("rename to '" + path.string() + "' failed: " + ec.message());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

}  // namespace sosgap
