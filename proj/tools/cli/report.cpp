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

#include "cli/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sosgap/representability.hpp"

namespace sosgap::cli {
namespace {

using Json = nlohmann::ordered_json;

// Round-trips through the 12-digit rendering so json shows the same digits.
double rounded(double ratio) { return std::stod(format_ratio(ratio)); }

std::string csv_ratio(double ratio) { return format_ratio(ratio); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Simple left-aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i + 1 == row.size()) {
          out << row[i];
        } else {
          out << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
        }
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "none";
  return std::to_string(w->x) + "^2 + " + std::to_string(w->y) + "^2";
}

}  // namespace

std::string emit_report(const VerificationReport& r, OutputFormat format) {
  const RatioRecord& m = r.max_record;
  std::optional<Witness> witness;
  if (r.first_offender) witness = find_witness(r.first_offender->s_next, r.convention);

  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["limit"] = r.limit;
      j["convention"] = std::string(to_string(r.convention));
      j["max_s"] = m.s;
      j["max_s_next"] = m.s + m.gap;
      j["gap"] = m.gap;
      j["ratio"] = rounded(m.ratio_display);
      j["threshold"] = r.threshold ? Json(r.threshold->to_string()) : Json(nullptr);
      j["passed"] = r.passed ? Json(*r.passed) : Json(nullptr);
      if (r.first_offender) {
        const GapPair& f = *r.first_offender;
        Json off;
        off["s"] = f.s;
        off["s_next"] = f.s_next;
        off["gap"] = f.gap();
        off["ratio"] = rounded(display_ratio(f.gap(), f.s));
        off["witness"] = witness ? Json::array({witness->x, witness->y}) : Json(nullptr);
        j["first_offender"] = off;
      } else {
        j["first_offender"] = nullptr;
      }
      j["pairs_scanned"] = r.pairs_scanned;
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "limit,convention,max_s,max_s_next,gap,ratio,threshold,passed,"
             "first_offender_s,first_offender_s_next,pairs_scanned\n";
      out << r.limit << ',' << to_string(r.convention) << ',' << m.s << ',' << m.s + m.gap
          << ',' << m.gap << ',' << csv_ratio(m.ratio_display) << ','
          << (r.threshold ? r.threshold->to_string() : "") << ','
          << (r.passed ? (*r.passed ? "true" : "false") : "") << ',';
      if (r.first_offender) out << r.first_offender->s << ',' << r.first_offender->s_next;
      else out << ',';
      out << ',' << r.pairs_scanned << '\n';
      return out.str();
    }
    case OutputFormat::kHuman:
      break;
  }

  Table t({"field", "value"});
  t.add({"limit", std::to_string(r.limit)});
  t.add({"convention", std::string(to_string(r.convention))});
  t.add({"max record", "s=" + std::to_string(m.s) + " s_next=" + std::to_string(m.s + m.gap) +
                           " gap=" + std::to_string(m.gap)});
  t.add({"max ratio", format_ratio(m.ratio_display)});
  if (r.threshold) {
    t.add({"threshold", r.threshold->to_string() + " (" + format_ratio(r.threshold->value()) + ")"});
  }
  if (r.passed) t.add({"result", *r.passed ? "PASS" : "FAIL"});
  if (r.first_offender) {
    const GapPair& f = *r.first_offender;
    t.add({"first offender", "s=" + std::to_string(f.s) + " s_next=" + std::to_string(f.s_next) +
                                 " gap=" + std::to_string(f.gap()) +
                                 " ratio=" + format_ratio(display_ratio(f.gap(), f.s))});
    t.add({"witness", std::to_string(f.s_next) + " = " + witness_text(witness)});
  }
  t.add({"pairs scanned", std::to_string(r.pairs_scanned)});
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f s", r.elapsed_seconds);
  t.add({"elapsed", elapsed});
  return t.str();
}

std::string emit_report(std::span<const GapRecord> records, OutputFormat format) {
  std::vector<std::optional<NormalizedGapStats>> norms;
  norms.reserve(records.size());
  for (const GapRecord& r : records) {
    norms.push_back(r.first_s >= kMinNormalizedS
                        ? std::optional(normalize_gap(r.first_s, r.gap))
                        : std::nullopt);
  }

  switch (format) {
    case OutputFormat::kJson: {
      Json j = Json::array();
      for (std::size_t i = 0; i < records.size(); ++i) {
        const GapRecord& r = records[i];
        Json row;
        row["gap"] = r.gap;
        row["first_s"] = r.first_s;
        row["ratio"] = rounded(display_ratio(r.gap, r.first_s));
        row["erdos_norm"] = norms[i] ? Json(rounded(norms[i]->erdos_norm)) : Json(nullptr);
        row["cramer_norm"] = norms[i] ? Json(rounded(norms[i]->cramer_norm)) : Json(nullptr);
        j.push_back(row);
      }
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "gap,first_s,ratio,erdos_norm,cramer_norm\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const GapRecord& r = records[i];
        out << r.gap << ',' << r.first_s << ',' << csv_ratio(display_ratio(r.gap, r.first_s))
            << ',';
        if (norms[i]) out << csv_ratio(norms[i]->erdos_norm) << ',' << csv_ratio(norms[i]->cramer_norm);
        else out << ',';
        out << '\n';
      }
      return out.str();
    }
    case OutputFormat::kHuman:
      break;
  }
  Table t({"gap", "first_s", "ratio", "erdos_norm", "cramer_norm"});
  for (std::size_t i = 0; i < records.size(); ++i) {
    const GapRecord& r = records[i];
    t.add({std::to_string(r.gap), std::to_string(r.first_s),
           format_ratio(display_ratio(r.gap, r.first_s)),
           norms[i] ? format_ratio(norms[i]->erdos_norm) : "-",
           norms[i] ? format_ratio(norms[i]->cramer_norm) : "-"});
  }
  return t.str();
}

std::string emit_report(std::span<const DensityPoint> points, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j = Json::array();
      for (const DensityPoint& p : points) {
        Json row;
        row["x"] = p.x;
        row["count"] = p.count;
        row["normalized"] = rounded(p.normalized);
        j.push_back(row);
      }
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "x,count,normalized\n";
      for (const DensityPoint& p : points) {
        out << p.x << ',' << p.count << ',' << csv_ratio(p.normalized) << '\n';
      }
      return out.str();
    }
    case OutputFormat::kHuman:
      break;
  }
  Table t({"x", "R(x)", "R(x)*sqrt(ln x)/x"});
  for (const DensityPoint& p : points) {
    t.add({std::to_string(p.x), std::to_string(p.count), format_ratio(p.normalized)});
  }
  return t.str();
}

std::string emit_report(const CheckReport& r, OutputFormat format) {
  const auto& res = r.result;
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["limit"] = r.limit;
      j["convention"] = std::string(to_string(r.convention));
      j["checked"] = res.checked;
      j["mismatches"] = res.mismatches;
      j["first_mismatch"] = res.first_mismatch ? Json(*res.first_mismatch) : Json(nullptr);
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "limit,convention,checked,mismatches,first_mismatch\n";
      out << r.limit << ',' << to_string(r.convention) << ',' << res.checked << ','
          << res.mismatches << ',';
      if (res.first_mismatch) out << *res.first_mismatch;
      out << '\n';
      return out.str();
    }
    case OutputFormat::kHuman:
      break;
  }
  Table t({"field", "value"});
  t.add({"limit", std::to_string(r.limit)});
  t.add({"convention", std::string(to_string(r.convention))});
  t.add({"checked", std::to_string(res.checked)});
  t.add({"mismatches", std::to_string(res.mismatches)});
  if (res.first_mismatch) t.add({"first mismatch", std::to_string(*res.first_mismatch)});
  t.add({"result", res.mismatches == 0 ? "PASS" : "FAIL"});
  return t.str();
}

}  // namespace sosgap::cli
