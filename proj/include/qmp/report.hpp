#pragma once

// Relation reports: the outcome of checking identities, serialisable as
// text lines or JSON lines.

#include <algorithm>
#include <compare>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qmp {

struct Params {
  int n = 0;
  int m = 0;
  int s = 0;
  int t = 0;

  friend auto operator<=>(const Params&, const Params&) = default;
};

struct RelationRecord {
  std::string relation;
  bool holds = false;
  bool expected_violation = false;  // diagnostic whose violation is the expected outcome
  std::string lhs;
  std::string rhs;

  bool ok() const { return holds != expected_violation; }
};

struct RelationReport {
  std::string suite;
  std::string family;
  Params params;
  std::vector<RelationRecord> records;

  bool all_hold() const {
    return std::all_of(records.begin(), records.end(), [](const RelationRecord& r) { return r.holds; });
  }
  /// No record deviates from its expected status.
  bool ok() const {
    return std::all_of(records.begin(), records.end(), [](const RelationRecord& r) { return r.ok(); });
  }
  void append(const RelationReport& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

  const RelationRecord* find(std::string_view relation) const {
    for (const auto& r : records)
      if (r.relation == relation) return &r;
    return nullptr;
  }
};

/// Order by (suite, family, params); records keep their order.
inline void sort_reports(std::vector<RelationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const RelationReport& x, const RelationReport& y) {
    return std::tie(x.suite, x.family, x.params) < std::tie(y.suite, y.family, y.params);
  });
}

/// Exact comparison of two values that provide to_string().
template <typename T>
RelationRecord compare(std::string relation, const T& lhs, const T& rhs) {
  return {std::move(relation), lhs == rhs, false, to_string(lhs), to_string(rhs)};
}

inline nlohmann::ordered_json to_json(const RelationReport& report, const RelationRecord& record) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["family"] = report.family;
  j["params"] = {{"n", report.params.n}, {"m", report.params.m}, {"s", report.params.s}, {"t", report.params.t}};
  j["relation"] = record.relation;
  j["status"] = record.holds ? "holds" : "violated";
  j["expected"] = record.expected_violation;
  j["lhs"] = record.lhs;
  j["rhs"] = record.rhs;
  return j;
}

/// One JSON object per record, newline-terminated.
inline std::string json_lines(const std::vector<RelationReport>& reports) {
  std::string out;
  for (const auto& rep : reports)
    for (const auto& rec : rep.records) out += to_json(rep, rec).dump() + "\n";
  return out;
}

inline std::string text_line(const RelationReport& rep, const RelationRecord& rec) {
  std::string line = rec.ok() ? "PASS " : "FAIL ";
  line += rep.suite + " " + rep.family + " (n=" + std::to_string(rep.params.n) + ", m=" + std::to_string(rep.params.m) +
          ", s=" + std::to_string(rep.params.s) + ", t=" + std::to_string(rep.params.t) + ") " + rec.relation + ": " +
          (rec.holds ? "holds" : "violated");
  if (rec.expected_violation) line += " (expected)";
  if (!rec.holds) line += "\n    lhs = " + rec.lhs + "\n    rhs = " + rec.rhs;
  return line;
}

}  // namespace qmp
