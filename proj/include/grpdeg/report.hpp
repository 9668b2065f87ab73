// Machine-readable run reports. The JSON layout is schema-versioned and
// key-ordered (nlohmann objects serialize with sorted keys), so identical
// runs produce byte-identical documents apart from the wall-time field.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grpdeg/bounds.hpp"

namespace grpdeg {

inline constexpr const char* kToolVersion = "grpdeg 0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct RunReport {
  std::string tool = kToolVersion;
  int schema = kReportSchemaVersion;
  std::string corpus_description;
  int n_max = 3;
  std::vector<GroupSuiteResult> groups;
  long long holds = 0;       // plain Holds verdicts
  long long equalities = 0;  // HoldsWithEquality
  long long vacuous = 0;
  long long violated = 0;
  long long skipped = 0;
  double wall_time_seconds = 0.0;
};

inline RunReport make_run_report(std::string corpus_description, int n_max,
                                 std::vector<GroupSuiteResult> results,
                                 double wall_time_seconds) {
  RunReport report;
  report.corpus_description = std::move(corpus_description);
  report.n_max = n_max;
  report.groups = std::move(results);
  report.wall_time_seconds = wall_time_seconds;
  for (const GroupSuiteResult& g : report.groups) {
    report.skipped += static_cast<long long>(g.skipped.size());
    for (const BoundReport& r : g.reports) {
      switch (r.verdict) {
        case Verdict::Holds: ++report.holds; break;
        case Verdict::HoldsWithEquality: ++report.equalities; break;
        case Verdict::VacuousHypothesisFailed: ++report.vacuous; break;
        case Verdict::Violated: ++report.violated; break;
      }
    }
  }
  return report;
}

inline int report_exit_code(const RunReport& report) {
  return report.violated > 0 ? 1 : 0;
}

inline nlohmann::json to_json(const CheckConfig& c) {
  nlohmann::json j;
  j["group"] = c.group;
  if (c.subgroup) j["subgroup"] = *c.subgroup;
  if (c.subgroup2) j["subgroup2"] = *c.subgroup2;
  if (c.normal_subgroup) j["normal"] = *c.normal_subgroup;
  if (c.n) j["n"] = *c.n;
  return j;
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["theorem_id"] = theorem_id_name(r.theorem_id);
  j["configuration"] = to_json(r.configuration);
  nlohmann::json hyp;
  hyp["all"] = r.hypotheses_met.all;
  nlohmann::json detail = nlohmann::json::object();
  for (const auto& [name, ok] : r.hypotheses_met.detail) detail[name] = ok;
  hyp["detail"] = detail;
  j["hypotheses_met"] = hyp;
  if (r.lhs) j["lhs"] = r.lhs->str();
  if (r.rhs) j["rhs"] = r.rhs->str();
  j["verdict"] = verdict_name(r.verdict);
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

inline nlohmann::json to_json(const GroupSuiteResult& g) {
  nlohmann::json j;
  j["spec"] = g.spec;
  j["order"] = g.order;
  nlohmann::json degrees = nlohmann::json::array();
  for (const Rational& d : g.degrees) degrees.push_back(d.str());
  j["degrees"] = degrees;
  nlohmann::json reports = nlohmann::json::array();
  for (const BoundReport& r : g.reports) reports.push_back(to_json(r));
  j["reports"] = reports;
  if (!g.skipped.empty()) {
    nlohmann::json skipped = nlohmann::json::array();
    for (const SkippedEntry& s : g.skipped) {
      nlohmann::json e;
      e["theorem_id"] = theorem_id_name(s.theorem_id);
      e["configuration"] = to_json(s.configuration);
      e["reason"] = s.reason;
      skipped.push_back(e);
    }
    j["skipped"] = skipped;
  }
  return j;
}

inline nlohmann::json to_json(const RunReport& report) {
  nlohmann::json j;
  j["tool"] = report.tool;
  j["schema"] = report.schema;
  j["corpus"] = report.corpus_description;
  j["nmax"] = report.n_max;
  nlohmann::json groups = nlohmann::json::array();
  for (const GroupSuiteResult& g : report.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  nlohmann::json summary;
  summary["holds"] = report.holds;
  summary["equalities"] = report.equalities;
  summary["vacuous"] = report.vacuous;
  summary["violated"] = report.violated;
  summary["skipped"] = report.skipped;
  j["summary"] = summary;
  j["wall_time_seconds"] = report.wall_time_seconds;
  return j;
}

}  // namespace grpdeg
