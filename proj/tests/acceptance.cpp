// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria cover the sharp exact values, the classification
// witnesses, the S3 degree ladder, the zero-violation corpus run with its
// equality witnesses, three-way oracle equivalence, the equality conditions
// on S3 x C2, thread-count determinism of the report, and Monte Carlo
// coverage calibration.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "grpdeg/bounds.hpp"
#include "grpdeg/degree.hpp"
#include "grpdeg/groupspec.hpp"
#include "grpdeg/montecarlo.hpp"
#include "grpdeg/report.hpp"
#include "grpdeg/subgroup_enum.hpp"

using namespace grpdeg;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, bool ok,
               const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool all_three_methods(const Subgroup& h, int n, const Rational& expected) {
  DegreeValue brute = relative_degree_bruteforce(h, n);
  DegreeValue cent = relative_degree_centralizer(h, n);
  DegreeValue dp = relative_degree_dp(h, n);
  return brute.value == expected && cent.value == expected &&
         dp.value == expected;
}

int hardware_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(hw);
}

}  // namespace

int main() {
  // --- 1: sharp exact values by all three methods -------------------------
  {
    auto start = std::chrono::steady_clock::now();
    GroupPtr s3 = symmetric(3);
    GroupPtr d4 = dihedral(4);
    GroupPtr q8 = dicyclic(2);
    int r_seed[] = {1};
    Subgroup rotations = subgroup_generated(d4, r_seed);
    bool ok = all_three_methods(whole_group(s3), 1, Rational(1, 2)) &&
              all_three_methods(whole_group(d4), 1, Rational(5, 8)) &&
              all_three_methods(whole_group(q8), 1, Rational(5, 8)) &&
              all_three_methods(rotations, 1, Rational(3, 4));
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "d(S3)=1/2 d(D4)=5/8 d(Q8)=5/8 d(<r>,D4)=3/4, %.3f s",
                  elapsed);
    criterion(1, "sharp exact values, three methods agree", ok, detail);
  }

  // --- 2: classification witnesses ----------------------------------------
  {
    GroupAnalysis d4("dihedral:4", dihedral(4));
    int r_seed[] = {1};
    Subgroup rotations = subgroup_generated(d4.group_ptr(), r_seed);
    BoundReport three_quarters = check_T2_4i(d4, rotations);
    bool ok = three_quarters.hypotheses_met.all &&
              three_quarters.verdict == Verdict::Holds &&
              three_quarters.witness.at("quotient_order") == "2" &&
              three_quarters.witness.at("quotient_is_cyclic") == "true";

    BoundReport five_eighths_d4 = check_T2_4ii(d4, whole_group(d4.group_ptr()));
    ok = ok && five_eighths_d4.hypotheses_met.all &&
         five_eighths_d4.verdict == Verdict::Holds &&
         five_eighths_d4.witness.at("quotient_order") == "4" &&
         five_eighths_d4.witness.at("quotient_exponent") == "2";

    GroupAnalysis q8("dicyclic:2", dicyclic(2));
    BoundReport five_eighths_q8 = check_T2_4ii(q8, whole_group(q8.group_ptr()));
    ok = ok && five_eighths_q8.hypotheses_met.all &&
         five_eighths_q8.verdict == Verdict::Holds &&
         five_eighths_q8.witness.at("quotient_order") == "4" &&
         five_eighths_q8.witness.at("quotient_exponent") == "2";

    criterion(2, "3/4 and 5/8 structure witnesses", ok);
  }

  // --- 3: the S3 degree ladder ---------------------------------------------
  {
    auto start = std::chrono::steady_clock::now();
    GroupPtr s3 = symmetric(3);
    GroupAnalysis analysis("sym:3", s3);
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      Rational expected(bigint_pow(2, n) - 1, bigint_pow(2, n));
      ok = ok && relative_degree_dp(whole_group(s3), n).value == expected;
      if (n <= 3)
        ok = ok &&
             relative_degree_bruteforce(whole_group(s3), n).value == expected;
      BoundReport c42 = check_C4_2(analysis, n);
      ok = ok && c42.hypotheses_met.all &&
           c42.verdict == Verdict::HoldsWithEquality;
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 5.0;
    char detail[96];
    std::snprintf(detail, sizeof detail,
                  "d^(n)(S3) = (2^n-1)/2^n for n=1..4, %.3f s", elapsed);
    criterion(3, "S3 ladder attains the trivial-center bound", ok, detail);
  }

  // --- 4 and 7: the full corpus run, twice --------------------------------
  std::vector<std::pair<std::string, GroupPtr>> corpus;
  for (const std::string& spec : default_corpus_specs(24))
    corpus.emplace_back(spec, resolve_spec_text(spec));

  std::string serialized_single;
  {
    auto start = std::chrono::steady_clock::now();
    SuiteOptions options;
    options.n_max = 3;
    options.threads = 1;
    std::vector<GroupSuiteResult> results = run_suite(corpus, options);
    double elapsed = seconds_since(start);

    RunReport report = make_run_report("default (max order 24)", 3,
                                       std::move(results), 0.0);
    std::map<std::string, long long> equality_by_theorem;
    long long violated = 0;
    for (const GroupSuiteResult& g : report.groups)
      for (const BoundReport& r : g.reports) {
        if (r.verdict == Verdict::Violated) ++violated;
        if (r.verdict == Verdict::HoldsWithEquality)
          ++equality_by_theorem[theorem_id_name(r.theorem_id)];
      }
    bool witnesses = true;
    for (const char* id :
         {"T2_7i", "C2_8ii", "C2_8iii", "T3_2", "C4_2", "T2_11"})
      witnesses = witnesses && equality_by_theorem[id] > 0;

    bool ok = violated == 0 && report.skipped == 0 && witnesses &&
              elapsed < 300.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%zu groups, %lld reports, violated=%lld, %.1f s",
                  report.groups.size(),
                  report.holds + report.equalities + report.vacuous +
                      report.violated,
                  violated, elapsed);
    criterion(4, "full verify run: zero violations, sharp witnesses", ok,
              detail);
    serialized_single = to_json(report).dump();
  }

  {
    SuiteOptions options;
    options.n_max = 3;
    options.threads = hardware_threads();
    RunReport report = make_run_report("default (max order 24)", 3,
                                       run_suite(corpus, options), 0.0);
    std::string serialized_parallel = to_json(report).dump();
    bool ok = serialized_parallel == serialized_single;
    char detail[64];
    std::snprintf(detail, sizeof detail, "1 thread vs %d threads",
                  options.threads);
    criterion(7, "report is byte-identical across thread counts", ok, detail);
  }

  // --- 5: three-way oracle equivalence over the corpus --------------------
  {
    const BigInt limit(1'000'000);
    long long checked = 0;
    bool ok = true;
    for (const auto& [spec, group] : corpus) {
      for (const Subgroup& h : enumerate_subgroups(group)) {
        for (int n = 1; n <= 3; ++n) {
          BigInt cost = bigint_pow(h.order(), n) * group->order();
          if (cost > limit) break;
          DegreeValue brute = relative_degree_bruteforce(h, n);
          DegreeValue cent = relative_degree_centralizer(h, n);
          DegreeValue dp = relative_degree_dp(h, n);
          bool same = brute.value == cent.value && brute.value == dp.value &&
                      *brute.favorable == *dp.favorable;
          if (!same) {
            std::printf("  mismatch: %s H=|%d| n=%d\n", spec.c_str(),
                        h.order(), n);
            ok = false;
          }
          ++checked;
        }
      }
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%lld (H,G,n) configurations",
                  checked);
    criterion(5, "brute force = centralizer sum = DP on the corpus", ok,
              detail);
  }

  // --- 6: equality conditions on S3 x C2 ----------------------------------
  {
    GroupAnalysis p("sym:3 x cyclic:2", resolve_spec_text("sym:3 x cyclic:2"));
    GroupPtr pg = p.group_ptr();
    Subgroup n = make_subgroup(pg, {0, 1});  // the central C2 factor
    Subgroup h = whole_group(pg);
    BoundReport t211 = check_T2_11(p, h, n);
    bool ok = t211.witness.at("N_cap_HG_trivial") == "true" &&
              t211.verdict == Verdict::HoldsWithEquality &&
              *t211.lhs == Rational(1, 2) && *t211.rhs == Rational(1, 2);
    BoundReport t35 = check_T3_5(p, h, n, 2);
    ok = ok && t35.witness.at("N_cap_nHG_trivial") == "true" &&
         t35.verdict == Verdict::HoldsWithEquality &&
         *t35.lhs == *t35.rhs && *t35.lhs == Rational(3, 4);
    criterion(6, "T2_11 and T3_5 equality cases on S3 x C2", ok);
  }

  // --- 8: Monte Carlo coverage calibration ---------------------------------
  {
    auto start = std::chrono::steady_clock::now();
    GroupPtr s3 = symmetric(3);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      McEstimate est = estimate_degree(s3, 1, 10000, seed);
      if (est.ci95_low <= 0.5 && 0.5 <= est.ci95_high) ++covered;
    }
    double elapsed = seconds_since(start);
    bool ok = covered >= 180 && elapsed < 30.0;
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/200 intervals cover 1/2, %.2f s",
                  covered, elapsed);
    criterion(8, "Monte Carlo 95% interval calibration", ok, detail);
  }

  if (failures == 0) std::printf("acceptance: all criteria passed\n");
  else std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
