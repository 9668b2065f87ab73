// grpdeg: exact commutativity / nilpotency degrees of finite groups and a
// verification harness for the bound catalogue.
//
// Subcommands:
//   compute  exact or Monte Carlo degree of one (H, G, n) configuration
//   verify   run every checker over a corpus and write a JSON report
//   catalog  list the resolvable corpus specs with basic structure data
//
// Exit codes: 0 = success / all checks hold, 1 = at least one VIOLATED
// verdict, 2 = input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grpdeg/bounds.hpp"
#include "grpdeg/degree.hpp"
#include "grpdeg/groupspec.hpp"
#include "grpdeg/montecarlo.hpp"
#include "grpdeg/report.hpp"
#include "grpdeg/subgroup_enum.hpp"

namespace {

std::uint64_t evaluation_budget() {
  if (const char* env = std::getenv("GRPDEG_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw grpdeg::InvalidParameter("GRPDEG_BUDGET is not a number");
    }
  }
  return grpdeg::kDefaultEvaluationBudget;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw grpdeg::InvalidParameter("bad element index: '" + token + "'");
    }
  }
  return out;
}

int default_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct ComputeArgs {
  std::string group_spec;
  int n = 1;
  std::string subgroup_members;
  std::string subgroup_generators;
  std::string method = "exact";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string json_path;
  int threads = default_threads();
};

int run_compute(const ComputeArgs& args) {
  grpdeg::GroupPtr g = grpdeg::resolve_spec_text(args.group_spec);
  grpdeg::Subgroup h = grpdeg::whole_group(g);
  if (!args.subgroup_members.empty())
    h = grpdeg::make_subgroup(g, parse_index_list(args.subgroup_members));
  else if (!args.subgroup_generators.empty())
    h = grpdeg::subgroup_generated(
        g, parse_index_list(args.subgroup_generators));

  nlohmann::json j;
  j["group"] = args.group_spec;
  j["order"] = g->order();
  j["n"] = args.n;
  if (!h.is_whole_group()) j["subgroup"] = h.members;

  if (args.method == "mc") {
    grpdeg::McEstimate est =
        grpdeg::estimate_degree(h, args.n, args.samples, args.seed,
                                args.threads);
    std::cout << "d^(" << args.n << ")(H,G) ~= " << est.point << "  (95% CI ["
              << est.ci95_low << ", " << est.ci95_high << "], " << est.hits
              << "/" << est.samples << " hits, seed " << est.seed << ")\n";
    j["method"] = "mc";
    j["point"] = est.point;
    j["stderr"] = est.stderr_estimate;
    j["ci95"] = {est.ci95_low, est.ci95_high};
    j["hits"] = est.hits;
    j["samples"] = est.samples;
    j["seed"] = est.seed;
  } else {
    grpdeg::DegreeValue d = grpdeg::relative_degree_dp(h, args.n);
    std::cout << "d^(" << args.n << ")(H,G) = " << d.value.str() << " (= "
              << d.value.to_double() << ")\n";
    j["method"] = "exact";
    j["value"] = d.value.str();
    j["decimal"] = d.value.to_double();
    j["favorable"] = d.favorable->str();
    j["total"] = d.total->str();
  }
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out) throw grpdeg::Error("cannot write " + args.json_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string corpus = "default";
  int max_order = 24;
  int n_max = 3;
  std::string out_path;
  int threads = default_threads();
};

int run_verify(const VerifyArgs& args) {
  if (args.n_max < 1) throw grpdeg::InvalidParameter("--nmax must be >= 1");
  if (args.max_order < 1)
    throw grpdeg::InvalidParameter("--max-order must be >= 1");

  std::vector<std::string> specs =
      args.corpus == "default" ? grpdeg::default_corpus_specs(args.max_order)
                               : grpdeg::read_corpus_file(args.corpus);
  std::vector<std::pair<std::string, grpdeg::GroupPtr>> corpus;
  corpus.reserve(specs.size());
  for (const std::string& spec : specs)
    corpus.emplace_back(spec, grpdeg::resolve_spec_text(spec));

  grpdeg::SuiteOptions options;
  options.n_max = args.n_max;
  options.budget = evaluation_budget();
  options.threads = args.threads;

  auto start = std::chrono::steady_clock::now();
  std::vector<grpdeg::GroupSuiteResult> results =
      grpdeg::run_suite(corpus, options);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::string description =
      args.corpus == "default"
          ? "default (max order " + std::to_string(args.max_order) + ")"
          : args.corpus;
  grpdeg::RunReport report = grpdeg::make_run_report(
      std::move(description), args.n_max, std::move(results), elapsed);

  for (const auto& g : report.groups) {
    std::cout << g.spec << "  order " << g.order << "  degrees";
    for (const auto& d : g.degrees) std::cout << " " << d.str();
    long long violated = 0;
    for (const auto& r : g.reports)
      if (r.verdict == grpdeg::Verdict::Violated) ++violated;
    std::cout << "  reports " << g.reports.size();
    if (violated > 0) std::cout << "  VIOLATED " << violated;
    std::cout << "\n";
  }
  std::cout << "summary: holds " << report.holds << ", equalities "
            << report.equalities << ", vacuous " << report.vacuous
            << ", violated " << report.violated << ", skipped "
            << report.skipped << " (" << elapsed << " s)\n";

  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw grpdeg::Error("cannot write " + args.out_path);
    out << grpdeg::to_json(report).dump(2) << "\n";
  }
  return grpdeg::report_exit_code(report);
}

struct CatalogArgs {
  int max_order = 24;
  bool as_json = false;
};

int run_catalog(const CatalogArgs& args) {
  std::vector<grpdeg::CatalogEntry> entries = grpdeg::catalog(args.max_order);
  if (args.as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries) {
      nlohmann::json item;
      item["spec"] = e.spec;
      item["order"] = e.order;
      item["abelian"] = e.abelian;
      if (e.nilpotency_class)
        item["nilpotency_class"] = *e.nilpotency_class;
      else
        item["nilpotency_class"] = "not nilpotent";
      item["center_order"] = e.center_order;
      j.push_back(item);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : entries) {
    std::cout << e.spec << "  order " << e.order
              << (e.abelian ? "  abelian" : "  nonabelian") << "  class ";
    if (e.nilpotency_class)
      std::cout << *e.nilpotency_class;
    else
      std::cout << "not nilpotent";
    std::cout << "  |Z| " << e.center_order << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact commutativity and nilpotency degrees of finite groups"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "compute d^(n)(H,G) for one configuration");
  compute->add_option("--group", compute_args.group_spec, "group spec")
      ->required();
  compute->add_option("--n", compute_args.n, "degree index n (>= 1)")
      ->required();
  compute->add_option("--subgroup", compute_args.subgroup_members,
                      "subgroup as comma-separated element indices");
  compute->add_option("--subgroup-gen", compute_args.subgroup_generators,
                      "subgroup generated by comma-separated indices");
  compute->add_option("--method", compute_args.method, "exact | mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  compute->add_option("--samples", compute_args.samples,
                      "Monte Carlo sample count");
  compute->add_option("--seed", compute_args.seed, "Monte Carlo seed");
  compute->add_option("--json", compute_args.json_path,
                      "write the result as JSON to this path");
  compute->add_option("--threads", compute_args.threads, "worker threads");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the bound suite over a corpus of groups");
  verify->add_option("--corpus", verify_args.corpus,
                     "'default' or a path to a spec list file");
  verify->add_option("--max-order", verify_args.max_order,
                     "corpus order cap");
  verify->add_option("--nmax", verify_args.n_max, "largest degree index");
  verify->add_option("--out", verify_args.out_path, "report JSON path");
  verify->add_option("--threads", verify_args.threads, "worker threads");

  CatalogArgs catalog_args;
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list the default corpus specs");
  catalog_cmd->add_option("--max-order", catalog_args.max_order,
                          "corpus order cap");
  catalog_cmd->add_flag("--json", catalog_args.as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    return run_catalog(catalog_args);
  } catch (const grpdeg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what()
              << " (try --method mc for a seeded estimate)\n";
    return 2;
  } catch (const grpdeg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
