// The group-spec grammar, JSON group ingestion, the default verification
// corpus, and the catalog. Grammar:
//
//   spec   := factor ( 'x' factor )*           (left-associative product)
//   factor := cyclic:N | dihedral:N | sym:N | alt:N | dicyclic:M
//           | heisenberg:P | file:PATH
//
// Whitespace between tokens is ignored; a file path extends to the next
// whitespace character.
#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "grpdeg/group.hpp"
#include "grpdeg/quotient.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

struct GroupSpec {
  struct Factor {
    std::string family;
    long long param = 0;  // numeric families
    std::string path;     // file factor
  };
  std::vector<Factor> factors;

  std::string canonical() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " x ";
      const Factor& f = factors[i];
      out += f.family + ":";
      out += f.family == "file" ? f.path : std::to_string(f.param);
    }
    return out;
  }
};

inline GroupSpec parse_group_spec(std::string_view text) {
  static const char* families[] = {"cyclic", "dihedral",   "sym",  "alt",
                                   "dicyclic", "heisenberg", "file"};
  GroupSpec spec;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_factor = [&]() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    GroupSpec::Factor f;
    f.family = std::string(text.substr(start, pos - start));
    bool known = false;
    for (const char* name : families) known = known || f.family == name;
    if (!known) throw ParseError("unknown family '" + f.family + "'", start);
    if (pos >= text.size() || text[pos] != ':')
      throw ParseError("expected ':' after '" + f.family + "'", pos);
    ++pos;
    if (f.family == "file") {
      const std::size_t path_start = pos;
      while (pos < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      f.path = std::string(text.substr(path_start, pos - path_start));
      if (f.path.empty()) throw ParseError("empty file path", path_start);
    } else {
      const std::size_t digit_start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == digit_start)
        throw ParseError("expected a number", digit_start);
      if (pos - digit_start > 9)
        throw ParseError("parameter too large", digit_start);
      f.param = std::stoll(std::string(text.substr(digit_start,
                                                   pos - digit_start)));
    }
    spec.factors.push_back(std::move(f));
  };

  parse_factor();
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != 'x')
      throw ParseError("expected 'x' between factors", pos);
    ++pos;
    parse_factor();
  }
  return spec;
}

// JSON ingestion: either a Cayley table
//   {"order": n, "table": [[...], ...], "labels": [...]? }
// or permutation generators
//   {"degree": d, "generators": [[images...], ...]}.
inline GroupPtr load_group_json(const nlohmann::json& j) {
  if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() != table.size())
      throw MalformedTable("order field does not match table size");
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j.at("labels").get<std::vector<std::string>>();
    return from_cayley_table(table, std::move(labels));
  }
  if (j.contains("generators")) {
    int degree = j.at("degree").get<int>();
    auto generators =
        j.at("generators").get<std::vector<std::vector<int>>>();
    return from_permutation_generators(degree, generators);
  }
  throw MalformedTable("group file needs either 'table' or 'generators'");
}

inline GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedTable("invalid JSON in " + path + ": " + e.what());
  }
  return load_group_json(j);
}

inline GroupPtr resolve(const GroupSpec& spec) {
  auto factor_group = [](const GroupSpec::Factor& f) -> GroupPtr {
    if (f.param > 1'000'000)
      throw InvalidParameter(f.family + ": parameter too large");
    const int p = static_cast<int>(f.param);
    if (f.family == "cyclic") return cyclic(p);
    if (f.family == "dihedral") return dihedral(p);
    if (f.family == "sym") return symmetric(p);
    if (f.family == "alt") return alternating(p);
    if (f.family == "dicyclic") return dicyclic(p);
    if (f.family == "heisenberg") return heisenberg(p);
    return load_group_file(f.path);
  };
  GroupPtr g = factor_group(spec.factors.at(0));
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    g = direct_product(g, factor_group(spec.factors[i]));
  return g;
}

inline GroupPtr resolve_spec_text(std::string_view text) {
  return resolve(parse_group_spec(text));
}

// ---------------------------------------------------------------------------
// Default corpus: the family groups below plus all pairwise direct products
// of the nontrivial ones, filtered to the order cap.

inline std::vector<std::string> default_corpus_specs(int max_order) {
  struct Entry {
    std::string spec;
    long long order;
  };
  std::vector<Entry> singles;
  for (int n = 1; n <= 24; ++n)
    singles.push_back({"cyclic:" + std::to_string(n), n});
  for (int n = 1; n <= 12; ++n)
    singles.push_back({"dihedral:" + std::to_string(n), 2LL * n});
  singles.push_back({"sym:3", 6});
  singles.push_back({"sym:4", 24});
  singles.push_back({"alt:4", 12});
  for (int m = 2; m <= 5; ++m)
    singles.push_back({"dicyclic:" + std::to_string(m), 4LL * m});
  singles.push_back({"heisenberg:2", 8});
  singles.push_back({"heisenberg:3", 27});

  std::vector<std::string> corpus;
  std::vector<Entry> kept;
  for (const Entry& e : singles)
    if (e.order <= max_order) {
      corpus.push_back(e.spec);
      kept.push_back(e);
    }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].order < 2) continue;
    for (std::size_t j = i; j < kept.size(); ++j) {
      if (kept[j].order < 2) continue;
      if (kept[i].order * kept[j].order > max_order) continue;
      corpus.push_back(kept[i].spec + " x " + kept[j].spec);
    }
  }
  return corpus;
}

// One spec per line; '#' starts a comment.
inline std::vector<std::string> read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read corpus file: " + path);
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }
  return specs;
}

struct CatalogEntry {
  std::string spec;
  int order = 0;
  bool abelian = false;
  std::optional<int> nilpotency_class;
  int center_order = 0;
};

inline std::vector<CatalogEntry> catalog(int max_order) {
  std::vector<CatalogEntry> entries;
  for (const std::string& spec : default_corpus_specs(max_order)) {
    GroupPtr g = resolve_spec_text(spec);
    CatalogEntry e;
    e.spec = spec;
    e.order = g->order();
    e.abelian = structure_probe(*g).is_abelian;
    e.nilpotency_class = nilpotency_class(g);
    e.center_order = center(g).order();
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace grpdeg
