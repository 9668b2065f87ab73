// Subgroup enumeration for the verification corpus: closures of all
// generating sets of size <= 2, one extra pass over triples of commuting
// involutions (elementary abelian rank 3 needs three generators), and the
// whole group. Exhaustive for groups of order <= 24: the only subgroups
// there that need a third generator are elementary abelian 2-groups.
#pragma once

#include <set>
#include <vector>

#include "grpdeg/subgroup.hpp"

namespace grpdeg {

// All subgroups, sorted lexicographically by member list.
inline std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g) {
  const FiniteGroup& group = *g;
  const int n = group.order();
  std::set<std::vector<int>> found;
  auto add = [&](const Subgroup& s) {
    if (n % s.order() != 0)
      throw NotAGroup("enumerated subgroup violates Lagrange");
    found.insert(s.members);
  };

  add(trivial_subgroup(g));
  add(whole_group(g));
  for (int x = 1; x < n; ++x) {
    int gens1[] = {x};
    add(subgroup_generated(g, gens1));
    for (int y = x + 1; y < n; ++y) {
      int gens2[] = {x, y};
      add(subgroup_generated(g, gens2));
    }
  }

  std::vector<int> involutions;
  for (int x = 1; x < n; ++x)
    if (group.mul(x, x) == 0) involutions.push_back(x);
  for (std::size_t i = 0; i < involutions.size(); ++i)
    for (std::size_t j = i + 1; j < involutions.size(); ++j) {
      int a = involutions[i], b = involutions[j];
      if (group.mul(a, b) != group.mul(b, a)) continue;
      for (std::size_t k = j + 1; k < involutions.size(); ++k) {
        int c = involutions[k];
        if (group.mul(a, c) != group.mul(c, a)) continue;
        if (group.mul(b, c) != group.mul(c, b)) continue;
        int gens3[] = {a, b, c};
        add(subgroup_generated(g, gens3));
      }
    }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& members : found) out.push_back(Subgroup{g, members});
  return out;  // std::set iteration is already lexicographic
}

}  // namespace grpdeg
