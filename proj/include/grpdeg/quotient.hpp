// Quotient groups, the upper central series, and the nilpotency class.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grpdeg/group.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

struct QuotientGroup {
  GroupPtr group;               // the cosets, as a group
  std::vector<int> projection;  // parent element -> coset index
  Subgroup kernel;

  const GroupPtr& parent() const { return kernel.parent; }

  // Image of a subgroup of the parent under the projection; the image of a
  // subgroup under a surjective homomorphism is again a subgroup.
  Subgroup project(const Subgroup& sub) const {
    if (sub.parent != kernel.parent)
      throw ParentMismatch("project: subgroup of a different group");
    std::vector<char> in(group->order(), 0);
    for (int x : sub.members) in[projection[x]] = 1;
    std::vector<int> members;
    for (int c = 0; c < group->order(); ++c)
      if (in[c]) members.push_back(c);
    return Subgroup{group, std::move(members)};
  }

  Subgroup preimage(const Subgroup& sub) const {
    if (sub.parent != group)
      throw ParentMismatch("preimage: subgroup of a different quotient");
    std::vector<int> members;
    for (int x = 0; x < kernel.parent->order(); ++x)
      if (sub.contains(projection[x])) members.push_back(x);
    return Subgroup{kernel.parent, std::move(members)};
  }
};

// G / N for N normal in G. Cosets are enumerated in order of their least
// member, so coset 0 is N itself and the ordering is deterministic.
inline QuotientGroup quotient(const Subgroup& n) {
  const FiniteGroup& g = *n.parent;
  if (!is_normal(n)) throw NotNormal("quotient: subgroup is not normal");

  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> representative;  // least member per coset, in order
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(representative.size());
    representative.push_back(x);
    for (int k : n.members) coset_of[g.mul(x, k)] = c;
  }

  const int q = static_cast<int>(representative.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          coset_of[g.mul(representative[a], representative[b])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(q);
    for (int c = 0; c < q; ++c)
      labels.push_back("[" + g.label(representative[c]) + "]");
  }
  QuotientGroup out{
      std::make_shared<FiniteGroup>(q, std::move(table), std::move(labels)),
      std::move(coset_of), n};
  return out;
}

// Z_0 = 1 <= Z_1 = Z(G) <= ... computed by lifting center(G / Z_i) through
// the projection until the series stabilizes or reaches G. For a nilpotent
// group of class c the result has exactly c + 1 terms and ends at G.
inline std::vector<Subgroup> upper_central_series(const GroupPtr& g) {
  std::vector<Subgroup> series{trivial_subgroup(g)};
  for (;;) {
    const Subgroup& last = series.back();
    if (last.is_whole_group()) break;
    QuotientGroup q = quotient(last);
    Subgroup next = q.preimage(center(q.group));
    if (next.order() == last.order()) break;  // stabilized below G
    series.push_back(std::move(next));
  }
  return series;
}

// Least n with Z_n(G) = G, or nullopt when the series stabilizes below G.
inline std::optional<int> nilpotency_class(const GroupPtr& g) {
  std::vector<Subgroup> series = upper_central_series(g);
  if (!series.back().is_whole_group()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

}  // namespace grpdeg
