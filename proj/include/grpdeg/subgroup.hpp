// Subgroups as sorted member-index lists over a shared parent group, plus
// the subgroup-level operations: centralizers, centers, generated closures,
// intersections, normality, n-fold commutator subgroups, and reification of
// a subgroup as a standalone group.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "grpdeg/group.hpp"
#include "grpdeg/rational.hpp"

namespace grpdeg {

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, unique, always contains 0

  int order() const noexcept { return static_cast<int>(members.size()); }

  bool contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  bool contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(),
                         other.members.begin(), other.members.end());
  }

  bool is_whole_group() const { return order() == parent->order(); }
};

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent)
    throw ParentMismatch("subgroups have different parent groups");
}

// Validates membership of 0, closure, inverses, and (checked, not assumed)
// Lagrange divisibility.
inline Subgroup make_subgroup(GroupPtr parent, std::vector<int> members) {
  const FiniteGroup& g = *parent;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int x : members)
    if (x < 0 || x >= g.order())
      throw InvalidParameter("subgroup member out of range");
  Subgroup h{std::move(parent), std::move(members)};
  if (h.members.empty() || h.members[0] != 0)
    throw NotAGroup("subgroup does not contain the identity");
  for (int a : h.members) {
    if (!h.contains(g.inv(a)))
      throw NotAGroup("subgroup not closed under inverse of " +
                      std::to_string(a));
    for (int b : h.members)
      if (!h.contains(g.mul(a, b)))
        throw NotAGroup("subgroup not closed under product " +
                        std::to_string(a) + "*" + std::to_string(b));
  }
  if (g.order() % h.order() != 0)
    throw NotAGroup("subgroup order does not divide group order");
  return h;
}

inline Subgroup trivial_subgroup(GroupPtr parent) {
  return Subgroup{std::move(parent), {0}};
}

inline Subgroup whole_group(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(parent), std::move(all)};
}

inline Subgroup centralizer(GroupPtr parent, int x) {
  const FiniteGroup& g = *parent;
  if (x < 0 || x >= g.order())
    throw InvalidParameter("centralizer: element out of range");
  std::vector<int> members;
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) members.push_back(y);
  return Subgroup{std::move(parent), std::move(members)};
}

inline Subgroup center(GroupPtr parent) {
  const FiniteGroup& g = *parent;
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central) members.push_back(x);
  }
  return Subgroup{std::move(parent), std::move(members)};
}

// Smallest subgroup containing the seeds (closure under multiplication;
// finite order makes inverses reachable).
inline Subgroup subgroup_generated(GroupPtr parent,
                                   std::span<const int> seeds) {
  const FiniteGroup& g = *parent;
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<int> frontier{0};
  for (int s : seeds) {
    if (s < 0 || s >= g.order())
      throw InvalidParameter("subgroup_generated: seed out of range");
    if (!in[s]) {
      in[s] = 1;
      frontier.push_back(s);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      int p = g.mul(frontier[i], frontier[j]);
      if (!in[p]) {
        in[p] = 1;
        frontier.push_back(p);
      }
    }
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (in[x]) members.push_back(x);
  return Subgroup{std::move(parent), std::move(members)};
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<int> members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(members));
  return Subgroup{a.parent, std::move(members)};
}

inline bool is_normal(const Subgroup& n) {
  const FiniteGroup& g = *n.parent;
  for (int x : n.members)
    for (int c = 0; c < g.order(); ++c)
      if (!n.contains(g.conj(x, c))) return false;
  return true;
}

// Smallest normal subgroup of the parent containing the seeds.
inline Subgroup normal_closure(GroupPtr parent, std::span<const int> seeds) {
  const FiniteGroup& g = *parent;
  std::vector<int> current(seeds.begin(), seeds.end());
  for (;;) {
    Subgroup s = subgroup_generated(parent, current);
    std::set<int> extended(s.members.begin(), s.members.end());
    bool grew = false;
    for (int x : s.members)
      for (int c = 0; c < g.order(); ++c)
        if (extended.insert(g.conj(x, c)).second) grew = true;
    if (!grew) return s;
    current.assign(extended.begin(), extended.end());
  }
}

namespace detail {

// Support of the left-normed n-fold commutator map over H^n: the set
// S_n = { [h1,...,hn] : hi in H }, computed level by level as
// S_1 = H, S_{k+1} = { [v, h] : v in S_k, h in H }. This visits exactly the
// values brute-force enumeration would, one representative per value.
inline std::vector<int> n_fold_commutator_support(const Subgroup& h, int n) {
  const FiniteGroup& g = *h.parent;
  std::vector<char> in(g.order(), 0);
  std::vector<int> support = h.members;
  for (int level = 2; level <= n; ++level) {
    std::fill(in.begin(), in.end(), 0);
    for (int v : support)
      for (int x : h.members) in[commutator(g, v, x)] = 1;
    support.clear();
    for (int v = 0; v < g.order(); ++v)
      if (in[v]) support.push_back(v);
  }
  return support;
}

}  // namespace detail

// [nH, G]: the subgroup generated by all [h1,...,hn,g] with hi in H and g
// ranging over the parent. `normal_closure_reading` switches to the normal
// closure of the same generating set.
inline Subgroup n_fold_commutator_subgroup(
    const Subgroup& h, int n, std::uint64_t budget = 100'000'000,
    bool normal_closure_reading = false) {
  if (n < 1) throw InvalidParameter("n_fold_commutator_subgroup: n must be >= 1");
  const FiniteGroup& g = *h.parent;
  BigInt cost = bigint_pow(h.order(), n) * g.order();
  if (cost > BigInt(budget))
    throw BudgetExceeded("n_fold_commutator_subgroup: |H|^n * |G| = " +
                         cost.str() + " exceeds budget " +
                         std::to_string(budget));
  std::vector<int> inner = detail::n_fold_commutator_support(h, n);
  std::vector<char> in(g.order(), 0);
  for (int v : inner)
    for (int x = 0; x < g.order(); ++x) in[commutator(g, v, x)] = 1;
  std::vector<int> generators;
  for (int v = 0; v < g.order(); ++v)
    if (in[v]) generators.push_back(v);
  if (normal_closure_reading) return normal_closure(h.parent, generators);
  return subgroup_generated(h.parent, generators);
}

inline bool subgroup_is_abelian(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  for (std::size_t i = 0; i < h.members.size(); ++i)
    for (std::size_t j = i + 1; j < h.members.size(); ++j)
      if (g.mul(h.members[i], h.members[j]) !=
          g.mul(h.members[j], h.members[i]))
        return false;
  return true;
}

// |H| / |G| in lowest terms; the counting-measure weight of H.
inline Rational haar_measure_of_subgroup(const GroupPtr& parent,
                                         const Subgroup& h) {
  if (h.parent != parent)
    throw ParentMismatch("haar_measure_of_subgroup: H is not a subgroup of G");
  return Rational(BigInt(h.order()), BigInt(parent->order()));
}

// ---------------------------------------------------------------------------
// Reification: a subgroup as a standalone FiniteGroup plus index maps.

struct EmbeddedGroup {
  GroupPtr group;               // the subgroup as a group in its own right
  std::vector<int> to_parent;   // new index -> parent index
  std::vector<int> from_parent; // parent index -> new index, -1 outside

  // Map a subgroup of the parent that lies inside this embedded group.
  Subgroup map_into(const Subgroup& sub) const {
    std::vector<int> members;
    members.reserve(sub.members.size());
    for (int x : sub.members) {
      if (from_parent[x] < 0)
        throw InvalidParameter("map_into: subgroup not contained");
      members.push_back(from_parent[x]);
    }
    std::sort(members.begin(), members.end());
    return Subgroup{group, std::move(members)};
  }
};

inline EmbeddedGroup reify(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const int n = h.order();
  EmbeddedGroup out;
  out.to_parent = h.members;  // sorted, so parent identity 0 maps to 0
  out.from_parent.assign(g.order(), -1);
  for (int i = 0; i < n; ++i) out.from_parent[h.members[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = g.mul(h.members[i], h.members[j]);
      if (out.from_parent[p] < 0)
        throw NotAGroup("member set is not closed");
      table[static_cast<std::size_t>(i) * n + j] = out.from_parent[p];
    }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(g.label(h.members[i]));
  }
  out.group =
      std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
  return out;
}

}  // namespace grpdeg
