// Finite groups as validated Cayley tables. The identity is always element
// index 0; constructors re-index where necessary. Groups are immutable after
// construction and shared through GroupPtr, so they are safe to use from
// concurrent workers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grpdeg/errors.hpp"

namespace grpdeg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupBuildOptions {
  // Associativity is checked over all order^3 triples up to this order and
  // over 10*order^2 deterministically sampled triples above it.
  int full_associativity_cap = 256;
};

namespace detail {

// splitmix64 finalizer; used wherever the library needs a deterministic
// pseudo-random stream that is a pure function of its inputs.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

class FiniteGroup {
 public:
  // Validates the group axioms; `table` is row-major order x order with the
  // identity already at index 0. Use from_cayley_table for raw user input.
  FiniteGroup(int order, std::vector<int> table,
              std::vector<std::string> labels = {},
              const GroupBuildOptions& options = {})
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    validate(options);
  }

  int order() const noexcept { return order_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  int inv(int a) const { return inverses_[a]; }

  // g^{-1} x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }

  bool has_labels() const noexcept { return !labels_.empty(); }

  std::string label(int i) const {
    if (i >= 0 && i < static_cast<int>(labels_.size())) return labels_[i];
    return "#" + std::to_string(i);
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  void validate(const GroupBuildOptions& options) {
    const int n = order_;
    if (n <= 0) throw MalformedTable("order must be positive");
    if (table_.size() != static_cast<std::size_t>(n) * n)
      throw MalformedTable("table is not order x order");
    for (int v : table_)
      if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
      throw MalformedTable("labels length does not match order");

    for (int j = 0; j < n; ++j)
      if (mul(0, j) != j)
        throw NotAGroup("element 0 is not a left identity at " +
                        std::to_string(j));
    for (int i = 0; i < n; ++i)
      if (mul(i, 0) != i)
        throw NotAGroup("element 0 is not a right identity at " +
                        std::to_string(i));

    // Latin square: each row and column is a permutation of 0..n-1.
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n; ++j) {
        int v = mul(i, j);
        if (seen[v])
          throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (int j = 0; j < n; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < n; ++i) {
        int v = mul(i, j);
        if (seen[v])
          throw NotAGroup("column " + std::to_string(j) +
                          " is not a permutation");
        seen[v] = 1;
      }
    }

    inverses_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (mul(i, j) == 0) {
          if (mul(j, i) != 0)
            throw NotAGroup("element " + std::to_string(i) +
                            " has no two-sided inverse");
          inverses_[i] = j;
          break;
        }
      }
      if (inverses_[i] < 0)
        throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }

    auto check_triple = [this](int a, int b, int c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n <= options.full_associativity_cap) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
      // Deterministic sample keyed on the order.
      std::uint64_t state = 0x5ca1ab1eULL ^ static_cast<std::uint64_t>(n);
      std::uint64_t samples = 10ULL * n * n;
      for (std::uint64_t s = 0; s < samples; ++s) {
        int a = static_cast<int>(detail::mix64(state ^ (3 * s)) % n);
        int b = static_cast<int>(detail::mix64(state ^ (3 * s + 1)) % n);
        int c = static_cast<int>(detail::mix64(state ^ (3 * s + 2)) % n);
        check_triple(a, b, c);
      }
    }
  }

  int order_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
};

// [x,y] = x^{-1} y^{-1} x y
inline int commutator(const FiniteGroup& g, int x, int y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

// Left-normed [x1,...,xk] = [[x1,...,x(k-1)], xk]; a single element is
// itself.
inline int iterated_commutator(const FiniteGroup& g, std::span<const int> xs) {
  if (xs.empty())
    throw InvalidParameter("iterated_commutator: empty element list");
  int acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = commutator(g, acc, xs[i]);
  return acc;
}

inline int element_order(const FiniteGroup& g, int x) {
  int order = 1;
  for (int acc = x; acc != 0; acc = g.mul(acc, x)) ++order;
  return order;
}

// ---------------------------------------------------------------------------
// Constructors

inline GroupPtr from_cayley_table(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels = {},
                                  const GroupBuildOptions& options = {}) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw MalformedTable("empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw MalformedTable("table is ragged");
    for (int v : row) {
      if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
      flat.push_back(v);
    }
  }

  // Locate the two-sided identity, then re-index it to 0 by swapping.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = flat[static_cast<std::size_t>(i) * n + j] == j &&
           flat[static_cast<std::size_t>(j) * n + i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw NotAGroup("no identity element");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);  // perm is its own inverse

  std::vector<int> relabeled(flat.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      relabeled[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[flat[static_cast<std::size_t>(i) * n + j]];

  if (!labels.empty()) {
    if (labels.size() != static_cast<std::size_t>(n))
      throw MalformedTable("labels length does not match order");
    std::vector<std::string> moved(n);
    for (int i = 0; i < n; ++i) moved[perm[i]] = labels[i];
    labels = std::move(moved);
  }

  return std::make_shared<FiniteGroup>(n, std::move(relabeled),
                                       std::move(labels), options);
}

inline GroupPtr cyclic(int n) {
  if (n < 1) throw InvalidParameter("cyclic: n must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

// Order 2n. Elements 0..n-1 are the rotations r^i, elements n..2n-1 are the
// reflections r^i s, in that order.
inline GroupPtr dihedral(int n) {
  if (n < 1) throw InvalidParameter("dihedral: n must be >= 1");
  const int m = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  auto rot = [n](int i) { return ((i % n) + n) % n; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int v;
      if (i < n && j < n) v = rot(i + j);                // r^i r^j
      else if (i < n) v = n + rot(i + (j - n));          // r^i (r^j s)
      else if (j < n) v = n + rot((i - n) - j);          // (r^i s) r^j
      else v = rot((i - n) - (j - n));                   // (r^i s)(r^j s)
      table[static_cast<std::size_t>(i) * m + j] = v;
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[n + i] =
        i == 0 ? "s" : (i == 1 ? "r s" : "r^" + std::to_string(i) + " s");
  }
  return std::make_shared<FiniteGroup>(m, std::move(table), std::move(labels));
}

namespace detail {

inline std::string cycle_label(const std::vector<int>& image) {
  const int d = static_cast<int>(image.size());
  std::vector<char> done(d, 0);
  std::string out;
  for (int start = 0; start < d; ++start) {
    if (done[start] || image[start] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = image[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// mul(a, b) applies a first, then b.
inline GroupPtr group_from_permutations(std::vector<std::vector<int>> elements) {
  const int n = static_cast<int>(elements.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> composed(elements[0].size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (std::size_t x = 0; x < composed.size(); ++x)
        composed[x] = elements[j][elements[i][x]];
      auto it = index.find(composed);
      if (it == index.end())
        throw NotAGroup("permutation set is not closed under composition");
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_label(elements[i]);
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

inline bool is_even_permutation(const std::vector<int>& p) {
  int transpositions = 0;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (std::size_t x = i; !done[x]; x = p[x]) {
      done[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace detail

// All permutations of {0..n-1} in lexicographic order of their image
// arrays; the identity is element 0.
inline GroupPtr symmetric(int n) {
  if (n < 1) throw InvalidParameter("symmetric: n must be >= 1");
  if (n > 7) throw InvalidParameter("symmetric: order would exceed the cap");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elements;
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::group_from_permutations(std::move(elements));
}

inline GroupPtr alternating(int n) {
  if (n < 3) throw InvalidParameter("alternating: n must be >= 3");
  if (n > 7) throw InvalidParameter("alternating: order would exceed the cap");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elements;
  do {
    if (detail::is_even_permutation(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::group_from_permutations(std::move(elements));
}

// Order 4m: <a, b | a^{2m} = 1, b^2 = a^m, b^{-1} a b = a^{-1}>.
// Elements 0..2m-1 are a^i, elements 2m..4m-1 are a^i b. dicyclic(2) is the
// quaternion group Q8.
inline GroupPtr dicyclic(int m) {
  if (m < 2) throw InvalidParameter("dicyclic: m must be >= 2");
  const int n = 4 * m;
  const int c = 2 * m;
  auto rot = [c](int i) { return ((i % c) + c) % c; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v;
      if (i < c && j < c) v = rot(i + j);                    // a^i a^j
      else if (i < c) v = c + rot(i + (j - c));              // a^i (a^j b)
      else if (j < c) v = c + rot((i - c) - j);              // (a^i b) a^j
      else v = rot((i - c) - (j - c) + m);                   // b^2 = a^m
      table[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < c; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
    labels[c + i] =
        i == 0 ? "b" : (i == 1 ? "a b" : "a^" + std::to_string(i) + " b");
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

// Order p^3: upper unitriangular 3x3 matrices over F_p, written as triples
// (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). Element index
// is a*p^2 + b*p + c.
inline GroupPtr heisenberg(int p) {
  if (p < 2) throw InvalidParameter("heisenberg: p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidParameter("heisenberg: p must be prime");
  const int n = p * p * p;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        labels[idx(a, b, c)] = "(" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) +
                               ")";
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              table[static_cast<std::size_t>(idx(a, b, c)) * n +
                    idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
      }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

// Row-major pairing: (i1, i2) -> i1 * |G2| + i2.
inline GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  if (!g1 || !g2) throw InvalidParameter("direct_product: null group");
  const int n1 = g1->order(), n2 = g2->order();
  const int n = n1 * n2;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int j1 = 0; j1 < n1; ++j1)
        for (int j2 = 0; j2 < n2; ++j2)
          table[static_cast<std::size_t>(i1 * n2 + i2) * n + (j1 * n2 + j2)] =
              g1->mul(i1, j1) * n2 + g2->mul(i2, j2);
  std::vector<std::string> labels(n);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < n2; ++i2)
      labels[i1 * n2 + i2] = "(" + g1->label(i1) + "," + g2->label(i2) + ")";
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels));
}

// Breadth-first closure of the generators under composition, starting from
// the identity (element 0). Finite order makes inverses reachable as powers.
inline GroupPtr from_permutation_generators(
    int degree, const std::vector<std::vector<int>>& generators,
    int order_cap = 10080) {
  if (degree < 1) throw InvalidParameter("degree must be >= 1");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw NotAPermutation("generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw NotAPermutation("generator is not a bijection on 0..degree-1");
      seen[v] = 1;
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> elements{identity};
  std::set<std::vector<int>> seen{identity};
  std::queue<std::size_t> todo;
  todo.push(0);
  std::vector<int> next(degree);
  while (!todo.empty()) {
    const std::vector<int> current = elements[todo.front()];
    todo.pop();
    for (const auto& g : generators) {
      for (int x = 0; x < degree; ++x) next[x] = g[current[x]];
      if (seen.insert(next).second) {
        if (static_cast<int>(elements.size()) >= order_cap)
          throw OrderCapExceeded("closure exceeds order cap " +
                                 std::to_string(order_cap));
        elements.push_back(next);
        todo.push(elements.size() - 1);
      }
    }
  }
  return detail::group_from_permutations(std::move(elements));
}

// ---------------------------------------------------------------------------
// Structure probe

struct StructureProbe {
  bool is_abelian = false;
  bool is_cyclic = false;
  int exponent = 1;
  std::map<int, int> element_order_census;  // order -> count

  // "cyclic of order 2" and "2-elementary abelian of rank 2" are the two
  // shapes the 3/4 and 5/8 classifications need.
  bool cyclic_of_order_2(int group_order) const {
    return group_order == 2;
  }
  bool elementary_abelian_rank_2(int group_order) const {
    return group_order == 4 && exponent == 2;
  }
};

inline StructureProbe structure_probe(const FiniteGroup& g) {
  StructureProbe probe;
  const int n = g.order();
  probe.is_abelian = true;
  for (int a = 0; a < n && probe.is_abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        probe.is_abelian = false;
        break;
      }
  long long exponent = 1;
  for (int x = 0; x < n; ++x) {
    int ord = element_order(g, x);
    ++probe.element_order_census[ord];
    exponent = std::lcm(exponent, static_cast<long long>(ord));
    if (ord == n) probe.is_cyclic = true;
  }
  probe.exponent = static_cast<int>(exponent);
  if (n == 1) probe.is_cyclic = true;
  return probe;
}

}  // namespace grpdeg
