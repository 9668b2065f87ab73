// The three exact algorithms for the relative n-th nilpotency degree
// d^(n)(H,G): brute-force tuple enumeration (the oracle), centralizer
// summation, and the commutator-distribution dynamic program. All values are
// exact Rationals over arbitrary-precision counts.
#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "grpdeg/rational.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

inline constexpr std::uint64_t kDefaultEvaluationBudget = 100'000'000;

enum class DegreeMethod { BruteForce, Centralizer, DistributionDP, MonteCarlo };

struct DegreeValue {
  Rational value;
  int n = 1;
  DegreeMethod method = DegreeMethod::BruteForce;
  std::optional<BigInt> favorable;
  std::optional<BigInt> total;
};

// |C_G(x)| for every x, by one pass over the multiplication table.
inline std::vector<int> centralizer_sizes(const FiniteGroup& g) {
  std::vector<int> sizes(g.order(), 0);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++sizes[x];
  return sizes;
}

namespace detail {

// Walks all tuples (h1,...,hn) in H^n in odometer order, keeping the prefix
// commutators [h1,...,hk] incremental, and calls visit(value, h_mult) once
// per tuple where value = [h1,...,hn].
template <typename Visit>
void for_each_tuple_commutator(const Subgroup& h, int n, int first_lo,
                               int first_hi, Visit&& visit) {
  const FiniteGroup& g = *h.parent;
  const auto& m = h.members;
  std::vector<int> idx(n, 0);
  std::vector<int> prefix(n, 0);
  for (int first = first_lo; first < first_hi; ++first) {
    idx.assign(n, 0);
    idx[0] = first;
    prefix[0] = m[first];
    for (int k = 1; k < n; ++k)
      prefix[k] = commutator(g, prefix[k - 1], m[0]);
    for (;;) {
      visit(prefix[n - 1]);
      int k = n - 1;
      while (k >= 1 && idx[k] + 1 == h.order()) {
        idx[k] = 0;
        --k;
      }
      if (k < 1) break;  // first coordinate is fixed per call
      ++idx[k];
      for (int j = k; j < n; ++j) {
        if (j > k) idx[j] = 0;
        prefix[j] = commutator(g, prefix[j - 1], m[idx[j]]);
      }
    }
  }
}

inline void check_budget(const BigInt& cost, std::uint64_t budget,
                         const char* what) {
  if (cost > BigInt(budget))
    throw BudgetExceeded(std::string(what) + ": " + cost.str() +
                         " evaluations exceed budget " +
                         std::to_string(budget));
}

}  // namespace detail

// Literal counting of favorable tuples (h1,...,hn,g): this is the oracle the
// other methods are checked against. Parallelizes over the first tuple
// coordinate; partial counts are merged in coordinate order, so the result
// is identical for any thread count.
inline DegreeValue relative_degree_bruteforce(
    const Subgroup& h, int n, std::uint64_t budget = kDefaultEvaluationBudget,
    int threads = 1) {
  if (n < 1) throw InvalidParameter("degree: n must be >= 1");
  const FiniteGroup& g = *h.parent;
  const BigInt total = bigint_pow(h.order(), n) * g.order();
  detail::check_budget(total, budget, "relative_degree_bruteforce");

  auto count_first_range = [&](int lo, int hi) -> std::uint64_t {
    std::uint64_t count = 0;
    detail::for_each_tuple_commutator(h, n, lo, hi, [&](int value) {
      for (int x = 0; x < g.order(); ++x)
        if (commutator(g, value, x) == 0) ++count;
    });
    return count;
  };

  BigInt favorable = 0;
  if (threads <= 1 || h.order() == 1) {
    favorable = count_first_range(0, h.order());
  } else {
    std::vector<std::uint64_t> partial(h.order(), 0);
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        int first = next.fetch_add(1);
        if (first >= h.order()) return;
        partial[first] = count_first_range(first, first + 1);
      }
    };
    std::vector<std::thread> pool;
    int spawned = std::min(threads, h.order());
    pool.reserve(spawned);
    for (int t = 0; t < spawned; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::uint64_t c : partial) favorable += c;
  }
  return DegreeValue{Rational(favorable, total), n, DegreeMethod::BruteForce,
                     favorable, total};
}

// Sum of |C_G([h1,...,hn])| over H^n, divided by |H|^n |G|. Centralizer
// sizes are memoized per element index.
inline DegreeValue relative_degree_centralizer(
    const Subgroup& h, int n, std::uint64_t budget = kDefaultEvaluationBudget) {
  if (n < 1) throw InvalidParameter("degree: n must be >= 1");
  const FiniteGroup& g = *h.parent;
  detail::check_budget(bigint_pow(h.order(), n), budget,
                       "relative_degree_centralizer");
  std::vector<int> csize(g.order(), -1);
  auto centralizer_size = [&](int x) {
    if (csize[x] < 0) {
      int count = 0;
      for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) ++count;
      csize[x] = count;
    }
    return csize[x];
  };
  BigInt favorable = 0;
  std::uint64_t chunk = 0;
  detail::for_each_tuple_commutator(h, n, 0, h.order(), [&](int value) {
    chunk += static_cast<std::uint64_t>(centralizer_size(value));
    if (chunk >= (1ULL << 62)) {
      favorable += chunk;
      chunk = 0;
    }
  });
  favorable += chunk;
  const BigInt total = bigint_pow(h.order(), n) * g.order();
  return DegreeValue{Rational(favorable, total), n, DegreeMethod::Centralizer,
                     favorable, total};
}

// The pushforward of the uniform measure on H^k through the iterated
// commutator: counts[v] = #{ (h1,...,hk) in H^k : [h1,...,hk] = v }.
struct CommutatorDistribution {
  GroupPtr group;
  std::vector<BigInt> counts;
  int depth = 1;
  BigInt tuple_count;  // |H|^depth; always equals the sum of counts
};

// Depth 1 is the indicator of H; each further level applies
// counts'[ [v,h] ] += counts[v] for h in H. Cost is O(|G| |H|) per level
// instead of |H|^k for enumeration.
inline CommutatorDistribution commutator_distribution(const Subgroup& h,
                                                      int k) {
  if (k < 1) throw InvalidParameter("commutator_distribution: k must be >= 1");
  const FiniteGroup& g = *h.parent;
  CommutatorDistribution dist{h.parent, std::vector<BigInt>(g.order(), 0), 1,
                              BigInt(h.order())};
  for (int x : h.members) dist.counts[x] = 1;
  for (int level = 2; level <= k; ++level) {
    std::vector<BigInt> next(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
      if (dist.counts[v] == 0) continue;
      for (int x : h.members) next[commutator(g, v, x)] += dist.counts[v];
    }
    dist.counts = std::move(next);
    dist.depth = level;
    dist.tuple_count *= h.order();
  }
  return dist;
}

// d^(n)(H,G) via the distribution paired with the final variable g through
// centralizer sizes. Exact; agrees with the brute-force oracle everywhere.
inline DegreeValue relative_degree_dp(const Subgroup& h, int n) {
  if (n < 1) throw InvalidParameter("degree: n must be >= 1");
  const FiniteGroup& g = *h.parent;
  CommutatorDistribution dist = commutator_distribution(h, n);
  std::vector<int> csize = centralizer_sizes(g);
  BigInt favorable = 0;
  for (int v = 0; v < g.order(); ++v)
    if (dist.counts[v] != 0) favorable += dist.counts[v] * csize[v];
  const BigInt total = dist.tuple_count * g.order();
  return DegreeValue{Rational(favorable, total), n,
                     DegreeMethod::DistributionDP, favorable, total};
}

// d^(n)(G) = d^(n)(G, G); d(G) is the n = 1 case.
inline DegreeValue degree(const GroupPtr& g, int n = 1) {
  return relative_degree_dp(whole_group(g), n);
}

}  // namespace grpdeg
