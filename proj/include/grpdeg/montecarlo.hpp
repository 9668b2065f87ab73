// Seeded Monte Carlo estimation of d^(n)(H,G) for groups beyond exact
// budgets. Sampling uses a counter-based generator: every 64-bit draw is a
// pure function of (seed, sample index, coordinate, attempt), so estimates
// are bit-identical for any worker partitioning.
#pragma once

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "grpdeg/group.hpp"
#include "grpdeg/subgroup.hpp"

namespace grpdeg {

struct McEstimate {
  double point = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double stderr_estimate = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 1.0;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t sample,
                                  std::uint32_t coordinate,
                                  std::uint32_t attempt) {
  std::uint64_t z = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  z = mix64(z ^ sample);
  z = mix64(z ^ ((static_cast<std::uint64_t>(coordinate) << 32) | attempt));
  return z;
}

// Uniform value in [0, m) with rejection to remove modulo bias; the accept
// region is the largest multiple of m below 2^64 (no rejection needed when
// m is a power of two).
inline std::uint64_t uniform_below(std::uint64_t m, std::uint64_t seed,
                                   std::uint64_t sample,
                                   std::uint32_t coordinate) {
  const std::uint64_t remainder = (UINT64_MAX % m + 1) % m;  // 2^64 mod m
  for (std::uint32_t attempt = 0;; ++attempt) {
    std::uint64_t r = counter_draw(seed, sample, coordinate, attempt);
    if (remainder == 0 || r <= UINT64_MAX - remainder) return r % m;
  }
}

struct WilsonInterval {
  double low, high;
};

// 95% Wilson score interval; well behaved near proportions of 0 and 1.
inline WilsonInterval wilson95(std::uint64_t hits, std::uint64_t samples) {
  const double z = 1.959963984540054;
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval w{centre - half, centre + half};
  if (w.low < 0.0) w.low = 0.0;
  if (w.high > 1.0) w.high = 1.0;
  return w;
}

}  // namespace detail

// Draws (h1,...,hn,g) uniformly and independently, counting tuples whose
// iterated commutator is the identity. Reproducible bit-exactly from
// (H, G, n, samples, seed) regardless of the thread count.
inline McEstimate estimate_degree(const Subgroup& h, int n,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads = 1) {
  if (n < 1) throw InvalidParameter("estimate_degree: n must be >= 1");
  if (samples < 1) throw InvalidParameter("estimate_degree: samples must be >= 1");
  const FiniteGroup& g = *h.parent;
  const std::uint64_t subgroup_order = static_cast<std::uint64_t>(h.order());
  const std::uint64_t group_order = static_cast<std::uint64_t>(g.order());

  auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::uint64_t hits = 0;
    std::vector<int> tuple(n + 1);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (int c = 0; c < n; ++c)
        tuple[c] = h.members[detail::uniform_below(subgroup_order, seed, s,
                                                   static_cast<std::uint32_t>(c))];
      tuple[n] = static_cast<int>(detail::uniform_below(
          group_order, seed, s, static_cast<std::uint32_t>(n)));
      if (iterated_commutator(g, tuple) == 0) ++hits;
    }
    return hits;
  };

  std::uint64_t hits = 0;
  if (threads <= 1 || samples < 1024) {
    hits = count_range(0, samples);
  } else {
    const int workers = threads;
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t lo = samples * t / workers;
      const std::uint64_t hi = samples * (t + 1) / workers;
      pool.emplace_back([&partial, t, lo, hi, &count_range]() {
        partial[t] = count_range(lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    for (std::uint64_t c : partial) hits += c;
  }

  McEstimate est;
  est.samples = samples;
  est.hits = hits;
  est.seed = seed;
  est.point = static_cast<double>(hits) / static_cast<double>(samples);
  est.stderr_estimate = std::sqrt(est.point * (1.0 - est.point) /
                                  static_cast<double>(samples));
  auto ci = detail::wilson95(hits, samples);
  est.ci95_low = ci.low;
  est.ci95_high = ci.high;
  return est;
}

inline McEstimate estimate_degree(const GroupPtr& g, int n,
                                  std::uint64_t samples, std::uint64_t seed,
                                  int threads = 1) {
  return estimate_degree(whole_group(g), n, samples, seed, threads);
}

}  // namespace grpdeg
