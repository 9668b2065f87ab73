// One executable checker per theorem of the bound catalogue. Each checker
// evaluates its hypotheses and the exact LHS/RHS on a concrete
// configuration and returns a BoundReport; run_suite drives every checker
// over a corpus of groups, their enumerated subgroups and normal subgroups.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "grpdeg/degree.hpp"
#include "grpdeg/quotient.hpp"
#include "grpdeg/subgroup.hpp"
#include "grpdeg/subgroup_enum.hpp"

namespace grpdeg {

enum class TheoremId {
  T2_4i, T2_4ii, L2_5, T2_6, T2_7i, T2_7ii,
  C2_8i, C2_8ii, C2_8iii, C2_9, L2_10, T2_11,
  T3_1, T3_2, C3_3, T3_4, T3_5, C3_6,
  C4_1, C4_2, T4_3i, T4_3ii, T4_3iii, MONOTONE_N,
};

inline constexpr int kTheoremCount = 24;

inline const char* theorem_id_name(TheoremId id) {
  static const char* names[kTheoremCount] = {
      "T2_4i", "T2_4ii", "L2_5",  "T2_6",  "T2_7i",  "T2_7ii",
      "C2_8i", "C2_8ii", "C2_8iii", "C2_9", "L2_10", "T2_11",
      "T3_1",  "T3_2",   "C3_3",  "T3_4",  "T3_5",   "C3_6",
      "C4_1",  "C4_2",   "T4_3i", "T4_3ii", "T4_3iii", "MONOTONE_N"};
  return names[static_cast<int>(id)];
}

enum class Verdict { Holds, HoldsWithEquality, VacuousHypothesisFailed, Violated };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::HoldsWithEquality: return "HoldsWithEquality";
    case Verdict::VacuousHypothesisFailed: return "VacuousHypothesisFailed";
    case Verdict::Violated: return "VIOLATED";
  }
  return "?";
}

struct CheckConfig {
  std::string group;
  std::optional<std::vector<int>> subgroup;         // H (or A for C2_9)
  std::optional<std::vector<int>> subgroup2;        // B for C2_9
  std::optional<std::vector<int>> normal_subgroup;  // N
  std::optional<int> n;
};

struct Hypotheses {
  bool all = true;
  std::vector<std::pair<std::string, bool>> detail;
  bool add(const std::string& name, bool ok) {
    detail.emplace_back(name, ok);
    all = all && ok;
    return ok;
  }
};

using Witness = std::map<std::string, std::string>;

struct BoundReport {
  TheoremId theorem_id{};
  CheckConfig configuration;
  Hypotheses hypotheses_met;
  std::optional<Rational> lhs, rhs;
  Verdict verdict = Verdict::Holds;
  Witness witness;
};

namespace detail {

// Distribution ladders per subgroup of one fixed parent group, grown level
// by level so that d^(n) and d^(n+1) for the same H share work.
class DegreeLadder {
 public:
  explicit DegreeLadder(GroupPtr g)
      : group_(std::move(g)), csize_(centralizer_sizes(*group_)) {}

  const std::vector<int>& centralizer_size_table() const { return csize_; }

  Rational relative_degree(const std::vector<int>& members, int n) {
    if (n < 1) throw InvalidParameter("degree: n must be >= 1");
    auto key = std::make_pair(members, n);
    auto hit = values_.find(key);
    if (hit != values_.end()) return hit->second;

    const FiniteGroup& g = *group_;
    auto& levels = levels_[members];
    if (levels.empty()) {
      std::vector<BigInt> indicator(g.order(), 0);
      for (int x : members) indicator[x] = 1;
      levels.push_back(std::move(indicator));
    }
    while (static_cast<int>(levels.size()) < n) {
      const std::vector<BigInt>& prev = levels.back();
      std::vector<BigInt> next(g.order(), 0);
      for (int v = 0; v < g.order(); ++v) {
        if (prev[v] == 0) continue;
        for (int x : members) next[commutator(g, v, x)] += prev[v];
      }
      levels.push_back(std::move(next));
    }
    const std::vector<BigInt>& counts = levels[n - 1];
    BigInt favorable = 0;
    for (int v = 0; v < g.order(); ++v)
      if (counts[v] != 0) favorable += counts[v] * csize_[v];
    BigInt total = bigint_pow(members.size(), n) * g.order();
    Rational value(favorable, total);
    values_.emplace(std::move(key), value);
    return value;
  }

 private:
  GroupPtr group_;
  std::vector<int> csize_;
  std::map<std::vector<int>, std::vector<std::vector<BigInt>>> levels_;
  std::map<std::pair<std::vector<int>, int>, Rational> values_;
};

}  // namespace detail

// Shared per-group state for the checkers: centralizer masks, the center,
// the upper central series, and caches for reified subgroups, quotients and
// their degree ladders. Groups must have order <= 64 (the default corpus is
// capped far below that); member sets are handled as 64-bit masks.
// Checkers are deterministic but fill these caches, so an instance belongs
// to one worker; run_suite keeps one per group.
class GroupAnalysis {
 public:
  GroupAnalysis(std::string spec, GroupPtr g,
                std::uint64_t budget = kDefaultEvaluationBudget)
      : spec_(std::move(spec)),
        group_(std::move(g)),
        budget_(budget),
        ladder_(group_) {
    const FiniteGroup& gr = *group_;
    if (gr.order() > 64)
      throw InvalidParameter("bound suite supports groups of order <= 64");
    whole_ = whole_group(group_);
    center_ = center(group_);
    series_ = upper_central_series(group_);
    group_abelian_ = center_.order() == gr.order();
    centralizer_mask_.assign(gr.order(), 0);
    for (int x = 0; x < gr.order(); ++x)
      for (int y = 0; y < gr.order(); ++y)
        if (gr.mul(x, y) == gr.mul(y, x))
          centralizer_mask_[x] |= std::uint64_t{1} << y;
  }

  const std::string& spec() const { return spec_; }
  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  const Subgroup& whole() const { return whole_; }
  const Subgroup& center_subgroup() const { return center_; }
  bool group_abelian() const { return group_abelian_; }
  std::uint64_t budget() const { return budget_; }

  std::optional<int> nil_class() const {
    if (!series_.back().is_whole_group()) return std::nullopt;
    return static_cast<int>(series_.size()) - 1;
  }

  // Z_k(G); saturates at the hypercenter once the series stabilizes.
  const Subgroup& z_term(int k) const {
    int idx = std::min<int>(k, static_cast<int>(series_.size()) - 1);
    return series_[idx];
  }

  std::uint64_t member_mask(const std::vector<int>& members) const {
    std::uint64_t mask = 0;
    for (int x : members) mask |= std::uint64_t{1} << x;
    return mask;
  }

  std::uint64_t centralizer_mask(int x) const { return centralizer_mask_[x]; }
  int centralizer_size(int x) const {
    return ladder_.centralizer_size_table()[x];
  }

  Subgroup k_of(const Subgroup& h) const { return intersection(center_, h); }

  // d^(n)(H, G)
  Rational rel_degree(const Subgroup& h, int n) {
    require_member(h);
    return ladder_.relative_degree(h.members, n);
  }

  // d^(n)(G)
  Rational group_degree(int n) {
    return ladder_.relative_degree(whole_.members, n);
  }

  // d^(n)(H) with H treated as a group in its own right.
  Rational sub_degree(const Subgroup& h, int n) {
    require_member(h);
    auto& embedded = reified(h.members);
    auto it = sub_ladders_.find(h.members);
    if (it == sub_ladders_.end())
      it = sub_ladders_.emplace(h.members, detail::DegreeLadder(embedded.group))
               .first;
    return it->second.relative_degree(whole_group(embedded.group).members, n);
  }

  struct CentralQuotient {
    QuotientGroup quotient;          // (H as group) / (H ∩ Z(G))
    std::optional<int> nil_class;
    detail::DegreeLadder ladder;
  };

  // H / (H ∩ Z(G)) with its degree ladder and nilpotency class.
  CentralQuotient& central_quotient(const Subgroup& h) {
    require_member(h);
    auto it = central_quotients_.find(h.members);
    if (it != central_quotients_.end()) return it->second;
    auto& embedded = reified(h.members);
    Subgroup k = embedded.map_into(k_of(h));
    QuotientGroup q = quotient(k);
    std::optional<int> cls = nilpotency_class(q.group);
    detail::DegreeLadder ladder(q.group);
    it = central_quotients_
             .emplace(h.members, CentralQuotient{std::move(q), cls,
                                                 std::move(ladder)})
             .first;
    return it->second;
  }

  Rational central_quotient_degree(const Subgroup& h, int n) {
    auto& cq = central_quotient(h);
    return cq.ladder.relative_degree(whole_group(cq.quotient.group).members, n);
  }

  const QuotientGroup& quotient_by(const std::vector<int>& n_members) {
    auto it = quotients_.find(n_members);
    if (it == quotients_.end()) {
      Subgroup n{group_, n_members};
      it = quotients_.emplace(n_members, quotient(n)).first;
    }
    return it->second;
  }

  // d^(n)(H/N, G/N) for N normal in G, N <= H.
  Rational quotient_rel_degree(const std::vector<int>& n_members,
                               const Subgroup& h, int n) {
    require_member(h);
    const QuotientGroup& q = quotient_by(n_members);
    auto it = quotient_ladders_.find(n_members);
    if (it == quotient_ladders_.end())
      it = quotient_ladders_.emplace(n_members, detail::DegreeLadder(q.group))
               .first;
    return it->second.relative_degree(q.project(h).members, n);
  }

  // [nH, G] under the generated-subgroup or the normal-closure reading.
  const Subgroup& n_fold(const Subgroup& h, int n, bool normal_closure_reading) {
    require_member(h);
    auto key = std::make_tuple(h.members, n, normal_closure_reading);
    auto it = n_fold_.find(key);
    if (it == n_fold_.end())
      it = n_fold_
               .emplace(key, n_fold_commutator_subgroup(
                                 h, n, budget_, normal_closure_reading))
               .first;
    return it->second;
  }

  const EmbeddedGroup& reified(const std::vector<int>& members) {
    auto it = reified_.find(members);
    if (it == reified_.end())
      it = reified_.emplace(members, reify(Subgroup{group_, members})).first;
    return it->second;
  }

  void require_member(const Subgroup& h) const {
    if (h.parent != group_)
      throw ParentMismatch("subgroup belongs to a different group");
  }

 private:
  std::string spec_;
  GroupPtr group_;
  std::uint64_t budget_;
  detail::DegreeLadder ladder_;
  Subgroup whole_;
  Subgroup center_;
  std::vector<Subgroup> series_;
  bool group_abelian_ = false;
  std::vector<std::uint64_t> centralizer_mask_;
  std::map<std::vector<int>, EmbeddedGroup> reified_;
  std::map<std::vector<int>, detail::DegreeLadder> sub_ladders_;
  std::map<std::vector<int>, CentralQuotient> central_quotients_;
  std::map<std::vector<int>, QuotientGroup> quotients_;
  std::map<std::vector<int>, detail::DegreeLadder> quotient_ladders_;
  std::map<std::tuple<std::vector<int>, int, bool>, Subgroup> n_fold_;
};

// ---------------------------------------------------------------------------
// Checkers

namespace detail {

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string members_str(const std::vector<int>& members) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out;
}

// Verdict for "lhs <= rhs" bounds once all hypotheses hold.
inline Verdict bound_verdict(const Rational& lhs, const Rational& rhs) {
  if (lhs > rhs) return Verdict::Violated;
  return lhs == rhs ? Verdict::HoldsWithEquality : Verdict::Holds;
}

// Verdict for "lhs = rhs" conclusions.
inline Verdict equality_verdict(const Rational& lhs, const Rational& rhs) {
  return lhs == rhs ? Verdict::HoldsWithEquality : Verdict::Violated;
}

inline Rational pow2_bound(int exponent, const BigInt& offset) {
  // (2^exponent - offset) / 2^exponent
  BigInt p = BigInt(1) << exponent;
  return Rational(p - offset, p);
}

}  // namespace detail

// d(H,G) = 3/4 forces H/(Z(G) ∩ H) cyclic of order 2.
inline BoundReport check_T2_4i(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::T2_4i;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  Rational d = a.rel_degree(h, 1);
  r.lhs = d;
  r.hypotheses_met.add("d(H,G) = 3/4", d == Rational(3, 4));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  auto& cq = a.central_quotient(h);
  StructureProbe probe = structure_probe(*cq.quotient.group);
  const int order = cq.quotient.group->order();
  r.witness["quotient_order"] = std::to_string(order);
  r.witness["quotient_exponent"] = std::to_string(probe.exponent);
  r.witness["quotient_is_cyclic"] = detail::bool_str(probe.is_cyclic);
  r.verdict = probe.cyclic_of_order_2(order) ? Verdict::Holds : Verdict::Violated;
  return r;
}

// d(H,G) = 5/8 with H nonabelian forces H/(Z(G) ∩ H) elementary abelian of
// rank 2.
inline BoundReport check_T2_4ii(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::T2_4ii;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  Rational d = a.rel_degree(h, 1);
  r.lhs = d;
  r.hypotheses_met.add("d(H,G) = 5/8", d == Rational(5, 8));
  r.hypotheses_met.add("H nonabelian", !subgroup_is_abelian(h));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  auto& cq = a.central_quotient(h);
  StructureProbe probe = structure_probe(*cq.quotient.group);
  const int order = cq.quotient.group->order();
  r.witness["quotient_order"] = std::to_string(order);
  r.witness["quotient_exponent"] = std::to_string(probe.exponent);
  r.witness["quotient_is_cyclic"] = detail::bool_str(probe.is_cyclic);
  r.verdict = probe.elementary_abelian_rank_2(order) ? Verdict::Holds
                                                     : Verdict::Violated;
  return r;
}

// mu_G(C_G(x)) <= mu_H(C_H(x)) for every x in G.
inline BoundReport check_L2_5(GroupAnalysis& a, const Subgroup& h) {
  a.require_member(h);
  BoundReport r;
  r.theorem_id = TheoremId::L2_5;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  const std::uint64_t h_mask = a.member_mask(h.members);
  const long long group_order = a.group().order();
  const long long sub_order = h.order();
  bool all_equal = true;
  for (int x = 0; x < group_order; ++x) {
    long long cg = a.centralizer_size(x);
    long long ch = std::popcount(a.centralizer_mask(x) & h_mask);
    // cg/|G| <= ch/|H|, cross-multiplied in integers
    if (cg * sub_order > ch * group_order) {
      r.witness["violating_element"] = std::to_string(x);
      r.verdict = Verdict::Violated;
      return r;
    }
    all_equal = all_equal && cg * sub_order == ch * group_order;
  }
  r.witness["equality_for_all_x"] = detail::bool_str(all_equal);
  r.verdict = all_equal ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// d(G) <= d(H,G) <= d(H).
inline BoundReport check_T2_6(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::T2_6;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  Rational d_g = a.group_degree(1);
  Rational d_hg = a.rel_degree(h, 1);
  Rational d_h = a.sub_degree(h, 1);
  r.lhs = d_g;
  r.rhs = d_h;
  r.witness["d_HG"] = d_hg.str();
  if (d_g > d_hg || d_hg > d_h) {
    r.verdict = Verdict::Violated;
    return r;
  }
  r.verdict = (d_g == d_h) ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// d(G) <= 1/2 + mu_G(Z(G))/2.
inline BoundReport check_T2_7i(GroupAnalysis& a) {
  BoundReport r;
  r.theorem_id = TheoremId::T2_7i;
  r.configuration = {a.spec(), {}, {}, {}, {}};
  Rational lhs = a.group_degree(1);
  Rational rhs(BigInt(a.group().order()) + a.center_subgroup().order(),
               BigInt(2) * a.group().order());
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = detail::bound_verdict(lhs, rhs);
  return r;
}

// d(H,G) <= 1/2 + mu_H(K)/2 with K = H ∩ Z(G).
inline BoundReport check_T2_7ii(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::T2_7ii;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  Subgroup k = a.k_of(h);
  Rational lhs = a.rel_degree(h, 1);
  Rational rhs(BigInt(h.order()) + k.order(), BigInt(2) * h.order());
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness["K"] = detail::members_str(k.members);
  r.verdict = detail::bound_verdict(lhs, rhs);
  return r;
}

// Central H in nonabelian G has d(H,G) = 1.
inline BoundReport check_C2_8i(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::C2_8i;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H <= Z(G)", a.center_subgroup().contains_all(h));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, 1);
  r.rhs = Rational(1);
  r.verdict = detail::equality_verdict(*r.lhs, *r.rhs);
  return r;
}

// Noncentral abelian H in nonabelian G: d(H,G) <= 3/4.
inline BoundReport check_C2_8ii(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::C2_8ii;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H not <= Z(G)", !a.center_subgroup().contains_all(h));
  r.hypotheses_met.add("H abelian", subgroup_is_abelian(h));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, 1);
  r.rhs = Rational(3, 4);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// Noncentral nonabelian H in nonabelian G: d(H,G) <= 5/8.
inline BoundReport check_C2_8iii(GroupAnalysis& a, const Subgroup& h) {
  BoundReport r;
  r.theorem_id = TheoremId::C2_8iii;
  r.configuration = {a.spec(), h.members, {}, {}, {}};
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H not <= Z(G)", !a.center_subgroup().contains_all(h));
  r.hypotheses_met.add("H nonabelian", !subgroup_is_abelian(h));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, 1);
  r.rhs = Rational(5, 8);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// d(A,B) >= d(A,G) >= d(B,G) for A <= B <= G.
inline BoundReport check_C2_9(GroupAnalysis& a, const Subgroup& sub_a,
                              const Subgroup& sub_b) {
  a.require_member(sub_a);
  a.require_member(sub_b);
  if (!sub_b.contains_all(sub_a))
    throw ChainViolation("check_C2_9: A is not contained in B");
  BoundReport r;
  r.theorem_id = TheoremId::C2_9;
  r.configuration = {a.spec(), sub_a.members, sub_b.members, {}, {}};
  const std::uint64_t b_mask = a.member_mask(sub_b.members);
  BigInt favorable = 0;
  for (int x : sub_a.members)
    favorable += std::popcount(a.centralizer_mask(x) & b_mask);
  Rational d_ab(favorable, BigInt(sub_a.order()) * sub_b.order());
  Rational d_ag = a.rel_degree(sub_a, 1);
  Rational d_bg = a.rel_degree(sub_b, 1);
  r.lhs = d_ab;
  r.rhs = d_bg;
  r.witness["d_AG"] = d_ag.str();
  if (d_ab < d_ag || d_ag < d_bg) {
    r.verdict = Verdict::Violated;
    return r;
  }
  r.verdict = (d_ab == d_bg) ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// C_H(x)N/N <= C_{H/N}(xN) for every x, with equality when N ∩ [H,G] is
// trivial.
inline BoundReport check_L2_10(GroupAnalysis& a, const Subgroup& h,
                               const Subgroup& n) {
  a.require_member(h);
  a.require_member(n);
  if (!h.contains_all(n))
    throw ChainViolation("check_L2_10: N is not contained in H");
  if (!is_normal(n)) throw NotNormal("check_L2_10: N is not normal in G");

  BoundReport r;
  r.theorem_id = TheoremId::L2_10;
  r.configuration = {a.spec(), h.members, {}, n.members, {}};

  const QuotientGroup& q = a.quotient_by(n.members);
  const FiniteGroup& qg = *q.group;
  const std::uint64_t h_mask = a.member_mask(h.members);
  std::uint64_t h_image_mask = 0;
  for (int x : h.members)
    h_image_mask |= std::uint64_t{1} << q.projection[x];

  bool all_equal = true;
  for (int x = 0; x < a.group().order(); ++x) {
    std::uint64_t lhs_mask = 0;  // image of C_H(x)
    std::uint64_t members = a.centralizer_mask(x) & h_mask;
    while (members) {
      int y = std::countr_zero(members);
      members &= members - 1;
      lhs_mask |= std::uint64_t{1} << q.projection[y];
    }
    std::uint64_t rhs_mask = 0;  // centralizer of xN inside H/N
    const int px = q.projection[x];
    std::uint64_t image = h_image_mask;
    while (image) {
      int y = std::countr_zero(image);
      image &= image - 1;
      if (qg.mul(px, y) == qg.mul(y, px)) rhs_mask |= std::uint64_t{1} << y;
    }
    if ((lhs_mask & ~rhs_mask) != 0) {
      r.witness["violating_element"] = std::to_string(x);
      r.verdict = Verdict::Violated;
      return r;
    }
    all_equal = all_equal && lhs_mask == rhs_mask;
  }

  bool gate = intersection(a.n_fold(h, 1, false), n).order() == 1;
  bool gate_nc = intersection(a.n_fold(h, 1, true), n).order() == 1;
  r.witness["N_cap_HG_trivial"] = detail::bool_str(gate);
  r.witness["N_cap_HG_trivial_normal_closure"] = detail::bool_str(gate_nc);
  r.witness["equality_for_all_x"] = detail::bool_str(all_equal);
  if (gate && !all_equal) {
    r.verdict = Verdict::Violated;
    return r;
  }
  r.verdict = all_equal ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// d(H,G) <= d(H/N, G/N) d(N), equality when N ∩ [H,G] is trivial.
inline BoundReport check_T2_11(GroupAnalysis& a, const Subgroup& h,
                               const Subgroup& n) {
  a.require_member(h);
  a.require_member(n);
  if (!h.contains_all(n))
    throw ChainViolation("check_T2_11: N is not contained in H");
  if (!is_normal(n)) throw NotNormal("check_T2_11: N is not normal in G");

  BoundReport r;
  r.theorem_id = TheoremId::T2_11;
  r.configuration = {a.spec(), h.members, {}, n.members, {}};
  Rational lhs = a.rel_degree(h, 1);
  Rational d_quot = a.quotient_rel_degree(n.members, h, 1);
  Rational d_n = a.sub_degree(n, 1);
  Rational rhs = d_quot * d_n;
  r.lhs = lhs;
  r.rhs = rhs;
  bool gate = intersection(a.n_fold(h, 1, false), n).order() == 1;
  bool gate_nc = intersection(a.n_fold(h, 1, true), n).order() == 1;
  r.witness["d_quotient"] = d_quot.str();
  r.witness["d_N"] = d_n.str();
  r.witness["N_cap_HG_trivial"] = detail::bool_str(gate);
  r.witness["N_cap_HG_trivial_normal_closure"] = detail::bool_str(gate_nc);
  if (lhs > rhs || (gate && lhs != rhs)) {
    r.verdict = Verdict::Violated;
    return r;
  }
  r.verdict = (lhs == rhs) ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// d^(n)(H,G) <= d^(n)(H).
inline BoundReport check_T3_1(GroupAnalysis& a, const Subgroup& h, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T3_1;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  r.lhs = a.rel_degree(h, n);
  r.rhs = a.sub_degree(h, n);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// d^(n+1)(H,G) <= (1 + d^(n)(H/K)) / 2 with K = H ∩ Z(G).
inline BoundReport check_T3_2(GroupAnalysis& a, const Subgroup& h, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T3_2;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  Rational lhs = a.rel_degree(h, n + 1);
  Rational d_hk = a.central_quotient_degree(h, n);
  Rational rhs = (Rational(1) + d_hk) / Rational(2);
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness["d_HK"] = d_hk.str();
  r.verdict = detail::bound_verdict(lhs, rhs);
  return r;
}

// d^(n+1)(G) <= (1 + d^(n)(G/Z(G))) / 2.
inline BoundReport check_C3_3(GroupAnalysis& a, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::C3_3;
  r.configuration = {a.spec(), {}, {}, {}, n};
  Rational lhs = a.group_degree(n + 1);
  Rational d_q =
      a.quotient_rel_degree(a.center_subgroup().members, a.whole(), n);
  Rational rhs = (Rational(1) + d_q) / Rational(2);
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = detail::bound_verdict(lhs, rhs);
  return r;
}

// d^(n+1)(G) <= (2^n - 1 + d(G/Z_n(G))) / 2^n.
inline BoundReport check_T3_4(GroupAnalysis& a, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T3_4;
  r.configuration = {a.spec(), {}, {}, {}, n};
  Rational lhs = a.group_degree(n + 1);
  const Subgroup& z_n = a.z_term(n);
  Rational d_q = a.quotient_rel_degree(z_n.members, a.whole(), 1);
  BigInt p = BigInt(1) << n;
  Rational rhs = (Rational(BigInt(p - 1)) + d_q) / Rational(p);
  r.lhs = lhs;
  r.rhs = rhs;
  r.witness["Z_n"] = detail::members_str(z_n.members);
  r.verdict = detail::bound_verdict(lhs, rhs);
  return r;
}

// d^(n)(H,G) <= d^(n)(H/N, G/N), equality when N ∩ [nH,G] is trivial.
// Both the generated-subgroup and the normal-closure reading of [nH,G] are
// evaluated and recorded.
inline BoundReport check_T3_5(GroupAnalysis& a, const Subgroup& h,
                              const Subgroup& n_sub, int n) {
  a.require_member(h);
  a.require_member(n_sub);
  if (!h.contains_all(n_sub))
    throw ChainViolation("check_T3_5: N is not contained in H");
  if (!is_normal(n_sub)) throw NotNormal("check_T3_5: N is not normal in G");

  BoundReport r;
  r.theorem_id = TheoremId::T3_5;
  r.configuration = {a.spec(), h.members, {}, n_sub.members, n};
  Rational lhs = a.rel_degree(h, n);
  Rational rhs = a.quotient_rel_degree(n_sub.members, h, n);
  r.lhs = lhs;
  r.rhs = rhs;
  bool gate = intersection(a.n_fold(h, n, false), n_sub).order() == 1;
  bool gate_nc = intersection(a.n_fold(h, n, true), n_sub).order() == 1;
  r.witness["N_cap_nHG_trivial"] = detail::bool_str(gate);
  r.witness["N_cap_nHG_trivial_normal_closure"] = detail::bool_str(gate_nc);
  if (lhs > rhs || (gate && lhs != rhs)) {
    r.verdict = Verdict::Violated;
    return r;
  }
  r.verdict = (lhs == rhs) ? Verdict::HoldsWithEquality : Verdict::Holds;
  return r;
}

// d^(n)(G) <= d^(n)(G/N).
inline BoundReport check_C3_6(GroupAnalysis& a, const Subgroup& n_sub, int n) {
  a.require_member(n_sub);
  if (!is_normal(n_sub)) throw NotNormal("check_C3_6: N is not normal in G");
  BoundReport r;
  r.theorem_id = TheoremId::C3_6;
  r.configuration = {a.spec(), {}, {}, n_sub.members, n};
  r.lhs = a.group_degree(n);
  r.rhs = a.quotient_rel_degree(n_sub.members, a.whole(), n);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// Not nilpotent of class <= n: d^(n)(G) <= (2^(n+2) - 3) / 2^(n+2).
inline BoundReport check_C4_1(GroupAnalysis& a, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::C4_1;
  r.configuration = {a.spec(), {}, {}, {}, n};
  auto cls = a.nil_class();
  r.hypotheses_met.add("G not nilpotent of class <= n", !(cls && *cls <= n));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.group_degree(n);
  r.rhs = detail::pow2_bound(n + 2, 3);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// Nontrivial G with trivial center: d^(n)(G) <= (2^n - 1) / 2^n.
inline BoundReport check_C4_2(GroupAnalysis& a, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::C4_2;
  r.configuration = {a.spec(), {}, {}, {}, n};
  r.hypotheses_met.add("G nontrivial", a.group().order() > 1);
  r.hypotheses_met.add("Z(G) trivial", a.center_subgroup().order() == 1);
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.group_degree(n);
  r.rhs = detail::pow2_bound(n, 1);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// H <= Z_n(G) gives d^(n)(H,G) = 1 (H proper, G nonabelian).
inline BoundReport check_T4_3i(GroupAnalysis& a, const Subgroup& h, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T4_3i;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  r.hypotheses_met.add("H proper", h.order() < a.group().order());
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H <= Z_n(G)", a.z_term(n).contains_all(h));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, n);
  r.rhs = Rational(1);
  r.verdict = detail::equality_verdict(*r.lhs, *r.rhs);
  return r;
}

// H not inside Z_n(G) but H/K nilpotent of class <= n-1 still gives
// d^(n)(H,G) = 1.
inline BoundReport check_T4_3ii(GroupAnalysis& a, const Subgroup& h, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T4_3ii;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  r.hypotheses_met.add("H proper", h.order() < a.group().order());
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H not <= Z_n(G)", !a.z_term(n).contains_all(h));
  auto cls = a.central_quotient(h).nil_class;
  r.hypotheses_met.add("H/K nilpotent of class <= n-1", cls && *cls <= n - 1);
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, n);
  r.rhs = Rational(1);
  r.verdict = detail::equality_verdict(*r.lhs, *r.rhs);
  return r;
}

// Noncentral H whose K-quotient is not nilpotent of small class:
// d^(n)(H,G) <= (2^(n+2) - 3) / 2^(n+2). The class threshold is
// max(n-1, 1): the n = 1 instance needs the nonabelian reading, which is
// the one both the 5/8 bound and the example configurations support.
inline BoundReport check_T4_3iii(GroupAnalysis& a, const Subgroup& h, int n) {
  BoundReport r;
  r.theorem_id = TheoremId::T4_3iii;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  r.hypotheses_met.add("H proper", h.order() < a.group().order());
  r.hypotheses_met.add("G nonabelian", !a.group_abelian());
  r.hypotheses_met.add("H not <= Z(G)",
                       !a.center_subgroup().contains_all(h));
  auto cls = a.central_quotient(h).nil_class;
  const int threshold = std::max(n - 1, 1);
  r.hypotheses_met.add(
      "H/K not nilpotent of class <= max(n-1,1)",
      !(cls && *cls <= threshold));
  if (!r.hypotheses_met.all) {
    r.verdict = Verdict::VacuousHypothesisFailed;
    return r;
  }
  r.lhs = a.rel_degree(h, n);
  r.rhs = detail::pow2_bound(n + 2, 3);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// The degree sequence is nondecreasing in n: d^(n)(H,G) <= d^(n+1)(H,G).
inline BoundReport check_monotone_n(GroupAnalysis& a, const Subgroup& h,
                                    int n) {
  BoundReport r;
  r.theorem_id = TheoremId::MONOTONE_N;
  r.configuration = {a.spec(), h.members, {}, {}, n};
  r.lhs = a.rel_degree(h, n);
  r.rhs = a.rel_degree(h, n + 1);
  r.verdict = detail::bound_verdict(*r.lhs, *r.rhs);
  return r;
}

// ---------------------------------------------------------------------------
// Suite driver

struct SuiteOptions {
  int n_max = 3;
  std::uint64_t budget = kDefaultEvaluationBudget;
  int threads = 1;
};

struct SkippedEntry {
  TheoremId theorem_id{};
  CheckConfig configuration;
  std::string reason;
};

struct GroupSuiteResult {
  std::string spec;
  int order = 0;
  std::vector<Rational> degrees;  // d^(n)(G), n = 1..n_max
  std::vector<BoundReport> reports;
  std::vector<SkippedEntry> skipped;
};

namespace detail {

// Order: subgroup member list, then theorem id, then normal subgroup,
// then the second subgroup, then n.
inline bool report_order(const BoundReport& x, const BoundReport& y) {
  static const std::vector<int> empty;
  auto members = [](const std::optional<std::vector<int>>& m)
      -> const std::vector<int>& { return m ? *m : empty; };
  const auto& xs = members(x.configuration.subgroup);
  const auto& ys = members(y.configuration.subgroup);
  if (xs != ys) return xs < ys;
  if (x.theorem_id != y.theorem_id) return x.theorem_id < y.theorem_id;
  const auto& xn = members(x.configuration.normal_subgroup);
  const auto& yn = members(y.configuration.normal_subgroup);
  if (xn != yn) return xn < yn;
  const auto& xb = members(x.configuration.subgroup2);
  const auto& yb = members(y.configuration.subgroup2);
  if (xb != yb) return xb < yb;
  return x.configuration.n.value_or(0) < y.configuration.n.value_or(0);
}

}  // namespace detail

// Runs every applicable checker for one group: group-level theorems, every
// enumerated subgroup H, every normal N <= H, every n <= n_max. Budget
// failures become skipped entries rather than being dropped.
inline GroupSuiteResult analyze_group(const std::string& spec, GroupPtr group,
                                      const SuiteOptions& options) {
  GroupAnalysis a(spec, std::move(group), options.budget);
  GroupSuiteResult result;
  result.spec = spec;
  result.order = a.group().order();
  for (int n = 1; n <= options.n_max; ++n)
    result.degrees.push_back(a.group_degree(n));

  auto run = [&](TheoremId id, CheckConfig config_for_skip, auto&& check) {
    try {
      result.reports.push_back(check());
    } catch (const BudgetExceeded& e) {
      result.skipped.push_back(
          SkippedEntry{id, std::move(config_for_skip), e.what()});
    }
  };
  auto cfg = [&](std::optional<std::vector<int>> h,
                 std::optional<std::vector<int>> b,
                 std::optional<std::vector<int>> n,
                 std::optional<int> level) {
    return CheckConfig{spec, std::move(h), std::move(b), std::move(n), level};
  };

  run(TheoremId::T2_7i, cfg({}, {}, {}, {}), [&] { return check_T2_7i(a); });
  for (int n = 1; n <= options.n_max; ++n) {
    run(TheoremId::C3_3, cfg({}, {}, {}, n), [&] { return check_C3_3(a, n); });
    run(TheoremId::T3_4, cfg({}, {}, {}, n), [&] { return check_T3_4(a, n); });
    run(TheoremId::C4_1, cfg({}, {}, {}, n), [&] { return check_C4_1(a, n); });
    run(TheoremId::C4_2, cfg({}, {}, {}, n), [&] { return check_C4_2(a, n); });
  }

  std::vector<Subgroup> subgroups = enumerate_subgroups(a.group_ptr());
  std::vector<const Subgroup*> normal_subgroups;
  for (const Subgroup& s : subgroups)
    if (is_normal(s)) normal_subgroups.push_back(&s);

  for (const Subgroup* n_sub : normal_subgroups)
    for (int n = 1; n <= options.n_max; ++n)
      run(TheoremId::C3_6, cfg({}, {}, n_sub->members, n),
          [&] { return check_C3_6(a, *n_sub, n); });

  for (const Subgroup& h : subgroups) {
    run(TheoremId::T2_4i, cfg(h.members, {}, {}, {}),
        [&] { return check_T2_4i(a, h); });
    run(TheoremId::T2_4ii, cfg(h.members, {}, {}, {}),
        [&] { return check_T2_4ii(a, h); });
    run(TheoremId::L2_5, cfg(h.members, {}, {}, {}),
        [&] { return check_L2_5(a, h); });
    run(TheoremId::T2_6, cfg(h.members, {}, {}, {}),
        [&] { return check_T2_6(a, h); });
    run(TheoremId::T2_7ii, cfg(h.members, {}, {}, {}),
        [&] { return check_T2_7ii(a, h); });
    run(TheoremId::C2_8i, cfg(h.members, {}, {}, {}),
        [&] { return check_C2_8i(a, h); });
    run(TheoremId::C2_8ii, cfg(h.members, {}, {}, {}),
        [&] { return check_C2_8ii(a, h); });
    run(TheoremId::C2_8iii, cfg(h.members, {}, {}, {}),
        [&] { return check_C2_8iii(a, h); });
    for (int n = 1; n <= options.n_max; ++n) {
      run(TheoremId::T3_1, cfg(h.members, {}, {}, n),
          [&] { return check_T3_1(a, h, n); });
      run(TheoremId::T3_2, cfg(h.members, {}, {}, n),
          [&] { return check_T3_2(a, h, n); });
      run(TheoremId::T4_3i, cfg(h.members, {}, {}, n),
          [&] { return check_T4_3i(a, h, n); });
      run(TheoremId::T4_3ii, cfg(h.members, {}, {}, n),
          [&] { return check_T4_3ii(a, h, n); });
      run(TheoremId::T4_3iii, cfg(h.members, {}, {}, n),
          [&] { return check_T4_3iii(a, h, n); });
      run(TheoremId::MONOTONE_N, cfg(h.members, {}, {}, n),
          [&] { return check_monotone_n(a, h, n); });
    }
    for (const Subgroup* n_sub : normal_subgroups) {
      if (!h.contains_all(*n_sub)) continue;
      run(TheoremId::C2_9, cfg(n_sub->members, h.members, {}, {}),
          [&] { return check_C2_9(a, *n_sub, h); });
      run(TheoremId::L2_10, cfg(h.members, {}, n_sub->members, {}),
          [&] { return check_L2_10(a, h, *n_sub); });
      run(TheoremId::T2_11, cfg(h.members, {}, n_sub->members, {}),
          [&] { return check_T2_11(a, h, *n_sub); });
      for (int n = 1; n <= options.n_max; ++n)
        run(TheoremId::T3_5, cfg(h.members, {}, n_sub->members, n),
            [&] { return check_T3_5(a, h, *n_sub, n); });
    }
  }

  std::stable_sort(result.reports.begin(), result.reports.end(),
                   detail::report_order);
  return result;
}

// Deterministic regardless of thread count: groups are analyzed
// independently and merged back in corpus order.
inline std::vector<GroupSuiteResult> run_suite(
    const std::vector<std::pair<std::string, GroupPtr>>& corpus,
    const SuiteOptions& options) {
  std::vector<GroupSuiteResult> results(corpus.size());
  if (options.threads <= 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i)
      results[i] = analyze_group(corpus[i].first, corpus[i].second, options);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      results[i] = analyze_group(corpus[i].first, corpus[i].second, options);
    }
  };
  std::vector<std::thread> pool;
  const int workers =
      std::min<int>(options.threads, static_cast<int>(corpus.size()));
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace grpdeg
