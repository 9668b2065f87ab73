#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "grpdeg/degree.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/quotient.hpp"
#include "grpdeg/subgroup.hpp"

using namespace grpdeg;

namespace {

// Test-side oracle with the mirrored commutator convention
// [x,y] = x y x^{-1} y^{-1}; degree values must be identical under it.
int mirrored_commutator(const FiniteGroup& g, int x, int y) {
  return g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
}

BigInt mirrored_bruteforce_count(const Subgroup& h, int n) {
  const FiniteGroup& g = *h.parent;
  BigInt count = 0;
  std::vector<int> idx(n, 0);
  for (;;) {
    int value = h.members[idx[0]];
    for (int k = 1; k < n; ++k)
      value = mirrored_commutator(g, value, h.members[idx[k]]);
    for (int x = 0; x < g.order(); ++x)
      if (mirrored_commutator(g, value, x) == 0) ++count;
    int k = n - 1;
    while (k >= 0 && idx[k] + 1 == h.order()) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return count;
}

// Number of conjugacy classes, as an independent route to d(G) = k(G)/|G|.
int conjugacy_class_count(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  int classes = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (int c = 0; c < g.order(); ++c) seen[g.conj(x, c)] = 1;
  }
  return classes;
}

}  // namespace

TEST_CASE("haar measure of a subgroup") {
  GroupPtr s3 = symmetric(3);
  CHECK(haar_measure_of_subgroup(s3, whole_group(s3)) == Rational(1));
  CHECK(haar_measure_of_subgroup(s3, trivial_subgroup(s3)) == Rational(1, 6));
  GroupPtr d4 = dihedral(4);
  CHECK(haar_measure_of_subgroup(d4, center(d4)) == Rational(1, 4));
  CHECK_THROWS_AS(haar_measure_of_subgroup(s3, center(d4)), ParentMismatch);
}

TEST_CASE("brute force oracle values") {
  GroupPtr c6 = cyclic(6);
  for (int n = 1; n <= 3; ++n)
    CHECK(relative_degree_bruteforce(whole_group(c6), n).value == Rational(1));

  DegreeValue s3 = relative_degree_bruteforce(whole_group(symmetric(3)), 1);
  CHECK(s3.value == Rational(1, 2));
  CHECK(*s3.favorable == 18);
  CHECK(*s3.total == 36);

  GroupPtr d4 = dihedral(4);
  int r[] = {1};
  Subgroup rot = subgroup_generated(d4, r);
  DegreeValue rel = relative_degree_bruteforce(rot, 1);
  CHECK(rel.value == Rational(3, 4));
  CHECK(*rel.total == 32);
}

TEST_CASE("centralizer sum values") {
  GroupPtr d4 = dihedral(4);
  DegreeValue d = relative_degree_centralizer(whole_group(d4), 1);
  CHECK(d.value == Rational(5, 8));
  CHECK(*d.favorable == 40);  // sum of |C(x)| over D4
  CHECK(*d.total == 64);

  CHECK(relative_degree_centralizer(whole_group(dicyclic(2)), 1).value ==
        Rational(5, 8));
  CHECK(relative_degree_centralizer(trivial_subgroup(d4), 1).value ==
        Rational(1));
}

TEST_CASE("commutator distribution") {
  GroupPtr c4 = cyclic(4);
  for (int k = 2; k <= 4; ++k) {
    CommutatorDistribution dist =
        commutator_distribution(whole_group(c4), k);
    CHECK(dist.counts[0] == dist.tuple_count);
  }

  GroupPtr s3 = symmetric(3);
  CommutatorDistribution dist = commutator_distribution(whole_group(s3), 2);
  CHECK(dist.counts[0] == 18);
  for (int x = 1; x < 6; ++x) {
    if (element_order(*s3, x) == 3)
      CHECK(dist.counts[x] == 9);
    else
      CHECK(dist.counts[x] == 0);
  }

  // Mass conservation: the counts always sum to |H|^k.
  GroupPtr d4 = dihedral(4);
  int r[] = {1};
  Subgroup rot = subgroup_generated(d4, r);
  for (int k = 1; k <= 5; ++k) {
    CommutatorDistribution d = commutator_distribution(rot, k);
    BigInt sum = 0;
    for (const BigInt& c : d.counts) sum += c;
    CHECK(sum == d.tuple_count);
    CHECK(d.tuple_count == bigint_pow(4, k));
  }
}

TEST_CASE("dp ladder values for S3") {
  GroupPtr s3 = symmetric(3);
  CHECK(relative_degree_dp(whole_group(s3), 2).value == Rational(3, 4));
  CHECK(relative_degree_dp(whole_group(s3), 3).value == Rational(7, 8));
  CHECK(relative_degree_dp(whole_group(s3), 4).value == Rational(15, 16));
}

TEST_CASE("degree convenience") {
  for (int k : {1, 2, 5, 12})
    CHECK(degree(cyclic(k)).value == Rational(1));
  CHECK(degree(dihedral(4)).value == Rational(5, 8));
  GroupPtr s3xs3 = direct_product(symmetric(3), symmetric(3));
  CHECK(degree(s3xs3).value == Rational(1, 4));
}

TEST_CASE("three exact methods agree") {
  std::vector<GroupPtr> groups = {symmetric(3), dihedral(4), dicyclic(2),
                                  alternating(4), dihedral(6),
                                  direct_product(symmetric(3), cyclic(2))};
  for (const GroupPtr& g : groups) {
    std::vector<Subgroup> subgroups = {whole_group(g), trivial_subgroup(g),
                                       center(g)};
    int seed[] = {1};
    subgroups.push_back(subgroup_generated(g, seed));
    for (const Subgroup& h : subgroups) {
      for (int n = 1; n <= 3; ++n) {
        DegreeValue brute = relative_degree_bruteforce(h, n);
        DegreeValue cent = relative_degree_centralizer(h, n);
        DegreeValue dp = relative_degree_dp(h, n);
        CHECK(brute.value == cent.value);
        CHECK(brute.value == dp.value);
        CHECK(*brute.favorable == *cent.favorable);
        CHECK(*brute.favorable == *dp.favorable);
        CHECK(*brute.total == *dp.total);
      }
    }
  }
}

TEST_CASE("degree sequence is monotone in n") {
  for (const GroupPtr& g : {symmetric(3), symmetric(4), dihedral(5),
                            dicyclic(3), alternating(4)}) {
    Rational prev = degree(g, 1).value;
    for (int n = 2; n <= 5; ++n) {
      Rational next = degree(g, n).value;
      CHECK(prev <= next);
      prev = next;
    }
  }
}

TEST_CASE("degree hits 1 exactly at the nilpotency class") {
  for (const GroupPtr& g : {dihedral(4), dicyclic(2), heisenberg(3),
                            dihedral(6), symmetric(4), cyclic(6)}) {
    std::optional<int> cls = nilpotency_class(g);
    for (int n = 1; n <= 4; ++n) {
      bool expect_one = cls.has_value() && *cls <= n;
      CHECK((degree(g, n).value == Rational(1)) == expect_one);
    }
  }
}

TEST_CASE("integration-order symmetry at n = 1") {
  GroupPtr d4 = dihedral(4);
  int r[] = {1};
  for (const Subgroup& h :
       {subgroup_generated(d4, r), center(d4), whole_group(d4)}) {
    BigInt lhs = *relative_degree_centralizer(h, 1).favorable;
    BigInt rhs = 0;  // sum over g in G of |C_H(g)|
    for (int x = 0; x < d4->order(); ++x)
      for (int y : h.members)
        if (d4->mul(x, y) == d4->mul(y, x)) ++rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degree is multiplicative over direct products") {
  std::vector<GroupPtr> factors = {symmetric(3), dihedral(4), cyclic(5)};
  for (const GroupPtr& a : factors)
    for (const GroupPtr& b : factors) {
      GroupPtr product = direct_product(a, b);
      for (int n = 1; n <= 3; ++n)
        CHECK(degree(product, n).value ==
              degree(a, n).value * degree(b, n).value);
    }
}

TEST_CASE("degree values are convention invariant") {
  GroupPtr s4 = symmetric(4);
  int seed[] = {9};
  std::vector<Subgroup> subgroups = {whole_group(s4),
                                     subgroup_generated(s4, seed)};
  for (const Subgroup& h : subgroups)
    for (int n = 1; n <= 2; ++n)
      CHECK(*relative_degree_bruteforce(h, n).favorable ==
            mirrored_bruteforce_count(h, n));
}

TEST_CASE("denominator divides |H|^n |G|") {
  GroupPtr g = dihedral(6);
  int seed[] = {2};
  for (const Subgroup& h : {whole_group(g), subgroup_generated(g, seed)})
    for (int n = 1; n <= 3; ++n) {
      DegreeValue d = relative_degree_dp(h, n);
      CHECK(*d.total % d.value.denominator() == 0);
    }
}

TEST_CASE("conjugacy class count cross-check") {
  for (const GroupPtr& g :
       {symmetric(3), dihedral(4), dicyclic(2), symmetric(4), alternating(4),
        dicyclic(3), heisenberg(3), dihedral(6),
        direct_product(symmetric(3), cyclic(2))})
    CHECK(degree(g).value ==
          Rational(conjugacy_class_count(*g), g->order()));
}

TEST_CASE("budget and parameter errors") {
  GroupPtr s4 = symmetric(4);
  CHECK_THROWS_AS(relative_degree_bruteforce(whole_group(s4), 3, 1000),
                  BudgetExceeded);
  CHECK_THROWS_AS(relative_degree_centralizer(whole_group(s4), 3, 1000),
                  BudgetExceeded);
  CHECK_THROWS_AS(relative_degree_bruteforce(whole_group(s4), 0),
                  InvalidParameter);
  CHECK_THROWS_AS(relative_degree_dp(whole_group(s4), 0), InvalidParameter);
  CHECK_THROWS_AS(commutator_distribution(whole_group(s4), 0),
                  InvalidParameter);
}

TEST_CASE("parallel brute force is bit-identical") {
  GroupPtr s4 = symmetric(4);
  int seed[] = {1, 9};
  Subgroup h = subgroup_generated(s4, seed);
  for (int n = 1; n <= 2; ++n) {
    DegreeValue serial =
        relative_degree_bruteforce(h, n, kDefaultEvaluationBudget, 1);
    DegreeValue parallel =
        relative_degree_bruteforce(h, n, kDefaultEvaluationBudget, 4);
    CHECK(serial.value == parallel.value);
    CHECK(*serial.favorable == *parallel.favorable);
  }
}
