#include <catch2/catch_amalgamated.hpp>

#include "grpdeg/degree.hpp"
#include "grpdeg/group.hpp"
#include "grpdeg/montecarlo.hpp"

using namespace grpdeg;

TEST_CASE("estimates are deterministic in seed and thread count") {
  GroupPtr s3 = symmetric(3);
  McEstimate a = estimate_degree(s3, 1, 20000, 7, 1);
  McEstimate b = estimate_degree(s3, 1, 20000, 7, 1);
  McEstimate c = estimate_degree(s3, 1, 20000, 7, 4);
  CHECK(a.hits == b.hits);
  CHECK(a.hits == c.hits);
  CHECK(a.point == c.point);
  CHECK(a.ci95_low == c.ci95_low);
  CHECK(a.ci95_high == c.ci95_high);

  McEstimate other_seed = estimate_degree(s3, 1, 20000, 8, 1);
  CHECK(a.hits != other_seed.hits);  // different stream
}

TEST_CASE("abelian groups are always hits") {
  McEstimate est = estimate_degree(cyclic(12), 2, 5000, 3);
  CHECK(est.hits == est.samples);
  CHECK(est.point == 1.0);
  CHECK(est.ci95_high == 1.0);
}

TEST_CASE("single sample degenerates cleanly") {
  McEstimate est = estimate_degree(symmetric(3), 1, 1, 5);
  CHECK((est.point == 0.0 || est.point == 1.0));
  CHECK(est.ci95_low >= 0.0);
  CHECK(est.ci95_high <= 1.0);
  CHECK(est.ci95_low < est.ci95_high);
}

TEST_CASE("estimate brackets the exact value on S3") {
  GroupPtr s3 = symmetric(3);
  double exact = degree(s3).value.to_double();  // 0.5
  McEstimate est = estimate_degree(s3, 1, 100000, 42);
  CHECK(est.ci95_low <= exact);
  CHECK(exact <= est.ci95_high);
  CHECK(std::abs(est.point - exact) < 0.01);
}

TEST_CASE("relative estimate brackets d(<r>, D4)") {
  GroupPtr d4 = dihedral(4);
  int r[] = {1};
  Subgroup rot = subgroup_generated(d4, r);
  McEstimate est = estimate_degree(rot, 1, 100000, 11);
  CHECK(est.ci95_low <= 0.75);
  CHECK(0.75 <= est.ci95_high);
}

TEST_CASE("exact and mc agree within the CI on three corpus groups") {
  struct Case {
    GroupPtr group;
    std::uint64_t seed;
  };
  for (const Case& c : {Case{symmetric(3), 101}, Case{dihedral(4), 102},
                        Case{cyclic(12), 103}}) {
    double exact = degree(c.group).value.to_double();
    McEstimate est = estimate_degree(c.group, 1, 100000, c.seed);
    CHECK(est.ci95_low <= exact);
    CHECK(exact <= est.ci95_high);
  }
}

TEST_CASE("coverage across seeds is near nominal") {
  GroupPtr s3 = symmetric(3);
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    McEstimate est = estimate_degree(s3, 1, 2000, seed);
    if (est.ci95_low <= 0.5 && 0.5 <= est.ci95_high) ++covered;
  }
  CHECK(covered >= 40);  // 95% interval, generous slack at 50 trials
}

TEST_CASE("parameter validation") {
  GroupPtr s3 = symmetric(3);
  CHECK_THROWS_AS(estimate_degree(s3, 0, 10, 1), InvalidParameter);
  CHECK_THROWS_AS(estimate_degree(s3, 1, 0, 1), InvalidParameter);
}
