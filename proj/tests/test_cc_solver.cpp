#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "kitecc/cc_core.hpp"
#include "kitecc/cc_solver.hpp"
#include "kitecc/kite_domain.hpp"

using namespace kitecc;

namespace {

ReducedShape random_in_region(Region region, std::mt19937& rng) {
  const RegionBox box = region_box(region);
  std::uniform_real_distribution<double> ux(box.x_lo, box.x_hi);
  std::uniform_real_distribution<double> uy(box.y_lo, box.y_hi);
  for (;;) {
    const ReducedShape s{ux(rng), uy(rng)};
    if (s.xhat + s.yhat <= 0.0) continue;
    if (classify_region(s) == region) return s;
  }
}

MassTriple random_masses(std::mt19937& rng) {
  std::exponential_distribution<double> expo(1.0);
  for (;;) {
    const double a = expo(rng), b = expo(rng), c = expo(rng);
    const double total = a + b + c;
    const double m1 = a / total, m3 = b / total, m = c / total;
    if (m1 > 1e-6 && m3 > 1e-6 && m > 1e-6 && m < 1.0 - 1e-6)
      return MassTriple::from_all(m1, m3, m);
  }
}

}  // namespace

TEST_CASE("convex solve: equal axis masses give the square") {
  const SolveResult result = solve_convex(MassTriple::from_m1_m3(0.25, 0.25));
  REQUIRE(result.solutions.size() == 1);
  CHECK(result.solutions[0].xhat == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(result.solutions[0].yhat == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(result.regions[0] == Region::ConvexC);
  CHECK(result.residuals[0] < 1e-10);
}

TEST_CASE("convex solve: round trip through the mass map") {
  const ReducedShape target{1.2, 0.9};
  const SolveResult result = solve_convex(mass_map(target));
  REQUIRE(result.solutions.size() == 1);
  CHECK(result.solutions[0].xhat == doctest::Approx(target.xhat).epsilon(1e-9));
  CHECK(result.solutions[0].yhat == doctest::Approx(target.yhat).epsilon(1e-9));
}

TEST_CASE("convex solve: unique solution for random masses") {
  std::mt19937 rng(51);
  for (int i = 0; i < 100; ++i) {
    const MassTriple masses = random_masses(rng);
    const SolveResult result = solve_convex(masses);
    REQUIRE(result.solutions.size() == 1);
    CHECK(result.residuals[0] < 1e-10);
    CHECK(std::abs(dziobek_residual(result.solutions[0], masses)) < 1e-12);
  }
}

TEST_CASE("convex solve: mass swap mirrors the shape") {
  std::mt19937 rng(53);
  for (int i = 0; i < 25; ++i) {
    const MassTriple masses = random_masses(rng);
    const MassTriple swapped = MassTriple::from_all(masses.m3, masses.m1, masses.m);
    const SolveResult direct = solve_convex(masses);
    const SolveResult mirrored = solve_convex(swapped);
    REQUIRE(direct.solutions.size() == 1);
    REQUIRE(mirrored.solutions.size() == 1);
    CHECK(mirrored.solutions[0].xhat ==
          doctest::Approx(direct.solutions[0].yhat).epsilon(1e-8));
    CHECK(mirrored.solutions[0].yhat ==
          doctest::Approx(direct.solutions[0].xhat).epsilon(1e-8));
  }
}

TEST_CASE("round trip per region") {
  std::mt19937 rng(57);
  for (int i = 0; i < 60; ++i) {
    const Region region = i % 3 == 0   ? Region::ConvexC
                          : i % 3 == 1 ? Region::Concave1
                                       : Region::Concave2;
    const ReducedShape target = random_in_region(region, rng);
    const MassTriple masses = mass_map(target);
    const SolveResult result =
        region == Region::ConvexC ? solve_convex(masses) : solve_concave(masses);
    bool recovered = false;
    for (const ReducedShape& s : result.solutions)
      if (std::abs(s.xhat - target.xhat) < 1e-8 &&
          std::abs(s.yhat - target.yhat) < 1e-8)
        recovered = true;
    CHECK(recovered);
  }
}

TEST_CASE("concave solve: two-to-one away from the degeneracy curve") {
  const ReducedShape target{2.0, -1.0};
  const SolveResult result = solve_concave(mass_map(target));
  REQUIRE(result.solutions.size() == 2);
  bool found_target = false;
  for (const ReducedShape& s : result.solutions)
    if (std::abs(s.xhat - 2.0) < 1e-9 && std::abs(s.yhat + 1.0) < 1e-9)
      found_target = true;
  CHECK(found_target);
  for (double r : result.residuals) CHECK(r < 1e-10);
}

TEST_CASE("concave solve: masses with no concave kite") {
  const SolveResult result =
      solve_concave(MassTriple::from_all(0.25, 0.4, 0.35));
  CHECK(result.solutions.empty());
}

TEST_CASE("concave solve: same-type pair just above the gon mass line") {
  // masses slightly above m3 = 1 - 3 m1 and below the image of the
  // degeneracy curve have both preimages in one concave type
  const MassTriple on_line = limit_masses_13gon(-1.0);
  const MassTriple nudged =
      MassTriple::from_m1_m3(on_line.m1, on_line.m3 + 0.001);
  const SolveResult result = solve_concave(nudged);
  REQUIRE(result.solutions.size() == 2);
  CHECK(result.regions[0] == result.regions[1]);
  // a little further out the masses leave the image and nothing remains
  const MassTriple past = MassTriple::from_m1_m3(on_line.m1, on_line.m3 + 0.004);
  CHECK(solve_concave(past).solutions.empty());
}

TEST_CASE("solutions come out sorted and deduplicated") {
  std::mt19937 rng(61);
  for (int i = 0; i < 20; ++i) {
    const ReducedShape target = random_in_region(Region::Concave1, rng);
    const SolveResult result = solve_concave(mass_map(target));
    for (std::size_t k = 1; k < result.solutions.size(); ++k) {
      const auto& prev = result.solutions[k - 1];
      const auto& cur = result.solutions[k];
      CHECK((prev.xhat < cur.xhat ||
             (prev.xhat == cur.xhat && prev.yhat < cur.yhat)));
      CHECK(std::hypot(prev.xhat - cur.xhat, prev.yhat - cur.yhat) > 1e-7);
    }
  }
}
