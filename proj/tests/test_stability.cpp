#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "kitecc/cc_core.hpp"
#include "kitecc/kite_domain.hpp"
#include "kitecc/numkit.hpp"
#include "kitecc/spectral_index.hpp"
#include "kitecc/stability.hpp"
#include "oracle_eig.hpp"

using namespace kitecc;
using numkit::Complex;
using numkit::Mat;

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

Region any_region(int i) {
  switch (i % 3) {
    case 0: return Region::ConvexC;
    case 1: return Region::Concave1;
    default: return Region::Concave2;
  }
}

Vec8 apply_K8(const Vec8& v) {
  Vec8 out;
  for (int i = 0; i < 8; i += 2) {
    out[i] = v[i + 1];
    out[i + 1] = -v[i];
  }
  return out;
}

double dot_m(const Vec8& a, const Vec8& b, const MassTriple& masses) {
  const std::array<double, 4> bm = {masses.m1, 0.5 * masses.m, masses.m3,
                                    0.5 * masses.m};
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += bm[i / 2] * a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("oriented areas at the square") {
  const MassTriple masses = MassTriple::from_m1_m3(0.25, 0.25);
  const FullConfig z = shape_to_full({1.0, 1.0}, masses, 1.0);
  const ReducedBasis basis = reduced_basis(z, masses);
  CHECK(basis.areas[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(basis.areas[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(basis.areas[2] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(basis.areas[3] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("reduced basis orthonormality") {
  std::mt19937 rng(71);
  for (int i = 0; i < 100; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const MassTriple masses = mass_map(s);
    const FullConfig z = normalized_config(s, masses);
    const ReducedBasis basis = reduced_basis(z, masses);

    const Vec8 q = z.planar();
    const Vec8 kq = apply_K8(q);
    const Vec8 xi4 = {1, 0, 1, 0, 1, 0, 1, 0};
    const Vec8 kxi4 = apply_K8(xi4);

    CHECK(std::abs(dot_m(basis.u1hat, basis.u1hat, masses) - 1.0) < 1e-14);
    CHECK(std::abs(dot_m(basis.u2hat, basis.u2hat, masses) - 1.0) < 1e-14);
    for (const Vec8& u : {basis.u1hat, basis.u2hat}) {
      CHECK(std::abs(dot_m(u, q, masses)) < 1e-12);
      CHECK(std::abs(dot_m(u, kq, masses)) < 1e-12);
      CHECK(std::abs(dot_m(u, xi4, masses)) < 1e-12);
      CHECK(std::abs(dot_m(u, kxi4, masses)) < 1e-12);
    }
    CHECK(std::abs(dot_m(basis.u1hat, basis.u2hat, masses)) < 1e-11);
    Vec8 mku1 = apply_K8(basis.u1hat);
    for (double& v : mku1) v = -v;
    CHECK(std::abs(dot_m(basis.u2hat, mku1, masses)) < 1e-11);
  }
}

TEST_CASE("u2 matches its closed form") {
  // Gram-Schmidt on e1 has an explicit expansion in a, b, c, d and the areas
  std::mt19937 rng(73);
  for (int i = 0; i < 50; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const MassTriple masses = mass_map(s);
    const FullConfig z = normalized_config(s, masses);
    const ReducedBasis basis = reduced_basis(z, masses);

    const double a = z.a, b = z.b, c = z.c, d = z.d;
    const std::array<double, 4> bm = {masses.m1, 0.5 * masses.m, masses.m3,
                                      0.5 * masses.m};
    const double d1 = -d * (b - c), d3 = -d * (a + c), d24 = 0.5 * d * (a + b);
    const std::array<double, 4> areas = {d1, d24, d3, d24};
    double u1_norm2 = 0.0;
    for (int k = 0; k < 4; ++k) u1_norm2 += areas[k] * areas[k] / bm[k];
    const double m1 = masses.m1;
    Vec8 u2 = {1.0 - m1 * a * a - m1 - d1 * d1 / (bm[0] * u1_norm2),
               0.0,
               m1 * a * c - m1 - d1 * d24 / (bm[1] * u1_norm2),
               -m1 * a * d,
               m1 * a * b - m1 - d1 * d3 / (bm[2] * u1_norm2),
               0.0,
               m1 * a * c - m1 - d1 * d24 / (bm[3] * u1_norm2),
               m1 * a * d};
    const double norm = std::sqrt(dot_m(u2, u2, masses));
    for (int k = 0; k < 8; ++k)
      CHECK(basis.u2hat[k] == doctest::Approx(u2[k] / norm).epsilon(1e-10));
  }
}

TEST_CASE("checkerboard zeros and even characteristic polynomial") {
  std::mt19937 rng(79);
  for (int i = 0; i < 60; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const MassTriple masses = mass_map(s);
    const FullConfig z = normalized_config(s, masses);
    const LinearizationW lin = lambda_W(z, masses);

    // lower-left block carries the restricted Hessian; alternating entries vanish
    double scale = 0.0;
    for (int r = 4; r < 8; ++r)
      for (int c = 0; c < 4; ++c) scale = std::max(scale, std::abs(lin.matrix(r, c)));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if ((r + c) % 2 == 1)
          CHECK(std::abs(lin.matrix(4 + r, c)) < 1e-11 * scale);

    const auto coeffs = numkit::char_poly(lin.matrix.scaled(1.0 / lin.omega));
    double cmax = 1.0;
    for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
    for (std::size_t k = 1; k < coeffs.size(); k += 2)
      CHECK(std::abs(coeffs[k]) < 1e-10 * cmax);
  }
}

TEST_CASE("production spectrum agrees with the dense eigensolver") {
  std::mt19937 rng(83);
  for (int i = 0; i < 60; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const MassTriple masses = mass_map(s);
    const FullConfig z = normalized_config(s, masses);
    const LinearizationW lin = lambda_W(z, masses);
    const SpectrumReport report = classify_spectrum(lin.matrix, lin.omega);

    auto reference = numkit::eig_dense(lin.matrix.scaled(1.0 / lin.omega));
    for (const auto& e : report.eigenvalues) {
      double best = 1e300;
      for (const auto& r : reference) best = std::min(best, std::abs(e - r));
      CHECK(best < 1e-9);
    }
  }
}

TEST_CASE("spectrum symmetry and class counts") {
  std::mt19937 rng(89);
  for (int i = 0; i < 100; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const SpectrumReport report = spectrum_at(s);
    CHECK(report.klass[0] % 4 == 0);
    CHECK(report.klass[1] % 2 == 0);
    CHECK(report.klass[2] % 2 == 0);
    CHECK(report.klass[0] + report.klass[1] + report.klass[2] == 8);
    // closed under negation and conjugation
    for (const auto& e : report.eigenvalues) {
      double best_neg = 1e300, best_conj = 1e300;
      for (const auto& f : report.eigenvalues) {
        best_neg = std::min(best_neg, std::abs(f + e));
        best_conj = std::min(best_conj, std::abs(f - std::conj(e)));
      }
      CHECK(best_neg < 1e-9);
      CHECK(best_conj < 1e-9);
    }
  }
}

TEST_CASE("full linearization splits into symmetry modes plus the restriction") {
  std::mt19937 rng(97);
  for (int i = 0; i < 25; ++i) {
    const ReducedShape s = random_in_region(any_region(i), rng);
    const MassTriple masses = mass_map(s);
    const FullConfig z = normalized_config(s, masses);
    const LinearizationW lin = lambda_W(z, masses);
    const SpectrumReport report = classify_spectrum(lin.matrix, lin.omega);

    const Mat full =
        testing::full_linearization(z, masses).scaled(1.0 / lin.omega);

    // rotation/scaling subspace: eigenvalues 0, 0, +-i via t^4 + t^2
    const auto r1 =
        testing::restrict_to_span(full, testing::symmetry_basis_rotation(z, masses));
    CHECK(r1.residual < 1e-10 * full.max_abs());
    const auto cp1 = numkit::char_poly(r1.matrix);
    const std::array<double, 5> want1 = {1.0, 0.0, 1.0, 0.0, 0.0};
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(cp1[k] - want1[k]) < 1e-8);

    // momentum subspace: eigenvalues +-i twice via (t^2 + 1)^2
    const auto r2 = testing::restrict_to_span(
        full, testing::symmetry_basis_translation(masses));
    CHECK(r2.residual < 1e-10 * full.max_abs());
    const auto cp2 = numkit::char_poly(r2.matrix);
    const std::array<double, 5> want2 = {1.0, 0.0, 2.0, 0.0, 1.0};
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(cp2[k] - want2[k]) < 1e-8);

    // the invariant complement restricts to the production matrix itself
    const auto rw = testing::restrict_to_span(
        full, testing::complement_basis(lin.basis, masses));
    CHECK(rw.residual < 1e-10 * full.max_abs());
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        CHECK(std::abs(rw.matrix(r, c) - lin.matrix(r, c) / lin.omega) < 1e-10);

    // dense cross-check on the well-conditioned nontrivial eigenvalues
    auto vals16 = testing::eig_oracle(full);
    for (const auto& e : report.eigenvalues) {
      double best = 1e300;
      for (const auto& v : vals16) best = std::min(best, std::abs(v - e));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("square relative equilibrium is unstable") {
  const SpectrumReport report = spectrum_at({1.0, 1.0});
  CHECK_FALSE(report.stable);
  CHECK(report.max_real > 1e-3);
}

TEST_CASE("lower-boundary inset point is linearly stable") {
  const double x = 1.0;
  const double y = lower_boundary_convex(x) + 1e-4;
  const SpectrumReport report = spectrum_at({x, y});
  CHECK(report.stable);
  CHECK(report.klass[2] == 8);
}

TEST_CASE("1+3-gon relative equilibrium is unstable for any central mass") {
  const ReducedShape gon{kSqrt3, -kInvSqrt3};
  for (double m : {0.1, 0.3, 0.5, 0.65}) {  // central mass 1 - 3m/2 spans (0, 1)
    const MassTriple masses = MassTriple::from_all(0.5 * m, 1.0 - 1.5 * m, m);
    const SpectrumReport report = spectrum_at(gon, masses);
    CHECK_FALSE(report.stable);
  }
}

TEST_CASE("non-central input is rejected") {
  const MassTriple masses = MassTriple::from_all(0.5, 0.2, 0.3);
  const FullConfig z = normalized_config({1.0, 1.0}, masses);
  CHECK_THROWS_AS(lambda_W(z, masses), kite_error);
}

TEST_CASE("degeneracy couples the restricted Hessian and the linearization") {
  // walk down a vertical line in concave type 1 to a sign change of F, then
  // check the linearization has an eigenvalue at zero there
  const double x = 2.0;
  const auto f_at = [&](double y) { return F_value({x, y}); };
  const double y_top = concave_boundary(x) - 1e-3;
  const double y_bot = -kSqrt3 + 1e-3;
  REQUIRE(f_at(y_top) * f_at(y_bot) < 0.0);
  const double y_star = numkit::bisect([&](double y) { return f_at(y) > 0.0; },
                                       y_bot, y_top, 1e-12);
  const ReducedShape s{x, y_star};
  const MassTriple masses = mass_map(s);
  CHECK(std::abs(nontrivial_product(s, masses)) < 1e-8);

  const FullConfig z = normalized_config(s, masses);
  const LinearizationW lin = lambda_W(z, masses);
  const auto vals = numkit::eig_dense(lin.matrix.scaled(1.0 / lin.omega));
  double closest_to_zero = 1e300;
  for (const auto& v : vals) closest_to_zero = std::min(closest_to_zero, std::abs(v));
  CHECK(closest_to_zero < 1e-5);

  // away from the curve both the product and the kernel distance are bounded
  const ReducedShape off{x, y_star - 0.1};
  const MassTriple off_masses = mass_map(off);
  CHECK(std::abs(nontrivial_product(off, off_masses)) > 1e-6);
  const LinearizationW off_lin = lambda_W(normalized_config(off, off_masses), off_masses);
  const auto off_vals = numkit::eig_dense(off_lin.matrix.scaled(1.0 / off_lin.omega));
  double off_closest = 1e300;
  for (const auto& v : off_vals) off_closest = std::min(off_closest, std::abs(v));
  CHECK(off_closest > 1e-3);
}

TEST_CASE("stability boundary stays close to the lower boundary") {
  const std::vector<double> xs = {0.7, 0.9, 1.1, 1.3, 1.6};
  const auto boundary = trace_stability_boundary(xs);
  REQUIRE(boundary.size() == xs.size());
  double prev_psi = 0.0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const double y_lo = lower_boundary_convex(boundary[i].xhat);
    CHECK(boundary[i].yhat - y_lo > 0.0);
    CHECK(boundary[i].yhat - y_lo < 0.004);
    if (i > 0) CHECK(boundary[i].psi > prev_psi);
    prev_psi = boundary[i].psi;
  }
}

TEST_CASE("psi approaches its corner limit") {
  const double limit = (25.0 + 3.0 * std::sqrt(69.0)) / 2.0;
  CHECK(std::abs(psi_infimum_estimate() - limit) < 1e-3);
}

TEST_CASE("boundary tracing validates its bracket") {
  CHECK_THROWS_AS(trace_stability_boundary({0.1}), kite_error);
}
