#pragma once

#include <array>
#include <complex>
#include <vector>

#include "kitecc/numkit.hpp"
#include "kitecc/types.hpp"

namespace kitecc {

inline constexpr double kDefaultRealTol = 1e-10;
inline constexpr double kDefaultGapTol = 1e-8;

using Vec8 = std::array<double, 8>;

// Planar potential sum m_i m_j / r_ij over the four bodies of q.
double potential_planar(const std::array<double, 8>& q, const MassTriple& masses);

// 8x8 Hessian of the planar potential at q.
numkit::Mat hessian_planar(const std::array<double, 8>& q, const MassTriple& masses);

struct ReducedBasis {
  Vec8 u1hat{};
  Vec8 u2hat{};
  std::array<double, 4> areas{};  // oriented triangle areas per deleted body
};

// M-orthonormal pair u1hat, u2hat spanning the kite-symmetric directions
// orthogonal to q, Kq, xi4 and K xi4; u1 comes from the oriented areas and u2
// from Gram-Schmidt on e1.  Requires the configuration normalized to unit
// moment of inertia.  Throws degenerate_basis if u2 collapses.
ReducedBasis reduced_basis(const FullConfig& config, const MassTriple& masses);

struct LinearizationW {
  numkit::Mat matrix;  // 8x8 restriction of the relative-equilibrium linearization
  double omega = 0.0;  // angular velocity sqrt(U) on the unit-inertia ellipsoid
  ReducedBasis basis;
};

// Restriction of the rotating-frame linearization to the 8-dimensional
// invariant complement of the symmetry subspaces, in the basis
// (u1hat, -K u1hat, u2hat, -K u2hat) doubled over positions/momenta.
// The input config is renormalized to unit moment of inertia; throws
// not_central if it is not a central configuration for the given masses.
LinearizationW lambda_W(const FullConfig& config, const MassTriple& masses);

struct SpectrumReport {
  std::array<std::complex<double>, 8> eigenvalues{};  // divided by omega
  std::array<int, 3> klass{};  // (fully complex, real, pure imaginary)
  double max_real = 0.0;
  bool stable = false;
};

// Classifies the spectrum of an 8x8 restriction: eigenvalues are recovered
// through the even characteristic polynomial (a quartic in mu = t^2), which
// keeps +- pairs and conjugates exact.  An eigenvalue is pure imaginary when
// |Re| < real_tol after dividing by omega, real when |Im| < real_tol, and
// part of a complex quadruplet otherwise.  Stable means all eight normalized
// eigenvalues are pure imaginary and pairwise separated by more than gap_tol.
SpectrumReport classify_spectrum(const numkit::Mat& matrix, double omega,
                                 double real_tol = kDefaultRealTol,
                                 double gap_tol = kDefaultGapTol);

// Spectrum report for a shape with explicit masses, or with its mass-map
// masses.
SpectrumReport spectrum_at(const ReducedShape& shape, const MassTriple& masses,
                           double real_tol = kDefaultRealTol,
                           double gap_tol = kDefaultGapTol);
SpectrumReport spectrum_at(const ReducedShape& shape,
                           double real_tol = kDefaultRealTol,
                           double gap_tol = kDefaultGapTol);

struct BoundaryPoint {
  double xhat = 0.0;
  double yhat = 0.0;
  double psi = 0.0;  // m1 / (1 - m1) at the boundary point
};

// For each xhat in (1/sqrt3, sqrt3): bisects the stable/unstable predicate in
// yhat between the lower boundary (stable side) and 0.005 above it, to a
// yhat tolerance of 1e-9.  Throws bracket_failure if the point 1e-6 above the
// lower boundary is not stable.
std::vector<BoundaryPoint> trace_stability_boundary(
    const std::vector<double>& xhat_grid, double real_tol = kDefaultRealTol,
    double gap_tol = kDefaultGapTol);

// Limit of psi along the stability boundary as xhat decreases to 1/sqrt3,
// from boundary samples near the corner plus linear extrapolation.
double psi_infimum_estimate(double real_tol = kDefaultRealTol,
                            double gap_tol = kDefaultGapTol);

}  // namespace kitecc
