// Test-side oracles for the relative-equilibrium linearization.
//
// The full 16x16 matrix has defective trivial eigenvalues (Jordan blocks for
// the zero pair and for the momentum modes), so a dense QR splits those
// clusters by roughly sqrt(machine epsilon) no matter the working precision
// class.  The spectrum claim is therefore certified structurally: the exact
// symmetry subspaces are restricted, their characteristic polynomials are
// compared in closed form, and only the well-conditioned nontrivial part is
// matched against a dense (long double) eigensolve.
#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <complex>
#include <vector>

#include "kitecc/numkit.hpp"
#include "kitecc/stability.hpp"
#include "kitecc/types.hpp"

namespace kitecc::testing {

inline std::vector<std::complex<double>> eig_oracle(const numkit::Mat& a) {
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = a.dim();
  LMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<long double>(a(i, j));
  Eigen::EigenSolver<LMat> solver(m, false);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = {static_cast<double>(solver.eigenvalues()[i].real()),
              static_cast<double>(solver.eigenvalues()[i].imag())};
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

using V16 = std::array<double, 16>;

inline V16 phase_vector(const Vec8& position, const Vec8& momentum) {
  V16 v{};
  for (int i = 0; i < 8; ++i) {
    v[i] = position[i];
    v[8 + i] = momentum[i];
  }
  return v;
}

inline Vec8 apply_K8(const Vec8& v) {
  Vec8 out;
  for (int i = 0; i < 8; i += 2) {
    out[i] = v[i + 1];
    out[i + 1] = -v[i];
  }
  return out;
}

inline Vec8 apply_mass(const Vec8& v, const MassTriple& masses) {
  const std::array<double, 4> bm = {masses.m1, 0.5 * masses.m, masses.m3,
                                    0.5 * masses.m};
  Vec8 out;
  for (int i = 0; i < 8; ++i) out[i] = bm[i / 2] * v[i];
  return out;
}

// omega-normalized full linearization [[K, M^-1/w], [D2U/w, K]]... assembled
// unscaled; scale afterwards.
inline numkit::Mat full_linearization(const FullConfig& z, const MassTriple& masses) {
  const auto q = z.planar();
  const double omega = std::sqrt(potential_planar(q, masses));
  const numkit::Mat d2u = hessian_planar(q, masses);
  const std::array<double, 4> bm = {masses.m1, 0.5 * masses.m, masses.m3,
                                    0.5 * masses.m};
  numkit::Mat lam(16);
  for (int i = 0; i < 8; i += 2) {
    lam(i, i + 1) = omega;
    lam(i + 1, i) = -omega;
    lam(8 + i, 8 + i + 1) = omega;
    lam(8 + i + 1, 8 + i) = -omega;
  }
  for (int i = 0; i < 8; ++i) lam(i, 8 + i) = 1.0 / bm[i / 2];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) lam(8 + i, j) = d2u(i, j);
  return lam;
}

struct Restriction {
  numkit::Mat matrix;
  double residual = 0.0;  // max |(A B - B R)_ij|
};

// Least-squares restriction of `a` to the span of the given columns, with the
// invariance defect reported as a residual.
inline Restriction restrict_to_span(const numkit::Mat& a,
                                    const std::vector<V16>& basis) {
  const int k = static_cast<int>(basis.size());
  std::vector<V16> image(k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < 16; ++r) {
      double s = 0.0;
      for (int j = 0; j < 16; ++j) s += a(r, j) * basis[c][j];
      image[c][r] = s;
    }
  Eigen::MatrixXd b(16, k), ab(16, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < 16; ++r) {
      b(r, c) = basis[c][r];
      ab(r, c) = image[c][r];
    }
  const Eigen::MatrixXd r = (b.transpose() * b).ldlt().solve(b.transpose() * ab);
  Restriction out{numkit::Mat(k), 0.0};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.matrix(i, j) = r(i, j);
  const Eigen::MatrixXd defect = ab - b * r;
  out.residual = defect.cwiseAbs().maxCoeff();
  return out;
}

// Bases of the two symmetry subspaces of the full linearization.
inline std::vector<V16> symmetry_basis_rotation(const FullConfig& z,
                                                const MassTriple& masses) {
  const Vec8 q = z.planar();
  const Vec8 kq = apply_K8(q);
  return {phase_vector(q, {}), phase_vector(kq, {}),
          phase_vector({}, apply_mass(q, masses)),
          phase_vector({}, apply_mass(kq, masses))};
}

inline std::vector<V16> symmetry_basis_translation(const MassTriple& masses) {
  const Vec8 xi = {1, 0, 1, 0, 1, 0, 1, 0};
  const Vec8 kxi = apply_K8(xi);
  return {phase_vector(xi, {}), phase_vector(kxi, {}),
          phase_vector({}, apply_mass(xi, masses)),
          phase_vector({}, apply_mass(kxi, masses))};
}

// Basis of the invariant complement in the order matching the restricted
// matrix: (b_i, 0) then (0, M b_i) for b = (u1, -K u1, u2, -K u2).
inline std::vector<V16> complement_basis(const ReducedBasis& rb,
                                         const MassTriple& masses) {
  Vec8 mku1 = apply_K8(rb.u1hat);
  Vec8 mku2 = apply_K8(rb.u2hat);
  for (double& v : mku1) v = -v;
  for (double& v : mku2) v = -v;
  const std::array<Vec8, 4> b = {rb.u1hat, mku1, rb.u2hat, mku2};
  std::vector<V16> out;
  for (const Vec8& v : b) out.push_back(phase_vector(v, {}));
  for (const Vec8& v : b) out.push_back(phase_vector({}, apply_mass(v, masses)));
  return out;
}

}  // namespace kitecc::testing
