#include "kitecc/stability.hpp"

#include <algorithm>
#include <cmath>

#include "kitecc/cc_core.hpp"
#include "kitecc/kite_domain.hpp"

namespace kitecc {

namespace {

std::array<double, 4> body_masses(const MassTriple& masses) {
  return {masses.m1, 0.5 * masses.m, masses.m3, 0.5 * masses.m};
}

Vec8 mass_vector(const MassTriple& masses) {
  const auto bm = body_masses(masses);
  return {bm[0], bm[0], bm[1], bm[1], bm[2], bm[2], bm[3], bm[3]};
}

double dot_m(const Vec8& a, const Vec8& b, const Vec8& mv) {
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += mv[i] * a[i] * b[i];
  return s;
}

Vec8 apply_K(const Vec8& v) {
  Vec8 out;
  for (int i = 0; i < 8; i += 2) {
    out[i] = v[i + 1];
    out[i + 1] = -v[i];
  }
  return out;
}

void subtract_projection(Vec8& v, const Vec8& w, const Vec8& mv) {
  const double ww = dot_m(w, w, mv);
  if (ww <= 0.0) return;
  const double coef = dot_m(v, w, mv) / ww;
  for (int i = 0; i < 8; ++i) v[i] -= coef * w[i];
}

}  // namespace

double potential_planar(const std::array<double, 8>& q, const MassTriple& masses) {
  const auto bm = body_masses(masses);
  double u = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double dx = q[2 * i] - q[2 * j];
      const double dy = q[2 * i + 1] - q[2 * j + 1];
      const double r = std::hypot(dx, dy);
      if (r < 1e-13)
        throw kite_error(errc::collision, "potential undefined at collision");
      u += bm[i] * bm[j] / r;
    }
  return u;
}

numkit::Mat hessian_planar(const std::array<double, 8>& q, const MassTriple& masses) {
  const auto bm = body_masses(masses);
  numkit::Mat h(8);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double dx = q[2 * i] - q[2 * j];
      const double dy = q[2 * i + 1] - q[2 * j + 1];
      const double r2 = dx * dx + dy * dy;
      const double r = std::sqrt(r2);
      if (r < 1e-13)
        throw kite_error(errc::collision, "hessian undefined at collision");
      const double inv3 = 1.0 / (r2 * r);
      const double inv5 = inv3 / r2;
      const double mm = bm[i] * bm[j];
      // pair block mm * (3 dd^T / r^5 - I / r^3)
      double blk[2][2];
      blk[0][0] = mm * (3.0 * dx * dx * inv5 - inv3);
      blk[0][1] = mm * (3.0 * dx * dy * inv5);
      blk[1][0] = blk[0][1];
      blk[1][1] = mm * (3.0 * dy * dy * inv5 - inv3);
      for (int r_ = 0; r_ < 2; ++r_)
        for (int c_ = 0; c_ < 2; ++c_) {
          h(2 * i + r_, 2 * i + c_) += blk[r_][c_];
          h(2 * j + r_, 2 * j + c_) += blk[r_][c_];
          h(2 * i + r_, 2 * j + c_) -= blk[r_][c_];
          h(2 * j + r_, 2 * i + c_) -= blk[r_][c_];
        }
    }
  return h;
}

ReducedBasis reduced_basis(const FullConfig& config, const MassTriple& masses) {
  const Vec8 mv = mass_vector(masses);
  const Vec8 q = config.planar();

  ReducedBasis basis;
  const double d1 = -config.d * (config.b - config.c);
  const double d3 = -config.d * (config.a + config.c);
  const double d24 = 0.5 * config.d * (config.a + config.b);
  basis.areas = {d1, d24, d3, d24};

  const auto bm = body_masses(masses);
  Vec8 u1{};
  for (int i = 0; i < 4; ++i) u1[2 * i] = basis.areas[i] / bm[i];

  const Vec8 kq = apply_K(q);
  const Vec8 xi4 = {1, 0, 1, 0, 1, 0, 1, 0};
  const Vec8 kxi4 = apply_K(xi4);
  Vec8 mku1 = apply_K(u1);
  for (double& v : mku1) v = -v;

  Vec8 u2 = {1, 0, 0, 0, 0, 0, 0, 0};
  subtract_projection(u2, q, mv);
  subtract_projection(u2, kq, mv);
  subtract_projection(u2, xi4, mv);
  subtract_projection(u2, kxi4, mv);
  subtract_projection(u2, u1, mv);
  subtract_projection(u2, mku1, mv);

  const double n1 = std::sqrt(dot_m(u1, u1, mv));
  const double n2 = std::sqrt(dot_m(u2, u2, mv));
  if (!(n2 > 1e-12))
    throw kite_error(errc::degenerate_basis, "reduced basis vector u2 collapsed");
  for (int i = 0; i < 8; ++i) {
    basis.u1hat[i] = u1[i] / n1;
    basis.u2hat[i] = u2[i] / n2;
  }
  return basis;
}

LinearizationW lambda_W(const FullConfig& config, const MassTriple& masses) {
  // renormalize to the unit-inertia ellipsoid
  const double inertia = moment_of_inertia(config, masses);
  if (!(inertia > 0.0))
    throw kite_error(errc::invalid_argument, "degenerate configuration");
  const double scale = 1.0 / std::sqrt(inertia);
  FullConfig z{config.a * scale, config.b * scale, config.c * scale,
               config.d * scale};

  const double u = potential_xyd(z.x(), z.y(), z.d, masses);
  const auto grad = gradient_U_xyd(z.x(), z.y(), z.d, masses);
  const std::array<double, 4> mz = {masses.m1 * z.a, masses.m3 * z.b,
                                    masses.m * z.c, masses.m * z.d};
  double residual = 0.0;
  for (int i = 0; i < 4; ++i)
    residual = std::max(residual, std::abs(grad[i] + u * mz[i]));
  if (residual > 1e-10 * std::max(1.0, u))
    throw kite_error(errc::not_central,
                     "lambda_W requires a central configuration (residual " +
                         std::to_string(residual) + ")");

  LinearizationW lin{numkit::Mat(8), std::sqrt(u), reduced_basis(z, masses)};

  const Vec8 q = z.planar();
  const numkit::Mat d2u = hessian_planar(q, masses);

  std::array<Vec8, 4> b;
  b[0] = lin.basis.u1hat;
  b[1] = apply_K(lin.basis.u1hat);
  for (double& v : b[1]) v = -v;
  b[2] = lin.basis.u2hat;
  b[3] = apply_K(lin.basis.u2hat);
  for (double& v : b[3]) v = -v;

  double ahat[4][4];
  for (int j = 0; j < 4; ++j) {
    std::array<double, numkit::Mat::kMaxDim> col{};
    std::copy(b[j].begin(), b[j].end(), col.begin());
    const auto hb = d2u.apply(col);
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int r = 0; r < 8; ++r) s += b[i][r] * hb[r];
      ahat[i][j] = s;
    }
  }

  // [[omega K, I], [Ahat, omega K]] with K = blkdiag(J, J)
  const double w = lin.omega;
  auto& L = lin.matrix;
  for (int blk = 0; blk < 2; ++blk) {
    const int o = 4 * blk;
    L(o + 0, o + 1) = w;
    L(o + 1, o + 0) = -w;
    L(o + 2, o + 3) = w;
    L(o + 3, o + 2) = -w;
  }
  for (int i = 0; i < 4; ++i) L(i, 4 + i) = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) L(4 + i, j) = ahat[i][j];
  return lin;
}

SpectrumReport classify_spectrum(const numkit::Mat& matrix, double omega,
                                 double real_tol, double gap_tol) {
  if (!(omega > 0.0))
    throw kite_error(errc::invalid_argument, "omega must be positive");
  if (matrix.dim() != 8)
    throw kite_error(errc::invalid_argument, "classify_spectrum expects 8x8");

  const numkit::Mat b = matrix.scaled(1.0 / omega);
  const auto coeffs = numkit::char_poly(b);
  // Hamiltonian restriction: characteristic polynomial is even, so the
  // spectrum comes from the quartic in mu = t^2 built from even coefficients
  const std::array<double, 5> quartic = {1.0, coeffs[2], coeffs[4], coeffs[6],
                                         coeffs[8]};
  const auto mu = numkit::solve_quartic_real_coeffs(quartic);

  SpectrumReport report;
  int k = 0;
  for (const auto& m : mu) {
    std::complex<double> t;
    if (m.imag() == 0.0) {
      // exact axis placement: negative mu -> pure imaginary pair
      t = m.real() >= 0.0 ? std::complex<double>(std::sqrt(m.real()), 0.0)
                          : std::complex<double>(0.0, std::sqrt(-m.real()));
    } else {
      t = std::sqrt(m);
    }
    report.eigenvalues[k++] = t;
    report.eigenvalues[k++] = -t;
  }

  int n_imag = 0, n_real = 0, n_complex = 0;
  for (const auto& e : report.eigenvalues) {
    report.max_real = std::max(report.max_real, e.real());
    if (std::abs(e.real()) < real_tol)
      ++n_imag;
    else if (std::abs(e.imag()) < real_tol)
      ++n_real;
    else
      ++n_complex;
  }
  report.klass = {n_complex, n_real, n_imag};

  report.stable = false;
  if (n_imag == 8) {
    std::array<double, 8> parts;
    for (int i = 0; i < 8; ++i) parts[i] = report.eigenvalues[i].imag();
    std::sort(parts.begin(), parts.end());
    bool distinct = true;
    for (int i = 0; i + 1 < 8; ++i)
      if (parts[i + 1] - parts[i] <= gap_tol) distinct = false;
    report.stable = distinct;
  }
  return report;
}

SpectrumReport spectrum_at(const ReducedShape& shape, const MassTriple& masses,
                           double real_tol, double gap_tol) {
  const FullConfig config = normalized_config(shape, masses);
  const LinearizationW lin = lambda_W(config, masses);
  return classify_spectrum(lin.matrix, lin.omega, real_tol, gap_tol);
}

SpectrumReport spectrum_at(const ReducedShape& shape, double real_tol,
                           double gap_tol) {
  return spectrum_at(shape, mass_map(shape), real_tol, gap_tol);
}

namespace {

BoundaryPoint boundary_at(double xhat, double real_tol, double gap_tol) {
  const double y_lo = lower_boundary_convex(xhat);
  const auto stable_at = [&](double yhat) {
    return spectrum_at(ReducedShape{xhat, yhat}, real_tol, gap_tol).stable;
  };
  if (!stable_at(y_lo + 1e-6))
    throw kite_error(errc::bracket_failure,
                     "stable side not stable at inset 1e-6 (xhat=" +
                         std::to_string(xhat) + ")");
  const double y_b = numkit::bisect(stable_at, y_lo + 1e-6, y_lo + 0.005, 1e-9);
  const MassTriple masses = mass_map(ReducedShape{xhat, y_b});
  return BoundaryPoint{xhat, y_b, masses.m1 / (1.0 - masses.m1)};
}

}  // namespace

std::vector<BoundaryPoint> trace_stability_boundary(
    const std::vector<double>& xhat_grid, double real_tol, double gap_tol) {
  std::vector<BoundaryPoint> out(xhat_grid.size());
  for (std::size_t i = 0; i < xhat_grid.size(); ++i) {
    const double x = xhat_grid[i];
    if (!(x > kInvSqrt3) || !(x < kSqrt3))
      throw kite_error(errc::invalid_argument,
                       "stability boundary xhat must lie in (1/sqrt3, sqrt3)");
    out[i] = boundary_at(x, real_tol, gap_tol);
  }
  return out;
}

double psi_infimum_estimate(double real_tol, double gap_tol) {
  // psi decreases essentially linearly toward the corner; polynomial
  // extrapolation from moderate offsets beats sampling closer in, where the
  // stable strip becomes thinner than the bisection inset
  const std::array<double, 3> offsets = {1e-2, 3e-3, 1e-3};
  std::vector<double> eps, psi;
  for (double e : offsets) {
    try {
      psi.push_back(boundary_at(kInvSqrt3 + e, real_tol, gap_tol).psi);
      eps.push_back(e);
    } catch (const kite_error&) {
    }
  }
  if (eps.empty())
    throw kite_error(errc::bracket_failure,
                     "no boundary sample near the corner succeeded");
  // Lagrange extrapolation to eps = 0 through whatever samples succeeded
  double value = 0.0;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    double weight = 1.0;
    for (std::size_t j = 0; j < eps.size(); ++j)
      if (j != i) weight *= eps[j] / (eps[j] - eps[i]);
    value += weight * psi[i];
  }
  return value;
}

}  // namespace kitecc
