#include "kitecc/cc_core.hpp"

#include <cmath>

namespace kitecc {

namespace {

// r^-3 via one square root, no exp/log
inline double inv_cube(double r) { return 1.0 / (r * r * r); }

struct SValues {
  double s12, s13, s23, s24;
};

SValues s_values(const ReducedShape& shape) {
  const MutualDistances d = mutual_distances_reduced(shape);
  return {inv_cube(d.r12), inv_cube(d.r13), inv_cube(d.r23), inv_cube(d.r24)};
}

}  // namespace

double lambda_hat(const ReducedShape& shape, const MassTriple& masses) {
  const SValues s = s_values(shape);
  return masses.m1 * s.s12 + masses.m3 * s.s23 + masses.m * s.s24;
}

CCResidual cc_residual(const ReducedShape& shape, const MassTriple& masses) {
  const SValues s = s_values(shape);
  const double lam = masses.m1 * s.s12 + masses.m3 * s.s23 + masses.m * s.s24;
  const double r13_term = lam - s.s13;
  const double sum = shape.xhat + shape.yhat;
  CCResidual g;
  g.g1 = masses.m * shape.xhat * (s.s12 - lam) - masses.m3 * sum * r13_term;
  g.g2 = masses.m * shape.yhat * (s.s23 - lam) - masses.m1 * sum * r13_term;
  return g;
}

double dziobek_residual(const ReducedShape& shape, const MassTriple& masses) {
  const SValues s = s_values(shape);
  const double lam = masses.m1 * s.s12 + masses.m3 * s.s23 + masses.m * s.s24;
  return (lam - s.s12) * (lam - s.s23) - (lam - s.s13) * (lam - s.s24);
}

double lambda_from_distances(const MutualDistances& d) {
  const double s12 = inv_cube(d.r12);
  const double s13 = inv_cube(d.r13);
  const double s23 = inv_cube(d.r23);
  const double s24 = inv_cube(d.r24);
  const double denom = s12 + s23 - s13 - s24;
  if (std::abs(denom) < 1e-14)
    throw kite_error(errc::degenerate_distances,
                     "lambda_from_distances: s12 + s23 - s13 - s24 vanishes");
  return (s12 * s23 - s13 * s24) / denom;
}

MassTriple mass_map(const ReducedShape& shape) {
  const double x = shape.xhat;
  const double y = shape.yhat;
  if (!(x + y > 0.0))
    throw kite_error(errc::invalid_argument, "mass_map requires xhat + yhat > 0");
  const double gon_tol = 1e-10;
  if ((std::abs(x - kSqrt3) <= gon_tol && std::abs(y + kInvSqrt3) <= gon_tol) ||
      (std::abs(y - kSqrt3) <= gon_tol && std::abs(x + kInvSqrt3) <= gon_tol))
    throw kite_error(errc::undefined_at_gon,
                     "mass map is 0/0 at the 1+3-gon; use limit_masses_13gon");

  const SValues s = s_values(shape);
  const double sum = x + y;
  const double ratio1 = (y / sum) * (s.s23 - s.s24) / (s.s12 - s.s13);
  const double ratio3 = (x / sum) * (s.s12 - s.s24) / (s.s23 - s.s13);
  const double m = 1.0 / (1.0 + ratio1 + ratio3);
  const double m1 = ratio1 * m;
  const double m3 = ratio3 * m;
  if (!std::isfinite(m1) || !std::isfinite(m3) || !std::isfinite(m) ||
      m1 <= 0.0 || m3 <= 0.0 || m <= 0.0) {
    throw kite_error(errc::non_positive_mass,
                     "mass map gives nonpositive mass (m1=" + std::to_string(m1) +
                         ", m3=" + std::to_string(m3) + ", m=" + std::to_string(m) +
                         "); shape is outside the admissible regions");
  }
  return MassTriple{m1, m3, m};
}

std::array<double, 4> mass_map_jacobian(const ReducedShape& shape, double step) {
  const auto eval = [](double x, double y) { return mass_map(ReducedShape{x, y}); };
  const MassTriple px = eval(shape.xhat + step, shape.yhat);
  const MassTriple mx = eval(shape.xhat - step, shape.yhat);
  const MassTriple py = eval(shape.xhat, shape.yhat + step);
  const MassTriple my = eval(shape.xhat, shape.yhat - step);
  const double h2 = 2.0 * step;
  return {(px.m1 - mx.m1) / h2, (py.m1 - my.m1) / h2,
          (px.m3 - mx.m3) / h2, (py.m3 - my.m3) / h2};
}

MassTriple limit_masses_13gon(double k) {
  if (!(k < -2.0 / 3.0))
    throw kite_error(errc::invalid_slope,
                     "limit_masses_13gon requires slope k < -2/3");
  const double denom = 18.0 - kSqrt3 + 27.0 * k;
  const double m1 = (6.0 + 9.0 * k) / denom;
  const double m3 = -kSqrt3 / denom;
  return MassTriple{m1, m3, 1.0 - m1 - m3};
}

std::array<double, 4> gradient_U_xyd(double x, double y, double d,
                                     const MassTriple& masses) {
  const double r12 = std::sqrt(x * x + d * d);
  const double r23 = std::sqrt(y * y + d * d);
  const double r13 = x + y;
  const double r24 = 2.0 * d;
  if (r12 < 1e-13 || r23 < 1e-13 || r13 < 1e-13 || r24 < 1e-13)
    throw kite_error(errc::collision, "gradient undefined at collision");
  const double s12 = inv_cube(r12);
  const double s23 = inv_cube(r23);
  const double s13 = inv_cube(r13);
  const double s24 = inv_cube(r24);
  const double m1 = masses.m1, m3 = masses.m3, m = masses.m;
  return {
      -m * m1 * s12 * x - m1 * m3 * s13 * (x + y),
      -m * m3 * s23 * y - m1 * m3 * s13 * (x + y),
      -m * m1 * s12 * x + m * m3 * s23 * y,
      -m * d * (m1 * s12 + m3 * s23 + m * s24),
  };
}

double potential_xyd(double x, double y, double d, const MassTriple& masses) {
  const double r12 = std::sqrt(x * x + d * d);
  const double r23 = std::sqrt(y * y + d * d);
  const double r13 = x + y;
  const double r24 = 2.0 * d;
  if (r12 < 1e-13 || r23 < 1e-13 || r13 < 1e-13 || r24 < 1e-13)
    throw kite_error(errc::collision, "potential undefined at collision");
  return masses.m * masses.m1 / r12 + masses.m * masses.m3 / r23 +
         masses.m1 * masses.m3 / r13 + masses.m * masses.m / (4.0 * r24);
}

}  // namespace kitecc
