#include "kitecc/spectral_index.hpp"

#include <cmath>

#include "kitecc/cc_core.hpp"
#include "kitecc/kite_domain.hpp"

namespace kitecc {

numkit::Mat build_A(const ReducedShape& shape, const MassTriple& masses) {
  const double x = shape.xhat;
  const double y = shape.yhat;
  const MutualDistances dist = mutual_distances_reduced(shape);
  const double m1 = masses.m1, m3 = masses.m3, m = masses.m;

  const double s12 = 1.0 / (dist.r12 * dist.r12 * dist.r12);
  const double s23 = 1.0 / (dist.r23 * dist.r23 * dist.r23);
  const double s13 = 1.0 / (dist.r13 * dist.r13 * dist.r13);
  const double s24 = 0.125;  // r24 = 2
  const double p12 = s12 / (dist.r12 * dist.r12);  // r12^-5
  const double p23 = s23 / (dist.r23 * dist.r23);

  const double lam = m1 * s12 + m3 * s23 + m * s24;
  const double a1 = 2.0 * x * x - 1.0;
  const double a2 = 2.0 * y * y - 1.0;

  const double z1 = m * p12 * a1 + 2.0 * m3 * s13;
  const double z2 = m * p23 * a2 + 2.0 * m1 * s13;
  const double z3 = m1 * p12 * a1 + m3 * p23 * a2;
  const double z4 = 3.0 * m1 * p12 + 3.0 * m3 * p23 + 3.0 * m * s24 - lam;

  numkit::Mat A(4);
  A(0, 0) = z1;
  A(0, 1) = 2.0 * m3 * s13;
  A(0, 2) = m * p12 * a1;
  A(0, 3) = 3.0 * m * x * p12;

  A(1, 0) = 2.0 * m1 * s13;
  A(1, 1) = z2;
  A(1, 2) = -m * p23 * a2;
  A(1, 3) = 3.0 * m * y * p23;

  A(2, 0) = m1 * p12 * a1;
  A(2, 1) = -m3 * p23 * a2;
  A(2, 2) = z3;
  A(2, 3) = 3.0 * m1 * x * p12 - 3.0 * m3 * y * p23;

  A(3, 0) = 3.0 * m1 * x * p12;
  A(3, 1) = 3.0 * m3 * y * p23;
  A(3, 2) = 3.0 * m1 * x * p12 - 3.0 * m3 * y * p23;
  A(3, 3) = z4;
  return A;
}

double nontrivial_product(const ReducedShape& shape, const MassTriple& masses) {
  const numkit::Mat A = build_A(shape, masses);
  const double lam = lambda_hat(shape, masses);
  const double tr = A.trace();
  const double tr2 = (A * A).trace();
  return 0.5 * (tr * tr - tr2) - lam * tr + 3.0 * lam * lam;
}

namespace {

inline double cube(double v) { return v * v * v; }

}  // namespace

double F_value(const ReducedShape& shape) {
  const double x = shape.xhat;
  const double y = shape.yhat;
  if (!(x + y > 0.0))
    throw kite_error(errc::invalid_argument, "F_value requires xhat + yhat > 0");

  const double r12 = std::sqrt(x * x + 1.0);
  const double r23 = std::sqrt(y * y + 1.0);
  const double r13 = x + y;
  const double r12_3 = cube(r12), r23_3 = cube(r23), r13_3 = cube(r13);
  const double r12_5 = r12_3 * r12 * r12;
  const double r23_5 = r23_3 * r23 * r23;
  const double r13_7 = r13_3 * r13_3 * r13;

  const double a1 = 2.0 * x * x - 1.0;
  const double a2 = 2.0 * y * y - 1.0;
  const double b1 = 4.0 * x * x + 1.0;
  const double b2 = 4.0 * y * y + 1.0;

  const double f1 = r13 * (r13_3 - r12_3) * (r13_3 - r23_3) *
                    (r12_5 + 8.0 * a1) * (r23_5 + 8.0 * a2);
  const double f2 = y * r23 * r23 * (r13_3 - r23_3) * (8.0 - r23_3) *
                    (r13_3 * (r12_5 + 6.0 * x * x * r12_3 - 8.0 * b1) +
                     2.0 * r12_3 * (r12_5 + 8.0 * a1));
  const double f3 = x * r12 * r12 * (r13_3 - r12_3) * (8.0 - r12_3) *
                    (r13_3 * (r23_5 + 6.0 * y * y * r23_3 - 8.0 * b2) +
                     2.0 * r23_3 * (r23_5 + 8.0 * a2));
  const double f4 = 9.0 * x * y * r13_7 * (8.0 - r12_3) * (8.0 - r23_3);
  return f1 + f2 + f3 + f4;
}

double index_factor(const ReducedShape& shape) {
  const double x = shape.xhat;
  const double y = shape.yhat;
  const double r12 = std::sqrt(x * x + 1.0);
  const double r23 = std::sqrt(y * y + 1.0);
  const double r13 = x + y;
  const double r12_3 = cube(r12), r23_3 = cube(r23), r13_3 = cube(r13);
  const double r12_5 = r12_3 * r12 * r12;
  const double r23_5 = r23_3 * r23 * r23;
  return 64.0 * r12_5 * r23_5 * r13 * (r13_3 - r12_3) * (r13_3 - r23_3);
}

int index_sign(const ReducedShape& shape, const MassTriple& masses, double tol) {
  const double product = nontrivial_product(shape, masses);
  if (tol <= 0.0) {
    const double lam = lambda_hat(shape, masses);
    tol = 1e-9 * lam * lam;
  }
  if (product > tol) return 1;
  if (product < -tol) return -1;
  return 0;
}

HessianReport hessian_report(const ReducedShape& shape, const MassTriple& masses,
                             double tol) {
  HessianReport report{build_A(shape, masses), lambda_hat(shape, masses), 0.0, 0};
  const double tr = report.A.trace();
  const double tr2 = (report.A * report.A).trace();
  report.product = 0.5 * (tr * tr - tr2) - report.lambda_hat * tr +
                   3.0 * report.lambda_hat * report.lambda_hat;
  if (tol <= 0.0) tol = 1e-9 * report.lambda_hat * report.lambda_hat;
  report.index_sign = report.product > tol ? 1 : (report.product < -tol ? -1 : 0);
  return report;
}

}  // namespace kitecc
