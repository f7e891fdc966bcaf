#include "kitecc/kite_domain.hpp"

#include <cmath>

namespace kitecc {

MassTriple MassTriple::from_m1_m3(double m1, double m3) {
  const double m = 1.0 - m1 - m3;
  if (!(m1 > 0.0) || !(m3 > 0.0) || !(m > 0.0) || !(m < 1.0) ||
      !std::isfinite(m1) || !std::isfinite(m3))
    throw kite_error(errc::invalid_argument,
                     "masses must satisfy m1 > 0, m3 > 0, 0 < 1 - m1 - m3 < 1");
  return MassTriple{m1, m3, m};
}

MassTriple MassTriple::from_all(double m1, double m3, double m) {
  if (std::abs(m1 + m3 + m - 1.0) > 1e-12)
    throw kite_error(errc::invalid_argument, "masses must sum to 1");
  return from_m1_m3(m1, m3);
}

const char* region_name(Region r) {
  switch (r) {
    case Region::ConvexC: return "convex";
    case Region::Concave1: return "concave1";
    case Region::Concave2: return "concave2";
    case Region::OnePlusThreeGon: return "one_plus_three_gon";
    case Region::BoundaryRhombus: return "boundary_rhombus";
    case Region::BoundaryRestricted: return "boundary_restricted";
    case Region::BoundaryOnePlusThree: return "boundary_one_plus_three";
    case Region::Outside: return "outside";
  }
  return "unknown";
}

double lower_boundary_convex(double xhat) {
  return -xhat + std::sqrt(xhat * xhat + 1.0);
}

double concave_boundary(double xhat) {
  return -0.5 * (xhat - 1.0 / xhat);
}

RegionBox region_box(Region region) {
  switch (region) {
    case Region::ConvexC:
      return {kInvSqrt3, kSqrt3, 2.0 - kSqrt3, kSqrt3};
    case Region::Concave1:
      return {kSqrt3, 2.0 + kSqrt3, -kSqrt3, -kInvSqrt3};
    case Region::Concave2:
      return {1.0, kSqrt3, -kInvSqrt3, 0.0};
    default:
      throw kite_error(errc::invalid_argument, "region has no bounding box");
  }
}

Region classify_region(const ReducedShape& shape) {
  const double x = shape.xhat;
  const double y = shape.yhat;
  if (!(x + y > 0.0))
    throw kite_error(errc::invalid_argument, "classify_region requires xhat + yhat > 0");
  const double tol = kBoundaryTol;

  if (std::abs(x - kSqrt3) <= tol && std::abs(y + kInvSqrt3) <= tol)
    return Region::OnePlusThreeGon;

  // curves along which the configuration limits to a 1+3-body problem
  if (x >= kInvSqrt3 - tol && x <= kSqrt3 + tol &&
      std::abs(y - lower_boundary_convex(x)) <= tol)
    return Region::BoundaryOnePlusThree;
  if (x >= 1.0 - tol && x <= 2.0 + kSqrt3 + tol &&
      std::abs(y - concave_boundary(x)) <= tol)
    return Region::BoundaryOnePlusThree;

  // restricted-problem curves (one mass vanishes, three primaries remain)
  if (std::abs(x - kSqrt3) <= tol && y >= -kSqrt3 - tol && y <= kSqrt3 + tol)
    return Region::BoundaryRestricted;
  if (std::abs(y) <= tol && x >= 1.0 - tol && x <= kSqrt3 + tol)
    return Region::BoundaryRestricted;
  if (std::abs(y + kSqrt3) <= tol && x >= kSqrt3 - tol && x <= 2.0 + kSqrt3 + tol)
    return Region::BoundaryRestricted;

  // sliver just above the rhombus diagonal; the diagonal itself is convex
  if (y - x > 0.0 && y - x <= tol && x > kInvSqrt3 && x < kSqrt3)
    return Region::BoundaryRhombus;

  if (x > kInvSqrt3 && x < kSqrt3 && y > lower_boundary_convex(x) && y <= x)
    return Region::ConvexC;
  if (x > kSqrt3 && x < 2.0 + kSqrt3 && y > -kSqrt3 && y < concave_boundary(x))
    return Region::Concave1;
  if (x > 1.0 && x < kSqrt3 && y > concave_boundary(x) && y < 0.0)
    return Region::Concave2;

  return Region::Outside;
}

MutualDistances mutual_distances_reduced(const ReducedShape& shape) {
  if (!(shape.xhat + shape.yhat > 0.0))
    throw kite_error(errc::invalid_argument, "shape requires xhat + yhat > 0");
  MutualDistances d;
  d.r12 = std::sqrt(shape.xhat * shape.xhat + 1.0);
  d.r23 = std::sqrt(shape.yhat * shape.yhat + 1.0);
  d.r13 = shape.xhat + shape.yhat;
  d.r24 = 2.0;
  return d;
}

FullConfig shape_to_full(const ReducedShape& shape, const MassTriple& masses,
                         double scale) {
  if (!(scale > 0.0))
    throw kite_error(errc::invalid_argument, "scale must be positive");
  if (!(shape.xhat + shape.yhat > 0.0))
    throw kite_error(errc::invalid_argument, "shape requires xhat + yhat > 0");
  const double x = scale * shape.xhat;
  const double y = scale * shape.yhat;
  FullConfig z;
  z.a = (1.0 - masses.m1) * x + masses.m3 * y;
  z.b = masses.m1 * x + (1.0 - masses.m3) * y;
  z.c = masses.m1 * x - masses.m3 * y;
  z.d = scale;
  if (!(z.a > 0.0) || !(z.a + z.b > 0.0))
    throw kite_error(errc::non_positive_geometry,
                     "configuration requires a > 0 and a + b > 0");
  return z;
}

double moment_of_inertia(const FullConfig& z, const MassTriple& masses) {
  return masses.m1 * z.a * z.a + masses.m3 * z.b * z.b +
         masses.m * z.c * z.c + masses.m * z.d * z.d;
}

FullConfig normalized_config(const ReducedShape& shape, const MassTriple& masses) {
  const FullConfig unit = shape_to_full(shape, masses, 1.0);
  const double inertia = moment_of_inertia(unit, masses);
  return shape_to_full(shape, masses, 1.0 / std::sqrt(inertia));
}

}  // namespace kitecc
