#pragma once

#include "kitecc/types.hpp"

namespace kitecc {

inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kInvSqrt3 = 0.5773502691896257645;
inline constexpr double kBoundaryTol = 1e-12;

// Lower boundary of the convex region: r12 = r13 there.
double lower_boundary_convex(double xhat);

// Curve r13 = r23 separating the two concave regions from each other's
// complement; both concave regions have it as a boundary arc.
double concave_boundary(double xhat);

// Axis-aligned bounding box of a region (ConvexC, Concave1 or Concave2).
struct RegionBox {
  double x_lo, x_hi, y_lo, y_hi;
};
RegionBox region_box(Region region);

// Region membership in reduced coordinates.  Total on xhat + yhat > 0.
// Points within kBoundaryTol of a defining curve get the boundary tag for
// that curve; the rhombus diagonal yhat = xhat itself belongs to ConvexC,
// only the sliver just above it reports BoundaryRhombus.
Region classify_region(const ReducedShape& shape);

// Mutual distances with the off-axis pair at (0, +-1).
MutualDistances mutual_distances_reduced(const ReducedShape& shape);

// Maps a reduced shape to z = (a,b,c,d) at the given scale, i.e. with
// (x,y,d) = scale*(xhat,yhat,1).  Center of mass is zero by construction.
// Throws non_positive_geometry if a <= 0 or a + b <= 0.
FullConfig shape_to_full(const ReducedShape& shape, const MassTriple& masses,
                         double scale);

// Moment of inertia m1 a^2 + m3 b^2 + m c^2 + m d^2.
double moment_of_inertia(const FullConfig& z, const MassTriple& masses);

// shape_to_full with the scale chosen so the moment of inertia equals 1.
FullConfig normalized_config(const ReducedShape& shape, const MassTriple& masses);

}  // namespace kitecc
