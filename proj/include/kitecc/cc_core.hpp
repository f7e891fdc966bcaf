#pragma once

#include <array>

#include "kitecc/kite_domain.hpp"
#include "kitecc/types.hpp"

namespace kitecc {

// Lagrange multiplier in reduced coordinates:
// lambda = m1 r12^-3 + m3 r23^-3 + m r24^-3.  Strictly positive.
double lambda_hat(const ReducedShape& shape, const MassTriple& masses);

// Residuals of the two reduced central-configuration equations; both vanish
// exactly at a central configuration.
CCResidual cc_residual(const ReducedShape& shape, const MassTriple& masses);

// (lambda - s12)(lambda - s23) - (lambda - s13)(lambda - s24) with
// s_ij = r_ij^-3; a distance-only compatibility residual that vanishes at
// every kite central configuration.
double dziobek_residual(const ReducedShape& shape, const MassTriple& masses);

// lambda recovered from distances alone:
// (s12 s23 - s13 s24) / (s12 + s23 - s13 - s24).
// Throws degenerate_distances when the denominator magnitude is below 1e-14
// (the 1+3-gon does this; the square does not).
double lambda_from_distances(const MutualDistances& d);

// Unique normalized masses making the given shape central.  Defined on the
// three open regions and their mirror images across the diagonal; undefined
// (0/0) at the 1+3-gon, where the limit depends on the approach direction.
MassTriple mass_map(const ReducedShape& shape);

// Central finite-difference Jacobian of (m1, m3) with respect to
// (xhat, yhat), step 1e-6.  Rank drops to one on the degeneracy curve.
std::array<double, 4> mass_map_jacobian(const ReducedShape& shape,
                                        double step = 1e-6);

// Directional limits of the mass map at the 1+3-gon along a line of slope k,
// valid for k < -2/3.  The limits satisfy m1 = m/2.
MassTriple limit_masses_13gon(double k);

// Gradient of the potential in z = (a,b,c,d) coordinates, written in terms of
// x = a+c, y = b-c and d.  Throws collision if a mutual distance is < 1e-13.
std::array<double, 4> gradient_U_xyd(double x, double y, double d,
                                     const MassTriple& masses);

// Potential U(z) in the same coordinates.
double potential_xyd(double x, double y, double d, const MassTriple& masses);

}  // namespace kitecc
