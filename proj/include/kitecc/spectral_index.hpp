#pragma once

#include "kitecc/numkit.hpp"
#include "kitecc/types.hpp"

namespace kitecc {

// 4x4 matrix A = M^-1 D^2U(z) in reduced coordinates (d scaled to 1).
// A always kills xi = (1,-1,-1,0); at a central configuration A z = 2*lambda z
// with z = (a,b,c,1).
numkit::Mat build_A(const ReducedShape& shape, const MassTriple& masses);

// Product of the two nontrivial eigenvalues of the modified Hessian
// M^-1 D^2U + lambda I, computed from traces:
//   (mu1 + lambda)(mu2 + lambda)
//     = 1/2 [ (tr A)^2 - tr(A^2) ] - lambda tr A + 3 lambda^2.
// Meaningful as an eigenvalue product only when (shape, masses) is central.
double nontrivial_product(const ReducedShape& shape, const MassTriple& masses);

// Mass-free index function F = F1 + F2 + F3 + F4; F > 0 throughout the convex
// region and F = 0 exactly on the degeneracy curve of the concave regions.
double F_value(const ReducedShape& shape);

// Signed multiplier relating F to the eigenvalue product with the shape's
// own mass-map masses:  product * index_factor = m^2 * F.
// The factor is 64 r12^5 r23^5 r13 (r13^3 - r12^3)(r13^3 - r23^3): positive
// on the convex region and on concave type 1, negative on concave type 2, so
// index = sign(F) on the former two and -sign(F) on the latter.
double index_factor(const ReducedShape& shape);

// Sign of nontrivial_product with a degeneracy band of +-tol.
// tol <= 0 selects the default 1e-9 * lambda^2 (the product scales like
// lambda^2 under rescaling, so the band must too).
int index_sign(const ReducedShape& shape, const MassTriple& masses,
               double tol = -1.0);

struct HessianReport {
  numkit::Mat A;
  double lambda_hat = 0.0;
  double product = 0.0;
  int index_sign = 0;
};

HessianReport hessian_report(const ReducedShape& shape, const MassTriple& masses,
                             double tol = -1.0);

}  // namespace kitecc
