#pragma once

#include <vector>

#include "kitecc/types.hpp"

namespace kitecc {

struct SolveResult {
  std::vector<ReducedShape> solutions;  // sorted by xhat, then yhat
  std::vector<double> residuals;        // max |cc residual component| each
  std::vector<Region> regions;          // region of the canonical labeling
};

// The unique convex kite for the given masses.  Solutions come out with
// |xhat| >= |yhat| when m1 >= m3; for m3 > m1 the canonical problem is solved
// with the masses swapped and the mirrored shape (yhat, xhat) is returned.
// Throws convergence_failure if no Newton start converges (a bug signal:
// positive masses always admit a solution).
SolveResult solve_convex(const MassTriple& masses);

// All concave kites with m3 as the interior mass: zero, one or two shapes,
// deduplicated at radius 1e-7.  An empty result is a valid answer.
SolveResult solve_concave(const MassTriple& masses);

}  // namespace kitecc
