#include "kitecc/cc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "kitecc/cc_core.hpp"
#include "kitecc/kite_domain.hpp"

namespace kitecc {

namespace {

constexpr int kSeedsPerAxis = 40;
constexpr double kSeedInset = 1e-3;
constexpr double kNewtonTol = 1e-12;
constexpr int kMaxIterations = 50;
constexpr double kFdStep = 1e-6;
constexpr double kCondLimit = 1e10;
constexpr double kDedupRadius = 1e-7;
constexpr double kResidualTol = 1e-10;
constexpr double kBoxPad = 0.05;

struct Vec2 {
  double x = 0.0, y = 0.0;
};

std::optional<Vec2> mismatch(const ReducedShape& s, const MassTriple& target) {
  try {
    const MassTriple got = mass_map(s);
    return Vec2{got.m1 - target.m1, got.m3 - target.m3};
  } catch (const kite_error&) {
    return std::nullopt;
  }
}

// columns: d/dx, d/dy of (m1, m3)
std::optional<std::array<double, 4>> fd_jacobian(const ReducedShape& s) {
  try {
    return mass_map_jacobian(s, kFdStep);
  } catch (const kite_error&) {
    return std::nullopt;
  }
}

double cond_2x2(const std::array<double, 4>& j) {
  // singular values from the eigenvalues of J^T J
  const double a = j[0] * j[0] + j[2] * j[2];
  const double b = j[0] * j[1] + j[2] * j[3];
  const double d = j[1] * j[1] + j[3] * j[3];
  const double tr = a + d;
  const double det = a * d - b * b;
  const double disc = std::max(0.0, tr * tr / 4.0 - det);
  const double hi = tr / 2.0 + std::sqrt(disc);
  const double lo = tr / 2.0 - std::sqrt(disc);
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(hi / lo);
}

bool in_padded_box(const RegionBox& box, const ReducedShape& s) {
  return s.xhat >= box.x_lo - kBoxPad && s.xhat <= box.x_hi + kBoxPad &&
         s.yhat >= box.y_lo - kBoxPad && s.yhat <= box.y_hi + kBoxPad;
}

std::optional<ReducedShape> newton_from_seed(ReducedShape s,
                                             const MassTriple& target,
                                             const RegionBox& box) {
  int polish_left = -1;  // extra full steps once the tolerance is reached,
                         // driving the mismatch to its roundoff floor
  ReducedShape best = s;
  double best_err = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto g = mismatch(s, target);
    if (!g) return polish_left >= 0 ? std::optional(best) : std::nullopt;
    const double err = std::max(std::abs(g->x), std::abs(g->y));
    if (err < best_err) {
      best_err = err;
      best = s;
    }
    if (err < kNewtonTol && polish_left < 0) polish_left = 2;
    if (polish_left == 0) return best;
    if (polish_left > 0) --polish_left;

    const auto j = fd_jacobian(s);
    if (!j) return polish_left >= 0 ? std::optional(best) : std::nullopt;
    const auto& J = *j;

    Vec2 delta;
    if (cond_2x2(J) > kCondLimit) {
      // Levenberg-style damped step where the mass map loses rank
      const double a = J[0] * J[0] + J[2] * J[2];
      const double b = J[0] * J[1] + J[2] * J[3];
      const double d = J[1] * J[1] + J[3] * J[3];
      const double tau = 1e-8 * std::max(a, d) + 1e-300;
      const double g1 = J[0] * g->x + J[2] * g->y;
      const double g2 = J[1] * g->x + J[3] * g->y;
      const double det = (a + tau) * (d + tau) - b * b;
      delta.x = -((d + tau) * g1 - b * g2) / det;
      delta.y = -(-b * g1 + (a + tau) * g2) / det;
    } else {
      const double det = J[0] * J[3] - J[1] * J[2];
      if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
      delta.x = -(J[3] * g->x - J[1] * g->y) / det;
      delta.y = -(-J[2] * g->x + J[0] * g->y) / det;
    }

    double t = 1.0;
    ReducedShape next{s.xhat + delta.x, s.yhat + delta.y};
    while (!in_padded_box(box, next) || !mismatch(next, target)) {
      t *= 0.5;
      if (t < 1e-12) return polish_left >= 0 ? std::optional(best) : std::nullopt;
      next = ReducedShape{s.xhat + t * delta.x, s.yhat + t * delta.y};
    }
    s = next;
  }
  return polish_left >= 0 ? std::optional(best) : std::nullopt;
}

void seeds_for_region(Region region, std::vector<ReducedShape>& out) {
  const RegionBox box = region_box(region);
  for (int i = 0; i < kSeedsPerAxis; ++i) {
    const double x = box.x_lo + kSeedInset +
                     i * (box.x_hi - box.x_lo - 2.0 * kSeedInset) /
                         (kSeedsPerAxis - 1);
    double y_lo, y_hi;
    switch (region) {
      case Region::ConvexC:
        y_lo = lower_boundary_convex(x) + kSeedInset;
        y_hi = x - kSeedInset;
        break;
      case Region::Concave1:
        y_lo = -kSqrt3 + kSeedInset;
        y_hi = concave_boundary(x) - kSeedInset;
        break;
      case Region::Concave2:
        y_lo = concave_boundary(x) + kSeedInset;
        y_hi = -kSeedInset;
        break;
      default:
        return;
    }
    if (y_hi <= y_lo) continue;
    for (int j = 0; j < kSeedsPerAxis; ++j)
      out.push_back({x, y_lo + j * (y_hi - y_lo) / (kSeedsPerAxis - 1)});
  }
}

bool region_matches(Region got, bool want_concave) {
  if (want_concave)
    return got == Region::Concave1 || got == Region::Concave2;
  return got == Region::ConvexC;
}

SolveResult run_multistart(const MassTriple& target, bool want_concave) {
  std::vector<ReducedShape> seeds;
  if (want_concave) {
    seeds_for_region(Region::Concave1, seeds);
    seeds_for_region(Region::Concave2, seeds);
  } else {
    seeds_for_region(Region::ConvexC, seeds);
  }

  std::vector<ReducedShape> found;
  for (const ReducedShape& seed : seeds) {
    const Region seed_region = classify_region(seed);
    if (!region_matches(seed_region, want_concave)) continue;
    const RegionBox box = region_box(seed_region);
    const auto sol = newton_from_seed(seed, target, box);
    if (!sol) continue;

    Region sol_region;
    try {
      sol_region = classify_region(*sol);
    } catch (const kite_error&) {
      continue;
    }
    if (!region_matches(sol_region, want_concave)) continue;
    const CCResidual g = cc_residual(*sol, target);
    if (std::abs(g.g1) >= kResidualTol || std::abs(g.g2) >= kResidualTol) continue;

    bool duplicate = false;
    for (const ReducedShape& prev : found)
      if (std::hypot(prev.xhat - sol->xhat, prev.yhat - sol->yhat) <= kDedupRadius) {
        duplicate = true;
        break;
      }
    if (!duplicate) found.push_back(*sol);
  }

  std::sort(found.begin(), found.end(), [](const ReducedShape& a, const ReducedShape& b) {
    if (a.xhat != b.xhat) return a.xhat < b.xhat;
    return a.yhat < b.yhat;
  });

  SolveResult result;
  for (const ReducedShape& s : found) {
    result.solutions.push_back(s);
    const CCResidual g = cc_residual(s, target);
    result.residuals.push_back(std::max(std::abs(g.g1), std::abs(g.g2)));
    result.regions.push_back(classify_region(s));
  }
  return result;
}

}  // namespace

SolveResult solve_convex(const MassTriple& masses) {
  const bool swap = masses.m3 > masses.m1;
  const MassTriple canonical =
      swap ? MassTriple{masses.m3, masses.m1, masses.m} : masses;
  SolveResult result = run_multistart(canonical, /*want_concave=*/false);
  if (result.solutions.empty())
    throw kite_error(errc::convergence_failure,
                     "solve_convex: no Newton start converged");
  if (swap) {
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      std::swap(result.solutions[i].xhat, result.solutions[i].yhat);
      const CCResidual g = cc_residual(result.solutions[i], masses);
      result.residuals[i] = std::max(std::abs(g.g1), std::abs(g.g2));
      // region of the canonical labeling: classify the mirrored twin
      result.regions[i] = classify_region(
          ReducedShape{result.solutions[i].yhat, result.solutions[i].xhat});
    }
  }
  return result;
}

SolveResult solve_concave(const MassTriple& masses) {
  return run_multistart(masses, /*want_concave=*/true);
}

}  // namespace kitecc
