#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace kitecc {

// Error categories, mirrored one-to-one by the C API status codes.
enum class errc {
  invalid_argument = 1,
  non_positive_geometry,
  collision,
  degenerate_distances,
  undefined_at_gon,
  non_positive_mass,
  invalid_slope,
  convergence_failure,
  not_central,
  degenerate_basis,
  eigen_failure,
  no_bracket,
  seed_failure,
  bracket_failure,
  io_error,
};

class kite_error : public std::runtime_error {
 public:
  kite_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Normalized masses (m1, m3, m) with m2 = m4 = m/2 and m1 + m3 + m = 1.
struct MassTriple {
  double m1 = 0.0;
  double m3 = 0.0;
  double m = 0.0;

  // Builds the triple from the two axis masses; m is inferred from the
  // normalization.  Throws kite_error(invalid_argument) unless
  // m1 > 0, m3 > 0 and 0 < m < 1.
  static MassTriple from_m1_m3(double m1, double m3);

  // Validates a full triple (sum within 1e-12 of 1) and re-derives m so the
  // normalization holds exactly.
  static MassTriple from_all(double m1, double m3, double m);

  double m2() const { return 0.5 * m; }
  double m4() const { return 0.5 * m; }
};

// Kite shape in reduced coordinates: bodies at (xhat,0), (0,1), (-yhat,0),
// (0,-1).  The off-axis pair is scaled to unit height.
struct ReducedShape {
  double xhat = 0.0;
  double yhat = 0.0;
};

enum class Region {
  ConvexC,
  Concave1,
  Concave2,
  OnePlusThreeGon,
  BoundaryRhombus,
  BoundaryRestricted,
  BoundaryOnePlusThree,
  Outside,
};

const char* region_name(Region r);

// Configuration z = (a,b,c,d) with bodies at (a,0), (-c,d), (-b,0), (-c,-d).
struct FullConfig {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  // Planar embedding q = (a,0,-c,d,-b,0,-c,-d).
  std::array<double, 8> planar() const {
    return {a, 0.0, -c, d, -b, 0.0, -c, -d};
  }

  double x() const { return a + c; }
  double y() const { return b - c; }
};

struct MutualDistances {
  double r12 = 0.0;
  double r13 = 0.0;
  double r23 = 0.0;
  double r24 = 0.0;
};

struct CCResidual {
  double g1 = 0.0;
  double g2 = 0.0;
};

}  // namespace kitecc
