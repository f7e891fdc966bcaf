#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kitecc/stability.hpp"
#include "kitecc/types.hpp"

namespace kitecc {

inline constexpr const char* kVersion = "0.1.0";

enum class ScanWhat { Masses, Index, Stability };

struct ScanRow {
  double xhat = 0.0;
  double yhat = 0.0;
  bool in_region = false;
  std::optional<double> m1, m3, m;
  std::optional<double> F;
  std::optional<int> index;
  std::optional<std::array<int, 3>> klass;
  std::optional<double> max_real;
  std::optional<bool> stable;
};

struct ScanMeta {
  std::string region;
  std::string what;
  int grid = 0;
  double real_tol = kDefaultRealTol;
  double gap_tol = kDefaultGapTol;
};

struct ScanResult {
  ScanMeta meta;
  std::vector<ScanRow> rows;  // row-major over the grid
};

// n x n grid over the region's bounding box, inset by 1e-6; rows outside the
// region are kept (marked, not dropped) so grids align across runs.  The
// (xhat, yhat) columns depend only on region and n, never on `what`.
ScanResult scan_region(Region region, int n, ScanWhat what,
                       double real_tol = kDefaultRealTol,
                       double gap_tol = kDefaultGapTol);

// Mass-map image sampling along equally spaced vertical lines (figure
// replication mode): `lines` verticals per concave region, `n` samples each.
ScanResult scan_mass_lines(Region region, int lines, int n);

struct CurvePoint {
  double xhat = 0.0;
  double yhat = 0.0;
  std::optional<double> psi;
};

// Continuation of {F = 0} through the concave regions, seeded at the
// 1+3-gon and traced in both directions; every vertex has |F| < 1e-8.
// Throws seed_failure if F has no sign change around the seed.
std::vector<CurvePoint> trace_degeneracy_curve(double step);

struct PsiProfile {
  std::vector<CurvePoint> points;  // stability boundary with psi per point
  double psi_infimum = 0.0;
};

PsiProfile psi_profile(int grid, double real_tol = kDefaultRealTol,
                       double gap_tol = kDefaultGapTol);

// Deterministic writers; floats are emitted with 17 significant digits and
// absent fields as empty cells, so identical inputs give identical bytes.
void write_scan_csv(const ScanResult& scan, std::ostream& os);
void write_scan_json(const ScanResult& scan, std::ostream& os);
void write_scan_svg(const ScanResult& scan, std::ostream& os);
void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& os);
void write_curve_json(const std::vector<CurvePoint>& curve, const std::string& name,
                      std::ostream& os);
void write_curve_svg(const std::vector<CurvePoint>& curve, std::ostream& os);

// 17-significant-digit float formatting shared by the writers.
std::string format_float(double v);

}  // namespace kitecc
