#include "kitecc.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "kitecc/cc_core.hpp"
#include "kitecc/cc_solver.hpp"
#include "kitecc/kite_domain.hpp"
#include "kitecc/scan.hpp"
#include "kitecc/spectral_index.hpp"
#include "kitecc/stability.hpp"

using namespace kitecc;

namespace {

thread_local std::string g_last_error;

kitecc_status status_from(errc code) {
  switch (code) {
    case errc::invalid_argument: return KITECC_ERR_INVALID_ARGUMENT;
    case errc::non_positive_geometry: return KITECC_ERR_NONPOSITIVE_GEOMETRY;
    case errc::collision: return KITECC_ERR_COLLISION;
    case errc::degenerate_distances: return KITECC_ERR_DEGENERATE_DISTANCES;
    case errc::undefined_at_gon: return KITECC_ERR_UNDEFINED_AT_GON;
    case errc::non_positive_mass: return KITECC_ERR_NONPOSITIVE_MASS;
    case errc::invalid_slope: return KITECC_ERR_INVALID_SLOPE;
    case errc::convergence_failure: return KITECC_ERR_CONVERGENCE;
    case errc::not_central: return KITECC_ERR_NOT_CENTRAL;
    case errc::degenerate_basis: return KITECC_ERR_DEGENERATE_BASIS;
    case errc::eigen_failure: return KITECC_ERR_EIGEN;
    case errc::no_bracket: return KITECC_ERR_NO_BRACKET;
    case errc::seed_failure: return KITECC_ERR_SEED;
    case errc::bracket_failure: return KITECC_ERR_BRACKET;
    case errc::io_error: return KITECC_ERR_IO;
  }
  return KITECC_ERR_INTERNAL;
}

template <typename Fn>
kitecc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return KITECC_OK;
  } catch (const kite_error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KITECC_ERR_INTERNAL;
  }
}

kitecc_region to_c(Region r) {
  switch (r) {
    case Region::ConvexC: return KITECC_REGION_CONVEX;
    case Region::Concave1: return KITECC_REGION_CONCAVE1;
    case Region::Concave2: return KITECC_REGION_CONCAVE2;
    case Region::OnePlusThreeGon: return KITECC_REGION_ONE_PLUS_THREE_GON;
    case Region::BoundaryRhombus: return KITECC_REGION_BOUNDARY_RHOMBUS;
    case Region::BoundaryRestricted: return KITECC_REGION_BOUNDARY_RESTRICTED;
    case Region::BoundaryOnePlusThree: return KITECC_REGION_BOUNDARY_ONE_PLUS_THREE;
    case Region::Outside: return KITECC_REGION_OUTSIDE;
  }
  return KITECC_REGION_OUTSIDE;
}

Region from_c(kitecc_region r) {
  switch (r) {
    case KITECC_REGION_CONVEX: return Region::ConvexC;
    case KITECC_REGION_CONCAVE1: return Region::Concave1;
    case KITECC_REGION_CONCAVE2: return Region::Concave2;
    case KITECC_REGION_ONE_PLUS_THREE_GON: return Region::OnePlusThreeGon;
    case KITECC_REGION_BOUNDARY_RHOMBUS: return Region::BoundaryRhombus;
    case KITECC_REGION_BOUNDARY_RESTRICTED: return Region::BoundaryRestricted;
    case KITECC_REGION_BOUNDARY_ONE_PLUS_THREE: return Region::BoundaryOnePlusThree;
    case KITECC_REGION_OUTSIDE: return Region::Outside;
  }
  throw kite_error(errc::invalid_argument, "unknown region code");
}

MassTriple masses_from(const double m[3]) {
  if (m == nullptr)
    throw kite_error(errc::invalid_argument, "null mass array");
  return MassTriple::from_all(m[0], m[1], m[2]);
}

void write_to(const char* path, const std::function<void(std::ostream&)>& writer) {
  if (path == nullptr)
    throw kite_error(errc::invalid_argument, "null output path");
  if (std::string(path) == "-") {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw kite_error(errc::io_error, std::string("cannot open ") + path);
  writer(os);
  if (!os) throw kite_error(errc::io_error, std::string("write failed: ") + path);
}

}  // namespace

struct kitecc_solutions {
  SolveResult result;
};

struct kitecc_scan {
  ScanResult result;
};

struct kitecc_curve {
  std::vector<CurvePoint> points;
  std::string name;
};

extern "C" {

const char* kitecc_version(void) { return kVersion; }

const char* kitecc_status_name(kitecc_status status) {
  switch (status) {
    case KITECC_OK: return "ok";
    case KITECC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KITECC_ERR_NONPOSITIVE_GEOMETRY: return "nonpositive geometry";
    case KITECC_ERR_COLLISION: return "collision";
    case KITECC_ERR_DEGENERATE_DISTANCES: return "degenerate distances";
    case KITECC_ERR_UNDEFINED_AT_GON: return "mass map undefined at the 1+3-gon";
    case KITECC_ERR_NONPOSITIVE_MASS: return "nonpositive mass";
    case KITECC_ERR_INVALID_SLOPE: return "invalid slope";
    case KITECC_ERR_CONVERGENCE: return "convergence failure";
    case KITECC_ERR_NOT_CENTRAL: return "not a central configuration";
    case KITECC_ERR_DEGENERATE_BASIS: return "degenerate basis";
    case KITECC_ERR_EIGEN: return "eigensolver failure";
    case KITECC_ERR_NO_BRACKET: return "no bracket";
    case KITECC_ERR_SEED: return "seed failure";
    case KITECC_ERR_BRACKET: return "bracket failure";
    case KITECC_ERR_IO: return "i/o error";
    case KITECC_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* kitecc_last_error(void) { return g_last_error.c_str(); }

const char* kitecc_region_name(kitecc_region region) {
  try {
    return region_name(from_c(region));
  } catch (...) {
    return "unknown";
  }
}

kitecc_status kitecc_classify(double xhat, double yhat, kitecc_region* region) {
  return guarded([&] {
    if (!region) throw kite_error(errc::invalid_argument, "null output");
    *region = to_c(classify_region(ReducedShape{xhat, yhat}));
  });
}

kitecc_status kitecc_mass_map(double xhat, double yhat, double m[3]) {
  return guarded([&] {
    if (!m) throw kite_error(errc::invalid_argument, "null output");
    const MassTriple triple = mass_map(ReducedShape{xhat, yhat});
    m[0] = triple.m1;
    m[1] = triple.m3;
    m[2] = triple.m;
  });
}

kitecc_status kitecc_limit_masses_13gon(double slope, double m[3]) {
  return guarded([&] {
    if (!m) throw kite_error(errc::invalid_argument, "null output");
    const MassTriple triple = limit_masses_13gon(slope);
    m[0] = triple.m1;
    m[1] = triple.m3;
    m[2] = triple.m;
  });
}

kitecc_status kitecc_lambda_hat(double xhat, double yhat, const double m[3],
                                double* out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    *out = lambda_hat(ReducedShape{xhat, yhat}, masses_from(m));
  });
}

kitecc_status kitecc_cc_residual(double xhat, double yhat, const double m[3],
                                 double g[2]) {
  return guarded([&] {
    if (!g) throw kite_error(errc::invalid_argument, "null output");
    const CCResidual res = cc_residual(ReducedShape{xhat, yhat}, masses_from(m));
    g[0] = res.g1;
    g[1] = res.g2;
  });
}

kitecc_status kitecc_dziobek_residual(double xhat, double yhat, const double m[3],
                                      double* out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    *out = dziobek_residual(ReducedShape{xhat, yhat}, masses_from(m));
  });
}

kitecc_status kitecc_f_value(double xhat, double yhat, double* out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    *out = F_value(ReducedShape{xhat, yhat});
  });
}

kitecc_status kitecc_index_sign(double xhat, double yhat, const double m[3],
                                double tol, int* out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    *out = index_sign(ReducedShape{xhat, yhat}, masses_from(m), tol);
  });
}

kitecc_status kitecc_spectrum(double xhat, double yhat, const double m[3],
                              double real_tol, double gap_tol, double eig_re[8],
                              double eig_im[8], int klass[3], double* max_real,
                              int* stable) {
  return guarded([&] {
    const ReducedShape shape{xhat, yhat};
    const MassTriple masses = m ? masses_from(m) : mass_map(shape);
    if (real_tol <= 0.0) real_tol = kDefaultRealTol;
    if (gap_tol <= 0.0) gap_tol = kDefaultGapTol;
    const SpectrumReport report = spectrum_at(shape, masses, real_tol, gap_tol);
    for (int i = 0; i < 8; ++i) {
      if (eig_re) eig_re[i] = report.eigenvalues[i].real();
      if (eig_im) eig_im[i] = report.eigenvalues[i].imag();
    }
    if (klass)
      for (int i = 0; i < 3; ++i) klass[i] = report.klass[i];
    if (max_real) *max_real = report.max_real;
    if (stable) *stable = report.stable ? 1 : 0;
  });
}

kitecc_status kitecc_solve(const double m[3], int concave, kitecc_solutions** out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    const MassTriple masses = masses_from(m);
    auto* handle = new kitecc_solutions;
    try {
      handle->result = concave ? solve_concave(masses) : solve_convex(masses);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

int kitecc_solutions_count(const kitecc_solutions* s) {
  return s ? static_cast<int>(s->result.solutions.size()) : 0;
}

kitecc_status kitecc_solutions_get(const kitecc_solutions* s, int idx,
                                   double* xhat, double* yhat, double* residual,
                                   kitecc_region* region) {
  return guarded([&] {
    if (!s || idx < 0 || idx >= static_cast<int>(s->result.solutions.size()))
      throw kite_error(errc::invalid_argument, "solution index out of range");
    if (xhat) *xhat = s->result.solutions[idx].xhat;
    if (yhat) *yhat = s->result.solutions[idx].yhat;
    if (residual) *residual = s->result.residuals[idx];
    if (region) *region = to_c(s->result.regions[idx]);
  });
}

void kitecc_solutions_free(kitecc_solutions* s) { delete s; }

kitecc_status kitecc_scan_region(kitecc_region region, int n, kitecc_what what,
                                 double real_tol, double gap_tol,
                                 kitecc_scan** out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    ScanWhat w = ScanWhat::Index;
    if (what == KITECC_WHAT_MASSES) w = ScanWhat::Masses;
    if (what == KITECC_WHAT_STABILITY) w = ScanWhat::Stability;
    if (real_tol <= 0.0) real_tol = kDefaultRealTol;
    if (gap_tol <= 0.0) gap_tol = kDefaultGapTol;
    auto* handle = new kitecc_scan;
    try {
      handle->result = scan_region(from_c(region), n, w, real_tol, gap_tol);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

kitecc_status kitecc_scan_lines(kitecc_region region, int lines, int n,
                                kitecc_scan** out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    auto* handle = new kitecc_scan;
    try {
      handle->result = scan_mass_lines(from_c(region), lines, n);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

long kitecc_scan_size(const kitecc_scan* scan) {
  return scan ? static_cast<long>(scan->result.rows.size()) : 0;
}

kitecc_status kitecc_scan_write(const kitecc_scan* scan, const char* path,
                                kitecc_format format) {
  return guarded([&] {
    if (!scan) throw kite_error(errc::invalid_argument, "null scan");
    write_to(path, [&](std::ostream& os) {
      switch (format) {
        case KITECC_FORMAT_CSV: write_scan_csv(scan->result, os); break;
        case KITECC_FORMAT_JSON: write_scan_json(scan->result, os); break;
        case KITECC_FORMAT_SVG: write_scan_svg(scan->result, os); break;
        default:
          throw kite_error(errc::invalid_argument, "unknown format");
      }
    });
  });
}

void kitecc_scan_free(kitecc_scan* scan) { delete scan; }

kitecc_status kitecc_trace_degeneracy(double step, kitecc_curve** out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    auto* handle = new kitecc_curve;
    try {
      handle->points = trace_degeneracy_curve(step);
      handle->name = "degeneracy";
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

kitecc_status kitecc_trace_stability_boundary(int grid, double real_tol,
                                              double gap_tol, kitecc_curve** out) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    if (grid < 2) throw kite_error(errc::invalid_argument, "grid must be >= 2");
    if (real_tol <= 0.0) real_tol = kDefaultRealTol;
    if (gap_tol <= 0.0) gap_tol = kDefaultGapTol;
    std::vector<double> xs(grid);
    for (int i = 0; i < grid; ++i)
      xs[i] = kInvSqrt3 + (i + 1) * (kSqrt3 - kInvSqrt3) / (grid + 1);
    auto* handle = new kitecc_curve;
    try {
      for (const auto& p : trace_stability_boundary(xs, real_tol, gap_tol))
        handle->points.push_back({p.xhat, p.yhat, p.psi});
      handle->name = "stability_boundary";
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

kitecc_status kitecc_psi_profile(int grid, double real_tol, double gap_tol,
                                 kitecc_curve** out, double* psi_infimum) {
  return guarded([&] {
    if (!out) throw kite_error(errc::invalid_argument, "null output");
    if (real_tol <= 0.0) real_tol = kDefaultRealTol;
    if (gap_tol <= 0.0) gap_tol = kDefaultGapTol;
    auto* handle = new kitecc_curve;
    try {
      const PsiProfile profile = psi_profile(grid, real_tol, gap_tol);
      handle->points = profile.points;
      handle->name = "psi_profile";
      if (psi_infimum) *psi_infimum = profile.psi_infimum;
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

long kitecc_curve_size(const kitecc_curve* curve) {
  return curve ? static_cast<long>(curve->points.size()) : 0;
}

kitecc_status kitecc_curve_get(const kitecc_curve* curve, long idx, double* xhat,
                               double* yhat, double* psi) {
  return guarded([&] {
    if (!curve || idx < 0 || idx >= static_cast<long>(curve->points.size()))
      throw kite_error(errc::invalid_argument, "curve index out of range");
    const CurvePoint& p = curve->points[idx];
    if (xhat) *xhat = p.xhat;
    if (yhat) *yhat = p.yhat;
    if (psi) *psi = p.psi ? *p.psi : std::nan("");
  });
}

kitecc_status kitecc_curve_write(const kitecc_curve* curve, const char* path,
                                 kitecc_format format) {
  return guarded([&] {
    if (!curve) throw kite_error(errc::invalid_argument, "null curve");
    write_to(path, [&](std::ostream& os) {
      switch (format) {
        case KITECC_FORMAT_CSV: write_curve_csv(curve->points, os); break;
        case KITECC_FORMAT_JSON: write_curve_json(curve->points, curve->name, os); break;
        case KITECC_FORMAT_SVG: write_curve_svg(curve->points, os); break;
        default:
          throw kite_error(errc::invalid_argument, "unknown format");
      }
    });
  });
}

void kitecc_curve_free(kitecc_curve* curve) { delete curve; }

}  // extern "C"
