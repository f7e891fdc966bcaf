// Command-line front end for the kitecc shared library.  All functionality
// goes through the C API in kitecc.h; this file only parses arguments and
// formats point results.
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "kitecc.h"

namespace {

int fail(kitecc_status status) {
  std::fprintf(stderr, "error: %s", kitecc_status_name(status));
  const char* detail = kitecc_last_error();
  if (detail && detail[0] != '\0') std::fprintf(stderr, " (%s)", detail);
  std::fprintf(stderr, "\n");
  return 1;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 2;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

kitecc_format parse_format(const std::string& name) {
  if (name == "json") return KITECC_FORMAT_JSON;
  if (name == "svg") return KITECC_FORMAT_SVG;
  return KITECC_FORMAT_CSV;
}

bool parse_region(const std::string& name, kitecc_region& region) {
  if (name == "convex") {
    region = KITECC_REGION_CONVEX;
    return true;
  }
  if (name == "concave1") {
    region = KITECC_REGION_CONCAVE1;
    return true;
  }
  if (name == "concave2") {
    region = KITECC_REGION_CONCAVE2;
    return true;
  }
  return false;
}

struct PointOptions {
  double xhat = 0.0, yhat = 0.0;
  double m1 = -1.0, m3 = -1.0;

  // masses from --m1/--m3 when given, else from the mass map; returns the
  // failing status through `status`
  bool resolve_masses(double m[3], kitecc_status& status) const {
    if (m1 >= 0.0 || m3 >= 0.0) {
      m[0] = m1;
      m[1] = m3;
      m[2] = 1.0 - m1 - m3;
      status = KITECC_OK;
      return true;
    }
    status = kitecc_mass_map(xhat, yhat, m);
    return status == KITECC_OK;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kite central configurations of the four-body problem"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  std::string out_path = "-";
  std::string format_name = "csv";
  double real_tol = 1e-10;
  double gap_tol = 1e-8;
  app.add_option("--out", out_path, "output path ('-' for stdout)");
  app.add_option("--format", format_name, "csv|json|svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--real-tol", real_tol, "imaginary-axis tolerance");
  app.add_option("--gap-tol", gap_tol, "eigenvalue distinctness tolerance");

  // solve
  auto* solve = app.add_subcommand("solve", "solve for kites with given masses");
  double solve_m1 = 0.0, solve_m3 = 0.0;
  std::string solve_type = "convex";
  solve->add_option("--m1", solve_m1, "mass of body 1")->required();
  solve->add_option("--m3", solve_m3, "mass of body 3")->required();
  solve->add_option("--type", solve_type, "convex|concave")
      ->check(CLI::IsMember({"convex", "concave"}));

  // massmap
  auto* massmap = app.add_subcommand("massmap", "masses making a shape central");
  double mm_x = 0.0, mm_y = 0.0;
  massmap->add_option("--xhat", mm_x, "reduced x coordinate")->required();
  massmap->add_option("--yhat", mm_y, "reduced y coordinate")->required();

  // index
  auto* index = app.add_subcommand("index", "index data at a shape");
  PointOptions index_opt;
  index->add_option("--xhat", index_opt.xhat)->required();
  index->add_option("--yhat", index_opt.yhat)->required();
  index->add_option("--m1", index_opt.m1);
  index->add_option("--m3", index_opt.m3);

  // stability
  auto* stability = app.add_subcommand("stability", "spectrum at a shape");
  PointOptions stab_opt;
  stability->add_option("--xhat", stab_opt.xhat)->required();
  stability->add_option("--yhat", stab_opt.yhat)->required();
  stability->add_option("--m1", stab_opt.m1);
  stability->add_option("--m3", stab_opt.m3);

  // scan
  auto* scan = app.add_subcommand("scan", "grid scan over a region");
  std::string scan_region_name;
  std::string scan_what = "index";
  int scan_grid = 300;
  int scan_lines = 0;
  scan->add_option("--region", scan_region_name, "convex|concave1|concave2")
      ->required();
  scan->add_option("--what", scan_what, "masses|index|stability")
      ->check(CLI::IsMember({"masses", "index", "stability"}));
  scan->add_option("--grid", scan_grid, "grid size per axis (default 300)");
  scan->add_option("--lines", scan_lines,
                   "replicate the vertical-line mass-map figure with N lines");

  // trace-degeneracy
  auto* degeneracy = app.add_subcommand("trace-degeneracy",
                                        "trace the degenerate curve F = 0");
  double degeneracy_step = 0.01;
  degeneracy->add_option("--step", degeneracy_step, "continuation step");

  // trace-stability-boundary
  auto* boundary =
      app.add_subcommand("trace-stability-boundary", "trace the stable-strip edge");
  int boundary_grid = 300;
  boundary->add_option("--grid", boundary_grid, "number of xhat samples");

  // psi-profile
  auto* psi = app.add_subcommand("psi-profile",
                                 "dominant-mass ratio along the stability boundary");
  int psi_grid = 300;
  psi->add_option("--grid", psi_grid, "number of xhat samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const kitecc_format format = parse_format(format_name);

  if (solve->parsed()) {
    const double m[3] = {solve_m1, solve_m3, 1.0 - solve_m1 - solve_m3};
    kitecc_solutions* sols = nullptr;
    const kitecc_status rc = kitecc_solve(m, solve_type == "concave" ? 1 : 0, &sols);
    if (rc != KITECC_OK) return fail(rc);
    std::printf("type %s\ncount %d\n", solve_type.c_str(),
                kitecc_solutions_count(sols));
    for (int i = 0; i < kitecc_solutions_count(sols); ++i) {
      double x, y, res;
      kitecc_region region;
      kitecc_solutions_get(sols, i, &x, &y, &res, &region);
      std::printf("solution %d: xhat=%s yhat=%s region=%s residual=%s\n", i,
                  fmt(x).c_str(), fmt(y).c_str(), kitecc_region_name(region),
                  fmt(res).c_str());
    }
    kitecc_solutions_free(sols);
    return 0;
  }

  if (massmap->parsed()) {
    double m[3];
    const kitecc_status rc = kitecc_mass_map(mm_x, mm_y, m);
    if (rc != KITECC_OK) return fail(rc);
    std::printf("m1 %s\nm3 %s\nm %s\nm2 %s\nm4 %s\n", fmt(m[0]).c_str(),
                fmt(m[1]).c_str(), fmt(m[2]).c_str(), fmt(0.5 * m[2]).c_str(),
                fmt(0.5 * m[2]).c_str());
    return 0;
  }

  if (index->parsed()) {
    double m[3];
    kitecc_status rc;
    if (!index_opt.resolve_masses(m, rc)) return fail(rc);
    double f = 0.0;
    int sign = 0;
    rc = kitecc_f_value(index_opt.xhat, index_opt.yhat, &f);
    if (rc != KITECC_OK) return fail(rc);
    rc = kitecc_index_sign(index_opt.xhat, index_opt.yhat, m, -1.0, &sign);
    if (rc != KITECC_OK) return fail(rc);
    double lambda = 0.0;
    kitecc_lambda_hat(index_opt.xhat, index_opt.yhat, m, &lambda);
    std::printf("F %s\nlambda %s\nindex %+d\n", fmt(f).c_str(), fmt(lambda).c_str(),
                sign);
    return 0;
  }

  if (stability->parsed()) {
    double m[3];
    kitecc_status rc;
    if (!stab_opt.resolve_masses(m, rc)) return fail(rc);
    double re[8], im[8], max_real = 0.0;
    int klass[3], stable = 0;
    rc = kitecc_spectrum(stab_opt.xhat, stab_opt.yhat, m, real_tol, gap_tol, re, im,
                         klass, &max_real, &stable);
    if (rc != KITECC_OK) return fail(rc);
    for (int i = 0; i < 8; ++i)
      std::printf("eigenvalue %d: %s %s%si\n", i, fmt(re[i]).c_str(),
                  im[i] < 0.0 ? "-" : "+", fmt(std::abs(im[i])).c_str());
    std::printf("class (%d, %d, %d)\nmax_real %s\nstable %d\n", klass[0], klass[1],
                klass[2], fmt(max_real).c_str(), stable);
    return 0;
  }

  if (scan->parsed()) {
    kitecc_region region;
    if (!parse_region(scan_region_name, region))
      return usage_error("unknown region '" + scan_region_name + "'");
    kitecc_what what = KITECC_WHAT_INDEX;
    if (scan_what == "masses") what = KITECC_WHAT_MASSES;
    if (scan_what == "stability") what = KITECC_WHAT_STABILITY;
    kitecc_scan* handle = nullptr;
    kitecc_status rc;
    if (scan_lines > 0) {
      if (scan_what != "masses")
        return usage_error("--lines only applies to '--what masses'");
      rc = kitecc_scan_lines(region, scan_lines, scan_grid, &handle);
    } else {
      rc = kitecc_scan_region(region, scan_grid, what, real_tol, gap_tol, &handle);
    }
    if (rc != KITECC_OK) return fail(rc);
    rc = kitecc_scan_write(handle, out_path.c_str(), format);
    kitecc_scan_free(handle);
    return rc == KITECC_OK ? 0 : fail(rc);
  }

  if (degeneracy->parsed()) {
    kitecc_curve* curve = nullptr;
    kitecc_status rc = kitecc_trace_degeneracy(degeneracy_step, &curve);
    if (rc != KITECC_OK) return fail(rc);
    rc = kitecc_curve_write(curve, out_path.c_str(), format);
    kitecc_curve_free(curve);
    return rc == KITECC_OK ? 0 : fail(rc);
  }

  if (boundary->parsed()) {
    kitecc_curve* curve = nullptr;
    kitecc_status rc =
        kitecc_trace_stability_boundary(boundary_grid, real_tol, gap_tol, &curve);
    if (rc != KITECC_OK) return fail(rc);
    rc = kitecc_curve_write(curve, out_path.c_str(), format);
    kitecc_curve_free(curve);
    return rc == KITECC_OK ? 0 : fail(rc);
  }

  if (psi->parsed()) {
    kitecc_curve* curve = nullptr;
    double inf_psi = 0.0;
    kitecc_status rc = kitecc_psi_profile(psi_grid, real_tol, gap_tol, &curve, &inf_psi);
    if (rc != KITECC_OK) return fail(rc);
    rc = kitecc_curve_write(curve, out_path.c_str(), format);
    kitecc_curve_free(curve);
    if (rc != KITECC_OK) return fail(rc);
    std::printf("inf_psi_estimate %s\n", fmt(inf_psi).c_str());
    return 0;
  }

  return usage_error("no subcommand given");
}
