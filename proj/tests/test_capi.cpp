#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "kitecc.h"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const double kSqrt3 = 1.7320508075688772;
const double kInvSqrt3 = 0.5773502691896258;

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(kitecc_version()) == "0.1.0");
  CHECK(std::string(kitecc_status_name(KITECC_OK)) == "ok");
  CHECK(std::string(kitecc_region_name(KITECC_REGION_CONVEX)) == "convex");
}

TEST_CASE("classify and mass map") {
  kitecc_region region;
  REQUIRE(kitecc_classify(1.0, 1.0, &region) == KITECC_OK);
  CHECK(region == KITECC_REGION_CONVEX);
  REQUIRE(kitecc_classify(2.0, -1.0, &region) == KITECC_OK);
  CHECK(region == KITECC_REGION_CONCAVE1);

  double m[3];
  REQUIRE(kitecc_mass_map(2.0, -1.0, m) == KITECC_OK);
  CHECK(m[0] == doctest::Approx(0.1844).epsilon(5e-4));
  CHECK(m[1] == doctest::Approx(0.0808).epsilon(5e-3));
  CHECK(m[2] == doctest::Approx(0.7347).epsilon(5e-4));

  CHECK(kitecc_mass_map(kSqrt3, -kInvSqrt3, m) == KITECC_ERR_UNDEFINED_AT_GON);
  CHECK(std::string(kitecc_last_error()).find("1+3-gon") != std::string::npos);
}

TEST_CASE("point evaluations") {
  double m[3];
  REQUIRE(kitecc_mass_map(1.0, 1.0, m) == KITECC_OK);

  double lambda = 0.0;
  REQUIRE(kitecc_lambda_hat(1.0, 1.0, m, &lambda) == KITECC_OK);
  CHECK(lambda == doctest::Approx(0.5 * (std::pow(2.0, -1.5) + 0.125)).epsilon(1e-14));

  double g[2];
  REQUIRE(kitecc_cc_residual(1.0, 1.0, m, g) == KITECC_OK);
  CHECK(std::abs(g[0]) < 1e-14);
  CHECK(std::abs(g[1]) < 1e-14);

  double dz = 1.0;
  REQUIRE(kitecc_dziobek_residual(1.0, 1.0, m, &dz) == KITECC_OK);
  CHECK(std::abs(dz) < 1e-14);

  double f = 0.0;
  REQUIRE(kitecc_f_value(kInvSqrt3, kInvSqrt3, &f) == KITECC_OK);
  CHECK(f == doctest::Approx(342.71).epsilon(0.002));

  int sign = 0;
  REQUIRE(kitecc_index_sign(1.0, 1.0, m, -1.0, &sign) == KITECC_OK);
  CHECK(sign == 1);

  REQUIRE(kitecc_limit_masses_13gon(-1.0, m) == KITECC_OK);
  CHECK(std::abs(m[1] - (1.0 - 3.0 * m[0])) < 1e-12);
  CHECK(kitecc_limit_masses_13gon(0.0, m) == KITECC_ERR_INVALID_SLOPE);
}

TEST_CASE("spectrum with explicit and mass-map masses") {
  double re[8], im[8], max_real = 0.0;
  int klass[3], stable = -1;
  REQUIRE(kitecc_spectrum(1.0, 1.0, nullptr, -1.0, -1.0, re, im, klass, &max_real,
                          &stable) == KITECC_OK);
  CHECK(stable == 0);
  CHECK(max_real > 1e-3);
  CHECK(klass[0] + klass[1] + klass[2] == 8);

  const double y = -1.0 + std::sqrt(2.0) + 1e-4;
  REQUIRE(kitecc_spectrum(1.0, y, nullptr, -1.0, -1.0, re, im, klass, &max_real,
                          &stable) == KITECC_OK);
  CHECK(stable == 1);
  CHECK(klass[2] == 8);
}

TEST_CASE("solver handles") {
  const double m[3] = {0.25, 0.25, 0.5};
  kitecc_solutions* sols = nullptr;
  REQUIRE(kitecc_solve(m, 0, &sols) == KITECC_OK);
  REQUIRE(kitecc_solutions_count(sols) == 1);
  double x, y, res;
  kitecc_region region;
  REQUIRE(kitecc_solutions_get(sols, 0, &x, &y, &res, &region) == KITECC_OK);
  CHECK(x == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(y == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(res < 1e-10);
  CHECK(region == KITECC_REGION_CONVEX);
  CHECK(kitecc_solutions_get(sols, 5, &x, &y, &res, &region) ==
        KITECC_ERR_INVALID_ARGUMENT);
  kitecc_solutions_free(sols);

  const double none[3] = {0.25, 0.4, 0.35};
  kitecc_solutions* empty = nullptr;
  REQUIRE(kitecc_solve(none, 1, &empty) == KITECC_OK);
  CHECK(kitecc_solutions_count(empty) == 0);
  kitecc_solutions_free(empty);
}

TEST_CASE("scan handle and writers") {
  kitecc_scan* scan = nullptr;
  REQUIRE(kitecc_scan_region(KITECC_REGION_CONVEX, 6, KITECC_WHAT_INDEX, -1.0, -1.0,
                             &scan) == KITECC_OK);
  CHECK(kitecc_scan_size(scan) == 36);

  const std::string csv_path = "capi_scan_test.csv";
  REQUIRE(kitecc_scan_write(scan, csv_path.c_str(), KITECC_FORMAT_CSV) == KITECC_OK);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("xhat,yhat,in_region", 0) == 0);

  const std::string json_path = "capi_scan_test.json";
  REQUIRE(kitecc_scan_write(scan, json_path.c_str(), KITECC_FORMAT_JSON) == KITECC_OK);
  CHECK(slurp(json_path).find("\"rows\"") != std::string::npos);

  const std::string svg_path = "capi_scan_test.svg";
  REQUIRE(kitecc_scan_write(scan, svg_path.c_str(), KITECC_FORMAT_SVG) == KITECC_OK);
  CHECK(slurp(svg_path).find("<svg") != std::string::npos);

  kitecc_scan_free(scan);
  std::remove(csv_path.c_str());
  std::remove(json_path.c_str());
  std::remove(svg_path.c_str());

  CHECK(kitecc_scan_region(KITECC_REGION_CONVEX, 1, KITECC_WHAT_INDEX, -1.0, -1.0,
                           &scan) == KITECC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("curve handles") {
  kitecc_curve* curve = nullptr;
  REQUIRE(kitecc_trace_degeneracy(0.05, &curve) == KITECC_OK);
  CHECK(kitecc_curve_size(curve) > 5);
  double x, y, psi;
  REQUIRE(kitecc_curve_get(curve, 0, &x, &y, &psi) == KITECC_OK);
  CHECK(std::isnan(psi));
  const std::string path = "capi_curve_test.csv";
  REQUIRE(kitecc_curve_write(curve, path.c_str(), KITECC_FORMAT_CSV) == KITECC_OK);
  CHECK(slurp(path).rfind("xhat,yhat\n", 0) == 0);
  kitecc_curve_free(curve);
  std::remove(path.c_str());

  kitecc_curve* boundary = nullptr;
  REQUIRE(kitecc_trace_stability_boundary(4, -1.0, -1.0, &boundary) == KITECC_OK);
  REQUIRE(kitecc_curve_size(boundary) == 4);
  REQUIRE(kitecc_curve_get(boundary, 1, &x, &y, &psi) == KITECC_OK);
  CHECK(psi > 20.0);
  kitecc_curve_free(boundary);
}

TEST_CASE("mass-line scan handle") {
  kitecc_scan* lines = nullptr;
  REQUIRE(kitecc_scan_lines(KITECC_REGION_CONCAVE2, 5, 10, &lines) == KITECC_OK);
  CHECK(kitecc_scan_size(lines) == 50);
  kitecc_scan_free(lines);
  CHECK(kitecc_scan_lines(KITECC_REGION_CONVEX, 5, 10, &lines) ==
        KITECC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("psi profile handle") {
  kitecc_curve* curve = nullptr;
  double inf_psi = 0.0;
  REQUIRE(kitecc_psi_profile(3, -1.0, -1.0, &curve, &inf_psi) == KITECC_OK);
  REQUIRE(kitecc_curve_size(curve) == 3);
  CHECK(std::abs(inf_psi - (25.0 + 3.0 * std::sqrt(69.0)) / 2.0) < 1e-3);
  double x, y, psi;
  REQUIRE(kitecc_curve_get(curve, 0, &x, &y, &psi) == KITECC_OK);
  CHECK(psi > 20.0);
  const std::string path = "capi_psi_test.json";
  REQUIRE(kitecc_curve_write(curve, path.c_str(), KITECC_FORMAT_JSON) == KITECC_OK);
  CHECK(slurp(path).find("\"points\"") != std::string::npos);
  kitecc_curve_free(curve);
  std::remove(path.c_str());
}

TEST_CASE("io failure is reported") {
  kitecc_scan* scan = nullptr;
  REQUIRE(kitecc_scan_region(KITECC_REGION_CONVEX, 4, KITECC_WHAT_MASSES, -1.0, -1.0,
                             &scan) == KITECC_OK);
  CHECK(kitecc_scan_write(scan, "/nonexistent-dir/out.csv", KITECC_FORMAT_CSV) ==
        KITECC_ERR_IO);
  kitecc_scan_free(scan);
}
