/* kitecc: kite central configurations of the four-body problem.
 *
 * C interface to the shared library: plain functions for point evaluations,
 * opaque handles for solver results, grid scans and traced curves.  All
 * functions return kitecc_status; kitecc_last_error() describes the most
 * recent failure on the calling thread.
 */
#ifndef KITECC_H
#define KITECC_H

#ifdef __cplusplus
extern "C" {
#endif

#ifdef _WIN32
#define KITECC_API __declspec(dllexport)
#else
#define KITECC_API __attribute__((visibility("default")))
#endif

typedef enum kitecc_status {
  KITECC_OK = 0,
  KITECC_ERR_INVALID_ARGUMENT = 1,
  KITECC_ERR_NONPOSITIVE_GEOMETRY = 2,
  KITECC_ERR_COLLISION = 3,
  KITECC_ERR_DEGENERATE_DISTANCES = 4,
  KITECC_ERR_UNDEFINED_AT_GON = 5,
  KITECC_ERR_NONPOSITIVE_MASS = 6,
  KITECC_ERR_INVALID_SLOPE = 7,
  KITECC_ERR_CONVERGENCE = 8,
  KITECC_ERR_NOT_CENTRAL = 9,
  KITECC_ERR_DEGENERATE_BASIS = 10,
  KITECC_ERR_EIGEN = 11,
  KITECC_ERR_NO_BRACKET = 12,
  KITECC_ERR_SEED = 13,
  KITECC_ERR_BRACKET = 14,
  KITECC_ERR_IO = 15,
  KITECC_ERR_INTERNAL = 16
} kitecc_status;

typedef enum kitecc_region {
  KITECC_REGION_CONVEX = 0,
  KITECC_REGION_CONCAVE1 = 1,
  KITECC_REGION_CONCAVE2 = 2,
  KITECC_REGION_ONE_PLUS_THREE_GON = 3,
  KITECC_REGION_BOUNDARY_RHOMBUS = 4,
  KITECC_REGION_BOUNDARY_RESTRICTED = 5,
  KITECC_REGION_BOUNDARY_ONE_PLUS_THREE = 6,
  KITECC_REGION_OUTSIDE = 7
} kitecc_region;

typedef enum kitecc_what {
  KITECC_WHAT_MASSES = 0,
  KITECC_WHAT_INDEX = 1,
  KITECC_WHAT_STABILITY = 2
} kitecc_what;

typedef enum kitecc_format {
  KITECC_FORMAT_CSV = 0,
  KITECC_FORMAT_JSON = 1,
  KITECC_FORMAT_SVG = 2
} kitecc_format;

KITECC_API const char* kitecc_version(void);
KITECC_API const char* kitecc_status_name(kitecc_status status);
/* Message for the last failing call on this thread; empty string if none. */
KITECC_API const char* kitecc_last_error(void);
KITECC_API const char* kitecc_region_name(kitecc_region region);

/* ---- point evaluations (masses are m[3] = {m1, m3, m}) ---- */

KITECC_API kitecc_status kitecc_classify(double xhat, double yhat,
                                         kitecc_region* region);
KITECC_API kitecc_status kitecc_mass_map(double xhat, double yhat, double m[3]);
KITECC_API kitecc_status kitecc_limit_masses_13gon(double slope, double m[3]);
KITECC_API kitecc_status kitecc_lambda_hat(double xhat, double yhat,
                                           const double m[3], double* out);
KITECC_API kitecc_status kitecc_cc_residual(double xhat, double yhat,
                                            const double m[3], double g[2]);
KITECC_API kitecc_status kitecc_dziobek_residual(double xhat, double yhat,
                                                 const double m[3], double* out);
KITECC_API kitecc_status kitecc_f_value(double xhat, double yhat, double* out);
/* tol <= 0 selects the default degeneracy band 1e-9 * lambda^2 */
KITECC_API kitecc_status kitecc_index_sign(double xhat, double yhat,
                                           const double m[3], double tol,
                                           int* out);

/* Nontrivial spectrum of the relative equilibrium at (xhat, yhat) with the
 * given masses (pass NULL to use the mass map).  Tolerances <= 0 select the
 * defaults 1e-10 / 1e-8.  Eigenvalues are divided by the angular velocity. */
KITECC_API kitecc_status kitecc_spectrum(double xhat, double yhat,
                                         const double m[3], double real_tol,
                                         double gap_tol, double eig_re[8],
                                         double eig_im[8], int klass[3],
                                         double* max_real, int* stable);

/* ---- solver ---- */

typedef struct kitecc_solutions kitecc_solutions;

/* concave = 0: the unique convex kite; concave = 1: zero, one or two concave
 * kites with m3 interior. */
KITECC_API kitecc_status kitecc_solve(const double m[3], int concave,
                                      kitecc_solutions** out);
KITECC_API int kitecc_solutions_count(const kitecc_solutions* s);
KITECC_API kitecc_status kitecc_solutions_get(const kitecc_solutions* s, int idx,
                                              double* xhat, double* yhat,
                                              double* residual,
                                              kitecc_region* region);
KITECC_API void kitecc_solutions_free(kitecc_solutions* s);

/* ---- grid scans ---- */

typedef struct kitecc_scan kitecc_scan;

KITECC_API kitecc_status kitecc_scan_region(kitecc_region region, int n,
                                            kitecc_what what, double real_tol,
                                            double gap_tol, kitecc_scan** out);
/* figure-replication mode: `lines` vertical lines, n samples each */
KITECC_API kitecc_status kitecc_scan_lines(kitecc_region region, int lines,
                                           int n, kitecc_scan** out);
KITECC_API long kitecc_scan_size(const kitecc_scan* scan);
/* path "-" writes to stdout */
KITECC_API kitecc_status kitecc_scan_write(const kitecc_scan* scan,
                                           const char* path,
                                           kitecc_format format);
KITECC_API void kitecc_scan_free(kitecc_scan* scan);

/* ---- traced curves ---- */

typedef struct kitecc_curve kitecc_curve;

KITECC_API kitecc_status kitecc_trace_degeneracy(double step, kitecc_curve** out);
KITECC_API kitecc_status kitecc_trace_stability_boundary(int grid,
                                                         double real_tol,
                                                         double gap_tol,
                                                         kitecc_curve** out);
/* boundary curve plus the limiting dominant-mass ratio m1/(1-m1) */
KITECC_API kitecc_status kitecc_psi_profile(int grid, double real_tol,
                                            double gap_tol, kitecc_curve** out,
                                            double* psi_infimum);
KITECC_API long kitecc_curve_size(const kitecc_curve* curve);
/* psi receives NaN when the curve carries no mass-ratio column */
KITECC_API kitecc_status kitecc_curve_get(const kitecc_curve* curve, long idx,
                                          double* xhat, double* yhat,
                                          double* psi);
KITECC_API kitecc_status kitecc_curve_write(const kitecc_curve* curve,
                                            const char* path,
                                            kitecc_format format);
KITECC_API void kitecc_curve_free(kitecc_curve* curve);

#ifdef __cplusplus
}
#endif

#endif /* KITECC_H */
