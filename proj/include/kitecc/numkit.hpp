#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "kitecc/types.hpp"

namespace kitecc::numkit {

using Complex = std::complex<double>;

// Dense square matrix, dimension capped at 16.  Everything in this project is
// a 4x4, 8x8 or 16x16 system, so fixed inline storage is enough.
class Mat {
 public:
  static constexpr int kMaxDim = 16;

  explicit Mat(int n);
  static Mat identity(int n);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return data_[i * n_ + j]; }
  double operator()(int i, int j) const { return data_[i * n_ + j]; }

  Mat operator*(const Mat& rhs) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(double s) const;

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  std::array<double, kMaxDim> apply(const std::array<double, kMaxDim>& v) const;

 private:
  int n_;
  std::array<double, kMaxDim * kMaxDim> data_{};
};

// All eigenvalues of a real matrix, sorted by (re, im).  If `vectors` is
// non-null it receives one (unit 2-norm) eigenvector per eigenvalue, stored
// column-wise as n complex entries each.
std::vector<Complex> eig_dense(const Mat& a,
                               std::vector<std::vector<Complex>>* vectors = nullptr);

// Monic characteristic polynomial coefficients of `a`, degree-descending:
// out[0] = 1, out[n] = det-sign constant term.  Faddeev-LeVerrier recursion.
std::vector<double> char_poly(const Mat& a);

// Roots of c[0] x^4 + c[1] x^3 + c[2] x^2 + c[3] x + c[4] = 0 with real
// coefficients, c[0] != 0.  Ferrari resolvent-cubic factorization into two
// real quadratics, then a Newton polish; conjugate pairing is exact.
std::array<Complex, 4> solve_quartic_real_coeffs(const std::array<double, 5>& c);

// Real roots of x^3 + a2 x^2 + a1 x + a0 = 0.
std::vector<double> cubic_real_roots(double a2, double a1, double a0);

// Bisection on a boolean predicate: pred(lo) != pred(hi) required, returns a
// point within tol of the switch.  Uses ceil(log2((hi-lo)/tol)) predicate
// evaluations beyond the two bracket checks.
double bisect(const std::function<bool(double)>& pred, double lo, double hi,
              double tol);

// Runs fn(i) for i in [0, n) on a small worker pool; each index writes only
// its own output slot, so results are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace kitecc::numkit
