#include "kitecc/numkit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <thread>

namespace kitecc::numkit {

Mat::Mat(int n) : n_(n) {
  if (n < 1 || n > kMaxDim)
    throw kite_error(errc::invalid_argument, "matrix dimension out of range");
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::operator*(const Mat& rhs) const {
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  Mat out(n_);
  for (int i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& rhs) const {
  Mat out(n_);
  for (int i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

Mat Mat::scaled(double s) const {
  Mat out(n_);
  for (int i = 0; i < n_ * n_; ++i) out.data_[i] = data_[i] * s;
  return out;
}

double Mat::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_ * n_; ++i) s += data_[i] * data_[i];
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double s = 0.0;
  for (int i = 0; i < n_ * n_; ++i) s = std::max(s, std::abs(data_[i]));
  return s;
}

std::array<double, Mat::kMaxDim> Mat::apply(
    const std::array<double, kMaxDim>& v) const {
  std::array<double, kMaxDim> out{};
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<Complex> eig_dense(const Mat& a,
                               std::vector<std::vector<Complex>>* vectors) {
  const int n = a.dim();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j)))
        throw kite_error(errc::invalid_argument, "non-finite matrix entry");
      m(i, j) = a(i, j);
    }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, vectors != nullptr);
  if (solver.info() != Eigen::Success)
    throw kite_error(errc::eigen_failure, "eigensolver did not converge");

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  const auto& vals = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (vals[i].real() != vals[j].real()) return vals[i].real() < vals[j].real();
    return vals[i].imag() < vals[j].imag();
  });

  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = vals[order[i]];
  if (vectors) {
    vectors->assign(n, std::vector<Complex>(n));
    const auto& vecs = solver.eigenvectors();
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < n; ++r) (*vectors)[i][r] = vecs(r, order[i]);
  }
  return out;
}

std::vector<double> char_poly(const Mat& a) {
  const int n = a.dim();
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  Mat mk = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = a * mk;
    c[k] = -mk.trace() / k;
    for (int i = 0; i < n; ++i) mk(i, i) += c[k];
  }
  return c;
}

std::vector<double> cubic_real_roots(double a2, double a1, double a0) {
  // depressed form t^3 + p t + q with x = t - a2/3
  const double p = a1 - a2 * a2 / 3.0;
  const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  const double shift = -a2 / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  std::vector<double> roots;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double u = std::cbrt(-q / 2.0 + s);
    const double v = std::cbrt(-q / 2.0 - s);
    roots.push_back(u + v + shift);
  } else if (p == 0.0 && q == 0.0) {
    roots.assign(3, shift);
  } else {
    const double rho = std::sqrt(-p * p * p / 27.0);
    double cosphi = -q / (2.0 * rho);
    cosphi = std::clamp(cosphi, -1.0, 1.0);
    const double phi = std::acos(cosphi);
    const double mag = 2.0 * std::sqrt(-p / 3.0);
    for (int k = 0; k < 3; ++k)
      roots.push_back(mag * std::cos((phi - 2.0 * M_PI * k) / 3.0) + shift);
  }
  // one Newton step per root for accuracy
  for (double& x : roots) {
    const double f = ((x + a2) * x + a1) * x + a0;
    const double df = (3.0 * x + 2.0 * a2) * x + a1;
    if (std::abs(df) > 1e-300) x -= f / df;
  }
  return roots;
}

namespace {

Complex eval_poly4(const std::array<double, 5>& c, Complex x) {
  Complex r = c[0];
  for (int i = 1; i <= 4; ++i) r = r * x + c[i];
  return r;
}

Complex eval_dpoly4(const std::array<double, 5>& c, Complex x) {
  Complex r = 4.0 * c[0];
  r = r * x + 3.0 * c[1];
  r = r * x + 2.0 * c[2];
  r = r * x + c[3];
  return r;
}

void polish_root(const std::array<double, 5>& c, Complex& x) {
  for (int it = 0; it < 3; ++it) {
    const Complex f = eval_poly4(c, x);
    const Complex df = eval_dpoly4(c, x);
    if (std::abs(df) < 1e-300) return;
    const Complex step = f / df;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return;
    x -= step;
  }
}

}  // namespace

std::array<Complex, 4> solve_quartic_real_coeffs(const std::array<double, 5>& c) {
  if (c[0] == 0.0 || !std::isfinite(c[0]))
    throw kite_error(errc::invalid_argument, "quartic leading coefficient is zero");
  const double a = c[1] / c[0];
  const double b = c[2] / c[0];
  const double cc = c[3] / c[0];
  const double d = c[4] / c[0];

  // depressed quartic u^4 + p u^2 + q u + r, x = u - a/4
  const double p = b - 3.0 * a * a / 8.0;
  const double q = cc - a * b / 2.0 + a * a * a / 8.0;
  const double r = d - a * cc / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
  const double shift = -a / 4.0;

  std::array<Complex, 4> roots;
  const double scale = std::max({1.0, std::abs(p), std::abs(q), std::abs(r)});
  if (std::abs(q) <= 1e-14 * scale) {
    // biquadratic: u^2 solves v^2 + p v + r = 0
    const Complex disc = Complex(p * p - 4.0 * r, 0.0);
    const Complex sd = std::sqrt(disc);
    const Complex v1 = (-p + sd) / 2.0;
    const Complex v2 = (-p - sd) / 2.0;
    const Complex u1 = std::sqrt(v1);
    const Complex u2 = std::sqrt(v2);
    roots = {u1, -u1, u2, -u2};
  } else {
    // resolvent cubic y^3 + p y^2 + (p^2 - 4r)/4 y - q^2/8 = 0 has a positive
    // real root; split into two real quadratics (u^2 + s u + A)(u^2 - s u + B)
    const auto ys = cubic_real_roots(p, (p * p - 4.0 * r) / 4.0, -q * q / 8.0);
    double y = ys.front();
    for (double cand : ys)
      if (cand > y) y = cand;
    if (y <= 0.0) y = std::abs(q) / (2.0 * std::sqrt(scale));  // fallback, polished below
    const double s = std::sqrt(2.0 * y);
    const double A = p / 2.0 + y - q / (2.0 * s);
    const double B = p / 2.0 + y + q / (2.0 * s);
    const auto quad_roots = [](double lin, double cst, Complex& r1, Complex& r2) {
      const Complex disc = Complex(lin * lin - 4.0 * cst, 0.0);
      const Complex sd = std::sqrt(disc);
      r1 = (-lin + sd) / 2.0;
      r2 = (-lin - sd) / 2.0;
    };
    quad_roots(s, A, roots[0], roots[1]);
    quad_roots(-s, B, roots[2], roots[3]);
  }
  for (auto& u : roots) u += shift;

  // polish on the original quartic, keeping conjugate pairing exact: real
  // roots stay on the axis, one member of each conjugate pair is mirrored
  const std::array<double, 5> monic = {1.0, a, b, cc, d};
  for (int i = 0; i < 4; ++i) {
    Complex& x = roots[i];
    if (x.imag() == 0.0) {
      Complex xr = x;
      polish_root(monic, xr);
      x = Complex(xr.real(), 0.0);
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (roots[i].imag() <= 0.0) continue;
    polish_root(monic, roots[i]);
    for (int j = 0; j < 4; ++j)
      if (j != i && std::abs(roots[j] - std::conj(roots[i])) <
                        1e-6 * (1.0 + std::abs(roots[i]))) {
        roots[j] = std::conj(roots[i]);
        break;
      }
  }
  return roots;
}

double bisect(const std::function<bool(double)>& pred, double lo, double hi,
              double tol) {
  if (!(tol > 0.0) || !(hi > lo))
    throw kite_error(errc::invalid_argument, "bisect: bad bracket or tolerance");
  const bool flo = pred(lo);
  const bool fhi = pred(hi);
  if (flo == fhi)
    throw kite_error(errc::no_bracket, "bisect: predicate equal at both ends");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double-precision resolution
    if (pred(mid) == flo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace kitecc::numkit
