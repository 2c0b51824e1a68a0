// Truncated power-series arithmetic in one and two complex variables.
//
// UniSeries<S> stores coefficients of z^0..z^N, BiSeries<S> coefficients of
// t^p z^q with 0 <= p,q <= N. Every operation is degree-local: a result
// coefficient of (total) degree d depends only on input coefficients of
// degree <= d, so results are exact wherever the inputs are.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace grunsky {

using Complex = std::complex<double>;

template <class Scalar>
class UniSeries {
 public:
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  explicit UniSeries(int order) {
    if (order < 0) throw std::invalid_argument("UniSeries: negative order");
    c_ = Vector::Zero(order + 1);
  }
  explicit UniSeries(Vector coeffs) : c_(std::move(coeffs)) {
    if (c_.size() == 0) throw std::invalid_argument("UniSeries: no coefficients");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Vector& coeffs() const { return c_; }
  const Scalar& operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }

  UniSeries truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw std::invalid_argument("UniSeries::truncated: bad order");
    return UniSeries(Vector(c_.head(new_order + 1)));
  }

 private:
  Vector c_;
};

template <class Scalar>
class BiSeries {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  explicit BiSeries(int order) {
    if (order < 0) throw std::invalid_argument("BiSeries: negative order");
    c_ = Matrix::Zero(order + 1, order + 1);
  }
  explicit BiSeries(Matrix coeffs) : c_(std::move(coeffs)) {
    if (c_.rows() == 0 || c_.rows() != c_.cols())
      throw std::invalid_argument("BiSeries: coefficient matrix must be square");
  }

  int order() const { return static_cast<int>(c_.rows()) - 1; }
  const Matrix& coeffs() const { return c_; }
  const Scalar& operator()(int p, int q) const { return c_(p, q); }
  Scalar& operator()(int p, int q) { return c_(p, q); }

 private:
  Matrix c_;
};

template <class Scalar>
bool is_normalized(const UniSeries<Scalar>& f, double tol = 1e-12) {
  return f.order() >= 1 && std::abs(f[0]) <= tol && std::abs(f[1] - Scalar(1)) <= tol;
}

/// Cauchy product truncated at the common order.
template <class Scalar>
UniSeries<Scalar> mul(const UniSeries<Scalar>& a, const UniSeries<Scalar>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mul: order mismatch");
  const int n = a.order();
  UniSeries<Scalar> out(n);
  for (int d = 0; d <= n; ++d) {
    Scalar acc{};
    for (int k = 0; k <= d; ++k) acc += a[k] * b[d - k];
    out[d] = acc;
  }
  return out;
}

template <class Scalar>
UniSeries<Scalar> operator*(const UniSeries<Scalar>& a, const UniSeries<Scalar>& b) {
  return mul(a, b);
}

/// log of a series with constant term 1, through the recurrence v'*u = u':
///   d*v_d*u_0 = d*u_d - sum_{k=1}^{d-1} k v_k u_{d-k}.
template <class Scalar>
UniSeries<Scalar> log1(const UniSeries<Scalar>& u) {
  if (std::abs(u[0] - Scalar(1)) > 1e-12)
    throw std::domain_error("log1: constant term must be 1");
  const int n = u.order();
  UniSeries<Scalar> v(n);
  for (int d = 1; d <= n; ++d) {
    Scalar acc = Scalar(d) * u[d];
    for (int k = 1; k < d; ++k) acc -= Scalar(k) * v[k] * u[d - k];
    v[d] = acc / (Scalar(d) * u[0]);
  }
  return v;
}

/// Odd square-root transform g with g(z)^2 = f(z^2), g(0)=0, g'(0)=1.
///
/// Writes f(w)/w = u(w) and takes h = sqrt(u) by the quadratic recurrence
/// 2 h_0 h_m = u_m - sum_{k=1}^{m-1} h_k h_{m-k}; then g = z*h(z^2). The
/// result has order 2*f.order()-1: the coefficient of z^{2N+1} would need
/// a_{N+1}, which a series of order N does not determine.
template <class Scalar>
UniSeries<Scalar> sqrt_transform(const UniSeries<Scalar>& f) {
  if (!is_normalized(f))
    throw std::domain_error("sqrt_transform: series must be normalized (a0=0, a1=1)");
  const int n = f.order();
  Eigen::Vector<Scalar, Eigen::Dynamic> h(n);
  h[0] = std::sqrt(f[1]);
  for (int m = 1; m < n; ++m) {
    Scalar acc = f[m + 1];
    for (int k = 1; k < m; ++k) acc -= h[k] * h[m - k];
    h[m] = acc / (Scalar(2) * h[0]);
  }
  UniSeries<Scalar> g(2 * n - 1);
  for (int k = 0; k < n; ++k) g[2 * k + 1] = h[k];
  return g;
}

/// (f(t)-f(z))/(t-z) = sum_n a_n sum_{i+j=n-1} t^i z^j, truncated at
/// f.order() in each variable. Entries of total degree <= f.order()-1 are
/// exact; higher ones are cut off at zero.
template <class Scalar>
BiSeries<Scalar> divided_difference(const UniSeries<Scalar>& f) {
  if (!is_normalized(f))
    throw std::domain_error("divided_difference: series must be normalized (a0=0, a1=1)");
  const int n = f.order();
  BiSeries<Scalar> d(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j + 1 <= n && j <= n; ++j) d(i, j) = f[i + j + 1];
  return d;
}

/// Bivariate log of a series with constant term 1, by the univariate
/// recurrence applied along total degree (Euler operator t d/dt + z d/dz).
/// Exact to total order N; entries of higher total degree are left zero.
template <class Scalar>
BiSeries<Scalar> log_bi(const BiSeries<Scalar>& u) {
  if (std::abs(u(0, 0) - Scalar(1)) > 1e-12)
    throw std::domain_error("log_bi: constant term must be 1");
  const int n = u.order();
  BiSeries<Scalar> v(n);
  for (int d = 1; d <= n; ++d) {
    for (int p = 0; p <= d; ++p) {
      const int q = d - p;
      Scalar acc = Scalar(d) * u(p, q);
      for (int k = 1; k < d; ++k) {
        const int ilo = std::max(0, k - q);
        const int ihi = std::min(p, k);
        for (int i = ilo; i <= ihi; ++i)
          acc -= Scalar(k) * v(i, k - i) * u(p - i, q - k + i);
      }
      v(p, q) = acc / (Scalar(d) * u(0, 0));
    }
  }
  return v;
}

}  // namespace grunsky
