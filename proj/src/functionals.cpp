#include "grunsky/functionals.hpp"

#include <cmath>

namespace grunsky {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kSingularGuard = 1e-12;
const double kSqrt7 = std::sqrt(7.0);

double clamped_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

void check_in_domain(double x, double y, double z, double t) {
  const bool ok = x >= -kDomainSlack && x <= 1.0 + kDomainSlack && y >= -kDomainSlack &&
                  y <= cap_y(x) + kDomainSlack && z >= -kDomainSlack &&
                  z <= cap_z(x, y) + kDomainSlack && t >= -kDomainSlack &&
                  t <= cap_t(x, y, z) + kDomainSlack;
  if (!ok) throw std::domain_error("point outside the feasible moduli domain");
}

}  // namespace

double radicand(double x, double y, double z) {
  return 1.0 - x * x - 3.0 * y * y - 5.0 * z * z;
}

double cap_y(double x) { return clamped_sqrt((1.0 - x * x) / 3.0); }

double cap_z(double x, double y) {
  return clamped_sqrt((1.0 - x * x - 3.0 * y * y) / 5.0);
}

double cap_t(double x, double y, double z) {
  return clamped_sqrt(radicand(x, y, z) / 7.0);
}

FeasiblePoint make_feasible_point(double x, double y, double z, double t) {
  check_in_domain(x, y, z, t);
  return {x, y, z, t};
}

double phi(const MajorantCoefficients& c, const FeasiblePoint& p) {
  const double x2 = p.x * p.x;
  return c.x4 * x2 * x2 + c.y2 * p.y * p.y + c.x2y * x2 * p.y + c.xz * p.x * p.z + c.t * p.t;
}

double psi(const MajorantCoefficients& c, double x, double y, double z) {
  const double t0 = cap_t(x, y, z);
  check_in_domain(x, y, z, t0);
  return phi(c, FeasiblePoint{x, y, z, t0});
}

Eigen::Vector3d psi_gradient(const MajorantCoefficients& c, double x, double y, double z) {
  const double r = radicand(x, y, z);
  if (r <= kSingularGuard)
    throw SingularGradientError("psi gradient is singular near the radicand-zero surface");
  const double s = std::sqrt(r);
  const double u = c.t / kSqrt7;  // coefficient of sqrt(radicand)
  const double x2 = x * x;
  return {4.0 * c.x4 * x2 * x - u * x / s + 2.0 * c.x2y * x * y + c.xz * z,
          2.0 * c.y2 * y + c.x2y * x2 - 3.0 * u * y / s,
          c.xz * x - 5.0 * u * z / s};
}

Eigen::Matrix3d psi_hessian(const MajorantCoefficients& c, double x, double y, double z) {
  const double r = radicand(x, y, z);
  if (r <= kSingularGuard)
    throw SingularGradientError("psi hessian is singular near the radicand-zero surface");
  const double s = std::sqrt(r);
  const double s3 = s * r;
  const double u = c.t / kSqrt7;
  Eigen::Matrix3d h;
  h(0, 0) = 12.0 * c.x4 * x * x + 2.0 * c.x2y * y - u * (1.0 / s + x * x / s3);
  h(0, 1) = 2.0 * c.x2y * x - 3.0 * u * x * y / s3;
  h(0, 2) = c.xz - 5.0 * u * x * z / s3;
  h(1, 1) = 2.0 * c.y2 - u * (3.0 / s + 9.0 * y * y / s3);
  h(1, 2) = -15.0 * u * y * z / s3;
  h(2, 2) = -u * (5.0 / s + 25.0 * z * z / s3);
  h(1, 0) = h(0, 1);
  h(2, 0) = h(0, 2);
  h(2, 1) = h(1, 2);
  return h;
}

Interval radicand_enclosure(const Interval& x, const Interval& y, const Interval& z) {
  return Interval(1.0) - sqr(x) - 3.0 * sqr(y) - 5.0 * sqr(z);
}

Interval psi_enclosure(const MajorantCoefficients& c, const Interval& x,
                       const Interval& y, const Interval& z) {
  const Interval x2 = sqr(x);
  const Interval r = clamp_nonneg(radicand_enclosure(x, y, z));
  const Interval t0 = sqrt(r) / sqrt(Interval(7.0));
  return c.x4 * (x2 * x2) + c.y2 * sqr(y) + c.x2y * (x2 * y) + c.xz * (x * z) + c.t * t0;
}

std::array<Interval, 3> psi_gradient_enclosure(const MajorantCoefficients& c,
                                               const Interval& x, const Interval& y,
                                               const Interval& z) {
  const Interval r = radicand_enclosure(x, y, z);
  if (r.lo <= 0.0)
    throw std::domain_error("psi_gradient_enclosure: box must be strictly inside the domain");
  const Interval s7 = sqrt(Interval(7.0)) * sqrt(r);
  const Interval x2 = sqr(x);
  return {4.0 * c.x4 * (x2 * x) + 2.0 * c.x2y * (x * y) + c.xz * z - c.t * x / s7,
          2.0 * c.y2 * y + c.x2y * x2 - 3.0 * c.t * y / s7,
          c.xz * x - 5.0 * c.t * z / s7};
}

double phi1(const FeasiblePoint& p) { return phi(kGamma4Majorant, p); }
double phi2(const FeasiblePoint& p) { return phi(kA5A4Majorant, p); }
double psi1(double x, double y, double z) { return psi(kGamma4Majorant, x, y, z); }
double psi2(double x, double y, double z) { return psi(kA5A4Majorant, x, y, z); }
Eigen::Vector3d grad_psi1(double x, double y, double z) {
  return psi_gradient(kGamma4Majorant, x, y, z);
}
Eigen::Vector3d grad_psi2(double x, double y, double z) {
  return psi_gradient(kA5A4Majorant, x, y, z);
}

Complex gamma4_from_a(Complex a2, Complex a3, Complex a4, Complex a5) {
  return 0.5 * (a5 - a2 * a4 - 0.5 * a3 * a3 + a2 * a2 * a3 - 0.25 * a2 * a2 * a2 * a2);
}

Complex gamma4_from_omega(Complex w11, Complex w13, Complex w15, Complex w17) {
  const Complex w11_2 = w11 * w11;
  return w17 + w11 * w15 + w11_2 * w13 + 0.5 * w13 * w13 + 0.25 * w11_2 * w11_2;
}

double a5_minus_a4_majorant(Complex w11, Complex w13, Complex w15, Complex w17) {
  const Complex w11_2 = w11 * w11;
  return std::abs(2.0 * w17 + 4.0 * w11 * w15 + 6.0 * w11_2 * w13 + 3.0 * w13 * w13 +
                  w11_2 * w11_2);
}

FeketeSzego fekete_szego_constant() {
  const auto g = [](double lam) { return 4.0 * lam - std::exp(lam); };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double lambda0 = 0.5 * (lo + hi);
  const double e = std::exp(-lambda0);
  return {lambda0, 0.75 + e * (2.0 * e - 1.0)};
}

}  // namespace grunsky
