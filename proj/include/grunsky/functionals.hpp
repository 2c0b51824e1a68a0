// The two majorant functionals, their feasible domain, gradients, and the
// Fekete-Szego constant.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

#include "grunsky/interval.hpp"
#include "grunsky/series.hpp"

namespace grunsky {

/// Reference bounds this artifact reproduces and certifies.
inline constexpr double kGamma4ReferenceBound = 0.51059;
inline constexpr double kA5A4ReferenceBound = 2.3297;

/// Thrown by the psi gradients within 1e-12 of the radicand-zero surface,
/// where the gradient is singular; callers own that region through the
/// boundary strata and the derivative-free certificate.
class SingularGradientError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients of a majorant phi(x,y,z,t) = A x^4 + B y^2 + C x^2 y + D xz + E t.
struct MajorantCoefficients {
  double x4;
  double y2;
  double x2y;
  double xz;
  double t;
};

/// phi_1, the majorant of |gamma_4|.
inline constexpr MajorantCoefficients kGamma4Majorant{0.25, 0.5, 1.0, 1.0, 1.0};
/// phi_2, the majorant of |a_5| - |a_4|.
inline constexpr MajorantCoefficients kA5A4Majorant{1.0, 3.0, 6.0, 4.0, 2.0};

/// 1 - x^2 - 3y^2 - 5z^2; nonnegative exactly on the feasible moduli domain
/// (intersected with the nonnegative orthant).
double radicand(double x, double y, double z);

/// Cascade caps: y <= cap_y(x), z <= cap_z(x,y), t <= cap_t(x,y,z), radicands
/// clamped at 0 before the square root.
double cap_y(double x);
double cap_z(double x, double y);
double cap_t(double x, double y, double z);

/// Moduli point (x,y,z,t) = (|w11|, |w13|, |w15|, |w17|) in the feasible
/// domain. The factory validates the cascade constraints with 1e-12 slack.
struct FeasiblePoint {
  double x;
  double y;
  double z;
  double t;
};
FeasiblePoint make_feasible_point(double x, double y, double z, double t);

double phi(const MajorantCoefficients& c, const FeasiblePoint& p);
/// psi(x,y,z) = phi(x,y,z,t0) with t eliminated at its cap t0 = cap_t(x,y,z).
/// Validates (x,y,z,t0) like make_feasible_point.
double psi(const MajorantCoefficients& c, double x, double y, double z);
/// Interior gradient; throws SingularGradientError when radicand <= 1e-12.
Eigen::Vector3d psi_gradient(const MajorantCoefficients& c, double x, double y, double z);
Eigen::Matrix3d psi_hessian(const MajorantCoefficients& c, double x, double y, double z);

/// Rigorous range enclosures over a coordinate box (used by the certificate).
Interval radicand_enclosure(const Interval& x, const Interval& y, const Interval& z);
/// Requires radicand_enclosure(...).hi >= 0; clamps the radicand at 0.
Interval psi_enclosure(const MajorantCoefficients& c, const Interval& x,
                       const Interval& y, const Interval& z);
/// Requires radicand_enclosure(...).lo > 0.
std::array<Interval, 3> psi_gradient_enclosure(const MajorantCoefficients& c,
                                               const Interval& x, const Interval& y,
                                               const Interval& z);

double phi1(const FeasiblePoint& p);
double phi2(const FeasiblePoint& p);
double psi1(double x, double y, double z);
double psi2(double x, double y, double z);
Eigen::Vector3d grad_psi1(double x, double y, double z);
Eigen::Vector3d grad_psi2(double x, double y, double z);

/// gamma_4 = (a5 - a2 a4 - a3^2/2 + a2^2 a3 - a2^4/4) / 2.
Complex gamma4_from_a(Complex a2, Complex a3, Complex a4, Complex a5);

/// gamma_4 = w17 + w11 w15 + w11^2 w13 + w13^2/2 + w11^4/4, from the odd
/// Grunsky entries of the same function; must agree with gamma4_from_a.
Complex gamma4_from_omega(Complex w11, Complex w13, Complex w15, Complex w17);

/// |2 w17 + 4 w11 w15 + 6 w11^2 w13 + 3 w13^2 + w11^4| >= |a5| - |a4|.
double a5_minus_a4_majorant(Complex w11, Complex w13, Complex w15, Complex w17);

/// lambda0 solves 4*lambda = exp(lambda) on (0,1);
/// bound = 3/4 + exp(-lambda0)*(2 exp(-lambda0) - 1) = 1.029...
/// Bisection: the bracket is guaranteed (4*0-1 < 0, 4-e > 0).
struct FeketeSzego {
  double lambda0;
  double bound;
};
FeketeSzego fekete_szego_constant();

}  // namespace grunsky
