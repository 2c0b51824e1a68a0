// Grunsky coefficient tables and the quadratic-form checks.
#pragma once

#include <Eigen/Dense>

#include <string>

#include "grunsky/series.hpp"
#include "json.hpp"

namespace grunsky {

/// Table of Grunsky coefficients omega_{p,q}, 1 <= p,q <= order().
///
/// Symmetry omega_{p,q} = omega_{q,p} is validated to 1e-12 at construction.
/// Tables built from an odd function (odd_type) must additionally vanish to
/// 1e-12 whenever p+q is odd.
class GrunskyTable {
 public:
  GrunskyTable(Eigen::MatrixXcd omega, std::string source, bool odd_type);

  int order() const { return static_cast<int>(omega_.rows()); }
  bool odd_type() const { return odd_type_; }
  const std::string& source() const { return source_; }
  const Eigen::MatrixXcd& matrix() const { return omega_; }

  /// 1-based access.
  Complex omega(int p, int q) const;

 private:
  Eigen::MatrixXcd omega_;
  std::string source_;
  bool odd_type_;
};

/// omega_{p,q} = [t^p z^q] log((f(t)-f(z))/(t-z)) for p,q >= 1.
/// Requires f.order() >= 2*order+1 so that every entry, up to total degree
/// 2*order, is exact.
GrunskyTable compute_grunsky(const UniSeries<Complex>& f, int order,
                             std::string source = "series");

/// Grunsky table of sqrt(f(z^2)), flagged odd so the parity invariant is
/// enforced. Requires 2*f.order()-1 >= 2*order+1, i.e. f.order() >= order+1.
GrunskyTable odd_grunsky_of(const UniSeries<Complex>& f, int order = 7,
                            std::string source = "series");

/// Absolute residuals of the six exact relations between a_2..a_5 of f and
/// the odd-table entries omega_{11}, omega_{13}, omega_{15}, omega_{17},
/// omega_{33}, omega_{35}:
///   a2 = 2 w11
///   a3 = 2 w13 + 3 w11^2
///   a4 = 2 w33 + 8 w11 w13 + (10/3) w11^3
///   a5 = 2 w35 + 8 w11 w33 + 5 w13^2 + 18 w11^2 w13 + (7/3) w11^4
///   0  = 3 w15 - 3 w11 w13 + w11^3 - 3 w33
///   0  = w17 - w35 - w11 w33 - w13^2 + (1/3) w11^4
/// All six are < 1e-10 for every univalent f at working order.
Eigen::Vector<double, 6> identity_residuals(const UniSeries<Complex>& f,
                                            const GrunskyTable& odd_table);

/// w33 = w15 - w11 w13 + w11^3 / 3.
Complex eliminate_omega33(Complex w11, Complex w13, Complex w15);

/// w35 = w17 - w11 w15 + w11^2 w13 - w13^2.
Complex eliminate_omega35(Complex w11, Complex w13, Complex w15, Complex w17);

struct QuadraticCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double slack = 1e-12) const { return lhs <= rhs + slack; }
};

/// Truncated Grunsky quadratic form. For a plain table,
///   lhs = sum_{q=1..rows} q |sum_p omega_{p,q} x_p|^2,  rhs = sum_p |x_p|^2/p;
/// for an odd table the indices are 2p-1, 2q-1 and the weights (2q-1),
/// 1/(2p-1), with x_p standing for x_{2p-1}.
///
/// Truncating the q-sum only drops nonnegative terms, so lhs <= rhs is a
/// sound necessary condition for tables of univalent functions at any
/// truncation order (the artifact never claims the converse).
QuadraticCheck grunsky_quadratic_check(const GrunskyTable& table,
                                       const Eigen::VectorXcd& x, int rows);

/// Four-term specialization with only x1, x3 nonzero:
///   lhs = |w11 x1 + w31 x3|^2 + 3|w13 x1 + w33 x3|^2
///       + 5|w15 x1 + w35 x3|^2 + 7|w17 x1 + w37 x3|^2,
///   rhs = |x1|^2 + |x3|^2/3.
QuadraticCheck four_term_bound_check(Complex w11, Complex w13, Complex w15, Complex w17,
                                     Complex w31, Complex w33, Complex w35, Complex w37,
                                     Complex x1, Complex x3);

/// {source, order, omega} with omega a row-major list of [re, im] pairs.
nlohmann::ordered_json to_json(const GrunskyTable& table);

}  // namespace grunsky
