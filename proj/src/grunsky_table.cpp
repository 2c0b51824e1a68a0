#include "grunsky/grunsky_table.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace grunsky {

GrunskyTable::GrunskyTable(Eigen::MatrixXcd omega, std::string source, bool odd_type)
    : omega_(std::move(omega)), source_(std::move(source)), odd_type_(odd_type) {
  if (omega_.rows() == 0 || omega_.rows() != omega_.cols())
    throw std::invalid_argument("GrunskyTable: matrix must be square and nonempty");
  const int m = order();
  for (int p = 1; p <= m; ++p) {
    for (int q = p; q <= m; ++q) {
      if (std::abs(omega_(p - 1, q - 1) - omega_(q - 1, p - 1)) > 1e-12)
        throw std::invalid_argument("GrunskyTable: symmetry violated beyond 1e-12");
      if (odd_type_ && (p + q) % 2 == 1 && std::abs(omega_(p - 1, q - 1)) > 1e-12)
        throw std::invalid_argument("GrunskyTable: odd-type parity violated beyond 1e-12");
    }
  }
}

Complex GrunskyTable::omega(int p, int q) const {
  if (p < 1 || q < 1 || p > order() || q > order())
    throw std::invalid_argument("GrunskyTable::omega: index out of range");
  return omega_(p - 1, q - 1);
}

GrunskyTable compute_grunsky(const UniSeries<Complex>& f, int order, std::string source) {
  if (order < 1) throw std::invalid_argument("compute_grunsky: order must be >= 1");
  if (f.order() < 2 * order + 1)
    throw std::invalid_argument(
        "compute_grunsky: series order must be >= 2*order+1 for an exact table");
  const BiSeries<Complex> logdd = log_bi(divided_difference(f));
  Eigen::MatrixXcd omega(order, order);
  for (int p = 1; p <= order; ++p)
    for (int q = 1; q <= order; ++q) omega(p - 1, q - 1) = logdd(p, q);
  return GrunskyTable(std::move(omega), std::move(source), /*odd_type=*/false);
}

GrunskyTable odd_grunsky_of(const UniSeries<Complex>& f, int order, std::string source) {
  const GrunskyTable full = compute_grunsky(sqrt_transform(f), order, source);
  return GrunskyTable(full.matrix(), std::move(source), /*odd_type=*/true);
}

Eigen::Vector<double, 6> identity_residuals(const UniSeries<Complex>& f,
                                            const GrunskyTable& odd_table) {
  if (f.order() < 5) throw std::invalid_argument("identity_residuals: need a_2..a_5");
  if (!odd_table.odd_type() || odd_table.order() < 7)
    throw std::invalid_argument("identity_residuals: need an odd table of order >= 7");
  const Complex a2 = f[2], a3 = f[3], a4 = f[4], a5 = f[5];
  const Complex w11 = odd_table.omega(1, 1), w13 = odd_table.omega(1, 3),
                w15 = odd_table.omega(1, 5), w17 = odd_table.omega(1, 7),
                w33 = odd_table.omega(3, 3), w35 = odd_table.omega(3, 5);
  const Complex w11_2 = w11 * w11;
  Eigen::Vector<double, 6> r;
  r[0] = std::abs(a2 - 2.0 * w11);
  r[1] = std::abs(a3 - (2.0 * w13 + 3.0 * w11_2));
  r[2] = std::abs(a4 - (2.0 * w33 + 8.0 * w11 * w13 + (10.0 / 3.0) * w11_2 * w11));
  r[3] = std::abs(a5 - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w13 * w13 +
                        18.0 * w11_2 * w13 + (7.0 / 3.0) * w11_2 * w11_2));
  r[4] = std::abs(3.0 * w15 - 3.0 * w11 * w13 + w11_2 * w11 - 3.0 * w33);
  r[5] = std::abs(w17 - w35 - w11 * w33 - w13 * w13 + (1.0 / 3.0) * w11_2 * w11_2);
  return r;
}

Complex eliminate_omega33(Complex w11, Complex w13, Complex w15) {
  return w15 - w11 * w13 + w11 * w11 * w11 / 3.0;
}

Complex eliminate_omega35(Complex w11, Complex w13, Complex w15, Complex w17) {
  return w17 - w11 * w15 + w11 * w11 * w13 - w13 * w13;
}

QuadraticCheck grunsky_quadratic_check(const GrunskyTable& table,
                                       const Eigen::VectorXcd& x, int rows) {
  const int m = table.order();
  const int terms = static_cast<int>(x.size());
  if (terms < 1 || rows < 1) throw std::invalid_argument("grunsky_quadratic_check: empty form");
  const auto index = [&](int k) { return table.odd_type() ? 2 * k - 1 : k; };
  if (index(terms) > m || index(rows) > m)
    throw std::invalid_argument("grunsky_quadratic_check: dimensions exceed table order");

  QuadraticCheck out;
  for (int q = 1; q <= rows; ++q) {
    Complex row{};
    for (int p = 1; p <= terms; ++p) row += table.omega(index(p), index(q)) * x[p - 1];
    out.lhs += static_cast<double>(index(q)) * std::norm(row);
  }
  for (int p = 1; p <= terms; ++p) out.rhs += std::norm(x[p - 1]) / static_cast<double>(index(p));
  return out;
}

QuadraticCheck four_term_bound_check(Complex w11, Complex w13, Complex w15, Complex w17,
                                     Complex w31, Complex w33, Complex w35, Complex w37,
                                     Complex x1, Complex x3) {
  QuadraticCheck out;
  out.lhs = std::norm(w11 * x1 + w31 * x3) + 3.0 * std::norm(w13 * x1 + w33 * x3) +
            5.0 * std::norm(w15 * x1 + w35 * x3) + 7.0 * std::norm(w17 * x1 + w37 * x3);
  out.rhs = std::norm(x1) + std::norm(x3) / 3.0;
  return out;
}

nlohmann::ordered_json to_json(const GrunskyTable& table) {
  nlohmann::ordered_json j;
  j["source"] = table.source();
  j["order"] = table.order();
  auto omega = nlohmann::ordered_json::array();
  for (int p = 1; p <= table.order(); ++p)
    for (int q = 1; q <= table.order(); ++q) {
      const Complex w = table.omega(p, q);
      omega.push_back({w.real(), w.imag()});
    }
  j["omega"] = std::move(omega);
  return j;
}

}  // namespace grunsky
