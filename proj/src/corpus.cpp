#include "grunsky/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/rng.hpp"

namespace grunsky {

UniSeries<Complex> NamedFunction::series(int order) const {
  UniSeries<Complex> f(order);
  for (int n = 0; n <= order; ++n) f[n] = taylor(n);
  return f;
}

namespace {

NamedFunction rotated(const NamedFunction& base, double theta, const std::string& suffix) {
  NamedFunction out;
  out.name = base.name + suffix;
  auto inner = base.taylor;
  out.taylor = [inner, theta](int n) {
    return n == 0 ? Complex(0.0) : inner(n) * std::polar(1.0, theta * (n - 1));
  };
  if (base.known) {
    // gamma_n and a_n pick up phases e^{i n t} and e^{i (n-1) t}; moduli are
    // untouched.
    out.known = KnownValues{base.known->gamma4 * std::polar(1.0, 4.0 * theta),
                            base.known->a4 * std::polar(1.0, 3.0 * theta),
                            base.known->a5 * std::polar(1.0, 4.0 * theta),
                            base.known->provenance + ", rotated"};
  }
  return out;
}

}  // namespace

std::vector<NamedFunction> builtin_corpus() {
  std::vector<NamedFunction> base;

  base.push_back({"id", [](int n) { return Complex(n == 1 ? 1.0 : 0.0); },
                  KnownValues{0.0, 0.0, 0.0, "identity map"}});
  base.push_back({"koebe",
                  [](int n) { return Complex(n == 0 ? 0.0 : double(n)); },
                  KnownValues{0.25, 4.0, 5.0, "z/(1-z)^2: a_n = n, gamma_n = 1/n"}});
  base.push_back({"slit-like", [](int n) { return Complex(n >= 1 ? 1.0 : 0.0); },
                  KnownValues{0.125, 1.0, 1.0, "z/(1-z): a_n = 1, gamma_n = 1/(2n)"}});
  base.push_back({"odd-koebe",
                  [](int n) { return Complex(n >= 1 && n % 2 == 1 ? 1.0 : 0.0); },
                  KnownValues{0.25, 0.0, 1.0, "z/(1-z^2): gamma_{2k} = 1/(2k)"}});
  // z/(1-z+z^2) = z/((1-e^{i pi/3} z)(1-e^{-i pi/3} z)); a_n has period 6.
  base.push_back({"two-slit",
                  [](int n) {
                    static constexpr double cycle[6] = {0.0, 1.0, 1.0, 0.0, -1.0, -1.0};
                    return Complex(cycle[n % 6]);
                  },
                  KnownValues{-0.125, -1.0, -1.0,
                              "z/(1-z+z^2): log(f/z) = log(1+z) - log(1+z^3)"}});

  std::vector<NamedFunction> out = base;
  for (std::size_t i = 1; i < base.size(); ++i) {
    out.push_back(rotated(base[i], std::numbers::pi / 4.0, "-rot45"));
    out.push_back(rotated(base[i], std::numbers::pi / 2.0, "-rot90"));
  }
  return out;
}

std::vector<GammaCoefficient> logarithmic_coefficients(const UniSeries<Complex>& f,
                                                       int count) {
  if (!is_normalized(f))
    throw std::domain_error("logarithmic_coefficients: series must be normalized");
  if (count < 1 || count > f.order() - 1)
    throw std::invalid_argument("logarithmic_coefficients: count out of range");
  UniSeries<Complex> over_z(f.order() - 1);
  for (int k = 0; k <= f.order() - 1; ++k) over_z[k] = f[k + 1];
  const UniSeries<Complex> lg = log1(over_z);
  std::vector<GammaCoefficient> out;
  out.reserve(count);
  for (int n = 1; n <= count; ++n) out.push_back({n, 0.5 * lg[n]});
  return out;
}

double coefficient_difference(const UniSeries<Complex>& f, int n) {
  if (n < 1 || n + 1 > f.order())
    throw std::invalid_argument("coefficient_difference: need coefficients a_n, a_{n+1}");
  return std::abs(f[n + 1]) - std::abs(f[n]);
}

FunctionCheckReport check_function(const NamedFunction& fn, const CheckOptions& opt) {
  FunctionCheckReport rep;
  rep.name = fn.name;
  rep.assumed_univalent = fn.assumed_univalent;
  const auto add = [&](const std::string& check, double value, double bound) {
    rep.rows.push_back({check, fn.name, value, bound, value <= bound});
    rep.all_pass = rep.all_pass && rep.rows.back().pass;
  };

  const UniSeries<Complex> f = fn.series(opt.order);
  const GrunskyTable odd = odd_grunsky_of(f, 7, fn.name);
  const GrunskyTable full = compute_grunsky(f, (f.order() - 1) / 2, fn.name);

  const Eigen::Vector<double, 6> res = identity_residuals(f, odd);
  add("identity-residual-max", res.maxCoeff(), 1e-10);

  const Complex w11 = odd.omega(1, 1), w13 = odd.omega(1, 3), w15 = odd.omega(1, 5),
                w17 = odd.omega(1, 7);
  const double x = std::abs(w11), y = std::abs(w13), z = std::abs(w15),
               t = std::abs(w17);
  add("cascade-omega13", y, cap_y(x) + 1e-10);
  add("cascade-omega15", z, cap_z(x, y) + 1e-10);
  add("cascade-omega17", t, cap_t(x, y, z) + 1e-10);

  Rng rng(opt.seed);
  double worst_full = -1.0, worst_odd = -1.0, worst_four = -1.0;
  const int odd_terms = (odd.order() + 1) / 2;
  for (int i = 0; i < opt.vectors; ++i) {
    Eigen::VectorXcd xf(full.order());
    for (int k = 0; k < xf.size(); ++k) xf[k] = rng.unit_disk();
    const QuadraticCheck qf = grunsky_quadratic_check(full, xf, full.order());
    worst_full = std::max(worst_full, qf.lhs - qf.rhs);

    Eigen::VectorXcd xo(odd_terms);
    for (int k = 0; k < xo.size(); ++k) xo[k] = rng.unit_disk();
    const QuadraticCheck qo = grunsky_quadratic_check(odd, xo, odd_terms);
    worst_odd = std::max(worst_odd, qo.lhs - qo.rhs);

    const QuadraticCheck q4 = four_term_bound_check(
        w11, w13, w15, w17, odd.omega(3, 1), odd.omega(3, 3), odd.omega(3, 5),
        odd.omega(3, 7), rng.unit_disk(), rng.unit_disk());
    worst_four = std::max(worst_four, q4.lhs - q4.rhs);
  }
  add("grunsky-quadratic", worst_full, 1e-12);
  add("grunsky-quadratic-odd", worst_odd, 1e-12);
  add("grunsky-four-term", worst_four, 1e-12);

  const Complex gamma4_def = logarithmic_coefficients(f, 4)[3].value;
  const Complex gamma4_a = gamma4_from_a(f[2], f[3], f[4], f[5]);
  const Complex gamma4_w = gamma4_from_omega(w11, w13, w15, w17);
  add("gamma4-def-vs-a", std::abs(gamma4_def - gamma4_a), 1e-10);
  add("gamma4-a-vs-omega", std::abs(gamma4_a - gamma4_w), 1e-10);
  add("gamma4-bound", std::abs(gamma4_a), kGamma4ReferenceBound + 1e-9);
  add("gamma4-chain", std::abs(gamma4_a),
      phi1(make_feasible_point(x, y, z, t)) + 1e-10);

  const double diff54 = coefficient_difference(f, 4);
  add("a5a4-bound", diff54, kA5A4ReferenceBound + 1e-9);
  add("a5a4-chain", diff54, a5_minus_a4_majorant(w11, w13, w15, w17) + 1e-10);

  if (fn.known) {
    add("known-gamma4", std::abs(gamma4_def - fn.known->gamma4), 1e-12);
    add("known-a4", std::abs(f[4] - fn.known->a4), 1e-12);
    add("known-a5", std::abs(f[5] - fn.known->a5), 1e-12);
  }
  return rep;
}

}  // namespace grunsky
