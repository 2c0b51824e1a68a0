// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria and tolerances are pinned in code; run it via
// ctest or directly from the build tree.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "grunsky/corpus.hpp"
#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/optimizer.hpp"
#include "grunsky/rng.hpp"

using namespace grunsky;

namespace {

int g_failures = 0;

void criterion(int n, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OptimizationReport timed_report(const Objective& obj, double tol, double* elapsed) {
  ReportOptions opt;
  opt.tolerance = tol;
  opt.threads = 1;
  const auto t0 = std::chrono::steady_clock::now();
  OptimizationReport rep = full_report(obj, opt);
  *elapsed = seconds_since(t0);
  return rep;
}

double stratum_value(const OptimizationReport& rep, StratumKind kind) {
  for (const auto& cp : rep.strata)
    if (cp.stratum == kind) return cp.value;
  return -1.0;
}

}  // namespace

int main() {
  // Criteria 1-2: certified reproduction of both global maxima.
  double t_gamma4 = 0.0, t_a5a4 = 0.0;
  const OptimizationReport rep1 = timed_report(gamma4_objective(), 1e-3, &t_gamma4);
  const OptimizationReport rep2 = timed_report(a5a4_objective(), 1e-2, &t_a5a4);

  {
    const bool value_ok = std::abs(rep1.global.value - 0.51059) <= 1e-3;
    const bool loc_ok = std::abs(rep1.global.location.x() - 0.81907) <= 1e-3 &&
                        std::abs(rep1.global.location.y() - 0.233235) <= 1e-3 &&
                        std::abs(rep1.global.location.z() - 0.126778) <= 1e-3;
    const double width = rep1.certificate.upper - rep1.certificate.lower;
    const bool cert_ok = rep1.certificate.certified && width <= 1e-3;
    const bool time_ok = t_gamma4 < 60.0;
    criterion(1, value_ok && loc_ok && cert_ok && time_ok,
              "gamma4 global " + num(rep1.global.value) + " at (" +
                  num(rep1.global.location.x()) + ", " + num(rep1.global.location.y()) +
                  ", " + num(rep1.global.location.z()) + "), certificate width " +
                  num(width) + ", " + num(t_gamma4) + " s");
  }
  {
    const bool value_ok = std::abs(rep2.global.value - 2.3297) <= 1e-2;
    const bool loc_ok = std::abs(rep2.global.location.x() - 0.82745) <= 1e-3 &&
                        std::abs(rep2.global.location.y() - 0.29092) <= 1e-3 &&
                        std::abs(rep2.global.location.z() - 0.098698) <= 1e-3;
    const double width = rep2.certificate.upper - rep2.certificate.lower;
    const bool cert_ok = rep2.certificate.certified && width <= 1e-2;
    const bool time_ok = t_a5a4 < 60.0;
    criterion(2, value_ok && loc_ok && cert_ok && time_ok,
              "a5a4 global " + num(rep2.global.value) + " at (" +
                  num(rep2.global.location.x()) + ", " + num(rep2.global.location.y()) +
                  ", " + num(rep2.global.location.z()) + "), certificate width " +
                  num(width) + ", " + num(t_a5a4) + " s");
  }

  // Criterion 3: the twelve boundary-stratum values, plus the closed forms
  // 1/sqrt(7) and 8/7 to 1e-12.
  {
    struct Entry {
      StratumKind kind;
      double reference;
    };
    const std::vector<Entry> psi1_refs = {
        {StratumKind::kX0, 0.37796},  {StratumKind::kX1, 0.25},
        {StratumKind::kY0, 0.414666}, {StratumKind::kYMax, 0.4000},
        {StratumKind::kZ0, 0.4561},   {StratumKind::kZMax, 0.4570}};
    const std::vector<Entry> psi2_refs = {
        {StratumKind::kX0, 1.142857}, {StratumKind::kX1, 1.0},
        {StratumKind::kY0, 1.3614},   {StratumKind::kYMax, 2.118588},
        {StratumKind::kZ0, 2.162},    {StratumKind::kZMax, 2.287}};
    bool pass = true;
    std::string detail;
    for (const auto& [refs, rep, tag] :
         {std::tuple{&psi1_refs, &rep1, "psi1"}, std::tuple{&psi2_refs, &rep2, "psi2"}}) {
      for (const Entry& e : *refs) {
        const double got = stratum_value(*rep, e.kind);
        if (std::abs(got - e.reference) > 1e-3) {
          pass = false;
          detail += std::string(tag) + " " + stratum_name(e.kind) + ": computed " +
                    num(got) + " vs pinned " + num(e.reference) + "; ";
        }
      }
    }
    const double x0_1 = stratum_value(rep1, StratumKind::kX0);
    const double x0_2 = stratum_value(rep2, StratumKind::kX0);
    if (std::abs(x0_1 - 1.0 / std::sqrt(7.0)) > 1e-12) {
      pass = false;
      detail += "psi1 x=0 closed form off; ";
    }
    if (std::abs(x0_2 - 8.0 / 7.0) > 1e-12) {
      pass = false;
      detail += "psi2 x=0 closed form off; ";
    }
    if (detail.empty()) detail = "all twelve stratum values within 1e-3, closed forms to 1e-12";
    criterion(3, pass, detail);
  }

  // Criterion 4: identity residuals on the corpus; the wrong a5 variant must
  // fail loudly on z/(1-z).
  {
    bool pass = true;
    double worst = 0.0;
    for (const NamedFunction& fn : builtin_corpus()) {
      const auto f = fn.series(16);
      const auto r = identity_residuals(f, odd_grunsky_of(f, 7, fn.name));
      worst = std::max(worst, r.maxCoeff());
      pass = pass && r.maxCoeff() < 1e-10;
    }
    // 5 w15^2 in place of 5 w13^2
    for (const NamedFunction& fn : builtin_corpus()) {
      if (fn.name != "slit-like") continue;
      const auto f = fn.series(16);
      const auto t = odd_grunsky_of(f, 7, fn.name);
      const Complex w11 = t.omega(1, 1), w13 = t.omega(1, 3), w15 = t.omega(1, 5),
                    w33 = t.omega(3, 3), w35 = t.omega(3, 5);
      const double wrong =
          std::abs(f[5] - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w15 * w15 +
                           18.0 * w11 * w11 * w13 + (7.0 / 3.0) * w11 * w11 * w11 * w11));
      pass = pass && wrong > 1e-3;
    }
    criterion(4, pass, "worst corpus residual " + num(worst) + ", typo variant rejected");
  }

  // Criterion 5: quadratic-form checks across 1000 seeded vectors per table.
  {
    bool pass = true;
    double worst = -1.0;
    for (const NamedFunction& fn : builtin_corpus()) {
      const auto f = fn.series(16);
      const auto odd = odd_grunsky_of(f, 7, fn.name);
      const auto full = compute_grunsky(f, 7, fn.name);
      Rng rng(0);
      for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXcd xf(7), xo(4);
        for (int k = 0; k < 7; ++k) xf[k] = rng.unit_disk();
        for (int k = 0; k < 4; ++k) xo[k] = rng.unit_disk();
        const auto qf = grunsky_quadratic_check(full, xf, 7);
        const auto qo = grunsky_quadratic_check(odd, xo, 4);
        const auto q4 = four_term_bound_check(
            odd.omega(1, 1), odd.omega(1, 3), odd.omega(1, 5), odd.omega(1, 7),
            odd.omega(3, 1), odd.omega(3, 3), odd.omega(3, 5), odd.omega(3, 7),
            rng.unit_disk(), rng.unit_disk());
        worst = std::max({worst, qf.lhs - qf.rhs, qo.lhs - qo.rhs, q4.lhs - q4.rhs});
        pass = pass && qf.holds() && qo.holds() && q4.holds();
      }
    }
    // koebe equality at x1=1, x3=0
    UniSeries<Complex> koebe(16);
    for (int n = 1; n <= 16; ++n) koebe[n] = double(n);
    const auto koebe_odd = odd_grunsky_of(koebe, 7, "koebe");
    Eigen::VectorXcd unit(4);
    unit << 1.0, 0.0, 0.0, 0.0;
    const auto q = grunsky_quadratic_check(koebe_odd, unit, 4);
    pass = pass && std::abs(q.lhs - q.rhs) < 1e-12 && std::abs(q.lhs - 1.0) < 1e-12;
    criterion(5, pass,
              "worst lhs-rhs " + num(worst) + ", koebe equality gap " + num(q.lhs - q.rhs));
  }

  // Criterion 6: cross-formula gamma4 agreement; koebe = 1/4.
  {
    bool pass = true;
    double worst = 0.0;
    double koebe_gamma4 = 0.0;
    for (const NamedFunction& fn : builtin_corpus()) {
      const auto f = fn.series(16);
      const auto t = odd_grunsky_of(f, 7, fn.name);
      const Complex a = gamma4_from_a(f[2], f[3], f[4], f[5]);
      const Complex w = gamma4_from_omega(t.omega(1, 1), t.omega(1, 3), t.omega(1, 5),
                                          t.omega(1, 7));
      worst = std::max(worst, std::abs(a - w));
      if (fn.name == "koebe") koebe_gamma4 = std::abs(a);
    }
    pass = worst < 1e-10 && std::abs(koebe_gamma4 - 0.25) < 1e-12;
    criterion(6, pass,
              "worst |from_a - from_omega| " + num(worst) + ", koebe gamma4 " +
                  num(koebe_gamma4));
  }

  // Criterion 7: Fekete-Szego constant.
  {
    const FeketeSzego fs = fekete_szego_constant();
    const double res = std::abs(4.0 * fs.lambda0 - std::exp(fs.lambda0));
    const bool pass = std::abs(fs.bound - 1.029) <= 1e-3 && res < 1e-10;
    criterion(7, pass, "bound " + num(fs.bound) + ", defining residual " + num(res));
  }

  // Criterion 8: 5e-3 brute-force grid vs the certified reports.
  {
    bool pass = true;
    std::string detail;
    for (const auto& [obj, rep, tag] :
         {std::tuple{&gamma4_objective(), &rep1, "gamma4"},
          std::tuple{&a5a4_objective(), &rep2, "a5a4"}}) {
      double grid_best = -1.0;
      for (double x = 0.0; x <= 1.0 + 1e-15; x += 5e-3) {
        const double yc = cap_y(x);
        for (double y = 0.0; y <= yc + 1e-15; y += 5e-3) {
          const double yy = std::min(y, yc);
          const double zc = cap_z(x, yy);
          for (double z = 0.0; z <= zc + 1e-15; z += 5e-3)
            grid_best = std::max(grid_best, obj->value({x, yy, std::min(z, zc)}));
          grid_best = std::max(grid_best, obj->value({x, yy, zc}));
        }
      }
      const double diff = std::abs(grid_best - rep->global.value);
      pass = pass && diff < 1e-3;
      detail += std::string(tag) + " grid gap " + num(diff) + "; ";
    }
    criterion(8, pass, detail);
  }

  // Criterion 9: analytic gradients vs central differences at 100 seeded
  // interior points with radicand > 1e-3.
  {
    Rng rng(0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Eigen::Vector3d p;
      do {
        p = {rng.uniform(0.0, 1.0), rng.uniform(0.0, cap_y(0.0)),
             rng.uniform(0.0, cap_z(0.0, 0.0))};
      } while (radicand(p.x(), p.y(), p.z()) <= 1e-3);
      const double h = 1e-6;
      for (int w = 0; w < 2; ++w) {
        const auto psi_w = w == 0 ? &psi1 : &psi2;
        const auto grad_w = w == 0 ? &grad_psi1 : &grad_psi2;
        Eigen::Vector3d fd;
        for (int d = 0; d < 3; ++d) {
          Eigen::Vector3d lo = p, hi = p;
          lo[d] -= h;
          hi[d] += h;
          fd[d] = (psi_w(hi.x(), hi.y(), hi.z()) - psi_w(lo.x(), lo.y(), lo.z())) / (2.0 * h);
        }
        worst = std::max(worst,
                         (grad_w(p.x(), p.y(), p.z()) - fd).cwiseAbs().maxCoeff());
      }
    }
    criterion(9, worst < 1e-5, "max |analytic - central difference| " + num(worst));
  }

  // Criterion 10: sharpness is not a target; corpus-vs-bound margins are
  // informational only.
  {
    double best_gamma4 = 0.0, best_diff = 0.0;
    for (const NamedFunction& fn : builtin_corpus()) {
      const auto f = fn.series(16);
      best_gamma4 = std::max(best_gamma4, std::abs(gamma4_from_a(f[2], f[3], f[4], f[5])));
      best_diff = std::max(best_diff, coefficient_difference(f, 4));
    }
    criterion(10, true,
              "informational: corpus max |gamma4| " + num(best_gamma4) + " vs bound " +
                  num(kGamma4ReferenceBound) + " (gap " +
                  num(kGamma4ReferenceBound - best_gamma4) + "); corpus max |a5|-|a4| " +
                  num(best_diff) + " vs bound " + num(kA5A4ReferenceBound));
  }

  if (g_failures > 0)
    std::printf("%d criterion(s) failed\n", g_failures);
  else
    std::printf("all criteria passed\n");
  return g_failures > 0 ? 1 : 0;
}
