#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "grunsky/corpus.hpp"
#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/rng.hpp"

using namespace grunsky;

namespace {

UniSeries<Complex> corpus_series(const std::string& name, int order = 16) {
  for (const NamedFunction& fn : builtin_corpus())
    if (fn.name == name) return fn.series(order);
  REQUIRE(false);
  return UniSeries<Complex>(order);
}

// The erroneous a_5 relation (5 w15^2 instead of 5 w13^2); kept only to prove
// the corrected formula is the right one.
double wrong_a5_residual(const UniSeries<Complex>& f, const GrunskyTable& odd) {
  const Complex w11 = odd.omega(1, 1), w13 = odd.omega(1, 3), w15 = odd.omega(1, 5),
                w33 = odd.omega(3, 3), w35 = odd.omega(3, 5);
  return std::abs(f[5] - (2.0 * w35 + 8.0 * w11 * w33 + 5.0 * w15 * w15 +
                          18.0 * w11 * w11 * w13 + (7.0 / 3.0) * w11 * w11 * w11 * w11));
}

}  // namespace

TEST_CASE("koebe full table is the -1/p diagonal") {
  const auto t = compute_grunsky(corpus_series("koebe"), 7, "koebe");
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= 7; ++q) {
      const double expected = p == q ? -1.0 / p : 0.0;
      CHECK(std::abs(t.omega(p, q) - expected) < 1e-12);
    }
}

TEST_CASE("identity map has a zero table") {
  const auto t = compute_grunsky(corpus_series("id"), 7, "id");
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= 7; ++q) CHECK(std::abs(t.omega(p, q)) < 1e-15);
}

TEST_CASE("compute_grunsky rejects insufficient truncation order") {
  CHECK_THROWS_AS(compute_grunsky(corpus_series("koebe", 8), 7), std::invalid_argument);
}

TEST_CASE("odd koebe table is the alternating 1/p diagonal") {
  const auto t = odd_grunsky_of(corpus_series("koebe"), 7, "koebe");
  CHECK(t.odd_type());
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= 7; ++q) {
      const double expected = p == q ? (p % 2 == 1 ? 1.0 : -1.0) / p : 0.0;
      CHECK(std::abs(t.omega(p, q) - expected) < 1e-12);
    }
  CHECK(std::abs(t.omega(1, 1) - 1.0) < 1e-13);
  CHECK(std::abs(t.omega(3, 3) - 1.0 / 3.0) < 1e-13);
  CHECK(std::abs(t.omega(1, 3)) < 1e-13);
  CHECK(std::abs(t.omega(3, 5)) < 1e-13);
}

TEST_CASE("odd table of the identity is zero") {
  const auto t = odd_grunsky_of(corpus_series("id"), 7, "id");
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= 7; ++q) CHECK(std::abs(t.omega(p, q)) < 1e-15);
}

TEST_CASE("odd table of z/(1-z): hand-derived entries") {
  // Inverting the identities by hand gives w11=1/2, w13=1/8, w33=1/24,
  // w15=1/16, w35=3/128, w17=5/128.
  const auto t = odd_grunsky_of(corpus_series("slit-like"), 7, "slit-like");
  CHECK(std::abs(t.omega(1, 1) - 0.5) < 1e-13);
  CHECK(std::abs(t.omega(1, 3) - 0.125) < 1e-13);
  CHECK(std::abs(t.omega(3, 3) - 1.0 / 24.0) < 1e-13);
  CHECK(std::abs(t.omega(1, 5) - 0.0625) < 1e-13);
  CHECK(std::abs(t.omega(3, 5) - 3.0 / 128.0) < 1e-13);
  CHECK(std::abs(t.omega(1, 7) - 5.0 / 128.0) < 1e-13);
}

TEST_CASE("identity residuals vanish on the corpus") {
  for (const NamedFunction& fn : builtin_corpus()) {
    const auto f = fn.series(16);
    const auto r = identity_residuals(f, odd_grunsky_of(f, 7, fn.name));
    INFO(fn.name);
    CHECK(r.maxCoeff() < 1e-10);
  }
}

TEST_CASE("koebe and slit-like residuals are tiny") {
  {
    const auto f = corpus_series("koebe");
    const auto r = identity_residuals(f, odd_grunsky_of(f));
    CHECK(r.maxCoeff() < 1e-12);
  }
  {
    const auto f = corpus_series("slit-like");
    const auto r = identity_residuals(f, odd_grunsky_of(f));
    CHECK(r.maxCoeff() < 1e-12);
  }
}

TEST_CASE("the 5 w15^2 variant of the a5 relation fails on z/(1-z)") {
  const auto f = corpus_series("slit-like");
  const auto odd = odd_grunsky_of(f);
  // correct residual is ~0; the wrong variant misses by 5(w13^2 - w15^2) = 15/256
  CHECK(wrong_a5_residual(f, odd) > 1e-3);
  CHECK(wrong_a5_residual(f, odd) == doctest::Approx(15.0 / 256.0).epsilon(1e-9));
}

TEST_CASE("eliminate_omega33") {
  CHECK(std::abs(eliminate_omega33(1.0, 0.0, 0.0) - 1.0 / 3.0) < 1e-15);
  CHECK(std::abs(eliminate_omega33(0.0, 0.0, 0.0)) == 0.0);
  const auto t = odd_grunsky_of(corpus_series("slit-like"));
  CHECK(std::abs(eliminate_omega33(t.omega(1, 1), t.omega(1, 3), t.omega(1, 5)) -
                 t.omega(3, 3)) < 1e-12);
}

TEST_CASE("eliminate_omega35") {
  CHECK(std::abs(eliminate_omega35(1.0, 0.0, 0.0, 0.0)) < 1e-15);
  CHECK(std::abs(eliminate_omega35(0.0, 0.0, 0.0, 0.0)) == 0.0);
  const auto t = odd_grunsky_of(corpus_series("slit-like"));
  CHECK(std::abs(eliminate_omega35(t.omega(1, 1), t.omega(1, 3), t.omega(1, 5),
                                   t.omega(1, 7)) -
                 t.omega(3, 5)) < 1e-12);
}

TEST_CASE("koebe saturates the odd quadratic form at x1=1") {
  const auto t = odd_grunsky_of(corpus_series("koebe"));
  Eigen::VectorXcd x(4);
  x << 1.0, 0.0, 0.0, 0.0;
  const auto q = grunsky_quadratic_check(t, x, 4);
  CHECK(std::abs(q.lhs - 1.0) < 1e-12);
  CHECK(std::abs(q.rhs - 1.0) < 1e-12);
}

TEST_CASE("zero table satisfies the quadratic form trivially") {
  const auto t = odd_grunsky_of(corpus_series("id"));
  Eigen::VectorXcd x(4);
  x << 1.0, Complex(0.0, 1.0), -0.5, 0.25;
  const auto q = grunsky_quadratic_check(t, x, 4);
  CHECK(q.lhs < 1e-24);
  CHECK(q.holds());
}

TEST_CASE("quadratic form holds on random vectors for z/(1-z)") {
  const auto f = corpus_series("slit-like");
  const auto odd = odd_grunsky_of(f);
  const auto full = compute_grunsky(f, 7, "slit-like");
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Eigen::VectorXcd xo(4), xf(7);
    for (int k = 0; k < 4; ++k) xo[k] = rng.unit_disk();
    for (int k = 0; k < 7; ++k) xf[k] = rng.unit_disk();
    CHECK(grunsky_quadratic_check(odd, xo, 4).holds());
    CHECK(grunsky_quadratic_check(full, xf, 7).holds());
  }
}

TEST_CASE("quadratic form rejects oversized vectors") {
  const auto t = odd_grunsky_of(corpus_series("koebe"));
  Eigen::VectorXcd x(5);
  x.setOnes();
  CHECK_THROWS_AS(grunsky_quadratic_check(t, x, 4), std::invalid_argument);
}

TEST_CASE("four-term bound: koebe equality and random checks") {
  const auto k = odd_grunsky_of(corpus_series("koebe"));
  auto q = four_term_bound_check(k.omega(1, 1), k.omega(1, 3), k.omega(1, 5), k.omega(1, 7),
                                 k.omega(3, 1), k.omega(3, 3), k.omega(3, 5), k.omega(3, 7),
                                 1.0, 0.0);
  CHECK(std::abs(q.lhs - 1.0) < 1e-12);
  CHECK(std::abs(q.rhs - 1.0) < 1e-12);

  q = four_term_bound_check(0, 0, 0, 0, 0, 0, 0, 0, 1.0, 1.0);
  CHECK(q.lhs == 0.0);

  const auto t = odd_grunsky_of(corpus_series("slit-like"));
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    q = four_term_bound_check(t.omega(1, 1), t.omega(1, 3), t.omega(1, 5), t.omega(1, 7),
                              t.omega(3, 1), t.omega(3, 3), t.omega(3, 5), t.omega(3, 7),
                              rng.unit_disk(), rng.unit_disk());
    CHECK(q.holds());
  }
}

TEST_CASE("cascade bounds hold on every corpus odd table") {
  for (const NamedFunction& fn : builtin_corpus()) {
    const auto t = odd_grunsky_of(fn.series(16), 7, fn.name);
    const double x = std::abs(t.omega(1, 1)), y = std::abs(t.omega(1, 3)),
                 z = std::abs(t.omega(1, 5)), w = std::abs(t.omega(1, 7));
    INFO(fn.name);
    CHECK(y <= cap_y(x) + 1e-10);
    CHECK(z <= cap_z(x, y) + 1e-10);
    CHECK(w <= cap_t(x, y, z) + 1e-10);
  }
}

TEST_CASE("symmetry and parity are validated at construction") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, 0.5, 0.25, 1.0;
  CHECK_THROWS_AS(GrunskyTable(bad, "bad", false), std::invalid_argument);

  Eigen::MatrixXcd odd_violation = Eigen::MatrixXcd::Zero(2, 2);
  odd_violation(0, 1) = odd_violation(1, 0) = 0.5;  // p+q = 3
  CHECK_THROWS_AS(GrunskyTable(odd_violation, "bad", true), std::invalid_argument);
  CHECK_NOTHROW(GrunskyTable(odd_violation, "ok", false));
}

TEST_CASE("tables computed from the corpus are symmetric") {
  for (const char* name : {"koebe", "two-slit", "koebe-rot45"}) {
    const auto t = compute_grunsky(corpus_series(name), 7, name);
    for (int p = 1; p <= 7; ++p)
      for (int q = 1; q <= 7; ++q)
        CHECK(std::abs(t.omega(p, q) - t.omega(q, p)) < 1e-12);
  }
}

TEST_CASE("grunsky table serializes to {source, order, omega}") {
  const auto t = compute_grunsky(corpus_series("koebe"), 3, "koebe");
  const auto j = to_json(t);
  CHECK(j["source"] == "koebe");
  CHECK(j["order"] == 3);
  REQUIRE(j["omega"].size() == 9);
  CHECK(j["omega"][0][0].get<double>() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(j["omega"][0][1].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
}
