// Closed-form univalent test functions and the per-function check battery.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grunsky/series.hpp"

namespace grunsky {

struct KnownValues {
  Complex gamma4;
  Complex a4;
  Complex a5;
  std::string provenance;
};

struct NamedFunction {
  std::string name;
  /// a_n for n >= 0; a_0 = 0 and a_1 = 1 for every member.
  std::function<Complex(int)> taylor;
  std::optional<KnownValues> known;
  /// Set for user-supplied coefficient files: univalence is then an input
  /// assumption, not a property of the corpus.
  bool assumed_univalent = false;

  UniSeries<Complex> series(int order) const;
};

/// Koebe z/(1-z)^2, the half-plane map z/(1-z), the odd Koebe z/(1-z^2),
/// the two-slit map z/(1-z+z^2), the identity, and rotations
/// e^{-it} f(e^{it} z) of the non-identity members for t in {pi/4, pi/2}.
std::vector<NamedFunction> builtin_corpus();

struct GammaCoefficient {
  int index;
  Complex value;
};

/// gamma_n = [z^n] log(f(z)/z) / 2 for n = 1..count (count <= f.order()-1).
std::vector<GammaCoefficient> logarithmic_coefficients(const UniSeries<Complex>& f,
                                                       int count);

/// |a_{n+1}| - |a_n|.
double coefficient_difference(const UniSeries<Complex>& f, int n);

struct CheckRow {
  std::string check;
  std::string subject;
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  double margin() const { return bound - value; }
};

struct FunctionCheckReport {
  std::string name;
  bool assumed_univalent = false;
  std::vector<CheckRow> rows;
  bool all_pass = true;
};

struct CheckOptions {
  int order = 16;
  std::uint64_t seed = 0;
  int vectors = 1000;
};

/// Runs every verification against one function: the six identity residuals,
/// the cascade bounds, the truncated quadratic-form checks on seeded random
/// test vectors, the gamma4 and a5-a4 reference bounds, chain dominance by
/// the majorants, and cross-formula agreement for gamma4.
FunctionCheckReport check_function(const NamedFunction& fn, const CheckOptions& opt);

}  // namespace grunsky
