// Command implementations behind the CLI: subject resolution, output
// rendering (text, json, csv) and exit codes.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "grunsky/corpus.hpp"

namespace grunsky {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  int order = 16;           // truncation order, >= 8
  double tolerance = 0.0;   // 0 = per-objective default (1e-3 gamma4, 1e-2 a5a4)
  std::uint64_t seed = 0;
  std::string format = "text";  // text | json | csv
  int threads = 1;
  int vectors = 1000;
  std::uint64_t box_budget = 10'000'000;

  void validate() const;  // throws std::invalid_argument
};

/// A corpus member by name, or a coefficient file by path. File format: one
/// coefficient per line as "re im" (line k holds a_k, starting from a_0),
/// '#' comments and blank lines ignored; a_0 must be 0 and a_1 must be 1.
/// File subjects are marked assumed_univalent.
NamedFunction resolve_subject(const std::string& subject, int order);

int run_identities(const std::string& subject, const RunConfig& cfg, std::ostream& os);
int run_grunsky(const std::string& subject, int table_order, const RunConfig& cfg,
                std::ostream& os);
int run_inequality(const std::string& subject, const RunConfig& cfg, std::ostream& os);
int run_maximize(const std::string& objective, bool strata_only, const RunConfig& cfg,
                 std::ostream& os);
int run_corpus(const RunConfig& cfg, std::ostream& os);
int run_fekete_szego(const RunConfig& cfg, std::ostream& os);
/// Everything: corpus checks, the Fekete-Szego constant, and both certified
/// maximizations, in one document.
int run_full_verification(const RunConfig& cfg, std::ostream& os);

}  // namespace grunsky
