// CLI for the Grunsky-coefficient verification toolkit.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "grunsky/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for coefficient inequalities of normalized univalent\n"
      "functions via Grunsky coefficients: exact identities, truncated Grunsky\n"
      "inequality checks, and certified maximization of the gamma4 and a5-a4\n"
      "majorants over their feasible moduli domain."};
  app.require_subcommand(1);

  grunsky::RunConfig cfg;
  app.add_option("--order", cfg.order, "Series truncation order (>= 8)")
      ->check(CLI::Range(8, 512));
  app.add_option("--tol", cfg.tolerance,
                 "Branch-and-bound tolerance (default 1e-3 for gamma4, 1e-2 for a5a4)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed for test vectors and multistart");
  app.add_option("--format", cfg.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker cap for the certificate search")
      ->check(CLI::Range(1, 64));
  app.add_option("--vectors", cfg.vectors, "Random test vectors per quadratic check")
      ->check(CLI::PositiveNumber);
  app.add_option("--box-budget", cfg.box_budget, "Branch-and-bound box budget");

  std::string subject, objective;
  int table_order = 7;
  bool strata_only = false;

  auto* identities = app.add_subcommand(
      "identities", "Residuals of the six exact a_2..a_5 / omega identities");
  identities->add_option("subject", subject, "Corpus function name or coefficient file")
      ->required();

  auto* grunsky_cmd = app.add_subcommand("grunsky", "Serialize a Grunsky table");
  grunsky_cmd->add_option("subject", subject, "Corpus function name or coefficient file")
      ->required();
  grunsky_cmd->add_option("table_order", table_order, "Table order M (needs 2M+1 <= order)");

  auto* inequality = app.add_subcommand(
      "inequality", "Truncated Grunsky inequality on random test vectors");
  inequality->add_option("subject", subject, "Corpus function name or coefficient file")
      ->required();

  auto* maximize = app.add_subcommand(
      "maximize", "Certified global maximum of a majorant over the moduli domain");
  maximize->add_option("objective", objective, "gamma4 or a5a4")->required();
  maximize->add_flag("--strata-only", strata_only, "Only the six boundary-stratum maxima");

  app.add_subcommand("corpus", "Run every check against every corpus function");
  app.add_subcommand("fekete-szego", "The sharp |a_3|-|a_2| constant 1.029...");
  app.add_subcommand("report", "Corpus checks, Fekete-Szego and both maximizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? grunsky::kExitOk : grunsky::kExitUsage;
  }

  if (identities->parsed()) return grunsky::run_identities(subject, cfg, std::cout);
  if (grunsky_cmd->parsed()) return grunsky::run_grunsky(subject, table_order, cfg, std::cout);
  if (inequality->parsed()) return grunsky::run_inequality(subject, cfg, std::cout);
  if (maximize->parsed()) return grunsky::run_maximize(objective, strata_only, cfg, std::cout);
  if (app.got_subcommand("corpus")) return grunsky::run_corpus(cfg, std::cout);
  if (app.got_subcommand("fekete-szego")) return grunsky::run_fekete_szego(cfg, std::cout);
  if (app.got_subcommand("report")) return grunsky::run_full_verification(cfg, std::cout);
  return grunsky::kExitUsage;
}
