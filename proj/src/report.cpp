#include "grunsky/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/optimizer.hpp"
#include "grunsky/rng.hpp"
#include "json.hpp"

namespace grunsky {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_rows_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
  os << "check,subject,value,bound,margin,pass\n";
  for (const CheckRow& r : rows)
    os << r.check << ',' << r.subject << ',' << fmt(r.value) << ',' << fmt(r.bound) << ','
       << fmt(r.margin()) << ',' << (r.pass ? "true" : "false") << '\n';
}

void write_rows_text(std::ostream& os, const std::vector<CheckRow>& rows) {
  for (const CheckRow& r : rows) {
    std::ostringstream line;
    line << std::left << std::setw(24) << r.check << std::setw(18) << r.subject
         << "value=" << std::setw(24) << fmt(r.value) << "bound=" << std::setw(24)
         << fmt(r.bound) << (r.pass ? "PASS" : "FAIL");
    os << line.str() << '\n';
  }
}

ordered_json rows_json(const std::vector<CheckRow>& rows) {
  auto arr = ordered_json::array();
  for (const CheckRow& r : rows)
    arr.push_back({{"check", r.check},
                   {"subject", r.subject},
                   {"value", r.value},
                   {"bound", r.bound},
                   {"margin", r.margin()},
                   {"pass", r.pass}});
  return arr;
}

void emit_rows(const RunConfig& cfg, std::ostream& os, const std::vector<CheckRow>& rows,
               const char* json_key) {
  if (cfg.format == "json") {
    ordered_json j;
    j[json_key] = rows_json(rows);
    os << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_rows_csv(os, rows);
  } else {
    write_rows_text(os, rows);
  }
}

std::vector<Complex> parse_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file: " + path);
  std::vector<Complex> coeffs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double re, im;
    if (!(ss >> re)) continue;  // blank or comment-only line
    if (!(ss >> im))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected \"re im\"");
    std::string rest;
    if (ss >> rest)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": trailing junk");
    coeffs.push_back({re, im});
  }
  if (coeffs.size() < 6)
    throw std::invalid_argument(path + ": need at least a_0..a_5 (six lines)");
  if (std::abs(coeffs[0]) > 1e-12 || std::abs(coeffs[1] - 1.0) > 1e-12)
    throw std::invalid_argument(path + ": series must be normalized (a_0 = 0, a_1 = 1)");
  return coeffs;
}

struct ObjectiveInfo {
  const Objective* objective;
  double default_tolerance;
  double reference;
  double reference_tolerance;
};

ObjectiveInfo objective_info(const std::string& name) {
  if (name == "gamma4")
    return {&gamma4_objective(), 1e-3, kGamma4ReferenceBound, 1e-3};
  if (name == "a5a4") return {&a5a4_objective(), 1e-2, kA5A4ReferenceBound, 1e-2};
  throw std::invalid_argument("unknown objective (expected gamma4 or a5a4): " + name);
}

void maximize_text(std::ostream& os, const OptimizationReport& rep) {
  os << "objective " << rep.objective << "\n";
  os << "global    value=" << fmt(rep.global.value) << " at (" << fmt(rep.global.location.x())
     << ", " << fmt(rep.global.location.y()) << ", " << fmt(rep.global.location.z())
     << ") stratum=" << stratum_name(rep.global.stratum) << "\n";
  for (const CriticalPoint& cp : rep.strata)
    os << "  " << std::left << std::setw(10) << stratum_name(cp.stratum)
       << " value=" << std::setw(24) << fmt(cp.value) << " at (" << fmt(cp.location.x())
       << ", " << fmt(cp.location.y()) << ", " << fmt(cp.location.z())
       << ") grad_norm=" << fmt(cp.gradient_norm) << "\n";
  os << "certificate lower=" << fmt(rep.certificate.lower)
     << " upper=" << fmt(rep.certificate.upper) << " boxes=" << rep.certificate.boxes_processed
     << " certified=" << (rep.certificate.certified ? "true" : "false") << "\n";
}

std::vector<CheckRow> maximize_rows(const OptimizationReport& rep, double reference,
                                    double reference_tolerance) {
  std::vector<CheckRow> rows;
  for (const CriticalPoint& cp : rep.strata)
    rows.push_back({std::string("stratum:") + stratum_name(cp.stratum), rep.objective,
                    cp.value, rep.global.value, true});
  rows.push_back({"global-vs-reference", rep.objective,
                  std::abs(rep.global.value - reference), reference_tolerance,
                  std::abs(rep.global.value - reference) <= reference_tolerance});
  const double width = rep.certificate.upper - rep.certificate.lower;
  rows.push_back({"certificate-width", rep.objective, width,
                  rep.certificate.upper - rep.global.value + reference_tolerance,
                  rep.certificate.certified});
  return rows;
}

}  // namespace

void RunConfig::validate() const {
  if (order < 8) throw std::invalid_argument("order must be >= 8");
  if (tolerance < 0.0) throw std::invalid_argument("tolerance must be positive");
  if (format != "text" && format != "json" && format != "csv")
    throw std::invalid_argument("format must be text, json or csv");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (vectors < 1) throw std::invalid_argument("vectors must be >= 1");
}

NamedFunction resolve_subject(const std::string& subject, int /*order*/) {
  for (NamedFunction& fn : builtin_corpus())
    if (fn.name == subject) return fn;
  if (std::filesystem::exists(subject)) {
    auto coeffs = parse_coefficient_file(subject);
    NamedFunction fn;
    fn.name = std::filesystem::path(subject).filename().string();
    fn.taylor = [coeffs](int n) {
      return n < static_cast<int>(coeffs.size()) ? coeffs[n] : Complex(0.0);
    };
    fn.assumed_univalent = true;
    return fn;
  }
  throw std::invalid_argument("unknown function name and no such file: " + subject);
}

int run_identities(const std::string& subject, const RunConfig& cfg, std::ostream& os) {
  try {
    cfg.validate();
    const NamedFunction fn = resolve_subject(subject, cfg.order);
    const UniSeries<Complex> f = fn.series(cfg.order);
    const auto residuals = identity_residuals(f, odd_grunsky_of(f, 7, fn.name));
    std::vector<CheckRow> rows;
    for (int i = 0; i < 6; ++i)
      rows.push_back({"identity-" + std::to_string(i + 1), fn.name, residuals[i], 1e-10,
                      residuals[i] < 1e-10});
    if (cfg.format == "json") {
      ordered_json j;
      j["subject"] = fn.name;
      j["assumed_univalent"] = fn.assumed_univalent;
      j["residuals"] = std::vector<double>(residuals.begin(), residuals.end());
      j["pass"] = residuals.maxCoeff() < 1e-10;
      os << j.dump(2) << '\n';
    } else {
      emit_rows(cfg, os, rows, "identities");
    }
    return residuals.maxCoeff() < 1e-10 ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_grunsky(const std::string& subject, int table_order, const RunConfig& cfg,
                std::ostream& os) {
  try {
    cfg.validate();
    const NamedFunction fn = resolve_subject(subject, cfg.order);
    const UniSeries<Complex> f = fn.series(cfg.order);
    const GrunskyTable table = compute_grunsky(f, table_order, fn.name);
    if (cfg.format == "json") {
      os << to_json(table).dump(2) << '\n';
    } else if (cfg.format == "csv") {
      os << "p,q,re,im\n";
      for (int p = 1; p <= table.order(); ++p)
        for (int q = 1; q <= table.order(); ++q)
          os << p << ',' << q << ',' << fmt(table.omega(p, q).real()) << ','
             << fmt(table.omega(p, q).imag()) << '\n';
    } else {
      os << "grunsky table of " << fn.name << ", order " << table.order() << "\n";
      for (int p = 1; p <= table.order(); ++p) {
        for (int q = 1; q <= table.order(); ++q) {
          const Complex w = table.omega(p, q);
          os << '(' << fmt(w.real()) << (w.imag() < 0 ? "" : "+") << fmt(w.imag()) << "i) ";
        }
        os << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_inequality(const std::string& subject, const RunConfig& cfg, std::ostream& os) {
  try {
    cfg.validate();
    const NamedFunction fn = resolve_subject(subject, cfg.order);
    const UniSeries<Complex> f = fn.series(cfg.order);
    const GrunskyTable odd = odd_grunsky_of(f, 7, fn.name);
    const GrunskyTable full = compute_grunsky(f, (f.order() - 1) / 2, fn.name);
    Rng rng(cfg.seed);
    double worst_full = -1.0, worst_odd = -1.0, worst_four = -1.0;
    const int odd_terms = (odd.order() + 1) / 2;
    for (int i = 0; i < cfg.vectors; ++i) {
      Eigen::VectorXcd xf(full.order());
      for (int k = 0; k < xf.size(); ++k) xf[k] = rng.unit_disk();
      const auto qf = grunsky_quadratic_check(full, xf, full.order());
      worst_full = std::max(worst_full, qf.lhs - qf.rhs);
      Eigen::VectorXcd xo(odd_terms);
      for (int k = 0; k < xo.size(); ++k) xo[k] = rng.unit_disk();
      const auto qo = grunsky_quadratic_check(odd, xo, odd_terms);
      worst_odd = std::max(worst_odd, qo.lhs - qo.rhs);
      const auto q4 = four_term_bound_check(
          odd.omega(1, 1), odd.omega(1, 3), odd.omega(1, 5), odd.omega(1, 7),
          odd.omega(3, 1), odd.omega(3, 3), odd.omega(3, 5), odd.omega(3, 7),
          rng.unit_disk(), rng.unit_disk());
      worst_four = std::max(worst_four, q4.lhs - q4.rhs);
    }
    const std::vector<CheckRow> rows = {
        {"grunsky-quadratic", fn.name, worst_full, 1e-12, worst_full <= 1e-12},
        {"grunsky-quadratic-odd", fn.name, worst_odd, 1e-12, worst_odd <= 1e-12},
        {"grunsky-four-term", fn.name, worst_four, 1e-12, worst_four <= 1e-12}};
    emit_rows(cfg, os, rows, "inequality");
    const bool pass = rows[0].pass && rows[1].pass && rows[2].pass;
    return pass ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_maximize(const std::string& objective, bool strata_only, const RunConfig& cfg,
                 std::ostream& os) {
  try {
    cfg.validate();
    const ObjectiveInfo info = objective_info(objective);
    if (strata_only) {
      std::vector<CheckRow> rows;
      ordered_json strata = ordered_json::array();
      for (const StratumKind kind : kBoundaryStrata) {
        const CriticalPoint cp = maximize_stratum(*info.objective, kind);
        rows.push_back({std::string("stratum:") + stratum_name(kind), objective, cp.value,
                        cp.value, true});
        strata.push_back({{"stratum", stratum_name(kind)},
                          {"x", cp.location.x()},
                          {"y", cp.location.y()},
                          {"z", cp.location.z()},
                          {"value", cp.value},
                          {"gradient_norm", cp.gradient_norm}});
      }
      if (cfg.format == "json") {
        ordered_json j;
        j["objective"] = objective;
        j["strata"] = std::move(strata);
        os << j.dump(2) << '\n';
      } else {
        emit_rows(cfg, os, rows, "strata");
      }
      return kExitOk;
    }
    ReportOptions ropt;
    ropt.tolerance = cfg.tolerance > 0.0 ? cfg.tolerance : info.default_tolerance;
    ropt.box_budget = cfg.box_budget;
    ropt.threads = cfg.threads;
    ropt.seed = cfg.seed;
    const OptimizationReport rep = full_report(*info.objective, ropt);
    if (cfg.format == "json") {
      os << to_json(rep).dump(2) << '\n';
    } else if (cfg.format == "csv") {
      write_rows_csv(os, maximize_rows(rep, info.reference, info.reference_tolerance));
    } else {
      maximize_text(os, rep);
    }
    if (!rep.certificate.certified) return kExitBudget;
    return std::abs(rep.global.value - info.reference) <= info.reference_tolerance
               ? kExitOk
               : kExitCheckFailed;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_corpus(const RunConfig& cfg, std::ostream& os) {
  try {
    cfg.validate();
    const CheckOptions opt{cfg.order, cfg.seed, cfg.vectors};
    std::vector<CheckRow> rows;
    auto functions = ordered_json::array();
    bool all_pass = true;
    for (const NamedFunction& fn : builtin_corpus()) {
      const FunctionCheckReport rep = check_function(fn, opt);
      all_pass = all_pass && rep.all_pass;
      rows.insert(rows.end(), rep.rows.begin(), rep.rows.end());
      functions.push_back({{"name", rep.name},
                           {"assumed_univalent", rep.assumed_univalent},
                           {"all_pass", rep.all_pass},
                           {"checks", rows_json(rep.rows)}});
    }
    if (cfg.format == "json") {
      ordered_json j;
      j["functions"] = std::move(functions);
      j["all_pass"] = all_pass;
      os << j.dump(2) << '\n';
    } else {
      emit_rows(cfg, os, rows, "corpus");
    }
    return all_pass ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_fekete_szego(const RunConfig& cfg, std::ostream& os) {
  try {
    cfg.validate();
    const FeketeSzego fs = fekete_szego_constant();
    const double residual = std::abs(4.0 * fs.lambda0 - std::exp(fs.lambda0));
    const std::vector<CheckRow> rows = {
        {"fekete-defining-residual", "fekete-szego", residual, 1e-10, residual < 1e-10},
        {"fekete-bound-vs-reference", "fekete-szego", std::abs(fs.bound - 1.029), 1e-3,
         std::abs(fs.bound - 1.029) <= 1e-3}};
    if (cfg.format == "json") {
      ordered_json j;
      j["lambda0"] = fs.lambda0;
      j["bound"] = fs.bound;
      j["checks"] = rows_json(rows);
      os << j.dump(2) << '\n';
    } else {
      emit_rows(cfg, os, rows, "fekete_szego");
    }
    return rows[0].pass && rows[1].pass ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_full_verification(const RunConfig& cfg, std::ostream& os) {
  try {
    cfg.validate();
    int worst = kExitOk;
    if (cfg.format == "json") {
      std::ostringstream corpus_os, fekete_os, g_os, a_os;
      RunConfig sub = cfg;
      worst = std::max(worst, run_corpus(sub, corpus_os));
      worst = std::max(worst, run_fekete_szego(sub, fekete_os));
      worst = std::max(worst, run_maximize("gamma4", false, sub, g_os));
      worst = std::max(worst, run_maximize("a5a4", false, sub, a_os));
      ordered_json j;
      j["corpus"] = ordered_json::parse(corpus_os.str());
      j["fekete_szego"] = ordered_json::parse(fekete_os.str());
      j["maximize"] = {ordered_json::parse(g_os.str()), ordered_json::parse(a_os.str())};
      os << j.dump(2) << '\n';
    } else {
      if (cfg.format == "text") os << "== corpus ==\n";
      worst = std::max(worst, run_corpus(cfg, os));
      if (cfg.format == "text") os << "== fekete-szego ==\n";
      worst = std::max(worst, run_fekete_szego(cfg, os));
      if (cfg.format == "text") os << "== maximize gamma4 ==\n";
      worst = std::max(worst, run_maximize("gamma4", false, cfg, os));
      if (cfg.format == "text") os << "== maximize a5a4 ==\n";
      worst = std::max(worst, run_maximize("a5a4", false, cfg, os));
    }
    return worst;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace grunsky
