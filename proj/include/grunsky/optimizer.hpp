// Global maximization of the majorant functionals over the feasible moduli
// domain: interior critical points by damped Newton, exhaustive maximization
// of the six boundary strata, and a rigorous interval branch-and-bound
// enclosure of the global maximum.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grunsky/functionals.hpp"
#include "grunsky/interval.hpp"
#include "json.hpp"

namespace grunsky {

/// Faces of the (x,y,z) feasible domain. X1 pins (1,0,0); YMax (y at its cap)
/// forces z = 0 because the z-cap vanishes there; ZMax is the curved z-cap
/// surface, where the eliminated t is 0.
enum class StratumKind { kInterior, kX0, kX1, kY0, kYMax, kZ0, kZMax };

inline constexpr std::array<StratumKind, 6> kBoundaryStrata = {
    StratumKind::kX0, StratumKind::kX1,   StratumKind::kY0,
    StratumKind::kYMax, StratumKind::kZ0, StratumKind::kZMax};

const char* stratum_name(StratumKind kind);

/// Number of free variables of a stratum (0, 1 or 2).
int stratum_dimension(StratumKind kind);

/// Map a stratum's free variables (a, and b when 2-dimensional) to (x,y,z).
Eigen::Vector3d stratum_point(StratumKind kind, double a, double b = 0.0);

struct Box3 {
  Interval x, y, z;
};

class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::string name() const = 0;
  virtual double value(const Eigen::Vector3d& p) const = 0;
  virtual Eigen::Vector3d gradient(const Eigen::Vector3d& p) const = 0;
  virtual Eigen::Matrix3d hessian(const Eigen::Vector3d& p) const = 0;
  /// Rigorous enclosure of the objective over the feasible part of a box
  /// (the radicand is clamped at 0).
  virtual Interval enclose(const Box3& b) const = 0;
  /// Interval gradient on a box proven strictly feasible; enables the
  /// mean-value upper bound in the certificate.
  virtual bool has_gradient_enclosure() const { return false; }
  virtual std::array<Interval, 3> gradient_enclosure(const Box3&) const {
    throw std::logic_error("gradient_enclosure not implemented");
  }
  /// Value on a boundary stratum at free variables (a, b). The default maps
  /// through stratum_point(); overridden where the restriction has an exact
  /// closed form.
  virtual double face_value(StratumKind kind, double a, double b) const;
};

/// psi_1, the majorant of |gamma_4| (reference maximum 0.51059...).
const Objective& gamma4_objective();
/// psi_2, the majorant of |a_5| - |a_4| (reference maximum 2.3297...).
const Objective& a5a4_objective();

struct CriticalPoint {
  Eigen::Vector3d location = Eigen::Vector3d::Zero();
  double value = 0.0;
  /// Norm of the gradient in the stratum's free variables (analytic for the
  /// interior, finite-difference on the restriction for boundary strata).
  double gradient_norm = 0.0;
  StratumKind stratum = StratumKind::kInterior;
};

class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Damped Newton on the interior gradient system. The start must have
/// radicand > 1e-6; steps are backtracked to keep the iterate in the
/// nonnegative orthant and away from the singular surface. Converges when
/// the gradient norm drops below 1e-10, else throws NoConvergenceError.
CriticalPoint newton_interior(const Objective& f, const Eigen::Vector3d& start);

/// Newton from `starts` random interior points; returns every converged run.
std::vector<CriticalPoint> multistart_interior(const Objective& f, int starts,
                                               std::uint64_t seed);

/// Global maximum on the closed stratum: dense grid (step 1e-3) followed by
/// compass-search and Newton refinement in the free variables.
CriticalPoint maximize_stratum(const Objective& f, StratumKind kind);

struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  std::uint64_t boxes_processed = 0;
  bool certified = false;
};

struct CertifyOptions {
  double tolerance = 1e-3;
  std::uint64_t box_budget = 10'000'000;
  int threads = 1;
  /// Known feasible points whose values seed the lower bound.
  std::vector<Eigen::Vector3d> hints;
};

/// Interval branch-and-bound over the bounding box of the feasible domain.
/// Boxes whose radicand enclosure is entirely negative are infeasible and
/// discarded; the rest are bounded (natural extension, plus the mean-value
/// form on strictly feasible boxes), sampled at proven-feasible points, and
/// bisected along the widest side until the certified upper bound is within
/// `tolerance` of the best proven value. Deterministic for any thread count:
/// boxes are processed in fixed-size batches chosen by a deterministic
/// priority order, and merged in batch order.
Enclosure certify_global_max(const Objective& f, const CertifyOptions& opt);

struct ReportOptions {
  double tolerance = 1e-3;
  std::uint64_t box_budget = 10'000'000;
  int threads = 1;
  std::uint64_t seed = 0;
  int starts = 50;
};

struct OptimizationReport {
  std::string objective;
  CriticalPoint global;
  std::vector<CriticalPoint> strata;  // interior first, then the six faces
  Enclosure certificate;
  bool interior_dominates = false;
};

/// Multistart interior search, all six strata, and the certificate. The
/// global entry is the best of the seven (ties within 1e-9 go to the earliest
/// entry, interior first); its location seeds the certificate's lower bound.
OptimizationReport full_report(const Objective& f, const ReportOptions& opt);

nlohmann::ordered_json to_json(const OptimizationReport& report);

}  // namespace grunsky
