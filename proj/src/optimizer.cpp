#include "grunsky/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>
#include <utility>

#include "grunsky/rng.hpp"

namespace grunsky {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGridStep = 1e-3;
constexpr double kInteriorGuard = 1e-6;

double radicand(const Eigen::Vector3d& p) { return grunsky::radicand(p.x(), p.y(), p.z()); }

class MajorantObjective final : public Objective {
 public:
  MajorantObjective(MajorantCoefficients c, std::string name)
      : c_(c), name_(std::move(name)) {}

  std::string name() const override { return name_; }

  double value(const Eigen::Vector3d& p) const override {
    return psi(c_, p.x(), p.y(), p.z());
  }
  Eigen::Vector3d gradient(const Eigen::Vector3d& p) const override {
    return psi_gradient(c_, p.x(), p.y(), p.z());
  }
  Eigen::Matrix3d hessian(const Eigen::Vector3d& p) const override {
    return psi_hessian(c_, p.x(), p.y(), p.z());
  }
  Interval enclose(const Box3& b) const override {
    return psi_enclosure(c_, b.x, b.y, b.z);
  }
  bool has_gradient_enclosure() const override { return true; }
  std::array<Interval, 3> gradient_enclosure(const Box3& b) const override {
    return psi_gradient_enclosure(c_, b.x, b.y, b.z);
  }

  // Exact restrictions. X0 is even in both free variables and Y0 in its
  // second one, so those take absolute values and finite differences stay
  // valid across the axes. On YMax and ZMax the eliminated t is identically
  // zero, which the closed forms use directly.
  double face_value(StratumKind kind, double a, double b) const override {
    switch (kind) {
      case StratumKind::kX0:
        return psi(c_, 0.0, std::abs(a), std::abs(b));
      case StratumKind::kX1:
        return c_.x4;
      case StratumKind::kY0:
        return psi(c_, a, 0.0, std::abs(b));
      case StratumKind::kYMax: {
        const double yc = cap_y(a);
        return c_.x4 * a * a * a * a + c_.y2 * yc * yc + c_.x2y * a * a * yc;
      }
      case StratumKind::kZ0:
        return psi(c_, a, b, 0.0);
      case StratumKind::kZMax: {
        const double zc = cap_z(a, b);
        return c_.x4 * a * a * a * a + c_.y2 * b * b + c_.x2y * a * a * b + c_.xz * a * zc;
      }
      case StratumKind::kInterior:
        break;
    }
    throw std::invalid_argument("face_value: interior is not a face");
  }

 private:
  MajorantCoefficients c_;
  std::string name_;
};

}  // namespace

const char* stratum_name(StratumKind kind) {
  switch (kind) {
    case StratumKind::kInterior: return "interior";
    case StratumKind::kX0: return "x=0";
    case StratumKind::kX1: return "x=1";
    case StratumKind::kY0: return "y=0";
    case StratumKind::kYMax: return "y=ymax";
    case StratumKind::kZ0: return "z=0";
    case StratumKind::kZMax: return "z=zmax";
  }
  return "?";
}

int stratum_dimension(StratumKind kind) {
  switch (kind) {
    case StratumKind::kInterior: return 3;
    case StratumKind::kX1: return 0;
    case StratumKind::kYMax: return 1;
    default: return 2;
  }
}

Eigen::Vector3d stratum_point(StratumKind kind, double a, double b) {
  switch (kind) {
    case StratumKind::kX0: return {0.0, a, b};
    case StratumKind::kX1: return {1.0, 0.0, 0.0};
    case StratumKind::kY0: return {a, 0.0, b};
    case StratumKind::kYMax: return {a, cap_y(a), 0.0};
    case StratumKind::kZ0: return {a, b, 0.0};
    case StratumKind::kZMax: return {a, b, cap_z(a, b)};
    case StratumKind::kInterior: break;
  }
  throw std::invalid_argument("stratum_point: interior has no face coordinates");
}

double Objective::face_value(StratumKind kind, double a, double b) const {
  return value(stratum_point(kind, a, b));
}

const Objective& gamma4_objective() {
  static const MajorantObjective obj(kGamma4Majorant, "gamma4");
  return obj;
}

const Objective& a5a4_objective() {
  static const MajorantObjective obj(kA5A4Majorant, "a5a4");
  return obj;
}

CriticalPoint newton_interior(const Objective& f, const Eigen::Vector3d& start) {
  Eigen::Vector3d p = start;
  if (p.minCoeff() < 0.0 || radicand(p) <= kInteriorGuard)
    throw std::domain_error("newton_interior: start must be strictly interior");
  Eigen::Vector3d g = f.gradient(p);
  for (int it = 0; it < 200; ++it) {
    if (g.norm() < 1e-10)
      return {p, f.value(p), g.norm(), StratumKind::kInterior};
    const Eigen::Vector3d dir = f.hessian(p).fullPivLu().solve(-g);
    if (!dir.allFinite()) throw NoConvergenceError("newton_interior: singular hessian");
    bool moved = false;
    double alpha = 1.0;
    for (int bt = 0; bt < 40; ++bt, alpha *= 0.5) {
      const Eigen::Vector3d cand = p + alpha * dir;
      if (cand.minCoeff() < 0.0 || radicand(cand) <= kInteriorGuard) continue;
      const Eigen::Vector3d gc = f.gradient(cand);
      if (gc.norm() < g.norm()) {
        p = cand;
        g = gc;
        moved = true;
        break;
      }
    }
    if (!moved) throw NoConvergenceError("newton_interior: stalled");
  }
  throw NoConvergenceError("newton_interior: no convergence in 200 iterations");
}

std::vector<CriticalPoint> multistart_interior(const Objective& f, int starts,
                                               std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CriticalPoint> out;
  for (int i = 0; i < starts; ++i) {
    Eigen::Vector3d p;
    do {
      p = {rng.uniform(0.0, 1.0), rng.uniform(0.0, cap_y(0.0)),
           rng.uniform(0.0, cap_z(0.0, 0.0))};
    } while (radicand(p) < 0.05);
    try {
      out.push_back(newton_interior(f, p));
    } catch (const NoConvergenceError&) {
    }
  }
  return out;
}

namespace {

struct FaceDomain {
  double a_lo = 0.0;
  double a_hi = 1.0;
  bool has_b = false;
  double (*b_cap)(double) = nullptr;
};

FaceDomain face_domain(StratumKind kind) {
  switch (kind) {
    case StratumKind::kX0:
      return {0.0, cap_y(0.0), true, [](double a) { return cap_z(0.0, a); }};
    case StratumKind::kY0:
      return {0.0, 1.0, true, [](double a) { return cap_z(a, 0.0); }};
    case StratumKind::kZ0:
    case StratumKind::kZMax:
      return {0.0, 1.0, true, [](double a) { return cap_y(a); }};
    case StratumKind::kYMax:
      return {0.0, 1.0, false, nullptr};
    default:
      throw std::invalid_argument("face_domain: not a searchable face");
  }
}

struct FaceSearcher {
  const Objective& f;
  StratumKind kind;
  FaceDomain dom;

  // Projection onto the closed face, for search candidates.
  std::pair<double, double> clamp_to_face(double a, double b) const {
    a = std::clamp(a, dom.a_lo, dom.a_hi);
    b = dom.has_b ? std::clamp(b, 0.0, dom.b_cap(a)) : 0.0;
    return {a, b};
  }

  // Measurement probe: directions in which the restriction is even may cross
  // zero (the face_value overrides reflect them), the rest are projected.
  double probe(double a, double b) const {
    a = std::clamp(a, kind == StratumKind::kX0 ? -dom.a_hi : dom.a_lo, dom.a_hi);
    if (dom.has_b) {
      b = std::min(b, dom.b_cap(std::abs(a)));
      if (kind == StratumKind::kZ0 || kind == StratumKind::kZMax) b = std::max(b, 0.0);
    } else {
      b = 0.0;
    }
    return f.face_value(kind, a, b);
  }

  Eigen::Vector2d fd_gradient(double a, double b, double h = 1e-6) const {
    Eigen::Vector2d g{(probe(a + h, b) - probe(a - h, b)) / (2.0 * h), 0.0};
    if (dom.has_b) g[1] = (probe(a, b + h) - probe(a, b - h)) / (2.0 * h);
    return g;
  }

  Eigen::Matrix2d fd_hessian(double a, double b, double h = 1e-4) const {
    Eigen::Matrix2d m = Eigen::Matrix2d::Identity() * -1.0;
    const double f0 = probe(a, b);
    m(0, 0) = (probe(a + h, b) - 2.0 * f0 + probe(a - h, b)) / (h * h);
    if (dom.has_b) {
      m(1, 1) = (probe(a, b + h) - 2.0 * f0 + probe(a, b - h)) / (h * h);
      m(0, 1) = m(1, 0) = (probe(a + h, b + h) - probe(a + h, b - h) - probe(a - h, b + h) +
                           probe(a - h, b - h)) /
                          (4.0 * h * h);
    }
    return m;
  }
};

}  // namespace

CriticalPoint maximize_stratum(const Objective& f, StratumKind kind) {
  if (kind == StratumKind::kInterior)
    throw std::invalid_argument("maximize_stratum: interior is not a stratum");
  if (kind == StratumKind::kX1) {
    return {stratum_point(kind, 0.0, 0.0), f.face_value(kind, 0.0, 0.0), 0.0, kind};
  }

  const FaceSearcher face{f, kind, face_domain(kind)};
  const FaceDomain& dom = face.dom;

  double best_a = dom.a_lo, best_b = 0.0;
  double best_v = -kInf;
  const auto consider = [&](double a, double b) {
    const double v = f.face_value(kind, a, b);
    if (v > best_v) {
      best_v = v;
      best_a = a;
      best_b = b;
    }
  };

  const int na = static_cast<int>(std::ceil((dom.a_hi - dom.a_lo) / kGridStep));
  for (int i = 0; i <= na; ++i) {
    const double a = std::min(dom.a_lo + i * kGridStep, dom.a_hi);
    if (!dom.has_b) {
      consider(a, 0.0);
      continue;
    }
    const double cap = dom.b_cap(a);
    const int nb = static_cast<int>(std::ceil(cap / kGridStep));
    for (int j = 0; j <= nb; ++j) consider(a, std::min(j * kGridStep, cap));
  }

  // Compass search down to a tight neighbourhood of the face maximum.
  double step = kGridStep;
  while (step > 1e-11) {
    bool improved = false;
    const double candidates[4][2] = {{best_a + step, best_b},
                                     {best_a - step, best_b},
                                     {best_a, best_b + step},
                                     {best_a, best_b - step}};
    const int ncand = dom.has_b ? 4 : 2;
    for (int i = 0; i < ncand; ++i) {
      const auto [ca, cb] = face.clamp_to_face(candidates[i][0], candidates[i][1]);
      const double v = f.face_value(kind, ca, cb);
      if (v > best_v) {
        best_v = v;
        best_a = ca;
        best_b = cb;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }

  // Newton polish on the restriction (finite differences).
  for (int it = 0; it < 50; ++it) {
    const Eigen::Vector2d g = face.fd_gradient(best_a, best_b);
    if (g.norm() < 1e-11) break;
    Eigen::Vector2d dir;
    if (dom.has_b) {
      dir = face.fd_hessian(best_a, best_b).fullPivLu().solve(-g);
    } else {
      const double h = face.fd_hessian(best_a, best_b)(0, 0);
      dir = {h != 0.0 ? -g[0] / h : 0.0, 0.0};
    }
    if (!dir.allFinite()) break;
    if (dir.norm() > 1e-2) dir *= 1e-2 / dir.norm();
    bool moved = false;
    double alpha = 1.0;
    for (int bt = 0; bt < 20; ++bt, alpha *= 0.5) {
      const auto [ca, cb] = face.clamp_to_face(best_a + alpha * dir[0], best_b + alpha * dir[1]);
      const double v = f.face_value(kind, ca, cb);
      if (v >= best_v - 1e-15) {
        best_a = ca;
        best_b = cb;
        best_v = std::max(best_v, v);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  best_v = f.face_value(kind, best_a, best_b);
  const double gnorm = face.fd_gradient(best_a, best_b).norm();
  return {stratum_point(kind, best_a, best_b), best_v, gnorm, kind};
}

namespace {

struct QueueBox {
  Box3 box;
  double ub;
  std::uint64_t id;
};

struct QueueCmp {
  bool operator()(const QueueBox& a, const QueueBox& b) const {
    if (a.ub != b.ub) return a.ub < b.ub;
    return a.id > b.id;
  }
};

double box_upper_bound(const Objective& f, const Box3& b) {
  const Interval r = radicand_enclosure(b.x, b.y, b.z);
  if (r.hi < 0.0) return -kInf;  // no feasible point in the box
  double ub = f.enclose(b).hi;
  if (r.lo > 0.0 && f.has_gradient_enclosure()) {
    // Mean-value form around the midpoint; valid because the whole box is
    // inside the smooth region.
    const Eigen::Vector3d m(b.x.mid(), b.y.mid(), b.z.mid());
    const Box3 mb{Interval(m.x()), Interval(m.y()), Interval(m.z())};
    Interval total = f.enclose(mb);
    const auto g = f.gradient_enclosure(b);
    const Interval devs[3] = {b.x - Interval(m.x()), b.y - Interval(m.y()),
                              b.z - Interval(m.z())};
    for (int i = 0; i < 3; ++i)
      total = total + Interval(0.0, g[i].mag()) * Interval(0.0, devs[i].mag());
    ub = std::min(ub, total.hi);
  }
  return ub;
}

// Rigorous lower bound for the maximum from one candidate point: the point
// must be proven feasible through interval arithmetic before its value
// counts.
double feasible_value_lower(const Objective& f, const Eigen::Vector3d& p) {
  if (p.minCoeff() < 0.0) return -kInf;
  const Box3 pb{Interval(p.x()), Interval(p.y()), Interval(p.z())};
  if (radicand_enclosure(pb.x, pb.y, pb.z).lo < 0.0) return -kInf;
  return f.enclose(pb).lo;
}

struct WorkResult {
  double cand = -kInf;
  int nchild = 0;
  std::array<std::pair<Box3, double>, 2> child;
  double residual = -kInf;
  bool skipped = false;
};

void process_box(const Objective& f, const QueueBox& qb, double best, WorkResult& out) {
  if (qb.ub <= best) {
    out.skipped = true;
    return;
  }
  const Box3& b = qb.box;
  const Eigen::Vector3d corner(b.x.lo, b.y.lo, b.z.lo);
  const Eigen::Vector3d mid(b.x.mid(), b.y.mid(), b.z.mid());
  out.cand = std::max(feasible_value_lower(f, corner), feasible_value_lower(f, mid));

  const double wx = b.x.width(), wy = b.y.width(), wz = b.z.width();
  const double wmax = std::max({wx, wy, wz});
  if (wmax < 1e-13) {
    // Too small to bisect; its upper bound is folded into the enclosure.
    out.residual = qb.ub;
    return;
  }
  const int dim = wmax == wx ? 0 : (wmax == wy ? 1 : 2);
  const auto split = [&](const Interval& v) {
    const double m = v.mid();
    return std::pair<Interval, Interval>({v.lo, m}, {m, v.hi});
  };
  Box3 left = b, right = b;
  if (dim == 0) std::tie(left.x, right.x) = split(b.x);
  if (dim == 1) std::tie(left.y, right.y) = split(b.y);
  if (dim == 2) std::tie(left.z, right.z) = split(b.z);
  for (const Box3& c : {left, right}) {
    const double ub = box_upper_bound(f, c);
    if (ub > -kInf) out.child[out.nchild++] = {c, ub};
  }
}

}  // namespace

Enclosure certify_global_max(const Objective& f, const CertifyOptions& opt) {
  if (opt.tolerance <= 0.0) throw std::invalid_argument("certify_global_max: tolerance must be > 0");
  const int threads = std::clamp(opt.threads, 1, 64);
  constexpr std::size_t kBatch = 64;  // fixed so results do not depend on the thread count

  const Interval ycap = sqrt(recip(Interval(3.0)));
  const Interval zcap = sqrt(recip(Interval(5.0)));
  const Box3 root{{0.0, 1.0}, {0.0, ycap.hi}, {0.0, zcap.hi}};

  double best = -kInf;
  for (const auto& p : opt.hints) best = std::max(best, feasible_value_lower(f, p));

  std::priority_queue<QueueBox, std::vector<QueueBox>, QueueCmp> queue;
  std::uint64_t next_id = 0;
  {
    const double ub = box_upper_bound(f, root);
    if (ub > -kInf) queue.push({root, ub, next_id++});
  }

  std::uint64_t processed = 0;
  double residual_upper = -kInf;
  const auto finish = [&](bool within_budget) {
    const double top = queue.empty() ? -kInf : queue.top().ub;
    const double upper = std::max({best, top, residual_upper});
    return Enclosure{best, upper, processed,
                     within_budget && upper <= best + opt.tolerance};
  };

  std::vector<QueueBox> batch;
  std::vector<WorkResult> results;
  while (!queue.empty()) {
    if (std::max(queue.top().ub, residual_upper) <= best + opt.tolerance) return finish(true);
    if (processed >= opt.box_budget) return finish(false);

    batch.clear();
    while (!queue.empty() && batch.size() < kBatch) {
      batch.push_back(queue.top());
      queue.pop();
    }
    results.assign(batch.size(), WorkResult{});

    const auto worker = [&](std::size_t first) {
      for (std::size_t i = first; i < batch.size(); i += static_cast<std::size_t>(threads))
        process_box(f, batch[i], best, results[i]);
    };
    if (threads == 1 || batch.size() == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
      for (auto& t : pool) t.join();
    }

    for (const WorkResult& r : results) best = std::max(best, r.cand);
    for (const WorkResult& r : results) {
      residual_upper = std::max(residual_upper, r.residual);
      for (int k = 0; k < r.nchild; ++k)
        if (r.child[k].second > best)
          queue.push({r.child[k].first, r.child[k].second, next_id++});
    }
    processed += batch.size();
  }
  return finish(true);
}

OptimizationReport full_report(const Objective& f, const ReportOptions& opt) {
  OptimizationReport rep;
  rep.objective = f.name();

  std::optional<CriticalPoint> interior;
  for (const CriticalPoint& cp : multistart_interior(f, opt.starts, opt.seed))
    if (!interior || cp.value > interior->value) interior = cp;
  if (interior) rep.strata.push_back(*interior);
  for (const StratumKind kind : kBoundaryStrata)
    rep.strata.push_back(maximize_stratum(f, kind));

  std::size_t best = 0;
  for (std::size_t i = 1; i < rep.strata.size(); ++i)
    if (rep.strata[i].value > rep.strata[best].value + 1e-9) best = i;
  rep.global = rep.strata[best];

  rep.interior_dominates = interior.has_value();
  for (const CriticalPoint& cp : rep.strata)
    if (cp.stratum != StratumKind::kInterior && interior && cp.value >= interior->value)
      rep.interior_dominates = false;

  CertifyOptions copt;
  copt.tolerance = opt.tolerance;
  copt.box_budget = opt.box_budget;
  copt.threads = opt.threads;
  copt.hints = {rep.global.location};
  rep.certificate = certify_global_max(f, copt);
  return rep;
}

nlohmann::ordered_json to_json(const OptimizationReport& report) {
  nlohmann::ordered_json j;
  j["objective"] = report.objective;
  j["global"] = {{"x", report.global.location.x()},
                 {"y", report.global.location.y()},
                 {"z", report.global.location.z()},
                 {"value", report.global.value}};
  auto strata = nlohmann::ordered_json::array();
  for (const CriticalPoint& cp : report.strata) {
    strata.push_back({{"stratum", stratum_name(cp.stratum)},
                      {"x", cp.location.x()},
                      {"y", cp.location.y()},
                      {"z", cp.location.z()},
                      {"value", cp.value},
                      {"gradient_norm", cp.gradient_norm}});
  }
  j["strata"] = std::move(strata);
  j["certificate"] = {{"lower", report.certificate.lower},
                      {"upper", report.certificate.upper},
                      {"boxes", report.certificate.boxes_processed},
                      {"certified", report.certificate.certified}};
  return j;
}

}  // namespace grunsky
