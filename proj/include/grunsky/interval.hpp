// Closed-interval arithmetic with outward rounding by 1-ulp widening.
//
// Each endpoint of a primitive operation is computed in round-to-nearest and
// pushed one ulp outward with nextafter, which covers the <= 0.5 ulp error of
// a correctly rounded double operation. Slightly wider than true directed
// rounding, always sound.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace grunsky {

namespace detail {
inline double down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  explicit Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

inline Interval widened(double lo, double hi) {
  return {detail::down(lo), detail::up(hi)};
}

inline Interval operator+(Interval a, Interval b) { return widened(a.lo + b.lo, a.hi + b.hi); }
inline Interval operator-(Interval a, Interval b) { return widened(a.lo - b.hi, a.hi - b.lo); }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widened(std::min(std::min(p1, p2), std::min(p3, p4)),
                 std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator+(double s, Interval a) { return Interval(s) + a; }
inline Interval operator-(double s, Interval a) { return Interval(s) - a; }
inline Interval operator*(double s, Interval a) { return Interval(s) * a; }

inline Interval sqr(Interval a) {
  if (a.lo >= 0.0) return widened(a.lo * a.lo, a.hi * a.hi);
  if (a.hi <= 0.0) return widened(a.hi * a.hi, a.lo * a.lo);
  return {0.0, detail::up(std::max(a.lo * a.lo, a.hi * a.hi))};
}

/// Requires a.lo >= 0.
inline Interval sqrt(Interval a) {
  return {std::max(0.0, detail::down(std::sqrt(a.lo))), detail::up(std::sqrt(a.hi))};
}

/// Requires an interval not containing 0.
inline Interval recip(Interval a) {
  if (a.lo > 0.0 || a.hi < 0.0) return widened(1.0 / a.hi, 1.0 / a.lo);
  throw std::domain_error("recip: interval contains zero");
}

inline Interval operator/(Interval a, Interval b) { return a * recip(b); }

/// Intersection with [0, inf). Caller must rule out a.hi < 0 first.
inline Interval clamp_nonneg(Interval a) {
  return {std::max(a.lo, 0.0), std::max(a.hi, 0.0)};
}

}  // namespace grunsky
