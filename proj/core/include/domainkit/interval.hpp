#pragma once

#include "domainkit/errors.hpp"
#include "domainkit/measurement.hpp"

namespace domainkit {

// Compact real interval [lo, hi], an element of the continuous domain of
// intervals under reverse inclusion. One-point intervals are the maximal
// elements; wider intervals carry less information.
class Interval {
 public:
  Interval(double lo, double hi);

  static Interval point(double x) { return Interval(x, x); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double midpoint() const { return 0.5 * (lo_ + hi_); }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_;
  double hi_;
};

// Reverse inclusion: a ⊑ b iff b ⊆ a.
bool interval_leq(const Interval& a, const Interval& b);

// a is way below b iff b sits in the interior of a.
bool interval_waybelow(const Interval& a, const Interval& b);

// Membership in the basic Scott-open set generated by `base`; coincides
// with interval_waybelow(base, x).
bool scott_basic_contains(const Interval& base, const Interval& x);

// Length content; zero exactly on the one-point (maximal) intervals.
double interval_length(const Interval& x);

Measurement<Interval> length_measurement();

}  // namespace domainkit
