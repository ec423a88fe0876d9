#include "domainkit/interval.hpp"

#include <cmath>
#include <string>

namespace domainkit {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    raise("invalid-interval", "endpoints must be finite");
  }
  if (lo > hi) {
    raise("invalid-interval",
          "lo > hi (" + std::to_string(lo) + " > " + std::to_string(hi) + ")");
  }
}

bool interval_leq(const Interval& a, const Interval& b) {
  return a.lo() <= b.lo() && b.hi() <= a.hi();
}

bool interval_waybelow(const Interval& a, const Interval& b) {
  return a.lo() < b.lo() && b.hi() < a.hi();
}

bool scott_basic_contains(const Interval& base, const Interval& x) {
  return interval_waybelow(base, x);
}

double interval_length(const Interval& x) { return x.width(); }

Measurement<Interval> length_measurement() {
  return {"length",
          [](const Interval& x) { return interval_length(x); },
          [](const Interval& a, const Interval& b) { return interval_leq(a, b); }};
}

}  // namespace domainkit
