#pragma once

#include <cmath>
#include <functional>
#include <string>

namespace domainkit {

// A content map into [0, ∞)* paired with the order it measures. Content
// shrinks as information grows: x ⊑ y implies value(x) >= value(y), and the
// zero-content elements are exactly the maximal ones. Instances are plain
// data so tests can drive the same monotonicity harness over every domain.
template <class T>
struct Measurement {
  std::string name;
  std::function<double(const T&)> value;
  std::function<bool(const T&, const T&)> leq;
};

// The eps-neighbourhood of x: elements below x whose content differs from
// x's by less than eps.
template <class T>
bool mu_ball_contains(const Measurement<T>& m, const T& x, const T& y, double eps) {
  return m.leq(y, x) && std::abs(m.value(x) - m.value(y)) < eps;
}

}  // namespace domainkit
