#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "domainkit/errors.hpp"
#include "domainkit/measurement.hpp"
#include "domainkit/rational.hpp"
#include "domainkit/rng.hpp"

namespace domainkit {

// Comparison policy per scalar mode. Ties are semantically significant in
// this order (they are what make states comparable to degenerate targets),
// so float mode detects them with a fixed absolute slack while exact mode
// compares rationals outright.
template <class Scalar>
struct NumericPolicy;

template <>
struct NumericPolicy<double> {
  static constexpr bool exact = false;
  static constexpr double tie_eps = 1e-9;
  static bool leq(double a, double b) { return a <= b + tie_eps; }
  static bool eq(double a, double b) { return std::abs(a - b) <= tie_eps; }
  static double half() { return 0.5; }
  static double one() { return 1.0; }
};

template <>
struct NumericPolicy<Rational> {
  static constexpr bool exact = true;
  static bool leq(const Rational& a, const Rational& b) { return a <= b; }
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static Rational half() { return Rational(1, 2); }
  static Rational one() { return Rational(1); }
};

// Probability vector over n >= 2 outcomes. Validation keeps every entry in
// [0,1] and the total at 1 (within 1e-12 in float mode, exactly in rational
// mode); all operations treat states as immutable values.
template <class Scalar>
class BasicState {
 public:
  explicit BasicState(std::vector<Scalar> p);

  static BasicState uniform(int n);
  static BasicState pure(int n, int i);

  int dim() const { return static_cast<int>(p_.size()); }
  const Scalar& operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coords() const { return p_; }

  friend bool operator==(const BasicState&, const BasicState&) = default;

 private:
  std::vector<Scalar> p_;
};

using ClassicalState = BasicState<double>;
using RationalState = BasicState<Rational>;

ClassicalState to_float(const RationalState& x);

// Exact rational image of a float state: coordinates are converted exactly
// (every double is a rational) and renormalized by their exact sum, which
// preserves coordinate ties bit for bit.
RationalState to_exact(const ClassicalState& x);

// Non-increasing state, the image of the sorting retraction.
class MonotoneState {
 public:
  explicit MonotoneState(ClassicalState s);
  const ClassicalState& state() const { return s_; }
  int dim() const { return s_.dim(); }
  double operator[](int i) const { return s_[i]; }

  friend bool operator==(const MonotoneState&, const MonotoneState&) = default;

 private:
  ClassicalState s_;
};

// --- Order deciders -------------------------------------------------------

// Two-outcome base case: x ⊑ y iff (y1 <= x1 <= 1/2) or (1/2 <= x1 <= y1).
template <class Scalar>
bool bayesian_leq_base2(const BasicState<Scalar>& x, const BasicState<Scalar>& y);

// Inductive decider: recurses through every admissible projection down to
// the two-outcome base case. Subproblems are memoized on the kept-coordinate
// mask. Dimensions above 8 are rejected.
template <class Scalar>
bool bayesian_leq_recursive(const BasicState<Scalar>& x, const BasicState<Scalar>& y);

// Permutation decider: searches for an arrangement making both states
// monotone and satisfying the n-1 cross-product inequalities. Tries the two
// greedy sorts first and falls back to an exhaustive (pruned) permutation
// search when ties make them inconclusive; the fallback is capped at n = 8.
template <class Scalar>
bool bayesian_leq_symmetric(const BasicState<Scalar>& x, const BasicState<Scalar>& y);

// Default decider (the permutation form).
template <class Scalar>
bool bayesian_leq(const BasicState<Scalar>& x, const BasicState<Scalar>& y) {
  return bayesian_leq_symmetric(x, y);
}

struct OrderExplanation {
  bool result = false;
  std::vector<int> permutation;  // witnessing arrangement (0-based) when true
  std::string detail;            // failure diagnosis when false
};

template <class Scalar>
OrderExplanation bayesian_leq_explain(const BasicState<Scalar>& x, const BasicState<Scalar>& y);

// --- State transformations -------------------------------------------------

// Remove outcome i and renormalize. Undefined at the pure state e_i.
template <class Scalar>
BasicState<Scalar> bayes_projection(int i, const BasicState<Scalar>& x);

// Projection followed by reinsertion of a zero at i; dimension-preserving.
template <class Scalar>
BasicState<Scalar> bayes_projection_plus(int i, const BasicState<Scalar>& x);

// Convex combination (1-t)x + ty for t in [0,1].
template <class Scalar>
BasicState<Scalar> mixing_combine(const BasicState<Scalar>& x, const BasicState<Scalar>& y,
                                  const Scalar& t);

// Point at parameter t on the straight-line path from the least element to x.
template <class Scalar>
BasicState<Scalar> line_path(const BasicState<Scalar>& x, const Scalar& t);

// Entropy in nats by default; pass e.g. 2.0 to measure in bits.
double shannon_entropy(const ClassicalState& x, double log_base = 0.0);

// Rearranges the probabilities into descending order.
MonotoneState sort_retraction(const ClassicalState& x);

// Outcomes with (tie-eps) positive probability, ascending.
template <class Scalar>
std::vector<int> support(const BasicState<Scalar>& x);

// --- Sampling ---------------------------------------------------------------

// Uniform draw on the simplex (normalized exponentials).
ClassicalState sample_state(int n, Rng& rng);

// A pair (x, y) with x ⊑ y by construction: x sits on the straight-line path
// from the least element to y at a random parameter.
std::pair<ClassicalState, ClassicalState> sample_comparable_pair(int n, Rng& rng);

Measurement<ClassicalState> shannon_measurement();

}  // namespace domainkit
