#include "domainkit/simplex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace domainkit {

namespace {

template <class Scalar>
void validate_state(const std::vector<Scalar>& p);

template <>
void validate_state<double>(const std::vector<double>& p) {
  if (p.size() < 2) raise("dimension-mismatch", "a state needs at least two outcomes");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v)) raise("invariant-violation", "probabilities must be finite");
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      raise("invariant-violation", "probability " + std::to_string(v) + " outside [0,1]");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    raise("invariant-violation", "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

template <>
void validate_state<Rational>(const std::vector<Rational>& p) {
  if (p.size() < 2) raise("dimension-mismatch", "a state needs at least two outcomes");
  Rational sum(0);
  for (const Rational& v : p) {
    if (v < 0 || v > 1) raise("invariant-violation", "probability " + v.str() + " outside [0,1]");
    sum += v;
  }
  if (sum != 1) raise("invariant-violation", "probabilities sum to " + sum.str() + ", not 1");
}

template <class Scalar>
bool base2_scalar(const Scalar& x1, const Scalar& y1) {
  using P = NumericPolicy<Scalar>;
  const Scalar h = P::half();
  return (P::leq(y1, x1) && P::leq(x1, h)) || (P::leq(h, x1) && P::leq(x1, y1));
}

template <class Scalar>
bool monotone_under(const std::vector<Scalar>& v, const std::vector<int>& perm) {
  using P = NumericPolicy<Scalar>;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (!P::leq(v[perm[i + 1]], v[perm[i]])) return false;
  }
  return true;
}

template <class Scalar>
int first_failing_cross(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                        const std::vector<int>& perm) {
  using P = NumericPolicy<Scalar>;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (!P::leq(x[perm[i]] * y[perm[i + 1]], x[perm[i + 1]] * y[perm[i]])) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

template <class Scalar>
bool ties_present(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  using P = NumericPolicy<Scalar>;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (P::eq(x[i], x[j]) || P::eq(y[i], y[j])) return true;
    }
  }
  return false;
}

// Exhaustive arrangement search with pruning: a partial arrangement is
// extended only while both monotonicity constraints and the cross inequality
// against the previously placed element hold. Identical (x,y) pairs are
// deduplicated per level.
template <class Scalar>
bool backtrack_perm(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                    std::vector<int>& perm, std::vector<bool>& used) {
  using P = NumericPolicy<Scalar>;
  const std::size_t n = x.size();
  if (perm.size() == n) return true;
  for (std::size_t r = 0; r < n; ++r) {
    if (used[r]) continue;
    bool duplicate = false;
    for (std::size_t q = 0; q < r; ++q) {
      if (!used[q] && x[q] == x[r] && y[q] == y[r]) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    if (!perm.empty()) {
      const int l = perm.back();
      if (!P::leq(x[r], x[l])) continue;
      if (!P::leq(y[r], y[l])) continue;
      if (!P::leq(x[l] * y[r], x[r] * y[l])) continue;
    }
    used[r] = true;
    perm.push_back(static_cast<int>(r));
    if (backtrack_perm(x, y, perm, used)) return true;
    perm.pop_back();
    used[r] = false;
  }
  return false;
}

template <class Scalar>
struct SymmetricSearch {
  bool found = false;
  std::vector<int> perm;
  std::string detail;
};

template <class Scalar>
SymmetricSearch<Scalar> symmetric_search(const BasicState<Scalar>& xs,
                                         const BasicState<Scalar>& ys) {
  if (xs.dim() != ys.dim()) {
    raise("dimension-mismatch", "states have dimensions " + std::to_string(xs.dim()) + " and " +
                                    std::to_string(ys.dim()));
  }
  const auto& x = xs.coords();
  const auto& y = ys.coords();
  const int n = xs.dim();

  std::ostringstream notes;
  auto try_candidate = [&](const char* label, bool by_x) -> SymmetricSearch<Scalar> {
    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
      const auto& primary = by_x ? x : y;
      const auto& secondary = by_x ? y : x;
      if (primary[a] != primary[b]) return primary[a] > primary[b];
      if (secondary[a] != secondary[b]) return secondary[a] > secondary[b];
      return a < b;
    });
    if (!monotone_under(x, cand) || !monotone_under(y, cand)) {
      notes << label << ": not simultaneously monotone; ";
      return {};
    }
    const int bad = first_failing_cross(x, y, cand);
    if (bad >= 0) {
      notes << label << ": cross inequality " << bad << " fails; ";
      return {};
    }
    return {true, cand, ""};
  };

  if (auto r = try_candidate("sort-by-first", true); r.found) return r;
  if (auto r = try_candidate("sort-by-second", false); r.found) return r;

  if (!NumericPolicy<Scalar>::exact && ties_present(x, y)) {
    if (n > 8) {
      raise("dimension-too-large", "tie resolution needs exhaustive search, capped at n = 8");
    }
    std::vector<int> perm;
    std::vector<bool> used(n, false);
    if (backtrack_perm(x, y, perm, used)) return {true, perm, ""};
    notes << "exhaustive: no admissible arrangement";
  }
  return {false, {}, notes.str()};
}

}  // namespace

template <class Scalar>
BasicState<Scalar>::BasicState(std::vector<Scalar> p) : p_(std::move(p)) {
  validate_state<Scalar>(p_);
}

template <class Scalar>
BasicState<Scalar> BasicState<Scalar>::uniform(int n) {
  if (n < 2) raise("dimension-mismatch", "a state needs at least two outcomes");
  return BasicState(std::vector<Scalar>(n, Scalar(1) / Scalar(n)));
}

template <class Scalar>
BasicState<Scalar> BasicState<Scalar>::pure(int n, int i) {
  if (n < 2) raise("dimension-mismatch", "a state needs at least two outcomes");
  if (i < 0 || i >= n) raise("out-of-range", "pure-state index " + std::to_string(i));
  std::vector<Scalar> v(n, Scalar(0));
  v[i] = Scalar(1);
  return BasicState(std::move(v));
}

ClassicalState to_float(const RationalState& x) {
  std::vector<double> v;
  v.reserve(x.dim());
  for (const Rational& r : x.coords()) v.push_back(to_double(r));
  return ClassicalState(std::move(v));
}

RationalState to_exact(const ClassicalState& x) {
  std::vector<Rational> v;
  v.reserve(x.dim());
  Rational sum(0);
  for (double p : x.coords()) {
    Rational r(std::max(0.0, p));
    sum += r;
    v.push_back(std::move(r));
  }
  for (Rational& r : v) r /= sum;
  return RationalState(std::move(v));
}

MonotoneState::MonotoneState(ClassicalState s) : s_(std::move(s)) {
  for (int i = 0; i + 1 < s_.dim(); ++i) {
    if (s_[i] < s_[i + 1]) raise("invariant-violation", "entries must be non-increasing");
  }
}

template <class Scalar>
bool bayesian_leq_base2(const BasicState<Scalar>& x, const BasicState<Scalar>& y) {
  if (x.dim() != 2 || y.dim() != 2) {
    raise("dimension-mismatch", "base case is defined on two outcomes");
  }
  return base2_scalar(x[0], y[0]);
}

template <class Scalar>
bool bayesian_leq_recursive(const BasicState<Scalar>& x, const BasicState<Scalar>& y) {
  using P = NumericPolicy<Scalar>;
  if (x.dim() != y.dim()) {
    raise("dimension-mismatch", "states have dimensions " + std::to_string(x.dim()) + " and " +
                                    std::to_string(y.dim()));
  }
  const int n = x.dim();
  if (n > 8) raise("dimension-too-large", "inductive decider capped at n = 8");
  if (n == 2) return base2_scalar(x[0], y[0]);

  const auto& xv = x.coords();
  const auto& yv = y.coords();
  // Subproblems are indexed by the kept-coordinate mask: removing outcomes in
  // any order lands on the same renormalized pair.
  std::vector<std::int8_t> memo(std::size_t(1) << n, -1);
  std::function<bool(unsigned)> eval = [&](unsigned mask) -> bool {
    std::int8_t& slot = memo[mask];
    if (slot >= 0) return slot == 1;
    Scalar sx(0), sy(0);
    int kept = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sx += xv[i];
        sy += yv[i];
        ++kept;
      }
    }
    bool result;
    if (kept == 2) {
      const int first = std::countr_zero(mask);
      result = base2_scalar<Scalar>(xv[first] / sx, yv[first] / sy);
    } else {
      result = true;
      for (int i = 0; i < n && result; ++i) {
        if (!(mask & (1u << i))) continue;
        // The projection at i is admissible only when neither state is the
        // pure state e_i of the current face.
        if (P::eq(xv[i] / sx, P::one()) || P::eq(yv[i] / sy, P::one())) continue;
        if (!eval(mask & ~(1u << i))) result = false;
      }
    }
    slot = result ? 1 : 0;
    return result;
  };
  return eval((1u << n) - 1);
}

template <class Scalar>
bool bayesian_leq_symmetric(const BasicState<Scalar>& x, const BasicState<Scalar>& y) {
  return symmetric_search(x, y).found;
}

template <class Scalar>
OrderExplanation bayesian_leq_explain(const BasicState<Scalar>& x, const BasicState<Scalar>& y) {
  auto search = symmetric_search(x, y);
  OrderExplanation e;
  e.result = search.found;
  e.permutation = search.perm;
  e.detail = search.detail;
  return e;
}

template <class Scalar>
BasicState<Scalar> bayes_projection(int i, const BasicState<Scalar>& x) {
  using P = NumericPolicy<Scalar>;
  const int n = x.dim();
  if (n < 3) raise("dimension-mismatch", "projection needs at least three outcomes");
  if (i < 0 || i >= n) raise("out-of-range", "projection index " + std::to_string(i));
  if (P::eq(x[i], P::one())) raise("undefined-at-pure", "projection is undefined at its pure state");
  Scalar rest(0);
  for (int j = 0; j < n; ++j) {
    if (j != i) rest += x[j];
  }
  std::vector<Scalar> v;
  v.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j != i) v.push_back(x[j] / rest);
  }
  return BasicState<Scalar>(std::move(v));
}

template <class Scalar>
BasicState<Scalar> bayes_projection_plus(int i, const BasicState<Scalar>& x) {
  using P = NumericPolicy<Scalar>;
  const int n = x.dim();
  if (i < 0 || i >= n) raise("out-of-range", "projection index " + std::to_string(i));
  if (P::eq(x[i], P::one())) raise("undefined-at-pure", "projection is undefined at its pure state");
  Scalar rest(0);
  for (int j = 0; j < n; ++j) {
    if (j != i) rest += x[j];
  }
  std::vector<Scalar> v;
  v.reserve(n);
  for (int j = 0; j < n; ++j) {
    v.push_back(j == i ? Scalar(0) : x[j] / rest);
  }
  return BasicState<Scalar>(std::move(v));
}

template <class Scalar>
BasicState<Scalar> mixing_combine(const BasicState<Scalar>& x, const BasicState<Scalar>& y,
                                  const Scalar& t) {
  if (x.dim() != y.dim()) raise("dimension-mismatch", "mixing needs equal dimensions");
  if (t < Scalar(0) || t > Scalar(1)) raise("t-out-of-range", "mixing parameter must be in [0,1]");
  std::vector<Scalar> v;
  v.reserve(x.dim());
  const Scalar s = Scalar(1) - t;
  for (int i = 0; i < x.dim(); ++i) v.push_back(s * x[i] + t * y[i]);
  return BasicState<Scalar>(std::move(v));
}

template <class Scalar>
BasicState<Scalar> line_path(const BasicState<Scalar>& x, const Scalar& t) {
  return mixing_combine(BasicState<Scalar>::uniform(x.dim()), x, t);
}

double shannon_entropy(const ClassicalState& x, double log_base) {
  double h = 0.0;
  for (double p : x.coords()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  if (log_base > 0.0) h /= std::log(log_base);
  return h < 0.0 ? 0.0 : h;
}

MonotoneState sort_retraction(const ClassicalState& x) {
  std::vector<double> v = x.coords();
  std::sort(v.begin(), v.end(), std::greater<double>());
  return MonotoneState(ClassicalState(std::move(v)));
}

template <class Scalar>
std::vector<int> support(const BasicState<Scalar>& x) {
  using P = NumericPolicy<Scalar>;
  std::vector<int> s;
  for (int i = 0; i < x.dim(); ++i) {
    if (!P::eq(x[i], Scalar(0))) s.push_back(i);
  }
  return s;
}

ClassicalState sample_state(int n, Rng& rng) {
  if (n < 2) raise("dimension-mismatch", "a state needs at least two outcomes");
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& e : v) {
    e = -std::log(1.0 - rng.uniform01());
    sum += e;
  }
  for (double& e : v) e /= sum;
  return ClassicalState(std::move(v));
}

std::pair<ClassicalState, ClassicalState> sample_comparable_pair(int n, Rng& rng) {
  ClassicalState y = sample_state(n, rng);
  const double t = rng.uniform01();
  return {line_path(y, t), y};
}

Measurement<ClassicalState> shannon_measurement() {
  return {"shannon",
          [](const ClassicalState& x) { return shannon_entropy(x); },
          [](const ClassicalState& a, const ClassicalState& b) { return bayesian_leq(a, b); }};
}

template class BasicState<double>;
template class BasicState<Rational>;

template bool bayesian_leq_base2<double>(const ClassicalState&, const ClassicalState&);
template bool bayesian_leq_base2<Rational>(const RationalState&, const RationalState&);
template bool bayesian_leq_recursive<double>(const ClassicalState&, const ClassicalState&);
template bool bayesian_leq_recursive<Rational>(const RationalState&, const RationalState&);
template bool bayesian_leq_symmetric<double>(const ClassicalState&, const ClassicalState&);
template bool bayesian_leq_symmetric<Rational>(const RationalState&, const RationalState&);
template OrderExplanation bayesian_leq_explain<double>(const ClassicalState&,
                                                       const ClassicalState&);
template OrderExplanation bayesian_leq_explain<Rational>(const RationalState&,
                                                         const RationalState&);
template ClassicalState bayes_projection<double>(int, const ClassicalState&);
template RationalState bayes_projection<Rational>(int, const RationalState&);
template ClassicalState bayes_projection_plus<double>(int, const ClassicalState&);
template RationalState bayes_projection_plus<Rational>(int, const RationalState&);
template ClassicalState mixing_combine<double>(const ClassicalState&, const ClassicalState&,
                                               const double&);
template RationalState mixing_combine<Rational>(const RationalState&, const RationalState&,
                                                const Rational&);
template ClassicalState line_path<double>(const ClassicalState&, const double&);
template RationalState line_path<Rational>(const RationalState&, const Rational&);
template std::vector<int> support<double>(const ClassicalState&);
template std::vector<int> support<Rational>(const RationalState&);

}  // namespace domainkit
