#include "domainkit/exactness.hpp"

#include <algorithm>
#include <numeric>

namespace domainkit {

namespace {

template <class Scalar>
Scalar limit_tolerance();

template <>
double limit_tolerance<double>() {
  return 1e-9;
}

template <>
Rational limit_tolerance<Rational>() {
  return Rational(1, 1000000000);
}

template <class Scalar>
Scalar abs_scalar(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : v;
}

template <class Scalar>
bool close_to(const BasicState<Scalar>& a, const BasicState<Scalar>& b) {
  if (a.dim() != b.dim()) return false;
  const Scalar tol = limit_tolerance<Scalar>();
  for (int i = 0; i < a.dim(); ++i) {
    if (abs_scalar<Scalar>(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

template <class Scalar>
StateChain<Scalar> constant_chain(const BasicState<Scalar>& x) {
  return {"constant", [x](std::uint64_t) { return x; }, x};
}

template <class Scalar>
StateChain<Scalar> path_chain(const BasicState<Scalar>& x,
                              std::function<Scalar(std::uint64_t)> rate, std::string name) {
  return {std::move(name),
          [x, rate = std::move(rate)](std::uint64_t m) { return line_path(x, rate(m)); }, x};
}

template <class Scalar>
std::vector<StateChain<Scalar>> standard_chain_family(const BasicState<Scalar>& x) {
  // Denominators are computed in the scalar type: deep probe indices would
  // overflow 64-bit arithmetic when squared.
  auto one_minus = [](auto denom) {
    return [denom](std::uint64_t m) { return Scalar(1) - Scalar(1) / denom(Scalar(m)); };
  };
  std::vector<StateChain<Scalar>> family;
  family.push_back(
      path_chain<Scalar>(x, one_minus([](const Scalar& m) { return m; }), "path 1-1/m"));
  family.push_back(path_chain<Scalar>(x, one_minus([](const Scalar& m) { return m + Scalar(1); }),
                                      "path 1-1/(m+1)"));
  family.push_back(path_chain<Scalar>(x, one_minus([](const Scalar& m) { return Scalar(2) * m; }),
                                      "path 1-1/(2m)"));
  family.push_back(path_chain<Scalar>(x, one_minus([](const Scalar& m) { return Scalar(3) * m; }),
                                      "path 1-1/(3m)"));
  family.push_back(
      path_chain<Scalar>(x, one_minus([](const Scalar& m) { return m * m; }), "path 1-1/m^2"));
  return family;
}

template <class Scalar>
StateChain<Scalar> degeneracy_chain(int top) {
  if (top < 0 || top > 2) raise("out-of-range", "degeneracy chain runs on three outcomes");
  auto at = [top](std::uint64_t j) {
    const Scalar m = Scalar(static_cast<long long>(j + 2));  // first valid index is m = 3
    std::vector<Scalar> v(3, Scalar(1) / m);
    v[static_cast<std::size_t>(top)] = Scalar(1) - Scalar(2) / m;
    return BasicState<Scalar>(std::move(v));
  };
  return {"degeneracy (1-2/m, 1/m, 1/m)", at, BasicState<Scalar>::pure(3, top)};
}

template <class Scalar>
BasicState<Scalar> chain_sup(const StateChain<Scalar>& c, int depth) {
  if (depth < 2 || depth > 62) raise("bad-flags", "depth must be in [2, 62]");
  std::vector<BasicState<Scalar>> prefix;
  prefix.reserve(static_cast<std::size_t>(depth));
  for (int j = 0; j < depth; ++j) {
    prefix.push_back(c.at(std::uint64_t(1) << j));
  }
  for (int j = 0; j + 1 < depth; ++j) {
    if (!bayesian_leq(prefix[j], prefix[j + 1])) {
      raise("not-a-chain", "chain '" + c.name + "' decreases between evaluated indices 2^" +
                               std::to_string(j) + " and 2^" + std::to_string(j + 1));
    }
  }

  // Coordinatewise Richardson step with ratio 2: exact on the geometric
  // profiles the chain library produces, a no-op on constant chains.
  const BasicState<Scalar>& last = prefix[static_cast<std::size_t>(depth - 1)];
  const BasicState<Scalar>& prev = prefix[static_cast<std::size_t>(depth - 2)];
  std::vector<Scalar> est(static_cast<std::size_t>(last.dim()));
  Scalar sum(0);
  for (int i = 0; i < last.dim(); ++i) {
    Scalar v = Scalar(2) * last[i] - prev[i];
    if (v < Scalar(0)) v = Scalar(0);
    est[static_cast<std::size_t>(i)] = v;
    sum += v;
  }
  for (auto& v : est) v = v / sum;
  BasicState<Scalar> estimate(std::move(est));

  if (!close_to(estimate, c.limit)) {
    raise("limit-mismatch", "chain '" + c.name + "' extrapolates away from its declared limit");
  }
  for (const auto& element : prefix) {
    if (!bayesian_leq(element, estimate)) {
      raise("limit-mismatch",
            "chain '" + c.name + "' has an evaluated element above the limit estimate");
    }
  }
  return estimate;
}

template <class Scalar>
BasicState<Scalar> path_approximant(const BasicState<Scalar>& x, const Scalar& t) {
  if (t < Scalar(0) || t >= Scalar(1)) {
    raise("t-out-of-range", "path approximants require t in [0, 1)");
  }
  return line_path(x, t);
}

template <class Scalar>
WaybelowEvidence check_exact_waybelow(const BasicState<Scalar>& a, const BasicState<Scalar>& x,
                                      const std::vector<StateChain<Scalar>>& chains,
                                      int prefix_depth) {
  if (prefix_depth < 1 || prefix_depth > 62) raise("bad-flags", "prefix depth must be in [1, 62]");
  WaybelowEvidence evidence;
  for (const auto& chain : chains) {
    if (!close_to(chain.limit, x)) {
      raise("limit-mismatch", "chain '" + chain.name + "' does not declare limit x");
    }
    ChainWitness w{chain.name, false, 0};
    for (int j = 0; j < prefix_depth; ++j) {
      const std::uint64_t m = std::uint64_t(1) << j;
      if (bayesian_leq(a, chain.at(m))) {
        w.found = true;
        w.index = m;
        break;
      }
    }
    evidence.witnesses.push_back(std::move(w));
  }
  return evidence;
}

std::optional<Refutation> classical_waybelow_refuter(const ClassicalState& a,
                                                     const ClassicalState& x) {
  using P = NumericPolicy<double>;
  if (x.dim() != 3 || a.dim() != 3) {
    raise("invalid-argument", "the refuter runs on three outcomes");
  }
  int zero_index = -1;
  int halves = 0;
  for (int i = 0; i < 3; ++i) {
    if (P::eq(x[i], 0.0)) {
      zero_index = i;
    } else if (P::eq(x[i], 0.5)) {
      ++halves;
    }
  }
  if (zero_index < 0 || halves != 2) {
    raise("invalid-argument", "target must be a coordinate permutation of (1/2, 1/2, 0)");
  }
  if (!bayesian_leq(a, x)) raise("not-a-lower-bound", "a is not below the target");

  const ClassicalState bottom = ClassicalState::uniform(3);
  bool is_bottom = true;
  for (int i = 0; i < 3; ++i) {
    if (!P::eq(a[i], bottom[i])) is_bottom = false;
  }
  if (is_bottom) return std::nullopt;

  // Send the chain toward one of the tied coordinates of x; its two small
  // entries stay tied, which no lower bound of x other than the least
  // element can match.
  int top = 0;
  while (P::eq(x[top], 0.0)) ++top;
  Refutation r{degeneracy_chain<double>(top), {}, true};
  // The proof obligation is decided in exact arithmetic on the binary
  // values: the chain's tied coordinates force an exact tie on a, and the
  // float decider's slack would wash that out at deep indices.
  const RationalState exact_a = to_exact(a);
  const StateChain<Rational> exact_chain = degeneracy_chain<Rational>(top);
  for (std::uint64_t m = 10; m <= 1000000; m *= 10) {
    r.checked_indices.push_back(m);
    if (bayesian_leq(exact_a, exact_chain.at(m - 2))) r.certified = false;
  }
  return r;
}

template <class Scalar>
Decomposition<Scalar> coordinate_decomposition(const BasicState<Scalar>& x) {
  const int n = x.dim();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (x[i] != x[j]) return x[i] > x[j];
    return i < j;
  });

  Decomposition<Scalar> d{{}, BasicState<Scalar>::uniform(n)};
  for (int k = 1; k < n; ++k) {
    const Scalar hi = x[order[k - 1]];
    const Scalar lo = x[order[k]];
    if (!(hi > lo)) continue;  // tied profile positions contribute nothing
    std::vector<int> block(order.begin(), order.begin() + k);
    std::sort(block.begin(), block.end());
    if (lo == Scalar(0)) {
      // The support line tops out inside x: take the irreducible itself.
      std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0));
      for (int i : block) v[static_cast<std::size_t>(i)] = Scalar(1) / Scalar(k);
      d.members.push_back({BasicState<Scalar>(std::move(v)), std::move(block), Scalar(1)});
      continue;
    }
    // Largest path parameter keeping the line point below x: the boundary
    // cross-product inequality binds with equality.
    const Scalar gap = hi - lo;
    const Scalar t = gap / (gap + Scalar(n) * lo / Scalar(k));
    const Scalar base = (Scalar(1) - t) / Scalar(n);
    std::vector<Scalar> v(static_cast<std::size_t>(n), base);
    for (int i : block) v[static_cast<std::size_t>(i)] = base + t / Scalar(k);
    d.members.push_back({BasicState<Scalar>(std::move(v)), std::move(block), t});
  }

  if (d.members.empty()) {
    // Uniform input: the least element is itself irreducible.
    std::vector<int> full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    d.members.push_back({BasicState<Scalar>::uniform(n), std::move(full), Scalar(1)});
    d.supremum_estimate = BasicState<Scalar>::uniform(n);
    return d;
  }

  // Least upper bound on the shared monotone alignment: consecutive ratios
  // are the minima over the members' ratios (1 where no member binds).
  std::vector<Scalar> ratio(static_cast<std::size_t>(n - 1), Scalar(1));
  for (const auto& member : d.members) {
    const int k = static_cast<int>(member.target_support.size());
    const Scalar hi_v = member.state[order[k - 1]];
    const Scalar lo_v = member.state[order[k]];
    ratio[static_cast<std::size_t>(k - 1)] = hi_v == Scalar(0) ? Scalar(0) : lo_v / hi_v;
  }
  std::vector<Scalar> profile(static_cast<std::size_t>(n), Scalar(1));
  for (int k = 1; k < n; ++k) {
    profile[static_cast<std::size_t>(k)] =
        profile[static_cast<std::size_t>(k - 1)] * ratio[static_cast<std::size_t>(k - 1)];
  }
  Scalar sum(0);
  for (const auto& v : profile) sum += v;
  std::vector<Scalar> est(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    est[static_cast<std::size_t>(order[k])] = profile[static_cast<std::size_t>(k)] / sum;
  }
  d.supremum_estimate = BasicState<Scalar>(std::move(est));
  return d;
}

template StateChain<double> constant_chain<double>(const ClassicalState&);
template StateChain<Rational> constant_chain<Rational>(const RationalState&);
template StateChain<double> path_chain<double>(const ClassicalState&,
                                               std::function<double(std::uint64_t)>, std::string);
template StateChain<Rational> path_chain<Rational>(const RationalState&,
                                                   std::function<Rational(std::uint64_t)>,
                                                   std::string);
template std::vector<StateChain<double>> standard_chain_family<double>(const ClassicalState&);
template std::vector<StateChain<Rational>> standard_chain_family<Rational>(const RationalState&);
template StateChain<double> degeneracy_chain<double>(int);
template StateChain<Rational> degeneracy_chain<Rational>(int);
template ClassicalState chain_sup<double>(const StateChain<double>&, int);
template RationalState chain_sup<Rational>(const StateChain<Rational>&, int);
template ClassicalState path_approximant<double>(const ClassicalState&, const double&);
template RationalState path_approximant<Rational>(const RationalState&, const Rational&);
template WaybelowEvidence check_exact_waybelow<double>(const ClassicalState&, const ClassicalState&,
                                                       const std::vector<StateChain<double>>&, int);
template WaybelowEvidence check_exact_waybelow<Rational>(const RationalState&, const RationalState&,
                                                         const std::vector<StateChain<Rational>>&,
                                                         int);
template Decomposition<double> coordinate_decomposition<double>(const ClassicalState&);
template Decomposition<Rational> coordinate_decomposition<Rational>(const RationalState&);

}  // namespace domainkit
