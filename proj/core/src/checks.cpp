#include "domainkit/checks.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "domainkit/calculus.hpp"
#include "domainkit/classic_domains.hpp"
#include "domainkit/exactness.hpp"
#include "domainkit/interval.hpp"
#include "domainkit/logics.hpp"
#include "domainkit/simplex.hpp"
#include "domainkit/spectra.hpp"

namespace domainkit {

namespace {

// Violation counter; remembers the first failure for the report.
class Tally {
 public:
  void expect(bool ok, const char* what) {
    ++checked_;
    if (!ok) {
      ++violations_;
      if (first_.empty()) first_ = what;
    }
  }

  CheckResult result(std::string suite, std::string name) const {
    return {std::move(suite), std::move(name), violations_ == 0, checked_, violations_, first_};
  }

 private:
  long long checked_ = 0;
  long long violations_ = 0;
  std::string first_;
};

double max_coord_gap(const ClassicalState& a, const ClassicalState& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

int argmax_coord(const ClassicalState& x) {
  int best = 0;
  for (int i = 1; i < x.dim(); ++i) {
    if (x[i] > x[best]) best = i;
  }
  return best;
}

Interval random_interval(Rng& rng) {
  const double lo = rng.uniform(-10.0, 10.0);
  return Interval(lo, lo + 0.01 + rng.uniform(0.0, 5.0));
}

// Sub-interval of a (possibly touching the endpoints).
Interval shrink(const Interval& a, Rng& rng) {
  const double u = rng.uniform01() * 0.5;
  const double v = rng.uniform01() * 0.49;
  return Interval(a.lo() + u * a.width(), a.hi() - v * a.width());
}

// Strictly interior sub-interval; requires positive width.
Interval strict_shrink(const Interval& a, Rng& rng) {
  const double w = a.width();
  const double u = 0.05 + rng.uniform01() * 0.4;
  const double v = 0.05 + rng.uniform01() * 0.4;
  return Interval(a.lo() + u * w * 0.5, a.hi() - v * w * 0.5);
}

// A state with deliberate coordinate ties: uniform blocks glued together.
ClassicalState tie_rich_state(int n, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(n));
  int i = 0;
  double sum = 0.0;
  while (i < n) {
    const int block = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    const double level = 0.05 + rng.uniform01();
    for (int k = 0; k < block; ++k) v[static_cast<std::size_t>(i + k)] = level;
    i += block;
    sum += level * block;
  }
  for (double& p : v) p /= sum;
  return ClassicalState(std::move(v));
}

// --- kernel ---------------------------------------------------------------

CheckResult interval_axioms(const CheckOptions& o) {
  Rng rng(o.seed + 11);
  Tally t;
  for (int s = 0; s < o.axiom_samples; ++s) {
    const Interval a = random_interval(rng);
    const Interval b = shrink(a, rng);
    const Interval c = shrink(b, rng);
    t.expect(interval_leq(a, a), "reflexivity");
    t.expect(interval_leq(a, b) && interval_leq(b, c), "constructed chain must be comparable");
    t.expect(interval_leq(a, c), "transitivity");
    if (interval_leq(a, b) && interval_leq(b, a)) {
      t.expect(a == b, "antisymmetry");
    }
    const Interval r1 = random_interval(rng);
    const Interval r2 = random_interval(rng);
    if (interval_leq(r1, r2) && interval_leq(r2, r1)) t.expect(r1 == r2, "antisymmetry/random");

    const Interval inner = strict_shrink(a, rng);
    t.expect(interval_waybelow(a, inner), "strict shrink is way below");
    t.expect(interval_leq(a, inner), "way-below implies below");
    const Interval deeper = shrink(inner, rng);
    t.expect(interval_waybelow(a, deeper), "way-below passes through below");
    t.expect(scott_basic_contains(a, inner) == interval_waybelow(a, inner),
             "basic Scott set membership matches way-below");
  }
  return t.result("kernel", "interval-order-axioms");
}

CheckResult measurement_monotonicity(const CheckOptions& o) {
  Rng rng(o.seed + 12);
  Tally t;
  const auto len = length_measurement();
  const auto nat = natset_measurement();
  const auto str = string_measurement();
  const auto pm = pmap_measurement();
  for (int s = 0; s < o.property_samples; ++s) {
    const Interval a = random_interval(rng);
    const Interval b = shrink(a, rng);
    t.expect(len.value(a) >= len.value(b), "length monotone");

    std::set<std::uint64_t> ys;
    std::set<std::uint64_t> xs;
    for (std::uint64_t k = 0; k < 40; ++k) {
      if (rng.below(2) == 0) {
        ys.insert(k);
        if (rng.below(2) == 0) xs.insert(k);
      }
    }
    const NatSet y = NatSet::finite(ys);
    const NatSet x = NatSet::finite(xs);
    t.expect(nat.leq(x, y), "constructed subset comparable");
    t.expect(nat.value(x) >= nat.value(y), "natset content monotone");
    if (!ys.empty()) t.expect(nat.value(y) > 0.0, "finite sets keep positive content");

    std::vector<int> bits;
    const int len_t = static_cast<int>(rng.below(25));
    for (int k = 0; k < len_t; ++k) bits.push_back(static_cast<int>(rng.below(2)));
    const BitString bt = BitString::finite(bits);
    bits.resize(rng.below(static_cast<std::uint64_t>(len_t + 1)));
    const BitString bs = BitString::finite(bits);
    t.expect(str.leq(bs, bt), "prefix comparable");
    t.expect(str.value(bs) >= str.value(bt), "string content monotone");

    PartialNatMap g;
    for (std::uint64_t k = 0; k < 12; ++k) {
      if (rng.below(2) == 0) g[k] = rng.below(100);
    }
    PartialNatMap f;
    for (const auto& [k, v] : g) {
      if (rng.below(2) == 0) f[k] = v;
    }
    t.expect(pm.leq(f, g), "restriction comparable");
    t.expect(pm.value(f) >= pm.value(g), "partial-map content monotone");
  }

  // Rule set against its finite approximations.
  const NatSet evens = NatSet::rule([](std::uint64_t n) { return n % 2 == 0; });
  t.expect(natset_leq(NatSet::finite({0, 2, 4, 10}), evens), "finite part below the rule set");
  t.expect(natset_measure(NatSet::finite({0, 2, 4, 10})) >= natset_measure(evens),
           "rule-set content monotone");
  return t.result("kernel", "measurement-monotone");
}

CheckResult measurement_values(const CheckOptions& o) {
  (void)o;
  Tally t;
  t.expect(std::abs(interval_length(Interval(1, 3)) - 2.0) < 1e-15, "length [1,3] = 2");
  t.expect(interval_length(Interval::point(2.5)) == 0.0, "points have zero content");
  t.expect(std::abs(natset_measure(NatSet::finite({})) - 1.0) < 1e-15, "empty set content 1");
  t.expect(std::abs(natset_measure(NatSet::finite({0})) - 0.5) < 1e-15, "content of {0} = 1/2");
  t.expect(std::abs(string_measure(BitString::finite({0, 1})) - 0.25) < 1e-15, "|01| -> 1/4");
  t.expect(string_measure(BitString::infinite([](std::uint64_t) { return 1; })) == 0.0,
           "infinite strings have zero content");
  t.expect(std::abs(pmap_measure(PartialNatMap{}) - 1.0) < 1e-15, "empty map content 1");

  const auto len = length_measurement();
  t.expect(mu_ball_contains(len, Interval::point(1), Interval(0.5, 1.5), 2.0), "ball membership");
  t.expect(!mu_ball_contains(len, Interval::point(1), Interval(0, 3), 2.0), "ball exclusion");
  t.expect(mu_ball_contains(len, Interval::point(1), Interval::point(1), 1e-12),
           "x sits in its own ball");
  return t.result("kernel", "measurement-values");
}

CheckResult derivative_theorem(const CheckOptions& o) {
  (void)o;
  Tally t;
  struct Case {
    const char* name;
    RealFunction f;
    RealFunction deriv;
    std::vector<double> points;
  };
  const std::vector<Case> cases = {
      {"square", [](double v) { return v * v; }, [](double v) { return 2.0 * v; },
       {0.5, 1.0, 1.7, -1.5, 3.0}},
      {"sin", [](double v) { return std::sin(v); }, [](double v) { return std::cos(v); },
       {0.0, 0.5, 1.0, -0.7, 2.0}},
      {"exp", [](double v) { return std::exp(v); }, [](double v) { return std::exp(v); },
       {-1.0, 0.0, 0.5, 1.0, 2.0}},
      {"3x+1", [](double v) { return 3.0 * v + 1.0; }, [](double) { return 3.0; },
       {-2.0, -0.5, 0.0, 1.0, 3.0}},
  };
  for (const auto& c : cases) {
    for (double p : c.points) {
      const double estimate = informatic_derivative(c.f, p);
      t.expect(std::abs(estimate - std::abs(c.deriv(p))) <= 1e-4, c.name);
    }
  }
  const double flat = informatic_derivative([](double) { return 4.0; }, 1.0);
  t.expect(flat == 0.0, "constant maps have zero derivative");
  return t.result("kernel", "informatic-derivative");
}

CheckResult fixpoint_demos(const CheckOptions& o) {
  (void)o;
  Tally t;
  const RealFunction halfplus = [](double v) { return 0.5 * v + 1.0; };
  const Interval a = fixpoint_iterate(halfplus, Interval(0, 10), 60);
  t.expect(a.contains(2.0), "x/2+1 iterates bracket 2");
  t.expect(a.width() < 1e-9, "x/2+1 iterates collapse");

  const Interval b = fixpoint_iterate([](double v) { return std::cos(v); }, Interval(0, 1), 200);
  t.expect(std::abs(b.midpoint() - 0.7390851332151607) <= 1e-9, "cos converges to its fixed point");
  t.expect(b.width() < 1e-9, "cos iterates collapse");

  const Interval seed(0.25, 0.75);
  const Interval id = fixpoint_iterate([](double v) { return v; }, seed, 17);
  t.expect(id == seed, "identity leaves the seed alone");

  // The iterates form a chain in the order (shrinking intervals).
  Interval current(0, 10);
  for (int k = 0; k < 30; ++k) {
    const Interval next = monotone_image(halfplus, current);
    t.expect(interval_leq(current, next), "iterates increase in information");
    t.expect(next.width() <= current.width() + 1e-15, "widths never grow");
    current = next;
  }
  return t.result("kernel", "fixpoint-iteration");
}

// --- simplex ----------------------------------------------------------------

CheckResult decider_equivalence(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 100 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.pair_samples; ++s) {
      const ClassicalState x = sample_state(n, rng);
      const ClassicalState y = sample_state(n, rng);
      t.expect(bayesian_leq_recursive(x, y) == bayesian_leq_symmetric(x, y),
               "deciders disagree on a random pair");
    }
    for (int s = 0; s < o.pair_samples; ++s) {
      const auto [x, y] = sample_comparable_pair(n, rng);
      const bool rec = bayesian_leq_recursive(x, y);
      const bool sym = bayesian_leq_symmetric(x, y);
      t.expect(rec == sym, "deciders disagree on a comparable pair");
      t.expect(sym, "constructed comparable pair rejected");
    }
  }
  return t.result("simplex", "decider-equivalence");
}

CheckResult classical_order_axioms(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 200 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.axiom_samples; ++s) {
      const ClassicalState x = sample_state(n, rng);
      t.expect(bayesian_leq(x, x), "reflexivity");

      const ClassicalState r1 = sample_state(n, rng);
      const ClassicalState r2 = sample_state(n, rng);
      if (bayesian_leq(r1, r2) && bayesian_leq(r2, r1)) {
        t.expect(max_coord_gap(r1, r2) <= 1e-8, "antisymmetry/random");
      }
      const auto [c1, c2] = sample_comparable_pair(n, rng);
      if (bayesian_leq(c1, c2) && bayesian_leq(c2, c1)) {
        t.expect(max_coord_gap(c1, c2) <= 1e-8, "antisymmetry/comparable");
      }

      // Chain built by two mixing steps.
      const ClassicalState z = sample_state(n, rng);
      const ClassicalState y = line_path(z, rng.uniform01());
      const ClassicalState w = line_path(y, rng.uniform01());
      t.expect(bayesian_leq(w, y) && bayesian_leq(y, z), "constructed chain comparable");
      t.expect(bayesian_leq(w, z), "transitivity");
    }
  }
  return t.result("simplex", "order-axioms");
}

CheckResult classical_extremes(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 300 + static_cast<std::uint64_t>(n));
    const ClassicalState bottom = ClassicalState::uniform(n);
    for (int s = 0; s < o.property_samples; ++s) {
      const ClassicalState x = sample_state(n, rng);
      t.expect(bayesian_leq(bottom, x), "least element below everything");
      const int top = argmax_coord(x);
      t.expect(bayesian_leq(x, ClassicalState::pure(n, top)),
               "state below the pure state of its maximal outcome");
      for (int i = 0; i < n; ++i) {
        if (x[i] < x[top] - 1e-6) {
          t.expect(!bayesian_leq(x, ClassicalState::pure(n, i)),
                   "state not below a non-maximal pure state");
        }
      }
      // Pure states are maximal: nothing random sits above them.
      const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      const ClassicalState e = ClassicalState::pure(n, i);
      t.expect(bayesian_leq(e, e), "pure state above itself");
      if (max_coord_gap(e, x) > 1e-8) {
        t.expect(!bayesian_leq(e, x), "nothing except e_i sits above e_i");
      }
    }
  }
  return t.result("simplex", "extremes");
}

CheckResult degeneracy_lemma(const CheckOptions& o) {
  Tally t;
  auto scan = [&](const ClassicalState& x, const ClassicalState& y) {
    if (!bayesian_leq(x, y)) return;
    for (int i = 0; i < y.dim(); ++i) {
      for (int j = i + 1; j < y.dim(); ++j) {
        if (std::abs(y[i] - y[j]) <= 1e-9 && y[i] > 1e-9) {
          t.expect(std::abs(x[i] - x[j]) <= 1e-9, "accepted pair violates degeneracy");
        }
      }
    }
  };
  for (int n = 3; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 400 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      scan(sample_state(n, rng), sample_state(n, rng));
      const auto [x, y] = sample_comparable_pair(n, rng);
      scan(x, y);
      const ClassicalState tied = tie_rich_state(n, rng);
      scan(line_path(tied, rng.uniform01()), tied);
    }
  }
  return t.result("simplex", "degeneracy");
}

CheckResult mixing_law(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 500 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const auto [x, y] = sample_comparable_pair(n, rng);
      for (int k = 1; k <= 9; ++k) {
        const ClassicalState m = mixing_combine(x, y, 0.1 * k);
        t.expect(bayesian_leq(x, m), "x below the mixture");
        t.expect(bayesian_leq(m, y), "mixture below y");
      }
    }
  }
  return t.result("simplex", "mixing-law");
}

CheckResult shannon_measurement_properties(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 600 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const auto [x, y] = sample_comparable_pair(n, rng);
      const double hx = shannon_entropy(x);
      const double hy = shannon_entropy(y);
      t.expect(hx >= hy, "entropy decreases along the order");
      if (max_coord_gap(x, y) > 1e-9) {
        t.expect(hx > hy, "entropy strictly decreases on unequal pairs");
      }
    }
    t.expect(shannon_entropy(ClassicalState::pure(n, 0)) == 0.0, "pure states carry no entropy");
    t.expect(std::abs(shannon_entropy(ClassicalState::uniform(n)) - std::log(n)) < 1e-12,
             "uniform state has entropy log n");
  }
  return t.result("simplex", "entropy-measurement");
}

CheckResult projection_monotonicity(const CheckOptions& o) {
  Tally t;
  for (int n = 3; n <= o.classical_max_dim; ++n) {
    Rng rng(o.seed + 700 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const auto [x, y] = sample_comparable_pair(n, rng);
      for (int i = 0; i < n; ++i) {
        if (std::abs(x[i] - 1.0) <= 1e-9 || std::abs(y[i] - 1.0) <= 1e-9) continue;
        t.expect(bayesian_leq(bayes_projection(i, x), bayes_projection(i, y)),
                 "projection breaks comparability");
      }
    }
  }
  return t.result("simplex", "projection-monotone");
}

// --- spectra ----------------------------------------------------------------

CheckResult spectral_order_axioms(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.spectral_max_dim; ++n) {
    Rng rng(o.seed + 800 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.axiom_samples; ++s) {
      const DensityMatrix rho = sample_density(n, rng);
      t.expect(spectral_leq(rho, rho), "reflexivity");

      const auto [a, b] = sample_comparable_density_pair(n, rng);
      if (spectral_leq(a, b) && spectral_leq(b, a)) {
        t.expect((a.matrix() - b.matrix()).norm() <= 1e-8, "antisymmetry");
      }

      // Chain in a shared eigenframe.
      const CMatrix u = sample_unitary(n, rng);
      const ClassicalState z = sample_state(n, rng);
      const ClassicalState y = line_path(z, rng.uniform01());
      const ClassicalState x = line_path(y, rng.uniform01());
      auto conj = [&](const ClassicalState& c) {
        CMatrix d = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = c[i];
        return DensityMatrix::validated(u * d * u.adjoint());
      };
      const DensityMatrix r1 = conj(x), r2 = conj(y), r3 = conj(z);
      t.expect(spectral_leq(r1, r2) && spectral_leq(r2, r3), "constructed chain comparable");
      t.expect(spectral_leq(r1, r3), "transitivity");
    }
  }
  return t.result("spectra", "order-axioms");
}

CheckResult spectral_extremes(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.spectral_max_dim; ++n) {
    Rng rng(o.seed + 900 + static_cast<std::uint64_t>(n));
    const DensityMatrix bottom = DensityMatrix::maximally_mixed(n);
    for (int s = 0; s < o.property_samples; ++s) {
      const DensityMatrix rho = sample_density(n, rng);
      t.expect(spectral_leq(bottom, rho), "maximally mixed state below everything");

      const CMatrix u = sample_unitary(n, rng);
      std::vector<CVector> one_col{u.col(0)};
      const DensityMatrix pure = uniform_projection_state(one_col);
      t.expect(spectral_leq(pure, pure), "pure state above itself");
      if ((pure.matrix() - rho.matrix()).norm() > 1e-8) {
        t.expect(!spectral_leq(pure, rho), "pure states are maximal");
      }
    }
  }
  return t.result("spectra", "extremes");
}

CheckResult bloch_agreement(const CheckOptions& o) {
  Rng rng(o.seed + 1000);
  Tally t;
  for (int s = 0; s < o.bloch_random; ++s) {
    const DensityMatrix a = sample_density(2, rng);
    const DensityMatrix b = sample_density(2, rng);
    t.expect(spectral_leq(a, b) == bloch_leq(bloch_from_density(a), bloch_from_density(b)),
             "deciders disagree on a random pair");
  }
  for (int s = 0; s < o.bloch_comparable; ++s) {
    const auto [a, b] = sample_comparable_density_pair(2, rng);
    const bool spectral = spectral_leq(a, b);
    const bool bloch = bloch_leq(bloch_from_density(a), bloch_from_density(b));
    t.expect(spectral && bloch, "comparable pair rejected");
  }
  // Round trip between the two presentations.
  for (int s = 0; s < o.bloch_comparable; ++s) {
    const DensityMatrix rho = sample_density(2, rng);
    const DensityMatrix back = density_from_bloch(bloch_from_density(rho));
    t.expect((rho.matrix() - back.matrix()).norm() <= 1e-10, "bloch round trip");
  }
  return t.result("spectra", "bloch-agreement");
}

CheckResult von_neumann_properties(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.spectral_max_dim; ++n) {
    Rng rng(o.seed + 1100 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const auto [a, b] = sample_comparable_density_pair(n, rng);
      const double ha = von_neumann_entropy(a);
      const double hb = von_neumann_entropy(b);
      t.expect(ha >= hb, "entropy decreases along the order");
      if ((a.matrix() - b.matrix()).norm() > 1e-8) {
        t.expect(ha > hb, "entropy strictly decreases on unequal pairs");
      }

      // Unitary invariance of the order.
      const CMatrix u = sample_unitary(n, rng);
      const DensityMatrix ua = DensityMatrix::validated(u * a.matrix() * u.adjoint());
      const DensityMatrix ub = DensityMatrix::validated(u * b.matrix() * u.adjoint());
      t.expect(spectral_leq(a, b) == spectral_leq(ua, ub), "unitary invariance/comparable");
      const DensityMatrix r1 = sample_density(n, rng);
      const DensityMatrix r2 = sample_density(n, rng);
      const DensityMatrix ur1 = DensityMatrix::validated(u * r1.matrix() * u.adjoint());
      const DensityMatrix ur2 = DensityMatrix::validated(u * r2.matrix() * u.adjoint());
      t.expect(spectral_leq(r1, r2) == spectral_leq(ur1, ur2), "unitary invariance/random");
    }
    t.expect(std::abs(von_neumann_entropy(DensityMatrix::maximally_mixed(n)) - std::log(n)) <
                 1e-10,
             "maximally mixed entropy log n");
  }
  return t.result("spectra", "entropy-measurement");
}

CheckResult embedding_checks(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.spectral_max_dim; ++n) {
    Rng rng(o.seed + 1200 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const ClassicalState x = sample_state(n, rng);
      const DensityMatrix dx = diag_embedding(x);
      t.expect(std::abs(von_neumann_entropy(dx) - shannon_entropy(x)) <= 1e-9,
               "embedding conserves entropy");

      const MonotoneState q = spectrum_descending(dx);
      const MonotoneState r = sort_retraction(x);
      t.expect(max_coord_gap(q.state(), r.state()) <= 1e-9,
               "descending spectrum matches the sorting retraction");

      const auto [cx, cy] = sample_comparable_pair(n, rng);
      t.expect(spectral_leq(diag_embedding(cx), diag_embedding(cy)),
               "embedding preserves comparability");
      const ClassicalState r1 = sample_state(n, rng);
      const ClassicalState r2 = sample_state(n, rng);
      t.expect(bayesian_leq(r1, r2) == spectral_leq(diag_embedding(r1), diag_embedding(r2)),
               "embedding preserves and reflects the order");
    }
  }
  return t.result("spectra", "diagonal-embedding");
}

CheckResult slice_isomorphism(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.spectral_max_dim; ++n) {
    Rng rng(o.seed + 1300 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < o.property_samples; ++s) {
      const CMatrix u = sample_unitary(n, rng);
      const Observable e = Observable::from_frame(u);
      auto conj = [&](const ClassicalState& c) {
        CMatrix d = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = c[i];
        return DensityMatrix::validated(u * d * u.adjoint());
      };
      const auto [x, y] = sample_comparable_pair(n, rng);
      const DensityMatrix rho = conj(x);
      const DensityMatrix sigma = conj(y);
      t.expect(max_coord_gap(classical_slice(e, rho), x) <= 1e-9, "slice recovers the state");
      t.expect(spectral_leq(rho, sigma) == bayesian_leq(classical_slice(e, rho),
                                                        classical_slice(e, sigma)),
               "slice is an order isomorphism/comparable");
      const ClassicalState r1 = sample_state(n, rng);
      const ClassicalState r2 = sample_state(n, rng);
      t.expect(spectral_leq(conj(r1), conj(r2)) == bayesian_leq(r1, r2),
               "slice is an order isomorphism/random");
    }
  }
  return t.result("spectra", "commuting-slice");
}

// --- logics -----------------------------------------------------------------

CheckResult irreducible_counts(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.irreducible_count_max_dim; ++n) {
    const auto ir = irreducibles_classical(n);
    t.expect(static_cast<long long>(ir.size()) == (1LL << n) - 1, "|Ir| must be 2^n - 1");
    for (const auto& state : ir) {
      const auto sup = support(state);
      bool uniform = !sup.empty();
      for (int i : sup) {
        if (state[i] != Rational(1, sup.size())) uniform = false;
      }
      t.expect(uniform, "irreducible not uniform on its support");
    }
  }
  return t.result("logics", "irreducible-enumeration");
}

CheckResult irreducibility_decider(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 1400);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& state : irreducibles_classical(n)) {
      t.expect(is_irreducible_classical(state, rng, 50), "enumerated state must be irreducible");
    }
    for (int s = 0; s < o.property_samples / 4; ++s) {
      std::vector<BigInt> a(static_cast<std::size_t>(n));
      BigInt total(0);
      for (auto& v : a) {
        v = BigInt(1 + rng.below(50));
        total += v;
      }
      std::vector<Rational> p;
      for (const auto& v : a) p.emplace_back(v, total);
      const RationalState w(std::move(p));
      // Irreducible iff uniform on its support.
      const auto sup = support(w);
      bool uniform = true;
      for (int i : sup) {
        if (w[i] != Rational(1, sup.size())) uniform = false;
      }
      t.expect(is_irreducible_classical(w, rng, 20) == uniform,
               "irreducibility decider disagrees with the support profile");
    }
  }
  return t.result("logics", "irreducibility-decider");
}

CheckResult hasse_dual_isomorphism(const CheckOptions& o) {
  Tally t;
  for (int n = 2; n <= o.hasse_max_dim; ++n) {
    const HasseDiagram h = hasse_classical(n);
    t.expect(static_cast<long long>(h.nodes.size()) == (1LL << n) - 1, "node count");

    std::set<std::vector<int>> seen(h.supports.begin(), h.supports.end());
    t.expect(static_cast<long long>(seen.size()) == (1LL << n) - 1,
             "supports enumerate the nonempty subsets");

    // Order reversal onto subset inclusion.
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      for (std::size_t j = 0; j < h.nodes.size(); ++j) {
        const bool swallowed =
            std::includes(h.supports[i].begin(), h.supports[i].end(), h.supports[j].begin(),
                          h.supports[j].end());
        t.expect(bayesian_leq(h.nodes[i], h.nodes[j]) == swallowed,
                 "order must match reversed inclusion");
      }
    }

    // Covering edges match the dual powerset covering: drop one outcome.
    std::set<std::pair<int, int>> expected;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
      for (std::size_t j = 0; j < h.nodes.size(); ++j) {
        if (h.supports[i].size() == h.supports[j].size() + 1 &&
            std::includes(h.supports[i].begin(), h.supports[i].end(), h.supports[j].begin(),
                          h.supports[j].end())) {
          expected.insert({static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
    const std::set<std::pair<int, int>> actual(h.edges.begin(), h.edges.end());
    t.expect(actual == expected, "covering edges must match the dual powerset covering");

    // Graded: every edge drops exactly one outcome, so each maximal chain
    // from the least element to a pure state makes n-1 steps.
    for (const auto& [lo, hi] : h.edges) {
      t.expect(h.supports[lo].size() == h.supports[hi].size() + 1, "edge must drop one outcome");
    }
  }
  return t.result("logics", "hasse-dual-isomorphism");
}

CheckResult quantum_logic_checks(const CheckOptions& o) {
  long long checked = 0;
  long long violations = 0;
  std::string first;
  for (int n = 2; n <= 4; ++n) {
    Rng rng(o.seed + 1500 + static_cast<std::uint64_t>(n));
    const ConsistencyReport report = quantum_logic_consistency(n, o.quantum_samples, rng);
    checked += report.nested_checked + report.incomparable_checked;
    violations += (report.nested_checked - report.nested_passed) +
                  (report.incomparable_checked - report.incomparable_passed);
    if (violations > 0 && first.empty()) {
      first = "subspace order mismatch at n = " + std::to_string(n);
    }
  }
  return {"logics", "quantum-logic-consistency", violations == 0, checked, violations, first};
}

// --- exactness ---------------------------------------------------------------

CheckResult approximant_challenges(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 1600);
  const std::vector<double> params{0.25, 0.5, 0.75, 0.9};
  for (int s = 0; s < o.exactness_samples; ++s) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const ClassicalState x = sample_state(n, rng);
    const auto chains = standard_chain_family(x);
    for (double tp : params) {
      const ClassicalState a = path_approximant(x, tp);
      t.expect(check_exact_waybelow(a, x, chains).all_witnessed(),
               "path approximant not witnessed in a standard chain");
    }
  }
  return t.result("exactness", "path-approximant-evidence");
}

CheckResult exact_mode_challenges(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 1700);
  const std::vector<Rational> params{Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                     Rational(9, 10)};
  const int samples = std::max(1, o.exactness_samples / 5);
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<BigInt> a(static_cast<std::size_t>(n));
    BigInt total(0);
    for (auto& v : a) {
      v = BigInt(1 + rng.below(100));
      total += v;
    }
    std::vector<Rational> p;
    for (const auto& v : a) p.emplace_back(v, total);
    const RationalState x(std::move(p));
    const auto chains = standard_chain_family(x);
    for (const Rational& tp : params) {
      const RationalState approx = path_approximant(x, tp);
      t.expect(check_exact_waybelow(approx, x, chains).all_witnessed(),
               "exact-mode approximant not witnessed");
    }
    // Exact antisymmetry of the evidence: no strictly increasing chain
    // prefix ever dominates its own supremum.
    if (!(x == RationalState::uniform(n))) {
      t.expect(!check_exact_waybelow(x, x, chains).all_witnessed(),
               "a state must not be dominated by its strict approximants");
    }
  }
  return t.result("exactness", "exact-mode-approximants");
}

CheckResult refuter_checks(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 1800);
  const std::vector<std::vector<int>> placements{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  for (int s = 0; s < o.exactness_samples; ++s) {
    const auto& placement = placements[s % placements.size()];
    std::vector<double> xv(3);
    xv[placement[0]] = 0.5;
    xv[placement[1]] = 0.5;
    xv[placement[2]] = 0.0;
    const ClassicalState x(std::move(xv));

    // Non-least lower bounds of x are exactly (s, s, 1-2s) with s > 1/3 (up
    // to the same placement).
    const double level = 1.0 / 3.0 + (1.0 / 6.0) * (1e-6 + (1.0 - 1e-6) * rng.uniform01());
    std::vector<double> av(3);
    av[placement[0]] = level;
    av[placement[1]] = level;
    av[placement[2]] = 1.0 - 2.0 * level;
    const ClassicalState a(std::move(av));
    t.expect(bayesian_leq(a, x), "constructed lower bound rejected");

    const auto refutation = classical_waybelow_refuter(a, x);
    t.expect(refutation.has_value(), "non-least lower bound must be refuted");
    if (refutation) {
      t.expect(refutation->certified, "refutation chain prefix must reject a");
      t.expect(bayesian_leq(x, chain_sup(refutation->chain, 40)),
               "refutation chain supremum dominates x");
    }
  }
  const ClassicalState half(std::vector<double>{0.5, 0.5, 0.0});
  t.expect(!classical_waybelow_refuter(ClassicalState::uniform(3), half).has_value(),
           "the least element is not refuted");
  bool raised = false;
  try {
    (void)classical_waybelow_refuter(ClassicalState(std::vector<double>{0.4, 0.3, 0.3}), half);
  } catch (const DomainError& e) {
    raised = e.kind() == "not-a-lower-bound";
  }
  t.expect(raised, "non-lower-bounds must be rejected");
  return t.result("exactness", "degeneracy-refuter");
}

CheckResult chain_sup_checks(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 1900);
  const int samples = std::max(1, o.exactness_samples / 10);
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const ClassicalState x = sample_state(n, rng);
    t.expect(max_coord_gap(chain_sup(constant_chain(x), 20), x) <= 1e-12, "constant chain");
    for (const auto& chain : standard_chain_family(x)) {
      t.expect(max_coord_gap(chain_sup(chain, 40), x) <= 1e-9, "path chain supremum");
    }
  }
  for (int top = 0; top < 3; ++top) {
    const auto chain = degeneracy_chain<double>(top);
    t.expect(max_coord_gap(chain_sup(chain, 40), ClassicalState::pure(3, top)) <= 1e-9,
             "degeneracy chain supremum");
  }
  bool raised = false;
  try {
    // Geometric probe indices are 1, 2, 4, ...; m % 3 alternates on them.
    StateChain<double> broken{"broken",
                              [](std::uint64_t m) {
                                return m % 3 == 1 ? ClassicalState(std::vector<double>{0.7, 0.3})
                                                  : ClassicalState(std::vector<double>{0.5, 0.5});
                              },
                              ClassicalState(std::vector<double>{0.7, 0.3})};
    (void)chain_sup(broken, 10);
  } catch (const DomainError& e) {
    raised = e.kind() == "not-a-chain";
  }
  t.expect(raised, "non-chains must be rejected");
  return t.result("exactness", "chain-suprema");
}

CheckResult decomposition_checks(const CheckOptions& o) {
  Tally t;
  Rng rng(o.seed + 2000);
  for (int s = 0; s < o.exactness_samples; ++s) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const ClassicalState x = sample_state(n, rng);
    const auto d = coordinate_decomposition(x);
    t.expect(max_coord_gap(d.supremum_estimate, x) <= 1e-9, "supremum estimate reconstructs x");
    for (const auto& member : d.members) {
      t.expect(bayesian_leq(member.state, x), "member below the state");
      // Members really are coordinates: points on the line toward the
      // uniform state on their target support.
      std::vector<double> uv(static_cast<std::size_t>(n), 0.0);
      for (int i : member.target_support) {
        uv[static_cast<std::size_t>(i)] = 1.0 / static_cast<double>(member.target_support.size());
      }
      const ClassicalState target(std::move(uv));
      const ClassicalState on_line = line_path(target, member.t);
      t.expect(max_coord_gap(member.state, on_line) <= 1e-12, "member sits on an irreducible line");
    }
    // The estimate stays below sampled upper bounds of x.
    const ClassicalState up =
        mixing_combine(x, ClassicalState::pure(n, argmax_coord(x)), rng.uniform01());
    t.expect(bayesian_leq(d.supremum_estimate, up), "estimate below upper bounds of x");
  }
  // Degenerate inputs.
  const auto bottom = coordinate_decomposition(ClassicalState::uniform(3));
  t.expect(bottom.members.size() == 1 &&
               max_coord_gap(bottom.members.front().state, ClassicalState::uniform(3)) == 0.0,
           "uniform input decomposes into itself");
  const ClassicalState half(std::vector<double>{0.5, 0.5, 0.0});
  const auto irr = coordinate_decomposition(half);
  t.expect(irr.members.size() == 1 && irr.members.front().is_irreducible(),
           "irreducible input decomposes into itself");
  return t.result("exactness", "coordinate-decomposition");
}

}  // namespace

CheckOptions CheckOptions::scaled(int base_samples) const {
  CheckOptions o = *this;
  o.pair_samples = base_samples;
  o.axiom_samples = base_samples;
  o.property_samples = base_samples;
  o.bloch_random = base_samples;
  o.bloch_comparable = std::max(1, base_samples / 10);
  o.quantum_samples = base_samples;
  o.exactness_samples = base_samples;
  return o;
}

std::vector<CheckResult> run_kernel_checks(const CheckOptions& options) {
  return {interval_axioms(options), measurement_monotonicity(options),
          measurement_values(options), derivative_theorem(options), fixpoint_demos(options)};
}

std::vector<CheckResult> run_simplex_checks(const CheckOptions& options) {
  return {decider_equivalence(options),      classical_order_axioms(options),
          classical_extremes(options),       degeneracy_lemma(options),
          mixing_law(options),               shannon_measurement_properties(options),
          projection_monotonicity(options)};
}

std::vector<CheckResult> run_spectra_checks(const CheckOptions& options) {
  return {spectral_order_axioms(options), spectral_extremes(options), bloch_agreement(options),
          von_neumann_properties(options), embedding_checks(options), slice_isomorphism(options)};
}

std::vector<CheckResult> run_logics_checks(const CheckOptions& options) {
  return {irreducible_counts(options), irreducibility_decider(options),
          hasse_dual_isomorphism(options), quantum_logic_checks(options)};
}

std::vector<CheckResult> run_exactness_checks(const CheckOptions& options) {
  return {approximant_challenges(options), exact_mode_challenges(options), refuter_checks(options),
          chain_sup_checks(options), decomposition_checks(options)};
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
  std::vector<CheckResult> all;
  for (auto runner : {run_kernel_checks, run_simplex_checks, run_spectra_checks, run_logics_checks,
                      run_exactness_checks}) {
    auto part = runner(options);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string check_results_to_json(const std::vector<CheckResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    j.push_back({{"suite", r.suite},
                 {"name", r.name},
                 {"passed", r.passed},
                 {"checked", r.checked},
                 {"violations", r.violations},
                 {"detail", r.detail}});
  }
  nlohmann::json doc;
  doc["results"] = std::move(j);
  doc["all_passed"] = all_passed(results);
  return doc.dump(2) + "\n";
}

}  // namespace domainkit
