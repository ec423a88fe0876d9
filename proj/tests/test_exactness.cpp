#include <doctest.h>

#include <cmath>
#include <functional>

#include "domainkit/exactness.hpp"
#include "domainkit/rng.hpp"

using namespace domainkit;

namespace {

ClassicalState cs(std::vector<double> v) { return ClassicalState(std::move(v)); }

bool raises_kind(const char* kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.kind() == kind;
  }
  return false;
}

double max_gap(const ClassicalState& a, const ClassicalState& b) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("chain suprema") {
  Rng rng(3);
  const ClassicalState x = sample_state(4, rng);
  CHECK(max_gap(chain_sup(constant_chain(x), 16), x) <= 1e-12);

  for (const auto& chain : standard_chain_family(x)) {
    CHECK(max_gap(chain_sup(chain, 40), x) <= 1e-9);
  }

  const auto deg = degeneracy_chain<double>(0);
  CHECK(max_gap(chain_sup(deg, 40), ClassicalState::pure(3, 0)) <= 1e-9);

  // Exact mode: all arithmetic rational, certified against the declared
  // limit at the same tolerance.
  const auto deg_exact = degeneracy_chain<Rational>(1);
  const RationalState sup = chain_sup(deg_exact, 40);
  for (int i = 0; i < 3; ++i) {
    const Rational gap = sup[i] - RationalState::pure(3, 1)[i];
    CHECK((gap < Rational(1, 1000000000) && gap > Rational(-1, 1000000000)));
  }

  StateChain<double> lying{"lying", [x](std::uint64_t) { return x; },
                           ClassicalState::uniform(4)};
  CHECK(raises_kind("limit-mismatch", [&] { chain_sup(lying, 10); }));
}

TEST_CASE("path approximants") {
  const ClassicalState x = cs({0.5, 0.5, 0.0});
  CHECK(path_approximant(x, 0.0) == ClassicalState::uniform(3));
  const ClassicalState mid = path_approximant(x, 0.5);
  CHECK(mid[0] == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK(mid[1] == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK(mid[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(raises_kind("t-out-of-range", [&] { path_approximant(x, 1.0); }));
}

TEST_CASE("way-below evidence against chain families") {
  Rng rng(9);
  const ClassicalState x = sample_state(3, rng);
  const auto chains = standard_chain_family(x);

  const auto bottom_evidence = check_exact_waybelow(ClassicalState::uniform(3), x, chains);
  CHECK(bottom_evidence.all_witnessed());
  for (const auto& w : bottom_evidence.witnesses) CHECK(w.index == 1);

  CHECK(check_exact_waybelow(path_approximant(x, 0.9), x, chains).all_witnessed());

  // In exact arithmetic a strictly increasing chain never reaches its
  // supremum, so the supremum is not way below itself along it.
  const RationalState rx({Rational(3, 10), Rational(3, 10), Rational(2, 5)});
  const auto exact_chains = standard_chain_family(rx);
  CHECK_FALSE(check_exact_waybelow(rx, rx, exact_chains).all_witnessed());
  CHECK(check_exact_waybelow(path_approximant(rx, Rational(9, 10)), rx, exact_chains)
            .all_witnessed());

  CHECK(raises_kind("limit-mismatch", [&] {
    check_exact_waybelow(ClassicalState::uniform(3), ClassicalState::uniform(3), chains);
  }));
}

TEST_CASE("degeneracy refuter") {
  const ClassicalState target = cs({0.5, 0.5, 0.0});

  const auto refutation = classical_waybelow_refuter(cs({0.4, 0.4, 0.2}), target);
  REQUIRE(refutation.has_value());
  CHECK(refutation->certified);
  CHECK(refutation->checked_indices.size() == 6);
  // The chain's supremum dominates the target.
  CHECK(bayesian_leq(target, chain_sup(refutation->chain, 40)));

  CHECK_FALSE(classical_waybelow_refuter(ClassicalState::uniform(3), target).has_value());
  CHECK(raises_kind("not-a-lower-bound",
                    [&] { classical_waybelow_refuter(cs({0.4, 0.3, 0.3}), target); }));
  CHECK(raises_kind("invalid-argument",
                    [&] { classical_waybelow_refuter(cs({0.4, 0.4, 0.2}), cs({0.6, 0.4, 0.0})); }));

  // Permuted targets work the same way.
  const ClassicalState permuted = cs({0.0, 0.5, 0.5});
  const auto r2 = classical_waybelow_refuter(cs({0.2, 0.4, 0.4}), permuted);
  REQUIRE(r2.has_value());
  CHECK(r2->certified);
}

TEST_CASE("coordinate decomposition") {
  const auto bottom = coordinate_decomposition(ClassicalState::uniform(3));
  REQUIRE(bottom.members.size() == 1);
  CHECK(bottom.members.front().is_irreducible());
  CHECK(bottom.supremum_estimate == ClassicalState::uniform(3));

  const auto irr = coordinate_decomposition(cs({0.5, 0.5, 0.0}));
  REQUIRE(irr.members.size() == 1);
  CHECK(irr.members.front().is_irreducible());
  CHECK(max_gap(irr.members.front().state, cs({0.5, 0.5, 0.0})) == 0.0);

  const ClassicalState x = cs({0.5, 0.3, 0.2});
  const auto d = coordinate_decomposition(x);
  CHECK(max_gap(d.supremum_estimate, x) <= 1e-12);
  for (const auto& member : d.members) {
    CHECK(bayesian_leq(member.state, x));
  }
  REQUIRE(d.members.size() == 2);
  // First member binds the top ratio with equality: t = 2/11 on the e1 line.
  CHECK(d.members[0].t == doctest::Approx(2.0 / 11.0).epsilon(1e-12));
  CHECK(d.members[0].state[0] == doctest::Approx(5.0 / 11.0).epsilon(1e-12));

  // Exact-mode reconstruction is exact.
  const RationalState rx({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const auto rd = coordinate_decomposition(rx);
  CHECK(rd.supremum_estimate == rx);
  for (const auto& member : rd.members) CHECK(bayesian_leq(member.state, rx));

  // Unsorted input: members live in the original coordinates.
  const ClassicalState shuffled = cs({0.2, 0.5, 0.3});
  const auto sd = coordinate_decomposition(shuffled);
  CHECK(max_gap(sd.supremum_estimate, shuffled) <= 1e-12);
  for (const auto& member : sd.members) CHECK(bayesian_leq(member.state, shuffled));
}
