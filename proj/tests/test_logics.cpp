#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "domainkit/logics.hpp"
#include "domainkit/rng.hpp"

using namespace domainkit;

namespace {

bool raises_kind(const char* kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("irreducible enumeration") {
  const auto two = irreducibles_classical(2);
  REQUIRE(two.size() == 3);
  std::set<std::vector<Rational>> expected{
      {Rational(1), Rational(0)},
      {Rational(0), Rational(1)},
      {Rational(1, 2), Rational(1, 2)},
  };
  std::set<std::vector<Rational>> actual;
  for (const auto& s : two) actual.insert(s.coords());
  CHECK(actual == expected);

  CHECK(irreducibles_classical(3).size() == 7);
  CHECK(irreducibles_classical(4).size() == 15);
  for (const auto& s : irreducibles_classical(4)) {
    const auto sup = support(s);
    for (int i : sup) CHECK(s[i] == Rational(1, sup.size()));
  }
  CHECK(raises_kind("dimension-too-large", [] { irreducibles_classical(11); }));
}

TEST_CASE("irreducibility decider from the infimum definition") {
  Rng rng(13);
  CHECK(is_irreducible_classical(RationalState::uniform(4), rng, 100));
  CHECK(is_irreducible_classical(RationalState({Rational(1, 2), Rational(1, 2), Rational(0)}),
                                 rng, 100));
  CHECK_FALSE(is_irreducible_classical(
      RationalState({Rational(3, 5), Rational(2, 5), Rational(0)}), rng, 100));
  CHECK(is_irreducible_classical(RationalState::pure(3, 2), rng, 100));
}

TEST_CASE("hasse diagrams realize the dual powerset lattice") {
  const HasseDiagram two = hasse_classical(2);
  CHECK(two.nodes.size() == 3);
  CHECK(two.edges.size() == 2);

  const HasseDiagram three = hasse_classical(3);
  CHECK(three.nodes.size() == 7);
  // Dual powerset covering: each support of size k >= 2 covers its k
  // one-smaller subsets; 6 + 3 edges at three outcomes.
  CHECK(three.edges.size() == 9);
  for (const auto& [lo, hi] : three.edges) {
    CHECK(three.supports[lo].size() == three.supports[hi].size() + 1);
    CHECK(std::includes(three.supports[lo].begin(), three.supports[lo].end(),
                        three.supports[hi].begin(), three.supports[hi].end()));
    CHECK(bayesian_leq(three.nodes[lo], three.nodes[hi]));
  }
  // Acyclic by grading; irreflexive by construction.
  for (const auto& [lo, hi] : three.edges) CHECK(lo != hi);

  const std::string dot = hasse_to_dot(two);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("{1,2}") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("uniform projection states") {
  const int n = 3;
  std::vector<CVector> full;
  for (int i = 0; i < n; ++i) {
    CVector v = CVector::Zero(n);
    v[i] = 1.0;
    full.push_back(v);
  }
  const DensityMatrix bottom = uniform_projection_state(full);
  CHECK((bottom.matrix() - CMatrix::Identity(n, n) / 3.0).norm() <= 1e-12);

  const DensityMatrix pure = uniform_projection_state({full[1]});
  CHECK(pure.is_pure());

  const DensityMatrix plane = uniform_projection_state({full[0], full[2]});
  const MonotoneState spec = spectrum_descending(plane);
  CHECK(spec[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(spec[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(spec[2] == doctest::Approx(0.0).epsilon(1e-10));

  CVector skew = full[0] + full[1];
  CHECK(raises_kind("not-orthonormal", [&] { uniform_projection_state({skew}); }));
}

TEST_CASE("subspace inclusion matches the spectral order") {
  Rng rng(29);
  // Explicit nested pair: a line inside a plane.
  const CMatrix u = sample_unitary(3, rng);
  const DensityMatrix line = uniform_projection_state({u.col(0)});
  const DensityMatrix plane = uniform_projection_state({u.col(0), u.col(1)});
  CHECK(spectral_leq(plane, line));
  CHECK_FALSE(spectral_leq(line, plane));

  // The whole space is the least element.
  std::vector<CVector> all{u.col(0), u.col(1), u.col(2)};
  const DensityMatrix whole = uniform_projection_state(all);
  CHECK(spectral_leq(whole, line));
  CHECK(spectral_leq(whole, plane));

  for (int n = 2; n <= 4; ++n) {
    const ConsistencyReport report = quantum_logic_consistency(n, 50, rng);
    CHECK(report.passed());
    CHECK(report.nested_checked == 50);
    CHECK(report.incomparable_checked == 50);
  }
  CHECK(raises_kind("dimension-too-large", [&] { quantum_logic_consistency(5, 1, rng); }));
}
