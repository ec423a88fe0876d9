#pragma once

#include <string>
#include <utility>
#include <vector>

#include "domainkit/rng.hpp"
#include "domainkit/simplex.hpp"
#include "domainkit/spectra.hpp"

namespace domainkit {

// All states reachable from the least element by repeated zero-reinserting
// projections, enumerated exactly. These are precisely the irreducible
// elements: the uniform distributions on nonempty outcome sets, 2^n - 1 of
// them. Capped at n = 10.
std::vector<RationalState> irreducibles_classical(int n);

// Decides irreducibility from the definition: x equals the infimum of the
// pure states above it. The candidate infimum (uniform on the set of pure
// states above x) is certified to be the greatest lower bound against every
// uniform-support state plus `certification_samples` sampled lower bounds.
bool is_irreducible_classical(const RationalState& x, Rng& rng, int certification_samples = 1000);

// Covering-relation graph of the irreducible elements under the Bayesian
// order. Node supports are 0-based outcome sets; each edge points from the
// lower node to the one covering it.
struct HasseDiagram {
  std::vector<RationalState> nodes;
  std::vector<std::vector<int>> supports;
  std::vector<std::pair<int, int>> edges;  // (lower, upper)
};

HasseDiagram hasse_classical(int n);

// DOT rendering; nodes are labeled by their (1-based) support sets.
std::string hasse_to_dot(const HasseDiagram& h);

// Normalized projection onto the span of an orthonormal family: P / tr(P).
DensityMatrix uniform_projection_state(const std::vector<CVector>& basis);

// Sampled consistency of the quantum half of the logic correspondence:
// on normalized subspace projections the spectral order must match reverse
// subspace inclusion.
struct ConsistencyReport {
  int nested_checked = 0;
  int nested_passed = 0;
  int incomparable_checked = 0;
  int incomparable_passed = 0;
  bool passed() const {
    return nested_checked == nested_passed && incomparable_checked == incomparable_passed;
  }
};

ConsistencyReport quantum_logic_consistency(int n, int samples, Rng& rng);

}  // namespace domainkit
