#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domainkit/simplex.hpp"

namespace domainkit {

// Increasing chain of states indexed from 1, with a declared limit. The
// generator is a pure function of the index; evaluation schedules are chosen
// by the consumers.
template <class Scalar>
struct StateChain {
  std::string name;
  std::function<BasicState<Scalar>(std::uint64_t)> at;
  BasicState<Scalar> limit;
};

template <class Scalar>
StateChain<Scalar> constant_chain(const BasicState<Scalar>& x);

// Chain along the straight-line path toward x, with parameter schedule
// rate(m) increasing to 1.
template <class Scalar>
StateChain<Scalar> path_chain(const BasicState<Scalar>& x,
                              std::function<Scalar(std::uint64_t)> rate, std::string name);

// Five path chains toward x with different polynomial rates; the standard
// family every exact-way-below claim is challenged against.
template <class Scalar>
std::vector<StateChain<Scalar>> standard_chain_family(const BasicState<Scalar>& x);

// The three-outcome chain (1 - 2/m, 1/m, 1/m) (coordinates permuted so that
// `top` carries the large entry), increasing to the pure state at `top` while
// keeping its two small coordinates tied.
template <class Scalar>
StateChain<Scalar> degeneracy_chain(int top);

// Supremum of the evaluated prefix: the chain is probed at geometrically
// spaced indices 2^0 .. 2^(depth-1), certified to be increasing
// ("not-a-chain" otherwise), and the coordinatewise limit is extrapolated.
// The estimate must be an upper bound of the prefix and match the declared
// limit within 1e-9 ("limit-mismatch" otherwise).
template <class Scalar>
BasicState<Scalar> chain_sup(const StateChain<Scalar>& c, int depth = 40);

// Point at parameter t < 1 on the path toward x; an exact-way-below witness
// of x. Raises "t-out-of-range" at t >= 1.
template <class Scalar>
BasicState<Scalar> path_approximant(const BasicState<Scalar>& x, const Scalar& t);

struct ChainWitness {
  std::string chain;
  bool found = false;
  std::uint64_t index = 0;  // witnessing chain index when found
};

struct WaybelowEvidence {
  std::vector<ChainWitness> witnesses;
  bool all_witnessed() const {
    for (const auto& w : witnesses) {
      if (!w.found) return false;
    }
    return !witnesses.empty();
  }
};

// Challenges "a is way below x" against declared chains with supremum x: for
// each chain, scans a geometric prefix for an element dominating a. Passing
// every chain is evidence, not proof; a failure is a counterexample for that
// chain's prefix. Raises "limit-mismatch" when a chain's declared limit is
// not x.
template <class Scalar>
WaybelowEvidence check_exact_waybelow(const BasicState<Scalar>& a, const BasicState<Scalar>& x,
                                      const std::vector<StateChain<Scalar>>& chains,
                                      int prefix_depth = 24);

// Counterexample chain for classical way-below at the degenerate target
// (1/2, 1/2, 0) (any coordinate permutation): for every lower bound a of x
// other than the least element, returns an increasing chain whose supremum
// dominates x yet none of whose elements dominates a — the tied coordinates
// of the chain force a tie a cannot have. Returns nothing when a is the
// least element. Raises "not-a-lower-bound" when a is not below x.
struct Refutation {
  StateChain<double> chain;
  std::vector<std::uint64_t> checked_indices;
  bool certified = false;  // decider rejected a ⊑ chain(m) at every checked index
};

std::optional<Refutation> classical_waybelow_refuter(const ClassicalState& a,
                                                     const ClassicalState& x);

// An irreducible element or a path approximant of one: a state on the line
// from the least element to the uniform state on `target_support`, at
// parameter t (t = 1 is the irreducible itself).
template <class Scalar>
struct Coordinate {
  BasicState<Scalar> state;
  std::vector<int> target_support;
  Scalar t;

  bool is_irreducible() const { return t == Scalar(1); }
};

template <class Scalar>
struct Decomposition {
  std::vector<Coordinate<Scalar>> members;
  BasicState<Scalar> supremum_estimate;
};

// Decomposes x into coordinates below it, one per strict descent in the
// sorted profile, and rebuilds x as their least upper bound (computed on the
// shared monotone alignment via consecutive-ratio minima).
template <class Scalar>
Decomposition<Scalar> coordinate_decomposition(const BasicState<Scalar>& x);

}  // namespace domainkit
