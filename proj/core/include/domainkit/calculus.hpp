#pragma once

#include <functional>
#include <vector>

#include "domainkit/interval.hpp"

namespace domainkit {

using RealFunction = std::function<double(double)>;

// Pointwise image f([a,b]) computed from the endpoints. Only sound when f is
// monotone or antitone on the interval; a midpoint probe rejects functions
// that fold the interval ("not-monotone").
Interval monotone_image(const RealFunction& f, const Interval& x);

// Iterates the induced interval map starting from `seed`. The seed must be
// invariant, f(seed) ⊆ seed ("not-invariant" otherwise), so the iterates
// form a shrinking chain and every iterate brackets the fixed points of f
// inside the seed.
Interval fixpoint_iterate(const RealFunction& f, const Interval& seed, int steps);

struct DerivativeOptions {
  DerivativeOptions();  // widths 1e-2 .. 1e-8, one decade apart

  std::vector<double> widths;  // strictly decreasing, positive
  double tolerance = 1e-4;     // convergence check on successive estimates
};

// Limit of length-content ratios over shrinking symmetric probes around p:
// the ratio (length of f-image) / (probe width) extrapolated to width zero.
// Equals |f'(p)| whenever f is continuously differentiable near p. Raises
// "no-convergence" when the extrapolated estimates fail to settle.
double informatic_derivative(const RealFunction& f, double p,
                             const DerivativeOptions& options = DerivativeOptions());

}  // namespace domainkit
