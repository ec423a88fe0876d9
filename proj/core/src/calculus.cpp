#include "domainkit/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace domainkit {

namespace {

// Slack for the midpoint-orientation probe; scaled to the image magnitude so
// flat functions do not trip it on rounding noise.
double orientation_slack(double flo, double fhi) {
  return 1e-12 * std::max({1.0, std::abs(flo), std::abs(fhi)});
}

}  // namespace

Interval monotone_image(const RealFunction& f, const Interval& x) {
  const double flo = f(x.lo());
  const double fhi = f(x.hi());
  const double fmid = f(x.midpoint());
  const double slack = orientation_slack(flo, fhi);
  if (fmid < std::min(flo, fhi) - slack || fmid > std::max(flo, fhi) + slack) {
    raise("not-monotone",
          "midpoint image " + std::to_string(fmid) + " escapes the endpoint span [" +
              std::to_string(std::min(flo, fhi)) + ", " + std::to_string(std::max(flo, fhi)) +
              "]");
  }
  return Interval(std::min(flo, fhi), std::max(flo, fhi));
}

Interval fixpoint_iterate(const RealFunction& f, const Interval& seed, int steps) {
  if (steps < 0) raise("bad-flags", "steps must be nonnegative");
  Interval image = monotone_image(f, seed);
  if (!interval_leq(seed, image)) {
    raise("not-invariant", "f(seed) is not contained in seed");
  }
  Interval current = seed;
  for (int k = 0; k < steps; ++k) {
    current = monotone_image(f, current);
  }
  return current;
}

DerivativeOptions::DerivativeOptions() {
  for (int k = 2; k <= 8; ++k) widths.push_back(std::pow(10.0, -k));
}

double informatic_derivative(const RealFunction& f, double p, const DerivativeOptions& options) {
  if (options.widths.size() < 2) raise("bad-flags", "need at least two probe widths");
  for (std::size_t i = 0; i < options.widths.size(); ++i) {
    if (options.widths[i] <= 0.0 || (i > 0 && options.widths[i] >= options.widths[i - 1])) {
      raise("bad-flags", "probe widths must be positive and strictly decreasing");
    }
  }

  // Raw ratio estimates: content of the image over content of the probe.
  std::vector<double> raw;
  raw.reserve(options.widths.size());
  for (const double w : options.widths) {
    const Interval probe(p - 0.5 * w, p + 0.5 * w);
    const Interval image = monotone_image(f, probe);
    raw.push_back(image.width() / w);
  }

  // One Richardson step per pair; for a symmetric probe the ratio error is
  // O(w^2), so the combined estimates converge fast enough that the last two
  // must agree within the tolerance.
  std::vector<double> refined;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const double r = options.widths[i - 1] / options.widths[i];
    refined.push_back(raw[i] + (raw[i] - raw[i - 1]) / (r * r - 1.0));
  }
  const double last = refined.back();
  const double prev = refined[refined.size() - 2];
  if (std::abs(last - prev) > options.tolerance) {
    raise("no-convergence", "estimates " + std::to_string(prev) + " and " + std::to_string(last) +
                                " disagree beyond tolerance at the smallest width");
  }
  return last;
}

}  // namespace domainkit
