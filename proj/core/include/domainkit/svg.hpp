#pragma once

#include <string>

#include "domainkit/simplex.hpp"

namespace domainkit {

enum class UpdownRegion { kAbove, kBelow, kEquals, kNeither };

// Order position of y relative to x under the Bayesian order.
UpdownRegion classify_updown(const ClassicalState& x, const ClassicalState& y);

struct UpdownPlotOptions {
  int grid = 60;        // barycentric subdivisions per edge, <= 2000
  double size = 720.0;  // width of the drawing in px
};

// Renders the three-outcome simplex with every grid point classified into
// the up-set of x, the down-set of x, or neither; x and the least element
// are marked. Output is deterministic byte-for-byte for fixed inputs.
std::string emit_updown_svg(const ClassicalState& x,
                            const UpdownPlotOptions& options = UpdownPlotOptions());

}  // namespace domainkit
