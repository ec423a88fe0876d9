#include "domainkit/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace domainkit {

namespace {

constexpr const char* kAboveColor = "#2b6cb0";
constexpr const char* kBelowColor = "#dd6b20";
constexpr const char* kNeitherColor = "#e2e8f0";

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

UpdownRegion classify_updown(const ClassicalState& x, const ClassicalState& y) {
  const bool up = bayesian_leq(x, y);
  const bool down = bayesian_leq(y, x);
  if (up && down) return UpdownRegion::kEquals;
  if (up) return UpdownRegion::kAbove;
  if (down) return UpdownRegion::kBelow;
  return UpdownRegion::kNeither;
}

std::string emit_updown_svg(const ClassicalState& x, const UpdownPlotOptions& options) {
  if (x.dim() != 3) raise("dimension-mismatch", "the up/down plot renders three outcomes");
  if (options.grid < 1 || options.grid > 2000) {
    raise("resolution-too-large", "grid must be in [1, 2000]");
  }

  const double w = options.size;
  const double pad = 0.06 * w;
  const double tri_h = (w - 2.0 * pad) * 0.8660254037844386;
  const double h = tri_h + 2.0 * pad;
  // Triangle corners: outcome 1 on top, 2 bottom-left, 3 bottom-right.
  const double ax = 0.5 * w, ay = pad;
  const double bx = pad, by = pad + tri_h;
  const double cx = w - pad, cy = pad + tri_h;

  auto place = [&](const ClassicalState& s) {
    return std::pair<double, double>{s[0] * ax + s[1] * bx + s[2] * cx,
                                     s[0] * ay + s[1] * by + s[2] * cy};
  };

  const int g = options.grid;
  const double dot = 0.5 * (w - 2.0 * pad) / static_cast<double>(g);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w) << "\" height=\""
      << fmt2(h) << "\" viewBox=\"0 0 " << fmt2(w) << " " << fmt2(h) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<polygon points=\"" << fmt2(ax) << "," << fmt2(ay) << " " << fmt2(bx) << "," << fmt2(by)
      << " " << fmt2(cx) << "," << fmt2(cy) << "\" fill=\"none\" stroke=\"#444\"/>\n";

  for (int i = 0; i <= g; ++i) {
    for (int j = 0; j + i <= g; ++j) {
      const int k = g - i - j;
      const ClassicalState y(std::vector<double>{static_cast<double>(i) / g,
                                                 static_cast<double>(j) / g,
                                                 static_cast<double>(k) / g});
      const UpdownRegion region = classify_updown(x, y);
      const char* color = kNeitherColor;
      if (region == UpdownRegion::kAbove) color = kAboveColor;
      if (region == UpdownRegion::kBelow) color = kBelowColor;
      if (region == UpdownRegion::kEquals) color = "#000000";
      const auto [px, py] = place(y);
      svg << "<circle cx=\"" << fmt2(px) << "\" cy=\"" << fmt2(py) << "\" r=\"" << fmt2(dot)
          << "\" fill=\"" << color << "\"/>\n";
    }
  }

  const auto [xx, xy] = place(x);
  svg << "<circle cx=\"" << fmt2(xx) << "\" cy=\"" << fmt2(xy)
      << "\" r=\"" << fmt2(2.2 * dot) << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  const auto [ox, oy] = place(ClassicalState::uniform(3));
  svg << "<circle cx=\"" << fmt2(ox) << "\" cy=\"" << fmt2(oy)
      << "\" r=\"" << fmt2(1.6 * dot)
      << "\" fill=\"none\" stroke=\"#666\" stroke-width=\"1.5\" stroke-dasharray=\"3,2\"/>\n";

  svg << "<text x=\"" << fmt2(ax) << "\" y=\"" << fmt2(ay - 8.0)
      << "\" text-anchor=\"middle\" font-size=\"14\">e1</text>\n";
  svg << "<text x=\"" << fmt2(bx - 4.0) << "\" y=\"" << fmt2(by + 16.0)
      << "\" text-anchor=\"end\" font-size=\"14\">e2</text>\n";
  svg << "<text x=\"" << fmt2(cx + 4.0) << "\" y=\"" << fmt2(cy + 16.0)
      << "\" text-anchor=\"start\" font-size=\"14\">e3</text>\n";
  svg << "<text x=\"" << fmt2(pad) << "\" y=\"" << fmt2(pad * 0.6) << "\" font-size=\"13\">"
      << "<tspan fill=\"" << kAboveColor << "\">above x</tspan>"
      << "  <tspan fill=\"" << kBelowColor << "\">below x</tspan>"
      << "  <tspan fill=\"#888\">incomparable</tspan></text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace domainkit
