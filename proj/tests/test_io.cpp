#include <doctest.h>
#include <json.hpp>

#include <functional>
#include <string>

#include "domainkit/json_io.hpp"
#include "domainkit/svg.hpp"

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

TEST_CASE("classical documents parse in both numeric modes") {
  const StateDocument f = parse_state_document(R"({"kind":"classical","p":[0.5,0.5]})");
  CHECK(f.kind() == "classical");
  CHECK(std::get<ClassicalState>(f.value)[0] == 0.5);

  const StateDocument r = parse_state_document(R"({"kind":"classical","p":[[1,3],[1,3],[1,3]]})");
  CHECK(std::get<RationalState>(r.value) == RationalState::uniform(3));

  CHECK(raises_kind("invariant-violation", [] {
    parse_state_document(R"({"kind":"classical","p":[0.5,0.6]})");
  }));
  CHECK(raises_kind("schema-violation", [] {
    parse_state_document(R"({"kind":"classical","p":[0.5,[1,2]]})");
  }));
  CHECK(raises_kind("schema-violation", [] {
    parse_state_document(R"({"kind":"classical"})");
  }));
  CHECK(raises_kind("malformed-json", [] { parse_state_document("{nope"); }));
  // Unrepresentable numeric literals are malformed, not a crash.
  CHECK(raises_kind("malformed-json", [] {
    parse_state_document(R"({"kind":"classical","p":[1e900,0.5]})");
  }));
  CHECK(raises_kind("schema-violation", [] {
    parse_state_document(R"({"kind":"mystery","p":[1,0]})");
  }));
}

TEST_CASE("density and observable documents") {
  const StateDocument d =
      parse_state_document(R"({"kind":"density","re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]})");
  CHECK(d.kind() == "density");
  CHECK(std::get<DensityMatrix>(d.value).dim() == 2);

  // The failing invariant is named in the message.
  try {
    parse_state_document(R"({"kind":"density","re":[[1.2,0],[0,-0.2]],"im":[[0,0],[0,0]]})");
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.kind() == "invariant-violation");
    CHECK(std::string(e.what()).find("not-positive") != std::string::npos);
  }

  const StateDocument o = parse_state_document(
      R"({"kind":"observable","frame_re":[[1,0],[0,1]],"frame_im":[[0,0],[0,0]]})");
  CHECK(o.kind() == "observable");

  const StateDocument i = parse_state_document(R"({"kind":"interval","lo":1,"hi":3})");
  CHECK(std::get<Interval>(i.value).width() == 2.0);
  CHECK(raises_kind("invariant-violation",
                    [] { parse_state_document(R"({"kind":"interval","lo":3,"hi":1})"); }));
}

TEST_CASE("serialization round-trips") {
  const std::vector<std::string> docs = {
      R"({"kind":"classical","p":[0.125,0.25,0.625]})",
      R"({"kind":"classical","p":[[1,2],[1,3],[1,6]]})",
      R"({"kind":"density","re":[[0.5,0.25],[0.25,0.5]],"im":[[0,0.1],[-0.1,0]]})",
      R"({"kind":"interval","lo":-1.5,"hi":2.25})",
      R"({"kind":"observable","frame_re":[[0,1],[1,0]],"frame_im":[[0,0],[0,0]]})",
  };
  for (const auto& text : docs) {
    const std::string once = serialize_state_document(parse_state_document(text));
    const std::string twice = serialize_state_document(parse_state_document(once));
    CHECK(once == twice);
  }
}

TEST_CASE("hasse serialization") {
  const HasseDiagram h = hasse_classical(3);
  const std::string text = hasse_to_json(h);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("nodes").size() == 7);
  CHECK(j.at("edges").size() == 9);
  // The least element carries the full 1-based support set.
  CHECK(j.at("nodes").at(0).at("support") == nlohmann::json::array({1, 2, 3}));
}

TEST_CASE("updown classification and rendering") {
  const ClassicalState bottom = ClassicalState::uniform(3);
  const ClassicalState e1 = ClassicalState::pure(3, 0);

  // Least element: the whole grid is above (or equal).
  int above = 0, other = 0;
  const int g = 24;
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; i + j <= g; ++j) {
      const ClassicalState y(std::vector<double>{double(i) / g, double(j) / g,
                                                 double(g - i - j) / g});
      const UpdownRegion r = classify_updown(bottom, y);
      (r == UpdownRegion::kAbove || r == UpdownRegion::kEquals) ? ++above : ++other;
    }
  }
  CHECK(other == 0);
  CHECK(above == (g + 1) * (g + 2) / 2);

  // Maximal element: nothing else above it.
  int strictly_above = 0;
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; i + j <= g; ++j) {
      const ClassicalState y(std::vector<double>{double(i) / g, double(j) / g,
                                                 double(g - i - j) / g});
      if (classify_updown(e1, y) == UpdownRegion::kAbove) ++strictly_above;
    }
  }
  CHECK(strictly_above == 0);

  // Degenerate target: the rendered down-set hugs the tie line.
  const ClassicalState half(std::vector<double>{0.5, 0.5, 0.0});
  int below = 0;
  for (int i = 0; i <= g; ++i) {
    for (int j = 0; i + j <= g; ++j) {
      const ClassicalState y(std::vector<double>{double(i) / g, double(j) / g,
                                                 double(g - i - j) / g});
      if (classify_updown(half, y) == UpdownRegion::kBelow) {
        ++below;
        CHECK(i == j);
      }
    }
  }
  CHECK(below > 0);

  UpdownPlotOptions options;
  options.grid = 12;
  const std::string svg = emit_updown_svg(half, options);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("circle") != std::string::npos);
  CHECK(svg == emit_updown_svg(half, options));  // byte-deterministic

  CHECK(raises_kind("resolution-too-large", [&] {
    UpdownPlotOptions big;
    big.grid = 2001;
    emit_updown_svg(half, big);
  }));
  CHECK(raises_kind("dimension-mismatch",
                    [] { emit_updown_svg(ClassicalState::uniform(4), UpdownPlotOptions{}); }));
}
