#include "domainkit/json_io.hpp"

#include <nlohmann/json.hpp>

#include <limits>

namespace domainkit {

namespace {

using nlohmann::json;

// Construction raises module-specific kinds (not-positive, bad-trace, ...);
// at the document boundary they surface as invariant violations that name
// the failed invariant.
template <class Fn>
auto wrap_invariant(Fn&& fn) {
  try {
    return fn();
  } catch (const DomainError& e) {
    raise("invariant-violation", e.what());
  }
}

json require_field(const json& j, const char* name) {
  if (!j.contains(name)) raise("schema-violation", std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::vector<double>> real_grid(const json& j, const char* name) {
  const json g = require_field(j, name);
  if (!g.is_array() || g.empty()) raise("schema-violation", std::string(name) + " must be a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : g) {
    if (!row.is_array()) raise("schema-violation", std::string(name) + " rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) raise("schema-violation", std::string(name) + " entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) raise("schema-violation", std::string(name) + " must be square");
  }
  return rows;
}

CMatrix complex_matrix(const json& j, const char* re_name, const char* im_name) {
  const auto re = real_grid(j, re_name);
  const auto im = real_grid(j, im_name);
  if (im.size() != re.size()) raise("schema-violation", "re and im shapes disagree");
  const Eigen::Index n = static_cast<Eigen::Index>(re.size());
  CMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = std::complex<double>(re[r][c], im[r][c]);
    }
  }
  return m;
}

StateDocument parse_classical(const json& j) {
  const json p = require_field(j, "p");
  if (!p.is_array() || p.size() < 2) {
    raise("schema-violation", "'p' must be an array with at least two entries");
  }
  bool all_numbers = true;
  bool all_pairs = true;
  for (const auto& v : p) {
    if (!v.is_number()) all_numbers = false;
    const bool pair = v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
                      v[1].is_number_integer();
    if (!pair) all_pairs = false;
  }
  if (all_numbers) {
    std::vector<double> coords;
    for (const auto& v : p) coords.push_back(v.get<double>());
    return {wrap_invariant([&] { return ClassicalState(std::move(coords)); })};
  }
  if (all_pairs) {
    std::vector<Rational> coords;
    for (const auto& v : p) {
      const long long den = v[1].get<long long>();
      if (den == 0) raise("schema-violation", "rational entry with zero denominator");
      coords.push_back(rational(v[0].get<long long>(), den));
    }
    return {wrap_invariant([&] { return RationalState(std::move(coords)); })};
  }
  raise("schema-violation", "'p' entries must be all numbers or all [num, den] integer pairs");
}

json classical_to_json(const ClassicalState& x) {
  json j;
  j["kind"] = "classical";
  j["p"] = x.coords();
  return j;
}

json rational_to_json(const RationalState& x) {
  json j;
  j["kind"] = "classical";
  json p = json::array();
  for (const Rational& r : x.coords()) {
    const BigInt num = rational_num(r);
    const BigInt den = rational_den(r);
    if (num < std::numeric_limits<long long>::min() || num > std::numeric_limits<long long>::max() ||
        den > std::numeric_limits<long long>::max()) {
      raise("schema-violation", "rational entry does not fit a 64-bit pair");
    }
    p.push_back(json::array({num.convert_to<long long>(), den.convert_to<long long>()}));
  }
  j["p"] = std::move(p);
  return j;
}

json matrix_to_json(const CMatrix& m, const char* re_name, const char* im_name, json j) {
  const Eigen::Index n = m.rows();
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < n; ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < n; ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j[re_name] = std::move(re);
  j[im_name] = std::move(im);
  return j;
}

}  // namespace

std::string StateDocument::kind() const {
  if (std::holds_alternative<ClassicalState>(value) || std::holds_alternative<RationalState>(value)) {
    return "classical";
  }
  if (std::holds_alternative<DensityMatrix>(value)) return "density";
  if (std::holds_alternative<Interval>(value)) return "interval";
  return "observable";
}

StateDocument parse_state_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    // Covers syntax errors and unrepresentable numbers alike.
    raise("malformed-json", e.what());
  }
  try {
    if (!j.is_object()) raise("schema-violation", "document must be a JSON object");
    const json kind = require_field(j, "kind");
    if (!kind.is_string()) raise("schema-violation", "'kind' must be a string");
    const std::string k = kind.get<std::string>();

    if (k == "classical") return parse_classical(j);
    if (k == "density") {
      CMatrix m = complex_matrix(j, "re", "im");
      return {wrap_invariant([&] { return DensityMatrix::validated(std::move(m)); })};
    }
    if (k == "interval") {
      const json lo = require_field(j, "lo");
      const json hi = require_field(j, "hi");
      if (!lo.is_number() || !hi.is_number()) raise("schema-violation", "'lo'/'hi' must be numbers");
      return {wrap_invariant([&] { return Interval(lo.get<double>(), hi.get<double>()); })};
    }
    if (k == "observable") {
      CMatrix m = complex_matrix(j, "frame_re", "frame_im");
      return {wrap_invariant([&] { return Observable::from_frame(std::move(m)); })};
    }
    raise("schema-violation", "unknown kind '" + k + "'");
  } catch (const json::exception& e) {
    raise("schema-violation", e.what());
  }
}

std::string serialize_state_document(const StateDocument& doc) {
  json j;
  if (const auto* c = std::get_if<ClassicalState>(&doc.value)) {
    j = classical_to_json(*c);
  } else if (const auto* r = std::get_if<RationalState>(&doc.value)) {
    j = rational_to_json(*r);
  } else if (const auto* d = std::get_if<DensityMatrix>(&doc.value)) {
    j = matrix_to_json(d->matrix(), "re", "im", json{{"kind", "density"}});
  } else if (const auto* i = std::get_if<Interval>(&doc.value)) {
    j = json{{"kind", "interval"}, {"lo", i->lo()}, {"hi", i->hi()}};
  } else if (const auto* o = std::get_if<Observable>(&doc.value)) {
    j = matrix_to_json(o->frame(), "frame_re", "frame_im", json{{"kind", "observable"}});
  }
  return j.dump(2) + "\n";
}

std::string hasse_to_json(const HasseDiagram& h) {
  json nodes = json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    json node;
    node["p"] = rational_to_json(h.nodes[i])["p"];
    json sup = json::array();
    for (int s : h.supports[i]) sup.push_back(s + 1);  // 1-based outcome labels
    node["support"] = std::move(sup);
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const auto& [lo, hi] : h.edges) edges.push_back(json::array({lo, hi}));
  json j;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

}  // namespace domainkit
