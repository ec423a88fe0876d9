#pragma once

#include <string>
#include <variant>

#include "domainkit/interval.hpp"
#include "domainkit/logics.hpp"
#include "domainkit/simplex.hpp"
#include "domainkit/spectra.hpp"

namespace domainkit {

// A parsed input document. Classical states keep their numeric mode:
// rational entries ([num, den] integer pairs) parse to exact states.
struct StateDocument {
  std::variant<ClassicalState, RationalState, DensityMatrix, Interval, Observable> value;

  std::string kind() const;
};

// Parses and validates a JSON document. Errors: "malformed-json",
// "schema-violation", and "invariant-violation" (naming the violated
// invariant and residual in the message).
StateDocument parse_state_document(const std::string& text);

std::string serialize_state_document(const StateDocument& doc);

std::string hasse_to_json(const HasseDiagram& h);

}  // namespace domainkit
