#pragma once

#include <string>
#include <vector>

#include "harmon/graph.hpp"

namespace harmon {

struct LintViolation {
  Term subject;
  std::string message;

  friend bool operator==(const LintViolation&, const LintViolation&) = default;
};

// Shape checks over the measurement pattern. Every subject typed
// sosa:Observation needs exactly one sosa:hasResult, sosa:observedProperty
// and sosa:hasFeatureOfInterest, and exactly one sosa:resultTime whose
// object is a valid xsd:dateTime literal. Every subject typed
// qudt:QuantityValue needs exactly one qudt:numericValue (a literal) and
// exactly one qudt:unit (an IRI). Untyped subjects are never checked.
// Violations come back sorted by subject, rules in the order above.
std::vector<LintViolation> lint_graph(const Graph& graph);

}  // namespace harmon
