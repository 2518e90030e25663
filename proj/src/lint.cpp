#include "harmon/lint.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "harmon/patterns.hpp"
#include "harmon/serialize.hpp"
#include "harmon/vocab.hpp"

namespace harmon {

namespace {

struct SubjectShape {
  const Term* subject = nullptr;
  bool is_observation = false;
  bool is_quantity_value = false;
  std::size_t has_result = 0;
  std::size_t observed_property = 0;
  std::size_t feature_of_interest = 0;
  std::vector<const Term*> result_times;
  std::vector<const Term*> numeric_values;
  std::vector<const Term*> units;
};

void require_one(std::vector<LintViolation>& out, const Term& subject,
                 std::size_t found, std::string_view predicate) {
  if (found != 1) {
    out.push_back({subject, "expected exactly 1 " + std::string(predicate) +
                                ", found " + std::to_string(found)});
  }
}

}  // namespace

std::vector<LintViolation> lint_graph(const Graph& graph) {
  // Keyed by the subject's N-Triples form so the report order is stable.
  std::map<std::string, SubjectShape> shapes;
  auto shape_of = [&shapes](const Term& subject) -> SubjectShape& {
    SubjectShape& shape = shapes[to_ntriples(subject)];
    shape.subject = &subject;
    return shape;
  };

  for (const Triple& triple : graph) {
    const Iri& p = as_iri(triple.predicate());
    const Term& o = triple.object();
    if (p == vocab::rdf_type()) {
      if (is_iri(o) && as_iri(o) == vocab::sosa_Observation()) {
        shape_of(triple.subject()).is_observation = true;
      } else if (is_iri(o) && as_iri(o) == vocab::qudt_QuantityValue()) {
        shape_of(triple.subject()).is_quantity_value = true;
      }
    } else if (p == vocab::sosa_hasResult()) {
      ++shape_of(triple.subject()).has_result;
    } else if (p == vocab::sosa_observedProperty()) {
      ++shape_of(triple.subject()).observed_property;
    } else if (p == vocab::sosa_hasFeatureOfInterest()) {
      ++shape_of(triple.subject()).feature_of_interest;
    } else if (p == vocab::sosa_resultTime()) {
      shape_of(triple.subject()).result_times.push_back(&triple.object());
    } else if (p == vocab::qudt_numericValue()) {
      shape_of(triple.subject()).numeric_values.push_back(&triple.object());
    } else if (p == vocab::qudt_unit()) {
      shape_of(triple.subject()).units.push_back(&triple.object());
    }
  }

  std::vector<LintViolation> violations;
  for (const auto& [key, shape] : shapes) {
    const Term& subject = *shape.subject;
    if (shape.is_observation) {
      require_one(violations, subject, shape.has_result, "sosa:hasResult");
      require_one(violations, subject, shape.observed_property,
                  "sosa:observedProperty");
      require_one(violations, subject, shape.feature_of_interest,
                  "sosa:hasFeatureOfInterest");
      require_one(violations, subject, shape.result_times.size(),
                  "sosa:resultTime");
      if (shape.result_times.size() == 1) {
        const Term& time = *shape.result_times.front();
        if (!is_literal(time) ||
            as_literal(time).datatype() != vocab::xsd_dateTime()) {
          violations.push_back(
              {subject,
               "sosa:resultTime object is not an xsd:dateTime literal"});
        } else if (!is_valid_xsd_datetime(as_literal(time).lexical())) {
          violations.push_back(
              {subject, "sosa:resultTime value \"" +
                            as_literal(time).lexical() +
                            "\" is not a valid xsd:dateTime"});
        }
      }
    }
    if (shape.is_quantity_value) {
      require_one(violations, subject, shape.numeric_values.size(),
                  "qudt:numericValue");
      if (shape.numeric_values.size() == 1 &&
          !is_literal(*shape.numeric_values.front())) {
        violations.push_back(
            {subject, "qudt:numericValue object is not a literal"});
      }
      require_one(violations, subject, shape.units.size(), "qudt:unit");
      if (shape.units.size() == 1 && !is_iri(*shape.units.front())) {
        violations.push_back({subject, "qudt:unit object is not an IRI"});
      }
    }
  }
  return violations;
}

}  // namespace harmon
