#pragma once

#include <vector>

#include "harmon/term.hpp"

namespace harmon::vocab {

// Namespace bases.
inline constexpr const char* kRdfNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kXsdNs = "http://www.w3.org/2001/XMLSchema#";
inline constexpr const char* kSosaNs = "http://www.w3.org/ns/sosa/";
inline constexpr const char* kQudtNs = "http://qudt.org/schema/qudt/";
inline constexpr const char* kQudtUnitNs = "http://qudt.org/vocab/unit/";

// The fixed set of well-known terms this library ever emits or matches on.
// The set is closed: nothing is added at runtime.
const Iri& rdf_type();
const Iri& rdfs_label();

const Iri& sosa_Observation();
const Iri& sosa_ObservableProperty();
const Iri& sosa_hasFeatureOfInterest();
const Iri& sosa_hasResult();
const Iri& sosa_observedProperty();
const Iri& sosa_resultTime();
// Present for completeness; the simple-result shape they belong to is never
// emitted by the builders in this library.
const Iri& sosa_Result();
const Iri& sosa_hasValue();
const Iri& sosa_hasUnit();

const Iri& qudt_Unit();
const Iri& qudt_QuantityKind();
const Iri& qudt_QuantityValue();
const Iri& qudt_numericValue();
const Iri& qudt_unit();

const Iri& xsd_string();
const Iri& xsd_boolean();
const Iri& xsd_integer();
const Iri& xsd_decimal();
const Iri& xsd_float();
const Iri& xsd_double();
const Iri& xsd_dateTime();

const std::vector<Iri>& all();

}  // namespace harmon::vocab
