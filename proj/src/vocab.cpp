#include "harmon/vocab.hpp"

namespace harmon::vocab {

namespace {

Iri make(const char* ns, const char* local) {
  return Iri(std::string(ns) + local);
}

}  // namespace

#define HARMON_VOCAB_TERM(name, ns, local)      \
  const Iri& name() {                           \
    static const Iri iri = make(ns, local);     \
    return iri;                                 \
  }

HARMON_VOCAB_TERM(rdf_type, kRdfNs, "type")
HARMON_VOCAB_TERM(rdfs_label, kRdfsNs, "label")

HARMON_VOCAB_TERM(sosa_Observation, kSosaNs, "Observation")
HARMON_VOCAB_TERM(sosa_ObservableProperty, kSosaNs, "ObservableProperty")
HARMON_VOCAB_TERM(sosa_hasFeatureOfInterest, kSosaNs, "hasFeatureOfInterest")
HARMON_VOCAB_TERM(sosa_hasResult, kSosaNs, "hasResult")
HARMON_VOCAB_TERM(sosa_observedProperty, kSosaNs, "observedProperty")
HARMON_VOCAB_TERM(sosa_resultTime, kSosaNs, "resultTime")
HARMON_VOCAB_TERM(sosa_Result, kSosaNs, "Result")
HARMON_VOCAB_TERM(sosa_hasValue, kSosaNs, "hasValue")
HARMON_VOCAB_TERM(sosa_hasUnit, kSosaNs, "hasUnit")

HARMON_VOCAB_TERM(qudt_Unit, kQudtNs, "Unit")
HARMON_VOCAB_TERM(qudt_QuantityKind, kQudtNs, "QuantityKind")
HARMON_VOCAB_TERM(qudt_QuantityValue, kQudtNs, "QuantityValue")
HARMON_VOCAB_TERM(qudt_numericValue, kQudtNs, "numericValue")
HARMON_VOCAB_TERM(qudt_unit, kQudtNs, "unit")

HARMON_VOCAB_TERM(xsd_string, kXsdNs, "string")
HARMON_VOCAB_TERM(xsd_boolean, kXsdNs, "boolean")
HARMON_VOCAB_TERM(xsd_integer, kXsdNs, "integer")
HARMON_VOCAB_TERM(xsd_decimal, kXsdNs, "decimal")
HARMON_VOCAB_TERM(xsd_float, kXsdNs, "float")
HARMON_VOCAB_TERM(xsd_double, kXsdNs, "double")
HARMON_VOCAB_TERM(xsd_dateTime, kXsdNs, "dateTime")

#undef HARMON_VOCAB_TERM

const std::vector<Iri>& all() {
  static const std::vector<Iri> terms = {
      rdf_type(),        rdfs_label(),
      sosa_Observation(), sosa_ObservableProperty(),
      sosa_hasFeatureOfInterest(), sosa_hasResult(),
      sosa_observedProperty(), sosa_resultTime(),
      sosa_Result(),     sosa_hasValue(),  sosa_hasUnit(),
      qudt_Unit(),       qudt_QuantityKind(), qudt_QuantityValue(),
      qudt_numericValue(), qudt_unit(),
      xsd_string(),      xsd_boolean(),    xsd_integer(),
      xsd_decimal(),     xsd_float(),      xsd_double(),
      xsd_dateTime()};
  return terms;
}

}  // namespace harmon::vocab
