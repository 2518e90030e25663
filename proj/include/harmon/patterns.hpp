#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "harmon/catalog.hpp"
#include "harmon/graph.hpp"

namespace harmon {

enum class IdMode { deterministic, random };

// Hands out per-run unique tokens (16 hex digits), reproducibly for a given
// seed. Thread-safe; uniqueness holds across every caller sharing the
// generator.
class IdGenerator {
 public:
  explicit IdGenerator(std::uint64_t seed);
  ~IdGenerator();

  std::string next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Where minted IRIs live. Every base ends in '/' or '#'. In random mode the
// policy carries one shared generator for the run, so copies of the policy
// keep drawing from the same unique sequence.
class IriPolicy {
 public:
  static IriPolicy deterministic(Iri obs_base, Iri result_base,
                                 Iri feature_base, Iri property_base);
  static IriPolicy random(Iri obs_base, Iri result_base, Iri feature_base,
                          Iri property_base, std::uint64_t seed);

  const Iri& obs_base() const noexcept { return obs_base_; }
  const Iri& result_base() const noexcept { return result_base_; }
  const Iri& feature_base() const noexcept { return feature_base_; }
  const Iri& property_base() const noexcept { return property_base_; }
  IdMode id_mode() const noexcept { return id_mode_; }
  IdGenerator& id_generator() const;

 private:
  IriPolicy(Iri obs_base, Iri result_base, Iri feature_base, Iri property_base,
            IdMode mode, std::uint64_t seed);

  Iri obs_base_;
  Iri result_base_;
  Iri feature_base_;
  Iri property_base_;
  IdMode id_mode_;
  std::shared_ptr<IdGenerator> generator_;
};

// Shortest fixed-notation decimal that round-trips the value, with at least
// one fractional digit, no exponent, no trailing zeros; negative zero
// collapses to "0.0".
std::string format_coordinate(double degrees);

// obs_base + kind_slug + "_" + id; the id may use [A-Za-z0-9_.-] only.
Iri mint_observation_iri(const IriPolicy& policy, std::string_view kind_slug,
                         std::string_view id);

// Like mint_observation_iri under result_base; in random mode the id is
// replaced by a fresh token from the policy's generator.
Iri mint_result_iri(const IriPolicy& policy, std::string_view kind_slug,
                    std::string_view id);

// feature_base + "loc_" + lat + "_" + lon with formatted coordinates;
// latitude in [-90, 90], longitude in [-180, 180].
Iri mint_feature_iri_from_location(const IriPolicy& policy, double latitude,
                                   double longitude);

// Catalog lookup that fails loudly, suggesting the nearest known accessor.
const Iri& unit_accessor(const Catalog& catalog, std::string_view name);

// What one kind of measurement looks like in RDF.
struct PropertySpec {
  PropertySpec(std::string kind_slug, Iri observed_property, Iri unit,
               Iri value_datatype);

  std::string kind_slug;  // [a-z][a-z0-9_]*
  Iri observed_property;
  Iri unit;
  Iri value_datatype;
};

// One source measurement. The value keeps its source lexical form verbatim;
// the parsed magnitude tags along for validation only and never feeds the
// output.
struct ObservationRecord {
  std::string id;
  std::string value_lexical;
  double value_magnitude = 0.0;
  std::string timestamp;  // xsd:dateTime lexical form
  double latitude = 0.0;
  double longitude = 0.0;
};

// Validates invariants and fills in the parsed magnitude.
ObservationRecord make_observation_record(std::string id,
                                          std::string value_lexical,
                                          std::string timestamp,
                                          double latitude, double longitude);

// Syntactic xsd:dateTime check: YYYY-MM-DDThh:mm:ss with optional fraction
// and a mandatory Z or +-hh:mm zone; month/day/time fields are
// bounds-checked (leap days allowed, second 60 is not). Observation times
// without an explicit zone are ambiguous, so they are rejected even though
// xsd:dateTime itself would allow them.
bool is_valid_xsd_datetime(std::string_view text);

// Finite decimal check (optional exponent accepted); returns the magnitude.
double parse_decimal_value(std::string_view lexical);

void validate_observation_record(const ObservationRecord& record);

// The observation half: type, feature of interest, observed property,
// result time. Exactly four triples about obs_iri. The result time must be
// an xsd:dateTime literal.
Graph create_sosa_observation(const Iri& obs_iri, const Iri& feature_iri,
                              const Iri& observed_property,
                              const Literal& result_time);

// The result half: hasResult link plus the typed quantity value with its
// numeric value and unit. Exactly four triples. The value literal must be
// xsd:float, xsd:double, or xsd:decimal.
std::pair<Iri, Graph> create_quantity_value_result(const Iri& obs_iri,
                                                   const Literal& value,
                                                   const Iri& unit,
                                                   const Iri& result_iri);

// The whole pattern for one record: exactly eight triples, the union of the
// two builders above. The property spec's unit must resolve in the catalog.
Graph harmonise_observation(const ObservationRecord& record,
                            const PropertySpec& spec, const IriPolicy& policy,
                            const Catalog& catalog);

using Harmoniser = std::function<Graph(const ObservationRecord&)>;

// Generated lookup table of high-level entry points, one per property spec,
// named harmonise_oim_sosa_observation_{kind_slug}_{unit_slug} where the
// unit slug comes from the catalog accessor of the spec's unit.
class HarmoniserRegistry {
 public:
  HarmoniserRegistry(std::vector<PropertySpec> specs, IriPolicy policy,
                     Catalog catalog);

  Harmoniser named_harmoniser(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace harmon
