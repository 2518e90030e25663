#include "harmon/patterns.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <unordered_set>

#include "harmon/vocab.hpp"

namespace harmon {

struct IdGenerator::State {
  std::mt19937_64 rng;
  std::unordered_set<std::uint64_t> used;
  std::mutex mutex;
};

IdGenerator::IdGenerator(std::uint64_t seed) : state_(new State) {
  state_->rng.seed(seed);
}

IdGenerator::~IdGenerator() = default;

std::string IdGenerator::next() {
  std::lock_guard<std::mutex> lock(state_->mutex);
  std::uint64_t draw;
  do {
    draw = state_->rng();
  } while (!state_->used.insert(draw).second);
  static const char* hex = "0123456789abcdef";
  std::string token(16, '0');
  for (int i = 15; i >= 0; --i) {
    token[i] = hex[draw & 0xF];
    draw >>= 4;
  }
  return token;
}

namespace {

void check_base(const Iri& base, const char* which) {
  char last = base.value().empty() ? '\0' : base.value().back();
  if (last != '/' && last != '#') {
    throw Error(std::string(which) + " base IRI must end in '/' or '#': " +
                base.value());
  }
}

}  // namespace

IriPolicy::IriPolicy(Iri obs_base, Iri result_base, Iri feature_base,
                     Iri property_base, IdMode mode, std::uint64_t seed)
    : obs_base_(std::move(obs_base)),
      result_base_(std::move(result_base)),
      feature_base_(std::move(feature_base)),
      property_base_(std::move(property_base)),
      id_mode_(mode) {
  check_base(obs_base_, "observation");
  check_base(result_base_, "result");
  check_base(feature_base_, "feature");
  check_base(property_base_, "property");
  if (mode == IdMode::random) {
    generator_ = std::make_shared<IdGenerator>(seed);
  }
}

IriPolicy IriPolicy::deterministic(Iri obs_base, Iri result_base,
                                   Iri feature_base, Iri property_base) {
  return IriPolicy(std::move(obs_base), std::move(result_base),
                   std::move(feature_base), std::move(property_base),
                   IdMode::deterministic, 0);
}

IriPolicy IriPolicy::random(Iri obs_base, Iri result_base, Iri feature_base,
                            Iri property_base, std::uint64_t seed) {
  return IriPolicy(std::move(obs_base), std::move(result_base),
                   std::move(feature_base), std::move(property_base),
                   IdMode::random, seed);
}

IdGenerator& IriPolicy::id_generator() const {
  if (!generator_) {
    throw Error("this policy mints deterministic ids and has no generator");
  }
  return *generator_;
}

std::string format_coordinate(double degrees) {
  if (!std::isfinite(degrees)) {
    throw Error("coordinate must be finite");
  }
  char buffer[400];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), degrees,
                                 std::chars_format::fixed);
  std::string out(buffer, end);
  auto dot = out.find('.');
  if (dot == std::string::npos) {
    out += ".0";
  } else {
    auto last = out.find_last_not_of('0');
    out.erase(std::max(last + 1, dot + 2));
  }
  if (out == "-0.0") out = "0.0";
  return out;
}

namespace {

void check_id(std::string_view id) {
  if (id.empty()) throw BadIdentifier(std::string(id));
  for (unsigned char c : id) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) throw BadIdentifier(std::string(id));
  }
}

}  // namespace

Iri mint_observation_iri(const IriPolicy& policy, std::string_view kind_slug,
                         std::string_view id) {
  check_id(id);
  return Iri(policy.obs_base().value() + std::string(kind_slug) + "_" +
             std::string(id));
}

Iri mint_result_iri(const IriPolicy& policy, std::string_view kind_slug,
                    std::string_view id) {
  std::string tail;
  if (policy.id_mode() == IdMode::random) {
    tail = policy.id_generator().next();
  } else {
    check_id(id);
    tail = std::string(id);
  }
  return Iri(policy.result_base().value() + std::string(kind_slug) + "_" +
             tail);
}

Iri mint_feature_iri_from_location(const IriPolicy& policy, double latitude,
                                   double longitude) {
  if (!std::isfinite(latitude) || latitude < -90.0 || latitude > 90.0) {
    throw CoordinateOutOfRange("latitude", latitude);
  }
  if (!std::isfinite(longitude) || longitude < -180.0 || longitude > 180.0) {
    throw CoordinateOutOfRange("longitude", longitude);
  }
  return Iri(policy.feature_base().value() + "loc_" +
             format_coordinate(latitude) + "_" + format_coordinate(longitude));
}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t next_diagonal = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = next_diagonal;
    }
  }
  return row[b.size()];
}

std::string nearest_accessor(const Catalog& catalog, std::string_view name) {
  std::string best;
  std::size_t best_distance = 0;
  for (const auto& [candidate, entry] : catalog.entries()) {
    std::size_t d = edit_distance(name, candidate);
    if (best.empty() || d < best_distance) {
      best = candidate;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace

const Iri& unit_accessor(const Catalog& catalog, std::string_view name) {
  const VocabEntry* entry = catalog.find(name);
  if (entry == nullptr) {
    throw UnknownAccessor(std::string(name), nearest_accessor(catalog, name));
  }
  return entry->iri;
}

PropertySpec::PropertySpec(std::string kind_slug_in, Iri observed_property_in,
                           Iri unit_in, Iri value_datatype_in)
    : kind_slug(std::move(kind_slug_in)),
      observed_property(std::move(observed_property_in)),
      unit(std::move(unit_in)),
      value_datatype(std::move(value_datatype_in)) {
  bool ok = !kind_slug.empty() && kind_slug[0] >= 'a' && kind_slug[0] <= 'z';
  for (std::size_t i = 1; ok && i < kind_slug.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(kind_slug[i]);
    ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  }
  if (!ok) {
    throw Error("invalid kind slug \"" + kind_slug +
                "\": expected [a-z][a-z0-9_]*");
  }
}

bool is_valid_xsd_datetime(std::string_view text) {
  auto digits = [&](std::size_t pos, std::size_t count) -> int {
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos + i >= text.size()) return -1;
      char c = text[pos + i];
      if (c < '0' || c > '9') return -1;
      value = value * 10 + (c - '0');
    }
    return value;
  };
  auto expect = [&](std::size_t pos, char c) {
    return pos < text.size() && text[pos] == c;
  };

  int year = digits(0, 4);
  if (year < 0 || !expect(4, '-')) return false;
  int month = digits(5, 2);
  if (month < 1 || month > 12 || !expect(7, '-')) return false;
  int day = digits(8, 2);
  static const int days_in_month[] = {31, 28, 31, 30, 31, 30,
                                      31, 31, 30, 31, 30, 31};
  int max_day = days_in_month[month - 1];
  bool leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
  if (month == 2 && leap) max_day = 29;
  if (day < 1 || day > max_day || !expect(10, 'T')) return false;
  int hour = digits(11, 2);
  if (hour < 0 || hour > 23 || !expect(13, ':')) return false;
  int minute = digits(14, 2);
  if (minute < 0 || minute > 59 || !expect(16, ':')) return false;
  int second = digits(17, 2);
  if (second < 0 || second > 59) return false;

  std::size_t pos = 19;
  if (expect(pos, '.')) {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) return false;
  }
  if (expect(pos, 'Z')) return pos + 1 == text.size();
  if (!expect(pos, '+') && !expect(pos, '-')) return false;
  int zone_hour = digits(pos + 1, 2);
  if (zone_hour < 0 || zone_hour > 14 || !expect(pos + 3, ':')) return false;
  int zone_minute = digits(pos + 4, 2);
  if (zone_minute < 0 || zone_minute > 59) return false;
  if (zone_hour == 14 && zone_minute != 0) return false;
  return pos + 6 == text.size();
}

double parse_decimal_value(std::string_view lexical) {
  for (unsigned char c : lexical) {
    bool ok = (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.' ||
              c == 'e' || c == 'E';
    if (!ok) {
      throw NonNumericValue("value \"" + std::string(lexical) +
                            "\" is not a decimal number");
    }
  }
  std::string_view body = lexical;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double magnitude = 0.0;
  auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(),
                                   magnitude);
  if (ec != std::errc() || end != body.data() + body.size() ||
      !std::isfinite(magnitude)) {
    throw NonNumericValue("value \"" + std::string(lexical) +
                          "\" is not a finite decimal number");
  }
  return magnitude;
}

ObservationRecord make_observation_record(std::string id,
                                          std::string value_lexical,
                                          std::string timestamp,
                                          double latitude, double longitude) {
  ObservationRecord record;
  record.id = std::move(id);
  record.value_lexical = std::move(value_lexical);
  record.timestamp = std::move(timestamp);
  record.latitude = latitude;
  record.longitude = longitude;
  record.value_magnitude = parse_decimal_value(record.value_lexical);
  validate_observation_record(record);
  return record;
}

void validate_observation_record(const ObservationRecord& record) {
  parse_decimal_value(record.value_lexical);
  if (!is_valid_xsd_datetime(record.timestamp)) {
    throw BadTimestamp("timestamp \"" + record.timestamp +
                       "\" is not a valid xsd:dateTime");
  }
  if (!std::isfinite(record.latitude) || record.latitude < -90.0 ||
      record.latitude > 90.0) {
    throw CoordinateOutOfRange("latitude", record.latitude);
  }
  if (!std::isfinite(record.longitude) || record.longitude < -180.0 ||
      record.longitude > 180.0) {
    throw CoordinateOutOfRange("longitude", record.longitude);
  }
}

Graph create_sosa_observation(const Iri& obs_iri, const Iri& feature_iri,
                              const Iri& observed_property,
                              const Literal& result_time) {
  if (!result_time.datatype() ||
      !(*result_time.datatype() == vocab::xsd_dateTime())) {
    throw BadTimestamp("result time must be an xsd:dateTime literal");
  }
  if (!is_valid_xsd_datetime(result_time.lexical())) {
    throw BadTimestamp("result time \"" + result_time.lexical() +
                       "\" is not a valid xsd:dateTime");
  }
  Graph g;
  g.insert(Triple(Term(obs_iri), Term(vocab::rdf_type()),
                  Term(vocab::sosa_Observation())));
  g.insert(Triple(Term(obs_iri), Term(vocab::sosa_hasFeatureOfInterest()),
                  Term(feature_iri)));
  g.insert(Triple(Term(obs_iri), Term(vocab::sosa_observedProperty()),
                  Term(observed_property)));
  g.insert(Triple(Term(obs_iri), Term(vocab::sosa_resultTime()),
                  Term(result_time)));
  return g;
}

std::pair<Iri, Graph> create_quantity_value_result(const Iri& obs_iri,
                                                   const Literal& value,
                                                   const Iri& unit,
                                                   const Iri& result_iri) {
  const auto& datatype = value.datatype();
  bool numeric = datatype && (*datatype == vocab::xsd_float() ||
                              *datatype == vocab::xsd_double() ||
                              *datatype == vocab::xsd_decimal());
  if (!numeric) {
    throw NonNumericValue(
        "result value must be an xsd:float, xsd:double, or xsd:decimal "
        "literal");
  }
  Graph g;
  g.insert(Triple(Term(obs_iri), Term(vocab::sosa_hasResult()),
                  Term(result_iri)));
  g.insert(Triple(Term(result_iri), Term(vocab::rdf_type()),
                  Term(vocab::qudt_QuantityValue())));
  g.insert(Triple(Term(result_iri), Term(vocab::qudt_numericValue()),
                  Term(value)));
  g.insert(Triple(Term(result_iri), Term(vocab::qudt_unit()), Term(unit)));
  return {result_iri, std::move(g)};
}

Graph harmonise_observation(const ObservationRecord& record,
                            const PropertySpec& spec, const IriPolicy& policy,
                            const Catalog& catalog) {
  validate_observation_record(record);
  if (!catalog.contains_iri(spec.unit)) {
    throw UnknownAccessor(spec.unit.value(),
                          nearest_accessor(catalog, spec.unit.value()));
  }
  Iri obs = mint_observation_iri(policy, spec.kind_slug, record.id);
  Iri result = mint_result_iri(policy, spec.kind_slug, record.id);
  Iri feature = mint_feature_iri_from_location(policy, record.latitude,
                                               record.longitude);
  Literal time(record.timestamp, vocab::xsd_dateTime());
  Literal value(record.value_lexical, spec.value_datatype);

  Graph g = create_sosa_observation(obs, feature, spec.observed_property,
                                    time);
  g += create_quantity_value_result(obs, value, spec.unit, result).second;
  return g;
}

struct HarmoniserRegistry::Impl {
  std::map<std::string, PropertySpec, std::less<>> by_name;
  IriPolicy policy;
  Catalog catalog;

  Impl(IriPolicy p, Catalog c) : policy(std::move(p)), catalog(std::move(c)) {}
};

HarmoniserRegistry::HarmoniserRegistry(std::vector<PropertySpec> specs,
                                       IriPolicy policy, Catalog catalog) {
  auto impl = std::make_shared<Impl>(std::move(policy), std::move(catalog));
  std::string unit_prefix =
      "get_qudt_" + std::string(to_string(impl->catalog.kind())) + "_";
  for (PropertySpec& spec : specs) {
    const std::string* accessor = impl->catalog.accessor_for_iri(spec.unit);
    if (accessor == nullptr) {
      throw UnknownAccessor(spec.unit.value(),
                            nearest_accessor(impl->catalog,
                                             spec.unit.value()));
    }
    std::string unit_slug = accessor->substr(unit_prefix.size());
    std::string name = "harmonise_oim_sosa_observation_" + spec.kind_slug +
                       "_" + unit_slug;
    auto [it, inserted] = impl->by_name.emplace(std::move(name),
                                                std::move(spec));
    if (!inserted) {
      throw Error("duplicate harmoniser name \"" + it->first + "\"");
    }
  }
  impl_ = std::move(impl);
}

Harmoniser HarmoniserRegistry::named_harmoniser(std::string_view name) const {
  auto impl = impl_;
  auto it = impl->by_name.find(name);
  if (it == impl->by_name.end()) {
    std::string best;
    std::size_t best_distance = 0;
    for (const auto& [candidate, spec] : impl->by_name) {
      std::size_t d = edit_distance(name, candidate);
      if (best.empty() || d < best_distance) {
        best = candidate;
        best_distance = d;
      }
    }
    throw UnknownAccessor(std::string(name), best);
  }
  const PropertySpec* spec = &it->second;
  return [impl, spec](const ObservationRecord& record) {
    return harmonise_observation(record, *spec, impl->policy, impl->catalog);
  };
}

std::vector<std::string> HarmoniserRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(impl_->by_name.size());
  for (const auto& [name, spec] : impl_->by_name) out.push_back(name);
  return out;
}

}  // namespace harmon
