#include "harmon/pipeline.hpp"

#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <system_error>
#include <utility>

#include <json.hpp>

#include "harmon/csv.hpp"
#include "harmon/error.hpp"
#include "harmon/vocab.hpp"

namespace harmon {

namespace {

using nlohmann::json;

const json* find_member(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require_member(const json& obj, const char* key,
                           const std::string& where) {
  const json* member = find_member(obj, key);
  if (member == nullptr) {
    throw ConfigError(where + " is missing required key \"" + key + "\"");
  }
  return *member;
}

void require_object(const json& value, const std::string& where) {
  if (!value.is_object()) {
    throw ConfigError(where + " must be an object");
  }
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where) {
  const json& value = require_member(obj, key, where);
  if (!value.is_string()) {
    throw ConfigError(where + "." + key + " must be a string");
  }
  return value.get<std::string>();
}

// Unknown keys are errors: a misspelled option must not silently become a
// no-op. nlohmann objects iterate in key order, so the first complaint is
// deterministic.
void check_keys(const json& obj,
                std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(where + ": unknown key \"" + item.key() + "\"");
    }
  }
}

// Accepts either a CURIE in the config's namespaces or a full IRI. The
// prefix decides: when it is bound, the string is a CURIE; otherwise the
// whole string must stand on its own as an IRI.
Iri expand_iri_or_curie(const NamespaceMap& namespaces,
                        const std::string& text, const std::string& where) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ConfigError(where + ": \"" + text +
                      "\" is neither a CURIE nor an absolute IRI");
  }
  std::string prefix = text.substr(0, colon);
  if (const Iri* base = namespaces.find(prefix)) {
    try {
      return Iri(base->value() + text.substr(colon + 1));
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  try {
    return Iri(text);
  } catch (const Error&) {
    throw ConfigError(where + ": prefix \"" + prefix +
                      "\" is not bound in config.namespaces and \"" + text +
                      "\" is not a valid absolute IRI");
  }
}

NamespaceMap load_namespaces(const json& doc) {
  NamespaceMap namespaces;
  if (const json* ns = find_member(doc, "namespaces")) {
    require_object(*ns, "config.namespaces");
    for (const auto& item : ns->items()) {
      if (!item.value().is_string()) {
        throw ConfigError("config.namespaces." + item.key() +
                          " must be a string IRI");
      }
      try {
        namespaces.bind(item.key(), Iri(item.value().get<std::string>()));
      } catch (const Error& e) {
        throw ConfigError("config.namespaces." + item.key() + ": " + e.what());
      }
    }
  }
  return namespaces;
}

IriPolicy load_policy(const json& doc) {
  const std::string where = "config.iri_policy";
  const json& policy = require_member(doc, "iri_policy", "config");
  require_object(policy, where);
  check_keys(policy,
             {"observation_base", "result_base", "feature_base",
              "property_base", "id_mode", "seed"},
             where);

  auto base = [&](const char* key) {
    std::string text = require_string(policy, key, where);
    try {
      return Iri(std::move(text));
    } catch (const Error& e) {
      throw ConfigError(where + "." + key + ": " + e.what());
    }
  };
  Iri obs = base("observation_base");
  Iri result = base("result_base");
  Iri feature = base("feature_base");
  Iri property = base("property_base");

  std::string id_mode = "deterministic";
  if (const json* mode = find_member(policy, "id_mode")) {
    if (!mode->is_string()) {
      throw ConfigError(where + ".id_mode must be a string");
    }
    id_mode = mode->get<std::string>();
  }

  if (id_mode == "deterministic") {
    if (find_member(policy, "seed") != nullptr) {
      throw ConfigError(where +
                        ".seed is only meaningful when id_mode is \"random\"");
    }
    try {
      return IriPolicy::deterministic(std::move(obs), std::move(result),
                                      std::move(feature), std::move(property));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (id_mode == "random") {
    std::uint64_t seed = 0;
    if (const json* s = find_member(policy, "seed")) {
      if (!s->is_number_unsigned()) {
        throw ConfigError(where + ".seed must be a non-negative integer");
      }
      seed = s->get<std::uint64_t>();
    }
    try {
      return IriPolicy::random(std::move(obs), std::move(result),
                               std::move(feature), std::move(property), seed);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  throw ConfigError(where +
                    ".id_mode must be \"deterministic\" or \"random\"");
}

std::vector<NamedSpec> load_specs(const json& doc,
                                  const NamespaceMap& namespaces,
                                  const Catalog& catalog) {
  const json& specs_json = require_member(doc, "property_specs", "config");
  if (!specs_json.is_array() || specs_json.empty()) {
    throw ConfigError("config.property_specs must be a non-empty array");
  }
  std::vector<NamedSpec> specs;
  specs.reserve(specs_json.size());
  for (std::size_t i = 0; i < specs_json.size(); ++i) {
    const std::string where = "config.property_specs[" + std::to_string(i) +
                              "]";
    const json& entry = specs_json[i];
    require_object(entry, where);
    check_keys(entry,
               {"name", "kind_slug", "observed_property", "unit",
                "value_datatype"},
               where);

    std::string name = require_string(entry, "name", where);
    if (name.empty()) {
      throw ConfigError(where + ".name must not be empty");
    }
    for (const NamedSpec& prev : specs) {
      if (prev.name == name) {
        throw ConfigError(where + ".name \"" + name + "\" is already used");
      }
    }

    std::string kind_slug = require_string(entry, "kind_slug", where);
    Iri observed =
        expand_iri_or_curie(namespaces,
                            require_string(entry, "observed_property", where),
                            where + ".observed_property");
    std::string unit_name = require_string(entry, "unit", where);
    Iri unit = [&]() -> Iri {
      try {
        return unit_accessor(catalog, unit_name);
      } catch (const Error& e) {
        throw ConfigError(where + ".unit: " + e.what());
      }
    }();
    Iri datatype =
        expand_iri_or_curie(namespaces,
                            require_string(entry, "value_datatype", where),
                            where + ".value_datatype");
    if (datatype != vocab::xsd_float() && datatype != vocab::xsd_double() &&
        datatype != vocab::xsd_decimal()) {
      throw ConfigError(where +
                        ".value_datatype must be xsd:float, xsd:double or "
                        "xsd:decimal");
    }
    try {
      specs.push_back({std::move(name),
                       PropertySpec(std::move(kind_slug), std::move(observed),
                                    std::move(unit), std::move(datatype))});
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return specs;
}

InputSpec load_input(const json& doc) {
  const std::string where = "config.input";
  const json& input_json = require_member(doc, "input", "config");
  require_object(input_json, where);
  check_keys(input_json, {"format", "property", "columns"}, where);

  InputSpec input;
  std::string format = require_string(input_json, "format", where);
  if (format == "csv") {
    input.format = RecordsFormat::csv;
  } else if (format == "json") {
    input.format = RecordsFormat::json;
  } else {
    throw ConfigError(where + ".format must be \"csv\" or \"json\"");
  }
  input.property = require_string(input_json, "property", where);

  if (const json* cols = find_member(input_json, "columns")) {
    const std::string cols_where = where + ".columns";
    require_object(*cols, cols_where);
    check_keys(*cols, {"id", "value", "timestamp", "latitude", "longitude"},
               cols_where);
    auto column = [&](const char* key, std::string& slot) {
      if (const json* v = find_member(*cols, key)) {
        if (!v->is_string() || v->get<std::string>().empty()) {
          throw ConfigError(cols_where + "." + key +
                            " must be a non-empty string");
        }
        slot = v->get<std::string>();
      }
    };
    column("id", input.columns.id);
    column("value", input.columns.value);
    column("timestamp", input.columns.timestamp);
    column("latitude", input.columns.latitude);
    column("longitude", input.columns.longitude);
  }
  return input;
}

OutputSpec load_output(const json& doc) {
  OutputSpec output;
  if (const json* out = find_member(doc, "output")) {
    const std::string where = "config.output";
    require_object(*out, where);
    check_keys(*out, {"format", "path"}, where);
    if (const json* format = find_member(*out, "format")) {
      if (!format->is_string()) {
        throw ConfigError(where + ".format must be a string");
      }
      std::string text = format->get<std::string>();
      if (text == "turtle") {
        output.format = OutputFormat::turtle;
      } else if (text == "ntriples-canonical") {
        output.format = OutputFormat::ntriples_canonical;
      } else {
        throw ConfigError(
            where + ".format must be \"turtle\" or \"ntriples-canonical\"");
      }
    }
    if (const json* path = find_member(*out, "path")) {
      if (!path->is_string() || path->get<std::string>().empty()) {
        throw ConfigError(where + ".path must be a non-empty string");
      }
      output.path = path->get<std::string>();
    }
  }
  return output;
}

}  // namespace

PipelineConfig load_pipeline_config(std::string_view text,
                                    const Catalog& catalog) {
  json doc;
  try {
    doc = json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/true,
                      /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  require_object(doc, "config");
  check_keys(doc,
             {"namespaces", "iri_policy", "property_specs", "input", "output"},
             "config");

  NamespaceMap namespaces = load_namespaces(doc);
  IriPolicy policy = load_policy(doc);
  std::vector<NamedSpec> specs = load_specs(doc, namespaces, catalog);
  InputSpec input = load_input(doc);
  OutputSpec output = load_output(doc);

  std::size_t active_index = specs.size();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].name == input.property) {
      active_index = i;
      break;
    }
  }
  if (active_index == specs.size()) {
    throw ConfigError("config.input.property \"" + input.property +
                      "\" does not name any property spec");
  }

  return PipelineConfig{std::move(namespaces), std::move(policy),
                        std::move(specs),      std::move(input),
                        std::move(output),     active_index};
}

std::vector<RecordFields> read_records_csv(std::string_view text,
                                           const ColumnMap& columns) {
  std::vector<std::vector<std::string>> rows = parse_csv_rows(text);
  if (rows.empty()) {
    throw CsvError(1, "records CSV is empty; a header row is required");
  }
  const std::vector<std::string>& header = rows.front();
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!index.emplace(header[i], i).second) {
      throw CsvError(1, "duplicate column name \"" + header[i] + "\"");
    }
  }
  for (const std::string* name :
       {&columns.id, &columns.value, &columns.timestamp, &columns.latitude,
        &columns.longitude}) {
    if (index.find(*name) == index.end()) {
      throw CsvError(1, "missing required column \"" + *name + "\"");
    }
  }

  std::vector<RecordFields> records;
  records.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::vector<std::string>& row = rows[r];
    if (row.size() != header.size()) {
      throw CsvError(r + 1, "expected " + std::to_string(header.size()) +
                                " cells, found " + std::to_string(row.size()));
    }
    RecordFields fields;
    for (std::size_t c = 0; c < header.size(); ++c) {
      fields.insert_or_assign(header[c], std::move(row[c]));
    }
    records.push_back(std::move(fields));
  }
  return records;
}

namespace {

// SAX reader so float fields keep their source tokens: parsing 4.60 through
// a double would hand back 4.6 and silently rewrite the data.
class RecordsSax {
 public:
  explicit RecordsSax(std::vector<RecordFields>& out) : out_(&out) {}

  bool null() {
    if (level_ != 2) return reject_scalar();
    return true;  // an explicit null reads as an absent field
  }
  bool boolean(bool val) { return scalar(val ? "true" : "false"); }
  bool number_integer(json::number_integer_t val) {
    return scalar(std::to_string(val));
  }
  bool number_unsigned(json::number_unsigned_t val) {
    return scalar(std::to_string(val));
  }
  bool number_float(json::number_float_t, const std::string& raw) {
    return scalar(raw);
  }
  bool string(std::string& val) { return scalar(val); }
  bool binary(json::binary_t&) { return fail("unexpected binary value"); }

  bool start_object(std::size_t) {
    if (level_ == 1) {
      level_ = 2;
      current_.clear();
      return true;
    }
    if (level_ == 0) {
      return fail("top level must be an array of records");
    }
    return fail("record " + std::to_string(out_->size() + 1) +
                ": nested objects are not supported");
  }
  bool key(std::string& val) {
    key_ = std::move(val);
    return true;
  }
  bool end_object() {
    out_->push_back(std::move(current_));
    current_.clear();
    level_ = 1;
    return true;
  }
  bool start_array(std::size_t) {
    if (level_ == 0) {
      level_ = 1;
      return true;
    }
    return fail("record " + std::to_string(out_->size() + 1) +
                ": nested arrays are not supported");
  }
  bool end_array() {
    level_ = 0;
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& ex) {
    if (message_.empty()) message_ = ex.what();
    return false;
  }

  const std::string& message() const noexcept { return message_; }

 private:
  bool scalar(std::string text) {
    if (level_ != 2) return reject_scalar();
    current_.insert_or_assign(key_, std::move(text));
    return true;
  }
  bool reject_scalar() {
    if (level_ == 0) {
      return fail("top level must be an array of records");
    }
    return fail("record " + std::to_string(out_->size() + 1) +
                ": expected an object");
  }
  bool fail(std::string message) {
    message_ = std::move(message);
    return false;
  }

  std::vector<RecordFields>* out_;
  RecordFields current_;
  std::string key_;
  std::string message_;
  int level_ = 0;  // 0 outside, 1 in the array, 2 in a record
};

}  // namespace

std::vector<RecordFields> read_records_json(std::string_view text) {
  std::vector<RecordFields> records;
  RecordsSax handler(records);
  if (!json::sax_parse(text, &handler)) {
    std::string message = handler.message();
    if (message.empty()) message = "invalid JSON";
    throw Error("records: " + message);
  }
  return records;
}

HarmoniseRun run_harmonise(const PipelineConfig& config,
                           const Catalog& catalog,
                           const std::vector<RecordFields>& records,
                           bool strict) {
  const PropertySpec& spec = config.active_spec();
  // The config resolved its unit against some catalog; make sure it was
  // this one before touching any record.
  if (!catalog.contains_iri(spec.unit)) {
    throw Error("unit <" + spec.unit.value() +
                "> is not in the supplied catalog");
  }

  const ColumnMap& columns = config.input.columns;
  HarmoniseRun run;
  run.records = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RecordFields& fields = records[i];
    const std::size_t row = i + 1;

    auto diag = [&]() -> std::optional<RecordDiagnostic> {
      auto lookup = [&](const std::string& column) -> const std::string* {
        auto it = fields.find(column);
        return it == fields.end() ? nullptr : &it->second;
      };
      auto missing = [&](const char* slot, const std::string& column) {
        return RecordDiagnostic{
            row, slot, "missing value for column \"" + column + "\""};
      };
      const std::string* id = lookup(columns.id);
      if (!id) return missing("id", columns.id);
      const std::string* value = lookup(columns.value);
      if (!value) return missing("value", columns.value);
      const std::string* timestamp = lookup(columns.timestamp);
      if (!timestamp) return missing("timestamp", columns.timestamp);
      const std::string* latitude = lookup(columns.latitude);
      if (!latitude) return missing("latitude", columns.latitude);
      const std::string* longitude = lookup(columns.longitude);
      if (!longitude) return missing("longitude", columns.longitude);

      auto coordinate = [&](const char* slot, const std::string& text,
                            double& out) -> std::optional<RecordDiagnostic> {
        const char* begin = text.data();
        const char* end = begin + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr != end) {
          return RecordDiagnostic{row, slot,
                                  "\"" + text + "\" is not a number"};
        }
        return std::nullopt;
      };
      double lat = 0.0;
      double lon = 0.0;
      if (auto bad = coordinate("latitude", *latitude, lat)) return bad;
      if (auto bad = coordinate("longitude", *longitude, lon)) return bad;

      try {
        ObservationRecord record =
            make_observation_record(*id, *value, *timestamp, lat, lon);
        run.graph += harmonise_observation(record, spec, config.policy,
                                           catalog);
        return std::nullopt;
      } catch (const BadIdentifier& e) {
        return RecordDiagnostic{row, "id", e.what()};
      } catch (const NonNumericValue& e) {
        return RecordDiagnostic{row, "value", e.what()};
      } catch (const BadTimestamp& e) {
        return RecordDiagnostic{row, "timestamp", e.what()};
      } catch (const CoordinateOutOfRange& e) {
        return RecordDiagnostic{row, e.axis(), e.what()};
      }
    }();

    if (diag) {
      run.diagnostics.push_back(std::move(*diag));
      ++run.skipped;
      if (strict) break;
    } else {
      ++run.ok;
    }
  }
  return run;
}

}  // namespace harmon
