#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmon/catalog.hpp"
#include "harmon/graph.hpp"
#include "harmon/namespace_map.hpp"
#include "harmon/patterns.hpp"
#include "harmon/serialize.hpp"

namespace harmon {

// Which source column (or JSON field) feeds each record slot. Names default
// to the slot names themselves.
struct ColumnMap {
  std::string id = "id";
  std::string value = "value";
  std::string timestamp = "timestamp";
  std::string latitude = "latitude";
  std::string longitude = "longitude";
};

enum class RecordsFormat { csv, json };

struct InputSpec {
  RecordsFormat format = RecordsFormat::csv;
  std::string property;  // names the active property spec
  ColumnMap columns;
};

struct OutputSpec {
  OutputFormat format = OutputFormat::ntriples_canonical;
  std::optional<std::string> path;
};

struct NamedSpec {
  std::string name;
  PropertySpec spec;
};

struct PipelineConfig {
  NamespaceMap namespaces;
  IriPolicy policy;
  std::vector<NamedSpec> specs;
  InputSpec input;
  OutputSpec output;
  std::size_t active_index = 0;

  const PropertySpec& active_spec() const { return specs[active_index].spec; }
};

// Parses and fully resolves a pipeline config. The text is JSON, with //
// and /* */ comments allowed. Every key is checked: unknown keys are
// configuration errors, not extensions. Property specs resolve their unit
// through the catalog's accessor names and their CURIEs through the
// config's own namespaces, so a config that loads cleanly needs no further
// name resolution at run time.
PipelineConfig load_pipeline_config(std::string_view text,
                                    const Catalog& catalog);

// One source record as raw text fields; absent fields are simply missing
// keys. Parsing and validation happen later, per record, so one bad record
// never poisons the batch.
using RecordFields = std::map<std::string, std::string, std::less<>>;

// Reads records from CSV with a header row. The five mapped columns must
// all be present in the header; rows must be rectangular.
std::vector<RecordFields> read_records_csv(std::string_view text,
                                           const ColumnMap& columns);

// Reads records from a JSON array of flat objects. Scalars become text
// (floats keep their source token verbatim), null means absent, and any
// nested array or object is an error.
std::vector<RecordFields> read_records_json(std::string_view text);

struct RecordDiagnostic {
  std::size_t row = 0;  // 1-based record ordinal
  std::string field;    // id, value, timestamp, latitude or longitude
  std::string reason;
};

struct HarmoniseRun {
  Graph graph;
  std::size_t records = 0;
  std::size_t ok = 0;
  std::size_t skipped = 0;
  std::vector<RecordDiagnostic> diagnostics;
};

// Maps every record through the active property spec, collecting one
// diagnostic per bad record. In strict mode the run stops at the first bad
// record instead of skipping it. Zero records is a valid (empty) run.
HarmoniseRun run_harmonise(const PipelineConfig& config,
                           const Catalog& catalog,
                           const std::vector<RecordFields>& records,
                           bool strict);

}  // namespace harmon
