#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "harmon/catalog.hpp"
#include "harmon/codegen.hpp"
#include "harmon/error.hpp"
#include "harmon/graph.hpp"
#include "harmon/io.hpp"
#include "harmon/lint.hpp"
#include "harmon/pipeline.hpp"
#include "harmon/serialize.hpp"
#include "harmon/sparql_results.hpp"
#include "harmon/turtle_reader.hpp"

namespace {

std::string file_extension(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return "";
  }
  std::string ext = path.substr(dot + 1);
  for (char& c : ext) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return ext;
}

harmon::Graph load_graph_file(const std::string& path) {
  std::string text = harmon::read_file(path);
  try {
    return harmon::parse_turtle(text).graph;
  } catch (const harmon::ParseError& e) {
    const harmon::ParseDiagnostic& d = e.diagnostic();
    throw harmon::Error(path + ":" + std::to_string(d.line) + ":" +
                        std::to_string(d.column) + ": " + d.message + " [" +
                        std::string(harmon::to_string(d.kind)) + "]");
  }
}

struct CodegenArgs {
  std::string vocab;
  std::string kind;
  std::string template_path;
  std::string out_manifest;
  std::string out_source;
};

int cmd_codegen(const CodegenArgs& args) {
  std::optional<harmon::VocabKind> kind =
      harmon::vocab_kind_from_string(args.kind);
  if (!kind) {
    std::cerr << "error: --kind must be unit, quantity_kind or "
                 "observable_property\n";
    return 1;
  }

  std::string ext = file_extension(args.vocab);
  harmon::ExtractedVocab extracted;
  if (ext == "ttl" || ext == "nt") {
    extracted = harmon::extract_vocab_entries(load_graph_file(args.vocab),
                                              *kind);
  } else if (ext == "srj" || ext == "json") {
    std::string text = harmon::read_file(args.vocab);
    try {
      extracted = harmon::extract_vocab_entries(
          harmon::parse_sparql_results_json(text), *kind);
    } catch (const harmon::MalformedResults& e) {
      throw harmon::Error(args.vocab + ": " + e.what());
    }
  } else if (ext == "csv") {
    std::string text = harmon::read_file(args.vocab);
    try {
      extracted = harmon::extract_vocab_entries(
          harmon::parse_sparql_results_csv(text), *kind);
    } catch (const harmon::MalformedResults& e) {
      throw harmon::Error(args.vocab + ": " + e.what());
    } catch (const harmon::CsvError& e) {
      throw harmon::Error(args.vocab + ": " + e.what());
    }
  } else {
    std::cerr << "error: cannot tell the vocabulary format of \"" << args.vocab
              << "\" (expected .ttl, .nt, .srj, .json or .csv)\n";
    return 1;
  }

  for (const std::string& warning : extracted.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }

  std::string template_text = harmon::read_file(args.template_path);
  harmon::GeneratedCatalog generated = harmon::generate_catalog(
      std::move(extracted.entries), template_text, *kind);
  harmon::write_file(args.out_manifest, generated.manifest);
  harmon::write_file(args.out_source, generated.source);
  std::cout << generated.catalog.size() << " entries\n";
  return 0;
}

struct HarmoniseArgs {
  std::string config;
  std::string catalog;
  std::string records;
  std::string out;
  bool out_given = false;
  bool strict = false;
};

int cmd_harmonise(const HarmoniseArgs& args) {
  harmon::Catalog catalog = [&] {
    std::string text = harmon::read_file(args.catalog);
    try {
      return harmon::load_catalog(text);
    } catch (const harmon::Error& e) {
      throw harmon::Error(args.catalog + ": " + e.what());
    }
  }();

  harmon::PipelineConfig config = [&] {
    std::string text = harmon::read_file(args.config);
    try {
      return harmon::load_pipeline_config(text, catalog);
    } catch (const harmon::ConfigError& e) {
      throw harmon::Error(args.config + ": " + e.what());
    }
  }();

  std::vector<harmon::RecordFields> records = [&] {
    std::string text = harmon::read_file(args.records);
    try {
      if (config.input.format == harmon::RecordsFormat::csv) {
        return harmon::read_records_csv(text, config.input.columns);
      }
      return harmon::read_records_json(text);
    } catch (const harmon::Error& e) {
      throw harmon::Error(args.records + ": " + e.what());
    }
  }();

  harmon::HarmoniseRun run =
      harmon::run_harmonise(config, catalog, records, args.strict);
  for (const harmon::RecordDiagnostic& d : run.diagnostics) {
    std::cerr << "record " << d.row << ", field \"" << d.field
              << "\": " << d.reason << '\n';
  }

  // A strict run that hit a bad record aborts without writing anything.
  bool failed = run.skipped > 0;
  if (!(args.strict && failed)) {
    std::string output = harmon::serialize_graph(
        run.graph, {config.output.format, config.namespaces});
    if (args.out_given) {
      harmon::write_file(args.out, output);
    } else if (config.output.path) {
      harmon::write_file(*config.output.path, output);
    } else {
      std::cout << output;
    }
  }

  std::cerr << "records=" << run.records << " ok=" << run.ok
            << " skipped=" << run.skipped << " triples=" << run.graph.size()
            << '\n';
  return failed ? 3 : 0;
}

int cmd_lint(const std::string& graph_path) {
  harmon::Graph graph = load_graph_file(graph_path);
  std::vector<harmon::LintViolation> violations = harmon::lint_graph(graph);
  for (const harmon::LintViolation& v : violations) {
    std::cout << harmon::to_ntriples(v.subject) << ": " << v.message << '\n';
  }
  if (!violations.empty()) {
    std::cerr << violations.size()
              << (violations.size() == 1 ? " violation\n" : " violations\n");
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SOSA/QUDT measurement graph toolkit", "harmon"};
  app.require_subcommand(1);

  CodegenArgs codegen_args;
  CLI::App* codegen = app.add_subcommand(
      "codegen",
      "Generate a vocabulary catalog and accessor source from RDF or SPARQL "
      "results");
  codegen->add_option("--vocab", codegen_args.vocab,
                      "Vocabulary input (.ttl, .nt, .srj, .json or .csv)")
      ->required();
  codegen->add_option("--kind", codegen_args.kind,
                      "unit, quantity_kind or observable_property")
      ->required();
  codegen->add_option("--template", codegen_args.template_path,
                      "Accessor template file")
      ->required();
  codegen->add_option("--out-manifest", codegen_args.out_manifest,
                      "Where to write the catalog manifest")
      ->required();
  codegen->add_option("--out-source", codegen_args.out_source,
                      "Where to write the rendered accessor source")
      ->required();

  HarmoniseArgs harmonise_args;
  CLI::App* harmonise = app.add_subcommand(
      "harmonise", "Map source records to SOSA/QUDT observation graphs");
  harmonise->add_option("--config", harmonise_args.config,
                        "Pipeline config (JSON, comments allowed)")
      ->required();
  harmonise->add_option("--catalog", harmonise_args.catalog,
                        "Unit catalog manifest")
      ->required();
  harmonise->add_option("--records", harmonise_args.records,
                        "Source records (format per config input.format)")
      ->required();
  harmonise->add_option("--out", harmonise_args.out,
                        "Output file (default: config output.path, else "
                        "stdout)");
  harmonise->add_flag("--strict", harmonise_args.strict,
                      "Stop at the first bad record");

  std::string lint_graph_path;
  CLI::App* lint = app.add_subcommand(
      "lint", "Check a graph against the observation shape rules");
  lint->add_option("--graph", lint_graph_path, "Graph file (.ttl or .nt)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  harmonise_args.out_given = harmonise->count("--out") > 0;

  try {
    if (codegen->parsed()) return cmd_codegen(codegen_args);
    if (harmonise->parsed()) return cmd_harmonise(harmonise_args);
    return cmd_lint(lint_graph_path);
  } catch (const harmon::WriteError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
