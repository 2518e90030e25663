#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <string>

#include "harmon/io.hpp"
#include "harmon/serialize.hpp"
#include "testutil.hpp"

using namespace harmon;
using testutil::CommandResult;
using testutil::TempDir;
using testutil::run_command;

namespace {

const std::string cli = CLI_PATH;

std::string fx(const std::string& name) { return testutil::fixture_path(name); }

std::string golden_nt() {
  return to_ntriples_canonical(testutil::golden_sea_temp_graph());
}

}  // namespace

TEST_CASE("codegen writes the catalog and the accessor source") {
  TempDir dir;
  std::string manifest_path = dir.path("units.manifest");
  std::string source_path = dir.path("units.py");
  CommandResult r = run_command(
      cli + " codegen --vocab " + fx("qudt_units.ttl") + " --kind unit" +
          " --template " + fx("unit_accessor.py.tmpl") + " --out-manifest " +
          manifest_path + " --out-source " + source_path,
      dir, "codegen");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3 entries\n");
  CHECK(r.err.empty());

  CHECK(read_file(manifest_path) ==
        testutil::read_fixture("unit_catalog.manifest"));
  std::string source = read_file(source_path);
  CHECK(source.find("def get_qudt_unit_degree_celsius() -> IRI:") !=
        std::string::npos);
  CHECK(source.find("return QUDT_UNIT[\"DEG_C\"]") != std::string::npos);
}

TEST_CASE("codegen agrees across vocabulary formats") {
  TempDir dir;
  auto generate = [&](const std::string& vocab, const std::string& tag) {
    std::string manifest_path = dir.path(tag + ".manifest");
    CommandResult r = run_command(
        cli + " codegen --vocab " + vocab + " --kind unit --template " +
            fx("unit_accessor.py.tmpl") + " --out-manifest " + manifest_path +
            " --out-source " + dir.path(tag + ".py"),
        dir, tag);
    CHECK(r.exit_code == 0);
    return read_file(manifest_path);
  };

  std::string from_ttl = generate(fx("qudt_units.ttl"), "ttl");
  std::string from_srj = generate(fx("qudt_units.srj"), "srj");
  std::string from_csv = generate(fx("qudt_units.csv"), "csv");
  CHECK(from_ttl == from_srj);
  CHECK(from_ttl == from_csv);

  // .json is an accepted alias for SPARQL JSON results.
  std::string alias = dir.path("units.json");
  write_file(alias, testutil::read_fixture("qudt_units.srj"));
  CHECK(generate(alias, "json") == from_ttl);

  CHECK(from_ttl == testutil::read_fixture("unit_catalog.manifest"));
}

TEST_CASE("codegen reports skipped subjects on stderr and keeps going") {
  TempDir dir;
  std::string vocab = dir.path("partial.ttl");
  write_file(vocab,
             "@prefix qudt: <http://qudt.org/schema/qudt/> .\n"
             "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
             "@prefix unit: <http://qudt.org/vocab/unit/> .\n"
             "unit:DEG_C a qudt:Unit ;\n"
             "  rdfs:label \"degree Celsius\"@en .\n"
             "unit:NO_LABEL a qudt:Unit .\n");
  CommandResult r = run_command(
      cli + " codegen --vocab " + vocab + " --kind unit --template " +
          fx("unit_accessor.py.tmpl") + " --out-manifest " +
          dir.path("m") + " --out-source " + dir.path("s"),
      dir, "warn");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 entries\n");
  CHECK(r.err.find("warning: skipped http://qudt.org/vocab/unit/NO_LABEL: "
                   "no usable label") != std::string::npos);
}

TEST_CASE("codegen diagnoses unreadable inputs") {
  TempDir dir;
  std::string base = " --kind unit --template " + fx("unit_accessor.py.tmpl") +
                     " --out-manifest " + dir.path("m") + " --out-source " +
                     dir.path("s");

  std::string broken = dir.path("broken.ttl");
  write_file(broken, "zz:a zz:b zz:c .\n");
  CommandResult parse = run_command(cli + " codegen --vocab " + broken + base,
                                    dir, "parse");
  CHECK(parse.exit_code == 1);
  CHECK(parse.err.find("error: " + broken + ":1:1: ") != std::string::npos);
  CHECK(parse.err.find("[unbound-prefix]") != std::string::npos);

  std::string odd = dir.path("vocab.xml");
  write_file(odd, "<x/>");
  CommandResult ext = run_command(cli + " codegen --vocab " + odd + base, dir,
                                  "ext");
  CHECK(ext.exit_code == 1);
  CHECK(ext.err.find("cannot tell the vocabulary format") !=
        std::string::npos);

  CommandResult kind = run_command(
      cli + " codegen --vocab " + fx("qudt_units.ttl") +
          " --kind units --template " + fx("unit_accessor.py.tmpl") +
          " --out-manifest " + dir.path("m") + " --out-source " + dir.path("s"),
      dir, "kind");
  CHECK(kind.exit_code == 1);
  CHECK(kind.err.find("--kind must be unit, quantity_kind or "
                      "observable_property") != std::string::npos);

  CommandResult gone = run_command(
      cli + " codegen --vocab " + dir.path("absent.ttl") + base, dir, "gone");
  CHECK(gone.exit_code == 1);
  CHECK(gone.err.find("cannot open") != std::string::npos);

  // A malformed results file is named together with the JSON path.
  std::string bad_srj = dir.path("bad.srj");
  write_file(bad_srj, "{\"head\": {\"vars\": [\"unit\"]}}");
  CommandResult srj = run_command(cli + " codegen --vocab " + bad_srj + base,
                                  dir, "srj");
  CHECK(srj.exit_code == 1);
  CHECK(srj.err.find("error: " + bad_srj + ": ") != std::string::npos);
  CHECK(srj.err.find("results") != std::string::npos);
}

TEST_CASE("codegen write failures exit 2") {
  TempDir dir;
  CommandResult r = run_command(
      cli + " codegen --vocab " + fx("qudt_units.ttl") + " --kind unit" +
          " --template " + fx("unit_accessor.py.tmpl") + " --out-manifest " +
          dir.path("no_such_dir/m") + " --out-source " + dir.path("s"),
      dir, "write");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error: cannot write file: ") != std::string::npos);
}

TEST_CASE("harmonise maps the fixture records end to end") {
  TempDir dir;
  std::string command = cli + " harmonise --config " +
                        fx("config_sea_temp.json") + " --catalog " +
                        fx("unit_catalog.manifest") + " --records " +
                        fx("records_sea_temp.csv");
  CommandResult r = run_command(command, dir, "run1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden_nt());
  CHECK(r.err == "records=1 ok=1 skipped=0 triples=8\n");

  // Deterministic minting: a second run is byte-identical.
  CommandResult again = run_command(command, dir, "run2");
  CHECK(again.out == r.out);
  CHECK(again.err == r.err);
}

TEST_CASE("harmonise --out writes the file instead of stdout") {
  TempDir dir;
  std::string out_path = dir.path("obs.nt");
  CommandResult r = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + fx("unit_catalog.manifest") + " --records " +
          fx("records_sea_temp.csv") + " --out " + out_path,
      dir, "out");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(out_path) == golden_nt());

  // The linter accepts the pipeline's own output.
  CommandResult lint = run_command(cli + " lint --graph " + out_path, dir,
                                   "lint");
  CHECK(lint.exit_code == 0);
  CHECK(lint.out.empty());
  CHECK(lint.err.empty());
}

TEST_CASE("harmonise skips bad records and exits 3") {
  TempDir dir;
  std::string records = dir.path("records.csv");
  write_file(records,
             "id,sea_temperature_celsius,timestamp,latitude,longitude\n"
             "1234,4.6,2025-06-27T01:00:00Z,70.41,0.00\n"
             "99,four,2025-06-27T02:00:00Z,60.0,5.0\n");
  CommandResult r = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + fx("unit_catalog.manifest") + " --records " +
          records,
      dir, "skip");
  CHECK(r.exit_code == 3);
  // The good record still made it into the output.
  CHECK(r.out == golden_nt());
  CHECK(r.err.find("record 2, field \"value\": ") != std::string::npos);
  CHECK(r.err.find("records=2 ok=1 skipped=1 triples=8\n") !=
        std::string::npos);
}

TEST_CASE("harmonise --strict aborts without writing") {
  TempDir dir;
  std::string records = dir.path("records.csv");
  write_file(records,
             "id,sea_temperature_celsius,timestamp,latitude,longitude\n"
             "99,four,2025-06-27T02:00:00Z,60.0,5.0\n"
             "1234,4.6,2025-06-27T01:00:00Z,70.41,0.00\n");
  std::string out_path = dir.path("obs.nt");
  CommandResult r = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + fx("unit_catalog.manifest") + " --records " +
          records + " --out " + out_path + " --strict",
      dir, "strict");
  CHECK(r.exit_code == 3);
  CHECK(r.out.empty());
  CHECK(!std::filesystem::exists(out_path));
  CHECK(r.err.find("record 1, field \"value\": ") != std::string::npos);
  CHECK(r.err.find("records=2 ok=0 skipped=1 triples=0\n") !=
        std::string::npos);
}

TEST_CASE("harmonise names the failing input file") {
  TempDir dir;
  std::string good_tail = " --catalog " + fx("unit_catalog.manifest") +
                          " --records " + fx("records_sea_temp.csv");

  std::string bad_config = dir.path("bad_config.json");
  write_file(bad_config, "{\"x\": 1}");
  CommandResult config = run_command(
      cli + " harmonise --config " + bad_config + good_tail, dir, "config");
  CHECK(config.exit_code == 1);
  CHECK(config.err.find("error: " + bad_config + ": config") !=
        std::string::npos);

  std::string bad_catalog = dir.path("bad.manifest");
  write_file(bad_catalog, "not a manifest line\n");
  CommandResult catalog = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + bad_catalog + " --records " +
          fx("records_sea_temp.csv"),
      dir, "catalog");
  CHECK(catalog.exit_code == 1);
  CHECK(catalog.err.find("error: " + bad_catalog + ": ") != std::string::npos);

  std::string ragged = dir.path("ragged.csv");
  write_file(ragged,
             "id,sea_temperature_celsius,timestamp,latitude,longitude\n"
             "1,2,3\n");
  CommandResult records = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + fx("unit_catalog.manifest") + " --records " + ragged,
      dir, "records");
  CHECK(records.exit_code == 1);
  CHECK(records.err.find("error: " + ragged +
                         ": CSV error in row 2: expected 5 cells, found 3") !=
        std::string::npos);

  CommandResult gone = run_command(
      cli + " harmonise --config " + fx("config_sea_temp.json") +
          " --catalog " + fx("unit_catalog.manifest") + " --records " +
          dir.path("absent.csv"),
      dir, "gone");
  CHECK(gone.exit_code == 1);
  CHECK(gone.err.find("cannot open") != std::string::npos);
}

TEST_CASE("lint accepts the reference listing") {
  TempDir dir;
  CommandResult r = run_command(
      cli + " lint --graph " + fx("sea_temp_listing.ttl"), dir, "ok");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("lint reports shape violations with their subject") {
  TempDir dir;
  std::string graph = dir.path("broken.ttl");
  write_file(graph,
             "@prefix sosa: <http://www.w3.org/ns/sosa/> .\n"
             "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
             "<http://x/obs> a sosa:Observation ;\n"
             "  sosa:observedProperty <http://x/p> ;\n"
             "  sosa:hasFeatureOfInterest <http://x/f> ;\n"
             "  sosa:resultTime \"2025-06-27T01:00:00Z\"^^xsd:dateTime .\n");
  CommandResult r = run_command(cli + " lint --graph " + graph, dir, "one");
  CHECK(r.exit_code == 4);
  CHECK(r.out ==
        "<http://x/obs>: expected exactly 1 sosa:hasResult, found 0\n");
  CHECK(r.err == "1 violation\n");

  std::string graph2 = dir.path("broken2.ttl");
  write_file(graph2,
             "@prefix sosa: <http://www.w3.org/ns/sosa/> .\n"
             "@prefix qudt: <http://qudt.org/schema/qudt/> .\n"
             "<http://x/obs> a sosa:Observation ;\n"
             "  sosa:observedProperty <http://x/p> ;\n"
             "  sosa:hasFeatureOfInterest <http://x/f> ;\n"
             "  sosa:hasResult <http://x/res> ;\n"
             "  sosa:resultTime \"yesterday\" .\n"
             "<http://x/res> a qudt:QuantityValue ;\n"
             "  qudt:numericValue \"4.6\" ;\n"
             "  qudt:unit \"celsius\" .\n");
  CommandResult two = run_command(cli + " lint --graph " + graph2, dir, "two");
  CHECK(two.exit_code == 4);
  CHECK(two.out.find("<http://x/obs>: sosa:resultTime object is not an "
                     "xsd:dateTime literal\n") != std::string::npos);
  CHECK(two.out.find("<http://x/res>: qudt:unit object is not an IRI\n") !=
        std::string::npos);
  CHECK(two.err == "2 violations\n");

  CommandResult parse = run_command(
      cli + " lint --graph " + fx("records_sea_temp.csv"), dir, "parse");
  CHECK(parse.exit_code == 1);
  CHECK(parse.err.find("error: ") != std::string::npos);
}

TEST_CASE("usage errors exit 1, --help exits 0") {
  TempDir dir;
  CHECK(run_command(cli, dir, "bare").exit_code == 1);
  CHECK(run_command(cli + " frobnicate", dir, "unknown").exit_code == 1);
  CHECK(run_command(cli + " codegen --kind unit", dir, "missing").exit_code ==
        1);

  CommandResult help = run_command(cli + " --help", dir, "help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("codegen") != std::string::npos);
  CHECK(help.out.find("harmonise") != std::string::npos);
  CHECK(help.out.find("lint") != std::string::npos);
}
