#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "harmon/patterns.hpp"
#include "harmon/serialize.hpp"
#include "harmon/vocab.hpp"
#include "testutil.hpp"

using namespace harmon;

namespace {

IriPolicy example_policy() {
  return IriPolicy::deterministic(
      Iri("http://example.org/obs/"), Iri("http://example.org/res/"),
      Iri("http://example.org/feat/"), Iri("http://example.org/prop/"));
}

IriPolicy oim_policy() {
  return IriPolicy::deterministic(
      Iri("https://w3id.org/oim/obs/"), Iri("https://w3id.org/oim/res/"),
      Iri("https://w3id.org/oim/feat/"), Iri("https://w3id.org/oim/prop/"));
}

Catalog fixture_catalog() {
  return load_catalog(testutil::read_fixture("unit_catalog.manifest"));
}

PropertySpec sea_temp_spec() {
  return PropertySpec("sea_temperature",
                      Iri("https://w3id.org/oim/prop/seaTemperature"),
                      Iri("http://qudt.org/vocab/unit/DEG_C"),
                      vocab::xsd_float());
}

ObservationRecord sea_temp_record() {
  return make_observation_record("1234", "4.6", "2025-06-27T01:00:00Z", 70.41,
                                 0.0);
}

bool is_hex16(std::string_view s) {
  if (s.size() != 16) return false;
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("coordinate formatting") {
  struct Case {
    double value;
    const char* expected;
  };
  const Case cases[] = {
      {0.0, "0.0"},      {-0.0, "0.0"},      {4.6, "4.6"},
      {70.41, "70.41"},  {-3.25, "-3.25"},   {90.0, "90.0"},
      {-90.0, "-90.0"},  {180.0, "180.0"},   {-180.0, "-180.0"},
      {5.0, "5.0"},      {-7.0, "-7.0"},     {12.10, "12.1"},
      {1e-7, "0.0000001"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.expected);
    CHECK(format_coordinate(c.value) == c.expected);
  }

  CHECK_THROWS_AS(format_coordinate(std::nan("")), Error);
  CHECK_THROWS_AS(format_coordinate(HUGE_VAL), Error);

  // Round-trip property: shortest fixed form that restores the exact double,
  // always with a fractional part and never a trailing zero after it.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lat(-90.0, 90.0);
  for (int i = 0; i < 2000; ++i) {
    double v = lat(rng);
    std::string s = format_coordinate(v);
    CAPTURE(s);
    CHECK(std::stod(s) == v);
    auto dot = s.find('.');
    REQUIRE(dot != std::string::npos);
    CHECK(s.find('e') == std::string::npos);
    CHECK(s.find('E') == std::string::npos);
    if (s.size() > dot + 2) CHECK(s.back() != '0');
  }
}

TEST_CASE("IRI policy validates its bases") {
  Iri good("http://example.org/ns/");
  Iri bad("http://example.org/ns");
  CHECK_THROWS_WITH_AS(IriPolicy::deterministic(bad, good, good, good),
                       "observation base IRI must end in '/' or '#': "
                       "http://example.org/ns",
                       Error);
  CHECK_THROWS_WITH_AS(IriPolicy::deterministic(good, bad, good, good),
                       "result base IRI must end in '/' or '#': "
                       "http://example.org/ns",
                       Error);
  CHECK_THROWS_WITH_AS(IriPolicy::deterministic(good, good, bad, good),
                       "feature base IRI must end in '/' or '#': "
                       "http://example.org/ns",
                       Error);
  CHECK_THROWS_WITH_AS(IriPolicy::deterministic(good, good, good, bad),
                       "property base IRI must end in '/' or '#': "
                       "http://example.org/ns",
                       Error);
  // '#' is as good as '/'.
  CHECK_NOTHROW(IriPolicy::deterministic(Iri("urn:x#"), good, good, good));
}

TEST_CASE("observation IRI minting") {
  IriPolicy policy = example_policy();
  CHECK(mint_observation_iri(policy, "sea_temperature", "1234") ==
        Iri("http://example.org/obs/sea_temperature_1234"));
  CHECK(mint_observation_iri(policy, "k", "aZ9_.-") ==
        Iri("http://example.org/obs/k_aZ9_.-"));

  for (const char* bad : {"", "a b", "a/b", "a#b", "b\xC3\xBCoy"}) {
    CAPTURE(bad);
    try {
      mint_observation_iri(policy, "k", bad);
      FAIL_CHECK("expected BadIdentifier");
    } catch (const BadIdentifier& e) {
      CHECK(e.id() == bad);
    }
  }
}

TEST_CASE("result IRI minting: deterministic vs random") {
  IriPolicy det = example_policy();
  CHECK(mint_result_iri(det, "sea_temperature", "1234") ==
        Iri("http://example.org/res/sea_temperature_1234"));
  CHECK_THROWS_AS(mint_result_iri(det, "k", "bad id"), BadIdentifier);
  CHECK_THROWS_AS(det.id_generator(), Error);

  IriPolicy rnd = IriPolicy::random(
      Iri("http://example.org/obs/"), Iri("http://example.org/res/"),
      Iri("http://example.org/feat/"), Iri("http://example.org/prop/"), 42);
  Iri first = mint_result_iri(rnd, "k", "1234");
  Iri second = mint_result_iri(rnd, "k", "1234");
  CHECK(first != second);
  std::string prefix = "http://example.org/res/k_";
  REQUIRE(first.value().substr(0, prefix.size()) == prefix);
  CHECK(is_hex16(first.value().substr(prefix.size())));
  // The record id is ignored entirely in random mode.
  CHECK_NOTHROW(mint_result_iri(rnd, "k", "not a valid id"));

  // Same seed, same sequence.
  IriPolicy rnd2 = IriPolicy::random(
      Iri("http://example.org/obs/"), Iri("http://example.org/res/"),
      Iri("http://example.org/feat/"), Iri("http://example.org/prop/"), 42);
  CHECK(mint_result_iri(rnd2, "k", "x") == first);
  CHECK(mint_result_iri(rnd2, "k", "x") == second);
  mint_result_iri(rnd2, "k", "x");  // sync with rnd's bad-id draw above

  // Copies share one generator: the copy continues the sequence instead of
  // restarting it.
  IriPolicy copy = rnd;
  Iri third = mint_result_iri(copy, "k", "x");
  CHECK(third != first);
  CHECK(third != second);
  Iri fourth = mint_result_iri(rnd2, "k", "x");
  CHECK(third == fourth);
}

TEST_CASE("id generator tokens are unique, reproducible, thread-safe") {
  IdGenerator gen(123);
  std::set<std::string> seen;
  for (int i = 0; i < 10000; ++i) {
    std::string token = gen.next();
    CHECK(is_hex16(token));
    CHECK(seen.insert(token).second);
  }

  IdGenerator a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  IdGenerator shared(5);
  std::vector<std::vector<std::string>> drawn(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&shared, &drawn, t] {
      for (int i = 0; i < 1000; ++i) drawn[t].push_back(shared.next());
    });
  }
  for (std::thread& t : threads) t.join();
  std::set<std::string> all;
  for (const auto& v : drawn) all.insert(v.begin(), v.end());
  CHECK(all.size() == 4000);
}

TEST_CASE("feature IRIs encode the location") {
  IriPolicy policy = example_policy();
  CHECK(mint_feature_iri_from_location(policy, 70.41, 0.0) ==
        Iri("http://example.org/feat/loc_70.41_0.0"));
  CHECK(mint_feature_iri_from_location(policy, -90.0, 180.0) ==
        Iri("http://example.org/feat/loc_-90.0_180.0"));
  CHECK(mint_feature_iri_from_location(policy, 0.0, -0.0) ==
        Iri("http://example.org/feat/loc_0.0_0.0"));

  struct Bad {
    double lat, lon;
    const char* axis;
  };
  const Bad bads[] = {
      {90.01, 0.0, "latitude"},
      {-90.5, 0.0, "latitude"},
      {std::nan(""), 0.0, "latitude"},
      {0.0, 180.5, "longitude"},
      {0.0, -181.0, "longitude"},
      {0.0, HUGE_VAL, "longitude"},
  };
  for (const Bad& b : bads) {
    CAPTURE(b.axis);
    try {
      mint_feature_iri_from_location(policy, b.lat, b.lon);
      FAIL_CHECK("expected CoordinateOutOfRange");
    } catch (const CoordinateOutOfRange& e) {
      CHECK(e.axis() == b.axis);
    }
  }
}

TEST_CASE("unit accessor lookup suggests the nearest name") {
  Catalog catalog = fixture_catalog();
  CHECK(unit_accessor(catalog, "get_qudt_unit_degree_celsius") ==
        Iri("http://qudt.org/vocab/unit/DEG_C"));
  try {
    unit_accessor(catalog, "get_qudt_unit_degree_celsis");
    FAIL("expected UnknownAccessor");
  } catch (const UnknownAccessor& e) {
    CHECK(e.name() == "get_qudt_unit_degree_celsis");
    CHECK(e.suggestion() == "get_qudt_unit_degree_celsius");
    CHECK(std::string(e.what()).find("did you mean") != std::string::npos);
  }
  try {
    unit_accessor(Catalog(), "anything");
    FAIL("expected UnknownAccessor");
  } catch (const UnknownAccessor& e) {
    CHECK(e.suggestion().empty());
    CHECK(std::string(e.what()).find("did you mean") == std::string::npos);
  }
}

TEST_CASE("property spec validates the kind slug") {
  Iri p("http://example.org/p");
  Iri u("http://example.org/u");
  CHECK_NOTHROW(PropertySpec("sea_temperature", p, u, vocab::xsd_float()));
  CHECK_NOTHROW(PropertySpec("a", p, u, vocab::xsd_float()));
  CHECK_NOTHROW(PropertySpec("x9_y", p, u, vocab::xsd_float()));
  for (const char* bad : {"", "Sea", "9x", "a-b", "a b", "_x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(PropertySpec(bad, p, u, vocab::xsd_float()), Error);
  }
}

TEST_CASE("xsd:dateTime validation") {
  const char* valid[] = {
      "2025-06-27T01:00:00Z",
      "2025-06-27T01:00:00.5Z",
      "2025-06-27T01:00:00.123456Z",
      "2025-06-27T23:59:59+02:00",
      "2025-06-27T00:00:00-09:30",
      "2025-06-27T12:00:00+14:00",
      "2024-02-29T00:00:00Z",  // leap year
      "2000-02-29T00:00:00Z",  // 400-year leap
      "0001-01-01T00:00:00Z",
      "9999-12-31T23:59:59.999999+13:59",
  };
  for (const char* t : valid) {
    CAPTURE(t);
    CHECK(is_valid_xsd_datetime(t));
  }
  const char* invalid[] = {
      "",
      "2025-06-27",
      "2025-06-27T01:00:00",        // zone is mandatory here
      "2025-06-27 01:00:00Z",       // space instead of 'T'
      "2025-06-27t01:00:00z",       // case matters
      "2025-13-01T00:00:00Z",       // month 13
      "2025-00-10T00:00:00Z",       // month 0
      "2025-06-00T00:00:00Z",       // day 0
      "2025-06-31T00:00:00Z",       // June has 30 days
      "2023-02-29T00:00:00Z",       // not a leap year
      "1900-02-29T00:00:00Z",       // century non-leap
      "2025-6-27T01:00:00Z",        // one-digit month
      "25-06-27T01:00:00Z",         // two-digit year
      "2025-06-27T24:00:00Z",       // hour 24
      "2025-06-27T01:60:00Z",       // minute 60
      "2025-06-27T01:00:60Z",       // leap second
      "2025-06-27T01:00:00.Z",      // empty fraction
      "2025-06-27T01:00:00+15:00",  // zone beyond +-14
      "2025-06-27T01:00:00+14:01",  // 14h zone must be exact
      "2025-06-27T01:00:00+00:60",
      "2025-06-27T01:00:00+1:00",
      "2025-06-27T01:00:00Zjunk",
      "2025-06-27T01:00:00+02:00 ",
  };
  for (const char* t : invalid) {
    CAPTURE(t);
    CHECK(!is_valid_xsd_datetime(t));
  }
}

TEST_CASE("decimal value parsing") {
  CHECK(parse_decimal_value("4.6") == doctest::Approx(4.6));
  CHECK(parse_decimal_value("+4.6") == doctest::Approx(4.6));
  CHECK(parse_decimal_value("-0.5") == doctest::Approx(-0.5));
  CHECK(parse_decimal_value("5") == 5.0);
  CHECK(parse_decimal_value(".5") == 0.5);
  CHECK(parse_decimal_value("1e3") == 1000.0);
  CHECK(parse_decimal_value("1E-2") == doctest::Approx(0.01));

  for (const char* bad :
       {"", "abc", "4,6", "inf", "nan", "--4", "4.6.7", "1e999", " 4.6",
        "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_decimal_value(bad), NonNumericValue);
  }
}

TEST_CASE("observation records validate on construction") {
  ObservationRecord r = sea_temp_record();
  CHECK(r.id == "1234");
  CHECK(r.value_lexical == "4.6");
  CHECK(r.value_magnitude == doctest::Approx(4.6));
  CHECK(r.timestamp == "2025-06-27T01:00:00Z");

  CHECK_THROWS_AS(make_observation_record("1", "not a number",
                                          "2025-06-27T01:00:00Z", 0, 0),
                  NonNumericValue);
  CHECK_THROWS_AS(
      make_observation_record("1", "4.6", "2025-06-27T01:00:00", 0, 0),
      BadTimestamp);
  try {
    make_observation_record("1", "4.6", "2025-06-27T01:00:00Z", 91.0, 0);
    FAIL("expected CoordinateOutOfRange");
  } catch (const CoordinateOutOfRange& e) {
    CHECK(e.axis() == "latitude");
  }
  try {
    make_observation_record("1", "4.6", "2025-06-27T01:00:00Z", 0, -181.0);
    FAIL("expected CoordinateOutOfRange");
  } catch (const CoordinateOutOfRange& e) {
    CHECK(e.axis() == "longitude");
  }

  // The id is only checked when an IRI is minted from it.
  ObservationRecord anon =
      make_observation_record("", "4.6", "2025-06-27T01:00:00Z", 0, 0);
  CHECK_THROWS_AS(harmonise_observation(anon, sea_temp_spec(), oim_policy(),
                                        fixture_catalog()),
                  BadIdentifier);
}

TEST_CASE("observation builder emits exactly its four triples") {
  Iri obs("http://example.org/obs/k_1");
  Iri feat("http://example.org/feat/loc_0.0_0.0");
  Iri prop("http://example.org/prop/p");
  Literal time("2025-06-27T01:00:00Z", vocab::xsd_dateTime());

  Graph g = create_sosa_observation(obs, feat, prop, time);
  Graph expected;
  expected.insert(Triple(obs, vocab::rdf_type(), vocab::sosa_Observation()));
  expected.insert(Triple(obs, vocab::sosa_hasFeatureOfInterest(), feat));
  expected.insert(Triple(obs, vocab::sosa_observedProperty(), prop));
  expected.insert(Triple(obs, vocab::sosa_resultTime(), time));
  CHECK(ground_equal(g, expected));

  CHECK_THROWS_AS(
      create_sosa_observation(obs, feat, prop, Literal("2025-06-27T01:00:00Z")),
      BadTimestamp);
  CHECK_THROWS_AS(create_sosa_observation(
                      obs, feat, prop,
                      Literal("2025-06-27T01:00:00Z", vocab::xsd_string())),
                  BadTimestamp);
  CHECK_THROWS_AS(
      create_sosa_observation(obs, feat, prop,
                              Literal("yesterday", vocab::xsd_dateTime())),
      BadTimestamp);
}

TEST_CASE("quantity value builder emits exactly its four triples") {
  Iri obs("http://example.org/obs/k_1");
  Iri result("http://example.org/res/k_1");
  Iri unit("http://qudt.org/vocab/unit/DEG_C");
  Literal value("4.6", vocab::xsd_float());

  auto [minted, g] = create_quantity_value_result(obs, value, unit, result);
  CHECK(minted == result);
  Graph expected;
  expected.insert(Triple(obs, vocab::sosa_hasResult(), result));
  expected.insert(
      Triple(result, vocab::rdf_type(), vocab::qudt_QuantityValue()));
  expected.insert(Triple(result, vocab::qudt_numericValue(), value));
  expected.insert(Triple(result, vocab::qudt_unit(), unit));
  CHECK(ground_equal(g, expected));

  // Value lexical forms pass through untouched.
  auto [r2, g2] = create_quantity_value_result(
      obs, Literal("4.60", vocab::xsd_decimal()), unit, result);
  CHECK(g2.contains(Triple(result, vocab::qudt_numericValue(),
                           Literal("4.60", vocab::xsd_decimal()))));
  CHECK(!g2.contains(Triple(result, vocab::qudt_numericValue(),
                            Literal("4.6", vocab::xsd_decimal()))));

  CHECK_NOTHROW(create_quantity_value_result(
      obs, Literal("4.6", vocab::xsd_double()), unit, result));
  CHECK_THROWS_AS(
      create_quantity_value_result(obs, Literal("4.6"), unit, result),
      NonNumericValue);
  CHECK_THROWS_AS(create_quantity_value_result(
                      obs, Literal("4.6", vocab::xsd_string()), unit, result),
                  NonNumericValue);
  CHECK_THROWS_AS(create_quantity_value_result(
                      obs, Literal("4", vocab::xsd_integer()), unit, result),
                  NonNumericValue);
}

TEST_CASE("harmonised observation is the union of the two builders") {
  IriPolicy policy = oim_policy();
  PropertySpec spec = sea_temp_spec();
  ObservationRecord record = sea_temp_record();
  Catalog catalog = fixture_catalog();

  Graph whole = harmonise_observation(record, spec, policy, catalog);
  CHECK(whole.size() == 8);

  Iri obs = mint_observation_iri(policy, spec.kind_slug, record.id);
  Iri result = mint_result_iri(policy, spec.kind_slug, record.id);
  Iri feature = mint_feature_iri_from_location(policy, record.latitude,
                                               record.longitude);
  Graph parts = create_sosa_observation(
      obs, feature, spec.observed_property,
      Literal(record.timestamp, vocab::xsd_dateTime()));
  parts += create_quantity_value_result(
               obs, Literal(record.value_lexical, spec.value_datatype),
               spec.unit, result)
               .second;
  CHECK(ground_equal(whole, parts));

  // And it matches the graph spelled out by hand.
  CHECK(ground_equal(whole, testutil::golden_sea_temp_graph()));
}

TEST_CASE("harmonising requires the unit to be in the catalog") {
  PropertySpec spec("sea_temperature",
                    Iri("https://w3id.org/oim/prop/seaTemperature"),
                    Iri("http://qudt.org/vocab/unit/NOT_THERE"),
                    vocab::xsd_float());
  CHECK_THROWS_AS(harmonise_observation(sea_temp_record(), spec, oim_policy(),
                                        fixture_catalog()),
                  UnknownAccessor);
}

TEST_CASE("random-mode harmonisation keeps the observation stable") {
  IriPolicy policy = IriPolicy::random(
      Iri("https://w3id.org/oim/obs/"), Iri("https://w3id.org/oim/res/"),
      Iri("https://w3id.org/oim/feat/"), Iri("https://w3id.org/oim/prop/"),
      99);
  Graph g1 = harmonise_observation(sea_temp_record(), sea_temp_spec(), policy,
                                   fixture_catalog());
  Graph g2 = harmonise_observation(sea_temp_record(), sea_temp_spec(), policy,
                                   fixture_catalog());
  CHECK(g1.size() == 8);
  CHECK(g2.size() == 8);

  Term obs(Iri("https://w3id.org/oim/obs/sea_temperature_1234"));
  auto r1 = g1.match(obs, Term(vocab::sosa_hasResult()), std::nullopt);
  auto r2 = g2.match(obs, Term(vocab::sosa_hasResult()), std::nullopt);
  REQUIRE(r1.size() == 1);
  REQUIRE(r2.size() == 1);
  CHECK(!(r1[0].object() == r2[0].object()));
  // Everything except the result identity is unchanged.
  CHECK(g1.contains(Triple(Iri("https://w3id.org/oim/obs/sea_temperature_1234"),
                           vocab::rdf_type(), vocab::sosa_Observation())));
  CHECK(g2.contains(Triple(Iri("https://w3id.org/oim/obs/sea_temperature_1234"),
                           vocab::rdf_type(), vocab::sosa_Observation())));
}

TEST_CASE("harmoniser registry") {
  std::vector<PropertySpec> specs;
  specs.push_back(sea_temp_spec());
  specs.push_back(PropertySpec("current_speed",
                               Iri("https://w3id.org/oim/prop/currentSpeed"),
                               Iri("http://qudt.org/vocab/unit/M-PER-SEC"),
                               vocab::xsd_double()));
  HarmoniserRegistry registry(specs, oim_policy(), fixture_catalog());

  std::vector<std::string> expected_names = {
      "harmonise_oim_sosa_observation_current_speed_metre_per_second",
      "harmonise_oim_sosa_observation_sea_temperature_degree_celsius",
  };
  CHECK(registry.names() == expected_names);

  Harmoniser h = registry.named_harmoniser(
      "harmonise_oim_sosa_observation_sea_temperature_degree_celsius");
  Graph via_registry = h(sea_temp_record());
  Graph direct = harmonise_observation(sea_temp_record(), sea_temp_spec(),
                                       oim_policy(), fixture_catalog());
  CHECK(ground_equal(via_registry, direct));

  try {
    registry.named_harmoniser(
        "harmonise_oim_sosa_observation_sea_temperature_degree_celsis");
    FAIL("expected UnknownAccessor");
  } catch (const UnknownAccessor& e) {
    CHECK(e.suggestion() ==
          "harmonise_oim_sosa_observation_sea_temperature_degree_celsius");
  }

  // A spec whose unit is missing from the catalog fails at construction.
  std::vector<PropertySpec> missing;
  missing.push_back(PropertySpec(
      "x", Iri("https://w3id.org/oim/prop/x"),
      Iri("http://qudt.org/vocab/unit/NOT_THERE"), vocab::xsd_float()));
  CHECK_THROWS_AS(
      HarmoniserRegistry(missing, oim_policy(), fixture_catalog()),
      UnknownAccessor);

  // Two specs mapping to the same harmoniser name collide loudly.
  std::vector<PropertySpec> dup = {sea_temp_spec(), sea_temp_spec()};
  CHECK_THROWS_WITH_AS(
      HarmoniserRegistry(dup, oim_policy(), fixture_catalog()),
      "duplicate harmoniser name "
      "\"harmonise_oim_sosa_observation_sea_temperature_degree_celsius\"",
      Error);
}
