#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "microregion/error.hpp"
#include "microregion/osm.hpp"
#include "test_support.hpp"

using namespace microregion;
using hexgrid::CellId;
using osm::TaggedObject;

namespace {

osm::ParseResult parse(const std::string& xml) {
  std::istringstream in(xml);
  return osm::parse_osm(in);
}

TaggedObject node_at(double lat, double lng, std::map<std::string, std::string> tags) {
  TaggedObject o;
  o.point = GeoPoint(lat, lng);
  o.tags = std::move(tags);
  return o;
}

std::uint64_t mass(const osm::CellFeatures& cf) {
  std::uint64_t m = 0;
  for (const auto& [cell, counts] : cf) {
    for (const auto& [name, n] : counts) m += n;
  }
  return m;
}

osm::TagWhitelist default_whitelist() {
  return osm::TagWhitelist::from_file(std::filesystem::path(MICROREGION_DATA_DIR) / "default_whitelist.txt");
}

}  // namespace

TEST_SUITE("osm") {

TEST_CASE("single tagged node") {
  const auto r = parse(R"(<?xml version="1.0"?>
<osm version="0.6">
  <node id="1" lat="42.35" lon="-71.06"><tag k="amenity" v="cafe"/></node>
</osm>)");
  REQUIRE(r.objects.size() == 1);
  CHECK(r.objects[0].kind == osm::ObjectKind::kNode);
  CHECK(r.objects[0].osm_id == 1);
  CHECK(r.objects[0].tags == std::map<std::string, std::string>{{"amenity", "cafe"}});
  CHECK(r.objects[0].point.lat() == 42.35);
  CHECK(r.objects[0].point.lng() == -71.06);
  CHECK(r.nodes_seen == 1);
}

TEST_CASE("closed way sits at the centroid of its four nodes") {
  const auto r = parse(R"(<osm>
  <node id="1" lat="42.0" lon="-71.0"/>
  <node id="2" lat="42.0" lon="-70.9"/>
  <node id="3" lat="42.2" lon="-70.9"/>
  <node id="4" lat="42.2" lon="-71.0"/>
  <way id="10"><nd ref="1"/><nd ref="2"/><nd ref="3"/><nd ref="4"/><nd ref="1"/>
    <tag k="building" v="apartments"/></way>
</osm>)");
  REQUIRE(r.objects.size() == 1);
  const auto& w = r.objects[0];
  CHECK(w.kind == osm::ObjectKind::kWay);
  CHECK(w.osm_id == 10);
  // (42.0 + 42.0 + 42.2 + 42.2) / 4 and (-71.0 - 70.9 - 70.9 - 71.0) / 4
  CHECK(w.point.lat() == doctest::Approx(42.1).epsilon(1e-14));
  CHECK(w.point.lng() == doctest::Approx(-70.95).epsilon(1e-14));
  CHECK(r.ways_seen == 1);
}

TEST_CASE("untagged nodes and relations produce nothing") {
  const auto r = parse(R"(<osm>
  <node id="1" lat="1" lon="2"/>
  <relation id="5"><member type="node" ref="1" role=""/><tag k="building" v="yes"/></relation>
</osm>)");
  CHECK(r.objects.empty());
  CHECK(r.nodes_seen == 1);
}

TEST_CASE("way with a missing node is skipped with a warning") {
  const auto r = parse(R"(<osm>
  <node id="1" lat="1" lon="2"/>
  <way id="7"><nd ref="1"/><nd ref="99"/><tag k="highway" v="service"/></way>
  <way id="8"><tag k="highway" v="service"/></way>
</osm>)");
  CHECK(r.objects.empty());
  CHECK(r.skipped_ways == 2);
  REQUIRE(r.warnings.size() == 2);
  CHECK(r.warnings[0].find("99") != std::string::npos);
}

TEST_CASE("ways may reference nodes declared later") {
  const auto r = parse(R"(<osm>
  <way id="7"><nd ref="1"/><nd ref="2"/><tag k="highway" v="service"/></way>
  <node id="1" lat="1" lon="2"/>
  <node id="2" lat="3" lon="4"/>
</osm>)");
  REQUIRE(r.objects.size() == 1);
  CHECK(r.objects[0].point.lat() == 2.0);
  CHECK(r.objects[0].point.lng() == 3.0);
}

TEST_CASE("malformed XML reports the line") {
  const std::string bad = "<osm>\n<node id=\"1\" lat=\"1\" lon=\"2\">\n<tag k=\"a\" v=\"b\">\n</osm>\n";
  try {
    parse(bad);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 3);
  }
  CHECK_THROWS_AS(parse("<osm><node id=\"1\" lon=\"2\"/></osm>"), ParseError);
  CHECK_THROWS_AS(parse("<osm><node id=\"x\" lat=\"1\" lon=\"2\"/></osm>"), ParseError);
  CHECK_THROWS_AS(parse("<osm><node id=\"1\" lat=\"91\" lon=\"2\"/></osm>"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("duplicate tag keys keep the first value") {
  const auto r = parse(R"(<osm><node id="1" lat="1" lon="2"><tag k="a" v="x"/><tag k="a" v="y"/></node></osm>)");
  REQUIRE(r.objects.size() == 1);
  CHECK(r.objects[0].tags.at("a") == "x");
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("whitelist key and pair semantics") {
  const osm::TagWhitelist wl({"highway", "building=apartments"});
  CHECK(wl.allows("highway", "footway"));
  CHECK(wl.allows("building", "apartments"));
  CHECK_FALSE(wl.allows("building", "garage"));
  CHECK_FALSE(wl.allows("name", "Main St"));

  const auto kept = osm::filter_tags({node_at(1, 2, {{"highway", "footway"}, {"name", "Main St"}}),
                                      node_at(1, 2, {{"shop", "bakery"}}),
                                      node_at(1, 2, {{"building", "garage"}}),
                                      node_at(1, 2, {{"building", "apartments"}})},
                                     wl);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].tags == std::map<std::string, std::string>{{"highway", "footway"}});
  CHECK(kept[1].tags == std::map<std::string, std::string>{{"building", "apartments"}});

  const osm::TagWhitelist amenity({"amenity"});
  CHECK(osm::filter_tags({node_at(1, 2, {{"shop", "bakery"}})}, amenity).empty());
}

TEST_CASE("whitelist validation and file format") {
  CHECK_THROWS_AS(osm::TagWhitelist(std::vector<std::string>{}), InvalidArgument);
  CHECK_THROWS_AS(osm::TagWhitelist({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(osm::TagWhitelist({"=x"}), InvalidArgument);
  std::istringstream in("# comment\n\n  amenity  \nbuilding=house # trailing\n");
  const auto wl = osm::TagWhitelist::parse(in);
  CHECK(wl.entries() == std::vector<std::string>{"amenity", "building=house"});

  const auto def = default_whitelist();
  CHECK(def.entries().size() == 15);
  for (const char* key : {"building", "highway", "amenity", "shop", "landuse", "leisure", "office", "parking",
                          "public_transport", "railway", "barrier", "traffic_calming", "crossing", "tourism",
                          "waterway"}) {
    CHECK(def.allows(key, "anything"));
  }
}

TEST_CASE("aggregation counts key=value pairs per cell") {
  const std::vector<TaggedObject> cafes(3, node_at(42.3601, -71.0589, {{"amenity", "cafe"}}));
  const auto cf = osm::aggregate_counts(cafes, 9);
  REQUIRE(cf.size() == 1);
  CHECK(cf.begin()->first.to_string() == "892a3066037ffff");
  CHECK(cf.begin()->second == osm::TagCountVector{{"amenity=cafe", 3}});
  CHECK(osm::aggregate_counts({}, 9).empty());
  CHECK_THROWS_AS(osm::aggregate_counts(cafes, 16), InvalidArgument);
  CHECK(osm::feature_name("highway", "footway") == "highway=footway");
}

TEST_CASE("aggregation invariants on random objects") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(42.33, 42.37);
  std::uniform_real_distribution<double> lng(-71.09, -71.05);
  const std::vector<std::pair<std::string, std::string>> pool = {
      {"amenity", "cafe"}, {"building", "house"}, {"highway", "primary"}, {"shop", "bakery"}, {"leisure", "park"}};
  std::vector<TaggedObject> objs;
  std::uint64_t pairs = 0;
  for (int i = 0; i < 400; ++i) {
    auto o = node_at(lat(rng), lng(rng), {});
    for (const auto& [k, v] : pool) {
      if (rng() % 3 == 0) o.tags.emplace(k, v);
    }
    if (o.tags.empty()) o.tags.emplace("amenity", "bench");
    pairs += o.tags.size();
    objs.push_back(o);
  }
  const auto base = osm::aggregate_counts(objs, 9);
  CHECK(mass(base) == pairs);

  auto with_empty = objs;
  with_empty.insert(with_empty.end(), std::vector<TaggedObject>{}.begin(), std::vector<TaggedObject>{}.end());
  CHECK(osm::aggregate_counts(with_empty, 9) == base);

  auto shuffled = objs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(osm::aggregate_counts(shuffled, 9) == base);

  osm::CellFeatures merged = osm::aggregate_counts(std::vector<TaggedObject>(objs.begin(), objs.begin() + 150), 9);
  osm::merge_counts(merged, osm::aggregate_counts(std::vector<TaggedObject>(objs.begin() + 150, objs.end()), 9));
  CHECK(merged == base);

  for (const auto& [cell, counts] : base) {
    CHECK(cell.resolution() == 9);
    for (const auto& [name, n] : counts) CHECK(n > 0);
  }
}

TEST_CASE("cell feature JSON lines round trip") {
  osm::CellFeatures cf;
  cf[CellId::parse("892a3066037ffff")] = {{"amenity=cafe", 3}, {"building=house", 1}};
  cf[CellId::parse("892a3066033ffff")] = {{"highway=primary", 2}};
  std::stringstream s;
  osm::write_cell_features(s, cf);
  const std::string text = s.str();
  CHECK(text.substr(0, text.find('\n')) == R"({"cell":"892a3066033ffff","counts":{"highway=primary":2}})");
  CHECK(osm::read_cell_features(s) == cf);

  std::istringstream dup(R"({"cell":"892a3066037ffff","counts":{}}
{"cell":"892a3066037ffff","counts":{}})");
  CHECK_THROWS_AS(osm::read_cell_features(dup), ParseError);
  std::istringstream neg(R"({"cell":"892a3066037ffff","counts":{"a=b":-1}})");
  CHECK_THROWS_AS(osm::read_cell_features(neg), ParseError);
  std::istringstream junk("not json\n");
  CHECK_THROWS_AS(osm::read_cell_features(junk), ParseError);
}

TEST_CASE("toy city tally matches the naive oracle") {
  const auto parsed = osm::parse_osm_file(testing_support::fixture("toy_city/city.osm"));
  CHECK(parsed.skipped_ways == 1);
  const auto kept = osm::filter_tags(parsed.objects, default_whitelist());
  const auto cf = osm::aggregate_counts(kept, 9);
  std::ifstream golden(testing_support::fixture("toy_city/golden/features.jsonl"));
  const auto expected = osm::read_cell_features(golden);
  CHECK(cf.size() == 4);
  CHECK(cf == expected);
}

TEST_CASE("missing file is an IO error") {
  CHECK_THROWS_AS(osm::parse_osm_file("/nonexistent/file.osm"), IoError);
}

}  // TEST_SUITE
