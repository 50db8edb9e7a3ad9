#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "microregion/error.hpp"
#include "microregion/hexgrid.hpp"

namespace {
#include "hexgrid_oracle_data.inc"
}

using namespace microregion;
using hexgrid::CellId;

TEST_SUITE("hexgrid") {

TEST_CASE("point indexing matches the reference implementation") {
  for (const auto& c : kPointCases) {
    CAPTURE(c.lat);
    CAPTURE(c.lng);
    CAPTURE(c.res);
    const auto cell = hexgrid::latlng_to_cell(GeoPoint(c.lat, c.lng), c.res);
    CHECK(cell.to_string() == c.cell);
    CHECK(cell.resolution() == c.res);
  }
}

TEST_CASE("Boston downtown cell") {
  const auto cell = hexgrid::latlng_to_cell(GeoPoint(42.3601, -71.0589), 9);
  CHECK(cell.to_string() == "892a3066037ffff");
  CHECK(cell.to_string().size() == 15);
  CHECK(cell == hexgrid::latlng_to_cell(GeoPoint(42.3601, -71.0589), 9));
}

TEST_CASE("boundaries, centres, areas and edge lengths match the reference implementation") {
  for (const auto& b : kBoundaryCases) {
    const std::string id = b.cell;
    CAPTURE(id);
    const auto cell = CellId::parse(b.cell);
    const auto boundary = hexgrid::cell_boundary(cell);
    REQUIRE(static_cast<int>(boundary.vertices.size()) == b.n);
    for (int i = 0; i < b.n; ++i) {
      CHECK(std::fabs(boundary.vertices[i].lat() - b.lat[i]) <= 1e-6);
      CHECK(std::fabs(boundary.vertices[i].lng() - b.lng[i]) <= 1e-6);
    }
    const auto c = hexgrid::cell_center(cell);
    CHECK(std::fabs(c.lat() - b.center_lat) <= 1e-9);
    CHECK(std::fabs(c.lng() - b.center_lng) <= 1e-9);
    // different spherical triangulations agree to rounding of the excess sum
    CHECK(hexgrid::cell_area_m2(cell) == doctest::Approx(b.area_m2).epsilon(1e-7));
    CHECK(hexgrid::mean_edge_length_m(cell) == doctest::Approx(b.mean_edge_m).epsilon(1e-9));
  }
}

TEST_CASE("cell id parsing and validation") {
  const auto cell = CellId::parse("892a3066037ffff");
  CHECK(cell.resolution() == 9);
  CHECK(cell.base_cell() == 21);
  CHECK_FALSE(cell.is_pentagon());
  CHECK(CellId::parse("892A3066037FFFF") == cell);
  CHECK(CellId::from_raw(cell.raw()) == cell);
  CHECK_THROWS_AS(CellId::parse(""), InvalidArgument);
  CHECK_THROWS_AS(CellId::parse("zz"), InvalidArgument);
  CHECK_THROWS_AS(CellId::parse("0"), InvalidArgument);
  // resolution 9 with an unused digit slot set
  CHECK_THROWS_AS(CellId::parse("892a3066037fff0"), InvalidArgument);
  CHECK_THROWS_AS(CellId::from_raw(cell.raw() | (std::uint64_t{1} << 63)), InvalidArgument);
  CHECK_FALSE(hexgrid::is_valid_cell(0));
  CHECK_THROWS_AS(hexgrid::cell_boundary(CellId{}), InvalidArgument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(GeoPoint(90.5, 0.0), InvalidArgument);
  CHECK_THROWS_AS(GeoPoint(0.0, -180.1), InvalidArgument);
  CHECK_THROWS_AS(GeoPoint(std::nan(""), 0.0), InvalidArgument);
  CHECK_THROWS_AS(hexgrid::latlng_to_cell(GeoPoint(0.0, 0.0), 16), InvalidArgument);
  CHECK_THROWS_AS(hexgrid::latlng_to_cell(GeoPoint(0.0, 0.0), -1), InvalidArgument);
  CHECK_NOTHROW(GeoPoint(-90.0, 180.0));
}

TEST_CASE("partition: sampled points lie inside their cell") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(42.30, 42.40);
  std::uniform_real_distribution<double> lng(-71.12, -71.00);
  int inside = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const GeoPoint p(lat(rng), lng(rng));
    const auto cell = hexgrid::latlng_to_cell(p, 9);
    CHECK(cell == hexgrid::latlng_to_cell(p, 9));
    if (hexgrid::cell_contains(cell, p)) ++inside;
  }
  CHECK(inside >= 9990);
}

TEST_CASE("boundary centroid maps back to its cell") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lat(25.0, 49.0);
  std::uniform_real_distribution<double> lng(-124.0, -67.0);
  for (int i = 0; i < 500; ++i) {
    const auto cell = hexgrid::latlng_to_cell(GeoPoint(lat(rng), lng(rng)), 9);
    const auto b = hexgrid::cell_boundary(cell);
    CHECK(b.vertices.size() == 6);
    double la = 0.0;
    double ln = 0.0;
    for (const auto& v : b.vertices) {
      la += v.lat();
      ln += v.lng();
    }
    CHECK(hexgrid::latlng_to_cell(GeoPoint(la / 6.0, ln / 6.0), 9) == cell);
  }
}

TEST_CASE("boundaries wind counter-clockwise") {
  for (const auto& b : kBoundaryCases) {
    const auto cell = CellId::parse(b.cell);
    const auto boundary = hexgrid::cell_boundary(cell);
    const LocalProjection proj(hexgrid::cell_center(cell));
    double twice_area = 0.0;
    const auto& v = boundary.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto a = proj.project(v[i]);
      const auto c = proj.project(v[(i + 1) % v.size()]);
      twice_area += a.x * c.y - c.x * a.y;
    }
    CHECK(twice_area > 0.0);
  }
}

TEST_CASE("resolution monotonicity of cell area") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lat(-60.0, 60.0);
  std::uniform_real_distribution<double> lng(-180.0, 180.0);
  for (int i = 0; i < 200; ++i) {
    const GeoPoint p(lat(rng), lng(rng));
    const double a8 = hexgrid::cell_area_m2(hexgrid::latlng_to_cell(p, 8));
    const double a9 = hexgrid::cell_area_m2(hexgrid::latlng_to_cell(p, 9));
    CHECK(a9 < a8);
  }
}

TEST_CASE("resolution 9 edge length matches the reference average") {
  // The reference library reports the global average hexagon edge at res 9.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> lng(-180.0, 180.0);
  double sum = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const GeoPoint p(std::asin(u(rng)) * 180.0 / M_PI, lng(rng));
    sum += hexgrid::mean_edge_length_m(hexgrid::latlng_to_cell(p, 9));
  }
  CHECK(sum / n == doctest::Approx(kAverageHexEdgeRes9M).epsilon(0.02));
}

TEST_CASE("pentagons are supported") {
  const auto& pent = kBoundaryCases[6];
  const auto cell = CellId::parse(pent.cell);
  CHECK(cell.is_pentagon());
  CHECK(hexgrid::cell_boundary(cell).vertices.size() == 10);
  CHECK(hexgrid::latlng_to_cell(hexgrid::cell_center(cell), 9) == cell);
}

}
