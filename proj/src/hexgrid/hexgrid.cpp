#include "microregion/hexgrid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "h3_core.hpp"
#include "microregion/error.hpp"

namespace microregion::hexgrid {
namespace {

// Same constants as the reference grid so edge-case points land in the same cell.
constexpr double kPi180 = 0.0174532925199432957692369076848861271111;
constexpr double k180Pi = 57.29577951308232087679815481410517033240547;

GeoPoint to_geo(const detail::LatLngRad& g) {
  // asin/atan2 can land one ulp past the poles or the antimeridian
  return GeoPoint(std::clamp(g.lat * k180Pi, -90.0, 90.0),
                  std::clamp(g.lng * k180Pi, -180.0, 180.0));
}

void require_valid(CellId cell) {
  if (!is_valid_cell(cell.raw())) throw InvalidArgument("malformed cell id: " + cell.to_string());
}

}  // namespace

bool is_valid_cell(std::uint64_t raw) noexcept { return detail::index_is_valid_cell(raw); }

CellId CellId::from_raw(std::uint64_t raw) {
  if (!is_valid_cell(raw)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(raw));
    throw InvalidArgument(std::string("malformed cell id: ") + buf);
  }
  return CellId(raw);
}

CellId CellId::parse(std::string_view hex) {
  std::uint64_t raw = 0;
  const auto* first = hex.data();
  const auto* last = hex.data() + hex.size();
  const auto [ptr, ec] = std::from_chars(first, last, raw, 16);
  if (hex.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument("cell id is not hexadecimal: '" + std::string(hex) + "'");
  }
  return from_raw(raw);
}

bool CellId::is_pentagon() const noexcept { return detail::index_is_pentagon(raw_); }

std::string CellId::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%015llx", static_cast<unsigned long long>(raw_));
  return buf;
}

CellId latlng_to_cell(const GeoPoint& p, int resolution) {
  if (resolution < 0 || resolution > kMaxResolution) {
    throw InvalidArgument("resolution must be in [0, 15], got " + std::to_string(resolution));
  }
  const detail::LatLngRad g{p.lat() * kPi180, p.lng() * kPi180};
  const auto fijk = detail::latlng_to_face_ijk(g, resolution);
  const std::uint64_t raw = detail::face_ijk_to_index(fijk, resolution);
  if (raw == 0) throw InvalidArgument("point could not be indexed");
  return CellId(raw);
}

CellBoundary cell_boundary(CellId cell) {
  require_valid(cell);
  const auto fijk = detail::index_to_face_ijk(cell.raw());
  const auto rads = cell.is_pentagon()
                        ? detail::face_ijk_pent_to_boundary(fijk, cell.resolution())
                        : detail::face_ijk_to_boundary(fijk, cell.resolution());
  CellBoundary out;
  out.vertices.reserve(rads.size());
  for (const auto& g : rads) out.vertices.push_back(to_geo(g));
  return out;
}

GeoPoint cell_center(CellId cell) {
  require_valid(cell);
  const auto fijk = detail::index_to_face_ijk(cell.raw());
  return to_geo(detail::face_ijk_to_latlng(fijk, cell.resolution()));
}

double mean_edge_length_m(CellId cell) {
  const auto v = cell_boundary(cell).vertices;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += great_circle_distance_m(v[i], v[(i + 1) % v.size()]);
  }
  // Distortion vertices split an edge without adding one.
  return total / (cell.is_pentagon() ? 5.0 : 6.0);
}

double cell_area_m2(CellId cell) {
  const auto b = cell_boundary(cell);
  return spherical_polygon_area_m2(b.vertices);
}

bool cell_contains(CellId cell, const GeoPoint& p) {
  const auto b = cell_boundary(cell);
  return polygon_contains(b.vertices, cell_center(cell), p);
}

}  // namespace microregion::hexgrid
