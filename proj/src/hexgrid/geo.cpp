#include "microregion/geo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "microregion/error.hpp"

namespace microregion {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct Unit {
  double x;
  double y;
  double z;
};

Unit to_unit(const GeoPoint& p) {
  const double lat = p.lat() * kDegToRad;
  const double lng = p.lng() * kDegToRad;
  return {std::cos(lat) * std::cos(lng), std::cos(lat) * std::sin(lng), std::sin(lat)};
}

double dot(const Unit& a, const Unit& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Unit cross(const Unit& a, const Unit& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

}  // namespace

GeoPoint::GeoPoint(double lat_deg, double lng_deg) : lat_(lat_deg), lng_(lng_deg) {
  if (!std::isfinite(lat_deg) || lat_deg < -90.0 || lat_deg > 90.0) {
    throw InvalidArgument("latitude out of range: " + std::to_string(lat_deg));
  }
  if (!std::isfinite(lng_deg) || lng_deg < -180.0 || lng_deg > 180.0) {
    throw InvalidArgument("longitude out of range: " + std::to_string(lng_deg));
  }
}

double great_circle_distance_m(const GeoPoint& a, const GeoPoint& b) {
  const double lat1 = a.lat() * kDegToRad;
  const double lat2 = b.lat() * kDegToRad;
  const double dlat = lat2 - lat1;
  const double dlng = (b.lng() - a.lng()) * kDegToRad;
  const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlng / 2) * std::sin(dlng / 2);
  return 2.0 * kEarthRadiusM * std::atan2(std::sqrt(s), std::sqrt(1.0 - s));
}

double spherical_polygon_area_m2(std::span<const GeoPoint> ring) {
  if (ring.size() < 3) return 0.0;
  // signed fan of spherical triangles anchored at the first vertex
  const Unit a = to_unit(ring[0]);
  double excess = 0.0;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const Unit b = to_unit(ring[i]);
    const Unit c = to_unit(ring[i + 1]);
    const double num = dot(a, cross(b, c));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    excess += 2.0 * std::atan2(num, den);
  }
  return std::fabs(excess) * kEarthRadiusM * kEarthRadiusM;
}

LocalProjection::LocalProjection(const GeoPoint& origin)
    : lat0_(origin.lat() * kDegToRad),
      lng0_(origin.lng() * kDegToRad),
      sin_lat0_(std::sin(lat0_)),
      cos_lat0_(std::cos(lat0_)) {}

LocalProjection::Xy LocalProjection::project(const GeoPoint& p) const {
  const double lat = p.lat() * kDegToRad;
  const double dlng = p.lng() * kDegToRad - lng0_;
  const double sin_lat = std::sin(lat);
  const double cos_lat = std::cos(lat);
  double cos_c = sin_lat0_ * sin_lat + cos_lat0_ * cos_lat * std::cos(dlng);
  cos_c = std::fmax(-1.0, std::fmin(1.0, cos_c));
  const double c = std::acos(cos_c);
  const double k = c < 1e-12 ? 1.0 : c / std::sin(c);
  return {kEarthRadiusM * k * cos_lat * std::sin(dlng),
          kEarthRadiusM * k * (cos_lat0_ * sin_lat - sin_lat0_ * cos_lat * std::cos(dlng))};
}

bool polygon_contains(std::span<const GeoPoint> ring, const GeoPoint& origin,
                      const GeoPoint& p) {
  const LocalProjection proj(origin);
  const auto q = proj.project(p);
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto a = proj.project(ring[i]);
    const auto b = proj.project(ring[j]);
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x_cross = (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x;
      if (q.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace microregion
