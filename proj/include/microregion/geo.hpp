#pragma once

#include <span>

namespace microregion {

/// WGS84 coordinate in degrees. Bounds are checked on construction.
class GeoPoint {
 public:
  GeoPoint(double lat_deg, double lng_deg);

  double lat() const noexcept { return lat_; }
  double lng() const noexcept { return lng_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double lat_;
  double lng_;
};

/// Authalic earth radius used by the hexagonal index.
inline constexpr double kEarthRadiusM = 6371007.180918475;

double great_circle_distance_m(const GeoPoint& a, const GeoPoint& b);

/// Area of a simple spherical polygon (vertices in order, ring not closed).
double spherical_polygon_area_m2(std::span<const GeoPoint> ring);

/// Azimuthal equidistant projection centred on `origin`, in metres.
class LocalProjection {
 public:
  explicit LocalProjection(const GeoPoint& origin);

  struct Xy {
    double x;
    double y;
  };

  Xy project(const GeoPoint& p) const;

 private:
  double lat0_;
  double lng0_;
  double sin_lat0_;
  double cos_lat0_;
};

/// Crossing-number test in the local projection around `origin`.
bool polygon_contains(std::span<const GeoPoint> ring, const GeoPoint& origin,
                      const GeoPoint& p);

}  // namespace microregion
