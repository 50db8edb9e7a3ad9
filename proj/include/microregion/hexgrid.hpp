#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "microregion/geo.hpp"

namespace microregion::hexgrid {

inline constexpr int kMaxResolution = 15;

/// Identifier of one cell of the hexagonal hierarchical grid, bit-compatible
/// with the H3 cell index layout (mode 1).
class CellId {
 public:
  constexpr CellId() = default;

  /// Throws InvalidArgument unless `raw` is a well-formed cell index.
  static CellId from_raw(std::uint64_t raw);
  /// Parses the lowercase hexadecimal form (case-insensitive on input).
  static CellId parse(std::string_view hex);

  std::uint64_t raw() const noexcept { return raw_; }
  int resolution() const noexcept { return static_cast<int>((raw_ >> 52) & 0xF); }
  int base_cell() const noexcept { return static_cast<int>((raw_ >> 45) & 0x7F); }
  bool is_pentagon() const noexcept;

  /// 15-character lowercase hexadecimal.
  std::string to_string() const;

  friend auto operator<=>(const CellId&, const CellId&) = default;

 private:
  explicit constexpr CellId(std::uint64_t raw) : raw_(raw) {}
  friend CellId latlng_to_cell(const GeoPoint& p, int resolution);

  std::uint64_t raw_ = 0;
};

bool is_valid_cell(std::uint64_t raw) noexcept;

/// Vertices in counter-clockwise order, ring not closed. Hexagons have 6
/// topological vertices; cells whose edges cross an icosahedron face edge
/// carry extra distortion vertices (up to 10 in total).
struct CellBoundary {
  std::vector<GeoPoint> vertices;
};

CellId latlng_to_cell(const GeoPoint& p, int resolution);
CellBoundary cell_boundary(CellId cell);
GeoPoint cell_center(CellId cell);

/// Perimeter divided by the number of topological edges (6, or 5 for pentagons).
double mean_edge_length_m(CellId cell);
double cell_area_m2(CellId cell);

/// Planar point-in-polygon in the local projection around the cell centre.
bool cell_contains(CellId cell, const GeoPoint& p);

}  // namespace microregion::hexgrid

template <>
struct std::hash<microregion::hexgrid::CellId> {
  std::size_t operator()(const microregion::hexgrid::CellId& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.raw());
  }
};
