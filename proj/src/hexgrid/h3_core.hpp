/*
 * Copyright 2016-2021 Uber Technologies, Inc.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *         http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Internal icosahedral face / IJK coordinate machinery of the H3 grid,
// ported to C++. Only the subset needed for point indexing and cell
// boundaries is carried over.

#pragma once

#include <cstdint>
#include <vector>

namespace microregion::hexgrid::detail {

inline constexpr int kNumIcosaFaces = 20;
inline constexpr int kNumBaseCells = 122;
inline constexpr int kNumHexVerts = 6;
inline constexpr int kNumPentVerts = 5;
inline constexpr int kMaxFaceCoord = 2;

// Quadrant indices into the face-neighbour table.
inline constexpr int kIj = 1;
inline constexpr int kKi = 2;
inline constexpr int kJk = 3;

inline constexpr double kEpsilon = 0.0000000000000001;
inline constexpr double kSqrt3_2 = 0.8660254037844386467637231707529361834714;
inline constexpr double kRSin60 = 1.1547005383792515290182975610039149112953;
inline constexpr double kOneThird = 0.333333333333333333333333333333333333333;
inline constexpr double kOneSeventh = 0.14285714285714285714285714285714285;
inline constexpr double kAp7RotRads = 0.333473172251832115336090755351601070065900389;
inline constexpr double kRes0UGnomonic = 0.38196601125010500003;
inline constexpr double kInvRes0UGnomonic = 2.61803398874989588842;
inline constexpr double kSqrt7 = 2.6457513110645905905016157536392604257102;
inline constexpr double kRSqrt7 = 0.37796447300922722721451653623418006081576;
inline constexpr double k2Pi = 6.28318530717958647692528676655900576839433;

struct Vec2 {
  double x;
  double y;
};

struct Vec3 {
  double x;
  double y;
  double z;
};

struct LatLngRad {
  double lat;
  double lng;
};

enum class Digit : int {
  kCenter = 0,
  kK = 1,
  kJ = 2,
  kJK = 3,
  kI = 4,
  kIK = 5,
  kIJ = 6,
  kInvalid = 7,
};

struct CoordIjk {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const CoordIjk&, const CoordIjk&) = default;

  CoordIjk operator+(const CoordIjk& o) const { return {i + o.i, j + o.j, k + o.k}; }
  CoordIjk operator-(const CoordIjk& o) const { return {i - o.i, j - o.j, k - o.k}; }
  CoordIjk scaled(int f) const { return {i * f, j * f, k * f}; }

  void normalize();
  void up_ap7();
  void up_ap7r();
  void down_ap7();
  void down_ap7r();
  void down_ap3();
  void down_ap3r();
  void rotate60_ccw();
  void rotate60_cw();
  void neighbor(Digit d);

  Vec2 to_hex2d() const;
  static CoordIjk from_hex2d(const Vec2& v);
};

Digit unit_ijk_to_digit(const CoordIjk& ijk);
Digit rotate60_ccw(Digit d);
Digit rotate60_cw(Digit d);

struct FaceIjk {
  int face = 0;
  CoordIjk coord;
};

struct FaceOrientIjk {
  int face;
  CoordIjk translate;
  int ccw_rot60;
};

struct BaseCellData {
  FaceIjk home;
  bool is_pentagon;
  int cw_offset_pent[2];
};

struct BaseCellRotation {
  int base_cell;
  int ccw_rot60;
};

enum class Overage { kNone = 0, kFaceEdge = 1, kNewFace = 2 };

inline bool is_class_iii(int res) { return (res % 2) != 0; }

// Index bit-field helpers.
std::uint64_t index_init(int res);
int index_resolution(std::uint64_t h);
int index_base_cell(std::uint64_t h);
Digit index_digit(std::uint64_t h, int res);
void set_index_digit(std::uint64_t& h, int res, Digit d);
void set_index_base_cell(std::uint64_t& h, int bc);

bool base_cell_is_pentagon(int bc);
bool index_is_pentagon(std::uint64_t h);
bool index_is_valid_cell(std::uint64_t h);

FaceIjk latlng_to_face_ijk(const LatLngRad& g, int res);
std::uint64_t face_ijk_to_index(const FaceIjk& fijk, int res);
FaceIjk index_to_face_ijk(std::uint64_t h);

LatLngRad face_ijk_to_latlng(const FaceIjk& fijk, int res);
std::vector<LatLngRad> face_ijk_to_boundary(const FaceIjk& fijk, int res);
std::vector<LatLngRad> face_ijk_pent_to_boundary(const FaceIjk& fijk, int res);

}  // namespace microregion::hexgrid::detail
