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

#include "h3_core.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "h3_tables.hpp"

namespace microregion::hexgrid::detail {
namespace {

constexpr int kResOffset = 52;
constexpr int kBaseCellOffset = 45;
constexpr int kModeOffset = 59;
constexpr int kPerDigitOffset = 3;
constexpr std::uint64_t kDigitMask = 7;
constexpr std::uint64_t kInitDigits = 35184372088831ULL;  // all 45 digit bits set

constexpr int kMaxDimByCIIres[] = {2,     -1, 14,     -1, 98,      -1, 686,     -1, 4802,
                                   -1,    33614, -1,  235298, -1, 1647086, -1, 11529602};
constexpr int kUnitScaleByCIIres[] = {1,    -1, 7,     -1, 49,     -1, 343,     -1, 2401,
                                      -1,   16807, -1, 117649, -1, 823543, -1, 5764801};

constexpr CoordIjk kUnitVecs[] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                  {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};

// ---- vector helpers -------------------------------------------------------

Vec3 lin_comb(double a, const Vec3& v1, double b, const Vec3& v2) {
  return {a * v1.x + b * v2.x, a * v1.y + b * v2.y, a * v1.z + b * v2.z};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

void normalize(Vec3& v) {
  const double norm = std::sqrt(dot(v, v));
  const double s = norm > 0.0 ? 1.0 / norm : 0.0;
  v.x *= s;
  v.y *= s;
  v.z *= s;
}

double dist_sq(const Vec3& a, const Vec3& b) {
  const Vec3 d = lin_comb(1.0, a, -1.0, b);
  return dot(d, d);
}

Vec3 latlng_to_vec3(const LatLngRad& g) {
  const double r = std::cos(g.lat);
  return {std::cos(g.lng) * r, std::sin(g.lng) * r, std::sin(g.lat)};
}

LatLngRad vec3_to_latlng(const Vec3& v) { return {std::asin(v.z), std::atan2(v.y, v.x)}; }

double pos_angle_rads(double rads) {
  double tmp = rads < 0.0 ? rads + k2Pi : rads;
  if (rads >= k2Pi) tmp -= k2Pi;
  return tmp;
}

void tangent_basis(const Vec3& p, Vec3& north, Vec3& east) {
  constexpr Vec3 kNorthPole{0.0, 0.0, 1.0};
  north = lin_comb(1.0, kNorthPole, -dot(kNorthPole, p), p);
  normalize(north);
  east = cross(north, p);
}

double azimuth_rads(const Vec3& p1, const Vec3& p2) {
  Vec3 north;
  Vec3 east;
  tangent_basis(p1, north, east);
  Vec3 proj = lin_comb(1.0, p2, -dot(p2, p1), p1);
  normalize(proj);
  return std::atan2(dot(proj, east), dot(proj, north));
}

Vec2 intersect(const Vec2& p0, const Vec2& p1, const Vec2& p2, const Vec2& p3) {
  const Vec2 s1{p1.x - p0.x, p1.y - p0.y};
  const Vec2 s2{p3.x - p2.x, p3.y - p2.y};
  const double t =
      (s2.x * (p0.y - p2.y) - s2.y * (p0.x - p2.x)) / (-s2.x * s1.y + s1.x * s2.y);
  return {p0.x + (t * s1.x), p0.y + (t * s1.y)};
}

bool almost_equals(const Vec2& a, const Vec2& b) {
  return std::fabs(a.x - b.x) < FLT_EPSILON && std::fabs(a.y - b.y) < FLT_EPSILON;
}

// ---- projection between sphere and face-local hex2d -----------------------

void vec3_to_hex2d(const Vec3& p, int res, int& face, Vec2& v) {
  face = 0;
  double sqd = 5.0;
  for (int f = 0; f < kNumIcosaFaces; ++f) {
    const double d = dist_sq(kFaceCenterPoint[f], p);
    if (d < sqd) {
      face = f;
      sqd = d;
    }
  }

  double r = std::acos(1 - sqd * 0.5);
  if (r < kEpsilon) {
    v = {0.0, 0.0};
    return;
  }

  double theta = pos_angle_rads(kFaceAxesAzRadsCII[face][0] -
                                pos_angle_rads(azimuth_rads(kFaceCenterPoint[face], p)));
  if (is_class_iii(res)) theta = pos_angle_rads(theta - kAp7RotRads);

  r = std::tan(r);
  r *= kInvRes0UGnomonic;
  for (int i = 0; i < res; ++i) r *= kSqrt7;

  v = {r * std::cos(theta), r * std::sin(theta)};
}

Vec3 hex2d_to_vec3(const Vec2& v, int face, int res, bool substrate) {
  double r = std::sqrt(v.x * v.x + v.y * v.y);
  if (r < kEpsilon) return kFaceCenterPoint[face];

  double theta = std::atan2(v.y, v.x);
  for (int i = 0; i < res; ++i) r *= kRSqrt7;

  if (substrate) {
    r *= kOneThird;
    if (is_class_iii(res)) r *= kRSqrt7;
  }

  r *= kRes0UGnomonic;
  r = std::atan(r);

  if (!substrate && is_class_iii(res)) theta = pos_angle_rads(theta + kAp7RotRads);
  theta = pos_angle_rads(kFaceAxesAzRadsCII[face][0] - theta);

  Vec3 north;
  Vec3 east;
  tangent_basis(kFaceCenterPoint[face], north, east);
  const Vec3 dir = lin_comb(std::cos(theta), north, std::sin(theta), east);
  Vec3 out = lin_comb(std::cos(r), kFaceCenterPoint[face], std::sin(r), dir);
  normalize(out);
  return out;
}

LatLngRad substrate_to_latlng(const CoordIjk& c, int face, int res) {
  return vec3_to_latlng(hex2d_to_vec3(c.to_hex2d(), face, res, true));
}

// ---- overage handling -----------------------------------------------------

Overage adjust_overage_class_ii(FaceIjk& fijk, int res, bool pent_leading4, bool substrate) {
  Overage overage = Overage::kNone;
  CoordIjk& ijk = fijk.coord;

  int max_dim = kMaxDimByCIIres[res];
  if (substrate) max_dim *= 3;

  if (substrate && ijk.i + ijk.j + ijk.k == max_dim) {
    overage = Overage::kFaceEdge;
  } else if (ijk.i + ijk.j + ijk.k > max_dim) {
    overage = Overage::kNewFace;

    const FaceOrientIjk* orient = nullptr;
    if (ijk.k > 0) {
      if (ijk.j > 0) {
        orient = &kFaceNeighbors[fijk.face][kJk];
      } else {
        orient = &kFaceNeighbors[fijk.face][kKi];
        if (pent_leading4) {
          // translate origin to pentagon centre, rotate out of the missing
          // sequence, translate back
          const CoordIjk origin{max_dim, 0, 0};
          CoordIjk tmp = ijk - origin;
          tmp.rotate60_cw();
          ijk = tmp + origin;
        }
      }
    } else {
      orient = &kFaceNeighbors[fijk.face][kIj];
    }

    fijk.face = orient->face;
    for (int i = 0; i < orient->ccw_rot60; ++i) ijk.rotate60_ccw();

    int unit_scale = kUnitScaleByCIIres[res];
    if (substrate) unit_scale *= 3;
    ijk = ijk + orient->translate.scaled(unit_scale);
    ijk.normalize();

    if (substrate && ijk.i + ijk.j + ijk.k == max_dim) overage = Overage::kFaceEdge;
  }
  return overage;
}

Overage adjust_pent_vert_overage(FaceIjk& fijk, int res) {
  Overage overage;
  do {
    overage = adjust_overage_class_ii(fijk, res, false, true);
  } while (overage == Overage::kNewFace);
  return overage;
}

// Substrate-grid vertices of an origin-centred cell, ccw from the i-axis.
constexpr CoordIjk kVertsCII[kNumHexVerts] = {{2, 1, 0}, {1, 2, 0}, {0, 2, 1},
                                               {0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
constexpr CoordIjk kVertsCIII[kNumHexVerts] = {{5, 4, 0}, {1, 5, 0}, {0, 5, 4},
                                                {0, 1, 5}, {4, 0, 5}, {5, 0, 1}};

// Moves `center` into the aperture-33r substrate grid and returns the
// substrate vertices. `res` is bumped for Class III.
void face_ijk_to_verts(FaceIjk& center, int& res, int n_verts, FaceIjk* out) {
  const CoordIjk* verts = is_class_iii(res) ? kVertsCIII : kVertsCII;

  center.coord.down_ap3();
  center.coord.down_ap3r();
  if (is_class_iii(res)) {
    center.coord.down_ap7r();
    res += 1;
  }

  for (int v = 0; v < n_verts; ++v) {
    out[v].face = center.face;
    out[v].coord = center.coord + verts[v];
    out[v].coord.normalize();
  }
}

void face_edge(int dir, int max_dim, Vec2& e0, Vec2& e1) {
  const Vec2 v0{3.0 * max_dim, 0.0};
  const Vec2 v1{-1.5 * max_dim, 3.0 * kSqrt3_2 * max_dim};
  const Vec2 v2{-1.5 * max_dim, -3.0 * kSqrt3_2 * max_dim};
  switch (dir) {
    case kIj:
      e0 = v0;
      e1 = v1;
      break;
    case kJk:
      e0 = v1;
      e1 = v2;
      break;
    default:  // kKi
      e0 = v2;
      e1 = v0;
      break;
  }
}

// ---- index digit rotations ------------------------------------------------

Digit leading_nonzero_digit(std::uint64_t h) {
  const int res = index_resolution(h);
  for (int r = 1; r <= res; ++r) {
    const Digit d = index_digit(h, r);
    if (d != Digit::kCenter) return d;
  }
  return Digit::kCenter;
}

std::uint64_t rotate_index_60ccw(std::uint64_t h) {
  const int res = index_resolution(h);
  for (int r = 1; r <= res; ++r) set_index_digit(h, r, rotate60_ccw(index_digit(h, r)));
  return h;
}

std::uint64_t rotate_index_60cw(std::uint64_t h) {
  const int res = index_resolution(h);
  for (int r = 1; r <= res; ++r) set_index_digit(h, r, rotate60_cw(index_digit(h, r)));
  return h;
}

std::uint64_t rotate_pent_index_60ccw(std::uint64_t h) {
  bool found_first_nonzero = false;
  const int res = index_resolution(h);
  for (int r = 1; r <= res; ++r) {
    set_index_digit(h, r, rotate60_ccw(index_digit(h, r)));
    if (!found_first_nonzero && index_digit(h, r) != Digit::kCenter) {
      found_first_nonzero = true;
      // skip the deleted k-axes sub-sequence
      if (leading_nonzero_digit(h) == Digit::kK) h = rotate_index_60ccw(h);
    }
  }
  return h;
}

bool base_cell_is_cw_offset(int bc, int face) {
  return kBaseCellData[bc].cw_offset_pent[0] == face ||
         kBaseCellData[bc].cw_offset_pent[1] == face;
}

}  // namespace

// ---- CoordIjk -------------------------------------------------------------

void CoordIjk::normalize() {
  if (i < 0) {
    j -= i;
    k -= i;
    i = 0;
  }
  if (j < 0) {
    i -= j;
    k -= j;
    j = 0;
  }
  if (k < 0) {
    i -= k;
    j -= k;
    k = 0;
  }
  const int min = std::min({i, j, k});
  if (min > 0) {
    i -= min;
    j -= min;
    k -= min;
  }
}

void CoordIjk::up_ap7() {
  const int ii = i - k;
  const int jj = j - k;
  i = static_cast<int>(std::lround((3 * ii - jj) * kOneSeventh));
  j = static_cast<int>(std::lround((ii + 2 * jj) * kOneSeventh));
  k = 0;
  normalize();
}

void CoordIjk::up_ap7r() {
  const int ii = i - k;
  const int jj = j - k;
  i = static_cast<int>(std::lround((2 * ii + jj) * kOneSeventh));
  j = static_cast<int>(std::lround((3 * jj - ii) * kOneSeventh));
  k = 0;
  normalize();
}

namespace {
CoordIjk combine(const CoordIjk& c, const CoordIjk& iv, const CoordIjk& jv,
                 const CoordIjk& kv) {
  CoordIjk out = iv.scaled(c.i) + jv.scaled(c.j) + kv.scaled(c.k);
  out.normalize();
  return out;
}
}  // namespace

void CoordIjk::down_ap7() { *this = combine(*this, {3, 0, 1}, {1, 3, 0}, {0, 1, 3}); }
void CoordIjk::down_ap7r() { *this = combine(*this, {3, 1, 0}, {0, 3, 1}, {1, 0, 3}); }
void CoordIjk::down_ap3() { *this = combine(*this, {2, 0, 1}, {1, 2, 0}, {0, 1, 2}); }
void CoordIjk::down_ap3r() { *this = combine(*this, {2, 1, 0}, {0, 2, 1}, {1, 0, 2}); }
void CoordIjk::rotate60_ccw() { *this = combine(*this, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}); }
void CoordIjk::rotate60_cw() { *this = combine(*this, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}); }

void CoordIjk::neighbor(Digit d) {
  const int di = static_cast<int>(d);
  if (di > 0 && di < 7) {
    *this = *this + kUnitVecs[di];
    normalize();
  }
}

Vec2 CoordIjk::to_hex2d() const {
  const int ii = i - k;
  const int jj = j - k;
  return {ii - 0.5 * jj, jj * kSqrt3_2};
}

CoordIjk CoordIjk::from_hex2d(const Vec2& v) {
  CoordIjk h;
  h.k = 0;

  const double a1 = std::fabs(v.x);
  const double a2 = std::fabs(v.y);

  const double x2 = a2 * kRSin60;
  const double x1 = a1 + x2 / 2.0;

  const int m1 = static_cast<int>(x1);
  const int m2 = static_cast<int>(x2);

  const double r1 = x1 - m1;
  const double r2 = x2 - m2;

  if (r1 < 0.5) {
    if (r1 < 1.0 / 3.0) {
      h.i = m1;
      h.j = r2 < (1.0 + r1) / 2.0 ? m2 : m2 + 1;
    } else {
      h.j = r2 < (1.0 - r1) ? m2 : m2 + 1;
      h.i = ((1.0 - r1) <= r2 && r2 < (2.0 * r1)) ? m1 + 1 : m1;
    }
  } else {
    if (r1 < 2.0 / 3.0) {
      h.j = r2 < (1.0 - r1) ? m2 : m2 + 1;
      h.i = ((2.0 * r1 - 1.0) < r2 && r2 < (1.0 - r1)) ? m1 : m1 + 1;
    } else {
      h.i = m1 + 1;
      h.j = r2 < (r1 / 2.0) ? m2 : m2 + 1;
    }
  }

  // fold across the axes if necessary
  if (v.x < 0.0) {
    if ((h.j % 2) == 0) {
      const long long axisi = h.j / 2;
      const long long diff = h.i - axisi;
      h.i = static_cast<int>(h.i - 2.0 * diff);
    } else {
      const long long axisi = (h.j + 1) / 2;
      const long long diff = h.i - axisi;
      h.i = static_cast<int>(h.i - (2.0 * diff + 1));
    }
  }

  if (v.y < 0.0) {
    h.i = h.i - (2 * h.j + 1) / 2;
    h.j = -1 * h.j;
  }

  h.normalize();
  return h;
}

Digit unit_ijk_to_digit(const CoordIjk& ijk) {
  CoordIjk c = ijk;
  c.normalize();
  for (int d = 0; d < 7; ++d) {
    if (c == kUnitVecs[d]) return static_cast<Digit>(d);
  }
  return Digit::kInvalid;
}

Digit rotate60_ccw(Digit d) {
  switch (d) {
    case Digit::kK: return Digit::kIK;
    case Digit::kIK: return Digit::kI;
    case Digit::kI: return Digit::kIJ;
    case Digit::kIJ: return Digit::kJ;
    case Digit::kJ: return Digit::kJK;
    case Digit::kJK: return Digit::kK;
    default: return d;
  }
}

Digit rotate60_cw(Digit d) {
  switch (d) {
    case Digit::kK: return Digit::kJK;
    case Digit::kJK: return Digit::kJ;
    case Digit::kJ: return Digit::kIJ;
    case Digit::kIJ: return Digit::kI;
    case Digit::kI: return Digit::kIK;
    case Digit::kIK: return Digit::kK;
    default: return d;
  }
}

// ---- index bit fields -----------------------------------------------------

std::uint64_t index_init(int res) {
  std::uint64_t h = kInitDigits;
  h |= std::uint64_t{1} << kModeOffset;
  h |= static_cast<std::uint64_t>(res) << kResOffset;
  return h;
}

int index_resolution(std::uint64_t h) { return static_cast<int>((h >> kResOffset) & 0xF); }
int index_base_cell(std::uint64_t h) { return static_cast<int>((h >> kBaseCellOffset) & 0x7F); }

Digit index_digit(std::uint64_t h, int res) {
  return static_cast<Digit>((h >> ((15 - res) * kPerDigitOffset)) & kDigitMask);
}

void set_index_digit(std::uint64_t& h, int res, Digit d) {
  const int shift = (15 - res) * kPerDigitOffset;
  h = (h & ~(kDigitMask << shift)) | (static_cast<std::uint64_t>(d) << shift);
}

void set_index_base_cell(std::uint64_t& h, int bc) {
  h = (h & ~(std::uint64_t{0x7F} << kBaseCellOffset)) |
      (static_cast<std::uint64_t>(bc) << kBaseCellOffset);
}

bool base_cell_is_pentagon(int bc) {
  return bc >= 0 && bc < kNumBaseCells && kBaseCellData[bc].is_pentagon;
}

bool index_is_pentagon(std::uint64_t h) {
  return base_cell_is_pentagon(index_base_cell(h)) && leading_nonzero_digit(h) == Digit::kCenter;
}

bool index_is_valid_cell(std::uint64_t h) {
  // high bit 0, mode 1, reserved 0
  if ((h >> 56) != 0b00001000) return false;
  const int res = index_resolution(h);
  const int bc = index_base_cell(h);
  if (bc >= kNumBaseCells) return false;

  bool seen_nonzero = false;
  for (int r = 1; r <= 15; ++r) {
    const Digit d = index_digit(h, r);
    if (r <= res) {
      if (d == Digit::kInvalid) return false;
      if (!seen_nonzero && d != Digit::kCenter) {
        seen_nonzero = true;
        if (base_cell_is_pentagon(bc) && d == Digit::kK) return false;
      }
    } else if (d != Digit::kInvalid) {
      return false;
    }
  }
  return true;
}

// ---- encode ---------------------------------------------------------------

FaceIjk latlng_to_face_ijk(const LatLngRad& g, int res) {
  FaceIjk out;
  Vec2 v;
  vec3_to_hex2d(latlng_to_vec3(g), res, out.face, v);
  out.coord = CoordIjk::from_hex2d(v);
  return out;
}

std::uint64_t face_ijk_to_index(const FaceIjk& fijk, int res) {
  std::uint64_t h = index_init(res);

  if (res == 0) {
    const CoordIjk& c = fijk.coord;
    if (c.i > kMaxFaceCoord || c.j > kMaxFaceCoord || c.k > kMaxFaceCoord) return 0;
    set_index_base_cell(h, kFaceIjkBaseCells[fijk.face][c.i][c.j][c.k].base_cell);
    return h;
  }

  FaceIjk fijk_bc = fijk;
  CoordIjk& ijk = fijk_bc.coord;
  for (int r = res - 1; r >= 0; --r) {
    const CoordIjk last = ijk;
    CoordIjk last_center;
    if (is_class_iii(r + 1)) {
      ijk.up_ap7();
      last_center = ijk;
      last_center.down_ap7();
    } else {
      ijk.up_ap7r();
      last_center = ijk;
      last_center.down_ap7r();
    }
    CoordIjk diff = last - last_center;
    diff.normalize();
    set_index_digit(h, r + 1, unit_ijk_to_digit(diff));
  }

  if (ijk.i > kMaxFaceCoord || ijk.j > kMaxFaceCoord || ijk.k > kMaxFaceCoord) return 0;

  const BaseCellRotation& rot = kFaceIjkBaseCells[fijk_bc.face][ijk.i][ijk.j][ijk.k];
  const int base_cell = rot.base_cell;
  set_index_base_cell(h, base_cell);

  if (base_cell_is_pentagon(base_cell)) {
    // force rotation out of the missing k-axes sub-sequence
    if (leading_nonzero_digit(h) == Digit::kK) {
      h = base_cell_is_cw_offset(base_cell, fijk_bc.face) ? rotate_index_60cw(h)
                                                          : rotate_index_60ccw(h);
    }
    for (int i = 0; i < rot.ccw_rot60; ++i) h = rotate_pent_index_60ccw(h);
  } else {
    for (int i = 0; i < rot.ccw_rot60; ++i) h = rotate_index_60ccw(h);
  }
  return h;
}

// ---- decode ---------------------------------------------------------------

FaceIjk index_to_face_ijk(std::uint64_t h) {
  const int base_cell = index_base_cell(h);
  if (base_cell >= kNumBaseCells) return {};
  const bool pent = base_cell_is_pentagon(base_cell);

  if (pent && leading_nonzero_digit(h) == Digit::kIK) h = rotate_index_60cw(h);

  FaceIjk fijk = kBaseCellData[base_cell].home;
  const int res = index_resolution(h);

  bool possible_overage = true;
  if (!pent && (res == 0 || fijk.coord == CoordIjk{0, 0, 0})) possible_overage = false;

  for (int r = 1; r <= res; ++r) {
    if (is_class_iii(r)) {
      fijk.coord.down_ap7();
    } else {
      fijk.coord.down_ap7r();
    }
    fijk.coord.neighbor(index_digit(h, r));
  }

  if (!possible_overage) return fijk;

  const CoordIjk orig = fijk.coord;
  int adj_res = res;
  if (is_class_iii(adj_res)) {
    fijk.coord.down_ap7r();
    ++adj_res;
  }

  const bool pent_leading4 = pent && leading_nonzero_digit(h) == Digit::kI;
  if (adjust_overage_class_ii(fijk, adj_res, pent_leading4, false) != Overage::kNone) {
    if (pent) {
      while (adjust_overage_class_ii(fijk, adj_res, false, false) != Overage::kNone) {
      }
    }
    if (adj_res != res) fijk.coord.up_ap7r();
  } else if (adj_res != res) {
    fijk.coord = orig;
  }
  return fijk;
}

LatLngRad face_ijk_to_latlng(const FaceIjk& fijk, int res) {
  return vec3_to_latlng(hex2d_to_vec3(fijk.coord.to_hex2d(), fijk.face, res, false));
}

std::vector<LatLngRad> face_ijk_to_boundary(const FaceIjk& fijk, int res) {
  int adj_res = res;
  FaceIjk center = fijk;
  FaceIjk verts[kNumHexVerts];
  face_ijk_to_verts(center, adj_res, kNumHexVerts, verts);

  std::vector<LatLngRad> out;
  out.reserve(10);

  int last_face = -1;
  Overage last_overage = Overage::kNone;
  // one extra iteration to catch a distortion vertex on the closing edge
  for (int vert = 0; vert < kNumHexVerts + 1; ++vert) {
    const int v = vert % kNumHexVerts;
    FaceIjk fv = verts[v];
    const Overage overage = adjust_overage_class_ii(fv, adj_res, false, true);

    // Class III edges may cross an icosahedron edge; insert the crossing point.
    if (is_class_iii(res) && vert > 0 && fv.face != last_face &&
        last_overage != Overage::kFaceEdge) {
      const int last_v = (v + 5) % kNumHexVerts;
      const Vec2 orig0 = verts[last_v].coord.to_hex2d();
      const Vec2 orig1 = verts[v].coord.to_hex2d();

      const int face2 = last_face == center.face ? fv.face : last_face;
      Vec2 e0;
      Vec2 e1;
      face_edge(kAdjacentFaceDir[center.face][face2], kMaxDimByCIIres[adj_res], e0, e1);

      const Vec2 inter = intersect(orig0, orig1, e0, e1);
      const bool at_vertex = almost_equals(orig0, inter) || almost_equals(orig1, inter);
      if (!at_vertex) {
        out.push_back(vec3_to_latlng(hex2d_to_vec3(inter, center.face, adj_res, true)));
      }
    }

    if (vert < kNumHexVerts) out.push_back(substrate_to_latlng(fv.coord, fv.face, adj_res));

    last_face = fv.face;
    last_overage = overage;
  }
  return out;
}

std::vector<LatLngRad> face_ijk_pent_to_boundary(const FaceIjk& fijk, int res) {
  int adj_res = res;
  FaceIjk center = fijk;
  FaceIjk verts[kNumPentVerts];
  face_ijk_to_verts(center, adj_res, kNumPentVerts, verts);

  std::vector<LatLngRad> out;
  out.reserve(10);

  FaceIjk last{};
  for (int vert = 0; vert < kNumPentVerts + 1; ++vert) {
    const int v = vert % kNumPentVerts;
    FaceIjk fv = verts[v];
    adjust_pent_vert_overage(fv, adj_res);

    // all Class III pentagon edges cross icosahedron edges
    if (is_class_iii(res) && vert > 0) {
      FaceIjk tmp = fv;
      const Vec2 orig0 = last.coord.to_hex2d();

      const int current_to_last = kAdjacentFaceDir[tmp.face][last.face];
      const FaceOrientIjk& orient = kFaceNeighbors[tmp.face][current_to_last];
      tmp.face = orient.face;
      for (int i = 0; i < orient.ccw_rot60; ++i) tmp.coord.rotate60_ccw();
      tmp.coord = tmp.coord + orient.translate.scaled(kUnitScaleByCIIres[adj_res] * 3);
      tmp.coord.normalize();

      const Vec2 orig1 = tmp.coord.to_hex2d();

      Vec2 e0;
      Vec2 e1;
      face_edge(kAdjacentFaceDir[tmp.face][fv.face], kMaxDimByCIIres[adj_res], e0, e1);
      const Vec2 inter = intersect(orig0, orig1, e0, e1);
      out.push_back(vec3_to_latlng(hex2d_to_vec3(inter, tmp.face, adj_res, true)));
    }

    if (vert < kNumPentVerts) out.push_back(substrate_to_latlng(fv.coord, fv.face, adj_res));
    last = fv;
  }
  return out;
}

}  // namespace microregion::hexgrid::detail
