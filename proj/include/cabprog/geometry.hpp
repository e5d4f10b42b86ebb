// Copyright 2026 The cabprog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Oriented-box kernel for boxes rotated about the vertical axis only.
//
// World frame: +z is up, the cabinet front faces -y, and the origin sits at a
// corner of the cabinet's bounding box so that the cabinet lies in the first
// octant. Because rotation is 1-D, the intersection of two boxes factors into
// (footprint polygon intersection) x (z-interval overlap), which is computed
// exactly by convex clipping.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cabprog/constants.hpp"
#include "cabprog/model.hpp"

namespace cabprog {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Vec2 a) { return std::hypot(a.x, a.y); }

struct Segment2 {
  Vec2 a;
  Vec2 b;
  friend bool operator==(const Segment2&, const Segment2&) = default;
  friend auto operator<=>(const Segment2&, const Segment2&) = default;
};

struct Aabb3 {
  Vec3 min;
  Vec3 max;
  Vec3 extent() const { return max - min; }
  friend bool operator==(const Aabb3&, const Aabb3&) = default;
};

struct Aabb2 {
  Vec2 min{std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity()};
  Vec2 max{-std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};

  bool empty() const { return min.x > max.x || min.y > max.y; }
  double width() const { return empty() ? 0.0 : max.x - min.x; }
  double height() const { return empty() ? 0.0 : max.y - min.y; }
  void expand(Vec2 p) {
    min.x = std::min(min.x, p.x);
    min.y = std::min(min.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }
  void expand(const Aabb2& o) {
    if (o.empty()) return;
    expand(o.min);
    expand(o.max);
  }
};

namespace detail {

// cos/sin of an angle in degrees, exact at multiples of 90 so that quarter-turn
// boxes produce exactly axis-aligned corners.
inline std::pair<double, double> cos_sin_deg(double deg) {
  double r = canonical_degrees(deg);
  if (r == 0.0) return {1.0, 0.0};
  if (r == 90.0) return {0.0, 1.0};
  if (r == 180.0) return {-1.0, 0.0};
  if (r == 270.0) return {0.0, -1.0};
  double rad = r * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

}  // namespace detail

// Corner i has local sign (+/-) per axis from bits 0 (x), 1 (y), 2 (z).
inline std::array<Vec3, 8> box_corners(const OrientedBox& box) {
  auto [c, s] = detail::cos_sin_deg(box.rotation_deg);
  const Vec3 h = box.size * 0.5;
  std::array<Vec3, 8> out{};
  for (int i = 0; i < 8; ++i) {
    double lx = (i & 1) ? h.x : -h.x;
    double ly = (i & 2) ? h.y : -h.y;
    double lz = (i & 4) ? h.z : -h.z;
    out[i] = Vec3{box.position.x + (c * lx - s * ly),
                  box.position.y + (s * lx + c * ly), box.position.z + lz};
  }
  return out;
}

// Counter-clockwise footprint in the xy-plane.
inline std::array<Vec2, 4> footprint(const OrientedBox& box) {
  auto [c, s] = detail::cos_sin_deg(box.rotation_deg);
  const double hx = box.size.x * 0.5;
  const double hy = box.size.y * 0.5;
  constexpr double kSigns[4][2] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  std::array<Vec2, 4> out{};
  for (int i = 0; i < 4; ++i) {
    double lx = kSigns[i][0] * hx;
    double ly = kSigns[i][1] * hy;
    out[i] = Vec2{box.position.x + (c * lx - s * ly),
                  box.position.y + (s * lx + c * ly)};
  }
  return out;
}

// Signed shoelace area; positive for counter-clockwise polygons.
inline double polygon_area(std::span<const Vec2> poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    twice += cross(poly[j], poly[i]);
  }
  return 0.5 * twice;
}

// Sutherland-Hodgman clipping of a convex CCW polygon against a convex CCW
// clip polygon. Points within kClipEpsilonMm of a clip edge count as inside.
inline std::vector<Vec2> clip_convex(std::span<const Vec2> subject,
                                     std::span<const Vec2> clip) {
  std::vector<Vec2> output(subject.begin(), subject.end());
  std::vector<Vec2> input;
  for (std::size_t e = 0; e < clip.size() && !output.empty(); ++e) {
    const Vec2 c0 = clip[e];
    const Vec2 c1 = clip[(e + 1) % clip.size()];
    const Vec2 dir = c1 - c0;
    const double len = length(dir);
    if (len == 0.0) continue;
    auto side = [&](Vec2 p) { return cross(dir, p - c0) / len; };

    input.swap(output);
    output.clear();
    for (std::size_t j = 0; j < input.size(); ++j) {
      const Vec2 cur = input[j];
      const Vec2 prev = input[(j + input.size() - 1) % input.size()];
      const double dc = side(cur);
      const double dp = side(prev);
      const bool cur_in = dc >= -kClipEpsilonMm;
      const bool prev_in = dp >= -kClipEpsilonMm;
      if (cur_in != prev_in) {
        const double t = dp / (dp - dc);
        output.push_back(prev + (cur - prev) * t);
      }
      if (cur_in) output.push_back(cur);
    }
  }
  // Drop consecutive duplicates produced by vertices lying on clip edges.
  std::vector<Vec2> out;
  for (const Vec2& p : output) {
    if (out.empty() || length(p - out.back()) > kClipEpsilonMm) out.push_back(p);
  }
  while (out.size() > 1 && length(out.front() - out.back()) <= kClipEpsilonMm) {
    out.pop_back();
  }
  return out;
}

inline Aabb3 box_aabb(const OrientedBox& box) {
  auto corners = box_corners(box);
  Aabb3 out{corners[0], corners[0]};
  for (const auto& c : corners) {
    for (int k = 0; k < 3; ++k) {
      out.min[k] = std::min(out.min[k], c[k]);
      out.max[k] = std::max(out.max[k], c[k]);
    }
  }
  return out;
}

inline Aabb3 model_aabb(const CabinetModel& model) {
  if (model.instances.empty()) {
    throw std::invalid_argument("model_aabb: model has no instances");
  }
  Aabb3 out = box_aabb(model.instances.front().box);
  for (const auto& inst : model.instances) {
    Aabb3 b = box_aabb(inst.box);
    for (int k = 0; k < 3; ++k) {
      out.min[k] = std::min(out.min[k], b.min[k]);
      out.max[k] = std::max(out.max[k], b.max[k]);
    }
  }
  return out;
}

enum class IouMode {
  kRotated,  // exact oriented-box IoU
  kAabb,     // IoU of the two world-frame bounding boxes
};

namespace detail {

inline auto box_key(const OrientedBox& b) {
  return std::make_tuple(b.position.x, b.position.y, b.position.z, b.size.x,
                         b.size.y, b.size.z, b.rotation_deg);
}

inline double aabb_iou(const Aabb3& a, const Aabb3& b) {
  double inter = 1.0;
  for (int k = 0; k < 3; ++k) {
    double lo = std::max(a.min[k], b.min[k]);
    double hi = std::min(a.max[k], b.max[k]);
    if (hi <= lo) return 0.0;
    inter *= hi - lo;
  }
  Vec3 ea = a.extent();
  Vec3 eb = b.extent();
  double va = ea.x * ea.y * ea.z;
  double vb = eb.x * eb.y * eb.z;
  return std::clamp(inter / (va + vb - inter), 0.0, 1.0);
}

}  // namespace detail

// Intersection over union of two valid boxes. Touching boxes score 0;
// identical boxes score exactly 1. Argument order never changes the result.
inline double iou3d(const OrientedBox& a, const OrientedBox& b,
                    IouMode mode = IouMode::kRotated) {
  if (a == b) return 1.0;
  if (mode == IouMode::kAabb) {
    return detail::aabb_iou(box_aabb(a), box_aabb(b));
  }
  const OrientedBox& p = detail::box_key(a) < detail::box_key(b) ? a : b;
  const OrientedBox& q = &p == &a ? b : a;

  const double zlo = std::max(p.position.z - p.size.z * 0.5,
                              q.position.z - q.size.z * 0.5);
  const double zhi = std::min(p.position.z + p.size.z * 0.5,
                              q.position.z + q.size.z * 0.5);
  if (zhi <= zlo) return 0.0;

  const auto fp = footprint(p);
  const auto fq = footprint(q);
  const auto clipped = clip_convex(fp, fq);
  const double area = polygon_area(clipped);
  const double area_p = p.size.x * p.size.y;
  const double area_q = q.size.x * q.size.y;
  if (area <= 1e-12 * std::min(area_p, area_q)) return 0.0;

  const double inter = area * (zhi - zlo);
  const double vp = area_p * p.size.z;
  const double vq = area_q * q.size.z;
  return std::clamp(inter / (vp + vq - inter), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Orthographic projection

enum class ViewKind { kFront, kTop, kSide, kSection };

inline std::string_view to_string(ViewKind v) {
  switch (v) {
    case ViewKind::kFront: return "front";
    case ViewKind::kTop: return "top";
    case ViewKind::kSide: return "side";
    case ViewKind::kSection: return "section";
  }
  return "?";
}

inline std::optional<ViewKind> parse_view_kind(std::string_view s) {
  for (auto v : {ViewKind::kFront, ViewKind::kTop, ViewKind::kSide,
                 ViewKind::kSection}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

// View-plane coordinates (u right, v up):
//   front/section: (x, z), looking along +y at the -y face
//   top:           (x, y), looking down -z
//   side:          (y, z), right-side view looking along -x
inline Vec2 project(const Vec3& p, ViewKind view) {
  switch (view) {
    case ViewKind::kFront:
    case ViewKind::kSection:
      return {p.x, p.z};
    case ViewKind::kTop:
      return {p.x, p.y};
    case ViewKind::kSide:
      return {p.y, p.z};
  }
  return {};
}

// Unions collinear segments that overlap or touch. Output endpoints are
// original input points, sorted canonically; merging twice equals merging
// once.
inline std::vector<Segment2> merge_segments(std::span<const Segment2> segments,
                                            double tol = 1e-6) {
  struct Item {
    double angle;
    double offset;
    double t0;
    double t1;
    Vec2 p0;
    Vec2 p1;
  };
  std::vector<Item> items;
  items.reserve(segments.size());
  for (const auto& s : segments) {
    Vec2 d = s.b - s.a;
    double len = length(d);
    if (!(len > tol)) continue;
    Vec2 u = d * (1.0 / len);
    Vec2 p0 = s.a;
    Vec2 p1 = s.b;
    if (u.x < -1e-12 || (std::abs(u.x) <= 1e-12 && u.y < 0.0)) {
      u = u * -1.0;
      std::swap(p0, p1);
    }
    items.push_back({std::atan2(u.y, u.x), cross(u, p0), dot(u, p0), dot(u, p1),
                     p0, p1});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.angle < b.angle; });

  std::vector<Segment2> out;
  std::size_t i = 0;
  while (i < items.size()) {
    // Angle group.
    std::size_t j = i + 1;
    while (j < items.size() && items[j].angle - items[j - 1].angle <= 1e-9) ++j;
    std::sort(items.begin() + i, items.begin() + j,
              [](const Item& a, const Item& b) { return a.offset < b.offset; });
    std::size_t k = i;
    while (k < j) {
      // Line group within the angle group.
      std::size_t m = k + 1;
      while (m < j && items[m].offset - items[m - 1].offset <= tol) ++m;
      std::sort(items.begin() + k, items.begin() + m,
                [](const Item& a, const Item& b) { return a.t0 < b.t0; });
      Vec2 lo = items[k].p0;
      Vec2 hi = items[k].p1;
      double hi_t = items[k].t1;
      for (std::size_t n = k + 1; n < m; ++n) {
        if (items[n].t0 <= hi_t + tol) {
          if (items[n].t1 > hi_t) {
            hi_t = items[n].t1;
            hi = items[n].p1;
          }
        } else {
          out.push_back({lo, hi});
          lo = items[n].p0;
          hi = items[n].p1;
          hi_t = items[n].t1;
        }
      }
      out.push_back({lo, hi});
      k = m;
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Wireframe of the 12 box edges projected into `view`; edges parallel to the
// view direction vanish and coincident edges are merged.
inline std::vector<Segment2> project_box(const OrientedBox& box, ViewKind view) {
  const auto corners = box_corners(box);
  std::vector<Segment2> segs;
  segs.reserve(12);
  for (int bit : {1, 2, 4}) {
    for (int i = 0; i < 8; ++i) {
      if (i & bit) continue;
      segs.push_back({project(corners[i], view), project(corners[i | bit], view)});
    }
  }
  return merge_segments(segs);
}

}  // namespace cabprog
