// Copyright 2026 The voxfrac Authors.
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

#include <algorithm>
#include <array>
#include <cmath>

#include "voxfrac/grid.hpp"

namespace voxfrac {

namespace detail {

inline Vec3 sub(const Vec3& a, const Vec3& b) noexcept {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const Vec3& a, const Vec3& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Projection radius of a box with half-extents `half` onto `axis`.
inline double box_radius(const Vec3& half, const Vec3& axis) noexcept {
  return half[0] * std::abs(axis[0]) + half[1] * std::abs(axis[1]) +
         half[2] * std::abs(axis[2]);
}

}  // namespace detail

/// Closed triangle vs closed axis-aligned box overlap by the separating axis
/// theorem: 3 box normals, the triangle normal and the 9 edge/axis cross
/// products. Touching counts as overlap. Works for zero-area triangles.
inline bool triangle_box_overlap(const Vec3& box_center, const Vec3& half,
                                 const std::array<Vec3, 3>& tri) noexcept {
  using detail::box_radius;
  using detail::cross;
  using detail::dot;
  using detail::sub;

  const std::array<Vec3, 3> v = {sub(tri[0], box_center),
                                 sub(tri[1], box_center),
                                 sub(tri[2], box_center)};

  // Box face normals first; they reject most candidates.
  for (int a = 0; a < 3; ++a) {
    const double lo = std::min({v[0][a], v[1][a], v[2][a]});
    const double hi = std::max({v[0][a], v[1][a], v[2][a]});
    if (lo > half[a] || hi < -half[a]) return false;
  }

  const std::array<Vec3, 3> edges = {sub(v[1], v[0]), sub(v[2], v[1]),
                                     sub(v[0], v[2])};
  static constexpr std::array<Vec3, 3> kUnit = {
      Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}};

  for (const Vec3& e : edges) {
    for (const Vec3& u : kUnit) {
      const Vec3 axis = cross(u, e);
      const double p0 = dot(axis, v[0]);
      const double p1 = dot(axis, v[1]);
      const double p2 = dot(axis, v[2]);
      const double r = box_radius(half, axis);
      if (std::min({p0, p1, p2}) > r || std::max({p0, p1, p2}) < -r) {
        return false;
      }
    }
  }

  const Vec3 normal = cross(edges[0], edges[1]);
  return std::abs(dot(normal, v[0])) <= box_radius(half, normal);
}

}  // namespace voxfrac
