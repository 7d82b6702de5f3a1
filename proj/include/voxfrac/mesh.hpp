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

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"

namespace voxfrac {

using Triangle = std::array<std::uint32_t, 3>;

struct Aabb {
  Vec3 min;
  Vec3 max;

  Vec3 extent() const noexcept {
    return {max[0] - min[0], max[1] - min[1], max[2] - min[2]};
  }
};

/// Indexed triangle soup. Indices are validated at construction; a triangle
/// that repeats an index is rejected.
class TriangleMesh {
 public:
  TriangleMesh() = default;

  TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles)
      : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
    for (const Vec3& v : vertices_) {
      if (!std::isfinite(v[0]) || !std::isfinite(v[1]) ||
          !std::isfinite(v[2])) {
        throw InvalidArgument("vertex coordinates must be finite");
      }
    }
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      const Triangle& tri = triangles_[t];
      for (std::uint32_t i : tri) {
        if (i >= vertices_.size()) {
          throw InvalidArgument("triangle " + std::to_string(t) +
                                " references vertex " + std::to_string(i) +
                                " of " + std::to_string(vertices_.size()));
        }
      }
      if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
        throw InvalidArgument("triangle " + std::to_string(t) +
                              " repeats a vertex index");
      }
    }
  }

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<Triangle>& triangles() const noexcept {
    return triangles_;
  }
  bool empty() const noexcept { return triangles_.empty(); }

  std::array<Vec3, 3> corners(std::size_t t) const {
    const Triangle& tri = triangles_.at(t);
    return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
  }

  /// Bounds of the vertices referenced by triangles.
  Aabb bounds() const {
    if (triangles_.empty()) throw InvalidArgument("mesh has no triangles");
    Aabb box{vertices_[triangles_[0][0]], vertices_[triangles_[0][0]]};
    for (const Triangle& tri : triangles_) {
      for (std::uint32_t i : tri) {
        for (int a = 0; a < 3; ++a) {
          box.min[a] = std::min(box.min[a], vertices_[i][a]);
          box.max[a] = std::max(box.max[a], vertices_[i][a]);
        }
      }
    }
    return box;
  }

  friend bool operator==(const TriangleMesh&, const TriangleMesh&) = default;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Triangle> triangles_;
};

/// True when, after welding bit-identical positions, every undirected edge is
/// shared by exactly two triangles.
inline bool is_watertight(const TriangleMesh& mesh) {
  if (mesh.empty()) return false;
  std::map<Vec3, std::uint32_t> weld;
  std::vector<std::uint32_t> remap(mesh.vertices().size());
  for (std::size_t i = 0; i < mesh.vertices().size(); ++i) {
    auto [it, inserted] = weld.try_emplace(
        mesh.vertices()[i], static_cast<std::uint32_t>(weld.size()));
    remap[i] = it->second;
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_use;
  for (const Triangle& tri : mesh.triangles()) {
    for (int k = 0; k < 3; ++k) {
      std::uint32_t a = remap[tri[k]];
      std::uint32_t b = remap[tri[(k + 1) % 3]];
      if (a == b) return false;
      if (a > b) std::swap(a, b);
      ++edge_use[{a, b}];
    }
  }
  for (const auto& [edge, uses] : edge_use) {
    if (uses != 2) return false;
  }
  return true;
}

/// Boundary faces of the occupied cells as an outward-oriented triangle mesh.
/// Each exposed cell face contributes two triangles; lattice corners are
/// shared, numbered in order of first use.
inline TriangleMesh surface_mesh(const VoxelGrid& grid) {
  // Corner offsets per face, counter-clockwise seen from outside.
  static constexpr int kFaces[6][4][3] = {
      {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 0}},  // -x
      {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}},  // +x
      {{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}},  // -y
      {{0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}},  // +y
      {{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}},  // -z
      {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}},  // +z
  };
  static constexpr int kNeighbor[6][3] = {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0},
                                          {0, 1, 0},  {0, 0, -1}, {0, 0, 1}};

  const Dims& d = grid.dims();
  const std::size_t cx = d.nx + 1;
  const std::size_t cy = d.ny + 1;
  std::unordered_map<std::size_t, std::uint32_t> corner_ids;
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;

  auto corner = [&](std::size_t x, std::size_t y, std::size_t z) {
    const std::size_t key = x + cx * (y + cy * z);
    auto [it, inserted] = corner_ids.try_emplace(
        key, static_cast<std::uint32_t>(vertices.size()));
    if (inserted) vertices.push_back(grid.cell_min(x, y, z));
    return it->second;
  };

  auto occupied = [&](std::ptrdiff_t x, std::ptrdiff_t y, std::ptrdiff_t z) {
    if (x < 0 || y < 0 || z < 0) return false;
    const auto ux = static_cast<std::size_t>(x);
    const auto uy = static_cast<std::size_t>(y);
    const auto uz = static_cast<std::size_t>(z);
    return grid.contains(ux, uy, uz) && grid.at(ux, uy, uz);
  };

  grid.for_each_occupied([&](std::size_t x, std::size_t y, std::size_t z) {
    for (int f = 0; f < 6; ++f) {
      if (occupied(static_cast<std::ptrdiff_t>(x) + kNeighbor[f][0],
                   static_cast<std::ptrdiff_t>(y) + kNeighbor[f][1],
                   static_cast<std::ptrdiff_t>(z) + kNeighbor[f][2])) {
        continue;
      }
      std::array<std::uint32_t, 4> q{};
      for (int k = 0; k < 4; ++k) {
        q[k] = corner(x + kFaces[f][k][0], y + kFaces[f][k][1],
                      z + kFaces[f][k][2]);
      }
      triangles.push_back({q[0], q[1], q[2]});
      triangles.push_back({q[0], q[2], q[3]});
    }
  });
  return TriangleMesh(std::move(vertices), std::move(triangles));
}

}  // namespace voxfrac
