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
#include <cmath>
#include <cstddef>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"
#include "voxfrac/mesh.hpp"
#include "voxfrac/tribox.hpp"

namespace voxfrac {

/// Placement of a voxel lattice around a mesh.
struct VoxelFrame {
  Dims dims;
  double voxel_size = 1.0;
  Vec3 origin{};
};

/// Lattice for `bounds` at `resolution` voxels along the longest axis.
///
/// Every axis gets max(1, ceil(extent / voxel_size)) interior cells plus one
/// padding cell per side. The interior block is centred on the bounds, so a
/// flat axis lands in the middle of a single cell layer and the longest axis
/// starts exactly one voxel below the mesh minimum.
inline VoxelFrame voxel_frame(const Aabb& bounds, std::size_t resolution) {
  if (resolution < 2) {
    throw InvalidArgument("resolution must be >= 2");
  }
  const Vec3 extent = bounds.extent();
  const int longest = static_cast<int>(
      std::max_element(extent.begin(), extent.end()) - extent.begin());
  const double length = extent[longest];
  if (!(length > 0.0)) {
    throw DegenerateGeometry("mesh bounding box has zero extent");
  }

  VoxelFrame frame;
  frame.voxel_size = length / static_cast<double>(resolution);
  const double vs = frame.voxel_size;
  std::array<std::size_t, 3> n{};
  for (int a = 0; a < 3; ++a) {
    std::size_t cells = resolution;
    double slack = 0.0;
    if (a != longest) {
      const double q = extent[a] / vs;
      cells = static_cast<std::size_t>(std::ceil(q * (1.0 - 1e-12)));
      cells = std::clamp<std::size_t>(cells, 1, resolution);
      slack = static_cast<double>(cells) * vs - extent[a];
      if (std::abs(slack) < 1e-9 * vs) slack = 0.0;
    }
    n[a] = cells + 2;
    frame.origin[a] = bounds.min[a] - vs - 0.5 * slack;
  }
  frame.dims = Dims{n[0], n[1], n[2]};
  return frame;
}

/// Marks every cell whose closed box overlaps at least one triangle.
inline VoxelGrid voxelize_surface(const TriangleMesh& mesh,
                                  std::size_t resolution) {
  if (mesh.empty()) {
    throw InvalidArgument("cannot voxelize a mesh with no triangles");
  }
  const VoxelFrame frame = voxel_frame(mesh.bounds(), resolution);
  VoxelGrid grid(frame.dims, frame.voxel_size, frame.origin);

  const double vs = frame.voxel_size;
  const Vec3 half{0.5 * vs, 0.5 * vs, 0.5 * vs};
  const std::array<std::size_t, 3> n = {frame.dims.nx, frame.dims.ny,
                                        frame.dims.nz};

  for (std::size_t t = 0; t < mesh.triangles().size(); ++t) {
    const std::array<Vec3, 3> tri = mesh.corners(t);
    std::array<std::size_t, 3> lo{};
    std::array<std::size_t, 3> hi{};
    for (int a = 0; a < 3; ++a) {
      const double tmin = std::min({tri[0][a], tri[1][a], tri[2][a]});
      const double tmax = std::max({tri[0][a], tri[1][a], tri[2][a]});
      // One extra cell each way covers boundary touches under rounding.
      const double first = std::floor((tmin - frame.origin[a]) / vs) - 1.0;
      const double last = std::floor((tmax - frame.origin[a]) / vs) + 1.0;
      lo[a] = static_cast<std::size_t>(std::max(0.0, first));
      hi[a] = std::min(n[a] - 1, static_cast<std::size_t>(std::max(0.0, last)));
    }
    for (std::size_t z = lo[2]; z <= hi[2]; ++z) {
      for (std::size_t y = lo[1]; y <= hi[1]; ++y) {
        for (std::size_t x = lo[0]; x <= hi[0]; ++x) {
          const std::size_t i = grid.index(x, y, z);
          if (grid.test(i)) continue;
          const Vec3 corner = grid.cell_min(x, y, z);
          const Vec3 center{corner[0] + half[0], corner[1] + half[1],
                            corner[2] + half[2]};
          if (triangle_box_overlap(center, half, tri)) grid.set_index(i);
        }
      }
    }
  }
  return grid;
}

/// Fills enclosed cavities: empty cells 6-connected to an empty boundary cell
/// are exterior, everything else is occupied in the result.
inline VoxelGrid solid_fill(const VoxelGrid& surface) {
  const Dims& d = surface.dims();
  VoxelGrid exterior(d, surface.voxel_size(), surface.origin());
  std::vector<std::size_t> stack;

  auto visit = [&](std::size_t x, std::size_t y, std::size_t z) {
    const std::size_t i = surface.index(x, y, z);
    if (!surface.test(i) && !exterior.test(i)) {
      exterior.set_index(i);
      stack.push_back(i);
    }
  };

  for (std::size_t z = 0; z < d.nz; ++z) {
    for (std::size_t y = 0; y < d.ny; ++y) {
      for (std::size_t x = 0; x < d.nx; ++x) {
        const bool boundary = x == 0 || y == 0 || z == 0 || x + 1 == d.nx ||
                              y + 1 == d.ny || z + 1 == d.nz;
        if (boundary) visit(x, y, z);
      }
    }
  }

  const std::size_t plane = d.nx * d.ny;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    const std::size_t z = i / plane;
    const std::size_t y = (i % plane) / d.nx;
    const std::size_t x = i % d.nx;
    if (x > 0) visit(x - 1, y, z);
    if (x + 1 < d.nx) visit(x + 1, y, z);
    if (y > 0) visit(x, y - 1, z);
    if (y + 1 < d.ny) visit(x, y + 1, z);
    if (z > 0) visit(x, y, z - 1);
    if (z + 1 < d.nz) visit(x, y, z + 1);
  }

  std::vector<VoxelGrid::Word> words(exterior.words().begin(),
                                     exterior.words().end());
  for (auto& w : words) w = ~w;
  const std::size_t tail = surface.cell_count() % VoxelGrid::kWordBits;
  if (tail != 0) words.back() &= (VoxelGrid::Word{1} << tail) - 1;
  VoxelGrid solid(d, surface.voxel_size(), surface.origin());
  solid.assign_words(std::move(words));
  return solid;
}

}  // namespace voxfrac
