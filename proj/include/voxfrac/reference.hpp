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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"

namespace voxfrac {

/// Known-answer sets with exact box-counting dimensions.
enum class ReferenceKind { kMenger, kCube, kSlab };

inline constexpr std::size_t kMaxMengerDepth = 6;

inline std::optional<ReferenceKind> parse_reference_kind(std::string_view s) {
  if (s == "menger") return ReferenceKind::kMenger;
  if (s == "cube") return ReferenceKind::kCube;
  if (s == "slab") return ReferenceKind::kSlab;
  return std::nullopt;
}

namespace detail {

inline VoxelGrid full_grid(Dims dims) {
  VoxelGrid grid(dims, 1.0);
  std::vector<VoxelGrid::Word> words(grid.words().size(), ~VoxelGrid::Word{0});
  const std::size_t tail = grid.cell_count() % VoxelGrid::kWordBits;
  if (tail != 0) words.back() = (VoxelGrid::Word{1} << tail) - 1;
  grid.assign_words(std::move(words));
  return grid;
}

}  // namespace detail

/// Menger sponge of the given depth on a 3^depth lattice (20^depth cells).
///
/// A cell is removed when, at some ternary digit position, at least two of its
/// coordinates have digit 1; that is the "7 of 27 centre sub-cubes" rule
/// applied at every level at once.
inline VoxelGrid menger_sponge(std::size_t depth) {
  if (depth > kMaxMengerDepth) {
    throw ResourceLimit("menger depth " + std::to_string(depth) +
                        " exceeds the limit of " +
                        std::to_string(kMaxMengerDepth));
  }
  std::size_t side = 1;
  for (std::size_t k = 0; k < depth; ++k) side *= 3;

  // ones[c] has bit k set when ternary digit k of c is 1.
  std::vector<std::uint32_t> ones(side, 0);
  for (std::size_t c = 0; c < side; ++c) {
    std::size_t v = c;
    for (std::size_t k = 0; k < depth; ++k, v /= 3) {
      if (v % 3 == 1) ones[c] |= 1u << k;
    }
  }

  VoxelGrid grid(Dims{side, side, side}, 1.0);
  std::size_t i = 0;
  for (std::size_t z = 0; z < side; ++z) {
    for (std::size_t y = 0; y < side; ++y) {
      const std::uint32_t both = ones[y] & ones[z];
      const std::uint32_t either = ones[y] | ones[z];
      for (std::size_t x = 0; x < side; ++x, ++i) {
        if (((ones[x] & either) | both) == 0) grid.set_index(i);
      }
    }
  }
  return grid;
}

/// `size` is the Menger depth for kMenger, the edge length otherwise
/// (cube: size^3 cells, slab: size x size x 1). All cells are unit voxels.
inline VoxelGrid gen_reference(ReferenceKind kind, std::size_t size) {
  switch (kind) {
    case ReferenceKind::kMenger:
      return menger_sponge(size);
    case ReferenceKind::kCube:
      if (size == 0) throw InvalidArgument("cube size must be >= 1");
      return detail::full_grid(Dims{size, size, size});
    case ReferenceKind::kSlab:
      if (size == 0) throw InvalidArgument("slab size must be >= 1");
      return detail::full_grid(Dims{size, size, 1});
  }
  throw InvalidArgument("unknown reference kind");
}

}  // namespace voxfrac
