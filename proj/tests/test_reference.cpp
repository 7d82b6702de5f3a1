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

#include <gtest/gtest.h>

#include "voxfrac/reference.hpp"

namespace voxfrac {
namespace {

// Recursive definition: keep a sub-cube unless at least two of its
// coordinates are the middle third.
bool menger_cell(std::size_t x, std::size_t y, std::size_t z,
                 std::size_t side) {
  if (side == 1) return true;
  const std::size_t third = side / 3;
  const int middles = (x / third == 1) + (y / third == 1) + (z / third == 1);
  if (middles >= 2) return false;
  return menger_cell(x % third, y % third, z % third, third);
}

TEST(Menger, BaseCases) {
  EXPECT_EQ(gen_reference(ReferenceKind::kMenger, 0).occupied_count(), 1u);
  const VoxelGrid d1 = gen_reference(ReferenceKind::kMenger, 1);
  EXPECT_EQ(d1.dims(), (Dims{3, 3, 3}));
  EXPECT_EQ(d1.occupied_count(), 20u);
  EXPECT_FALSE(d1.at(1, 1, 1));
  EXPECT_FALSE(d1.at(1, 1, 0));
  EXPECT_TRUE(d1.at(1, 0, 0));
  EXPECT_EQ(gen_reference(ReferenceKind::kMenger, 3).occupied_count(), 8000u);
}

TEST(Menger, CountIsTwentyToTheDepth) {
  std::size_t expected = 1;
  for (std::size_t d = 0; d <= 5; ++d, expected *= 20) {
    EXPECT_EQ(menger_sponge(d).occupied_count(), expected) << "depth " << d;
  }
}

TEST(Menger, MatchesRecursiveDefinition) {
  for (std::size_t depth : {2u, 3u}) {
    const VoxelGrid g = menger_sponge(depth);
    const std::size_t side = g.dims().nx;
    for (std::size_t z = 0; z < side; ++z)
      for (std::size_t y = 0; y < side; ++y)
        for (std::size_t x = 0; x < side; ++x)
          ASSERT_EQ(g.at(x, y, z), menger_cell(x, y, z, side));
  }
}

TEST(Menger, DepthLimit) {
  EXPECT_THROW(gen_reference(ReferenceKind::kMenger, 7), ResourceLimit);
  EXPECT_THROW(gen_reference(ReferenceKind::kMenger, 9), ResourceLimit);
}

TEST(Reference, CubeAndSlab) {
  const VoxelGrid cube = gen_reference(ReferenceKind::kCube, 16);
  EXPECT_EQ(cube.occupied_count(), 4096u);
  const VoxelGrid slab = gen_reference(ReferenceKind::kSlab, 64);
  EXPECT_EQ(slab.dims(), (Dims{64, 64, 1}));
  EXPECT_EQ(slab.occupied_count(), 4096u);
  EXPECT_EQ(gen_reference(ReferenceKind::kCube, 3).occupied_count(), 27u);
  EXPECT_THROW(gen_reference(ReferenceKind::kCube, 0), InvalidArgument);
}

TEST(Reference, ParseKind) {
  EXPECT_EQ(parse_reference_kind("menger"), ReferenceKind::kMenger);
  EXPECT_EQ(parse_reference_kind("slab"), ReferenceKind::kSlab);
  EXPECT_FALSE(parse_reference_kind("sponge"));
}

}  // namespace
}  // namespace voxfrac
