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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "voxfrac/generator.hpp"

namespace voxfrac {
namespace {

StackSpec spec(BaseShape shape, double x0, double y0, std::size_t levels) {
  StackSpec s;
  s.base_shape = shape;
  s.x0 = x0;
  s.y0 = y0;
  s.levels = levels;
  return s;
}

std::vector<double> widths(const LevelSequence& seq) {
  std::vector<double> w;
  for (const Level& l : seq.entries) w.push_back(l.width);
  return w;
}

std::vector<double> heights(const LevelSequence& seq) {
  std::vector<double> h;
  for (const Level& l : seq.entries) h.push_back(l.height);
  return h;
}

TEST(LevelSequence, NineSixFourProgression) {
  const LevelSequence seq = level_sequence(spec(BaseShape::kSquare, 9, 4, 3));
  EXPECT_EQ(widths(seq), (std::vector<double>{9, 6, 4}));
  EXPECT_EQ(heights(seq), (std::vector<double>{4, 6, 9}));
  EXPECT_EQ(seq.entries[2].level, 2u);
}

TEST(LevelSequence, SingleLevel) {
  const LevelSequence seq = level_sequence(spec(BaseShape::kSquare, 1, 1, 1));
  ASSERT_EQ(seq.entries.size(), 1u);
  EXPECT_EQ(seq.entries[0], (Level{0, 1.0, 1.0}));
}

TEST(LevelSequence, OneStep) {
  const LevelSequence seq = level_sequence(spec(BaseShape::kSquare, 8, 2, 2));
  EXPECT_EQ(widths(seq), (std::vector<double>{8, 16.0 / 3.0}));
  EXPECT_EQ(heights(seq), (std::vector<double>{2, 3}));
}

TEST(LevelSequence, DefaultFactorsAreMutualInverses) {
  const StackSpec s;
  EXPECT_EQ(s.r_h.num * s.r_v.num / (s.r_h.den * s.r_v.den), 1.0);
  EXPECT_EQ(s.r_h.value(), 2.0 / 3.0);
  EXPECT_EQ(s.r_v.value(), 1.5);
}

TEST(LevelSequence, RejectsInvalidSpec) {
  EXPECT_THROW(level_sequence(spec(BaseShape::kSquare, 0, 1, 3)),
               InvalidArgument);
  EXPECT_THROW(level_sequence(spec(BaseShape::kSquare, 1, -1, 3)),
               InvalidArgument);
  EXPECT_THROW(level_sequence(spec(BaseShape::kSquare, 1, 1, 0)),
               InvalidArgument);
  StackSpec s = spec(BaseShape::kSquare, 1, 1, 2);
  s.r_h = Ratio{3, 2};
  EXPECT_THROW(level_sequence(s), InvalidArgument);
  s.r_h = Ratio{2, 3};
  s.r_v = Ratio{1, 2};
  EXPECT_THROW(level_sequence(s), InvalidArgument);
}

TEST(LevelSequenceProperty, TwoStepRatiosAreScaleFree) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pos(0.01, 1000.0);
  for (int trial = 0; trial < 200; ++trial) {
    const LevelSequence seq =
        level_sequence(spec(BaseShape::kSquare, pos(rng), pos(rng), 6));
    for (std::size_t l = 0; l + 2 < seq.entries.size(); ++l) {
      const Level& a = seq.entries[l];
      const Level& b = seq.entries[l + 1];
      const Level& c = seq.entries[l + 2];
      EXPECT_NEAR(c.width / a.width, 4.0 / 9.0, 1e-14);
      EXPECT_NEAR(c.height / a.height, 9.0 / 4.0, 1e-14);
      EXPECT_LT(b.width, a.width);
      EXPECT_GT(b.height, a.height);
    }
  }
}

TEST(ParseRatio, FractionsAndDecimals) {
  EXPECT_EQ(parse_ratio("2/3"), (Ratio{2, 3}));
  EXPECT_EQ(parse_ratio("1.5"), (Ratio{1.5, 1}));
  EXPECT_FALSE(parse_ratio("2/0"));
  EXPECT_FALSE(parse_ratio("abc"));
  EXPECT_FALSE(parse_ratio(""));
}

TEST(RatioCheck, Examples) {
  auto seq = [](std::vector<double> w) {
    LevelSequence s;
    for (std::size_t i = 0; i < w.size(); ++i) s.entries.push_back({i, w[i], 1});
    return s;
  };
  EXPECT_EQ(ratio_check(seq({9, 6, 4})), 0.0);
  EXPECT_EQ(ratio_check(seq({18, 12, 8})), 0.0);
  EXPECT_NEAR(ratio_check(seq({9, 6, 5})), 1.0 / 9.0, 1e-15);
  EXPECT_THROW(ratio_check(seq({9, 6})), InvalidArgument);
}

TEST(RatioCheckProperty, ScaleInvariant) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> w(0.5, 20.0);
  std::uniform_real_distribution<double> k(0.001, 1000.0);
  for (int trial = 0; trial < 200; ++trial) {
    LevelSequence a;
    LevelSequence b;
    const double scale = k(rng);
    for (std::size_t i = 0; i < 4; ++i) {
      const double v = w(rng);
      a.entries.push_back({i, v, 1});
      b.entries.push_back({i, v * scale, 1});
    }
    EXPECT_NEAR(ratio_check(a), ratio_check(b), 1e-12);
  }
}

TEST(RasterizeStack, SingleSquarePrism) {
  const StackRaster r = rasterize_stack(spec(BaseShape::kSquare, 4, 2, 1), 4);
  EXPECT_EQ(r.grid.dims(), (Dims{4, 4, 2}));
  EXPECT_EQ(r.grid.occupied_count(), 32u);
  EXPECT_FALSE(r.truncated_at);
}

TEST(RasterizeStack, SquareNineSixFour) {
  const StackRaster r = rasterize_stack(spec(BaseShape::kSquare, 9, 4, 3), 9);
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_EQ(r.grid.dims(), (Dims{9, 9, 19}));
  EXPECT_EQ(r.grid.occupied_count(), 684u);

  // Brute force: every layer of level l is one contiguous width_l square.
  const std::size_t w[] = {9, 6, 4};
  const std::size_t t[] = {4, 6, 9};
  std::size_t z = 0;
  std::size_t total = 0;
  for (int l = 0; l < 3; ++l) {
    for (std::size_t k = 0; k < t[l]; ++k, ++z) {
      std::size_t in_layer = 0;
      std::size_t xmin = 99, xmax = 0;
      for (std::size_t y = 0; y < 9; ++y)
        for (std::size_t x = 0; x < 9; ++x)
          if (r.grid.at(x, y, z)) {
            ++in_layer;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
          }
      EXPECT_EQ(in_layer, w[l] * w[l]);
      EXPECT_EQ(xmax - xmin + 1, w[l]);
      total += in_layer;
    }
  }
  EXPECT_EQ(total, 684u);
}

TEST(RasterizeStackProperty, SquareCountIsSumOfLevelBoxes) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dim(0.5, 12.0);
  std::uniform_int_distribution<std::size_t> levels(1, 7);
  std::uniform_int_distribution<std::size_t> res(3, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const StackRaster r = rasterize_stack(
        spec(BaseShape::kSquare, dim(rng), dim(rng), levels(rng)), res(rng));
    std::size_t expected = 0;
    for (const LevelVoxels& lv : r.levels)
      expected += lv.width * lv.width * lv.thickness;
    EXPECT_EQ(r.grid.occupied_count(), expected);
  }
}

TEST(RasterizeStack, SmallCircle) {
  const StackRaster r = rasterize_stack(spec(BaseShape::kCircle, 2, 1, 1), 2);
  EXPECT_EQ(r.grid.dims(), (Dims{2, 2, 1}));
  EXPECT_EQ(r.grid.occupied_count(), 4u);
}

// Centre-in-disk / centre-in-ball test in model units, cell by cell.
std::size_t brute_round_stack(const StackRaster& r, BaseShape shape) {
  const VoxelGrid& g = r.grid;
  const double vs = g.voxel_size();
  const double top = vs * static_cast<double>(g.dims().nz);
  const double radius = 0.5 * vs * static_cast<double>(g.dims().nx);
  std::size_t count = 0;
  for (const LevelVoxels& lv : r.levels) {
    const double level_r = 0.5 * vs * static_cast<double>(lv.width);
    for (std::size_t z = lv.z_begin; z < lv.z_begin + lv.thickness; ++z)
      for (std::size_t y = 0; y < g.dims().ny; ++y)
        for (std::size_t x = 0; x < g.dims().nx; ++x) {
          const auto c = g.cell_min(x, y, z);
          const double cx = c[0] + 0.5 * vs;
          const double cy = c[1] + 0.5 * vs;
          const double cz = c[2] + 0.5 * vs - 0.5 * top;
          bool in = cx * cx + cy * cy <= level_r * level_r * (1 + 1e-12);
          if (shape == BaseShape::kSphere)
            in = in && cx * cx + cy * cy + cz * cz <= radius * radius * (1 + 1e-12);
          if (in) {
            ++count;
            EXPECT_TRUE(g.at(x, y, z));
          }
        }
  }
  return count;
}

TEST(RasterizeStack, CircleAndSphereMatchBruteForce) {
  for (BaseShape shape : {BaseShape::kCircle, BaseShape::kSphere}) {
    for (std::size_t res : {5u, 16u, 32u}) {
      const StackRaster r = rasterize_stack(spec(shape, 4, 1, 4), res);
      EXPECT_EQ(r.grid.occupied_count(), brute_round_stack(r, shape));
    }
  }
}

TEST(RasterizeStack, SphereIsInsideItsCylinderStack) {
  const StackRaster cyl = rasterize_stack(spec(BaseShape::kCircle, 4, 3, 3), 24);
  const StackRaster sph = rasterize_stack(spec(BaseShape::kSphere, 4, 3, 3), 24);
  ASSERT_EQ(cyl.grid.dims(), sph.grid.dims());
  EXPECT_LT(sph.grid.occupied_count(), cyl.grid.occupied_count());
  sph.grid.for_each_occupied([&](std::size_t x, std::size_t y, std::size_t z) {
    EXPECT_TRUE(cyl.grid.at(x, y, z));
  });
}

TEST(RasterizeStack, TruncatesBelowOneVoxel) {
  // Level widths in voxels: 2, 1.33, 0.89, 0.59, 0.40 -> 2, 1, 1, 1, 0.
  const StackRaster r = rasterize_stack(spec(BaseShape::kSquare, 1, 1, 5), 2);
  ASSERT_TRUE(r.truncated_at);
  EXPECT_EQ(*r.truncated_at, 4u);
  EXPECT_EQ(r.levels.size(), 4u);
}

TEST(RasterizeStack, ThinLevelsKeepOneVoxel) {
  const StackRaster r = rasterize_stack(spec(BaseShape::kSquare, 10, 0.01, 2), 10);
  EXPECT_EQ(r.levels[0].thickness, 1u);
  EXPECT_EQ(r.levels[1].thickness, 1u);
}

TEST(RasterizeStack, RoundsHalfAwayFromZero) {
  EXPECT_EQ(round_voxels(2.5), 3u);
  EXPECT_EQ(round_voxels(0.5), 1u);
  EXPECT_EQ(round_voxels(0.49), 0u);
}

}  // namespace
}  // namespace voxfrac
