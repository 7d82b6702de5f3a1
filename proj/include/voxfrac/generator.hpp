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
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"

namespace voxfrac {

/// A scale factor kept as numerator/denominator so that the default 2/3 and
/// 3/2 steps are applied as "multiply, then divide", which is exact whenever
/// the true result is representable.
struct Ratio {
  double num = 1.0;
  double den = 1.0;

  double value() const noexcept { return num / den; }
  double apply(double x) const noexcept { return x * num / den; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Parses "a/b" or a plain decimal.
inline std::optional<Ratio> parse_ratio(std::string_view text) {
  auto parse = [](std::string_view s) -> std::optional<double> {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      return std::nullopt;
    }
    return v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = parse(text.substr(0, slash));
    const auto d = parse(text.substr(slash + 1));
    if (!n || !d || *d == 0.0) return std::nullopt;
    return Ratio{*n, *d};
  }
  const auto v = parse(text);
  if (!v) return std::nullopt;
  return Ratio{*v, 1.0};
}

enum class BaseShape { kSquare, kCircle, kSphere };

inline std::optional<BaseShape> parse_base_shape(std::string_view s) {
  if (s == "square") return BaseShape::kSquare;
  if (s == "circle") return BaseShape::kCircle;
  if (s == "sphere") return BaseShape::kSphere;
  return std::nullopt;
}

/// Parameters of a stacked solid: each level is narrower by r_h and taller by
/// r_v than the one below it.
struct StackSpec {
  BaseShape base_shape = BaseShape::kSquare;
  double x0 = 1.0;  // width (square side or diameter) of level 0
  double y0 = 1.0;  // height of level 0
  Ratio r_h{2.0, 3.0};
  Ratio r_v{3.0, 2.0};
  std::size_t levels = 1;

  void validate() const {
    if (!(x0 > 0.0) || !std::isfinite(x0)) {
      throw InvalidArgument("x0 must be positive");
    }
    if (!(y0 > 0.0) || !std::isfinite(y0)) {
      throw InvalidArgument("y0 must be positive");
    }
    const double h = r_h.value();
    const double v = r_v.value();
    if (!(h > 0.0 && h < 1.0)) {
      throw InvalidArgument("horizontal factor must lie in (0, 1)");
    }
    if (!(v > 1.0) || !std::isfinite(v)) {
      throw InvalidArgument("vertical factor must exceed 1");
    }
    if (levels == 0) throw InvalidArgument("levels must be >= 1");
  }
};

struct Level {
  std::size_t level = 0;
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const Level&, const Level&) = default;
};

struct LevelSequence {
  std::vector<Level> entries;
};

/// Applies width(l+1) = r_h * width(l) and height(l+1) = r_v * height(l).
inline LevelSequence level_sequence(const StackSpec& spec) {
  spec.validate();
  LevelSequence seq;
  seq.entries.reserve(spec.levels);
  Level current{0, spec.x0, spec.y0};
  for (std::size_t l = 0; l < spec.levels; ++l) {
    seq.entries.push_back(current);
    current = Level{l + 1, spec.r_h.apply(current.width),
                    spec.r_v.apply(current.height)};
  }
  return seq;
}

/// Largest deviation of the first three widths, normalised by the first, from
/// the target proportions (9:6:4 by default). Zero means an exact match.
inline double ratio_check(const LevelSequence& seq,
                          const std::array<double, 3>& target = {9.0, 6.0,
                                                                 4.0}) {
  if (seq.entries.size() < 3) {
    throw InvalidArgument("ratio check needs at least 3 levels");
  }
  if (!(seq.entries[0].width > 0.0) || !(target[0] > 0.0)) {
    throw InvalidArgument("ratio check needs a positive leading width");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    const double got = seq.entries[i].width / seq.entries[0].width;
    const double want = target[i] / target[0];
    worst = std::max(worst, std::abs(got - want));
  }
  return worst;
}

/// One rasterized level, in voxels.
struct LevelVoxels {
  std::size_t level = 0;
  std::size_t width = 0;
  std::size_t thickness = 0;
  std::size_t z_begin = 0;
};

struct StackRaster {
  VoxelGrid grid;
  std::vector<LevelVoxels> levels;
  /// First level dropped because its width rounds below one voxel.
  std::optional<std::size_t> truncated_at;
};

/// Round half away from zero.
inline std::size_t round_voxels(double v) {
  return static_cast<std::size_t>(std::max(0.0, std::round(v)));
}

/// Stacks the levels bottom-up as concentric solids on a shared vertical
/// axis, with `resolution` voxels across x0.
///
/// Square levels are centred prisms (offset rounded down when parities
/// differ). Circle levels keep cells whose centres lie within the level
/// radius. Sphere stacks are circle stacks with every cell whose centre lies
/// outside the sphere of diameter x0, centred halfway up the stack, cleared.
/// The grid is x0 wide and as tall as the kept slabs, with the axis at
/// model x = y = 0 and the base at z = 0.
inline StackRaster rasterize_stack(const StackSpec& spec,
                                   std::size_t resolution) {
  spec.validate();
  if (resolution == 0) throw InvalidArgument("resolution must be >= 1");
  const LevelSequence seq = level_sequence(spec);
  const double per_unit = static_cast<double>(resolution) / spec.x0;

  std::vector<LevelVoxels> levels;
  std::optional<std::size_t> truncated_at;
  std::size_t height = 0;
  for (const Level& lv : seq.entries) {
    const std::size_t w = round_voxels(lv.width * per_unit);
    if (w < 1) {
      truncated_at = lv.level;
      break;
    }
    const std::size_t t = std::max<std::size_t>(1, round_voxels(lv.height * per_unit));
    levels.push_back(LevelVoxels{lv.level, std::min(w, resolution), t, height});
    height += t;
  }

  const double vs = spec.x0 / static_cast<double>(resolution);
  const double half_width = 0.5 * vs * static_cast<double>(resolution);
  VoxelGrid grid(Dims{resolution, resolution, height}, vs,
                 Vec3{-half_width, -half_width, 0.0});

  // Squared distances in doubled voxel units keep every test in integers.
  const auto w0 = static_cast<std::int64_t>(resolution);
  const auto h = static_cast<std::int64_t>(height);
  for (const LevelVoxels& lv : levels) {
    const auto wl = static_cast<std::int64_t>(lv.width);
    const std::size_t lo = (resolution - lv.width) / 2;
    for (std::size_t z = lv.z_begin; z < lv.z_begin + lv.thickness; ++z) {
      const std::int64_t dz = 2 * static_cast<std::int64_t>(z) + 1 - h;
      for (std::size_t y = 0; y < resolution; ++y) {
        const std::int64_t dy = 2 * static_cast<std::int64_t>(y) + 1 - w0;
        for (std::size_t x = 0; x < resolution; ++x) {
          const std::int64_t dx = 2 * static_cast<std::int64_t>(x) + 1 - w0;
          bool inside = false;
          if (spec.base_shape == BaseShape::kSquare) {
            inside = x >= lo && x < lo + lv.width && y >= lo &&
                     y < lo + lv.width;
          } else {
            inside = dx * dx + dy * dy <= wl * wl;
            if (spec.base_shape == BaseShape::kSphere) {
              inside = inside && dx * dx + dy * dy + dz * dz <= w0 * w0;
            }
          }
          if (inside) grid.set(x, y, z);
        }
      }
    }
  }
  return StackRaster{std::move(grid), std::move(levels), truncated_at};
}

}  // namespace voxfrac
