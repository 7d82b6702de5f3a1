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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "voxfrac/dimension.hpp"
#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"
#include "voxfrac/regression.hpp"

namespace voxfrac {

/// How many elements of a given size were found.
struct CensusPoint {
  double size = 1.0;
  double count = 1.0;

  friend bool operator==(const CensusPoint&, const CensusPoint&) = default;
};

/// N(s) ~ exp(log_prefactor) * s^delta.
struct PowerLawFit {
  double delta = 0.0;
  double log_prefactor = 0.0;
  double r_squared = 0.0;
  std::vector<CensusPoint> points;
  std::vector<double> residuals;
};

/// Least-squares line through (ln size, ln count).
inline PowerLawFit fit_power_law(std::span<const CensusPoint> points) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const CensusPoint& p = points[i];
    if (!(p.size > 0.0) || !std::isfinite(p.size)) {
      throw InvalidArgument("census point " + std::to_string(i + 1) +
                            ": size must be positive");
    }
    if (!(p.count > 0.0) || !std::isfinite(p.count)) {
      throw InvalidArgument("census point " + std::to_string(i + 1) +
                            ": count must be positive");
    }
    x.push_back(std::log(p.size));
    y.push_back(std::log(p.count));
  }
  if (points.size() < 2) {
    throw InsufficientData("power-law fit needs at least 2 points");
  }
  LineFit line = ordinary_least_squares(x, y);
  return PowerLawFit{line.slope, line.intercept, line.r_squared,
                     std::vector<CensusPoint>(points.begin(), points.end()),
                     std::move(line.residuals)};
}

/// Pairs each element size (in voxels) with the number of occupied boxes of
/// that size; sizes are reported in model units.
inline std::vector<CensusPoint> census_from_grid(
    const VoxelGrid& grid, std::span<const std::size_t> element_sizes) {
  std::vector<CensusPoint> out;
  out.reserve(element_sizes.size());
  for (std::size_t s : element_sizes) {
    const ScaleCount c = box_count(grid, s);
    out.push_back(CensusPoint{c.epsilon, static_cast<double>(c.count)});
  }
  return out;
}

}  // namespace voxfrac
