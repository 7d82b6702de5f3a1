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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"
#include "voxfrac/regression.hpp"

namespace voxfrac {

/// Occupied-box count at one box size.
struct ScaleCount {
  std::size_t box_side = 1;  // voxels
  double epsilon = 1.0;      // model units, box_side * voxel_size
  std::size_t count = 0;

  friend bool operator==(const ScaleCount&, const ScaleCount&) = default;
};

struct DimensionFit {
  double dimension = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<ScaleCount> scales_used;
  std::vector<double> residuals;
};

namespace detail {

/// Occupancy with each x-row padded to whole 64-bit words, which makes
/// OR-pooling over y and z a plain word loop.
class BitVolume {
 public:
  using Word = std::uint64_t;

  BitVolume(std::size_t nx, std::size_t ny, std::size_t nz)
      : nx_(nx), ny_(ny), nz_(nz), row_words_((nx + 63) / 64),
        words_(row_words_ * ny * nz, 0) {}

  static BitVolume from_grid(const VoxelGrid& grid) {
    const Dims& d = grid.dims();
    BitVolume v(d.nx, d.ny, d.nz);
    const auto src = grid.words();
    std::size_t bit = 0;
    for (std::size_t r = 0; r < d.ny * d.nz; ++r, bit += d.nx) {
      Word* row = v.row(r);
      for (std::size_t k = 0; k < v.row_words_; ++k) {
        // Copy up to 64 bits starting at flat bit (bit + 64k).
        const std::size_t start = bit + 64 * k;
        const std::size_t take = std::min<std::size_t>(64, d.nx - 64 * k);
        const std::size_t w = start / 64;
        const std::size_t off = start % 64;
        Word chunk = src[w] >> off;
        if (off != 0 && w + 1 < src.size()) chunk |= src[w + 1] << (64 - off);
        if (take < 64) chunk &= (Word{1} << take) - 1;
        row[k] = chunk;
      }
    }
    return v;
  }

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t nz() const noexcept { return nz_; }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Cell (X, Y, Z) of the result is occupied iff any cell in
  /// [sX, sX+s) x [sY, sY+s) x [sZ, sZ+s) is. Far-face blocks may be partial.
  BitVolume pool(std::size_t s) const {
    if (s == 1) return *this;
    BitVolume out((nx_ + s - 1) / s, (ny_ + s - 1) / s, (nz_ + s - 1) / s);
    std::vector<Word> merged(row_words_);
    for (std::size_t oz = 0; oz < out.nz_; ++oz) {
      const std::size_t z_end = std::min(nz_, (oz + 1) * s);
      for (std::size_t oy = 0; oy < out.ny_; ++oy) {
        const std::size_t y_end = std::min(ny_, (oy + 1) * s);
        std::fill(merged.begin(), merged.end(), 0);
        for (std::size_t z = oz * s; z < z_end; ++z) {
          for (std::size_t y = oy * s; y < y_end; ++y) {
            const Word* src = row(y + ny_ * z);
            for (std::size_t k = 0; k < row_words_; ++k) merged[k] |= src[k];
          }
        }
        Word* dst = out.row(oy + out.ny_ * oz);
        for (std::size_t k = 0; k < row_words_; ++k) {
          Word bits = merged[k];
          while (bits != 0) {
            const std::size_t x =
                64 * k + static_cast<std::size_t>(std::countr_zero(bits));
            const std::size_t ox = x / s;
            dst[ox / 64] |= Word{1} << (ox % 64);
            // Skip the rest of this block; its bit is already set.
            const std::size_t next = (ox + 1) * s;
            if (next >= 64 * (k + 1)) {
              bits = 0;
            } else {
              bits &= ~Word{0} << (next - 64 * k);
            }
          }
          // A block can straddle words; later words are scanned on their own.
        }
      }
    }
    return out;
  }

 private:
  Word* row(std::size_t r) noexcept { return words_.data() + r * row_words_; }
  const Word* row(std::size_t r) const noexcept {
    return words_.data() + r * row_words_;
  }

  std::size_t nx_, ny_, nz_;
  std::size_t row_words_;
  std::vector<Word> words_;
};

inline void require_occupied(const VoxelGrid& grid) {
  if (grid.empty()) {
    throw EmptySet("grid has no occupied cells; box-counting dimension is "
                   "undefined");
  }
}

}  // namespace detail

/// Number of boxes of `box_side` voxels, tiling the grid from its origin
/// corner, that contain at least one occupied cell.
inline ScaleCount box_count(const VoxelGrid& grid, std::size_t box_side) {
  detail::require_occupied(grid);
  if (box_side < 1 || box_side > grid.dims().max_extent()) {
    throw InvalidArgument("box side " + std::to_string(box_side) +
                          " is outside [1, " +
                          std::to_string(grid.dims().max_extent()) + "]");
  }
  const auto pooled = detail::BitVolume::from_grid(grid).pool(box_side);
  return ScaleCount{box_side,
                    static_cast<double>(box_side) * grid.voxel_size(),
                    pooled.count()};
}

/// Counts at box sides 2^m, 2^(m-1), ..., 1, where 2^m is the smallest power
/// of two covering the largest grid dimension. Each level is pooled from the
/// previous one, so the whole pyramid costs about one pass over the grid.
inline std::vector<ScaleCount> cube_count_dyadic(const VoxelGrid& grid) {
  detail::require_occupied(grid);
  const std::size_t top = std::bit_ceil(grid.dims().max_extent());
  std::vector<ScaleCount> out;
  auto level = detail::BitVolume::from_grid(grid);
  for (std::size_t side = 1;; side *= 2) {
    out.push_back(ScaleCount{
        side, static_cast<double>(side) * grid.voxel_size(), level.count()});
    if (side == top) break;
    level = level.pool(2);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

/// Least-squares slope of ln N against ln(1/epsilon).
///
/// Scales are ordered finest first; `discard_low` finest and `discard_high`
/// coarsest entries are dropped before fitting.
inline DimensionFit fit_dimension(std::vector<ScaleCount> scales,
                                  std::size_t discard_low = 0,
                                  std::size_t discard_high = 0) {
  for (const ScaleCount& s : scales) {
    if (!(s.epsilon > 0.0) || !std::isfinite(s.epsilon)) {
      throw InvalidArgument("scale epsilon must be positive");
    }
    if (s.count == 0) throw InvalidArgument("scale count must be positive");
  }
  std::stable_sort(scales.begin(), scales.end(),
                   [](const ScaleCount& a, const ScaleCount& b) {
                     return a.epsilon < b.epsilon;
                   });
  if (discard_low + discard_high >= scales.size() ||
      scales.size() - discard_low - discard_high < 2) {
    throw InsufficientData("fewer than 2 scales remain after discarding");
  }
  std::vector<ScaleCount> used(
      scales.begin() + static_cast<std::ptrdiff_t>(discard_low),
      scales.end() - static_cast<std::ptrdiff_t>(discard_high));

  std::vector<double> x;
  std::vector<double> y;
  for (const ScaleCount& s : used) {
    x.push_back(-std::log(s.epsilon));
    y.push_back(std::log(static_cast<double>(s.count)));
  }
  LineFit line = ordinary_least_squares(x, y);
  return DimensionFit{line.slope, line.intercept, line.r_squared,
                      std::move(used), std::move(line.residuals)};
}

}  // namespace voxfrac
