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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voxfrac/error.hpp"

namespace voxfrac {

using Vec3 = std::array<double, 3>;

/// Cell counts along x, y and z.
struct Dims {
  std::size_t nx = 1;
  std::size_t ny = 1;
  std::size_t nz = 1;

  constexpr std::size_t cell_count() const noexcept { return nx * ny * nz; }
  constexpr std::size_t max_extent() const noexcept {
    return std::max({nx, ny, nz});
  }
  friend constexpr bool operator==(const Dims&, const Dims&) = default;
};

/// Upper bound on cells per grid (2^33 cells = 1 GiB of bits).
inline constexpr std::size_t kMaxCells = std::size_t{1} << 33;

/// Axis-aligned, bit-packed occupancy grid.
///
/// Cell (x, y, z) has linear index x + nx * (y + ny * z) and occupies the
/// model-space box origin + voxel_size * [x, x+1] x [y, y+1] x [z, z+1].
/// Bits beyond the last cell in the final storage word are always zero, so
/// two grids compare equal exactly when they describe the same set.
class VoxelGrid {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VoxelGrid(Dims dims, double voxel_size, Vec3 origin = {0.0, 0.0, 0.0})
      : dims_(dims), voxel_size_(voxel_size), origin_(origin) {
    if (dims.nx == 0 || dims.ny == 0 || dims.nz == 0) {
      throw InvalidArgument("grid dimensions must all be >= 1");
    }
    if (!(voxel_size > 0.0) || !std::isfinite(voxel_size)) {
      throw InvalidArgument("voxel_size must be a positive finite number");
    }
    for (double o : origin) {
      if (!std::isfinite(o)) throw InvalidArgument("origin must be finite");
    }
    constexpr std::size_t kAxisMax = std::numeric_limits<std::uint32_t>::max();
    if (dims.nx > kAxisMax || dims.ny > kAxisMax || dims.nz > kAxisMax ||
        dims.nx > kMaxCells / dims.ny ||
        dims.nx * dims.ny > kMaxCells / dims.nz) {
      throw ResourceLimit("grid of " + std::to_string(dims.nx) + "x" +
                          std::to_string(dims.ny) + "x" +
                          std::to_string(dims.nz) + " cells is too large");
    }
    words_.assign((dims.cell_count() + kWordBits - 1) / kWordBits, 0);
  }

  const Dims& dims() const noexcept { return dims_; }
  double voxel_size() const noexcept { return voxel_size_; }
  const Vec3& origin() const noexcept { return origin_; }
  std::size_t cell_count() const noexcept { return dims_.cell_count(); }

  bool contains(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    return x < dims_.nx && y < dims_.ny && z < dims_.nz;
  }

  std::size_t index(std::size_t x, std::size_t y, std::size_t z) const {
    if (!contains(x, y, z)) {
      throw InvalidArgument("cell (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) +
                            ") is outside the grid");
    }
    return x + dims_.nx * (y + dims_.ny * z);
  }

  bool at(std::size_t x, std::size_t y, std::size_t z) const {
    return test(index(x, y, z));
  }

  void set(std::size_t x, std::size_t y, std::size_t z, bool value = true) {
    set_index(index(x, y, z), value);
  }

  bool test(std::size_t i) const {
    check_linear(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set_index(std::size_t i, bool value = true) {
    check_linear(i);
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  std::size_t occupied_count() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](Word w) { return w == 0; });
  }

  /// Raw storage, cell i at bit (i % 64) of word (i / 64).
  std::span<const Word> words() const noexcept { return words_; }

  /// Replaces the storage wholesale. Throws FormatError if the word count is
  /// wrong or any bit past the last cell is set.
  void assign_words(std::vector<Word> words) {
    if (words.size() != words_.size()) {
      throw FormatError("payload word count does not match grid dimensions");
    }
    const std::size_t tail = cell_count() % kWordBits;
    if (tail != 0 && (words.back() >> tail) != 0) {
      throw FormatError("payload has bits set beyond the last cell");
    }
    words_ = std::move(words);
  }

  /// Calls f(x, y, z) for every occupied cell in increasing linear order.
  template <typename F>
  void for_each_occupied(F&& f) const {
    const std::size_t plane = dims_.nx * dims_.ny;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const std::size_t i =
            w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::size_t z = i / plane;
        const std::size_t r = i % plane;
        f(r % dims_.nx, r / dims_.nx, z);
      }
    }
  }

  /// Min corner of cell (x, y, z) in model space.
  Vec3 cell_min(std::size_t x, std::size_t y, std::size_t z) const noexcept {
    return {origin_[0] + voxel_size_ * static_cast<double>(x),
            origin_[1] + voxel_size_ * static_cast<double>(y),
            origin_[2] + voxel_size_ * static_cast<double>(z)};
  }

  friend bool operator==(const VoxelGrid&, const VoxelGrid&) = default;

 private:
  void check_linear(std::size_t i) const {
    if (i >= cell_count()) {
      throw InvalidArgument("cell index " + std::to_string(i) +
                            " is outside the grid");
    }
  }

  Dims dims_;
  double voxel_size_;
  Vec3 origin_;
  std::vector<Word> words_;
};

/// All-empty grid; throws InvalidArgument on zero dims or non-positive size.
inline VoxelGrid make_grid(Dims dims, double voxel_size,
                           Vec3 origin = {0.0, 0.0, 0.0}) {
  return VoxelGrid(dims, voxel_size, origin);
}

}  // namespace voxfrac
