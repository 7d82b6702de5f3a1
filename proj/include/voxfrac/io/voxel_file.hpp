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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/grid.hpp"
#include "voxfrac/io/bytes.hpp"

// VOXL container, all fields little-endian:
//
//   offset  size  field
//        0     4  magic "VOXL"
//        4     4  u32 version (1)
//        8    12  u32 nx, ny, nz
//       20     8  f64 voxel_size
//       28    24  f64 origin x, y, z
//       52     *  ceil(nx*ny*nz / 8) payload bytes; cell i (x fastest) is
//                 bit (i % 8) of byte (i / 8), unused high bits are zero.
namespace voxfrac::io {

inline constexpr std::string_view kVoxelMagic = "VOXL";
inline constexpr std::uint32_t kVoxelVersion = 1;
inline constexpr std::size_t kVoxelHeaderBytes = 52;

inline std::string write_voxel(const VoxelGrid& grid) {
  const Dims& d = grid.dims();
  std::string out;
  out.reserve(kVoxelHeaderBytes + (grid.cell_count() + 7) / 8);
  out += kVoxelMagic;
  le::put_u32(out, kVoxelVersion);
  le::put_u32(out, static_cast<std::uint32_t>(d.nx));
  le::put_u32(out, static_cast<std::uint32_t>(d.ny));
  le::put_u32(out, static_cast<std::uint32_t>(d.nz));
  le::put_f64(out, grid.voxel_size());
  for (double o : grid.origin()) le::put_f64(out, o);

  const std::size_t payload = (grid.cell_count() + 7) / 8;
  const auto words = grid.words();
  for (std::size_t b = 0; b < payload; ++b) {
    out.push_back(static_cast<char>((words[b / 8] >> (8 * (b % 8))) & 0xffu));
  }
  return out;
}

inline VoxelGrid read_voxel(std::string_view bytes) {
  if (bytes.size() < kVoxelHeaderBytes) {
    throw TruncatedFile("voxel file shorter than its 52-byte header");
  }
  if (bytes.substr(0, 4) != kVoxelMagic) {
    throw FormatError("bad voxel file magic");
  }
  if (const std::uint32_t v = le::u32(bytes, 4); v != kVoxelVersion) {
    throw FormatError("unsupported voxel file version " + std::to_string(v));
  }
  const Dims dims{le::u32(bytes, 8), le::u32(bytes, 12), le::u32(bytes, 16)};
  if (dims.nx == 0 || dims.ny == 0 || dims.nz == 0) {
    throw FormatError("voxel file has a zero dimension");
  }
  if (dims.nx > kMaxCells / dims.ny ||
      dims.nx * dims.ny > kMaxCells / dims.nz) {
    throw FormatError("voxel file dimensions exceed the supported size");
  }
  const double voxel_size = le::f64(bytes, 20);
  const Vec3 origin{le::f64(bytes, 28), le::f64(bytes, 36),
                    le::f64(bytes, 44)};
  if (!(voxel_size > 0.0) || !std::isfinite(voxel_size)) {
    throw FormatError("voxel file has a non-positive voxel size");
  }
  for (double o : origin) {
    if (!std::isfinite(o)) throw FormatError("voxel file origin not finite");
  }

  const std::size_t payload = (dims.cell_count() + 7) / 8;
  const std::size_t have = bytes.size() - kVoxelHeaderBytes;
  if (have < payload) {
    throw TruncatedFile("voxel payload has " + std::to_string(have) +
                        " bytes, dimensions need " + std::to_string(payload));
  }
  if (have > payload) {
    throw FormatError("voxel payload has " + std::to_string(have - payload) +
                      " trailing bytes");
  }

  VoxelGrid grid(dims, voxel_size, origin);
  std::vector<VoxelGrid::Word> words(grid.words().size(), 0);
  for (std::size_t b = 0; b < payload; ++b) {
    const auto byte = static_cast<unsigned char>(bytes[kVoxelHeaderBytes + b]);
    words[b / 8] |= VoxelGrid::Word{byte} << (8 * (b % 8));
  }
  grid.assign_words(std::move(words));  // rejects stray trailing bits
  return grid;
}

}  // namespace voxfrac::io
