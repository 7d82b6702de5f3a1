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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Little-endian fixed-width fields over byte strings. Callers bounds-check.
namespace voxfrac::io::le {

inline std::uint64_t load(std::string_view bytes, std::size_t at,
                          std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < width; ++k) {
    v |= std::uint64_t{static_cast<unsigned char>(bytes[at + k])} << (8 * k);
  }
  return v;
}

inline void store(std::string& out, std::uint64_t v, std::size_t width) {
  for (std::size_t k = 0; k < width; ++k) {
    out.push_back(static_cast<char>((v >> (8 * k)) & 0xffu));
  }
}

inline std::uint32_t u32(std::string_view bytes, std::size_t at) {
  return static_cast<std::uint32_t>(load(bytes, at, 4));
}

inline float f32(std::string_view bytes, std::size_t at) {
  return std::bit_cast<float>(u32(bytes, at));
}

inline double f64(std::string_view bytes, std::size_t at) {
  return std::bit_cast<double>(load(bytes, at, 8));
}

inline void put_u32(std::string& out, std::uint32_t v) { store(out, v, 4); }
inline void put_f32(std::string& out, float v) {
  store(out, std::bit_cast<std::uint32_t>(v), 4);
}
inline void put_f64(std::string& out, double v) {
  store(out, std::bit_cast<std::uint64_t>(v), 8);
}

}  // namespace voxfrac::io::le
