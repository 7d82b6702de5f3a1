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
#include "voxfrac/io/bytes.hpp"
#include "voxfrac/io/text.hpp"
#include "voxfrac/mesh.hpp"

namespace voxfrac::io {

inline constexpr std::size_t kStlHeaderBytes = 84;
inline constexpr std::size_t kStlTriangleBytes = 50;

namespace detail {

inline TriangleMesh parse_stl_binary(std::string_view bytes) {
  if (bytes.size() < kStlHeaderBytes) {
    throw TruncatedFile("binary STL shorter than its 84-byte header");
  }
  const std::uint64_t count = le::u32(bytes, 80);
  const std::uint64_t expected = kStlHeaderBytes + kStlTriangleBytes * count;
  if (bytes.size() != expected) {
    throw TruncatedFile("binary STL declares " + std::to_string(count) +
                        " triangles (" + std::to_string(expected) +
                        " bytes) but has " + std::to_string(bytes.size()) +
                        " bytes");
  }
  if (count == 0) throw FormatError("STL contains no triangles");

  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
  vertices.reserve(3 * count);
  triangles.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    // Skip the 12-byte facet normal; it is recomputable and often wrong.
    const std::size_t base = kStlHeaderBytes + kStlTriangleBytes * t + 12;
    const auto first = static_cast<std::uint32_t>(vertices.size());
    for (std::size_t k = 0; k < 3; ++k) {
      Vec3 p{};
      for (std::size_t a = 0; a < 3; ++a) {
        const float f = le::f32(bytes, base + 12 * k + 4 * a);
        if (!std::isfinite(f)) {
          throw FormatError("binary STL triangle " + std::to_string(t) +
                            " has a non-finite coordinate");
        }
        p[a] = static_cast<double>(f);
      }
      vertices.push_back(p);
    }
    triangles.push_back({first, first + 1, first + 2});
  }
  return TriangleMesh(std::move(vertices), std::move(triangles));
}

struct Token {
  std::string_view text;
  std::size_t line;
};

inline TriangleMesh parse_stl_ascii(std::string_view text) {
  std::vector<Token> tokens;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    for (std::string_view t : split_whitespace(line)) {
      tokens.push_back({t, line_no});
    }
  });

  std::size_t pos = 0;
  auto line_here = [&] {
    return pos < tokens.size() ? tokens[pos].line
                               : (tokens.empty() ? 1 : tokens.back().line);
  };
  auto expect = [&](std::string_view word) {
    if (pos >= tokens.size() || tokens[pos].text != word) {
      throw ParseError(line_here(), "expected '" + std::string(word) + "'");
    }
    ++pos;
  };
  auto number = [&]() {
    if (pos >= tokens.size()) throw ParseError(line_here(), "expected number");
    const auto v = parse_double(tokens[pos].text);
    if (!v) {
      throw ParseError(line_here(), "bad number '" +
                                        std::string(tokens[pos].text) + "'");
    }
    ++pos;
    return *v;
  };

  expect("solid");
  // Optional solid name: anything up to the first facet/endsolid.
  while (pos < tokens.size() && tokens[pos].text != "facet" &&
         tokens[pos].text != "endsolid") {
    ++pos;
  }

  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;
  while (pos < tokens.size() && tokens[pos].text == "facet") {
    ++pos;
    expect("normal");
    number();
    number();
    number();
    expect("outer");
    expect("loop");
    const auto first = static_cast<std::uint32_t>(vertices.size());
    for (int k = 0; k < 3; ++k) {
      expect("vertex");
      const double x = number();
      const double y = number();
      const double z = number();
      vertices.push_back({x, y, z});
    }
    expect("endloop");
    expect("endfacet");
    triangles.push_back({first, first + 1, first + 2});
  }
  expect("endsolid");
  // Trailing solid name is allowed; further content is not.
  if (pos < tokens.size() && tokens[pos].line == tokens[pos - 1].line) ++pos;
  if (pos != tokens.size()) {
    throw ParseError(line_here(), "unexpected content after endsolid");
  }
  if (triangles.empty()) throw FormatError("STL contains no triangles");
  return TriangleMesh(std::move(vertices), std::move(triangles));
}

}  // namespace detail

/// Reads ASCII or binary STL. Input starting with "solid" is tried as ASCII
/// first and falls back to binary (some exporters write "solid" into binary
/// headers); if both readings fail the ASCII diagnostic is reported.
/// Vertices are not welded: each triangle owns three fresh vertices.
inline TriangleMesh parse_stl(std::string_view bytes) {
  if (bytes.substr(0, 5) == "solid") {
    try {
      return detail::parse_stl_ascii(bytes);
    } catch (const Error&) {
      try {
        return detail::parse_stl_binary(bytes);
      } catch (const Error&) {
      }
      throw;
    }
  }
  return detail::parse_stl_binary(bytes);
}

}  // namespace voxfrac::io
