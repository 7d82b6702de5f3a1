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

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "voxfrac/error.hpp"
#include "voxfrac/io/text.hpp"
#include "voxfrac/mesh.hpp"

namespace voxfrac::io {

/// Reads the geometry subset of Wavefront OBJ: `v` and `f` records.
///
/// Polygons are fan-triangulated from their first vertex. Face references may
/// carry `/vt/vn` suffixes (ignored) and may be negative (relative to the
/// vertices read so far). Every other record type is skipped.
inline TriangleMesh parse_obj(std::string_view text) {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) return;

    if (tokens[0] == "v") {
      if (tokens.size() < 4) {
        throw ParseError(line_no, "vertex needs 3 coordinates");
      }
      Vec3 p{};
      for (int a = 0; a < 3; ++a) {
        const auto v = parse_double(tokens[1 + a]);
        if (!v) {
          throw ParseError(line_no, "bad vertex coordinate '" +
                                        std::string(tokens[1 + a]) + "'");
        }
        p[a] = *v;
      }
      vertices.push_back(p);
    } else if (tokens[0] == "f") {
      if (tokens.size() < 4) {
        throw ParseError(line_no, "face needs at least 3 vertices");
      }
      std::vector<std::uint32_t> poly;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        const std::string_view ref = tokens[k].substr(0, tokens[k].find('/'));
        const auto raw = parse_integer(ref);
        if (!raw) {
          throw ParseError(line_no, "bad face index '" +
                                        std::string(tokens[k]) + "'");
        }
        const auto n = static_cast<long long>(vertices.size());
        const long long idx = *raw > 0 ? *raw - 1 : n + *raw;
        if (*raw == 0 || idx < 0 || idx >= n) {
          throw ParseError(line_no, "face index " + std::to_string(*raw) +
                                        " out of range (" +
                                        std::to_string(n) + " vertices)");
        }
        poly.push_back(static_cast<std::uint32_t>(idx));
      }
      for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
        const Triangle tri{poly[0], poly[k], poly[k + 1]};
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
          throw ParseError(line_no, "face repeats a vertex");
        }
        triangles.push_back(tri);
      }
    }
    if (vertices.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(line_no, "too many vertices");
    }
  });

  if (triangles.empty()) throw FormatError("OBJ contains no faces");
  return TriangleMesh(std::move(vertices), std::move(triangles));
}

/// `v` lines then `f` lines, shortest round-trip decimals, 1-based indices.
inline std::string write_obj(const TriangleMesh& mesh) {
  std::string out;
  for (const Vec3& v : mesh.vertices()) {
    out += "v ";
    out += format_double(v[0]);
    out += ' ';
    out += format_double(v[1]);
    out += ' ';
    out += format_double(v[2]);
    out += '\n';
  }
  for (const Triangle& t : mesh.triangles()) {
    out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) +
           ' ' + std::to_string(t[2] + 1) + '\n';
  }
  return out;
}

}  // namespace voxfrac::io
