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

// Mesh byte fixtures shared by the unit and acceptance suites.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "voxfrac/io/bytes.hpp"
#include "voxfrac/mesh.hpp"

namespace voxfrac::fixtures {

using Facet = std::array<Vec3, 3>;

inline std::string binary_stl(const std::vector<Facet>& facets,
                              std::uint32_t declared) {
  std::string out(80, ' ');
  io::le::put_u32(out, declared);
  for (const Facet& f : facets) {
    for (int k = 0; k < 3; ++k) io::le::put_f32(out, 0.0f);
    for (const Vec3& v : f)
      for (double c : v) io::le::put_f32(out, static_cast<float>(c));
    out += std::string(2, '\0');
  }
  return out;
}

inline std::string binary_stl(const std::vector<Facet>& facets) {
  return binary_stl(facets, static_cast<std::uint32_t>(facets.size()));
}

inline const Facet kUnitFacet = {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}};

inline const std::string kAsciiFacet =
    "solid demo\n"
    "  facet normal 0 0 1\n"
    "    outer loop\n"
    "      vertex 0 0 0\n"
    "      vertex 1 0 0\n"
    "      vertex 0 1 0\n"
    "    endloop\n"
    "  endfacet\n"
    "endsolid demo\n";

struct Malformed {
  const char* name;
  std::string bytes;
};

inline std::vector<Malformed> malformed_obj() {
  return {
      {"face index past vertex count", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n"},
      {"face index zero", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n"},
      {"negative index too far back", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf -1 -2 -4\n"},
      {"face before vertices", "f 1 2 3\nv 0 0 0\nv 1 0 0\nv 0 1 0\n"},
      {"face with two vertices", "v 0 0 0\nv 1 0 0\nf 1 2\n"},
      {"vertex with two coordinates", "v 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"},
      {"non-numeric coordinate", "v 0 0 x\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"},
      {"non-numeric index", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 two 3\n"},
      {"infinite coordinate", "v 0 0 inf\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"},
      {"nan coordinate", "v nan 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"},
      {"repeated face index", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 1 2\n"},
      {"no faces", "v 0 0 0\nv 1 0 0\nv 0 1 0\n"},
      {"empty file", ""},
      {"index overflow", "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 99999999999999999999\n"},
      {"binary garbage", std::string("\x00\xff\x13v f\x01", 7)},
  };
}

inline std::vector<Malformed> malformed_stl() {
  // First vertex x of the only facet replaced by NaN.
  std::string nan_facet = binary_stl({kUnitFacet});
  std::string nan_bytes;
  io::le::put_f32(nan_bytes, std::numeric_limits<float>::quiet_NaN());
  nan_facet.replace(84 + 12, 4, nan_bytes);
  return {
      {"empty stream", ""},
      {"short header", std::string(40, 'x')},
      {"count claims 2, has 1", binary_stl({kUnitFacet}, 2)},
      {"count claims 1, has 2", binary_stl({kUnitFacet, kUnitFacet}, 1)},
      {"huge count", binary_stl({kUnitFacet}, 0xffffffffu)},
      {"zero triangles", binary_stl({})},
      {"one trailing byte", binary_stl({kUnitFacet}) + "x"},
      {"nan coordinate", nan_facet},
      {"ascii missing endsolid",
       "solid a\nfacet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\n"
       "vertex 0 1 0\nendloop\nendfacet\n"},
      {"ascii two vertices",
       "solid a\nfacet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\n"
       "endloop\nendfacet\nendsolid a\n"},
      {"ascii bad number",
       "solid a\nfacet normal 0 0 1\nouter loop\nvertex 0 0 zero\n"
       "vertex 1 0 0\nvertex 0 1 0\nendloop\nendfacet\nendsolid a\n"},
      {"ascii missing normal",
       "solid a\nfacet outer loop\nvertex 0 0 0\nvertex 1 0 0\nvertex 0 1 0\n"
       "endloop\nendfacet\nendsolid a\n"},
      {"ascii no facets", "solid a\nendsolid a\n"},
      {"ascii trailing junk", kAsciiFacet + "facet\n"},
      {"ascii truncated mid-vertex",
       "solid a\nfacet normal 0 0 1\nouter loop\nvertex 0 0"},
  };
}

}  // namespace voxfrac::fixtures
