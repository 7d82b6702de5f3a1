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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "voxfrac/census.hpp"
#include "voxfrac/dimension.hpp"
#include "voxfrac/error.hpp"
#include "voxfrac/io/text.hpp"

namespace voxfrac::io {

using Json = nlohmann::ordered_json;

inline Json report_json(const DimensionFit& fit) {
  Json scales = Json::array();
  for (const ScaleCount& s : fit.scales_used) {
    scales.push_back(
        {{"box_side", s.box_side}, {"epsilon", s.epsilon}, {"count", s.count}});
  }
  return Json{{"dimension", fit.dimension},
              {"intercept", fit.intercept},
              {"r_squared", fit.r_squared},
              {"scales_used", std::move(scales)},
              {"residuals", fit.residuals}};
}

/// `intercept` is the natural log of the power-law prefactor.
inline Json report_json(const PowerLawFit& fit) {
  Json points = Json::array();
  for (const CensusPoint& p : fit.points) {
    points.push_back({{"size", p.size}, {"count", p.count}});
  }
  return Json{{"delta", fit.delta},
              {"intercept", fit.log_prefactor},
              {"r_squared", fit.r_squared},
              {"scales_used", std::move(points)},
              {"residuals", fit.residuals}};
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

template <typename Fit>
std::string write_report(const Fit& fit) {
  return dump_report(report_json(fit));
}

inline std::string write_scale_csv(std::span<const ScaleCount> scales) {
  std::string out = "box_side,epsilon,count\n";
  for (const ScaleCount& s : scales) {
    out += std::to_string(s.box_side) + ',' + format_double(s.epsilon) + ',' +
           std::to_string(s.count) + '\n';
  }
  return out;
}

/// Census table with a mandatory `size,count` header. Blank lines and lines
/// starting with '#' are skipped; errors carry the 1-based line number.
inline std::vector<CensusPoint> read_census_csv(std::string_view text) {
  std::vector<CensusPoint> points;
  bool header_seen = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos ||
        line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected exactly 2 comma-separated fields");
    }
    const std::string_view first = trim(line.substr(0, comma));
    const std::string_view second = trim(line.substr(comma + 1));
    if (!header_seen) {
      if (first != "size" || second != "count") {
        throw ParseError(line_no, "missing 'size,count' header");
      }
      header_seen = true;
      return;
    }
    const auto size = parse_double(first);
    const auto count = parse_double(second);
    if (!size || !count) throw ParseError(line_no, "non-numeric field");
    if (!(*size > 0.0)) throw ParseError(line_no, "size must be positive");
    if (!(*count > 0.0)) throw ParseError(line_no, "count must be positive");
    points.push_back(CensusPoint{*size, *count});
  });
  if (!header_seen) throw ParseError(1, "missing 'size,count' header");
  return points;
}

}  // namespace voxfrac::io
