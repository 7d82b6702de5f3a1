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

// voxfrac: generate stacked solids, voxelize meshes, measure box-counting
// dimension and fit size-frequency power laws.
//
// Exit codes: 0 ok, 1 usage, 2 data/format error, 3 numeric failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voxfrac/voxfrac.hpp"

namespace {

namespace fs = std::filesystem;
using namespace voxfrac;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data-side I/O failure (missing input, unwritable output).
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string extension(const std::string& path) {
  std::string ext = fs::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  return ext;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoFailure("cannot write '" + path + "'");
}

void check_grid_output(const std::string& path) {
  const std::string ext = extension(path);
  if (ext != ".voxl" && ext != ".obj") {
    throw UsageError("--out must end in .voxl or .obj: " + path);
  }
}

void write_grid(const std::string& path, const VoxelGrid& grid) {
  if (extension(path) == ".obj") {
    write_file(path, io::write_obj(surface_mesh(grid)));
  } else {
    write_file(path, io::write_voxel(grid));
  }
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::string shape;
  double x0 = 0.0;
  double y0 = 0.0;
  std::string rh = "2/3";
  std::string rv = "3/2";
  std::size_t levels = 0;
  std::size_t resolution = 0;
  std::string out;
};

int run_generate(const GenerateOptions& o) {
  StackSpec spec;
  const auto shape = parse_base_shape(o.shape);
  if (!shape) throw UsageError("--shape must be square, circle or sphere");
  spec.base_shape = *shape;
  spec.x0 = o.x0;
  spec.y0 = o.y0;
  const auto rh = parse_ratio(o.rh);
  const auto rv = parse_ratio(o.rv);
  if (!rh) throw UsageError("--rh must be a number or a fraction a/b");
  if (!rv) throw UsageError("--rv must be a number or a fraction a/b");
  spec.r_h = *rh;
  spec.r_v = *rv;
  spec.levels = o.levels;
  check_grid_output(o.out);
  if (o.resolution < 1) throw UsageError("--resolution must be >= 1");
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  const LevelSequence seq = level_sequence(spec);
  const StackRaster raster = rasterize_stack(spec, o.resolution);

  std::printf("level,width,height,width_voxels,thickness_voxels\n");
  for (const Level& lv : seq.entries) {
    std::string wv = "-";
    std::string tv = "-";
    for (const LevelVoxels& r : raster.levels) {
      if (r.level == lv.level) {
        wv = std::to_string(r.width);
        tv = std::to_string(r.thickness);
      }
    }
    std::printf("%zu,%s,%s,%s,%s\n", lv.level,
                io::format_double(lv.width).c_str(),
                io::format_double(lv.height).c_str(), wv.c_str(), tv.c_str());
  }
  if (seq.entries.size() >= 3) {
    std::printf("ratio_deviation: %s\n",
                io::format_double(ratio_check(seq)).c_str());
  } else {
    std::printf("ratio_deviation: n/a (needs 3 levels)\n");
  }
  if (raster.truncated_at) {
    std::fprintf(stderr,
                 "warning: level %zu rounds below one voxel; stack "
                 "truncated to %zu levels\n",
                 *raster.truncated_at, raster.levels.size());
  }
  std::printf("occupied: %zu\n", raster.grid.occupied_count());
  write_grid(o.out, raster.grid);
  return kExitOk;
}

// --------------------------------------------------------------- dimension

struct DimensionOptions {
  std::string in;
  std::optional<std::size_t> resolution;
  bool solid = false;
  std::size_t discard_low = 0;
  std::size_t discard_high = 0;
  std::vector<std::size_t> sides;
  std::string report;
  std::string csv;
};

VoxelGrid load_grid(const DimensionOptions& o) {
  const std::string ext = extension(o.in);
  if (ext == ".voxl") {
    VoxelGrid grid = io::read_voxel(read_file(o.in));
    return o.solid ? solid_fill(grid) : grid;
  }
  if (ext != ".obj" && ext != ".stl") {
    throw UsageError("--in must end in .obj, .stl or .voxl: " + o.in);
  }
  if (!o.resolution) throw UsageError("mesh input requires --resolution");
  const std::string bytes = read_file(o.in);
  const TriangleMesh mesh =
      ext == ".obj" ? io::parse_obj(bytes) : io::parse_stl(bytes);
  if (!is_watertight(mesh)) {
    std::fprintf(stderr,
                 "warning: '%s' is not a closed manifold; --solid fills only "
                 "cavities enclosed at this resolution\n",
                 o.in.c_str());
  }
  VoxelGrid grid = voxelize_surface(mesh, *o.resolution);
  return o.solid ? solid_fill(grid) : grid;
}

int run_dimension(const DimensionOptions& o) {
  if (o.resolution && *o.resolution < 2) {
    throw UsageError("--resolution must be >= 2");
  }
  const VoxelGrid grid = load_grid(o);
  std::vector<ScaleCount> scales;
  if (o.sides.empty()) {
    scales = cube_count_dyadic(grid);
  } else {
    for (std::size_t s : o.sides) scales.push_back(box_count(grid, s));
  }
  const DimensionFit fit = fit_dimension(scales, o.discard_low, o.discard_high);

  io::Json report = io::report_json(fit);
  report["scales"] = o.sides.empty() ? "dyadic" : "custom";
  const Dims& d = grid.dims();
  report["grid"] = {{"dims", {d.nx, d.ny, d.nz}},
                    {"voxel_size", grid.voxel_size()},
                    {"occupied", grid.occupied_count()}};
  write_file(o.report, io::dump_report(report));
  if (!o.csv.empty()) write_file(o.csv, io::write_scale_csv(scales));
  std::printf("dimension: %s\nr_squared: %s\nscales: %zu\n",
              io::format_double(fit.dimension).c_str(),
              io::format_double(fit.r_squared).c_str(),
              fit.scales_used.size());
  return kExitOk;
}

// ------------------------------------------------------------------ census

int run_census(const std::string& in, const std::string& report_path) {
  const auto points = io::read_census_csv(read_file(in));
  const PowerLawFit fit = fit_power_law(points);
  write_file(report_path, io::write_report(fit));
  std::printf("delta: %s\nr_squared: %s\n",
              io::format_double(fit.delta).c_str(),
              io::format_double(fit.r_squared).c_str());
  return kExitOk;
}

// --------------------------------------------------------------- reference

int run_reference(const std::string& kind_name, std::size_t size,
                  const std::string& out) {
  const auto kind = parse_reference_kind(kind_name);
  if (!kind) throw UsageError("--kind must be menger, cube or slab");
  check_grid_output(out);
  VoxelGrid grid = [&] {
    try {
      return gen_reference(*kind, size);
    } catch (const ResourceLimit& e) {
      throw UsageError(e.what());
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  write_grid(out, grid);
  std::printf("occupied: %zu\n", grid.occupied_count());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voxfrac: box-counting dimension and stacked-solid generator"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand(
      "generate", "rasterize a level stack (width x r_h, height x r_v)");
  generate->add_option("--shape", gen.shape, "square | circle | sphere")
      ->required();
  generate->add_option("--x0", gen.x0, "base level width")->required();
  generate->add_option("--y0", gen.y0, "base level height")->required();
  generate->add_option("--rh", gen.rh, "horizontal factor (default 2/3)");
  generate->add_option("--rv", gen.rv, "vertical factor (default 3/2)");
  generate->add_option("--levels", gen.levels, "number of levels")->required();
  generate->add_option("--resolution", gen.resolution, "voxels across x0")
      ->required();
  generate->add_option("--out", gen.out, "output .voxl or .obj")->required();

  DimensionOptions dim;
  auto* dimension =
      app.add_subcommand("dimension", "box-counting dimension of a solid");
  dimension->add_option("--in", dim.in, "input .obj, .stl or .voxl")
      ->required();
  dimension->add_option("--resolution", dim.resolution,
                        "voxels along the longest axis (mesh input)");
  dimension->add_flag("--solid", dim.solid, "fill enclosed cavities");
  dimension->add_option("--discard-low", dim.discard_low,
                        "drop this many finest scales");
  dimension->add_option("--discard-high", dim.discard_high,
                        "drop this many coarsest scales");
  dimension
      ->add_option("--sides", dim.sides,
                   "comma-separated box sides in voxels (default: dyadic)")
      ->delimiter(',');
  dimension->add_option("--report", dim.report, "output JSON report")
      ->required();
  dimension->add_option("--csv", dim.csv, "output scale table CSV");

  std::string census_in;
  std::string census_report;
  auto* census =
      app.add_subcommand("census", "fit N(s) ~ s^delta to a size,count CSV");
  census->add_option("--in", census_in, "input CSV")->required();
  census->add_option("--report", census_report, "output JSON report")
      ->required();

  std::string ref_kind;
  std::size_t ref_size = 0;
  std::string ref_out;
  auto* reference =
      app.add_subcommand("reference", "write an exact reference set");
  reference->add_option("--kind", ref_kind, "menger | cube | slab")
      ->required();
  reference->add_option("--size", ref_size, "menger depth or edge length")
      ->required();
  reference->add_option("--out", ref_out, "output .voxl or .obj")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (dimension->parsed()) return run_dimension(dim);
    if (census->parsed()) return run_census(census_in, census_report);
    if (reference->parsed()) return run_reference(ref_kind, ref_size, ref_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const InsufficientData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const EmptySet& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
