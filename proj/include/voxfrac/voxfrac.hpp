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

#include "voxfrac/census.hpp"
#include "voxfrac/dimension.hpp"
#include "voxfrac/error.hpp"
#include "voxfrac/generator.hpp"
#include "voxfrac/grid.hpp"
#include "voxfrac/io/obj.hpp"
#include "voxfrac/io/report.hpp"
#include "voxfrac/io/stl.hpp"
#include "voxfrac/io/voxel_file.hpp"
#include "voxfrac/mesh.hpp"
#include "voxfrac/reference.hpp"
#include "voxfrac/regression.hpp"
#include "voxfrac/tribox.hpp"
#include "voxfrac/voxelize.hpp"
