// Copyright 2026 The MutualSpace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Independent reference implementations for tests. Everything here works
// on continuous geometry or brute force, never on the library's raster
// shortcuts.

#ifndef MUTUALSPACE_TESTS_TESTING_ORACLES_H_
#define MUTUALSPACE_TESTS_TESTING_ORACLES_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "mutualspace/geometry.h"
#include "mutualspace/occupancy_grid.h"
#include "mutualspace/scene_model.h"

namespace mutualspace::testing {

std::filesystem::path FixturePath(std::string_view name);
Scene LoadFixture(std::string_view name);

// Crossing-number point-in-polygon.
bool PointInRing(std::span<const Vec2> ring, Vec2 p);
double DistanceToRing(std::span<const Vec2> ring, Vec2 p);

// Local coordinates of p in the rectangle's frame, from first principles.
Vec2 RectLocal(const OrientedRect& rect, Vec2 p);
bool PointInRect(const OrientedRect& rect, Vec2 p);
// 0 inside.
double DistanceToRect(const OrientedRect& rect, Vec2 p);
// Distance to the rectangle boundary for interior points, 0 outside.
double DepthInRect(const OrientedRect& rect, Vec2 p);

// Continuous standable / sittable predicates for one room layout.
bool OracleStandable(const Room& room, std::span<const OrientedRect> footprints, Vec2 p);
bool OracleObjectSittable(const Room& room, std::span<const OrientedRect> footprints,
                          size_t index, Vec2 p);
bool OracleSittable(const Room& room, std::span<const OrientedRect> footprints, Vec2 p);

// Area of {p in box : pred(p)} by midpoint sampling at `step`.
double SampledArea(const Box& box, double step, const std::function<bool(Vec2)>& pred);

// Overlap of open interiors by dense sampling of `a` (n x n points).
bool SampledRectOverlap(const OrientedRect& a, const OrientedRect& b, int n = 100);

// Brute-force morphology on cell centers, same conventions as the library
// (outside the grid is false, radius inclusive).
OccupancyGrid BruteErode(const OccupancyGrid& grid, double radius);
OccupancyGrid BruteDilate(const OccupancyGrid& grid, double radius);

// Smallest free distance from a face of footprint `index` along its outward
// normal, marched at fine steps from `samples` points on the face.
double MarchedClearance(const Room& room, std::span<const OrientedRect> footprints,
                        size_t index, int face, int samples = 200, double step = 1e-3);

// Random convex room (vertices on an ellipse) with up to `max_objects`
// non-overlapping furniture rectangles drawn from common labels.
Room RandomRoom(std::mt19937_64& rng, const std::string& id, int max_objects,
                const LabelCatalog& catalog = LabelCatalog::Default());

// Random axis-aligned rectangular room with a few rectangles, for search
// comparisons where the exhaustive grid must stay small.
Room RandomRectRoom(std::mt19937_64& rng, const std::string& id, double min_side,
                    double max_side, int max_objects,
                    const LabelCatalog& catalog = LabelCatalog::Default());

// Composite Simpson integral of f on [a, b] with n (even) panels.
double Simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace mutualspace::testing

#endif  // MUTUALSPACE_TESTS_TESTING_ORACLES_H_
