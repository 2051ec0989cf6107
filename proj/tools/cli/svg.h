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


#ifndef MUTUALSPACE_CLI_SVG_H_
#define MUTUALSPACE_CLI_SVG_H_

#include <span>
#include <string>
#include <vector>

#include "mutualspace/geometry.h"
#include "mutualspace/occupancy_grid.h"
#include "mutualspace/scene_model.h"

namespace mutualspace::cli {

struct Palette {
  std::string non_standable = "#D9534F";
  std::string standable = "#5CB85C";
  std::string sittable = "#F0AD4E";
  std::string mutual = "#428BCA";

  friend bool operator==(const Palette&, const Palette&) = default;
};

// One room drawn in its own frame. Layers, bottom to top: non-standable
// floor, standable, sittable, mutual. Regions live on the room lattice
// except `mutual`, which is on the reference lattice and is pulled back
// through `pose` (room frame -> reference frame).
struct RoomPanel {
  const Room* room = nullptr;
  const OccupancyGrid* floor = nullptr;
  const OccupancyGrid* standable = nullptr;
  const OccupancyGrid* sittable = nullptr;
  const OccupancyGrid* mutual = nullptr;
  Pose2D pose;
  // Input layout footprints; moved objects get an arrow to their new center.
  std::vector<OrientedRect> original_footprints;
  std::vector<OrientedRect> footprints;
  std::string caption;
};

std::string RenderPanels(std::span<const RoomPanel> panels, const Palette& palette);

// Every room outline placed by its pose in the reference frame with the
// mutual region on top; `mutual_frame` maps the region's lattice into the
// reference frame.
std::string RenderAlignment(std::span<const Room> rooms, std::span<const Pose2D> poses,
                            const OccupancyGrid& mutual, const Pose2D& mutual_frame,
                            const Palette& palette);

struct ScatterPoint {
  double effort = 0.0;
  double area = 0.0;
};

// Effort on x, mutual area on y.
std::string RenderParetoScatter(std::span<const ScatterPoint> points, const Palette& palette);

}  // namespace mutualspace::cli

#endif  // MUTUALSPACE_CLI_SVG_H_
