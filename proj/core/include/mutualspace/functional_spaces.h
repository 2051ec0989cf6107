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

#ifndef MUTUALSPACE_FUNCTIONAL_SPACES_H_
#define MUTUALSPACE_FUNCTIONAL_SPACES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "mutualspace/layout.h"
#include "mutualspace/occupancy_grid.h"
#include "mutualspace/scene_model.h"

namespace mutualspace {

enum class SpaceKind { kStandable, kSittable };

const char* SpaceKindName(SpaceKind kind);
// Parses "standable" / "sittable".
SpaceKind ParseSpaceKind(std::string_view name);

inline constexpr double kDefaultResolution = 0.05;

struct FunctionalSpace {
  std::string room_id;
  SpaceKind kind = SpaceKind::kStandable;
  OccupancyGrid region;
  uint64_t layout_hash = 0;
};

// A room paired with its floor raster at a fixed resolution. Every space of
// the room lives on this lattice.
class RoomRaster {
 public:
  RoomRaster(Room room, double resolution);

  const Room& room() const { return room_; }
  double resolution() const { return resolution_; }
  // Cells whose centers lie inside the room polygon.
  const OccupancyGrid& floor() const { return floor_; }

 private:
  Room room_;
  double resolution_;
  OccupancyGrid floor_;
};

// Room override if present, otherwise `fallback`.
double EffectiveResolution(const Room& room, double fallback);

uint64_t LayoutHash(const Room& room, const RoomDelta* delta);

// Floor minus every standable obstacle at the given footprints (one per
// room object, in order). No collision screening.
OccupancyGrid StandableRegion(const RoomRaster& raster, std::span<const OrientedRect> footprints);

// Sittable part of object `index`: its footprint minus the points whose
// eps-disc stays inside it, minus the points whose (eps + rho)-disc reaches
// the room boundary or another object.
OccupancyGrid ObjectSittableRegion(const RoomRaster& raster,
                                   std::span<const OrientedRect> footprints, size_t index);

// Standable region united with every object's sittable region.
OccupancyGrid SittableRegion(const RoomRaster& raster, std::span<const OrientedRect> footprints);

// Checked entry points. A delta that makes furniture collide or leave the
// room is rejected with ValidationError.
FunctionalSpace StandableSpace(const RoomRaster& raster, const RoomDelta* delta = nullptr);
OccupancyGrid ObjectSittableArea(const RoomRaster& raster, std::string_view object_id,
                                 const RoomDelta* delta = nullptr);
FunctionalSpace RoomSittableSpace(const RoomRaster& raster, const RoomDelta* delta = nullptr);
FunctionalSpace ComputeSpace(const RoomRaster& raster, SpaceKind kind,
                             const RoomDelta* delta = nullptr);

}  // namespace mutualspace

#endif  // MUTUALSPACE_FUNCTIONAL_SPACES_H_
