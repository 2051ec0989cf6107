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

#include "mutualspace/functional_spaces.h"

#include <bit>
#include <cmath>

#include "mutualspace/errors.h"
#include "mutualspace/scene_graph.h"

namespace mutualspace {
namespace {

void CheckLayout(const RoomRaster& raster, const RoomDelta* delta) {
  if (delta == nullptr) return;
  if (CountLayoutViolations(raster.room(), *delta) > 0) {
    throw ValidationError("room '" + raster.room().id +
                          "': layout delta makes furniture collide or leave the room");
  }
}

void CheckFootprints(const RoomRaster& raster, std::span<const OrientedRect> footprints) {
  if (footprints.size() != raster.room().objects.size()) {
    throw ValidationError("room '" + raster.room().id + "': expected one footprint per object");
  }
}

}  // namespace

const char* SpaceKindName(SpaceKind kind) {
  return kind == SpaceKind::kStandable ? "standable" : "sittable";
}

SpaceKind ParseSpaceKind(std::string_view name) {
  if (name == "standable") return SpaceKind::kStandable;
  if (name == "sittable") return SpaceKind::kSittable;
  throw ValidationError("unknown space kind '" + std::string(name) +
                        "' (expected standable or sittable)");
}

RoomRaster::RoomRaster(Room room, double resolution)
    : room_(std::move(room)),
      resolution_(resolution),
      floor_(Rasterize(room_.boundary, {}, resolution)) {}

double EffectiveResolution(const Room& room, double fallback) {
  return room.resolution.value_or(fallback);
}

uint64_t LayoutHash(const Room& room, const RoomDelta* delta) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t value) {
    for (int b = 0; b < 8; ++b) {
      h ^= (value >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const FurnitureObject& o : room.objects) {
    for (char c : o.id) mix(static_cast<unsigned char>(c));
    const Vec2 c = o.footprint.center() + TranslationOf(delta, o.id);
    mix(std::bit_cast<uint64_t>(c.x));
    mix(std::bit_cast<uint64_t>(c.y));
    mix(std::bit_cast<uint64_t>(o.footprint.rotation()));
  }
  return h;
}

OccupancyGrid StandableRegion(const RoomRaster& raster, std::span<const OrientedRect> footprints) {
  CheckFootprints(raster, footprints);
  OccupancyGrid region = raster.floor();
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (raster.room().objects[k].standable_obstacle) region.FillRect(footprints[k], false);
  }
  return region;
}

OccupancyGrid ObjectSittableRegion(const RoomRaster& raster,
                                   std::span<const OrientedRect> footprints, size_t index) {
  CheckFootprints(raster, footprints);
  const FurnitureObject& object = raster.room().objects.at(index);
  const OccupancyGrid& floor = raster.floor();
  OccupancyGrid result = OccupancyGrid::EmptyLike(floor);
  if (!object.IsSittable()) return result;

  const double res = floor.resolution();
  const double reach = object.eps + object.rho;
  // Window on the room lattice around the footprint, wide enough to see
  // every blocker within `reach`.
  const Box fb = footprints[index].Bounds();
  const double margin = reach + 2.0 * res;
  const Vec2 o = floor.origin();
  const int i0 = static_cast<int>(std::floor((fb.min.x - margin - o.x) / res));
  const int j0 = static_cast<int>(std::floor((fb.min.y - margin - o.y) / res));
  const int i1 = static_cast<int>(std::ceil((fb.max.x + margin - o.x) / res));
  const int j1 = static_cast<int>(std::ceil((fb.max.y + margin - o.y) / res));
  const int w = i1 - i0 + 1;
  const int h = j1 - j0 + 1;
  const Vec2 window_origin{o.x + i0 * res, o.y + j0 * res};

  OccupancyGrid body(window_origin, res, w, h);
  body.FillRect(footprints[index], true);
  OccupancyGrid blockers(window_origin, res, w, h);
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const int fi = i + i0;
      const int fj = j + j0;
      const bool on_floor = floor.InBounds(fi, fj) && floor.at(fi, fj);
      if (!on_floor) {
        blockers.set(i, j, true);
        body.set(i, j, false);
      }
    }
  }
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (k != index) blockers.FillRect(footprints[k], true);
  }

  // Points whose eps-disc fits inside the object are not sittable.
  const OccupancyGrid interior = Erode(body, object.eps);
  // Blockers are represented by cell centers, which sit up to half a cell
  // behind the true boundary.
  const OccupancyGrid crowded = Dilate(blockers, reach + 0.5 * res);

  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (body.at(i, j) && !interior.at(i, j) && !crowded.at(i, j)) {
        result.set(i + i0, j + j0, true);
      }
    }
  }
  return result;
}

OccupancyGrid SittableRegion(const RoomRaster& raster, std::span<const OrientedRect> footprints) {
  OccupancyGrid region = StandableRegion(raster, footprints);
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (raster.room().objects[k].IsSittable()) {
      region |= ObjectSittableRegion(raster, footprints, k);
    }
  }
  return region;
}

FunctionalSpace StandableSpace(const RoomRaster& raster, const RoomDelta* delta) {
  CheckLayout(raster, delta);
  const auto footprints = MovedFootprints(raster.room(), delta);
  return {raster.room().id, SpaceKind::kStandable, StandableRegion(raster, footprints),
          LayoutHash(raster.room(), delta)};
}

OccupancyGrid ObjectSittableArea(const RoomRaster& raster, std::string_view object_id,
                                 const RoomDelta* delta) {
  CheckLayout(raster, delta);
  const auto index = raster.room().IndexOf(object_id);
  if (!index) {
    throw ValidationError("room '" + raster.room().id + "' has no object '" +
                          std::string(object_id) + "'");
  }
  const auto footprints = MovedFootprints(raster.room(), delta);
  return ObjectSittableRegion(raster, footprints, *index);
}

FunctionalSpace RoomSittableSpace(const RoomRaster& raster, const RoomDelta* delta) {
  CheckLayout(raster, delta);
  const auto footprints = MovedFootprints(raster.room(), delta);
  return {raster.room().id, SpaceKind::kSittable, SittableRegion(raster, footprints),
          LayoutHash(raster.room(), delta)};
}

FunctionalSpace ComputeSpace(const RoomRaster& raster, SpaceKind kind, const RoomDelta* delta) {
  return kind == SpaceKind::kStandable ? StandableSpace(raster, delta)
                                       : RoomSittableSpace(raster, delta);
}

}  // namespace mutualspace
