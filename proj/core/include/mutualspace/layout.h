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

#ifndef MUTUALSPACE_LAYOUT_H_
#define MUTUALSPACE_LAYOUT_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mutualspace/geometry.h"
#include "mutualspace/scene_model.h"

namespace mutualspace {

// World-frame translations of movable objects in one room, keyed by id.
// Objects not listed stay put.
using RoomDelta = std::map<std::string, Vec2, std::less<>>;

// One RoomDelta per room, in scene order.
struct LayoutDelta {
  std::vector<RoomDelta> rooms;

  static LayoutDelta Zero(size_t room_count) { return {std::vector<RoomDelta>(room_count)}; }
  bool IsZero() const;
};

Vec2 TranslationOf(const RoomDelta* delta, std::string_view object_id);

std::vector<OrientedRect> MovedFootprints(const Room& room, const RoomDelta* delta);

// Copy of `room` with every object translated by `delta`.
Room ApplyDelta(const Room& room, const RoomDelta& delta);

// Effort to drag one object: weight times translation length. Throws for a
// nonzero translation of an immovable object.
double Effort(const FurnitureObject& object, Vec2 translation);

// Sum of per-object efforts over all rooms.
double TotalEffort(std::span<const Room> rooms, const LayoutDelta& delta);

}  // namespace mutualspace

#endif  // MUTUALSPACE_LAYOUT_H_
