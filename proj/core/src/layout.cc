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

#include "mutualspace/layout.h"

#include "mutualspace/errors.h"

namespace mutualspace {

bool LayoutDelta::IsZero() const {
  for (const RoomDelta& room : rooms) {
    for (const auto& [id, t] : room) {
      if (t.x != 0.0 || t.y != 0.0) return false;
    }
  }
  return true;
}

Vec2 TranslationOf(const RoomDelta* delta, std::string_view object_id) {
  if (delta == nullptr) return {};
  const auto it = delta->find(object_id);
  return it == delta->end() ? Vec2{} : it->second;
}

std::vector<OrientedRect> MovedFootprints(const Room& room, const RoomDelta* delta) {
  std::vector<OrientedRect> out;
  out.reserve(room.objects.size());
  for (const FurnitureObject& o : room.objects) {
    out.push_back(o.footprint.Translated(TranslationOf(delta, o.id)));
  }
  return out;
}

Room ApplyDelta(const Room& room, const RoomDelta& delta) {
  Room moved = room;
  for (FurnitureObject& o : moved.objects) {
    o.footprint = o.footprint.Translated(TranslationOf(&delta, o.id));
  }
  return moved;
}

double Effort(const FurnitureObject& object, Vec2 translation) {
  const double distance = Norm(translation);
  if (distance == 0.0) return 0.0;
  if (!object.movable) {
    throw ValidationError("object '" + object.id + "' is immovable but has a translation");
  }
  return object.weight * distance;
}

double TotalEffort(std::span<const Room> rooms, const LayoutDelta& delta) {
  if (delta.rooms.size() > rooms.size()) {
    throw ValidationError("layout delta lists more rooms than the scene has");
  }
  double total = 0.0;
  for (size_t r = 0; r < delta.rooms.size(); ++r) {
    for (const auto& [id, t] : delta.rooms[r]) {
      const auto index = rooms[r].IndexOf(id);
      if (!index) {
        throw ValidationError("room '" + rooms[r].id + "' has no object '" + id + "'");
      }
      total += Effort(rooms[r].objects[*index], t);
    }
  }
  return total;
}

}  // namespace mutualspace
