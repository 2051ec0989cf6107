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

#ifndef MUTUALSPACE_SCENE_MODEL_H_
#define MUTUALSPACE_SCENE_MODEL_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mutualspace/geometry.h"

namespace mutualspace {

// Per-label furniture metadata. `sittable_threshold_eps` is the inward depth
// that can be sat on (0 for non-sittable labels); `clearance_rho` is the
// extra free distance a sittable point needs from walls and other objects.
struct LabelCatalogEntry {
  double sittable_threshold_eps = 0.0;
  double clearance_rho = 0.40;
  double unit_weight = 20.0;
  bool lightweight = false;
  bool movable = true;
  bool standable_obstacle = true;

  friend bool operator==(const LabelCatalogEntry&, const LabelCatalogEntry&) = default;
};

inline constexpr double kDefaultSittableEps = 0.70;

// Slack, in meters, allowed when checking that furniture lies inside its room.
inline constexpr double kContainmentTolerance = 1e-6;

class LabelCatalog {
 public:
  // Built-in defaults: table/chair/sofa/bed sittable, storage and appliances
  // not, small portable items lightweight, rugs walkable.
  static LabelCatalog Default();

  // Entry for `label`, or the default entry when the label is unknown.
  const LabelCatalogEntry& Resolve(std::string_view label) const;

  void Set(const std::string& label, const LabelCatalogEntry& entry);
  void SetDefaultEntry(const LabelCatalogEntry& entry) { default_entry_ = entry; }
  const LabelCatalogEntry& default_entry() const { return default_entry_; }
  const std::map<std::string, LabelCatalogEntry, std::less<>>& entries() const { return entries_; }

  // Applies a JSON object `label -> {eps_m, rho_m, weight, lightweight,
  // movable, standable_obstacle}`. Missing fields keep their current value;
  // the label "default" edits the fallback entry.
  void ApplyOverrides(std::string_view json_text);

  friend bool operator==(const LabelCatalog&, const LabelCatalog&) = default;

 private:
  std::map<std::string, LabelCatalogEntry, std::less<>> entries_;
  LabelCatalogEntry default_entry_;
};

LabelCatalog LoadCatalog(const std::filesystem::path& path,
                         const LabelCatalog& base = LabelCatalog::Default());

struct FurnitureObject {
  std::string id;
  std::string label;
  OrientedRect footprint;
  double eps = 0.0;
  double rho = 0.0;
  double weight = 0.0;
  bool movable = true;
  bool lightweight = false;
  bool standable_obstacle = true;

  bool IsSittable() const { return eps > 0.0; }
};

// Builds an object with catalog attributes resolved for its label.
FurnitureObject MakeObject(std::string id, std::string label, const OrientedRect& footprint,
                           const LabelCatalog& catalog);

struct Room {
  std::string id;
  SimplePolygon boundary;
  std::vector<FurnitureObject> objects;
  std::optional<double> resolution;

  // Index of the object with `object_id`; nullopt when absent.
  std::optional<size_t> IndexOf(std::string_view object_id) const;
};

struct Scene {
  std::vector<Room> rooms;
  LabelCatalog catalog;
};

// Objects whose catalog entry is not lightweight, order preserved.
std::vector<FurnitureObject> FilterLightweight(std::span<const FurnitureObject> objects,
                                               const LabelCatalog& catalog);

// The room and its furniture carried rigidly by `pose`.
Room TransformRoom(const Room& room, const Pose2D& pose);

// Checks unique ids, containment in the room polygon and pairwise
// non-overlap. Throws ValidationError naming the room and object.
void ValidateRoom(const Room& room);

Scene ParseScene(std::string_view json_text,
                 const LabelCatalog& base = LabelCatalog::Default());
Scene LoadScene(const std::filesystem::path& path,
                const LabelCatalog& base = LabelCatalog::Default());

std::string SerializeScene(const Scene& scene);
void SaveScene(const Scene& scene, const std::filesystem::path& path);

}  // namespace mutualspace

#endif  // MUTUALSPACE_SCENE_MODEL_H_
