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

#ifndef MUTUALSPACE_SCENE_GRAPH_H_
#define MUTUALSPACE_SCENE_GRAPH_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mutualspace/geometry.h"
#include "mutualspace/layout.h"
#include "mutualspace/scene_model.h"

namespace mutualspace {

// Faces of an object's bounding box, in its local (rotated) frame.
enum class Face { kXMax = 0, kXMin = 1, kYMax = 2, kYMin = 3 };
inline constexpr std::array<Face, 4> kAllFaces = {Face::kXMax, Face::kXMin, Face::kYMax,
                                                  Face::kYMin};
const char* FaceName(Face face);

inline constexpr int kRoomBoundary = -1;

// Free distance in front of one face and what stops it: an object index or
// kRoomBoundary.
struct FaceClearance {
  Face face = Face::kXMax;
  int blocker = kRoomBoundary;
  double distance = 0.0;
};

struct FaceRef {
  size_t object = 0;
  Face face = Face::kXMax;
  friend bool operator==(FaceRef, FaceRef) = default;
};

struct SceneGraphNode {
  std::string object_id;
  bool movable = false;
  Vec2 axis_u;
  Vec2 axis_v;
  std::array<FaceClearance, 4> faces;
  // Back links: faces of other objects whose nearest blocker is this node.
  std::vector<FaceRef> referenced_by;

  const FaceClearance& clearance(Face face) const { return faces[static_cast<int>(face)]; }
};

class SceneGraph {
 public:
  SceneGraph() = default;
  explicit SceneGraph(std::vector<SceneGraphNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<SceneGraphNode>& nodes() const { return nodes_; }
  const SceneGraphNode& node(size_t index) const { return nodes_.at(index); }
  size_t size() const { return nodes_.size(); }
  // Throws ValidationError for an unknown id.
  size_t IndexOf(std::string_view object_id) const;

 private:
  std::vector<SceneGraphNode> nodes_;
};

// Per-face clearances of every object: rays cast along each face's outward
// normal from samples spaced at most `sample_spacing` apart, plus the exact
// distance of any obstacle vertex inside the face's swept band.
SceneGraph BuildSceneGraph(const Room& room, double sample_spacing = 0.05);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double Length() const { return hi - lo; }
  bool Contains(double x) const { return lo <= x && x <= hi; }
};

// Translation range along the object's local axes; world translation is
// u * axis_u + v * axis_v.
struct MovementBounds {
  Interval u;
  Interval v;
  Vec2 axis_u;
  Vec2 axis_v;

  Vec2 ToWorld(double du, double dv) const { return du * axis_u + dv * axis_v; }
};

MovementBounds GetMovementBounds(const SceneGraph& graph, std::string_view object_id);

inline constexpr double kDefaultPenaltyBase = 1e6;

// penalty_base times (overlapping object pairs + objects leaving the room)
// for the layout moved by `delta`.
double CollisionPenalty(const Room& room, const RoomDelta& delta,
                        double penalty_base = kDefaultPenaltyBase);
// Number of violations counted by CollisionPenalty.
int CountLayoutViolations(const Room& room, const RoomDelta& delta);

}  // namespace mutualspace

#endif  // MUTUALSPACE_SCENE_GRAPH_H_
