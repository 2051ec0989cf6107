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

#include "mutualspace/scene_graph.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mutualspace/errors.h"

namespace mutualspace {
namespace {

struct FaceFrame {
  Vec2 normal;     // outward, world frame
  Vec2 tangent;    // along the face, world frame
  Vec2 center;     // world frame
  double half_length;
  double half_thickness;  // object extent along the normal
};

FaceFrame MakeFaceFrame(const OrientedRect& rect, Face face) {
  const Vec2 u = rect.AxisU();
  const Vec2 v = rect.AxisV();
  const double hu = 0.5 * rect.width();
  const double hv = 0.5 * rect.depth();
  switch (face) {
    case Face::kXMax:
      return {u, v, rect.center() + hu * u, hv, hu};
    case Face::kXMin:
      return {-1.0 * u, v, rect.center() - hu * u, hv, hu};
    case Face::kYMax:
      return {v, u, rect.center() + hv * v, hu, hv};
    case Face::kYMin:
      return {-1.0 * v, u, rect.center() - hv * v, hu, hv};
  }
  return {};
}

struct Hit {
  double distance = std::numeric_limits<double>::infinity();
  int blocker = kRoomBoundary;

  void Offer(double d, int who) {
    if (d < distance) {
      distance = d;
      blocker = who;
    }
  }
};

Hit CastFace(const Room& room, size_t self, Face face, double spacing) {
  const FaceFrame f = MakeFaceFrame(room.objects[self].footprint, face);
  const double length = 2.0 * f.half_length;
  const int segments = std::max(1, static_cast<int>(std::ceil(length / spacing - 1e-9)));
  Hit hit;
  for (int s = 0; s <= segments; ++s) {
    const double along = -f.half_length + length * s / segments;
    const Vec2 origin = f.center + along * f.tangent;
    for (size_t k = 0; k < room.objects.size(); ++k) {
      if (k == self) continue;
      if (auto t = RayHitRect(origin, f.normal, room.objects[k].footprint)) {
        hit.Offer(*t, static_cast<int>(k));
      }
    }
    for (size_t e = 0; e < room.boundary.size(); ++e) {
      if (auto t = RayHitSegment(origin, f.normal, room.boundary.vertex(e),
                                 room.boundary.vertex(e + 1))) {
        hit.Offer(*t, kRoomBoundary);
      }
    }
  }
  // Vertices poking into the swept band between samples.
  auto offer_vertex = [&](Vec2 w, int who) {
    const Vec2 rel = w - f.center;
    const double ahead = Dot(rel, f.normal);
    const double lateral = Dot(rel, f.tangent);
    if (ahead >= -1e-9 && std::abs(lateral) < f.half_length - 1e-9) {
      hit.Offer(std::max(ahead, 0.0), who);
    }
  };
  for (size_t k = 0; k < room.objects.size(); ++k) {
    if (k == self) continue;
    for (const Vec2& c : room.objects[k].footprint.Corners()) offer_vertex(c, static_cast<int>(k));
  }
  for (const Vec2& v : room.boundary.vertices()) offer_vertex(v, kRoomBoundary);
  if (!std::isfinite(hit.distance)) hit.distance = 0.0;
  return hit;
}

}  // namespace

const char* FaceName(Face face) {
  switch (face) {
    case Face::kXMax:
      return "x_max";
    case Face::kXMin:
      return "x_min";
    case Face::kYMax:
      return "y_max";
    case Face::kYMin:
      return "y_min";
  }
  return "?";
}

size_t SceneGraph::IndexOf(std::string_view object_id) const {
  for (size_t k = 0; k < nodes_.size(); ++k) {
    if (nodes_[k].object_id == object_id) return k;
  }
  throw ValidationError("scene graph has no object '" + std::string(object_id) + "'");
}

SceneGraph BuildSceneGraph(const Room& room, double sample_spacing) {
  if (!(sample_spacing > 0.0)) throw ValidationError("sample spacing must be positive");
  std::vector<SceneGraphNode> nodes(room.objects.size());
  for (size_t k = 0; k < room.objects.size(); ++k) {
    const FurnitureObject& o = room.objects[k];
    nodes[k].object_id = o.id;
    nodes[k].movable = o.movable;
    nodes[k].axis_u = o.footprint.AxisU();
    nodes[k].axis_v = o.footprint.AxisV();
    for (Face face : kAllFaces) {
      const Hit hit = CastFace(room, k, face, sample_spacing);
      nodes[k].faces[static_cast<int>(face)] = {face, hit.blocker, hit.distance};
    }
  }
  for (size_t k = 0; k < nodes.size(); ++k) {
    for (const FaceClearance& c : nodes[k].faces) {
      if (c.blocker != kRoomBoundary) {
        nodes[static_cast<size_t>(c.blocker)].referenced_by.push_back({k, c.face});
      }
    }
  }
  return SceneGraph(std::move(nodes));
}

MovementBounds GetMovementBounds(const SceneGraph& graph, std::string_view object_id) {
  const SceneGraphNode& node = graph.node(graph.IndexOf(object_id));
  MovementBounds bounds{{}, {}, node.axis_u, node.axis_v};
  if (!node.movable) return bounds;
  bounds.u = {-node.clearance(Face::kXMin).distance, node.clearance(Face::kXMax).distance};
  bounds.v = {-node.clearance(Face::kYMin).distance, node.clearance(Face::kYMax).distance};
  return bounds;
}

int CountLayoutViolations(const Room& room, const RoomDelta& delta) {
  const std::vector<OrientedRect> moved = MovedFootprints(room, &delta);
  int violations = 0;
  for (size_t a = 0; a < moved.size(); ++a) {
    if (!RectInsidePolygon(moved[a], room.boundary, kContainmentTolerance)) ++violations;
    for (size_t b = a + 1; b < moved.size(); ++b) {
      if (RectOverlap(moved[a], moved[b])) ++violations;
    }
  }
  return violations;
}

double CollisionPenalty(const Room& room, const RoomDelta& delta, double penalty_base) {
  return penalty_base * CountLayoutViolations(room, delta);
}

}  // namespace mutualspace
