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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mutualspace/errors.h"
#include "testing/oracles.h"

namespace mutualspace {
namespace {

const LabelCatalog& Catalog() {
  static const LabelCatalog catalog = LabelCatalog::Default();
  return catalog;
}

Room SquareRoom(double side, std::vector<FurnitureObject> objects) {
  return Room{"room", SimplePolygon::Rectangle({0, 0}, {side, side}), std::move(objects),
              std::nullopt};
}

FurnitureObject Obj(const std::string& id, const std::string& label, Vec2 c, double w, double d,
                    double rot = 0.0) {
  return MakeObject(id, label, OrientedRect(c, w, d, rot), Catalog());
}

std::vector<OrientedRect> Footprints(const Room& room) { return MovedFootprints(room, nullptr); }

TEST(SceneGraphTest, CenteredTableClearances) {
  const Room room = SquareRoom(4.0, {Obj("table", "table", {2, 2}, 2, 1)});
  const SceneGraph graph = BuildSceneGraph(room);
  const SceneGraphNode& node = graph.node(0);
  const auto fp = Footprints(room);
  const double expected[4] = {1.0, 1.0, 1.5, 1.5};
  for (const Face face : kAllFaces) {
    const int f = static_cast<int>(face);
    EXPECT_NEAR(node.clearance(face).distance, expected[f], 1e-9) << FaceName(face);
    EXPECT_NEAR(testing::MarchedClearance(room, fp, 0, f), expected[f], 1e-6);
    EXPECT_EQ(node.clearance(face).blocker, kRoomBoundary);
  }
}

TEST(SceneGraphTest, FlushTableHasNoRoomTowardTheWall) {
  const Room room = SquareRoom(4.0, {Obj("table", "table", {3, 2}, 2, 1)});
  const SceneGraph graph = BuildSceneGraph(room);
  EXPECT_NEAR(graph.node(0).clearance(Face::kXMax).distance, 0.0, 1e-9);
  EXPECT_EQ(graph.node(0).clearance(Face::kXMax).blocker, kRoomBoundary);
  const MovementBounds bounds = GetMovementBounds(graph, "table");
  EXPECT_NEAR(bounds.u.hi, 0.0, 1e-9);
  EXPECT_NEAR(bounds.u.lo, -2.0, 1e-9);
}

TEST(SceneGraphTest, FacingSquaresNameEachOther) {
  const Room room = SquareRoom(4.0, {Obj("a", "cabinet", {1.25, 2}, 1, 1),
                                     Obj("b", "cabinet", {2.75, 2}, 1, 1)});
  const SceneGraph graph = BuildSceneGraph(room);
  const auto& a = graph.node(0).clearance(Face::kXMax);
  const auto& b = graph.node(1).clearance(Face::kXMin);
  EXPECT_NEAR(a.distance, 0.5, 1e-9);
  EXPECT_NEAR(b.distance, 0.5, 1e-9);
  EXPECT_EQ(a.blocker, 1);
  EXPECT_EQ(b.blocker, 0);
  const auto fp = Footprints(room);
  EXPECT_NEAR(testing::MarchedClearance(room, fp, 0, 0), 0.5, 1e-6);
  const auto& back = graph.node(1).referenced_by;
  EXPECT_NE(std::find(back.begin(), back.end(), FaceRef{0, Face::kXMax}), back.end());
}

TEST(SceneGraphTest, RotatedNeighbourUsesNearestVertex) {
  // A diamond whose corner points at the table's +x face.
  const Room room = SquareRoom(6.0, {Obj("table", "table", {2, 3}, 1, 2),
                                     Obj("crate", "cabinet", {4.0, 3.3}, 1, 1, 0.785398)});
  const SceneGraph graph = BuildSceneGraph(room);
  const double oracle = testing::MarchedClearance(room, Footprints(room), 0, 0, 2000);
  const double got = graph.node(0).clearance(Face::kXMax).distance;
  EXPECT_LE(got, oracle + 1e-6);
  EXPECT_NEAR(got, oracle, 2e-3);
  EXPECT_EQ(graph.node(0).clearance(Face::kXMax).blocker, 1);
}

TEST(SceneGraphTest, UnknownIdThrows) {
  const Room room = SquareRoom(4.0, {Obj("table", "table", {2, 2}, 2, 1)});
  EXPECT_THROW(BuildSceneGraph(room).IndexOf("nope"), ValidationError);
}

TEST(MovementBoundsTest, CenteredTable) {
  const Room room = SquareRoom(4.0, {Obj("table", "table", {2, 2}, 2, 1)});
  const MovementBounds bounds = GetMovementBounds(BuildSceneGraph(room), "table");
  EXPECT_NEAR(bounds.u.lo, -1.0, 1e-9);
  EXPECT_NEAR(bounds.u.hi, 1.0, 1e-9);
  EXPECT_NEAR(bounds.v.lo, -1.5, 1e-9);
  EXPECT_NEAR(bounds.v.hi, 1.5, 1e-9);
}

TEST(MovementBoundsTest, ImmovableObjectIsPinned) {
  FurnitureObject table = Obj("table", "table", {2, 2}, 2, 1);
  table.movable = false;
  const Room room = SquareRoom(4.0, {table});
  const MovementBounds bounds = GetMovementBounds(BuildSceneGraph(room), "table");
  EXPECT_EQ(bounds.u.lo, 0.0);
  EXPECT_EQ(bounds.u.hi, 0.0);
  EXPECT_EQ(bounds.v.lo, 0.0);
  EXPECT_EQ(bounds.v.hi, 0.0);
}

TEST(CollisionPenaltyTest, Cases) {
  const Room room = SquareRoom(6.0, {Obj("table", "table", {1.5, 1.5}, 2, 1),
                                     Obj("sofa", "sofa", {4.5, 1.5}, 2, 1),
                                     Obj("chair", "chair", {1.5, 4.5}, 0.5, 0.5),
                                     Obj("bed", "bed", {4.5, 4.5}, 2, 1.5)});
  EXPECT_EQ(CollisionPenalty(room, {}), 0.0);
  RoomDelta onto_sofa{{"table", {2.5, 0.0}}};
  ASSERT_TRUE(RectOverlap(room.objects[0].footprint.Translated({2.5, 0}),
                          room.objects[1].footprint));
  EXPECT_EQ(CollisionPenalty(room, onto_sofa), kDefaultPenaltyBase);
  RoomDelta two_pairs{{"table", {2.5, 0.0}}, {"chair", {2.5, 0.0}}};
  EXPECT_EQ(CollisionPenalty(room, two_pairs), 2 * kDefaultPenaltyBase);
  RoomDelta outside{{"chair", {0.0, 1.4}}};
  EXPECT_EQ(CollisionPenalty(room, outside, 10.0), 10.0);
}

struct RandomCase {
  Room room;
  SceneGraph graph;
};

std::vector<RandomCase> RandomCases(int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomCase> cases;
  while (static_cast<int>(cases.size()) < count) {
    Room room = testing::RandomRoom(rng, "r" + std::to_string(cases.size()), 5);
    if (room.objects.size() < 2) continue;
    SceneGraph graph = BuildSceneGraph(room);
    cases.push_back({std::move(room), std::move(graph)});
  }
  return cases;
}

TEST(SceneGraphPropertyTest, ForwardAndBackLinksAgree) {
  for (const RandomCase& c : RandomCases(20, 101)) {
    for (size_t n = 0; n < c.graph.size(); ++n) {
      for (const Face face : kAllFaces) {
        const int blocker = c.graph.node(n).clearance(face).blocker;
        if (blocker == kRoomBoundary) continue;
        const auto& back = c.graph.node(static_cast<size_t>(blocker)).referenced_by;
        EXPECT_NE(std::find(back.begin(), back.end(), FaceRef{n, face}), back.end());
      }
      for (const FaceRef ref : c.graph.node(n).referenced_by) {
        EXPECT_EQ(c.graph.node(ref.object).clearance(ref.face).blocker, static_cast<int>(n));
      }
    }
  }
}

TEST(SceneGraphPropertyTest, ClearancesMatchRayMarching) {
  for (const RandomCase& c : RandomCases(10, 202)) {
    const auto fp = Footprints(c.room);
    for (size_t n = 0; n < c.graph.size(); ++n) {
      for (const Face face : kAllFaces) {
        const double oracle =
            testing::MarchedClearance(c.room, fp, n, static_cast<int>(face), 400, 5e-3);
        const double got = c.graph.node(n).clearance(face).distance;
        EXPECT_LE(got, oracle + 1e-6) << c.room.id << " " << n << " " << FaceName(face);
        EXPECT_NEAR(got, oracle, 0.03) << c.room.id << " " << n << " " << FaceName(face);
      }
    }
  }
}

TEST(SceneGraphPropertyTest, FacingClearancesAreSymmetric) {
  for (const double gap : {0.3, 0.75, 1.2}) {
    const Room room = SquareRoom(8.0, {Obj("a", "cabinet", {2.0, 4.0}, 1.0, 2.0),
                                       Obj("b", "table", {2.5 + gap + 0.6, 4.0}, 1.2, 1.4)});
    const SceneGraph graph = BuildSceneGraph(room);
    EXPECT_NEAR(graph.node(0).clearance(Face::kXMax).distance,
                graph.node(1).clearance(Face::kXMin).distance, 1e-9);
    EXPECT_NEAR(graph.node(0).clearance(Face::kXMax).distance, gap, 1e-9);
  }
}

TEST(SceneGraphPropertyTest, ExtremeMovesDoNotCollideWithInitialLayout) {
  for (const RandomCase& c : RandomCases(20, 303)) {
    for (size_t n = 0; n < c.graph.size(); ++n) {
      const FurnitureObject& object = c.room.objects[n];
      const MovementBounds bounds = GetMovementBounds(c.graph, object.id);
      for (const Vec2 t : {bounds.ToWorld(bounds.u.lo, 0), bounds.ToWorld(bounds.u.hi, 0),
                           bounds.ToWorld(0, bounds.v.lo), bounds.ToWorld(0, bounds.v.hi)}) {
        RoomDelta delta{{object.id, t}};
        EXPECT_EQ(CollisionPenalty(c.room, delta), 0.0) << c.room.id << " " << object.id;
      }
    }
  }
}

TEST(SceneGraphPropertyTest, PenaltyIgnoresObjectOrder) {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (RandomCase& c : RandomCases(20, 505)) {
    RoomDelta delta;
    for (const FurnitureObject& object : c.room.objects) delta[object.id] = {d(rng), d(rng)};
    const double penalty = CollisionPenalty(c.room, delta);
    Room shuffled = c.room;
    std::shuffle(shuffled.objects.begin(), shuffled.objects.end(), rng);
    EXPECT_EQ(CollisionPenalty(shuffled, delta), penalty);
  }
}

}  // namespace
}  // namespace mutualspace
