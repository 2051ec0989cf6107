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

#include <random>

#include <gtest/gtest.h>

#include "mutualspace/errors.h"
#include "testing/oracles.h"

namespace mutualspace {
namespace {

FurnitureObject Table(double weight = 30.0) {
  FurnitureObject object =
      MakeObject("table", "table", OrientedRect({2, 2}, 2, 1, 0), LabelCatalog::Default());
  object.weight = weight;
  return object;
}

TEST(EffortTest, WeightTimesDistance) {
  EXPECT_EQ(Effort(Table(), {0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(Effort(Table(30.0), {3, 4}), 150.0);
  const FurnitureObject chair =
      MakeObject("c", "chair", OrientedRect({1, 1}, 0.5, 0.5, 0), LabelCatalog::Default());
  EXPECT_EQ(chair.weight, 7.0);
  EXPECT_DOUBLE_EQ(Effort(chair, {0.5, 0}), 3.5);
}

TEST(EffortTest, ImmovableObjectsCannotMove) {
  FurnitureObject fixed = Table();
  fixed.movable = false;
  EXPECT_EQ(Effort(fixed, {0, 0}), 0.0);
  EXPECT_THROW(Effort(fixed, {0.1, 0}), ValidationError);
}

TEST(TotalEffortTest, SumsAcrossRooms) {
  const Scene scene = testing::LoadFixture("two_identical_rooms.json");
  EXPECT_EQ(TotalEffort(scene.rooms, LayoutDelta::Zero(2)), 0.0);
  LayoutDelta delta = LayoutDelta::Zero(2);
  delta.rooms[0]["table"] = {1.0, 0.0};
  delta.rooms[1]["table"] = {0.0, -1.0};
  EXPECT_DOUBLE_EQ(TotalEffort(scene.rooms, delta), 60.0);
}

TEST(TotalEffortTest, CollidingDeltaStillHasEffort) {
  const Scene scene = testing::LoadFixture("two_identical_rooms.json");
  LayoutDelta delta = LayoutDelta::Zero(2);
  delta.rooms[0]["table"] = {3.0, 0.0};  // through the wall
  EXPECT_DOUBLE_EQ(TotalEffort(scene.rooms, delta), 90.0);
}

TEST(TotalEffortTest, UnknownObjectIsRejected) {
  const Scene scene = testing::LoadFixture("two_identical_rooms.json");
  LayoutDelta delta = LayoutDelta::Zero(2);
  delta.rooms[1]["sofa"] = {1.0, 0.0};
  EXPECT_THROW(TotalEffort(scene.rooms, delta), ValidationError);
}

TEST(TotalEffortTest, ZeroExactlyWhenNothingMoves) {
  const Scene scene = testing::LoadFixture("three_rooms_blockable.json");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::bernoulli_distribution moved(0.5);
  for (int k = 0; k < 200; ++k) {
    LayoutDelta delta = LayoutDelta::Zero(3);
    delta.rooms[1]["conference_table"] = moved(rng) ? Vec2{d(rng), d(rng)} : Vec2{0, 0};
    delta.rooms[2]["coffee_table"] = moved(rng) ? Vec2{d(rng), 0.0} : Vec2{0, 0};
    EXPECT_EQ(TotalEffort(scene.rooms, delta) == 0.0, delta.IsZero());
  }
}

TEST(LayoutTest, MovedFootprintsAndApplyDelta) {
  const Scene scene = testing::LoadFixture("two_identical_rooms.json");
  RoomDelta delta;
  delta["table"] = {0.5, -0.25};
  const auto moved = MovedFootprints(scene.rooms[0], &delta);
  ASSERT_EQ(moved.size(), 1u);
  EXPECT_DOUBLE_EQ(moved[0].center().x, 2.5);
  EXPECT_DOUBLE_EQ(moved[0].center().y, 1.75);
  const Room applied = ApplyDelta(scene.rooms[0], delta);
  EXPECT_DOUBLE_EQ(applied.objects[0].footprint.center().x, 2.5);
  EXPECT_EQ(TranslationOf(&delta, "table").x, 0.5);
  EXPECT_EQ(TranslationOf(nullptr, "table").x, 0.0);
  EXPECT_EQ(TranslationOf(&delta, "other").y, 0.0);
}

}  // namespace
}  // namespace mutualspace
