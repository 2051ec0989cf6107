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


#include "mutualspace/geometry.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mutualspace/errors.h"
#include "testing/oracles.h"

namespace mutualspace {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Pose2DTest, ComposeAppliesRightOperandFirst) {
  const Pose2D a(1.0, 2.0, kPi / 2);
  const Pose2D b(3.0, 0.0, kPi / 4);
  const Vec2 p{0.4, -1.3};
  const Vec2 expected = a.Apply(b.Apply(p));
  const Vec2 got = (a * b).Apply(p);
  EXPECT_NEAR(got.x, expected.x, 1e-12);
  EXPECT_NEAR(got.y, expected.y, 1e-12);
}

TEST(Pose2DTest, InverseUndoesApply) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  for (int k = 0; k < 100; ++k) {
    const Pose2D pose(d(rng), d(rng), d(rng));
    const Vec2 p{d(rng), d(rng)};
    const Vec2 back = pose.Inverse().Apply(pose.Apply(p));
    EXPECT_NEAR(back.x, p.x, 1e-9);
    EXPECT_NEAR(back.y, p.y, 1e-9);
    const Vec2 back2 = pose.ApplyInverse(pose.Apply(p));
    EXPECT_NEAR(back2.x, p.x, 1e-9);
    EXPECT_NEAR(back2.y, p.y, 1e-9);
  }
}

TEST(Pose2DTest, RotationAboutKeepsPivotFixed) {
  const Vec2 pivot{2.0, 1.0};
  const Pose2D pose = Pose2D::RotationAbout(pivot, 1.1);
  const Vec2 q = pose.Apply(pivot);
  EXPECT_NEAR(q.x, pivot.x, 1e-12);
  EXPECT_NEAR(q.y, pivot.y, 1e-12);
  const Vec2 r = Pose2D::RotationAbout({0, 0}, kPi / 2).Apply({1, 0});
  EXPECT_NEAR(r.x, 0.0, 1e-12);
  EXPECT_NEAR(r.y, 1.0, 1e-12);
}

TEST(Pose2DTest, ThetaIsNormalizedToHalfOpenRange) {
  EXPECT_NEAR(Pose2D(0, 0, 3 * kPi / 2).theta(), -kPi / 2, 1e-12);
  EXPECT_NEAR(NormalizeAngle(kPi), -kPi, 1e-12);
  EXPECT_NEAR(NormalizeAngle(-kPi), -kPi, 1e-12);
}

TEST(OrientedRectTest, CornersAreCounterClockwise) {
  const OrientedRect rect({1, 1}, 2.0, 1.0, 0.3);
  const auto corners = rect.Corners();
  EXPECT_NEAR(SignedArea(corners), 2.0, 1e-12);
}

TEST(OrientedRectTest, RejectsDegenerateSizes) {
  EXPECT_THROW(OrientedRect({0, 0}, 0.0, 1.0, 0.0), ValidationError);
  EXPECT_THROW(OrientedRect({0, 0}, 1.0, -1.0, 0.0), ValidationError);
  EXPECT_THROW(OrientedRect({NAN, 0}, 1.0, 1.0, 0.0), ValidationError);
}

TEST(OrientedRectTest, DistanceAndDepthMatchIndependentFormulas) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const OrientedRect rect({0.5, -0.2}, 2.0, 1.2, 0.7);
  for (int k = 0; k < 500; ++k) {
    const Vec2 p{d(rng), d(rng)};
    EXPECT_NEAR(rect.DistanceTo(p), testing::DistanceToRect(rect, p), 1e-9);
    EXPECT_NEAR(rect.InteriorDepth(p), testing::DepthInRect(rect, p), 1e-9);
    EXPECT_EQ(rect.Contains(p), testing::PointInRect(rect, p));
  }
}

TEST(RectOverlapTest, IdenticalRectsOverlap) {
  const OrientedRect a({0, 0}, 1, 1, 0.4);
  EXPECT_TRUE(RectOverlap(a, a));
}

TEST(RectOverlapTest, DisjointUnitSquares) {
  EXPECT_FALSE(RectOverlap(OrientedRect({0, 0}, 1, 1, 0), OrientedRect({2, 0}, 1, 1, 0)));
}

TEST(RectOverlapTest, RotatedNeighbourOverlapsAsSamplingShows) {
  const OrientedRect a({0, 0}, 1, 1, 0);
  const OrientedRect b({0.9, 0}, 1, 1, kPi / 4);
  ASSERT_TRUE(testing::SampledRectOverlap(a, b));
  EXPECT_TRUE(RectOverlap(a, b));
  EXPECT_TRUE(RectOverlap(b, a));
}

TEST(RectOverlapTest, TouchingIsNotOverlap) {
  EXPECT_FALSE(RectOverlap(OrientedRect({0, 0}, 1, 1, 0), OrientedRect({1, 0}, 1, 1, 0)));
  EXPECT_FALSE(RectOverlap(OrientedRect({0, 0}, 1, 1, 0), OrientedRect({1, 1}, 1, 1, 0)));
}

// Symmetric and in agreement with a 10,000-point sampling oracle on pairs
// that are not within 5% of touching.
TEST(RectOverlapTest, AgreesWithSamplingOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> pos(-1.5, 1.5);
  std::uniform_real_distribution<double> size(0.3, 2.0);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int compared = 0;
  for (int k = 0; k < 2000 && compared < 400; ++k) {
    const Vec2 c{pos(rng), pos(rng)};
    const double w = size(rng);
    const double h = size(rng);
    const double t = angle(rng);
    const OrientedRect a(c, w, h, t);
    const OrientedRect b({pos(rng), pos(rng)}, size(rng), size(rng), angle(rng));
    const bool overlap = RectOverlap(a, b);
    EXPECT_EQ(overlap, RectOverlap(b, a));
    const bool shrunk = RectOverlap(OrientedRect(c, 0.95 * w, 0.95 * h, t), b);
    const bool grown = RectOverlap(OrientedRect(c, 1.05 * w, 1.05 * h, t), b);
    if (shrunk != grown) continue;
    ++compared;
    const bool sampled =
        testing::SampledRectOverlap(a, b) || testing::SampledRectOverlap(b, a);
    EXPECT_EQ(overlap, sampled) << "pair " << k;
  }
  EXPECT_GE(compared, 300);
}

TEST(SimplePolygonTest, ValidatesInvariants) {
  EXPECT_THROW(SimplePolygon({{0, 0}, {1, 0}}), ValidationError);
  // Clockwise.
  EXPECT_THROW(SimplePolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), ValidationError);
  // Bow tie.
  EXPECT_THROW(SimplePolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), ValidationError);
  // Repeated vertex.
  EXPECT_THROW(SimplePolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), ValidationError);
  EXPECT_NO_THROW(SimplePolygon({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {0, 3}}));
}

TEST(SimplePolygonTest, AreaContainmentAndDistance) {
  const SimplePolygon l({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {0, 3}});
  EXPECT_NEAR(l.Area(), 6.0, 1e-12);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-0.5, 4.5);
  for (int k = 0; k < 500; ++k) {
    const Vec2 p{d(rng), d(rng)};
    EXPECT_EQ(l.Contains(p), testing::PointInRing(l.vertices(), p));
    EXPECT_NEAR(l.DistanceToBoundary(p), testing::DistanceToRing(l.vertices(), p), 1e-12);
  }
}

TEST(SimplePolygonTest, TransformedPreservesArea) {
  const SimplePolygon l({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {0, 3}});
  const SimplePolygon moved = l.Transformed(Pose2D(3.0, -2.0, 2.2));
  EXPECT_NEAR(moved.Area(), l.Area(), 1e-9);
}

TEST(RectInsidePolygonTest, ContainmentCases) {
  const SimplePolygon square = SimplePolygon::Rectangle({0, 0}, {4, 4});
  EXPECT_TRUE(RectInsidePolygon(OrientedRect({2, 2}, 2, 1, 0), square));
  // Flush against a wall still counts as inside.
  EXPECT_TRUE(RectInsidePolygon(OrientedRect({3, 2}, 2, 1, 0), square));
  EXPECT_FALSE(RectInsidePolygon(OrientedRect({3.5, 2}, 2, 1, 0), square));
  // Notch of an L: corners inside but an edge crosses the reflex vertex.
  const SimplePolygon l({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {0, 3}});
  EXPECT_FALSE(RectInsidePolygon(OrientedRect({1.0, 1.0}, 1.2, 1.2, kPi / 4), l));
  EXPECT_TRUE(RectInsidePolygon(OrientedRect({2.0, 0.5}, 1.0, 0.8, 0), l));
}

TEST(RayHitTest, RectAndSegment) {
  const OrientedRect rect({3, 0}, 2, 2, 0);
  const auto hit = RayHitRect({0, 0}, {1, 0}, rect);
  ASSERT_TRUE(hit.has_value());
  EXPECT_NEAR(*hit, 2.0, 1e-12);
  EXPECT_FALSE(RayHitRect({0, 0}, {-1, 0}, rect).has_value());
  // Grazing along an edge never enters the open interior.
  EXPECT_FALSE(RayHitRect({0, 1}, {1, 0}, rect).has_value());

  const auto seg = RayHitSegment({0, 0}, {0, 1}, {-1, 2}, {1, 2});
  ASSERT_TRUE(seg.has_value());
  EXPECT_NEAR(*seg, 2.0, 1e-12);
  EXPECT_FALSE(RayHitSegment({0, 0}, {1, 0}, {1, 0}, {2, 0}).has_value());
}

}  // namespace
}  // namespace mutualspace
