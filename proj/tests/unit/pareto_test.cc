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


#include "mutualspace/pareto.h"

#include <random>

#include <gtest/gtest.h>

namespace mutualspace {
namespace {

TEST(DominatesTest, Definition) {
  const std::vector<double> a = {1, 2};
  const std::vector<double> b = {2, 2};
  const std::vector<double> c = {0, 3};
  EXPECT_TRUE(Dominates(a, b));
  EXPECT_FALSE(Dominates(b, a));
  EXPECT_FALSE(Dominates(a, a));
  EXPECT_FALSE(Dominates(a, c));
  EXPECT_FALSE(Dominates(c, a));
}

TEST(NonDominatedIndicesTest, MatchesPairwiseCheck) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<double>> points;
    for (int k = 0; k < 40; ++k) points.push_back({double(d(rng)), double(d(rng))});
    std::vector<size_t> expected;
    for (size_t i = 0; i < points.size(); ++i) {
      bool dominated = false;
      for (size_t j = 0; j < points.size(); ++j) dominated |= Dominates(points[j], points[i]);
      if (!dominated) expected.push_back(i);
    }
    EXPECT_EQ(NonDominatedIndices(points), expected);
  }
}

TEST(Hypervolume2DTest, StaircaseByHand) {
  // Points (1,3), (2,2), (3,1) against (4,4): 3 + 2 + 1 = 6.
  EXPECT_DOUBLE_EQ(Hypervolume2D({{1, 3}, {2, 2}, {3, 1}}, {4, 4}), 6.0);
  EXPECT_DOUBLE_EQ(Hypervolume2D({{5, 1}}, {4, 4}), 0.0);
  EXPECT_DOUBLE_EQ(Hypervolume2D({}, {4, 4}), 0.0);
  // Dominated and duplicate points add nothing.
  EXPECT_DOUBLE_EQ(Hypervolume2D({{1, 3}, {2, 2}, {3, 1}, {3, 3}, {2, 2}}, {4, 4}), 6.0);
}

TEST(Hypervolume2DTest, MatchesGridSampling) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::array<double, 2>> points;
    for (int k = 0; k < 15; ++k) points.push_back({d(rng), d(rng)});
    const std::array<double, 2> ref = {10.0, 10.0};
    const double step = 0.01;
    size_t hits = 0;
    for (double y = step / 2; y < 10.0; y += step) {
      for (double x = step / 2; x < 10.0; x += step) {
        for (const auto& p : points) {
          if (p[0] <= x && p[1] <= y) {
            ++hits;
            break;
          }
        }
      }
    }
    EXPECT_NEAR(Hypervolume2D(points, ref), hits * step * step, 0.2);
  }
}

}  // namespace
}  // namespace mutualspace
