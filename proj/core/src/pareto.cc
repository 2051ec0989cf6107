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

#include <algorithm>

#include "mutualspace/errors.h"

namespace mutualspace {

bool Dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("objective vectors differ in length");
  bool strict = false;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strict = true;
  }
  return strict;
}

std::vector<size_t> NonDominatedIndices(const std::vector<std::vector<double>>& points) {
  std::vector<size_t> kept;
  for (size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && Dominates(points[j], points[i]);
    }
    if (!dominated) kept.push_back(i);
  }
  return kept;
}

double Hypervolume2D(std::vector<std::array<double, 2>> points, std::array<double, 2> reference) {
  std::erase_if(points, [&](const auto& p) { return p[0] >= reference[0] || p[1] >= reference[1]; });
  std::sort(points.begin(), points.end());
  double volume = 0.0;
  double ceiling = reference[1];
  for (const auto& p : points) {
    if (p[1] < ceiling) {
      volume += (reference[0] - p[0]) * (ceiling - p[1]);
      ceiling = p[1];
    }
  }
  return volume;
}

}  // namespace mutualspace
