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

#ifndef MUTUALSPACE_PARETO_H_
#define MUTUALSPACE_PARETO_H_

#include <array>
#include <span>
#include <vector>

namespace mutualspace {

// Minimization: a dominates b iff a <= b componentwise with one strict.
bool Dominates(std::span<const double> a, std::span<const double> b);

// Indices of the mutually non-dominated points, in input order. Exact
// duplicates are all kept.
std::vector<size_t> NonDominatedIndices(const std::vector<std::vector<double>>& points);

// Area dominated by `points` (minimization) and bounded by `reference`.
// Points outside the reference box contribute nothing.
double Hypervolume2D(std::vector<std::array<double, 2>> points, std::array<double, 2> reference);

}  // namespace mutualspace

#endif  // MUTUALSPACE_PARETO_H_
