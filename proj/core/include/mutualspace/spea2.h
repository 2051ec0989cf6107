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

#ifndef MUTUALSPACE_SPEA2_H_
#define MUTUALSPACE_SPEA2_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mutualspace {

struct GeneBounds {
  double lower = 0.0;
  double upper = 0.0;
  // Periodic genes wrap into [lower, upper) instead of being clamped.
  bool periodic = false;

  double Range() const { return upper - lower; }
};

// Real-coded GA settings. `mutation_probability` is the chance an offspring
// gets a mutation pass at all; `mutation_rate` is the fraction of its genes
// perturbed in that pass.
struct EvolutionParams {
  int population = 100;
  int archive_size = 0;  // 0 = population
  int generations = 300;
  double mutation_probability = 0.10;
  double mutation_rate = 0.50;
  double crossover_rate = 0.80;
  double blend_alpha = 0.5;
  double mutation_scale = 0.10;  // Gaussian std as a fraction of gene range
  int stagnation_generations = 50;  // 0 disables early stopping
  int threads = 0;

  // Throws ValidationError naming the offending field.
  void Validate() const;
  int EffectiveArchiveSize() const { return archive_size > 0 ? archive_size : population; }
};

struct Individual {
  std::vector<double> genes;
  std::vector<double> objectives;  // all minimized
  double fitness = 0.0;            // SPEA2 raw fitness + density; < 1 iff non-dominated
};

struct Spea2Problem {
  std::vector<GeneBounds> bounds;
  size_t objective_count = 1;
  // Must be thread-safe and deterministic.
  std::function<std::vector<double>(std::span<const double>)> evaluate;
  // Genotypes injected into the initial population (clamped to bounds).
  std::vector<std::vector<double>> seeds;
};

struct Spea2Result {
  std::vector<Individual> archive;
  // Non-dominated archive members.
  std::vector<Individual> front;
  int generations_run = 0;
  bool stopped_early = false;
  // Per generation, the best (minimum) archive value of each objective.
  std::vector<std::vector<double>> best_per_generation;
};

// Called once per generation after environmental selection.
using Spea2Observer = std::function<void(int generation, std::span<const Individual> population,
                                         std::span<const Individual> archive)>;

// Strength Pareto evolutionary search: strength/raw fitness with k-NN
// density, archive truncation by nearest-neighbour distances, binary
// tournaments, blend crossover and Gaussian mutation. Deterministic for a
// given seed regardless of thread count.
Spea2Result RunSpea2(const Spea2Problem& problem, const EvolutionParams& params, uint64_t seed,
                     const Spea2Observer& observer = {});

// SPEA2 fitness over a merged set, exposed for tests: writes
// Individual::fitness for each member.
void AssignSpea2Fitness(std::vector<Individual>& members);

// Environmental selection over members with assigned fitness.
std::vector<Individual> SelectArchive(std::vector<Individual> members, size_t archive_size);

}  // namespace mutualspace

#endif  // MUTUALSPACE_SPEA2_H_
