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

#include "mutualspace/spea2.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "mutualspace/errors.h"
#include "mutualspace/parallel.h"
#include "mutualspace/pareto.h"

namespace mutualspace {
namespace {

using Rng = std::mt19937_64;

// Objective-space distances after scaling every objective to unit range.
std::vector<double> ScaledDistances(const std::vector<Individual>& members) {
  const size_t n = members.size();
  const size_t m = n == 0 ? 0 : members[0].objectives.size();
  std::vector<double> lo(m, std::numeric_limits<double>::infinity());
  std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
  for (const Individual& ind : members) {
    for (size_t k = 0; k < m; ++k) {
      lo[k] = std::min(lo[k], ind.objectives[k]);
      hi[k] = std::max(hi[k], ind.objectives[k]);
    }
  }
  std::vector<double> scale(m);
  for (size_t k = 0; k < m; ++k) scale[k] = hi[k] > lo[k] ? 1.0 / (hi[k] - lo[k]) : 1.0;
  std::vector<double> dist(n * n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (size_t k = 0; k < m; ++k) {
        const double d = (members[i].objectives[k] - members[j].objectives[k]) * scale[k];
        s += d * d;
      }
      dist[i * n + j] = dist[j * n + i] = std::sqrt(s);
    }
  }
  return dist;
}

double Repair(double value, const GeneBounds& b) {
  if (b.Range() <= 0.0) return b.lower;
  if (b.periodic) {
    value = b.lower + std::fmod(value - b.lower, b.Range());
    if (value < b.lower) value += b.Range();
    if (value >= b.upper) value = b.lower;
    return value;
  }
  return std::clamp(value, b.lower, b.upper);
}

void BlendCrossover(std::vector<double>& a, std::vector<double>& b,
                    const std::vector<GeneBounds>& bounds, double alpha, Rng& rng) {
  for (size_t g = 0; g < a.size(); ++g) {
    double x = a[g];
    double y = b[g];
    if (bounds[g].periodic) {
      // Blend along the short arc.
      const double range = bounds[g].Range();
      double diff = std::fmod(y - x, range);
      if (diff > 0.5 * range) diff -= range;
      if (diff < -0.5 * range) diff += range;
      y = x + diff;
    }
    const double lo = std::min(x, y);
    const double hi = std::max(x, y);
    const double span = hi - lo;
    if (span <= 0.0) continue;
    std::uniform_real_distribution<double> pick(lo - alpha * span, hi + alpha * span);
    a[g] = Repair(pick(rng), bounds[g]);
    b[g] = Repair(pick(rng), bounds[g]);
  }
}

void Mutate(std::vector<double>& genes, const std::vector<GeneBounds>& bounds,
            const EvolutionParams& params, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) >= params.mutation_probability) return;
  std::normal_distribution<double> normal(0.0, 1.0);
  for (size_t g = 0; g < genes.size(); ++g) {
    if (unit(rng) >= params.mutation_rate) continue;
    const double step = normal(rng) * params.mutation_scale * bounds[g].Range();
    genes[g] = Repair(genes[g] + step, bounds[g]);
  }
}

// Sorted unique objective vectors of the non-dominated members.
std::vector<std::vector<double>> FrontSignature(const std::vector<Individual>& archive) {
  std::vector<std::vector<double>> sig;
  for (const Individual& ind : archive) {
    if (ind.fitness < 1.0) sig.push_back(ind.objectives);
  }
  std::sort(sig.begin(), sig.end());
  sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
  return sig;
}

void Evaluate(std::vector<Individual>& population, const Spea2Problem& problem, int threads) {
  ParallelFor(population.size(), threads, [&](size_t i) {
    std::vector<double> objectives = problem.evaluate(population[i].genes);
    if (objectives.size() != problem.objective_count) {
      throw ValidationError("evaluator returned " + std::to_string(objectives.size()) +
                            " objectives, expected " + std::to_string(problem.objective_count));
    }
    for (double& v : objectives) {
      if (std::isnan(v)) v = std::numeric_limits<double>::max();
    }
    population[i].objectives = std::move(objectives);
  });
}

}  // namespace

void EvolutionParams::Validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("GA parameter " + what); };
  if (population < 2) fail("'population' must be >= 2");
  if (archive_size < 0) fail("'archive_size' must be >= 0");
  if (generations < 0) fail("'generations' must be >= 0");
  auto rate = [&](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) fail(std::string("'") + name + "' must be in [0, 1]");
  };
  rate(mutation_probability, "mutation_probability");
  rate(mutation_rate, "mutation_rate");
  rate(crossover_rate, "crossover_rate");
  if (!(blend_alpha >= 0.0)) fail("'blend_alpha' must be >= 0");
  if (!(mutation_scale >= 0.0)) fail("'mutation_scale' must be >= 0");
  if (stagnation_generations < 0) fail("'stagnation_generations' must be >= 0");
}

void AssignSpea2Fitness(std::vector<Individual>& members) {
  const size_t n = members.size();
  if (n == 0) return;
  std::vector<int> strength(n, 0);
  std::vector<char> dominates(n * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i != j && Dominates(members[i].objectives, members[j].objectives)) {
        dominates[i * n + j] = 1;
        ++strength[i];
      }
    }
  }
  const std::vector<double> dist = ScaledDistances(members);
  const size_t k = std::min(n - 1, static_cast<size_t>(std::sqrt(static_cast<double>(n))));
  std::vector<double> row;
  for (size_t i = 0; i < n; ++i) {
    double raw = 0.0;
    for (size_t j = 0; j < n; ++j) {
      if (dominates[j * n + i]) raw += strength[j];
    }
    double sigma = 0.0;
    if (n > 1) {
      row.clear();
      for (size_t j = 0; j < n; ++j) {
        if (j != i) row.push_back(dist[i * n + j]);
      }
      const size_t kth = std::max<size_t>(k, 1) - 1;
      std::nth_element(row.begin(), row.begin() + kth, row.end());
      sigma = row[kth];
    }
    members[i].fitness = raw + 1.0 / (sigma + 2.0);
  }
}

std::vector<Individual> SelectArchive(std::vector<Individual> members, size_t archive_size) {
  std::vector<size_t> chosen;
  std::vector<size_t> rest;
  for (size_t i = 0; i < members.size(); ++i) {
    (members[i].fitness < 1.0 ? chosen : rest).push_back(i);
  }
  if (chosen.size() < archive_size) {
    std::stable_sort(rest.begin(), rest.end(), [&](size_t a, size_t b) {
      return members[a].fitness < members[b].fitness;
    });
    for (size_t i = 0; i < rest.size() && chosen.size() < archive_size; ++i) {
      chosen.push_back(rest[i]);
    }
  } else if (chosen.size() > archive_size) {
    std::vector<Individual> front;
    front.reserve(chosen.size());
    for (size_t i : chosen) front.push_back(members[i]);
    const size_t n = front.size();
    const std::vector<double> dist = ScaledDistances(front);
    // Each member's distances to the others, ascending, tagged by partner.
    std::vector<std::vector<std::pair<double, size_t>>> near(n);
    for (size_t i = 0; i < n; ++i) {
      near[i].reserve(n - 1);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) near[i].push_back({dist[i * n + j], j});
      }
      std::sort(near[i].begin(), near[i].end());
    }
    std::vector<char> alive(n, 1);
    size_t remaining = n;
    while (remaining > archive_size) {
      size_t victim = n;
      for (size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        if (victim == n) {
          victim = i;
          continue;
        }
        // Lexicographic comparison of sorted distance lists.
        const auto& a = near[i];
        const auto& b = near[victim];
        for (size_t q = 0; q < a.size() && q < b.size(); ++q) {
          if (a[q].first < b[q].first) {
            victim = i;
            break;
          }
          if (a[q].first > b[q].first) break;
        }
      }
      alive[victim] = 0;
      --remaining;
      for (size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        auto& list = near[i];
        list.erase(std::find_if(list.begin(), list.end(),
                                [victim](const auto& e) { return e.second == victim; }));
      }
    }
    std::vector<Individual> out;
    out.reserve(archive_size);
    for (size_t i = 0; i < n; ++i) {
      if (alive[i]) out.push_back(std::move(front[i]));
    }
    return out;
  }
  std::vector<Individual> out;
  out.reserve(chosen.size());
  for (size_t i : chosen) out.push_back(std::move(members[i]));
  return out;
}

Spea2Result RunSpea2(const Spea2Problem& problem, const EvolutionParams& params, uint64_t seed,
                     const Spea2Observer& observer) {
  params.Validate();
  if (problem.objective_count == 0) throw ValidationError("problem needs at least one objective");
  if (!problem.evaluate) throw ValidationError("problem has no evaluator");
  for (size_t g = 0; g < problem.bounds.size(); ++g) {
    const GeneBounds& b = problem.bounds[g];
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || b.lower > b.upper) {
      throw ValidationError("gene " + std::to_string(g) + " has invalid bounds");
    }
  }

  Rng rng(seed);
  const size_t pop_size = static_cast<size_t>(params.population);
  const size_t archive_size = static_cast<size_t>(params.EffectiveArchiveSize());
  const size_t gene_count = problem.bounds.size();

  std::vector<Individual> population;
  population.reserve(pop_size);
  for (const auto& s : problem.seeds) {
    if (population.size() == pop_size) break;
    if (s.size() != gene_count) throw ValidationError("seed genotype has the wrong length");
    Individual ind;
    for (size_t g = 0; g < gene_count; ++g) ind.genes.push_back(Repair(s[g], problem.bounds[g]));
    population.push_back(std::move(ind));
  }
  while (population.size() < pop_size) {
    Individual ind;
    ind.genes.resize(gene_count);
    for (size_t g = 0; g < gene_count; ++g) {
      const GeneBounds& b = problem.bounds[g];
      ind.genes[g] = b.Range() > 0.0
                         ? Repair(std::uniform_real_distribution<double>(b.lower, b.upper)(rng), b)
                         : b.lower;
    }
    population.push_back(std::move(ind));
  }
  Evaluate(population, problem, params.threads);

  Spea2Result result;
  std::vector<Individual> archive;
  std::vector<std::vector<double>> last_signature;
  int stagnant = 0;
  for (int generation = 0;; ++generation) {
    std::vector<Individual> merged = population;
    merged.insert(merged.end(), archive.begin(), archive.end());
    AssignSpea2Fitness(merged);
    archive = SelectArchive(std::move(merged), archive_size);

    std::vector<double> best(problem.objective_count, std::numeric_limits<double>::infinity());
    for (const Individual& ind : archive) {
      for (size_t k = 0; k < best.size(); ++k) best[k] = std::min(best[k], ind.objectives[k]);
    }
    result.best_per_generation.push_back(best);
    if (observer) observer(generation, population, archive);
    result.generations_run = generation;

    auto signature = FrontSignature(archive);
    if (generation > 0 && signature == last_signature) {
      ++stagnant;
    } else {
      stagnant = 0;
    }
    last_signature = std::move(signature);
    if (generation >= params.generations) break;
    if (params.stagnation_generations > 0 && stagnant >= params.stagnation_generations) {
      result.stopped_early = true;
      break;
    }

    // Mating selection by binary tournament on the archive.
    std::uniform_int_distribution<size_t> pick(0, archive.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Individual> offspring;
    offspring.reserve(pop_size + 1);
    while (offspring.size() < pop_size) {
      auto tournament = [&]() -> const Individual& {
        const Individual& a = archive[pick(rng)];
        const Individual& b = archive[pick(rng)];
        return b.fitness < a.fitness ? b : a;
      };
      Individual c1{tournament().genes, {}, 0.0};
      Individual c2{tournament().genes, {}, 0.0};
      if (unit(rng) < params.crossover_rate) {
        BlendCrossover(c1.genes, c2.genes, problem.bounds, params.blend_alpha, rng);
      }
      Mutate(c1.genes, problem.bounds, params, rng);
      Mutate(c2.genes, problem.bounds, params, rng);
      offspring.push_back(std::move(c1));
      if (offspring.size() < pop_size) offspring.push_back(std::move(c2));
    }
    population = std::move(offspring);
    Evaluate(population, problem, params.threads);
  }

  result.archive = archive;
  for (const Individual& ind : archive) {
    if (ind.fitness < 1.0) result.front.push_back(ind);
  }
  return result;
}

}  // namespace mutualspace
