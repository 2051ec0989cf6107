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

#include "mutualspace/optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "mutualspace/errors.h"
#include "mutualspace/parallel.h"
#include "mutualspace/pareto.h"

namespace mutualspace {
namespace {

// Origin at the first boundary vertex, x along the first edge; carried
// along by any rigid motion of the room.
Pose2D LocalFrame(const Room& room) {
  const auto vertices = room.boundary.vertices();
  const Vec2 edge = vertices[1] - vertices[0];
  return {vertices[0].x, vertices[0].y, std::atan2(edge.y, edge.x)};
}

uint64_t StepSeed(uint64_t seed, uint64_t step) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (step + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void RequireRooms(std::span<const Room> rooms, size_t minimum) {
  if (rooms.size() < minimum) {
    throw ValidationError("need at least " + std::to_string(minimum) + " rooms, got " +
                          std::to_string(rooms.size()));
  }
}

// Bounding box of the true cells of a grid, in world coordinates.
std::optional<Box> TrueCellBounds(const OccupancyGrid& grid) {
  int i0 = grid.width(), j0 = grid.height(), i1 = -1, j1 = -1;
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      if (!grid.at(i, j)) continue;
      i0 = std::min(i0, i);
      i1 = std::max(i1, i);
      j0 = std::min(j0, j);
      j1 = std::max(j1, j);
    }
  }
  if (i1 < 0) return std::nullopt;
  const double r = grid.resolution();
  const Vec2 o = grid.origin();
  return Box{{o.x + i0 * r, o.y + j0 * r}, {o.x + (i1 + 1) * r, o.y + (j1 + 1) * r}};
}

}  // namespace

std::vector<Pose2D> AlignmentGenotype::AllPoses() const {
  std::vector<Pose2D> all;
  all.reserve(poses.size() + 1);
  all.push_back(Pose2D::Identity());
  all.insert(all.end(), poses.begin(), poses.end());
  return all;
}

OptimizerConfig OptimizerConfig::Defaults() {
  OptimizerConfig config;
  config.alignment.population = 100;
  config.alignment.generations = 300;
  config.rearrangement.population = 250;
  config.rearrangement.generations = 500;
  return config;
}

void OptimizerConfig::Validate() const {
  if (!(resolution > 0.0)) throw ValidationError("parameter 'resolution' must be positive");
  alignment.Validate();
  rearrangement.Validate();
  if (!(step_ratio > 1.0)) throw ValidationError("parameter 'step_ratio' must be > 1");
  if (max_steps < 0) throw ValidationError("parameter 'max_steps' must be >= 0");
  if (!(penalty_base > 0.0)) throw ValidationError("parameter 'penalty_base' must be positive");
  if (!(constraint_weight > 0.0)) {
    throw ValidationError("parameter 'constraint_weight' must be positive");
  }
}

double MutualArea(std::span<const OccupancyGrid* const> regions, std::span<const Pose2D> poses) {
  if (regions.empty()) throw ValidationError("mutual area needs at least one space");
  if (poses.size() != regions.size()) {
    throw ValidationError("mutual area needs one pose per space");
  }
  const OccupancyGrid& ref = *regions[0];
  const size_t m = regions.size();
  // Maps a cell center of space 0 into the local frame of space r.
  std::vector<Pose2D> to_local(m);
  std::vector<Vec2> step(m);
  for (size_t r = 1; r < m; ++r) {
    to_local[r] = poses[r].Inverse() * poses[0];
    step[r] = to_local[r].Rotate({ref.resolution(), 0.0});
  }
  std::vector<Vec2> q(m);
  size_t count = 0;
  for (int j = 0; j < ref.height(); ++j) {
    const Vec2 first = ref.CellCenter(0, j);
    for (size_t r = 1; r < m; ++r) q[r] = to_local[r].Apply(first);
    for (int i = 0; i < ref.width(); ++i) {
      if (ref.at(i, j)) {
        bool inside = true;
        for (size_t r = 1; r < m && inside; ++r) inside = regions[r]->Contains(q[r]);
        count += inside ? 1 : 0;
      }
      for (size_t r = 1; r < m; ++r) q[r] = q[r] + step[r];
    }
  }
  return static_cast<double>(count) * ref.resolution() * ref.resolution();
}

double MutualArea(std::span<const FunctionalSpace> spaces, std::span<const Pose2D> poses) {
  std::vector<const OccupancyGrid*> regions;
  for (const FunctionalSpace& s : spaces) regions.push_back(&s.region);
  return MutualArea(regions, poses);
}

OccupancyGrid MutualRegion(std::span<const OccupancyGrid* const> regions,
                           std::span<const Pose2D> poses) {
  if (regions.empty()) throw ValidationError("mutual region needs at least one space");
  if (poses.size() != regions.size()) {
    throw ValidationError("mutual region needs one pose per space");
  }
  const OccupancyGrid& ref = *regions[0];
  OccupancyGrid out = OccupancyGrid::EmptyLike(ref);
  for (int j = 0; j < ref.height(); ++j) {
    for (int i = 0; i < ref.width(); ++i) {
      if (!ref.at(i, j)) continue;
      const Vec2 p = poses[0].Apply(ref.CellCenter(i, j));
      bool inside = true;
      for (size_t r = 1; r < regions.size() && inside; ++r) {
        inside = TransformedMembership(*regions[r], poses[r], p);
      }
      if (inside) out.set(i, j, true);
    }
  }
  return out;
}

MutualSpaceProblem::MutualSpaceProblem(std::vector<Room> rooms, SpaceKind kind,
                                       const OptimizerConfig& config, bool include_layout)
    : rooms_(std::move(rooms)), kind_(kind), config_(config) {
  RequireRooms(rooms_, 1);
  for (const Room& room : rooms_) {
    frames_.push_back(LocalFrame(room));
    local_rooms_.push_back(TransformRoom(room, frames_.back().Inverse()));
  }
  for (const Room& room : local_rooms_) {
    auto raster =
        std::make_shared<const RoomRaster>(room, EffectiveResolution(room, config.resolution));
    const auto footprints = MovedFootprints(room, nullptr);
    base_spaces_.push_back(kind == SpaceKind::kStandable ? StandableRegion(*raster, footprints)
                                                         : SittableRegion(*raster, footprints));
    centers_.push_back(room.boundary.Bounds().Center());
    rasters_.push_back(std::move(raster));
  }
  const double ref_diag = local_rooms_[0].boundary.Bounds().Diagonal();
  for (size_t r = 1; r < rooms_.size(); ++r) {
    const double reach = 0.5 * (ref_diag + local_rooms_[r].boundary.Bounds().Diagonal());
    bounds_.push_back({-reach, reach, false});
    bounds_.push_back({-reach, reach, false});
    bounds_.push_back({-std::numbers::pi, std::numbers::pi, true});
  }
  if (!include_layout) return;
  for (size_t r = 0; r < rooms_.size(); ++r) {
    const SceneGraph graph = BuildSceneGraph(local_rooms_[r], rasters_[r]->resolution());
    for (size_t k = 0; k < rooms_[r].objects.size(); ++k) {
      const MovementBounds mb = GetMovementBounds(graph, rooms_[r].objects[k].id);
      if (mb.u.Length() <= 0.0 && mb.v.Length() <= 0.0) continue;
      movable_.push_back({r, k, mb});
      bounds_.push_back({mb.u.lo, mb.u.hi, false});
      bounds_.push_back({mb.v.lo, mb.v.hi, false});
    }
  }
}

Pose2D MutualSpaceProblem::LocalPoseFromGenes(size_t room, double u, double v,
                                              double theta) const {
  if (room == 0) return Pose2D::Identity();
  const Pose2D rotation(0.0, 0.0, theta);
  const Vec2 t = centers_[0] + Vec2{u, v} - rotation.Apply(centers_[room]);
  return {t.x, t.y, theta};
}

Pose2D MutualSpaceProblem::PoseFromGenes(size_t room, double u, double v, double theta) const {
  if (room == 0) return Pose2D::Identity();
  return frames_[0] * LocalPoseFromGenes(room, u, v, theta) * frames_[room].Inverse();
}

std::vector<Pose2D> MutualSpaceProblem::LocalPoses(std::span<const double> genes) const {
  std::vector<Pose2D> poses = {Pose2D::Identity()};
  for (size_t r = 1; r < rooms_.size(); ++r) {
    const size_t g = 3 * (r - 1);
    poses.push_back(LocalPoseFromGenes(r, genes[g], genes[g + 1], genes[g + 2]));
  }
  return poses;
}

AlignmentGenotype MutualSpaceProblem::DecodeAlignment(std::span<const double> genes) const {
  AlignmentGenotype out;
  for (size_t r = 1; r < rooms_.size(); ++r) {
    const size_t g = 3 * (r - 1);
    out.poses.push_back(PoseFromGenes(r, genes[g], genes[g + 1], genes[g + 2]));
  }
  return out;
}

LayoutDelta MutualSpaceProblem::LocalDelta(std::span<const double> genes) const {
  LayoutDelta delta = LayoutDelta::Zero(rooms_.size());
  const size_t offset = pose_gene_count();
  for (size_t q = 0; q < movable_.size(); ++q) {
    const double du = genes[offset + 2 * q];
    const double dv = genes[offset + 2 * q + 1];
    if (du == 0.0 && dv == 0.0) continue;
    const MovableGene& m = movable_[q];
    delta.rooms[m.room][rooms_[m.room].objects[m.object].id] = m.bounds.ToWorld(du, dv);
  }
  return delta;
}

LayoutDelta MutualSpaceProblem::DecodeDelta(std::span<const double> genes) const {
  LayoutDelta delta = LocalDelta(genes);
  for (size_t r = 0; r < rooms_.size(); ++r) {
    for (auto& [id, t] : delta.rooms[r]) t = frames_[r].Rotate(t);
  }
  return delta;
}

std::vector<double> MutualSpaceProblem::Encode(const AlignmentGenotype& alignment) const {
  if (alignment.poses.size() + 1 != rooms_.size()) {
    throw ValidationError("alignment has the wrong number of poses");
  }
  std::vector<double> genes(gene_count(), 0.0);
  for (size_t r = 1; r < rooms_.size(); ++r) {
    const Pose2D pose = frames_[0].Inverse() * alignment.poses[r - 1] * frames_[r];
    const Pose2D rotation(0.0, 0.0, pose.theta());
    const Vec2 uv = Vec2{pose.tx(), pose.ty()} + rotation.Apply(centers_[r]) - centers_[0];
    genes[3 * (r - 1)] = uv.x;
    genes[3 * (r - 1) + 1] = uv.y;
    genes[3 * (r - 1) + 2] = pose.theta();
  }
  return genes;
}

std::vector<OccupancyGrid> MutualSpaceProblem::SpacesFor(const LayoutDelta& local_delta,
                                                         bool& feasible, double& penalty) const {
  feasible = true;
  penalty = 0.0;
  for (size_t r = 0; r < rooms_.size(); ++r) {
    if (local_delta.rooms[r].empty()) continue;
    const int violations = CountLayoutViolations(local_rooms_[r], local_delta.rooms[r]);
    if (violations > 0) {
      feasible = false;
      penalty += config_.penalty_base * violations;
    }
  }
  std::vector<OccupancyGrid> moved(rooms_.size());
  if (!feasible) return moved;
  for (size_t r = 0; r < rooms_.size(); ++r) {
    if (local_delta.rooms[r].empty()) continue;
    const auto footprints = MovedFootprints(local_rooms_[r], &local_delta.rooms[r]);
    moved[r] = kind_ == SpaceKind::kStandable ? StandableRegion(*rasters_[r], footprints)
                                              : SittableRegion(*rasters_[r], footprints);
  }
  return moved;
}

ObjectiveVector MutualSpaceProblem::Evaluate(std::span<const double> genes) const {
  if (genes.size() != gene_count()) throw ValidationError("genotype has the wrong length");
  const std::vector<Pose2D> poses = LocalPoses(genes);
  const LayoutDelta delta = LocalDelta(genes);
  ObjectiveVector out;
  out.total_effort = TotalEffort(rooms_, delta);
  bool feasible = true;
  const std::vector<OccupancyGrid> moved = SpacesFor(delta, feasible, out.penalty);
  if (!feasible) return out;
  std::vector<const OccupancyGrid*> regions;
  for (size_t r = 0; r < rooms_.size(); ++r) {
    regions.push_back(delta.rooms[r].empty() ? &base_spaces_[r] : &moved[r]);
  }
  out.mutual_area = MutualArea(regions, poses);
  return out;
}

OccupancyGrid MutualSpaceProblem::Region(std::span<const double> genes) const {
  const std::vector<Pose2D> poses = LocalPoses(genes);
  const LayoutDelta delta = LocalDelta(genes);
  bool feasible = true;
  double penalty = 0.0;
  const std::vector<OccupancyGrid> moved = SpacesFor(delta, feasible, penalty);
  if (!feasible) return OccupancyGrid::EmptyLike(base_spaces_[0]);
  std::vector<const OccupancyGrid*> regions;
  for (size_t r = 0; r < rooms_.size(); ++r) {
    regions.push_back(delta.rooms[r].empty() ? &base_spaces_[r] : &moved[r]);
  }
  return MutualRegion(regions, poses);
}

AlignmentResult AlignRooms(std::span<const Room> rooms, SpaceKind kind,
                           const OptimizerConfig& config, uint64_t seed) {
  RequireRooms(rooms, 2);
  config.Validate();
  const MutualSpaceProblem problem({rooms.begin(), rooms.end()}, kind, config, false);
  Spea2Problem search;
  search.bounds = problem.bounds();
  search.objective_count = 1;
  search.evaluate = [&problem](std::span<const double> genes) {
    return std::vector<double>{-problem.Evaluate(genes).mutual_area};
  };
  search.seeds.push_back(std::vector<double>(problem.gene_count(), 0.0));
  const Spea2Result run = RunSpea2(search, config.alignment, seed);

  const Individual* best = &run.front.front();
  for (const Individual& ind : run.front) {
    if (ind.objectives[0] < best->objectives[0]) best = &ind;
  }
  AlignmentResult result;
  result.alignment = problem.DecodeAlignment(best->genes);
  result.mutual_area = problem.Evaluate(best->genes).mutual_area;
  result.mutual_region = problem.Region(best->genes);
  result.region_frame = problem.frame(0);
  result.generations_run = run.generations_run;
  double best_so_far = 0.0;
  for (const auto& row : run.best_per_generation) {
    best_so_far = std::max(best_so_far, -row[0]);
    result.generation_trace.push_back(best_so_far);
  }
  return result;
}

std::vector<StepSolution> RearrangeStepwise(std::span<const Room> rooms, SpaceKind kind,
                                            const OptimizerConfig& config, uint64_t seed) {
  RequireRooms(rooms, 2);
  config.Validate();
  const AlignmentResult aligned = AlignRooms(rooms, kind, config, seed);

  std::vector<StepSolution> steps;
  StepSolution first;
  first.step = 0;
  first.objectives = {aligned.mutual_area, 0.0, 0.0};
  first.delta = LayoutDelta::Zero(rooms.size());
  first.alignment = aligned.alignment;
  first.step_effort_per_room.assign(rooms.size(), 0.0);
  steps.push_back(first);

  std::vector<Room> current(rooms.begin(), rooms.end());
  for (int s = 1; s <= config.max_steps; ++s) {
    const StepSolution& previous = steps.back();
    const double target = config.step_ratio * previous.objectives.mutual_area;
    const MutualSpaceProblem problem(current, kind, config, true);
    if (problem.movable().empty()) break;

    Spea2Problem search;
    search.bounds = problem.bounds();
    search.objective_count = 1;
    const double weight = config.constraint_weight;
    search.evaluate = [&problem, target, weight](std::span<const double> genes) {
      const ObjectiveVector ov = problem.Evaluate(genes);
      const double shortfall = std::max(0.0, target - ov.mutual_area);
      return std::vector<double>{ov.total_effort + ov.penalty + weight * shortfall};
    };
    search.seeds.push_back(problem.Encode(previous.alignment));
    const Spea2Result run = RunSpea2(search, config.rearrangement, StepSeed(seed, s));

    const Individual* best = &run.front.front();
    for (const Individual& ind : run.front) {
      if (ind.objectives[0] < best->objectives[0]) best = &ind;
    }
    const ObjectiveVector ov = problem.Evaluate(best->genes);
    if (ov.penalty > 0.0 || ov.mutual_area < target) break;

    const LayoutDelta step_delta = problem.DecodeDelta(best->genes);
    StepSolution next;
    next.step = s;
    next.alignment = problem.DecodeAlignment(best->genes);
    next.delta = previous.delta;
    next.step_effort_per_room.assign(rooms.size(), 0.0);
    for (size_t r = 0; r < rooms.size(); ++r) {
      for (const auto& [id, t] : step_delta.rooms[r]) {
        next.delta.rooms[r][id] = next.delta.rooms[r][id] + t;
        next.step_effort_per_room[r] += Effort(current[r].objects[*current[r].IndexOf(id)], t);
      }
      current[r] = ApplyDelta(current[r], step_delta.rooms[r]);
    }
    next.objectives = {ov.mutual_area, previous.objectives.total_effort + ov.total_effort, 0.0};
    steps.push_back(std::move(next));
  }
  return steps;
}

ParetoFront OptimizePareto(std::span<const Room> rooms, SpaceKind kind,
                           const OptimizerConfig& config, uint64_t seed) {
  RequireRooms(rooms, 2);
  config.Validate();
  const AlignmentResult aligned = AlignRooms(rooms, kind, config, seed);

  ParetoFront front;
  front.kind = kind;
  front.seed = seed;
  front.params = config.rearrangement;

  std::vector<Solution> candidates;
  candidates.push_back(
      {{aligned.mutual_area, 0.0, 0.0}, aligned.alignment, LayoutDelta::Zero(rooms.size())});

  const MutualSpaceProblem problem({rooms.begin(), rooms.end()}, kind, config, true);
  if (!problem.movable().empty()) {
    Spea2Problem search;
    search.bounds = problem.bounds();
    search.objective_count = 2;
    search.evaluate = [&problem](std::span<const double> genes) {
      const ObjectiveVector ov = problem.Evaluate(genes);
      return std::vector<double>{-ov.mutual_area, ov.total_effort + ov.penalty};
    };
    search.seeds.push_back(problem.Encode(aligned.alignment));

    // Best zero-effort genotype seen anywhere in the run.
    std::vector<double> zero_effort_best;
    double zero_effort_area = -1.0;
    auto observer = [&](int, std::span<const Individual> population,
                        std::span<const Individual> archive) {
      for (auto group : {population, archive}) {
        for (const Individual& ind : group) {
          if (ind.objectives[1] == 0.0 && -ind.objectives[0] > zero_effort_area) {
            zero_effort_area = -ind.objectives[0];
            zero_effort_best = ind.genes;
          }
        }
      }
    };
    const Spea2Result run =
        RunSpea2(search, config.rearrangement, StepSeed(seed, 0x5eed), observer);
    front.generations = run.generations_run;

    auto add = [&](std::span<const double> genes) {
      const ObjectiveVector ov = problem.Evaluate(genes);
      if (ov.penalty > 0.0) return;
      candidates.push_back({ov, problem.DecodeAlignment(genes), problem.DecodeDelta(genes)});
    };
    if (!zero_effort_best.empty()) add(zero_effort_best);
    for (const Individual& ind : run.front) add(ind.genes);
  }

  std::vector<std::vector<double>> points;
  for (const Solution& c : candidates) {
    points.push_back({-c.objectives.mutual_area, c.objectives.total_effort});
  }
  std::vector<std::vector<double>> seen;
  for (size_t i : NonDominatedIndices(points)) {
    if (std::find(seen.begin(), seen.end(), points[i]) != seen.end()) continue;
    seen.push_back(points[i]);
    front.members.push_back(candidates[i]);
  }
  std::stable_sort(front.members.begin(), front.members.end(),
                   [](const Solution& a, const Solution& b) {
                     if (a.objectives.mutual_area != b.objectives.mutual_area) {
                       return a.objectives.mutual_area < b.objectives.mutual_area;
                     }
                     return a.objectives.total_effort < b.objectives.total_effort;
                   });
  return front;
}

BruteForceResult BruteForceAlign(std::span<const Room> rooms, SpaceKind kind,
                                 const OptimizerConfig& config, double translation_step,
                                 double rotation_step, size_t max_evaluations) {
  if (rooms.size() != 2) {
    throw ValidationError("brute-force alignment takes exactly 2 rooms, got " +
                          std::to_string(rooms.size()));
  }
  if (!(translation_step > 0.0) || !(rotation_step > 0.0)) {
    throw ValidationError("brute-force steps must be positive");
  }
  const MutualSpaceProblem problem({rooms.begin(), rooms.end()}, kind, config, false);
  const double reach = problem.bounds()[0].upper;
  const int nu = static_cast<int>(std::floor(reach / translation_step + 1e-9));
  const int k_lo = static_cast<int>(std::ceil(-std::numbers::pi / rotation_step - 1e-9));
  const int k_hi = static_cast<int>(std::floor((std::numbers::pi - 1e-12) / rotation_step));
  const size_t per_axis = static_cast<size_t>(2 * nu + 1);
  const size_t angles = static_cast<size_t>(k_hi - k_lo + 1);
  const size_t total = per_axis * per_axis * angles;
  if (total > max_evaluations) {
    throw ValidationError("brute-force grid has " + std::to_string(total) +
                          " evaluations, above the cap of " + std::to_string(max_evaluations));
  }

  const OccupancyGrid& ref = problem.BaseSpace(0);
  const OccupancyGrid& other = problem.BaseSpace(1);
  const std::optional<Box> ref_box = TrueCellBounds(ref);
  const std::optional<Box> other_box = TrueCellBounds(other);

  struct Best {
    double area = -1.0;
    double u = 0.0, v = 0.0, theta = 0.0;
  };
  std::vector<Best> per_angle(angles);
  ParallelFor(angles, config.alignment.threads, [&](size_t a) {
    const double theta = (k_lo + static_cast<int>(a)) * rotation_step;
    Best best;
    best.theta = theta;
    // Extent of room 1's space at (u, v) = 0, to skip disjoint offsets.
    std::optional<Box> moved;
    if (ref_box && other_box) {
      const Pose2D base = problem.LocalPoseFromGenes(1, 0.0, 0.0, theta);
      Box b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
            {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
      for (Vec2 c : {other_box->min, Vec2{other_box->max.x, other_box->min.y}, other_box->max,
                     Vec2{other_box->min.x, other_box->max.y}}) {
        const Vec2 p = base.Apply(c);
        b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
        b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
      }
      moved = b;
    }
    const std::array<const OccupancyGrid*, 2> regions = {&ref, &other};
    for (int iu = -nu; iu <= nu; ++iu) {
      const double u = iu * translation_step;
      for (int iv = -nu; iv <= nu; ++iv) {
        const double v = iv * translation_step;
        double area = 0.0;
        const bool disjoint =
            !moved || moved->max.x + u <= ref_box->min.x || moved->min.x + u >= ref_box->max.x ||
            moved->max.y + v <= ref_box->min.y || moved->min.y + v >= ref_box->max.y;
        if (!disjoint) {
          const std::array<Pose2D, 2> poses = {Pose2D::Identity(),
                                               problem.LocalPoseFromGenes(1, u, v, theta)};
          area = MutualArea(regions, poses);
        }
        if (area > best.area) best = {area, u, v, theta};
      }
    }
    per_angle[a] = best;
  });

  Best best = per_angle.front();
  for (const Best& b : per_angle) {
    if (b.area > best.area) best = b;
  }
  BruteForceResult result;
  result.alignment.poses.push_back(problem.PoseFromGenes(1, best.u, best.v, best.theta));
  result.mutual_area = std::max(best.area, 0.0);
  result.evaluations = total;
  return result;
}

}  // namespace mutualspace
