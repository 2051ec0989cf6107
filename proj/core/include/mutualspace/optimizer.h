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

#ifndef MUTUALSPACE_OPTIMIZER_H_
#define MUTUALSPACE_OPTIMIZER_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "mutualspace/functional_spaces.h"
#include "mutualspace/geometry.h"
#include "mutualspace/layout.h"
#include "mutualspace/occupancy_grid.h"
#include "mutualspace/scene_graph.h"
#include "mutualspace/scene_model.h"
#include "mutualspace/spea2.h"

namespace mutualspace {

struct ObjectiveVector {
  double mutual_area = 0.0;   // K, m^2
  double total_effort = 0.0;  // E, weight x meters
  double penalty = 0.0;       // collision penalty, kept apart from E

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// Poses of rooms 1..m-1 in the frame of room 0, which stays fixed.
struct AlignmentGenotype {
  std::vector<Pose2D> poses;

  // All m poses, identity first.
  std::vector<Pose2D> AllPoses() const;
};

struct Solution {
  ObjectiveVector objectives;
  AlignmentGenotype alignment;
  LayoutDelta delta;
};

struct ParetoFront {
  // Mutually non-dominated under (max K, min E), sorted by K ascending.
  std::vector<Solution> members;
  SpaceKind kind = SpaceKind::kStandable;
  uint64_t seed = 0;
  int generations = 0;
  EvolutionParams params;
};

struct StepSolution {
  int step = 0;
  // E accumulates the effort of every step so far.
  ObjectiveVector objectives;
  // Net displacement of every moved object from the input layout.
  LayoutDelta delta;
  AlignmentGenotype alignment;
  // Effort spent in this step alone, per room.
  std::vector<double> step_effort_per_room;
};

struct OptimizerConfig {
  double resolution = kDefaultResolution;
  EvolutionParams alignment;
  EvolutionParams rearrangement;
  double step_ratio = 1.10;
  int max_steps = 20;
  double penalty_base = kDefaultPenaltyBase;
  // Weight on the K shortfall in each rearrangement step, per m^2.
  double constraint_weight = 1e4;

  static OptimizerConfig Defaults();
  void Validate() const;
};

// Area of the set of reference-frame points that lie in every moved space
// pose_i(space_i). Sampled on the cells of space 0 mapped through pose 0.
double MutualArea(std::span<const FunctionalSpace> spaces, std::span<const Pose2D> poses);
double MutualArea(std::span<const OccupancyGrid* const> regions, std::span<const Pose2D> poses);

// The mutual region on space 0's lattice, for pose 0 = identity.
OccupancyGrid MutualRegion(std::span<const OccupancyGrid* const> regions,
                           std::span<const Pose2D> poses);

// Genotype layout shared by every search mode: (u, v, theta) per room after
// the first, then (du, dv) per movable object along its local axes. Room i's
// pose rotates about its bounding-box center and places that center at
// room 0's center offset by (u, v).
//
// Each room is rasterized in its own frame: origin at the first boundary
// vertex, x along the first edge. A rigid motion shared by all rooms moves
// the frames with them, so rasters, genes and K are unchanged by it. Decoded
// poses and deltas are in world coordinates.
class MutualSpaceProblem {
 public:
  MutualSpaceProblem(std::vector<Room> rooms, SpaceKind kind, const OptimizerConfig& config,
                     bool include_layout);

  struct MovableGene {
    size_t room = 0;
    size_t object = 0;
    MovementBounds bounds;
  };

  const std::vector<GeneBounds>& bounds() const { return bounds_; }
  size_t gene_count() const { return bounds_.size(); }
  const std::vector<Room>& rooms() const { return rooms_; }
  const std::vector<MovableGene>& movable() const { return movable_; }
  size_t pose_gene_count() const { return 3 * (rooms_.size() - 1); }

  // Maps room-local coordinates to world coordinates.
  const Pose2D& frame(size_t room) const { return frames_[room]; }

  // World pose of room `room` in room 0's frame.
  Pose2D PoseFromGenes(size_t room, double u, double v, double theta) const;
  // The same pose between the local frames of `room` and room 0.
  Pose2D LocalPoseFromGenes(size_t room, double u, double v, double theta) const;
  AlignmentGenotype DecodeAlignment(std::span<const double> genes) const;
  LayoutDelta DecodeDelta(std::span<const double> genes) const;
  std::vector<double> Encode(const AlignmentGenotype& alignment) const;

  // Evaluates K, E and penalty. Infeasible layouts (penalty > 0) get K = 0.
  ObjectiveVector Evaluate(std::span<const double> genes) const;
  // Mutual region for a genotype on room 0's local lattice; frame(0) maps
  // it into room 0's coordinates.
  OccupancyGrid Region(std::span<const double> genes) const;

  // Unmoved space of `room` on its local lattice.
  const OccupancyGrid& BaseSpace(size_t room) const { return base_spaces_[room]; }

 private:
  std::vector<Pose2D> LocalPoses(std::span<const double> genes) const;
  LayoutDelta LocalDelta(std::span<const double> genes) const;
  std::vector<OccupancyGrid> SpacesFor(const LayoutDelta& local_delta, bool& feasible,
                                       double& penalty) const;

  std::vector<Room> rooms_;
  std::vector<Pose2D> frames_;
  std::vector<Room> local_rooms_;
  SpaceKind kind_;
  OptimizerConfig config_;
  std::vector<std::shared_ptr<const RoomRaster>> rasters_;
  std::vector<OccupancyGrid> base_spaces_;
  std::vector<Vec2> centers_;
  std::vector<GeneBounds> bounds_;
  std::vector<MovableGene> movable_;
};

struct AlignmentResult {
  AlignmentGenotype alignment;
  // On room 0's local lattice; `region_frame` maps it into room 0's
  // coordinates.
  OccupancyGrid mutual_region;
  Pose2D region_frame;
  double mutual_area = 0.0;
  // Best K found so far at each generation (non-decreasing).
  std::vector<double> generation_trace;
  int generations_run = 0;
};

// Single-objective search over room poses maximizing K. Needs >= 2 rooms.
AlignmentResult AlignRooms(std::span<const Room> rooms, SpaceKind kind,
                           const OptimizerConfig& config, uint64_t seed);

// Greedy rearrangement: step 0 is the pure alignment; each later step moves
// furniture (from the previous step's layout) and re-optimizes poses to
// minimize added effort subject to K >= step_ratio * K(previous). Stops at
// the first step that misses its target.
std::vector<StepSolution> RearrangeStepwise(std::span<const Room> rooms, SpaceKind kind,
                                            const OptimizerConfig& config, uint64_t seed);

// One bi-objective run (max K, min E) over poses and furniture moves.
ParetoFront OptimizePareto(std::span<const Room> rooms, SpaceKind kind,
                           const OptimizerConfig& config, uint64_t seed);

struct BruteForceResult {
  AlignmentGenotype alignment;
  double mutual_area = 0.0;
  size_t evaluations = 0;
};

inline constexpr size_t kDefaultBruteForceCap = 1'000'000;

// Exhaustive grid over room 1's pose parameters (u, v, theta) for exactly
// two rooms. Throws when the grid exceeds `max_evaluations`.
BruteForceResult BruteForceAlign(std::span<const Room> rooms, SpaceKind kind,
                                 const OptimizerConfig& config, double translation_step,
                                 double rotation_step,
                                 size_t max_evaluations = kDefaultBruteForceCap);

}  // namespace mutualspace

#endif  // MUTUALSPACE_OPTIMIZER_H_
