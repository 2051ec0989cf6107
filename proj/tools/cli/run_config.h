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


#ifndef MUTUALSPACE_CLI_RUN_CONFIG_H_
#define MUTUALSPACE_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "cli/svg.h"
#include "mutualspace/functional_spaces.h"
#include "mutualspace/optimizer.h"
#include "mutualspace/spea2.h"

namespace mutualspace::cli {

inline constexpr const char* kConfigEnvVar = "MUTUALSPACE_CONFIG";

// Everything a command needs besides the scene. Each search mode has its own
// GA block; a block seed, when set, replaces the run seed for that mode.
struct RunConfig {
  double resolution = kDefaultResolution;
  SpaceKind kind = SpaceKind::kStandable;
  uint64_t seed = 1;
  EvolutionParams alignment;
  EvolutionParams rearrangement;
  EvolutionParams pareto;
  std::optional<uint64_t> alignment_seed;
  std::optional<uint64_t> rearrangement_seed;
  std::optional<uint64_t> pareto_seed;
  double step_ratio = 1.10;
  int max_steps = 20;
  double penalty_base = kDefaultPenaltyBase;
  std::optional<std::filesystem::path> catalog_path;
  std::filesystem::path output_dir = "out";
  Palette palette;

  static RunConfig Defaults();

  // Rates in [0, 1], population >= 2, resolution > 0, and so on. Throws
  // ValidationError naming the field.
  void Validate() const;

  // Optimizer settings for a mode; "pareto" uses the pareto GA block.
  OptimizerConfig ToOptimizerConfig(std::string_view mode) const;
  uint64_t SeedFor(std::string_view mode) const;
};

// Applies a JSON config document on top of `config`. Unknown keys are
// rejected. Relative catalog paths resolve against `base_dir`.
void ApplyConfigJson(RunConfig& config, std::string_view json_text,
                     const std::filesystem::path& base_dir);
void ApplyConfigFile(RunConfig& config, const std::filesystem::path& path);

}  // namespace mutualspace::cli

#endif  // MUTUALSPACE_CLI_RUN_CONFIG_H_
