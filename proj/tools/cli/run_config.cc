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


#include "cli/run_config.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mutualspace/errors.h"

namespace mutualspace::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& what) {
  throw ValidationError("config: " + what);
}

double GetNumber(const json& value, const std::string& key) {
  if (!value.is_number()) Fail("'" + key + "' must be a number");
  return value.get<double>();
}

int GetInt(const json& value, const std::string& key) {
  if (!value.is_number_integer()) Fail("'" + key + "' must be an integer");
  return value.get<int>();
}

uint64_t GetSeed(const json& value, const std::string& key) {
  if (!value.is_number_unsigned()) Fail("'" + key + "' must be a non-negative integer");
  return value.get<uint64_t>();
}

void ApplyGaBlock(const json& block, const std::string& name, EvolutionParams& params,
                  std::optional<uint64_t>& seed) {
  if (!block.is_object()) Fail("'" + name + "' must be an object");
  for (const auto& [key, value] : block.items()) {
    const std::string path = name + "." + key;
    if (key == "population") {
      params.population = GetInt(value, path);
    } else if (key == "archive_size") {
      params.archive_size = GetInt(value, path);
    } else if (key == "generations") {
      params.generations = GetInt(value, path);
    } else if (key == "mutation_probability") {
      params.mutation_probability = GetNumber(value, path);
    } else if (key == "mutation_rate") {
      params.mutation_rate = GetNumber(value, path);
    } else if (key == "crossover_rate") {
      params.crossover_rate = GetNumber(value, path);
    } else if (key == "blend_alpha") {
      params.blend_alpha = GetNumber(value, path);
    } else if (key == "mutation_scale") {
      params.mutation_scale = GetNumber(value, path);
    } else if (key == "stagnation_generations") {
      params.stagnation_generations = GetInt(value, path);
    } else if (key == "threads") {
      params.threads = GetInt(value, path);
    } else if (key == "seed") {
      seed = GetSeed(value, path);
    } else {
      Fail("unknown key '" + path + "'");
    }
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

RunConfig RunConfig::Defaults() {
  const OptimizerConfig optimizer = OptimizerConfig::Defaults();
  RunConfig config;
  config.alignment = optimizer.alignment;
  config.rearrangement = optimizer.rearrangement;
  config.pareto = optimizer.rearrangement;
  config.step_ratio = optimizer.step_ratio;
  config.max_steps = optimizer.max_steps;
  config.penalty_base = optimizer.penalty_base;
  return config;
}

void RunConfig::Validate() const {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) Fail("'resolution' must be positive");
  try {
    alignment.Validate();
  } catch (const ValidationError& e) {
    Fail(std::string("alignment: ") + e.what());
  }
  try {
    rearrangement.Validate();
  } catch (const ValidationError& e) {
    Fail(std::string("rearrangement: ") + e.what());
  }
  try {
    pareto.Validate();
  } catch (const ValidationError& e) {
    Fail(std::string("pareto: ") + e.what());
  }
  if (!(step_ratio >= 1.0) || !std::isfinite(step_ratio)) Fail("'step_ratio' must be >= 1");
  if (max_steps < 0) Fail("'max_steps' must be >= 0");
  if (!(penalty_base > 0.0)) Fail("'penalty_base' must be positive");
}

OptimizerConfig RunConfig::ToOptimizerConfig(std::string_view mode) const {
  OptimizerConfig config;
  config.resolution = resolution;
  config.alignment = alignment;
  config.rearrangement = mode == "pareto" ? pareto : rearrangement;
  config.step_ratio = step_ratio;
  config.max_steps = max_steps;
  config.penalty_base = penalty_base;
  return config;
}

uint64_t RunConfig::SeedFor(std::string_view mode) const {
  const std::optional<uint64_t>* chosen = &alignment_seed;
  if (mode == "rearrange") chosen = &rearrangement_seed;
  if (mode == "pareto") chosen = &pareto_seed;
  return chosen->value_or(seed);
}

void ApplyConfigJson(RunConfig& config, std::string_view json_text,
                     const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "resolution") {
      config.resolution = GetNumber(value, key);
    } else if (key == "kind") {
      if (!value.is_string()) Fail("'kind' must be a string");
      config.kind = ParseSpaceKind(value.get<std::string>());
    } else if (key == "seed") {
      config.seed = GetSeed(value, key);
    } else if (key == "alignment") {
      ApplyGaBlock(value, key, config.alignment, config.alignment_seed);
    } else if (key == "rearrangement") {
      ApplyGaBlock(value, key, config.rearrangement, config.rearrangement_seed);
    } else if (key == "pareto") {
      ApplyGaBlock(value, key, config.pareto, config.pareto_seed);
    } else if (key == "step_ratio") {
      config.step_ratio = GetNumber(value, key);
    } else if (key == "max_steps") {
      config.max_steps = GetInt(value, key);
    } else if (key == "penalty_base") {
      config.penalty_base = GetNumber(value, key);
    } else if (key == "catalog") {
      if (!value.is_string()) Fail("'catalog' must be a path string");
      std::filesystem::path path = value.get<std::string>();
      config.catalog_path = path.is_relative() ? base_dir / path : path;
    } else if (key == "colors") {
      if (!value.is_object()) Fail("'colors' must be an object");
      for (const auto& [layer, color] : value.items()) {
        if (!color.is_string()) Fail("'colors." + layer + "' must be a string");
        std::string* slot = nullptr;
        if (layer == "non_standable") slot = &config.palette.non_standable;
        if (layer == "standable") slot = &config.palette.standable;
        if (layer == "sittable") slot = &config.palette.sittable;
        if (layer == "mutual") slot = &config.palette.mutual;
        if (!slot) Fail("unknown key 'colors." + layer + "'");
        *slot = color.get<std::string>();
      }
    } else if (key == "out") {
      if (!value.is_string()) Fail("'out' must be a path string");
      config.output_dir = value.get<std::string>();
    } else {
      Fail("unknown key '" + key + "'");
    }
  }
}

void ApplyConfigFile(RunConfig& config, const std::filesystem::path& path) {
  ApplyConfigJson(config, ReadFile(path), path.parent_path());
}

}  // namespace mutualspace::cli
