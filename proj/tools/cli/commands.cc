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


#include "cli/commands.h"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mutualspace/errors.h"
#include "mutualspace/functional_spaces.h"
#include "mutualspace/layout.h"
#include "mutualspace/optimizer.h"

namespace mutualspace::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

void WriteText(const fs::path& path, const std::string& text, WrittenFiles& written) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  written.push_back(path);
}

void WriteJson(const fs::path& path, const Json& doc, WrittenFiles& written) {
  WriteText(path, doc.dump(2) + "\n", written);
}

// Room ids become file names; anything outside [A-Za-z0-9._-] maps to '_'.
std::string FileStem(std::string_view id) {
  std::string stem;
  for (const char c : id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '.' || c == '_' || c == '-';
    stem += safe ? c : '_';
  }
  if (stem.empty() || stem == "." || stem == "..") stem = "_" + stem;
  return stem;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<RoomRaster> MakeRasters(const Scene& scene, const RunConfig& config) {
  std::vector<RoomRaster> rasters;
  rasters.reserve(scene.rooms.size());
  for (const Room& room : scene.rooms) {
    rasters.emplace_back(room, EffectiveResolution(room, config.resolution));
  }
  return rasters;
}

void RequireRooms(const Scene& scene, size_t count, std::string_view command) {
  if (scene.rooms.size() < count) {
    throw ValidationError(fmt::format("scene: '{}' needs at least {} rooms, got {}", command,
                                      count, scene.rooms.size()));
  }
}

Json PoseJson(const Pose2D& pose) {
  return Json{{"tx", pose.tx()}, {"ty", pose.ty()}, {"theta_deg", RadToDeg(pose.theta())}};
}

std::string PoseListing(const Scene& scene, const AlignmentGenotype& alignment) {
  const std::vector<Pose2D> poses = alignment.AllPoses();
  std::string text;
  for (size_t r = 0; r < poses.size(); ++r) {
    text += fmt::format("{}{}:{:.6f}:{:.6f}:{:.4f}", r ? ";" : "", scene.rooms[r].id,
                        poses[r].tx(), poses[r].ty(), RadToDeg(poses[r].theta()));
  }
  return text;
}

std::string DeltaListing(const Scene& scene, const LayoutDelta& delta) {
  std::string text;
  for (size_t r = 0; r < delta.rooms.size(); ++r) {
    for (const auto& [id, t] : delta.rooms[r]) {
      if (Norm(t) == 0.0) continue;
      text += fmt::format("{}{}/{}:{:.6f}:{:.6f}", text.empty() ? "" : ";", scene.rooms[r].id, id,
                          t.x, t.y);
    }
  }
  return text;
}

Json MovesJson(const Room& room, const RoomDelta& delta) {
  Json moves = Json::array();
  for (const auto& [id, t] : delta) {
    if (Norm(t) == 0.0) continue;
    const auto index = room.IndexOf(id);
    const double weight = index ? room.objects[*index].weight : 0.0;
    moves.push_back({{"object", id},
                     {"dx", t.x},
                     {"dy", t.y},
                     {"distance_m", Norm(t)},
                     {"effort", weight * Norm(t)}});
  }
  return moves;
}

// Spaces, mutual region and panels for one layout of the scene.
struct LayoutRender {
  std::vector<FunctionalSpace> standable;
  std::vector<FunctionalSpace> sittable;
  OccupancyGrid mutual;
  std::vector<std::vector<OrientedRect>> original;
  std::vector<std::vector<OrientedRect>> moved;
};

LayoutRender RenderLayout(const std::vector<RoomRaster>& rasters, SpaceKind kind,
                          const LayoutDelta& delta, std::span<const Pose2D> poses) {
  LayoutRender render;
  std::vector<const OccupancyGrid*> regions;
  for (size_t r = 0; r < rasters.size(); ++r) {
    const RoomDelta* room_delta = r < delta.rooms.size() ? &delta.rooms[r] : nullptr;
    render.standable.push_back(StandableSpace(rasters[r], room_delta));
    render.sittable.push_back(RoomSittableSpace(rasters[r], room_delta));
    render.original.push_back(MovedFootprints(rasters[r].room(), nullptr));
    render.moved.push_back(MovedFootprints(rasters[r].room(), room_delta));
  }
  for (size_t r = 0; r < rasters.size(); ++r) {
    regions.push_back(kind == SpaceKind::kStandable ? &render.standable[r].region
                                                    : &render.sittable[r].region);
  }
  render.mutual = MutualRegion(regions, poses);
  return render;
}

std::vector<RoomPanel> Panels(const std::vector<RoomRaster>& rasters, const LayoutRender& render,
                              std::span<const Pose2D> poses,
                              const std::vector<std::string>& captions) {
  std::vector<RoomPanel> panels;
  for (size_t r = 0; r < rasters.size(); ++r) {
    RoomPanel panel;
    panel.room = &rasters[r].room();
    panel.floor = &rasters[r].floor();
    panel.standable = &render.standable[r].region;
    panel.sittable = &render.sittable[r].region;
    panel.mutual = &render.mutual;
    panel.pose = poses[r];
    panel.original_footprints = render.original[r];
    panel.footprints = render.moved[r];
    panel.caption = captions[r];
    panels.push_back(std::move(panel));
  }
  return panels;
}

Json SolutionJson(const Scene& scene, const Solution& solution) {
  const std::vector<Pose2D> poses = solution.alignment.AllPoses();
  Json rooms = Json::array();
  for (size_t r = 0; r < scene.rooms.size(); ++r) {
    const RoomDelta empty;
    const RoomDelta& delta = r < solution.delta.rooms.size() ? solution.delta.rooms[r] : empty;
    rooms.push_back({{"id", scene.rooms[r].id},
                     {"pose", PoseJson(poses[r])},
                     {"moves", MovesJson(scene.rooms[r], delta)}});
  }
  return Json{{"mutual_area_m2", solution.objectives.mutual_area},
              {"total_effort", solution.objectives.total_effort},
              {"penalty", solution.objectives.penalty},
              {"rooms", std::move(rooms)}};
}

}  // namespace

WrittenFiles CmdSpaces(const Scene& scene, const RunConfig& config) {
  RequireRooms(scene, 1, "spaces");
  WrittenFiles written;
  const std::vector<RoomRaster> rasters = MakeRasters(scene, config);
  Json rooms = Json::array();
  for (const RoomRaster& raster : rasters) {
    const Room& room = raster.room();
    const FunctionalSpace standable = StandableSpace(raster);
    const FunctionalSpace sittable = RoomSittableSpace(raster);
    Json objects = Json::array();
    for (const FurnitureObject& object : room.objects) {
      objects.push_back({{"id", object.id},
                         {"label", object.label},
                         {"sittable_area_m2", ObjectSittableArea(raster, object.id).Area()}});
    }
    rooms.push_back({{"id", room.id},
                     {"resolution", raster.resolution()},
                     {"floor_area_m2", raster.floor().Area()},
                     {"standable_area_m2", standable.region.Area()},
                     {"sittable_area_m2", sittable.region.Area()},
                     {"objects", std::move(objects)}});
    RoomPanel panel;
    panel.room = &room;
    panel.floor = &raster.floor();
    panel.standable = &standable.region;
    panel.sittable = &sittable.region;
    panel.footprints = MovedFootprints(room, nullptr);
    panel.caption = fmt::format("{}: standable {:.2f} m^2, sittable {:.2f} m^2", room.id,
                                standable.region.Area(), sittable.region.Area());
    const RoomPanel panels[] = {panel};
    WriteText(config.output_dir / "rooms" / (FileStem(room.id) + ".svg"),
              RenderPanels(panels, config.palette), written);
  }
  WriteJson(config.output_dir / "spaces.json", Json{{"rooms", std::move(rooms)}}, written);
  return written;
}

WrittenFiles CmdAlign(const Scene& scene, const RunConfig& config) {
  RequireRooms(scene, 2, "align");
  WrittenFiles written;
  const uint64_t seed = config.SeedFor("align");
  const AlignmentResult result =
      AlignRooms(scene.rooms, config.kind, config.ToOptimizerConfig("align"), seed);
  const std::vector<Pose2D> poses = result.alignment.AllPoses();

  Json rooms = Json::array();
  for (size_t r = 0; r < scene.rooms.size(); ++r) {
    rooms.push_back({{"id", scene.rooms[r].id}, {"pose", PoseJson(poses[r])}});
  }
  WriteJson(config.output_dir / "alignment.json",
            Json{{"kind", SpaceKindName(config.kind)},
                 {"seed", seed},
                 {"resolution", config.resolution},
                 {"mutual_area_m2", result.mutual_area},
                 {"generations_run", result.generations_run},
                 {"rooms", std::move(rooms)},
                 {"generation_trace", result.generation_trace}},
            written);
  WriteText(config.output_dir / "alignment.svg",
            RenderAlignment(scene.rooms, poses, result.mutual_region, result.region_frame,
                            config.palette), written);

  const std::vector<RoomRaster> rasters = MakeRasters(scene, config);
  const LayoutRender render =
      RenderLayout(rasters, config.kind, LayoutDelta::Zero(scene.rooms.size()), poses);
  for (size_t r = 0; r < rasters.size(); ++r) {
    const std::vector<std::string> caption = {
        fmt::format("{}: mutual {:.2f} m^2", scene.rooms[r].id, result.mutual_area)};
    const std::vector<RoomPanel> all = Panels(rasters, render, poses,
                                              std::vector<std::string>(rasters.size()));
    RoomPanel panel = all[r];
    panel.caption = caption.front();
    const RoomPanel panels[] = {panel};
    WriteText(config.output_dir / "rooms" / (FileStem(scene.rooms[r].id) + ".svg"),
              RenderPanels(panels, config.palette), written);
  }
  return written;
}

WrittenFiles CmdRearrange(const Scene& scene, const RunConfig& config) {
  RequireRooms(scene, 2, "rearrange");
  WrittenFiles written;
  const uint64_t seed = config.SeedFor("rearrange");
  const std::vector<StepSolution> steps =
      RearrangeStepwise(scene.rooms, config.kind, config.ToOptimizerConfig("rearrange"), seed);
  const std::vector<RoomRaster> rasters = MakeRasters(scene, config);

  std::string csv = "step,K_m2,E,penalty,poses,deltas\n";
  std::vector<double> cumulative(scene.rooms.size(), 0.0);
  for (const StepSolution& step : steps) {
    const std::vector<Pose2D> poses = step.alignment.AllPoses();
    Json rooms = Json::array();
    std::vector<std::string> captions;
    for (size_t r = 0; r < scene.rooms.size(); ++r) {
      const double spent = r < step.step_effort_per_room.size() ? step.step_effort_per_room[r] : 0;
      cumulative[r] += spent;
      const RoomDelta empty;
      const RoomDelta& delta = r < step.delta.rooms.size() ? step.delta.rooms[r] : empty;
      rooms.push_back({{"id", scene.rooms[r].id},
                       {"pose", PoseJson(poses[r])},
                       {"step_effort", spent},
                       {"cumulative_effort", cumulative[r]},
                       {"moves", MovesJson(scene.rooms[r], delta)}});
      captions.push_back(fmt::format("{} (step {}): E {:.2f}", scene.rooms[r].id, step.step,
                                     cumulative[r]));
    }
    const std::string stem = std::to_string(step.step);
    WriteJson(config.output_dir / "steps" / (stem + ".json"),
              Json{{"step", step.step},
                   {"kind", SpaceKindName(config.kind)},
                   {"seed", seed},
                   {"mutual_area_m2", step.objectives.mutual_area},
                   {"total_effort", step.objectives.total_effort},
                   {"penalty", step.objectives.penalty},
                   {"rooms", std::move(rooms)}},
              written);
    const LayoutRender render = RenderLayout(rasters, config.kind, step.delta, poses);
    const std::vector<RoomPanel> panels = Panels(rasters, render, poses, captions);
    WriteText(config.output_dir / "steps" / (stem + ".svg"), RenderPanels(panels, config.palette),
              written);
    csv += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{}\n", step.step, step.objectives.mutual_area,
                       step.objectives.total_effort, step.objectives.penalty,
                       CsvField(PoseListing(scene, step.alignment)),
                       CsvField(DeltaListing(scene, step.delta)));
  }
  WriteText(config.output_dir / "steps.csv", csv, written);
  return written;
}

WrittenFiles CmdPareto(const Scene& scene, const RunConfig& config) {
  RequireRooms(scene, 2, "pareto");
  WrittenFiles written;
  const uint64_t seed = config.SeedFor("pareto");
  const ParetoFront front =
      OptimizePareto(scene.rooms, config.kind, config.ToOptimizerConfig("pareto"), seed);

  std::string csv = "rank,K_m2,E,penalty,poses,deltas\n";
  Json members = Json::array();
  std::vector<ScatterPoint> points;
  for (size_t k = 0; k < front.members.size(); ++k) {
    const Solution& member = front.members[k];
    csv += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{}\n", k, member.objectives.mutual_area,
                       member.objectives.total_effort, member.objectives.penalty,
                       CsvField(PoseListing(scene, member.alignment)),
                       CsvField(DeltaListing(scene, member.delta)));
    Json entry = SolutionJson(scene, member);
    entry["rank"] = k;
    members.push_back(std::move(entry));
    points.push_back({member.objectives.total_effort, member.objectives.mutual_area});
  }
  WriteText(config.output_dir / "pareto.csv", csv, written);
  WriteJson(config.output_dir / "pareto.json",
            Json{{"kind", SpaceKindName(config.kind)},
                 {"seed", seed},
                 {"generations", front.generations},
                 {"members", std::move(members)}},
            written);
  WriteText(config.output_dir / "pareto.svg", RenderParetoScatter(points, config.palette),
            written);
  return written;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutual functional space alignment and rearrangement"};
  app.require_subcommand(1);

  struct Flags {
    std::string scene;
    std::optional<std::string> kind;
    std::optional<std::string> config;
    std::optional<uint64_t> seed;
    std::optional<double> resolution;
    std::optional<std::string> out;
  } flags;

  const char* const names[] = {"spaces", "align", "rearrange", "pareto"};
  const char* const help[] = {
      "Standable and sittable spaces per room",
      "Align rooms to maximize their mutual space",
      "Stepwise furniture rearrangement with growing mutual space",
      "Trade-off front between mutual space and moving effort",
  };
  for (size_t k = 0; k < 4; ++k) {
    CLI::App* sub = app.add_subcommand(names[k], help[k]);
    sub->add_option("scene", flags.scene, "Scene JSON file")->required();
    sub->add_option("--kind", flags.kind, "Space kind: standable or sittable")
        ->check(CLI::IsMember({"standable", "sittable"}));
    sub->add_option("--config", flags.config, "Run configuration JSON");
    sub->add_option("--seed", flags.seed, "Random seed for every search");
    sub->add_option("--resolution", flags.resolution, "Grid resolution in meters");
    sub->add_option("--out", flags.out, "Output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    RunConfig config = RunConfig::Defaults();
    std::optional<fs::path> config_path;
    if (flags.config) {
      config_path = *flags.config;
    } else if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
      config_path = env;
    }
    if (config_path) ApplyConfigFile(config, *config_path);
    if (flags.kind) config.kind = ParseSpaceKind(*flags.kind);
    if (flags.seed) {
      config.seed = *flags.seed;
      config.alignment_seed.reset();
      config.rearrangement_seed.reset();
      config.pareto_seed.reset();
    }
    if (flags.resolution) config.resolution = *flags.resolution;
    if (flags.out) config.output_dir = *flags.out;
    config.Validate();

    const LabelCatalog catalog =
        config.catalog_path ? LoadCatalog(*config.catalog_path) : LabelCatalog::Default();
    const Scene scene = LoadScene(flags.scene, catalog);

    WrittenFiles written;
    if (command == "spaces") written = CmdSpaces(scene, config);
    if (command == "align") written = CmdAlign(scene, config);
    if (command == "rearrange") written = CmdRearrange(scene, config);
    if (command == "pareto") written = CmdPareto(scene, config);
    for (const fs::path& path : written) out << path.string() << "\n";
  } catch (const std::exception& e) {
    err << "mutualspace " << command << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mutualspace::cli
