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

#include "mutualspace/scene_model.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mutualspace/errors.h"

namespace mutualspace {
namespace {

using nlohmann::json;

std::string Where(const std::string& room_id, const std::string& object_id = {}) {
  std::string out = "room '" + room_id + "'";
  if (!object_id.empty()) out += " object '" + object_id + "'";
  return out;
}

double RequireNumber(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node.at(key).is_number()) {
    throw ValidationError(where + ": missing numeric field '" + key + "'");
  }
  return node.at(key).get<double>();
}

Vec2 RequirePair(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node.at(key).is_array() || node.at(key).size() != 2 ||
      !node.at(key)[0].is_number() || !node.at(key)[1].is_number()) {
    throw ValidationError(where + ": field '" + key + "' must be [number, number]");
  }
  return {node.at(key)[0].get<double>(), node.at(key)[1].get<double>()};
}

void ApplyEntryFields(const json& fields, LabelCatalogEntry& entry, const std::string& label) {
  if (!fields.is_object()) {
    throw ValidationError("catalog entry '" + label + "' must be an object");
  }
  auto number = [&](const char* key, double& out) {
    if (!fields.contains(key)) return;
    if (!fields.at(key).is_number()) {
      throw ValidationError("catalog entry '" + label + "': '" + key + "' must be a number");
    }
    out = fields.at(key).get<double>();
  };
  auto flag = [&](const char* key, bool& out) {
    if (!fields.contains(key)) return;
    if (!fields.at(key).is_boolean()) {
      throw ValidationError("catalog entry '" + label + "': '" + key + "' must be a boolean");
    }
    out = fields.at(key).get<bool>();
  };
  number("eps_m", entry.sittable_threshold_eps);
  number("rho_m", entry.clearance_rho);
  number("weight", entry.unit_weight);
  flag("lightweight", entry.lightweight);
  flag("movable", entry.movable);
  flag("standable_obstacle", entry.standable_obstacle);
  if (entry.sittable_threshold_eps < 0.0 || entry.clearance_rho < 0.0 || entry.unit_weight < 0.0) {
    throw ValidationError("catalog entry '" + label + "': eps, rho and weight must be >= 0");
  }
}

json EntryToJson(const LabelCatalogEntry& e) {
  return json{{"eps_m", e.sittable_threshold_eps},  {"rho_m", e.clearance_rho},
              {"weight", e.unit_weight},            {"lightweight", e.lightweight},
              {"movable", e.movable},               {"standable_obstacle", e.standable_obstacle}};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json ParseJson(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": JSON parse error: " + e.what());
  }
}

Room ParseRoom(const json& node, const LabelCatalog& catalog) {
  if (!node.is_object() || !node.contains("id") || !node.at("id").is_string()) {
    throw ValidationError("room entry needs a string 'id'");
  }
  const std::string room_id = node.at("id").get<std::string>();
  if (!node.contains("boundary") || !node.at("boundary").is_array()) {
    throw ValidationError(Where(room_id) + ": missing 'boundary' array");
  }
  std::vector<Vec2> ring;
  for (const json& v : node.at("boundary")) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ValidationError(Where(room_id) + ": boundary vertices must be [x, y]");
    }
    ring.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  std::optional<SimplePolygon> boundary;
  try {
    boundary.emplace(std::move(ring));
  } catch (const ValidationError& e) {
    throw ValidationError(Where(room_id) + ": invalid boundary: " + e.what());
  }

  Room room{room_id, *boundary, {}, std::nullopt};
  if (node.contains("resolution")) {
    room.resolution = RequireNumber(node, "resolution", Where(room_id));
    if (!(*room.resolution > 0.0)) {
      throw ValidationError(Where(room_id) + ": resolution must be positive");
    }
  }

  std::vector<FurnitureObject> objects;
  std::set<std::string> seen;
  if (node.contains("objects")) {
    if (!node.at("objects").is_array()) {
      throw ValidationError(Where(room_id) + ": 'objects' must be an array");
    }
    for (const json& o : node.at("objects")) {
      if (!o.is_object() || !o.contains("id") || !o.at("id").is_string()) {
        throw ValidationError(Where(room_id) + ": object entry needs a string 'id'");
      }
      const std::string object_id = o.at("id").get<std::string>();
      const std::string where = Where(room_id, object_id);
      if (!seen.insert(object_id).second) throw ValidationError(where + ": duplicate object id");
      if (!o.contains("label") || !o.at("label").is_string()) {
        throw ValidationError(where + ": missing string 'label'");
      }
      const Vec2 center = RequirePair(o, "center", where);
      const Vec2 size = RequirePair(o, "size", where);
      const double rotation_deg = o.contains("rotation_deg")
                                      ? RequireNumber(o, "rotation_deg", where)
                                      : 0.0;
      std::optional<OrientedRect> footprint;
      try {
        footprint.emplace(center, size.x, size.y, DegToRad(rotation_deg));
      } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
      }
      FurnitureObject object =
          MakeObject(object_id, o.at("label").get<std::string>(), *footprint, catalog);
      if (o.contains("movable")) {
        if (!o.at("movable").is_boolean()) {
          throw ValidationError(where + ": 'movable' must be a boolean");
        }
        object.movable = o.at("movable").get<bool>();
      }
      if (o.contains("weight")) {
        object.weight = RequireNumber(o, "weight", where);
        if (object.weight < 0.0) throw ValidationError(where + ": weight must be >= 0");
      }
      objects.push_back(std::move(object));
    }
  }
  room.objects = FilterLightweight(objects, catalog);
  ValidateRoom(room);
  return room;
}

}  // namespace

LabelCatalog LabelCatalog::Default() {
  LabelCatalog catalog;
  auto sittable = [](double weight) {
    LabelCatalogEntry e;
    e.sittable_threshold_eps = kDefaultSittableEps;
    e.unit_weight = weight;
    return e;
  };
  auto solid = [](double weight) {
    LabelCatalogEntry e;
    e.unit_weight = weight;
    return e;
  };
  catalog.Set("table", sittable(30.0));
  catalog.Set("chair", sittable(7.0));
  catalog.Set("sofa", sittable(45.0));
  catalog.Set("bed", sittable(60.0));
  catalog.Set("shelf", solid(35.0));
  catalog.Set("cabinet", solid(40.0));
  catalog.Set("appliance", solid(50.0));
  for (const char* label : {"pillow", "laptop", "alarm_clock", "lamp", "book", "cup", "plant",
                            "monitor", "keyboard", "vase"}) {
    LabelCatalogEntry e = solid(1.0);
    e.lightweight = true;
    catalog.Set(label, e);
  }
  LabelCatalogEntry rug = solid(5.0);
  rug.standable_obstacle = false;
  catalog.Set("rug", rug);
  return catalog;
}

const LabelCatalogEntry& LabelCatalog::Resolve(std::string_view label) const {
  const auto it = entries_.find(label);
  return it == entries_.end() ? default_entry_ : it->second;
}

void LabelCatalog::Set(const std::string& label, const LabelCatalogEntry& entry) {
  entries_[label] = entry;
}

void LabelCatalog::ApplyOverrides(std::string_view json_text) {
  const json root = ParseJson(json_text, "catalog");
  if (!root.is_object()) throw ValidationError("catalog must be a JSON object");
  for (const auto& [label, fields] : root.items()) {
    if (label == "default") {
      ApplyEntryFields(fields, default_entry_, label);
      continue;
    }
    LabelCatalogEntry entry = Resolve(label);
    ApplyEntryFields(fields, entry, label);
    entries_[label] = entry;
  }
}

LabelCatalog LoadCatalog(const std::filesystem::path& path, const LabelCatalog& base) {
  LabelCatalog catalog = base;
  catalog.ApplyOverrides(ReadFile(path));
  return catalog;
}

FurnitureObject MakeObject(std::string id, std::string label, const OrientedRect& footprint,
                           const LabelCatalog& catalog) {
  const LabelCatalogEntry& e = catalog.Resolve(label);
  return FurnitureObject{std::move(id),
                         std::move(label),
                         footprint,
                         e.sittable_threshold_eps,
                         e.clearance_rho,
                         e.unit_weight,
                         e.movable,
                         e.lightweight,
                         e.standable_obstacle};
}

std::optional<size_t> Room::IndexOf(std::string_view object_id) const {
  for (size_t k = 0; k < objects.size(); ++k) {
    if (objects[k].id == object_id) return k;
  }
  return std::nullopt;
}

std::vector<FurnitureObject> FilterLightweight(std::span<const FurnitureObject> objects,
                                               const LabelCatalog& catalog) {
  std::vector<FurnitureObject> kept;
  for (const FurnitureObject& o : objects) {
    if (!catalog.Resolve(o.label).lightweight) kept.push_back(o);
  }
  return kept;
}

Room TransformRoom(const Room& room, const Pose2D& pose) {
  Room moved{room.id, room.boundary.Transformed(pose), room.objects, room.resolution};
  for (FurnitureObject& object : moved.objects) {
    const OrientedRect& f = object.footprint;
    object.footprint = OrientedRect(pose.Apply(f.center()), f.width(), f.depth(),
                                    NormalizeAngle(f.rotation() + pose.theta()));
  }
  return moved;
}

void ValidateRoom(const Room& room) {
  std::set<std::string_view> ids;
  for (const FurnitureObject& o : room.objects) {
    if (!ids.insert(o.id).second) {
      throw ValidationError(Where(room.id, o.id) + ": duplicate object id");
    }
    if (!RectInsidePolygon(o.footprint, room.boundary, kContainmentTolerance)) {
      throw ValidationError(Where(room.id, o.id) + ": lies outside the room boundary");
    }
  }
  for (size_t a = 0; a < room.objects.size(); ++a) {
    for (size_t b = a + 1; b < room.objects.size(); ++b) {
      if (RectOverlap(room.objects[a].footprint, room.objects[b].footprint)) {
        throw ValidationError(Where(room.id, room.objects[a].id) + ": overlaps object '" +
                              room.objects[b].id + "'");
      }
    }
  }
}

Scene ParseScene(std::string_view json_text, const LabelCatalog& base) {
  const json root = ParseJson(json_text, "scene");
  if (!root.is_object() || !root.contains("rooms") || !root.at("rooms").is_array()) {
    throw ValidationError("scene must be an object with a 'rooms' array");
  }
  Scene scene{{}, base};
  if (root.contains("catalog_overrides")) {
    scene.catalog.ApplyOverrides(root.at("catalog_overrides").dump());
  }
  std::set<std::string> room_ids;
  for (const json& node : root.at("rooms")) {
    Room room = ParseRoom(node, scene.catalog);
    if (!room_ids.insert(room.id).second) {
      throw ValidationError(Where(room.id) + ": duplicate room id");
    }
    scene.rooms.push_back(std::move(room));
  }
  return scene;
}

Scene LoadScene(const std::filesystem::path& path, const LabelCatalog& base) {
  return ParseScene(ReadFile(path), base);
}

std::string SerializeScene(const Scene& scene) {
  json overrides = json::object();
  overrides["default"] = EntryToJson(scene.catalog.default_entry());
  for (const auto& [label, entry] : scene.catalog.entries()) {
    overrides[label] = EntryToJson(entry);
  }
  json rooms = json::array();
  for (const Room& room : scene.rooms) {
    json boundary = json::array();
    for (const Vec2& v : room.boundary.vertices()) boundary.push_back({v.x, v.y});
    json objects = json::array();
    for (const FurnitureObject& o : room.objects) {
      const OrientedRect& f = o.footprint;
      objects.push_back({{"id", o.id},
                         {"label", o.label},
                         {"center", {f.center().x, f.center().y}},
                         {"size", {f.width(), f.depth()}},
                         {"rotation_deg", RadToDeg(f.rotation())},
                         {"movable", o.movable},
                         {"weight", o.weight}});
    }
    json node = {{"id", room.id}, {"boundary", boundary}, {"objects", objects}};
    if (room.resolution) node["resolution"] = *room.resolution;
    rooms.push_back(std::move(node));
  }
  return json{{"rooms", rooms}, {"catalog_overrides", overrides}}.dump(2);
}

void SaveScene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << SerializeScene(scene) << '\n';
}

}  // namespace mutualspace
