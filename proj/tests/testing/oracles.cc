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


#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mutualspace::testing {
namespace {

double SegDist(Vec2 p, Vec2 a, Vec2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double ex = a.x + t * dx - p.x;
  const double ey = a.y + t * dy - p.y;
  return std::sqrt(ex * ex + ey * ey);
}

bool Blocked(const Room& room, std::span<const OrientedRect> footprints, size_t self, Vec2 p) {
  if (!PointInRing(room.boundary.vertices(), p)) return true;
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (k == self) continue;
    const Vec2 l = RectLocal(footprints[k], p);
    if (std::abs(l.x) < footprints[k].width() / 2 && std::abs(l.y) < footprints[k].depth() / 2) {
      return true;
    }
  }
  return false;
}

constexpr const char* kLabels[] = {"table", "chair", "sofa", "bed", "shelf", "cabinet",
                                   "appliance"};

bool Fits(const OrientedRect& rect, const SimplePolygon& boundary,
          const std::vector<FurnitureObject>& placed) {
  if (!RectInsidePolygon(rect, boundary)) return false;
  for (const FurnitureObject& other : placed) {
    if (RectOverlap(rect, other.footprint)) return false;
  }
  return true;
}

}  // namespace

std::filesystem::path FixturePath(std::string_view name) {
  return std::filesystem::path(MUTUALSPACE_FIXTURE_DIR) / name;
}

Scene LoadFixture(std::string_view name) { return LoadScene(FixturePath(name)); }

bool PointInRing(std::span<const Vec2> ring, Vec2 p) {
  bool inside = false;
  const size_t n = ring.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = ring[i];
    const Vec2 b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double DistanceToRing(std::span<const Vec2> ring, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ring.size(); ++i) {
    best = std::min(best, SegDist(p, ring[i], ring[(i + 1) % ring.size()]));
  }
  return best;
}

Vec2 RectLocal(const OrientedRect& rect, Vec2 p) {
  const double c = std::cos(rect.rotation());
  const double s = std::sin(rect.rotation());
  const double dx = p.x - rect.center().x;
  const double dy = p.y - rect.center().y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

bool PointInRect(const OrientedRect& rect, Vec2 p) {
  const Vec2 l = RectLocal(rect, p);
  return std::abs(l.x) <= rect.width() / 2 && std::abs(l.y) <= rect.depth() / 2;
}

double DistanceToRect(const OrientedRect& rect, Vec2 p) {
  const Vec2 l = RectLocal(rect, p);
  const double ex = std::max(0.0, std::abs(l.x) - rect.width() / 2);
  const double ey = std::max(0.0, std::abs(l.y) - rect.depth() / 2);
  return std::sqrt(ex * ex + ey * ey);
}

double DepthInRect(const OrientedRect& rect, Vec2 p) {
  const Vec2 l = RectLocal(rect, p);
  const double dx = rect.width() / 2 - std::abs(l.x);
  const double dy = rect.depth() / 2 - std::abs(l.y);
  return std::max(0.0, std::min(dx, dy));
}

bool OracleStandable(const Room& room, std::span<const OrientedRect> footprints, Vec2 p) {
  if (!PointInRing(room.boundary.vertices(), p)) return false;
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (room.objects[k].standable_obstacle && PointInRect(footprints[k], p)) return false;
  }
  return true;
}

bool OracleObjectSittable(const Room& room, std::span<const OrientedRect> footprints,
                          size_t index, Vec2 p) {
  const FurnitureObject& object = room.objects[index];
  if (object.eps <= 0.0) return false;
  if (!PointInRect(footprints[index], p)) return false;
  if (!PointInRing(room.boundary.vertices(), p)) return false;
  if (DepthInRect(footprints[index], p) >= object.eps) return false;
  const double reach = object.eps + object.rho;
  if (DistanceToRing(room.boundary.vertices(), p) <= reach) return false;
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (k != index && DistanceToRect(footprints[k], p) <= reach) return false;
  }
  return true;
}

bool OracleSittable(const Room& room, std::span<const OrientedRect> footprints, Vec2 p) {
  if (OracleStandable(room, footprints, p)) return true;
  for (size_t k = 0; k < footprints.size(); ++k) {
    if (OracleObjectSittable(room, footprints, k, p)) return true;
  }
  return false;
}

double SampledArea(const Box& box, double step, const std::function<bool(Vec2)>& pred) {
  // Irrational offset keeps samples off every lattice the library uses.
  const double offset = step * (std::numbers::sqrt2 - 1.0);
  size_t hits = 0;
  for (double y = box.min.y + offset; y < box.max.y; y += step) {
    for (double x = box.min.x + offset; x < box.max.x; x += step) {
      if (pred({x, y})) ++hits;
    }
  }
  return static_cast<double>(hits) * step * step;
}

bool SampledRectOverlap(const OrientedRect& a, const OrientedRect& b, int n) {
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Vec2 local{(i + 0.5) / n - 0.5, (j + 0.5) / n - 0.5};
      const Vec2 p = a.FromLocal({local.x * a.width(), local.y * a.depth()});
      const Vec2 l = RectLocal(b, p);
      if (std::abs(l.x) < b.width() / 2 && std::abs(l.y) < b.depth() / 2) return true;
    }
  }
  return false;
}

OccupancyGrid BruteErode(const OccupancyGrid& grid, double radius) {
  OccupancyGrid out = OccupancyGrid::EmptyLike(grid);
  const double r = radius / grid.resolution() + 1e-7 / grid.resolution();
  const int reach = static_cast<int>(std::ceil(r)) + 1;
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      bool keep = true;
      for (int dj = -reach; dj <= reach && keep; ++dj) {
        for (int di = -reach; di <= reach && keep; ++di) {
          if (di * di + dj * dj > r * r) continue;
          const int a = i + di;
          const int b = j + dj;
          if (!grid.InBounds(a, b) || !grid.at(a, b)) keep = false;
        }
      }
      out.set(i, j, keep);
    }
  }
  return out;
}

OccupancyGrid BruteDilate(const OccupancyGrid& grid, double radius) {
  OccupancyGrid out = OccupancyGrid::EmptyLike(grid);
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      out.set(i, j, DilateTest(grid, grid.CellCenter(i, j), radius));
    }
  }
  return out;
}

double MarchedClearance(const Room& room, std::span<const OrientedRect> footprints,
                        size_t index, int face, int samples, double step) {
  const OrientedRect& rect = footprints[index];
  const double c = std::cos(rect.rotation());
  const double s = std::sin(rect.rotation());
  const Vec2 u{c, s};
  const Vec2 v{-s, c};
  Vec2 normal;
  Vec2 along;
  double offset = 0.0;
  double half = 0.0;
  switch (face) {
    case 0: normal = u; along = v; offset = rect.width() / 2; half = rect.depth() / 2; break;
    case 1: normal = -1.0 * u; along = v; offset = rect.width() / 2; half = rect.depth() / 2; break;
    case 2: normal = v; along = u; offset = rect.depth() / 2; half = rect.width() / 2; break;
    default: normal = -1.0 * v; along = u; offset = rect.depth() / 2; half = rect.width() / 2;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= samples; ++k) {
    const double t_along = -half + 2.0 * half * k / samples;
    const Vec2 start = rect.center() + offset * normal + t_along * along;
    double lo = 0.0;
    double hi = step;
    while (hi < best && !Blocked(room, footprints, index, start + hi * normal)) {
      lo = hi;
      hi += step;
    }
    if (hi >= best) continue;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (Blocked(room, footprints, index, start + mid * normal)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    best = std::min(best, hi);
  }
  return best;
}

Room RandomRoom(std::mt19937_64& rng, const std::string& id, int max_objects,
                const LabelCatalog& catalog) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = 5 + static_cast<int>(unit(rng) * 5);
  const double a = 2.0 + 1.5 * unit(rng);
  const double b = 2.0 + 1.5 * unit(rng);
  const double spin = 2 * std::numbers::pi * unit(rng);
  const Vec2 center{10 * unit(rng) - 5, 10 * unit(rng) - 5};
  std::vector<Vec2> vertices;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * (k + 0.6 * (unit(rng) - 0.5)) / n;
    const Vec2 local{a * std::cos(t), b * std::sin(t)};
    vertices.push_back({center.x + std::cos(spin) * local.x - std::sin(spin) * local.y,
                        center.y + std::sin(spin) * local.x + std::cos(spin) * local.y});
  }
  Room room{id, SimplePolygon(vertices), {}, std::nullopt};
  const Box bounds = room.boundary.Bounds();
  for (int attempt = 0; attempt < 200 && static_cast<int>(room.objects.size()) < max_objects;
       ++attempt) {
    const OrientedRect rect({bounds.min.x + unit(rng) * bounds.Width(),
                             bounds.min.y + unit(rng) * bounds.Height()},
                            0.4 + 1.8 * unit(rng), 0.4 + 1.2 * unit(rng),
                            std::numbers::pi * unit(rng));
    if (!Fits(rect, room.boundary, room.objects)) continue;
    const char* label = kLabels[static_cast<size_t>(unit(rng) * std::size(kLabels))];
    room.objects.push_back(
        MakeObject(id + "_obj" + std::to_string(room.objects.size()), label, rect, catalog));
  }
  return room;
}

Room RandomRectRoom(std::mt19937_64& rng, const std::string& id, double min_side,
                    double max_side, int max_objects, const LabelCatalog& catalog) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double w = min_side + (max_side - min_side) * unit(rng);
  const double h = min_side + (max_side - min_side) * unit(rng);
  Room room{id, SimplePolygon::Rectangle({0, 0}, {w, h}), {}, std::nullopt};
  for (int attempt = 0; attempt < 200 && static_cast<int>(room.objects.size()) < max_objects;
       ++attempt) {
    const OrientedRect rect({unit(rng) * w, unit(rng) * h}, 0.4 + 0.8 * unit(rng),
                            0.4 + 0.6 * unit(rng), unit(rng) < 0.5 ? 0.0 : std::numbers::pi / 2);
    if (!Fits(rect, room.boundary, room.objects)) continue;
    const char* label = kLabels[static_cast<size_t>(unit(rng) * std::size(kLabels))];
    room.objects.push_back(
        MakeObject(id + "_obj" + std::to_string(room.objects.size()), label, rect, catalog));
  }
  return room;
}

double Simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return sum * h / 3.0;
}

}  // namespace mutualspace::testing
