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

#include "mutualspace/occupancy_grid.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mutualspace/errors.h"

namespace mutualspace {
namespace {

constexpr double kFar = 1e20;
// Relative slack so that "within radius" is inclusive despite rounding in
// (radius / resolution)^2.
constexpr double kRadiusSlack = 1e-7;

// Felzenszwalb-Huttenlocher lower envelope of parabolas, in place over a
// strided 1D slice.
void Transform1D(double* f, int n, size_t stride, std::vector<double>& d,
                 std::vector<int>& v, std::vector<double>& z) {
  d.resize(n);
  v.resize(n);
  z.resize(n + 1);
  int k = 0;
  v[0] = 0;
  z[0] = -kFar;
  z[1] = kFar;
  auto at = [&](int q) { return f[static_cast<size_t>(q) * stride]; };
  for (int q = 1; q < n; ++q) {
    auto intersect = [&](int p) {
      return ((at(q) + static_cast<double>(q) * q) - (at(p) + static_cast<double>(p) * p)) /
             (2.0 * (q - p));
    };
    double s = intersect(v[k]);
    while (s <= z[k]) {
      --k;
      s = intersect(v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kFar;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double diff = q - v[k];
    d[q] = diff * diff + at(v[k]);
  }
  for (int q = 0; q < n; ++q) f[static_cast<size_t>(q) * stride] = std::min(d[q], kFar);
}

}  // namespace

OccupancyGrid::OccupancyGrid(Vec2 origin, double resolution, int width, int height, bool fill)
    : origin_(origin), resolution_(resolution), width_(width), height_(height) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw ValidationError("grid resolution must be positive, got " + std::to_string(resolution));
  }
  if (width < 0 || height < 0) throw ValidationError("grid dimensions must be non-negative");
  inv_resolution_ = 1.0 / resolution_;
  cells_.assign(static_cast<size_t>(width) * height, fill ? 1 : 0);
}

std::optional<CellIndex> OccupancyGrid::CellOf(Vec2 p) const {
  const double fx = std::floor((p.x - origin_.x) * inv_resolution_);
  const double fy = std::floor((p.y - origin_.y) * inv_resolution_);
  if (fx < 0 || fy < 0 || fx >= width_ || fy >= height_) return std::nullopt;
  return CellIndex{static_cast<int>(fx), static_cast<int>(fy)};
}

size_t OccupancyGrid::CountTrue() const {
  return static_cast<size_t>(std::count(cells_.begin(), cells_.end(), uint8_t{1}));
}

bool OccupancyGrid::SameLattice(const OccupancyGrid& other) const {
  return width_ == other.width_ && height_ == other.height_ &&
         resolution_ == other.resolution_ && origin_ == other.origin_;
}

bool OccupancyGrid::IsSubsetOf(const OccupancyGrid& other) const {
  if (!SameLattice(other)) throw ValidationError("grid lattices differ");
  for (size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] && !other.cells_[k]) return false;
  }
  return true;
}

OccupancyGrid& OccupancyGrid::operator|=(const OccupancyGrid& other) {
  if (!SameLattice(other)) throw ValidationError("grid lattices differ");
  for (size_t k = 0; k < cells_.size(); ++k) cells_[k] |= other.cells_[k];
  return *this;
}

OccupancyGrid& OccupancyGrid::operator&=(const OccupancyGrid& other) {
  if (!SameLattice(other)) throw ValidationError("grid lattices differ");
  for (size_t k = 0; k < cells_.size(); ++k) cells_[k] &= other.cells_[k];
  return *this;
}

OccupancyGrid& OccupancyGrid::Subtract(const OccupancyGrid& other) {
  if (!SameLattice(other)) throw ValidationError("grid lattices differ");
  for (size_t k = 0; k < cells_.size(); ++k) cells_[k] &= static_cast<uint8_t>(!other.cells_[k]);
  return *this;
}

void OccupancyGrid::FillRect(const OrientedRect& rect, bool value) {
  const Box b = rect.Bounds();
  const int i0 = std::max(0, static_cast<int>(std::floor((b.min.x - origin_.x) * inv_resolution_)));
  const int j0 = std::max(0, static_cast<int>(std::floor((b.min.y - origin_.y) * inv_resolution_)));
  const int i1 = std::min(width_ - 1, static_cast<int>(std::floor((b.max.x - origin_.x) * inv_resolution_)));
  const int j1 = std::min(height_ - 1, static_cast<int>(std::floor((b.max.y - origin_.y) * inv_resolution_)));
  for (int j = j0; j <= j1; ++j) {
    for (int i = i0; i <= i1; ++i) {
      if (rect.Contains(CellCenter(i, j))) set(i, j, value);
    }
  }
}

OccupancyGrid Rasterize(const SimplePolygon& room_polygon,
                        std::span<const OrientedRect> obstacles, double resolution) {
  if (!(resolution > 0.0)) {
    throw ValidationError("resolution must be positive, got " + std::to_string(resolution));
  }
  const Box bounds = room_polygon.Bounds();
  const int width = std::max(1, static_cast<int>(std::ceil(bounds.Width() / resolution - 1e-9)));
  const int height = std::max(1, static_cast<int>(std::ceil(bounds.Height() / resolution - 1e-9)));
  OccupancyGrid grid(bounds.min, resolution, width, height);

  std::vector<double> crossings;
  const auto vertices = room_polygon.vertices();
  const size_t n = vertices.size();
  for (int j = 0; j < height; ++j) {
    const double y = grid.CellCenter(0, j).y;
    crossings.clear();
    for (size_t a = 0, b = n - 1; a < n; b = a++) {
      const Vec2 p = vertices[a];
      const Vec2 q = vertices[b];
      if ((p.y > y) != (q.y > y)) {
        crossings.push_back(p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    for (size_t k = 0; k + 1 < crossings.size(); k += 2) {
      // Centers x_i = origin + (i + 0.5) * res with crossings[k] <= x_i < crossings[k + 1].
      const int i_begin = std::max(
          0, static_cast<int>(std::ceil((crossings[k] - bounds.min.x) / resolution - 0.5)));
      const int i_end = std::min(
          width, static_cast<int>(std::ceil((crossings[k + 1] - bounds.min.x) / resolution - 0.5)));
      for (int i = i_begin; i < i_end; ++i) grid.set(i, j, true);
    }
  }
  for (const OrientedRect& obstacle : obstacles) grid.FillRect(obstacle, false);
  return grid;
}

std::vector<double> SquaredDistanceTransform(const OccupancyGrid& grid, bool target,
                                             bool outside_is_target) {
  const int pad = outside_is_target ? 1 : 0;
  const int w = grid.width() + 2 * pad;
  const int h = grid.height() + 2 * pad;
  std::vector<double> f(static_cast<size_t>(w) * h, outside_is_target ? 0.0 : kFar);
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      f[static_cast<size_t>(j + pad) * w + (i + pad)] = grid.at(i, j) == target ? 0.0 : kFar;
    }
  }
  std::vector<double> d;
  std::vector<int> v;
  std::vector<double> z;
  if (w > 0 && h > 0) {
    for (int i = 0; i < w; ++i) Transform1D(&f[i], h, static_cast<size_t>(w), d, v, z);
    for (int j = 0; j < h; ++j) Transform1D(&f[static_cast<size_t>(j) * w], w, 1, d, v, z);
  }
  std::vector<double> out(grid.size());
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      const double value = f[static_cast<size_t>(j + pad) * w + (i + pad)];
      out[static_cast<size_t>(j) * grid.width() + i] =
          value >= 0.5 * kFar ? std::numeric_limits<double>::infinity() : value;
    }
  }
  return out;
}

OccupancyGrid Erode(const OccupancyGrid& grid, double radius) {
  if (!(radius >= 0.0)) throw ValidationError("erosion radius must be non-negative");
  if (radius == 0.0) return grid;
  const double limit = radius * radius / (grid.resolution() * grid.resolution());
  const std::vector<double> dist2 = SquaredDistanceTransform(grid, false, true);
  OccupancyGrid out = OccupancyGrid::EmptyLike(grid);
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      const size_t k = static_cast<size_t>(j) * grid.width() + i;
      if (grid.at(i, j) && dist2[k] > limit * (1.0 + kRadiusSlack) + kRadiusSlack) {
        out.set(i, j, true);
      }
    }
  }
  return out;
}

OccupancyGrid Dilate(const OccupancyGrid& grid, double radius) {
  if (!(radius >= 0.0)) throw ValidationError("dilation radius must be non-negative");
  const double limit = radius * radius / (grid.resolution() * grid.resolution());
  const std::vector<double> dist2 = SquaredDistanceTransform(grid, true, false);
  OccupancyGrid out = OccupancyGrid::EmptyLike(grid);
  for (int j = 0; j < grid.height(); ++j) {
    for (int i = 0; i < grid.width(); ++i) {
      const size_t k = static_cast<size_t>(j) * grid.width() + i;
      if (dist2[k] <= limit * (1.0 + kRadiusSlack) + kRadiusSlack) out.set(i, j, true);
    }
  }
  return out;
}

bool DilateTest(const OccupancyGrid& grid, Vec2 point, double radius) {
  if (!(radius >= 0.0)) throw ValidationError("dilation radius must be non-negative");
  const double res = grid.resolution();
  const Vec2 o = grid.origin();
  const int i0 = std::max(0, static_cast<int>(std::floor((point.x - radius - o.x) / res)));
  const int j0 = std::max(0, static_cast<int>(std::floor((point.y - radius - o.y) / res)));
  const int i1 = std::min(grid.width() - 1, static_cast<int>(std::floor((point.x + radius - o.x) / res)));
  const int j1 = std::min(grid.height() - 1, static_cast<int>(std::floor((point.y + radius - o.y) / res)));
  const double limit = radius * radius * (1.0 + 1e-12) + 1e-18;
  for (int j = j0; j <= j1; ++j) {
    for (int i = i0; i <= i1; ++i) {
      if (!grid.at(i, j)) continue;
      const Vec2 d = grid.CellCenter(i, j) - point;
      if (Dot(d, d) <= limit) return true;
    }
  }
  return false;
}

}  // namespace mutualspace
