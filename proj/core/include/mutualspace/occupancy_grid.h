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

#ifndef MUTUALSPACE_OCCUPANCY_GRID_H_
#define MUTUALSPACE_OCCUPANCY_GRID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mutualspace/geometry.h"

namespace mutualspace {

struct CellIndex {
  int i = 0;  // column, along x
  int j = 0;  // row, along y
  friend bool operator==(CellIndex, CellIndex) = default;
};

// Boolean membership mask over an axis-aligned lattice. Cell (i, j) covers
// [origin + (i, j) * resolution, origin + (i + 1, j + 1) * resolution) and is
// represented by its center.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(Vec2 origin, double resolution, int width, int height, bool fill = false);

  // Empty grid on the same lattice as `other`.
  static OccupancyGrid EmptyLike(const OccupancyGrid& other) {
    return {other.origin_, other.resolution_, other.width_, other.height_};
  }

  Vec2 origin() const { return origin_; }
  double resolution() const { return resolution_; }
  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return cells_.size(); }
  std::span<const uint8_t> cells() const { return cells_; }

  bool InBounds(int i, int j) const { return i >= 0 && j >= 0 && i < width_ && j < height_; }
  bool at(int i, int j) const { return cells_[Index(i, j)] != 0; }
  bool at(CellIndex c) const { return at(c.i, c.j); }
  void set(int i, int j, bool value) { cells_[Index(i, j)] = value ? 1 : 0; }

  Vec2 CellCenter(int i, int j) const {
    return {origin_.x + (i + 0.5) * resolution_, origin_.y + (j + 0.5) * resolution_};
  }
  // Cell containing `p`, if it lies on the grid.
  std::optional<CellIndex> CellOf(Vec2 p) const;
  // Membership of a world point: the cell containing it is true.
  bool Contains(Vec2 p) const {
    const double fx = (p.x - origin_.x) * inv_resolution_;
    const double fy = (p.y - origin_.y) * inv_resolution_;
    if (!(fx >= 0.0) || !(fy >= 0.0)) return false;
    const int i = static_cast<int>(fx);
    const int j = static_cast<int>(fy);
    return i < width_ && j < height_ && cells_[Index(i, j)] != 0;
  }

  size_t CountTrue() const;
  double Area() const { return static_cast<double>(CountTrue()) * resolution_ * resolution_; }
  Box Bounds() const {
    return {origin_, {origin_.x + width_ * resolution_, origin_.y + height_ * resolution_}};
  }

  bool SameLattice(const OccupancyGrid& other) const;
  // Cellwise containment; both grids must share a lattice.
  bool IsSubsetOf(const OccupancyGrid& other) const;

  OccupancyGrid& operator|=(const OccupancyGrid& other);
  OccupancyGrid& operator&=(const OccupancyGrid& other);
  OccupancyGrid& Subtract(const OccupancyGrid& other);

  // Sets every cell whose center lies inside `rect` (closed) to `value`.
  void FillRect(const OrientedRect& rect, bool value);

  friend bool operator==(const OccupancyGrid& a, const OccupancyGrid& b) {
    return a.SameLattice(b) && a.cells_ == b.cells_;
  }

 private:
  size_t Index(int i, int j) const { return static_cast<size_t>(j) * width_ + i; }

  Vec2 origin_;
  double resolution_ = 1.0;
  double inv_resolution_ = 1.0;
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> cells_;
};

// Cells whose centers lie inside `room_polygon` and inside no obstacle.
// The lattice starts at the polygon's bounding-box minimum.
OccupancyGrid Rasterize(const SimplePolygon& room_polygon,
                        std::span<const OrientedRect> obstacles, double resolution);

// Squared Euclidean distance, in cell units, from every cell center to the
// nearest center of a cell whose mask value equals `target`. Cells outside
// the grid count as `outside_is_target`. Unreachable cells get +inf.
std::vector<double> SquaredDistanceTransform(const OccupancyGrid& grid, bool target,
                                             bool outside_is_target);

// Keeps a cell iff every cell center within `radius` of it is true. Space
// beyond the grid counts as false.
OccupancyGrid Erode(const OccupancyGrid& grid, double radius);

// Marks a cell iff some true cell center lies within `radius` of it.
OccupancyGrid Dilate(const OccupancyGrid& grid, double radius);

// True iff some true cell center lies within `radius` of `point`.
bool DilateTest(const OccupancyGrid& grid, Vec2 point, double radius);

// Membership of a world point in the rigidly moved region pose(grid).
inline bool TransformedMembership(const OccupancyGrid& grid, const Pose2D& pose, Vec2 point) {
  return grid.Contains(pose.ApplyInverse(point));
}

}  // namespace mutualspace

#endif  // MUTUALSPACE_OCCUPANCY_GRID_H_
