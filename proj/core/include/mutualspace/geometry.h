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

#ifndef MUTUALSPACE_GEOMETRY_H_
#define MUTUALSPACE_GEOMETRY_H_

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace mutualspace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

inline double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Wraps an angle into [-pi, pi).
double NormalizeAngle(double radians);

inline double DegToRad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double RadToDeg(double rad) { return rad * 180.0 / std::numbers::pi; }

struct Box {
  Vec2 min;
  Vec2 max;

  double Width() const { return max.x - min.x; }
  double Height() const { return max.y - min.y; }
  Vec2 Center() const { return 0.5 * (min + max); }
  double Diagonal() const { return std::hypot(Width(), Height()); }
};

// Planar rigid motion: p -> R(theta) p + (tx, ty).
class Pose2D {
 public:
  Pose2D() = default;
  Pose2D(double tx, double ty, double theta);

  static Pose2D Identity() { return {}; }
  static Pose2D Translation(double tx, double ty) { return {tx, ty, 0.0}; }
  // Rotation by theta about `pivot`.
  static Pose2D RotationAbout(Vec2 pivot, double theta);

  double tx() const { return tx_; }
  double ty() const { return ty_; }
  double theta() const { return theta_; }

  Vec2 Apply(Vec2 p) const {
    return {cos_ * p.x - sin_ * p.y + tx_, sin_ * p.x + cos_ * p.y + ty_};
  }
  Vec2 ApplyInverse(Vec2 p) const {
    const double dx = p.x - tx_;
    const double dy = p.y - ty_;
    return {cos_ * dx + sin_ * dy, -sin_ * dx + cos_ * dy};
  }
  Vec2 Rotate(Vec2 v) const { return {cos_ * v.x - sin_ * v.y, sin_ * v.x + cos_ * v.y}; }

  Pose2D Inverse() const;

  // (a * b).Apply(p) == a.Apply(b.Apply(p)).
  friend Pose2D operator*(const Pose2D& a, const Pose2D& b);

 private:
  double tx_ = 0.0;
  double ty_ = 0.0;
  double theta_ = 0.0;
  double cos_ = 1.0;
  double sin_ = 0.0;
};

// Oriented rectangle. `width` runs along the local u axis (rotated x),
// `depth` along the local v axis.
class OrientedRect {
 public:
  OrientedRect(Vec2 center, double width, double depth, double rotation);

  Vec2 center() const { return center_; }
  double width() const { return width_; }
  double depth() const { return depth_; }
  double rotation() const { return rotation_; }
  double Area() const { return width_ * depth_; }

  Vec2 AxisU() const { return {std::cos(rotation_), std::sin(rotation_)}; }
  Vec2 AxisV() const { return {-std::sin(rotation_), std::cos(rotation_)}; }

  // Counter-clockwise: (-u,-v), (+u,-v), (+u,+v), (-u,+v).
  std::array<Vec2, 4> Corners() const;
  Box Bounds() const;

  Vec2 ToLocal(Vec2 p) const;
  Vec2 FromLocal(Vec2 local) const;

  // Closed containment.
  bool Contains(Vec2 p) const;
  // Euclidean distance from p to the rectangle (0 inside).
  double DistanceTo(Vec2 p) const;
  // Distance from an interior point to the rectangle's boundary (0 outside).
  double InteriorDepth(Vec2 p) const;

  OrientedRect Translated(Vec2 offset) const;

 private:
  Vec2 center_;
  double width_;
  double depth_;
  double rotation_;
};

// Separating-axis overlap test on open interiors: touching rectangles do
// not overlap.
bool RectOverlap(const OrientedRect& a, const OrientedRect& b);

// Simple counter-clockwise polygon. Construction validates the invariants.
class SimplePolygon {
 public:
  explicit SimplePolygon(std::vector<Vec2> vertices);

  static SimplePolygon Rectangle(Vec2 min, Vec2 max);

  std::span<const Vec2> vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }
  Vec2 vertex(size_t i) const { return vertices_[i % vertices_.size()]; }

  double Area() const;
  Box Bounds() const;
  // Even-odd containment; boundary points may land on either side.
  bool Contains(Vec2 p) const;
  double DistanceToBoundary(Vec2 p) const;

  SimplePolygon Transformed(const Pose2D& pose) const;

 private:
  std::vector<Vec2> vertices_;
};

double SignedArea(std::span<const Vec2> ring);
double SegmentDistance(Vec2 p, Vec2 a, Vec2 b);

// True when `rect` shrunk by `tolerance` on each side lies inside `polygon`.
bool RectInsidePolygon(const OrientedRect& rect, const SimplePolygon& polygon,
                       double tolerance = 1e-9);

// Distance along a ray (origin + t * dir, t >= 0, dir unit) to the first
// point inside the open interior of `rect`; nullopt when the ray misses.
std::optional<double> RayHitRect(Vec2 origin, Vec2 dir, const OrientedRect& rect);
// Distance along a ray to the first crossing of segment [a, b]; parallel
// segments never register.
std::optional<double> RayHitSegment(Vec2 origin, Vec2 dir, Vec2 a, Vec2 b);

}  // namespace mutualspace

#endif  // MUTUALSPACE_GEOMETRY_H_
