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

#include "mutualspace/geometry.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mutualspace/errors.h"

namespace mutualspace {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kContactTolerance = 1e-9;

// Proper or touching intersection of segments [p1,p2] and [q1,q2].
bool SegmentsIntersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
    const double v = Cross(b - a, c - a);
    if (std::abs(v) < 1e-12) return 0;
    return v > 0 ? 1 : -1;
  };
  auto on_segment = [](Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
           std::min(a.y, b.y) - 1e-12 <= p.y && p.y <= std::max(a.y, b.y) + 1e-12;
  };
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

// Clips origin + t * dir against the open box |u| < hu, |v| < hv in local
// coordinates. Returns the entry parameter when the clipped interval
// [t_lo, t_hi] has positive length.
std::optional<double> ClipOpenBox(Vec2 origin, Vec2 dir, double hu, double hv,
                                  double t_lo, double t_hi) {
  const double o[2] = {origin.x, origin.y};
  const double d[2] = {dir.x, dir.y};
  const double h[2] = {hu, hv};
  for (int axis = 0; axis < 2; ++axis) {
    if (std::abs(d[axis]) < 1e-15) {
      if (std::abs(o[axis]) >= h[axis]) return std::nullopt;
      continue;
    }
    double t1 = (-h[axis] - o[axis]) / d[axis];
    double t2 = (h[axis] - o[axis]) / d[axis];
    if (t1 > t2) std::swap(t1, t2);
    t_lo = std::max(t_lo, t1);
    t_hi = std::min(t_hi, t2);
  }
  if (t_hi - t_lo <= 1e-12) return std::nullopt;
  return t_lo;
}

}  // namespace

double NormalizeAngle(double radians) {
  double r = radians - kTwoPi * std::floor((radians + std::numbers::pi) / kTwoPi);
  if (r >= std::numbers::pi) r -= kTwoPi;
  if (r < -std::numbers::pi) r = -std::numbers::pi;
  return r;
}

Pose2D::Pose2D(double tx, double ty, double theta)
    : tx_(tx), ty_(ty), theta_(NormalizeAngle(theta)) {
  cos_ = std::cos(theta_);
  sin_ = std::sin(theta_);
}

Pose2D Pose2D::RotationAbout(Vec2 pivot, double theta) {
  const Pose2D rot(0.0, 0.0, theta);
  const Vec2 moved = rot.Apply(pivot);
  return {pivot.x - moved.x, pivot.y - moved.y, theta};
}

Pose2D Pose2D::Inverse() const {
  const Vec2 t = ApplyInverse({0.0, 0.0});
  return {t.x, t.y, -theta_};
}

Pose2D operator*(const Pose2D& a, const Pose2D& b) {
  const Vec2 t = a.Apply({b.tx_, b.ty_});
  return {t.x, t.y, a.theta_ + b.theta_};
}

OrientedRect::OrientedRect(Vec2 center, double width, double depth, double rotation)
    : center_(center), width_(width), depth_(depth), rotation_(rotation) {
  if (!(width > 0.0) || !(depth > 0.0) || !std::isfinite(width) ||
      !std::isfinite(depth)) {
    throw ValidationError("rectangle size must be positive, got " +
                          std::to_string(width) + " x " + std::to_string(depth));
  }
  if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(rotation)) {
    throw ValidationError("rectangle pose must be finite");
  }
}

std::array<Vec2, 4> OrientedRect::Corners() const {
  const double hu = 0.5 * width_;
  const double hv = 0.5 * depth_;
  return {FromLocal({-hu, -hv}), FromLocal({hu, -hv}), FromLocal({hu, hv}),
          FromLocal({-hu, hv})};
}

Box OrientedRect::Bounds() const {
  const auto corners = Corners();
  Box box{corners[0], corners[0]};
  for (const Vec2& c : corners) {
    box.min = {std::min(box.min.x, c.x), std::min(box.min.y, c.y)};
    box.max = {std::max(box.max.x, c.x), std::max(box.max.y, c.y)};
  }
  return box;
}

Vec2 OrientedRect::ToLocal(Vec2 p) const {
  const Vec2 d = p - center_;
  return {Dot(d, AxisU()), Dot(d, AxisV())};
}

Vec2 OrientedRect::FromLocal(Vec2 local) const {
  return center_ + local.x * AxisU() + local.y * AxisV();
}

bool OrientedRect::Contains(Vec2 p) const {
  const Vec2 l = ToLocal(p);
  return std::abs(l.x) <= 0.5 * width_ && std::abs(l.y) <= 0.5 * depth_;
}

double OrientedRect::DistanceTo(Vec2 p) const {
  const Vec2 l = ToLocal(p);
  const double dx = std::max(std::abs(l.x) - 0.5 * width_, 0.0);
  const double dy = std::max(std::abs(l.y) - 0.5 * depth_, 0.0);
  return std::hypot(dx, dy);
}

double OrientedRect::InteriorDepth(Vec2 p) const {
  const Vec2 l = ToLocal(p);
  const double du = 0.5 * width_ - std::abs(l.x);
  const double dv = 0.5 * depth_ - std::abs(l.y);
  return std::max(std::min(du, dv), 0.0);
}

OrientedRect OrientedRect::Translated(Vec2 offset) const {
  return {center_ + offset, width_, depth_, rotation_};
}

bool RectOverlap(const OrientedRect& a, const OrientedRect& b) {
  const std::array<Vec2, 4> axes = {a.AxisU(), a.AxisV(), b.AxisU(), b.AxisV()};
  const Vec2 delta = b.center() - a.center();
  for (const Vec2& axis : axes) {
    const double ra = 0.5 * a.width() * std::abs(Dot(a.AxisU(), axis)) +
                      0.5 * a.depth() * std::abs(Dot(a.AxisV(), axis));
    const double rb = 0.5 * b.width() * std::abs(Dot(b.AxisU(), axis)) +
                      0.5 * b.depth() * std::abs(Dot(b.AxisV(), axis));
    if (std::abs(Dot(delta, axis)) >= ra + rb - kContactTolerance) return false;
  }
  return true;
}

double SignedArea(std::span<const Vec2> ring) {
  double twice = 0.0;
  for (size_t i = 0; i < ring.size(); ++i) {
    twice += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

double SegmentDistance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = Dot(ab, ab);
  double t = len2 > 0.0 ? Dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return Norm(p - (a + t * ab));
}

SimplePolygon::SimplePolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const size_t n = vertices_.size();
  if (n < 3) {
    throw ValidationError("polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const Vec2& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw ValidationError("polygon has a non-finite vertex");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (Norm(vertices_[i] - vertices_[(i + 1) % n]) < 1e-12) {
      throw ValidationError("polygon has repeated vertex " + std::to_string(i));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (SegmentsIntersect(vertices_[i], vertices_[(i + 1) % n], vertices_[j],
                            vertices_[(j + 1) % n])) {
        throw ValidationError("polygon is self-intersecting (edges " + std::to_string(i) +
                              " and " + std::to_string(j) + ")");
      }
    }
  }
  const double area = SignedArea(vertices_);
  if (!(area > 1e-12)) {
    throw ValidationError("polygon must be counter-clockwise with positive area");
  }
}

SimplePolygon SimplePolygon::Rectangle(Vec2 min, Vec2 max) {
  return SimplePolygon({min, {max.x, min.y}, max, {min.x, max.y}});
}

double SimplePolygon::Area() const { return SignedArea(vertices_); }

Box SimplePolygon::Bounds() const {
  Box box{vertices_[0], vertices_[0]};
  for (const Vec2& v : vertices_) {
    box.min = {std::min(box.min.x, v.x), std::min(box.min.y, v.y)};
    box.max = {std::max(box.max.x, v.x), std::max(box.max.y, v.y)};
  }
  return box;
}

bool SimplePolygon::Contains(Vec2 p) const {
  bool inside = false;
  const size_t n = vertices_.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = vertices_[i];
    const Vec2 b = vertices_[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double SimplePolygon::DistanceToBoundary(Vec2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, SegmentDistance(p, vertex(i), vertex(i + 1)));
  }
  return best;
}

SimplePolygon SimplePolygon::Transformed(const Pose2D& pose) const {
  std::vector<Vec2> moved;
  moved.reserve(vertices_.size());
  for (const Vec2& v : vertices_) moved.push_back(pose.Apply(v));
  return SimplePolygon(std::move(moved));
}

bool RectInsidePolygon(const OrientedRect& rect, const SimplePolygon& polygon,
                       double tolerance) {
  const double hu = std::max(0.5 * rect.width() - tolerance, 0.0);
  const double hv = std::max(0.5 * rect.depth() - tolerance, 0.0);
  for (Vec2 local : {Vec2{-hu, -hv}, Vec2{hu, -hv}, Vec2{hu, hv}, Vec2{-hu, hv}}) {
    if (!polygon.Contains(rect.FromLocal(local))) return false;
  }
  if (hu == 0.0 || hv == 0.0) return true;
  for (size_t i = 0; i < polygon.size(); ++i) {
    const Vec2 a = rect.ToLocal(polygon.vertex(i));
    const Vec2 b = rect.ToLocal(polygon.vertex(i + 1));
    if (ClipOpenBox(a, b - a, hu, hv, 0.0, 1.0)) return false;
  }
  return true;
}

std::optional<double> RayHitRect(Vec2 origin, Vec2 dir, const OrientedRect& rect) {
  const Vec2 o = rect.ToLocal(origin);
  const Vec2 d = {Dot(dir, rect.AxisU()), Dot(dir, rect.AxisV())};
  auto t = ClipOpenBox(o, d, 0.5 * rect.width(), 0.5 * rect.depth(), 0.0,
                       std::numeric_limits<double>::infinity());
  if (!t) return std::nullopt;
  return std::max(*t, 0.0);
}

std::optional<double> RayHitSegment(Vec2 origin, Vec2 dir, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double denom = Cross(dir, e);
  if (std::abs(denom) < 1e-12 * std::max(Norm(e), 1.0)) return std::nullopt;
  const Vec2 w = a - origin;
  const double t = Cross(w, e) / denom;
  const double s = Cross(w, dir) / denom;
  if (t < -1e-9 || s < -1e-12 || s > 1.0 + 1e-12) return std::nullopt;
  return std::max(t, 0.0);
}

}  // namespace mutualspace
