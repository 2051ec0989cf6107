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


#include "cli/svg.h"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/core.h>

namespace mutualspace::cli {
namespace {

constexpr double kPixelsPerMeter = 60.0;
constexpr double kMargin = 24.0;
constexpr double kCaptionHeight = 22.0;
constexpr double kCaptionCharWidth = 7.0;

std::string Escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// World box -> pixel rectangle with y pointing down.
struct Viewport {
  Box world;
  double scale = kPixelsPerMeter;
  Vec2 origin;

  Vec2 ToPx(Vec2 p) const {
    return {origin.x + (p.x - world.min.x) * scale, origin.y + (world.max.y - p.y) * scale};
  }
  double WidthPx() const { return world.Width() * scale; }
  double HeightPx() const { return world.Height() * scale; }
};

class Svg {
 public:
  void Polygon(const Viewport& view, std::span<const Vec2> points, std::string_view fill,
               std::string_view stroke = "none", double stroke_width = 0.0) {
    body_ += "<polygon points=\"";
    for (size_t k = 0; k < points.size(); ++k) {
      const Vec2 p = view.ToPx(points[k]);
      body_ += fmt::format("{}{:.2f},{:.2f}", k ? " " : "", p.x, p.y);
    }
    body_ += fmt::format("\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{:.2f}\"/>\n", fill, stroke,
                         stroke_width);
  }

  // Row runs of true cells; each run is mapped through `to_view` so grids
  // from another frame can be drawn as rotated quads.
  template <typename Map>
  void Cells(const Viewport& view, const OccupancyGrid& grid, std::string_view fill, Map to_view) {
    const double r = grid.resolution();
    const Vec2 o = grid.origin();
    for (int j = 0; j < grid.height(); ++j) {
      int i = 0;
      while (i < grid.width()) {
        if (!grid.at(i, j)) {
          ++i;
          continue;
        }
        const int start = i;
        while (i < grid.width() && grid.at(i, j)) ++i;
        const double x0 = o.x + start * r;
        const double x1 = o.x + i * r;
        const double y0 = o.y + j * r;
        const double y1 = y0 + r;
        const Vec2 quad[4] = {to_view({x0, y0}), to_view({x1, y0}), to_view({x1, y1}),
                              to_view({x0, y1})};
        Polygon(view, quad, fill, fill, 0.5);
      }
    }
  }

  void Line(const Viewport& view, Vec2 a, Vec2 b, std::string_view stroke, double width,
            bool arrow = false) {
    const Vec2 pa = view.ToPx(a);
    const Vec2 pb = view.ToPx(b);
    body_ += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
        "stroke-width=\"{:.2f}\"{}/>\n",
        pa.x, pa.y, pb.x, pb.y, stroke, width, arrow ? " marker-end=\"url(#arrow)\"" : "");
  }

  void RawLine(Vec2 a, Vec2 b, std::string_view stroke, double width) {
    body_ += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
        "stroke-width=\"{:.2f}\"/>\n",
        a.x, a.y, b.x, b.y, stroke, width);
  }

  void Text(Vec2 px, std::string_view text, double size, std::string_view anchor = "start") {
    body_ += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"{:.1f}\" "
        "text-anchor=\"{}\">{}</text>\n",
        px.x, px.y, size, anchor, Escape(text));
  }

  void Circle(Vec2 px, double radius, std::string_view fill) {
    body_ += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" fill=\"{}\"/>\n", px.x,
                         px.y, radius, fill);
  }

  std::string Finish(double width, double height) const {
    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
        std::ceil(width), std::ceil(height), std::ceil(width), std::ceil(height));
    out +=
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" "
        "fill=\"#222222\"/></marker></defs>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#FFFFFF\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  std::string body_;
};

std::vector<Vec2> Corners(const OrientedRect& rect) {
  const auto corners = rect.Corners();
  return {corners.begin(), corners.end()};
}

void DrawPanel(Svg& svg, const RoomPanel& panel, const Viewport& view, const Palette& palette) {
  const auto identity = [](Vec2 p) { return p; };
  if (panel.floor) svg.Cells(view, *panel.floor, palette.non_standable, identity);
  if (panel.standable) svg.Cells(view, *panel.standable, palette.standable, identity);
  if (panel.sittable && panel.standable) {
    OccupancyGrid extra = *panel.sittable;
    extra.Subtract(*panel.standable);
    svg.Cells(view, extra, palette.sittable, identity);
  } else if (panel.sittable) {
    svg.Cells(view, *panel.sittable, palette.sittable, identity);
  }
  if (panel.mutual) {
    const Pose2D pose = panel.pose;
    svg.Cells(view, *panel.mutual, palette.mutual,
              [&pose](Vec2 p) { return pose.ApplyInverse(p); });
  }
  const auto& boundary = panel.room->boundary.vertices();
  svg.Polygon(view, boundary, "none", "#222222", 2.0);
  for (size_t k = 0; k < panel.footprints.size(); ++k) {
    const OrientedRect& rect = panel.footprints[k];
    svg.Polygon(view, Corners(rect), "none", "#333333", 1.0);
    if (k < panel.room->objects.size()) {
      svg.Text(view.ToPx(rect.center()), panel.room->objects[k].id, 10.0, "middle");
    }
    if (k < panel.original_footprints.size()) {
      const Vec2 from = panel.original_footprints[k].center();
      if (Norm(rect.center() - from) > 1e-9) {
        svg.Polygon(view, Corners(panel.original_footprints[k]), "none", "#777777", 0.8);
        svg.Line(view, from, rect.center(), "#222222", 1.5, true);
      }
    }
  }
}

}  // namespace

std::string RenderPanels(std::span<const RoomPanel> panels, const Palette& palette) {
  Svg svg;
  double x = kMargin;
  double height = 0.0;
  for (const RoomPanel& panel : panels) {
    Viewport view{panel.room->boundary.Bounds(), kPixelsPerMeter,
                  {x, kMargin + kCaptionHeight}};
    svg.Text({x, kMargin + 12.0}, panel.caption, 13.0);
    DrawPanel(svg, panel, view, palette);
    x += std::max(view.WidthPx(), kCaptionCharWidth * panel.caption.size()) + kMargin;
    height = std::max(height, view.HeightPx());
  }
  return svg.Finish(x, height + 2 * kMargin + kCaptionHeight);
}

std::string RenderAlignment(std::span<const Room> rooms, std::span<const Pose2D> poses,
                            const OccupancyGrid& mutual, const Pose2D& mutual_frame,
                            const Palette& palette) {
  Box world{{1e300, 1e300}, {-1e300, -1e300}};
  std::vector<std::vector<Vec2>> outlines;
  for (size_t r = 0; r < rooms.size(); ++r) {
    std::vector<Vec2> outline;
    for (const Vec2& v : rooms[r].boundary.vertices()) {
      const Vec2 p = poses[r].Apply(v);
      world.min = {std::min(world.min.x, p.x), std::min(world.min.y, p.y)};
      world.max = {std::max(world.max.x, p.x), std::max(world.max.y, p.y)};
      outline.push_back(p);
    }
    outlines.push_back(std::move(outline));
  }
  Svg svg;
  Viewport view{world, kPixelsPerMeter, {kMargin, kMargin}};
  svg.Cells(view, mutual, palette.mutual, [&](Vec2 p) { return mutual_frame.Apply(p); });
  for (size_t r = 0; r < outlines.size(); ++r) {
    svg.Polygon(view, outlines[r], "none", "#222222", 1.5);
    svg.Text(view.ToPx(outlines[r].front()), rooms[r].id, 11.0);
  }
  return svg.Finish(view.WidthPx() + 2 * kMargin, view.HeightPx() + 2 * kMargin);
}

std::string RenderParetoScatter(std::span<const ScatterPoint> points, const Palette& palette) {
  constexpr double kWidth = 480.0;
  constexpr double kHeight = 360.0;
  constexpr double kLeft = 64.0;
  constexpr double kBottom = 48.0;
  double e_max = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  if (!points.empty()) {
    k_min = k_max = points.front().area;
  }
  for (const ScatterPoint& p : points) {
    e_max = std::max(e_max, p.effort);
    k_min = std::min(k_min, p.area);
    k_max = std::max(k_max, p.area);
  }
  if (e_max <= 0.0) e_max = 1.0;
  if (k_max - k_min <= 1e-9) {
    k_min -= 0.5;
    k_max += 0.5;
  }
  const double plot_w = kWidth - kLeft - kMargin;
  const double plot_h = kHeight - kBottom - kMargin;
  const auto to_px = [&](const ScatterPoint& p) {
    return Vec2{kLeft + p.effort / e_max * plot_w,
                kMargin + (1.0 - (p.area - k_min) / (k_max - k_min)) * plot_h};
  };
  Svg svg;
  const Vec2 origin{kLeft, kMargin + plot_h};
  svg.RawLine(origin, {kLeft + plot_w, origin.y}, "#222222", 1.0);
  svg.RawLine(origin, {kLeft, kMargin}, "#222222", 1.0);
  svg.Text({kLeft + plot_w / 2, kHeight - 12.0}, "effort E", 12.0, "middle");
  svg.Text({14.0, kMargin + plot_h / 2}, "K (m^2)", 12.0, "start");
  svg.Text({kLeft, origin.y + 16.0}, "0", 10.0, "middle");
  svg.Text({kLeft + plot_w, origin.y + 16.0}, fmt::format("{:.2f}", e_max), 10.0, "middle");
  svg.Text({kLeft - 6.0, origin.y}, fmt::format("{:.2f}", k_min), 10.0, "end");
  svg.Text({kLeft - 6.0, kMargin + 4.0}, fmt::format("{:.2f}", k_max), 10.0, "end");
  for (size_t k = 1; k < points.size(); ++k) {
    svg.RawLine(to_px(points[k - 1]), to_px(points[k]), "#999999", 1.0);
  }
  for (const ScatterPoint& p : points) svg.Circle(to_px(p), 4.0, palette.mutual);
  return svg.Finish(kWidth, kHeight);
}

}  // namespace mutualspace::cli
