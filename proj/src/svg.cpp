#include "t2p/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "t2p/errors.hpp"

namespace t2p {

namespace {

std::map<std::string, Glyph> build_glyphs() {
  std::map<std::string, Glyph> g;
  auto def = [&](const std::string& sym, Footprint size, std::vector<GlyphPrimitive> prims) {
    g[sym] = Glyph{sym, std::move(prims), size};
  };
  def("bed", {90, 50},
      {GlyphRect{0, 0, 1, 1}, GlyphRect{0.06, 0.08, 0.38, 0.28}, GlyphRect{0.56, 0.08, 0.38, 0.28},
       GlyphLine{0, 0.45, 1, 0.45}});
  def("sofa", {80, 35},
      {GlyphRect{0, 0, 1, 1}, GlyphLine{0, 0.3, 1, 0.3}, GlyphLine{0.12, 0.3, 0.12, 1},
       GlyphLine{0.88, 0.3, 0.88, 1}});
  def("armchair", {40, 40},
      {GlyphRect{0, 0, 1, 1}, GlyphLine{0, 0.25, 1, 0.25}, GlyphLine{0.2, 0.25, 0.2, 1},
       GlyphLine{0.8, 0.25, 0.8, 1}});
  def("chair", {25, 25}, {GlyphRect{0, 0, 1, 0.2}, GlyphRect{0.1, 0.2, 0.8, 0.75}});
  def("table", {60, 60}, {GlyphRect{0, 0, 1, 1}, GlyphRect{0.08, 0.08, 0.84, 0.84}});
  def("wardrobe", {80, 30},
      {GlyphRect{0, 0, 1, 1}, GlyphLine{0.5, 0, 0.5, 1}, GlyphCircle{0.44, 0.5, 0.04},
       GlyphCircle{0.56, 0.5, 0.04}});
  def("sink", {40, 30},
      {GlyphRect{0, 0, 1, 1}, GlyphCircle{0.5, 0.55, 0.3}, GlyphCircle{0.5, 0.55, 0.06}});
  def("tub", {80, 40},
      {GlyphRect{0, 0, 1, 1}, GlyphRect{0.08, 0.15, 0.84, 0.7}, GlyphCircle{0.18, 0.5, 0.07}});
  def("toilet", {35, 45}, {GlyphRect{0.1, 0, 0.8, 0.3}, GlyphCircle{0.5, 0.62, 0.3}});
  def("stove", {50, 50},
      {GlyphRect{0, 0, 1, 1}, GlyphCircle{0.28, 0.28, 0.14}, GlyphCircle{0.72, 0.28, 0.14},
       GlyphCircle{0.28, 0.72, 0.14}, GlyphCircle{0.72, 0.72, 0.14}});
  def("refrigerator", {45, 45},
      {GlyphRect{0, 0, 1, 1}, GlyphLine{0, 0.35, 1, 0.35}, GlyphLine{0.85, 0.45, 0.85, 0.7}});
  def("washbasin", {35, 30}, {GlyphRect{0, 0, 1, 0.18}, GlyphCircle{0.5, 0.58, 0.34}});
  return g;
}

std::string fmt(double v) {
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(r));
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// (u,v) in the unit box under a 90-degree-step rotation; the back edge (v=0)
// ends up against the wall the item was placed on.
void map_unit(double u, double v, int rotation, double& ou, double& ov) {
  switch (rotation) {
    case 90: ou = 1.0 - v; ov = u; break;
    case 180: ou = 1.0 - u; ov = 1.0 - v; break;
    case 270: ou = v; ov = 1.0 - u; break;
    default: ou = u; ov = v; break;
  }
}

struct Interval {
  int lo, hi;
};

}  // namespace

const Glyph& glyph_for(const std::string& symbol) {
  static const std::map<std::string, Glyph> glyphs = build_glyphs();
  auto it = glyphs.find(symbol);
  if (it == glyphs.end()) raise(Errc::UnknownSymbol, "no glyph for '" + symbol + "'");
  return it->second;
}

std::string render_svg(const FloorPlan& plan, const RenderStyle& style) {
  const int dx = style.margin - plan.bbox.x;
  const int dy = style.margin - plan.bbox.y;
  const int width = plan.bbox.w + 2 * style.margin;
  const int height = plan.bbox.h + 2 * style.margin;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"white\"/>\n";

  for (const auto& room : plan.rooms) {
    svg += "<g class=\"room\" data-id=\"" + xml_escape(room.id) + "\">\n";
    for (const auto& wall : room.walls()) {
      bool horizontal = wall.a.y == wall.b.y;
      int line_pos = horizontal ? wall.a.y : wall.a.x;
      Interval extent = horizontal
                            ? Interval{std::min(wall.a.x, wall.b.x), std::max(wall.a.x, wall.b.x)}
                            : Interval{std::min(wall.a.y, wall.b.y), std::max(wall.a.y, wall.b.y)};
      // cut the wall around every door gap lying on this line
      std::vector<Interval> gaps;
      for (const auto& door : plan.doors) {
        if ((door.axis == Axis::Horizontal) != horizontal) continue;
        int door_line = horizontal ? door.start.y : door.start.x;
        if (door_line != line_pos) continue;
        int lo = horizontal ? door.start.x : door.start.y;
        if (lo >= extent.hi || lo + door.width <= extent.lo) continue;
        gaps.push_back({std::max(lo, extent.lo), std::min(lo + door.width, extent.hi)});
      }
      std::sort(gaps.begin(), gaps.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo;
      });
      int cursor = extent.lo;
      auto emit_piece = [&](int lo, int hi) {
        if (hi - lo <= 0) return;
        int x1 = horizontal ? lo : line_pos;
        int y1 = horizontal ? line_pos : lo;
        int x2 = horizontal ? hi : line_pos;
        int y2 = horizontal ? line_pos : hi;
        svg += "<line class=\"wall\" x1=\"" + std::to_string(x1 + dx) + "\" y1=\"" +
               std::to_string(y1 + dy) + "\" x2=\"" + std::to_string(x2 + dx) + "\" y2=\"" +
               std::to_string(y2 + dy) + "\" stroke=\"black\" stroke-width=\"" +
               fmt(style.wall_stroke) + "\"/>\n";
      };
      for (const auto& gap : gaps) {
        emit_piece(cursor, gap.lo);
        cursor = std::max(cursor, gap.hi);
      }
      emit_piece(cursor, extent.hi);
    }
    svg += "<text class=\"label\" x=\"" + std::to_string(room.label_anchor.x + dx) + "\" y=\"" +
           std::to_string(room.label_anchor.y + dy) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\""
           " font-size=\"" +
           fmt(style.label_size) + "\">" + xml_escape(std::string(to_string(room.type))) +
           "</text>\n";
    svg += "</g>\n";
  }

  for (const auto& door : plan.doors) {
    const PlacedRoom* swing_room = plan.find_room(door.room_a);
    svg += "<g class=\"door\">\n";
    if (swing_room != nullptr) {
      // leaf from the hinge into the swing room, quarter arc back to the jamb
      int ix = 0, iy = 0;  // inward unit direction
      if (door.axis == Axis::Horizontal)
        iy = swing_room->rect.bottom() == door.start.y ? -1 : 1;
      else
        ix = swing_room->rect.right() == door.start.x ? -1 : 1;
      Point hinge = door.start;
      Point jamb = door.end();
      Point leaf{hinge.x + ix * door.width, hinge.y + iy * door.width};
      svg += "<line class=\"leaf\" x1=\"" + std::to_string(hinge.x + dx) + "\" y1=\"" +
             std::to_string(hinge.y + dy) + "\" x2=\"" + std::to_string(leaf.x + dx) +
             "\" y2=\"" + std::to_string(leaf.y + dy) + "\" stroke=\"black\" stroke-width=\"" +
             fmt(style.door_stroke) + "\"/>\n";
      // sweep flag: the hinge must be the arc's center
      long long cx1 = leaf.x - jamb.x, cy1 = leaf.y - jamb.y;
      long long cx2 = hinge.x - jamb.x, cy2 = hinge.y - jamb.y;
      const char* sweep = (cx1 * cy2 - cy1 * cx2) > 0 ? "1" : "0";
      svg += "<path class=\"swing\" d=\"M " + std::to_string(jamb.x + dx) + " " +
             std::to_string(jamb.y + dy) + " A " + std::to_string(door.width) + " " +
             std::to_string(door.width) + " 0 0 " + sweep + " " + std::to_string(leaf.x + dx) +
             " " + std::to_string(leaf.y + dy) + "\" fill=\"none\" stroke=\"black\""
             " stroke-width=\"" + fmt(style.door_stroke) + "\" stroke-dasharray=\"4 3\"/>\n";
    }
    svg += "</g>\n";
  }

  for (const auto& item : plan.furniture) {
    const Glyph& glyph = glyph_for(item.symbol);
    const Rect& r = item.rect;
    auto px = [&](double u, double v) {
      double ou, ov;
      map_unit(u, v, item.rotation, ou, ov);
      return std::pair<double, double>{r.x + ou * r.w + dx, r.y + ov * r.h + dy};
    };
    svg += "<g class=\"furniture\" data-symbol=\"" + xml_escape(item.symbol) + "\">\n";
    for (const auto& prim : glyph.primitives) {
      if (std::holds_alternative<GlyphLine>(prim)) {
        const auto& l = std::get<GlyphLine>(prim);
        auto [x1, y1] = px(l.x1, l.y1);
        auto [x2, y2] = px(l.x2, l.y2);
        svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" stroke=\"black\" stroke-width=\"" +
               fmt(style.furniture_stroke) + "\"/>\n";
      } else if (std::holds_alternative<GlyphRect>(prim)) {
        const auto& q = std::get<GlyphRect>(prim);
        auto [x1, y1] = px(q.x, q.y);
        auto [x2, y2] = px(q.x + q.w, q.y + q.h);
        double lo_x = std::min(x1, x2), lo_y = std::min(y1, y2);
        svg += "<rect x=\"" + fmt(lo_x) + "\" y=\"" + fmt(lo_y) + "\" width=\"" +
               fmt(std::abs(x2 - x1)) + "\" height=\"" + fmt(std::abs(y2 - y1)) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
               fmt(style.furniture_stroke) + "\"/>\n";
      } else {
        const auto& c = std::get<GlyphCircle>(prim);
        auto [cx, cy] = px(c.cx, c.cy);
        double radius = c.r * std::min(r.w, r.h);
        svg += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(radius) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
               fmt(style.furniture_stroke) + "\"/>\n";
      }
    }
    svg += "</g>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace t2p
