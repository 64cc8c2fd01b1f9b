#pragma once

#include <string>
#include <variant>
#include <vector>

#include "t2p/layout.hpp"

namespace t2p {

struct RenderStyle {
  double wall_stroke = 4.0;
  double furniture_stroke = 1.5;
  double door_stroke = 1.5;
  double label_size = 16.0;
  int margin = 40;
};

// Glyph artwork lives in a unit box, back edge along v=0 (the wall side);
// it is scaled to the placed footprint and rotated in 90-degree steps.
struct GlyphLine {
  double x1, y1, x2, y2;
};
struct GlyphRect {
  double x, y, w, h;
};
struct GlyphCircle {
  double cx, cy, r;
};
using GlyphPrimitive = std::variant<GlyphLine, GlyphRect, GlyphCircle>;

struct Glyph {
  std::string symbol;
  std::vector<GlyphPrimitive> primitives;
  Footprint default_size;
};

// The twelve-symbol library. Throws UnknownSymbol for anything else.
const Glyph& glyph_for(const std::string& symbol);

// Standalone SVG 1.1 document: wall strokes with door gaps, door swing arcs,
// centered room labels, furniture glyphs. Pure function of (plan, style);
// identical inputs yield byte-identical output.
std::string render_svg(const FloorPlan& plan, const RenderStyle& style = {});

}  // namespace t2p
