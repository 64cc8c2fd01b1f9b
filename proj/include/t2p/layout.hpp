#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "t2p/diagnostics.hpp"
#include "t2p/rng.hpp"
#include "t2p/room_spec.hpp"

namespace t2p {

// Global coordinates: origin top-left, y grows downward, integer layout
// units throughout. No floating point enters placement.
struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int right() const { return x + w; }
  int bottom() const { return y + h; }
  Point center() const { return {x + w / 2, y + h / 2}; }
  Rect translated(int dx, int dy) const { return {x + dx, y + dy, w, h}; }

  // Open-interior test: rectangles that merely touch do not overlap.
  bool overlaps_interior(const Rect& o) const {
    return x < o.right() && o.x < right() && y < o.bottom() && o.y < bottom();
  }
  bool contains(const Rect& o) const {
    return o.x >= x && o.y >= y && o.right() <= right() && o.bottom() <= bottom();
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Walls are numbered 1..4 clockwise starting from the top; segment a->b runs
// in the clockwise direction.
struct WallSegment {
  int number = 1;
  Point a;
  Point b;
};

struct PlacedRoom {
  std::string id;
  RoomType type = RoomType::Hall;
  Rect rect;
  Point label_anchor;

  std::array<WallSegment, 4> walls() const {
    Point tl{rect.x, rect.y}, tr{rect.right(), rect.y};
    Point br{rect.right(), rect.bottom()}, bl{rect.x, rect.bottom()};
    return {WallSegment{1, tl, tr}, WallSegment{2, tr, br}, WallSegment{3, br, bl},
            WallSegment{4, bl, tl}};
  }
};

enum class Axis { Horizontal, Vertical };

struct PlacedDoor {
  std::string room_a;           // host room
  std::string room_b;           // second room, empty = exterior
  Axis axis = Axis::Horizontal; // direction of the gap segment
  Point start;                  // left/top end of the gap
  int width = 40;
  std::vector<Rect> clearances; // one per adjoining room, inside that room

  Point end() const {
    return axis == Axis::Horizontal ? Point{start.x + width, start.y}
                                    : Point{start.x, start.y + width};
  }
};

struct FurniturePlacement {
  std::string symbol;
  std::string room_id;
  Rect rect;
  int rotation = 0;  // degrees, multiple of 90; 0 = back against the top wall
};

struct FloorPlan {
  std::vector<PlacedRoom> rooms;
  std::vector<PlacedDoor> doors;
  std::vector<FurniturePlacement> furniture;
  Rect bbox;

  const PlacedRoom* find_room(const std::string& id) const {
    for (const auto& r : rooms)
      if (r.id == id) return &r;
    return nullptr;
  }
  void recompute_bbox();
};

struct Footprint {
  int w = 0;
  int h = 0;
};

struct LayoutConfig {
  int door_width = 40;
  int clearance_depth = 40;  // door clearance square depth into the room
  int component_gap = 60;    // spacing when tiling disconnected components
  int scan_step = 10;        // attachment/slide scan quantum
  std::map<std::string, Footprint> footprints;

  static LayoutConfig defaults();
  // All lengths multiplied by factor; used by the scale-equivariance checks.
  LayoutConfig scaled(int factor) const;
};

struct LayoutResult {
  FloorPlan plan;
  // DFS tree edges in placement order (parent, child); used by verification.
  std::vector<RoomPair> tree_edges;
  Diagnostics diags;
};

// Local-coordinate synthesis: rectangle at the origin, width dimensions[0],
// height dimensions[1]. Throws UnsupportedShape for anything non-rectangular.
Rect synthesize_local(const RoomSpec& spec);

// Entrance-hinted room, else a hall, else the lexicographically lowest id.
std::string choose_entry_room(const DoorConnectivityGraph& dcg,
                              const std::vector<RoomSpec>& specs,
                              const std::set<std::string>& entrance_hints = {});

// DFS placement over the connectivity graph. The entry room's top-left sits
// at the origin; each tree edge attaches the child flush to a parent wall.
// The scan is fixed: parent walls clockwise (top, right, bottom, left), then
// offsets along the wall in ascending +x/+y order, scan_step apart, first
// collision-free candidate wins. Tree door edges get a centered door on the
// shared segment; non-tree door edges get one only when the rooms ended up
// sharing at least door_width of wall. Disconnected components are laid out
// independently and tiled left to right. Spec-level door placements and
// furniture are resolved afterwards (place_doors / place_furniture).
LayoutResult dfs_place(const DoorConnectivityGraph& dcg, const std::vector<RoomSpec>& specs,
                       std::uint64_t seed, const LayoutConfig& config = LayoutConfig::defaults(),
                       bool strict = false, const std::set<std::string>& entrance_hints = {});

// Spec-level door_placement entries on walls without a graph door become
// exterior doors, evenly spaced along the wall. Throws WallOverflow when the
// requested doors cannot fit.
void place_doors(FloorPlan& plan, const std::vector<RoomSpec>& specs,
                 const LayoutConfig& config, Diagnostics* diags = nullptr);

// Greedy seeded placement: pick a corner, orient the footprint along the
// wall, slide clockwise wall to wall until the rect clears all previously
// placed furniture and every door clearance. Items that cannot be placed
// raise FurnitureOverflow in strict mode, otherwise they are skipped with a
// diagnostic.
std::vector<FurniturePlacement> place_furniture(const PlacedRoom& room,
                                                const std::vector<FurnitureCount>& items,
                                                const std::vector<PlacedDoor>& doors, Rng& rng,
                                                const LayoutConfig& config,
                                                Diagnostics* diags = nullptr,
                                                bool strict = false);

}  // namespace t2p
