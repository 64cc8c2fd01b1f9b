#include "t2p/layout.hpp"

#include <algorithm>
#include <cstdint>

#include "t2p/errors.hpp"

namespace t2p {

void FloorPlan::recompute_bbox() {
  if (rooms.empty()) {
    bbox = {0, 0, 0, 0};
    return;
  }
  int lo_x = rooms[0].rect.x, lo_y = rooms[0].rect.y;
  int hi_x = rooms[0].rect.right(), hi_y = rooms[0].rect.bottom();
  for (const auto& r : rooms) {
    lo_x = std::min(lo_x, r.rect.x);
    lo_y = std::min(lo_y, r.rect.y);
    hi_x = std::max(hi_x, r.rect.right());
    hi_y = std::max(hi_y, r.rect.bottom());
  }
  bbox = {lo_x, lo_y, hi_x - lo_x, hi_y - lo_y};
}

LayoutConfig LayoutConfig::defaults() {
  LayoutConfig cfg;
  cfg.footprints = {
      {"bed", {90, 50}},      {"sofa", {80, 35}},         {"armchair", {40, 40}},
      {"chair", {25, 25}},    {"table", {60, 60}},        {"wardrobe", {80, 30}},
      {"sink", {40, 30}},     {"tub", {80, 40}},          {"toilet", {35, 45}},
      {"stove", {50, 50}},    {"refrigerator", {45, 45}}, {"washbasin", {35, 30}},
  };
  return cfg;
}

LayoutConfig LayoutConfig::scaled(int factor) const {
  LayoutConfig cfg = *this;
  cfg.door_width *= factor;
  cfg.clearance_depth *= factor;
  cfg.component_gap *= factor;
  cfg.scan_step *= factor;
  for (auto& [sym, fp] : cfg.footprints) {
    fp.w *= factor;
    fp.h *= factor;
  }
  return cfg;
}

Rect synthesize_local(const RoomSpec& spec) {
  validate(spec);
  if (spec.shape != "rectangle")
    raise(Errc::UnsupportedShape, "room '" + spec.id + "': shape '" + spec.shape + "'");
  return {0, 0, spec.dimensions[0], spec.dimensions[1]};
}

namespace {

std::string lowest_id(const std::set<std::string>& ids) { return *ids.begin(); }

std::string entry_for(const std::set<std::string>& ids, const std::vector<RoomSpec>& specs,
                      const std::set<std::string>& hints) {
  std::set<std::string> hinted;
  for (const auto& h : hints)
    if (ids.count(h)) hinted.insert(h);
  if (!hinted.empty()) return lowest_id(hinted);
  std::set<std::string> halls;
  for (const auto& s : specs)
    if (s.type == RoomType::Hall && ids.count(s.id)) halls.insert(s.id);
  if (!halls.empty()) return lowest_id(halls);
  return lowest_id(ids);
}

struct SharedSegment {
  Axis axis = Axis::Horizontal;
  Point start;  // left/top end
  int length = 0;
};

// Boundary segment the two rectangles share, if any (they must touch along a
// full edge line; interiors are disjoint by construction).
std::optional<SharedSegment> shared_boundary(const Rect& a, const Rect& b) {
  if (a.right() == b.x || b.right() == a.x) {
    int x = a.right() == b.x ? a.right() : b.right();
    int lo = std::max(a.y, b.y);
    int hi = std::min(a.bottom(), b.bottom());
    if (hi - lo > 0) return SharedSegment{Axis::Vertical, {x, lo}, hi - lo};
  }
  if (a.bottom() == b.y || b.bottom() == a.y) {
    int y = a.bottom() == b.y ? a.bottom() : b.bottom();
    int lo = std::max(a.x, b.x);
    int hi = std::min(a.right(), b.right());
    if (hi - lo > 0) return SharedSegment{Axis::Horizontal, {lo, y}, hi - lo};
  }
  return std::nullopt;
}

PlacedDoor make_door(const std::string& room_a, const std::string& room_b,
                     const SharedSegment& seg, const Rect& rect_a,
                     const std::optional<Rect>& rect_b, const LayoutConfig& cfg) {
  PlacedDoor door;
  door.room_a = room_a;
  door.room_b = room_b;
  door.axis = seg.axis;
  door.width = cfg.door_width;
  int offset = (seg.length - cfg.door_width) / 2;
  door.start = seg.axis == Axis::Horizontal ? Point{seg.start.x + offset, seg.start.y}
                                            : Point{seg.start.x, seg.start.y + offset};

  auto clearance_for = [&](const Rect& room) {
    if (seg.axis == Axis::Horizontal) {
      bool above = room.bottom() == door.start.y;
      int y = above ? door.start.y - cfg.clearance_depth : door.start.y;
      return Rect{door.start.x, y, cfg.door_width, cfg.clearance_depth};
    }
    bool left = room.right() == door.start.x;
    int x = left ? door.start.x - cfg.clearance_depth : door.start.x;
    return Rect{x, door.start.y, cfg.clearance_depth, cfg.door_width};
  };
  door.clearances.push_back(clearance_for(rect_a));
  if (rect_b) door.clearances.push_back(clearance_for(*rect_b));
  return door;
}

// First collision-free flush placement of a child against the parent's
// walls: walls clockwise, offsets ascending.
std::optional<Rect> attach(const Rect& parent, int child_w, int child_h,
                           const std::vector<Rect>& placed, const LayoutConfig& cfg) {
  for (int wall = 1; wall <= 4; ++wall) {
    bool horizontal = wall == 1 || wall == 3;
    int wall_len = horizontal ? parent.w : parent.h;
    int child_extent = horizontal ? child_w : child_h;
    if (std::min(wall_len, child_extent) < cfg.door_width) continue;
    for (int offset = 0; offset <= wall_len - cfg.door_width; offset += cfg.scan_step) {
      Rect candidate;
      switch (wall) {
        case 1: candidate = {parent.x + offset, parent.y - child_h, child_w, child_h}; break;
        case 2: candidate = {parent.right(), parent.y + offset, child_w, child_h}; break;
        case 3: candidate = {parent.x + offset, parent.bottom(), child_w, child_h}; break;
        default: candidate = {parent.x - child_w, parent.y + offset, child_w, child_h}; break;
      }
      bool collides = false;
      for (const auto& r : placed) {
        if (candidate.overlaps_interior(r)) {
          collides = true;
          break;
        }
      }
      if (!collides) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string choose_entry_room(const DoorConnectivityGraph& dcg,
                              const std::vector<RoomSpec>& specs,
                              const std::set<std::string>& entrance_hints) {
  std::set<std::string> ids(dcg.nodes.begin(), dcg.nodes.end());
  if (ids.empty())
    for (const auto& s : specs) ids.insert(s.id);
  if (ids.empty()) raise(Errc::EmptyCorpus, "no rooms to choose an entry from");
  return entry_for(ids, specs, entrance_hints);
}

LayoutResult dfs_place(const DoorConnectivityGraph& dcg, const std::vector<RoomSpec>& specs,
                       std::uint64_t seed, const LayoutConfig& config, bool strict,
                       const std::set<std::string>& entrance_hints) {
  LayoutResult result;
  if (specs.empty()) {
    result.plan.recompute_bbox();
    return result;
  }

  std::map<std::string, const RoomSpec*> by_id;
  for (const auto& s : specs) {
    validate(s);
    if (!by_id.insert({s.id, &s}).second)
      raise(Errc::FormatMismatch, "duplicate room id '" + s.id + "'");
  }
  for (const auto& node : dcg.nodes)
    if (!by_id.count(node)) raise(Errc::UnknownRoomReference, "graph node '" + node + "'");

  // Adjacency (sorted for a deterministic DFS) and connected components.
  std::map<std::string, std::vector<std::pair<std::string, EdgeKind>>> adjacency;
  for (const auto& e : dcg.edges) {
    adjacency[e.a].push_back({e.b, e.kind});
    adjacency[e.b].push_back({e.a, e.kind});
  }
  for (auto& [id, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  std::map<std::string, std::string> comp_parent;
  for (const auto& s : specs) comp_parent[s.id] = s.id;
  auto find_root = [&](std::string x) {
    while (comp_parent[x] != x) x = comp_parent[x] = comp_parent[comp_parent[x]];
    return x;
  };
  for (const auto& e : dcg.edges) comp_parent[find_root(e.a)] = find_root(e.b);

  std::map<std::string, std::set<std::string>> components;
  for (const auto& s : specs) components[find_root(s.id)].insert(s.id);

  const std::string global_entry = entry_for(
      [&] {
        std::set<std::string> all;
        for (const auto& s : specs) all.insert(s.id);
        return all;
      }(),
      specs, entrance_hints);

  std::vector<std::set<std::string>> ordered_components;
  ordered_components.push_back(components.at(find_root(global_entry)));
  for (const auto& [root, ids] : components)
    if (!ids.count(global_entry)) ordered_components.push_back(ids);

  FloorPlan& plan = result.plan;
  bool first_component = true;
  int cursor_x = 0;

  for (const auto& comp_ids : ordered_components) {
    std::string entry = comp_ids.count(global_entry) ? global_entry
                                                     : entry_for(comp_ids, specs, entrance_hints);

    std::vector<std::string> order;        // DFS preorder
    std::map<std::string, Rect> rects;     // component-local
    std::vector<Rect> placed;
    std::vector<RoomPair> comp_tree;

    const RoomSpec& entry_spec = *by_id.at(entry);
    rects[entry] = synthesize_local(entry_spec);
    placed.push_back(rects[entry]);
    order.push_back(entry);

    std::set<std::string> visited = {entry};
    // Explicit stack, expanding children at pop time in sorted order.
    std::vector<std::pair<std::string, std::string>> work;  // (parent, child)
    auto push_children = [&](const std::string& u) {
      auto it = adjacency.find(u);
      if (it == adjacency.end()) return;
      for (auto nbr = it->second.rbegin(); nbr != it->second.rend(); ++nbr)
        work.push_back({u, nbr->first});
    };
    push_children(entry);
    while (!work.empty()) {
      auto [parent, child] = work.back();
      work.pop_back();
      if (visited.count(child)) continue;
      const RoomSpec& child_spec = *by_id.at(child);
      Rect local = synthesize_local(child_spec);
      auto rect = attach(rects.at(parent), local.w, local.h, placed, config);
      if (!rect) {
        std::string placed_ids;
        for (const auto& id : order) placed_ids += (placed_ids.empty() ? "" : ",") + id;
        raise(Errc::PlacementFailure, "no collision-free wall for room '" + child +
                                          "' against '" + parent + "' (placed: " + placed_ids +
                                          ")");
      }
      rects[child] = *rect;
      placed.push_back(*rect);
      visited.insert(child);
      order.push_back(child);
      comp_tree.push_back({parent, child});
      push_children(child);
    }

    // Tile components left to right.
    int dx = 0, dy = 0;
    if (!first_component) {
      int lo_x = rects.at(order[0]).x;
      for (const auto& [id, r] : rects) lo_x = std::min(lo_x, r.x);
      dx = cursor_x - lo_x;
    }
    for (const auto& id : order) {
      const RoomSpec& spec = *by_id.at(id);
      PlacedRoom room;
      room.id = id;
      room.type = spec.type;
      room.rect = rects.at(id).translated(dx, dy);
      room.label_anchor = room.rect.center();
      plan.rooms.push_back(room);
    }
    int hi_x = plan.rooms.back().rect.right();
    for (const auto& r : plan.rooms) hi_x = std::max(hi_x, r.rect.right());
    cursor_x = hi_x + config.component_gap;
    first_component = false;

    result.tree_edges.insert(result.tree_edges.end(), comp_tree.begin(), comp_tree.end());
  }

  // Doors for graph edges: tree edges share a wall by construction; non-tree
  // edges only get a door when the DFS happened to leave the rooms touching.
  std::set<RoomPair> tree_set;
  for (const auto& [a, b] : result.tree_edges)
    tree_set.insert(a < b ? RoomPair{a, b} : RoomPair{b, a});

  auto room_rect = [&](const std::string& id) { return plan.find_room(id)->rect; };

  for (const auto& e : dcg.edges) {
    RoomPair key = e.a < e.b ? RoomPair{e.a, e.b} : RoomPair{e.b, e.a};
    bool is_tree = tree_set.count(key) != 0;
    auto seg = shared_boundary(room_rect(e.a), room_rect(e.b));
    if (e.kind == EdgeKind::Adjacent) {
      if (!seg && !is_tree)
        result.diags.add("layout", Severity::Warning,
                         "adjacency between '" + e.a + "' and '" + e.b +
                             "' could not be realized as shared wall");
      continue;
    }
    if (seg && seg->length >= config.door_width) {
      plan.doors.push_back(
          make_door(e.a, e.b, *seg, room_rect(e.a), room_rect(e.b), config));
    } else {
      std::string msg = "door edge between '" + e.a + "' and '" + e.b +
                        "' could not be realized (no shared wall segment wide enough)";
      if (is_tree || strict) raise(Errc::PlacementFailure, msg);
      result.diags.add("layout", Severity::Warning, msg);
    }
  }

  place_doors(plan, specs, config, &result.diags);

  // Furniture, one shared deterministic stream in room placement order.
  Rng rng(seed);
  for (const auto& room : plan.rooms) {
    const RoomSpec& spec = *by_id.at(room.id);
    auto items = place_furniture(room, spec.furnitures, plan.doors, rng, config,
                                 &result.diags, strict);
    plan.furniture.insert(plan.furniture.end(), items.begin(), items.end());
  }

  plan.recompute_bbox();
  return result;
}

void place_doors(FloorPlan& plan, const std::vector<RoomSpec>& specs,
                 const LayoutConfig& config, Diagnostics* diags) {
  std::map<std::string, const RoomSpec*> by_id;
  for (const auto& s : specs) by_id[s.id] = &s;

  for (const auto& room : plan.rooms) {
    auto it = by_id.find(room.id);
    if (it == by_id.end()) continue;
    const RoomSpec& spec = *it->second;
    auto walls = room.walls();
    for (const auto& dp : spec.door_placement) {
      const WallSegment& wall = walls[static_cast<std::size_t>(dp.wall - 1)];
      bool horizontal = wall.a.y == wall.b.y;
      int wall_y = wall.a.y, wall_x = wall.a.x;
      int lo = horizontal ? std::min(wall.a.x, wall.b.x) : std::min(wall.a.y, wall.b.y);
      int len = horizontal ? std::abs(wall.b.x - wall.a.x) : std::abs(wall.b.y - wall.a.y);

      // A graph door already on this wall consumes the record entry.
      bool consumed = false;
      for (const auto& d : plan.doors) {
        if (d.room_a != room.id && d.room_b != room.id) continue;
        if (horizontal != (d.axis == Axis::Horizontal)) continue;
        if (horizontal ? d.start.y != wall_y : d.start.x != wall_x) continue;
        int dlo = horizontal ? d.start.x : d.start.y;
        if (dlo < lo + len && dlo + d.width > lo) {
          consumed = true;
          break;
        }
      }
      if (consumed) continue;

      const int n = dp.count;
      if (n * config.door_width > len)
        raise(Errc::WallOverflow, "room '" + room.id + "': " + std::to_string(n) +
                                      " doors of width " + std::to_string(config.door_width) +
                                      " exceed wall " + std::to_string(dp.wall) + " length " +
                                      std::to_string(len));
      const std::int64_t free_len = len - static_cast<std::int64_t>(n) * config.door_width;
      for (int i = 0; i < n; ++i) {
        // i-th gap boundary of the even spacing, exact integer arithmetic
        int pos = static_cast<int>((static_cast<std::int64_t>(i + 1) * free_len) / (n + 1)) +
                  i * config.door_width;
        PlacedDoor door;
        door.room_a = room.id;
        door.room_b = "";
        door.axis = horizontal ? Axis::Horizontal : Axis::Vertical;
        door.width = config.door_width;
        door.start = horizontal ? Point{lo + pos, wall_y} : Point{wall_x, lo + pos};
        if (horizontal) {
          bool top_wall = room.rect.y == wall_y;
          int cy = top_wall ? wall_y : wall_y - config.clearance_depth;
          door.clearances.push_back({door.start.x, cy, config.door_width,
                                     config.clearance_depth});
        } else {
          bool left_wall = room.rect.x == wall_x;
          int cx = left_wall ? wall_x : wall_x - config.clearance_depth;
          door.clearances.push_back({cx, door.start.y, config.clearance_depth,
                                     config.door_width});
        }
        plan.doors.push_back(std::move(door));
      }
    }
  }
  (void)diags;
}

std::vector<FurniturePlacement> place_furniture(const PlacedRoom& room,
                                                const std::vector<FurnitureCount>& items,
                                                const std::vector<PlacedDoor>& doors, Rng& rng,
                                                const LayoutConfig& config, Diagnostics* diags,
                                                bool strict) {
  std::vector<FurniturePlacement> placed;

  std::vector<Rect> blocked;
  for (const auto& d : doors)
    for (const auto& c : d.clearances)
      if (c.overlaps_interior(room.rect)) blocked.push_back(c);

  auto fits = [&](const Rect& r) {
    if (!room.rect.contains(r)) return false;
    for (const auto& b : blocked)
      if (r.overlaps_interior(b)) return false;
    for (const auto& p : placed)
      if (r.overlaps_interior(p.rect)) return false;
    return true;
  };

  for (const auto& item : items) {
    auto fp_it = config.footprints.find(item.symbol);
    if (fp_it == config.footprints.end())
      raise(Errc::UnknownSymbol, "no footprint for symbol '" + item.symbol + "'");
    const Footprint fp = fp_it->second;

    for (int n = 0; n < item.count; ++n) {
      const int corner = static_cast<int>(rng.below(4));  // one draw per item
      bool done = false;
      for (int step = 0; step < 4 && !done; ++step) {
        const int wall = 1 + (corner + step) % 4;
        const bool horizontal = wall == 1 || wall == 3;
        const int fw = horizontal ? fp.w : fp.h;
        const int fh = horizontal ? fp.h : fp.w;
        if (fw > room.rect.w || fh > room.rect.h) continue;
        const int travel = (horizontal ? room.rect.w : room.rect.h) - (horizontal ? fw : fh);
        for (int off = 0; off <= travel && !done; off += config.scan_step) {
          Rect r;
          switch (wall) {
            case 1: r = {room.rect.x + off, room.rect.y, fw, fh}; break;
            case 2: r = {room.rect.right() - fw, room.rect.y + off, fw, fh}; break;
            case 3: r = {room.rect.right() - fw - off, room.rect.bottom() - fh, fw, fh}; break;
            default: r = {room.rect.x, room.rect.bottom() - fh - off, fw, fh}; break;
          }
          if (fits(r)) {
            placed.push_back({item.symbol, room.id, r, (wall - 1) * 90});
            done = true;
          }
        }
      }
      if (!done) {
        std::string msg = "room '" + room.id + "': no free wall space for '" + item.symbol + "'";
        if (strict) raise(Errc::FurnitureOverflow, msg);
        if (diags) diags->add("layout", Severity::Warning, msg + ", skipped");
      }
    }
  }
  return placed;
}

}  // namespace t2p
