// Independent reference implementations used as test oracles. These are kept
// deliberately naive and separate from the library code paths they check.
#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "t2p/layout.hpp"
#include "t2p/room_spec.hpp"
#include "t2p/text.hpp"

namespace oracle {

// --- straight-line transcription of the pair-scoring formulas ---------------

inline double idw(int total_docs, int docs_with_term) {
  return std::log((total_docs - docs_with_term + 0.5) / (docs_with_term + 0.5));
}

inline double pair_score(const std::vector<std::string>& d, const std::vector<std::string>& q,
                         const t2p::CorpusStats& stats, double alpha, double beta, double gamma) {
  double score = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double f = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k] == q[i]) f += 1.0;
    double weight = idw(stats.doc_count, stats.freq(q[i]));
    double len_d = static_cast<double>(d.size());
    double denom = f + alpha * (1.0 - beta + beta * len_d / stats.avg_sentence_len);
    score += weight * (f * (alpha + 1.0) / denom + gamma);
  }
  return score;
}

// --- brute-force geometric verifier ----------------------------------------

struct PlanCheck {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(const std::string& what) {
    ok = false;
    violations.push_back(what);
  }
};

inline bool rects_overlap_interior(const t2p::Rect& a, const t2p::Rect& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

inline bool rect_inside(const t2p::Rect& inner, const t2p::Rect& outer) {
  return inner.x >= outer.x && inner.y >= outer.y && inner.x + inner.w <= outer.x + outer.w &&
         inner.y + inner.h <= outer.y + outer.h;
}

// Pairwise room disjointness, tree-edge doors on genuinely shared wall
// segments, furniture containment and clearance avoidance, bbox coverage.
inline PlanCheck verify_plan(const t2p::FloorPlan& plan,
                             const std::vector<t2p::RoomPair>& tree_edges,
                             const t2p::DoorConnectivityGraph& dcg) {
  PlanCheck check;

  for (std::size_t i = 0; i < plan.rooms.size(); ++i)
    for (std::size_t j = i + 1; j < plan.rooms.size(); ++j)
      if (rects_overlap_interior(plan.rooms[i].rect, plan.rooms[j].rect))
        check.fail("rooms overlap: " + plan.rooms[i].id + " / " + plan.rooms[j].id);

  // door edge kinds by normalized pair
  std::map<t2p::RoomPair, t2p::EdgeKind> edge_kind;
  for (const auto& e : dcg.edges)
    edge_kind[e.a < e.b ? t2p::RoomPair{e.a, e.b} : t2p::RoomPair{e.b, e.a}] = e.kind;

  for (const auto& [parent, child] : tree_edges) {
    t2p::RoomPair key = parent < child ? t2p::RoomPair{parent, child}
                                       : t2p::RoomPair{child, parent};
    auto it = edge_kind.find(key);
    if (it == edge_kind.end()) {
      check.fail("tree edge not in graph: " + parent + "-" + child);
      continue;
    }
    if (it->second != t2p::EdgeKind::Door) continue;

    const t2p::PlacedRoom* a = plan.find_room(parent);
    const t2p::PlacedRoom* b = plan.find_room(child);
    if (!a || !b) {
      check.fail("tree edge references unplaced room");
      continue;
    }
    int doors_found = 0;
    for (const auto& door : plan.doors) {
      bool matches = (door.room_a == parent && door.room_b == child) ||
                     (door.room_a == child && door.room_b == parent);
      if (!matches) continue;
      ++doors_found;
      // the gap must lie on a boundary segment common to both rooms
      if (door.axis == t2p::Axis::Horizontal) {
        int y = door.start.y;
        bool on_a = y == a->rect.y || y == a->rect.y + a->rect.h;
        bool on_b = y == b->rect.y || y == b->rect.y + b->rect.h;
        int lo = std::max(a->rect.x, b->rect.x);
        int hi = std::min(a->rect.x + a->rect.w, b->rect.x + b->rect.w);
        if (!on_a || !on_b || door.start.x < lo || door.start.x + door.width > hi)
          check.fail("door not on shared segment: " + parent + "-" + child);
      } else {
        int x = door.start.x;
        bool on_a = x == a->rect.x || x == a->rect.x + a->rect.w;
        bool on_b = x == b->rect.x || x == b->rect.x + b->rect.w;
        int lo = std::max(a->rect.y, b->rect.y);
        int hi = std::min(a->rect.y + a->rect.h, b->rect.y + b->rect.h);
        if (!on_a || !on_b || door.start.y < lo || door.start.y + door.width > hi)
          check.fail("door not on shared segment: " + parent + "-" + child);
      }
    }
    if (doors_found != 1)
      check.fail("tree door edge " + parent + "-" + child + " realized by " +
                 std::to_string(doors_found) + " doors");
  }

  for (const auto& item : plan.furniture) {
    const t2p::PlacedRoom* room = plan.find_room(item.room_id);
    if (!room) {
      check.fail("furniture in unknown room " + item.room_id);
      continue;
    }
    if (!rect_inside(item.rect, room->rect))
      check.fail("furniture outside its room: " + item.symbol + " in " + item.room_id);
    for (const auto& door : plan.doors)
      for (const auto& clearance : door.clearances)
        if (rects_overlap_interior(item.rect, clearance))
          check.fail("furniture blocks a door: " + item.symbol + " in " + item.room_id);
  }
  for (std::size_t i = 0; i < plan.furniture.size(); ++i)
    for (std::size_t j = i + 1; j < plan.furniture.size(); ++j)
      if (rects_overlap_interior(plan.furniture[i].rect, plan.furniture[j].rect))
        check.fail("furniture overlaps furniture in " + plan.furniture[i].room_id);

  for (const auto& room : plan.rooms)
    if (!rect_inside(room.rect, plan.bbox)) check.fail("bbox misses room " + room.id);

  return check;
}

}  // namespace oracle
