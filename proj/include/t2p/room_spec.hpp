#pragma once

#include <string>
#include <utility>
#include <vector>

#include "t2p/domain.hpp"

namespace t2p {

struct DoorPlacement {
  int wall = 1;   // 1-based clockwise wall index, wall 1 = top
  int count = 1;  // doors on that wall
};

struct FurnitureCount {
  std::string symbol;
  int count = 1;
};

// The per-room record produced by extraction. Walls are numbered clockwise;
// dimensions are side lengths starting from wall 1, dimensionless layout units.
struct RoomSpec {
  std::string id;
  RoomType type = RoomType::Hall;
  std::string shape = "rectangle";
  int sides = 4;
  std::vector<int> dimensions;
  std::vector<DoorPlacement> door_placement;
  std::vector<FurnitureCount> furnitures;
};

// Throws on invariant violations (side/dimension mismatch, non-rectangle
// opposite sides, wall indices out of range, unknown furniture symbols).
void validate(const RoomSpec& spec);

enum class EdgeKind { Door, Adjacent };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Door ? "door" : "adjacent"; }

struct DcgEdge {
  std::string a;  // normalized: a < b
  std::string b;
  EdgeKind kind = EdgeKind::Door;
};

struct DoorConnectivityGraph {
  std::vector<std::string> nodes;
  std::vector<DcgEdge> edges;
  bool connected = true;
};

using RoomPair = std::pair<std::string, std::string>;

// Oracle for round-trip tests: exactly the plan a generated description encodes.
struct GroundTruthPlan {
  std::vector<RoomSpec> rooms;
  std::vector<RoomPair> door_edges;
  std::vector<RoomPair> adjacency_edges;
};

}  // namespace t2p
