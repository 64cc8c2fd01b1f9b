#include "t2p/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "t2p/errors.hpp"

namespace t2p {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    raise(Errc::FormatMismatch, std::string(what) + ": " + e.what());
  }
}

json room_to_json(const RoomSpec& room) {
  json j;
  j["id"] = room.id;
  j["type"] = std::string(to_string(room.type));
  j["shape"] = room.shape;
  j["sides"] = room.sides;
  j["dimensions"] = room.dimensions;
  json doors = json::array();
  for (const auto& dp : room.door_placement) doors.push_back({dp.wall, dp.count});
  j["door_placement"] = doors;
  json furn = json::array();
  for (const auto& fc : room.furnitures) furn.push_back({fc.symbol, fc.count});
  j["furnitures"] = furn;
  return j;
}

RoomSpec room_from_json(const json& j) {
  RoomSpec room;
  room.id = j.at("id").get<std::string>();
  auto type = room_type_from(j.at("type").get<std::string>());
  if (!type) raise(Errc::FormatMismatch, "unknown room type in rooms.json");
  room.type = *type;
  room.shape = j.at("shape").get<std::string>();
  room.sides = j.at("sides").get<int>();
  room.dimensions = j.at("dimensions").get<std::vector<int>>();
  for (const auto& pair : j.at("door_placement"))
    room.door_placement.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  for (const auto& pair : j.at("furnitures"))
    room.furnitures.push_back({pair.at(0).get<std::string>(), pair.at(1).get<int>()});
  return room;
}

json rect_to_json(const Rect& r) { return json{{"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}}; }

Rect rect_from_json(const json& j) {
  return {j.at("x").get<int>(), j.at("y").get<int>(), j.at("w").get<int>(), j.at("h").get<int>()};
}

}  // namespace

std::string rooms_to_json(const std::vector<RoomSpec>& rooms) {
  json arr = json::array();
  for (const auto& room : rooms) arr.push_back(room_to_json(room));
  return arr.dump(1) + "\n";
}

std::vector<RoomSpec> rooms_from_json(const std::string& text) {
  json arr = parse(text, "rooms.json");
  if (!arr.is_array()) raise(Errc::FormatMismatch, "rooms.json: expected an array");
  std::vector<RoomSpec> rooms;
  for (const auto& j : arr) rooms.push_back(room_from_json(j));
  return rooms;
}

std::string dcg_to_json(const DoorConnectivityGraph& dcg) {
  json j;
  j["nodes"] = dcg.nodes;
  json edges = json::array();
  for (const auto& e : dcg.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", to_string(e.kind)}});
  j["edges"] = edges;
  j["connected"] = dcg.connected;
  return j.dump(1) + "\n";
}

DoorConnectivityGraph dcg_from_json(const std::string& text) {
  json j = parse(text, "dcg.json");
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    raise(Errc::FormatMismatch, "dcg.json: expected {nodes, edges}");
  DoorConnectivityGraph dcg;
  dcg.nodes = j.at("nodes").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges")) {
    EdgeKind kind = e.at("kind").get<std::string>() == "door" ? EdgeKind::Door
                                                              : EdgeKind::Adjacent;
    dcg.edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(), kind});
  }
  dcg.connected = j.value("connected", true);
  return dcg;
}

std::string plan_to_json(const FloorPlan& plan) {
  json j;
  j["bbox"] = rect_to_json(plan.bbox);
  json rooms = json::array();
  for (const auto& room : plan.rooms) {
    json r;
    r["id"] = room.id;
    r["type"] = std::string(to_string(room.type));
    r["rect"] = rect_to_json(room.rect);
    r["label_anchor"] = {{"x", room.label_anchor.x}, {"y", room.label_anchor.y}};
    json walls = json::array();
    for (const auto& wall : room.walls())
      walls.push_back({{"n", wall.number},
                       {"x1", wall.a.x},
                       {"y1", wall.a.y},
                       {"x2", wall.b.x},
                       {"y2", wall.b.y}});
    r["walls"] = walls;
    rooms.push_back(r);
  }
  j["rooms"] = rooms;
  json doors = json::array();
  for (const auto& door : plan.doors) {
    json d;
    d["room_a"] = door.room_a;
    d["room_b"] = door.room_b.empty() ? json(nullptr) : json(door.room_b);
    d["axis"] = door.axis == Axis::Horizontal ? "h" : "v";
    d["x"] = door.start.x;
    d["y"] = door.start.y;
    d["width"] = door.width;
    json clears = json::array();
    for (const auto& c : door.clearances) clears.push_back(rect_to_json(c));
    d["clearances"] = clears;
    doors.push_back(d);
  }
  j["doors"] = doors;
  json furniture = json::array();
  for (const auto& item : plan.furniture) {
    json f;
    f["symbol"] = item.symbol;
    f["room"] = item.room_id;
    f["rect"] = rect_to_json(item.rect);
    f["rotation"] = item.rotation;
    furniture.push_back(f);
  }
  j["furniture"] = furniture;
  return j.dump(1) + "\n";
}

FloorPlan plan_from_json(const std::string& text) {
  json j = parse(text, "plan.json");
  if (!j.is_object() || !j.contains("rooms") || !j.contains("doors"))
    raise(Errc::FormatMismatch, "plan.json: expected {bbox, rooms, doors, furniture}");
  FloorPlan plan;
  plan.bbox = rect_from_json(j.at("bbox"));
  for (const auto& r : j.at("rooms")) {
    PlacedRoom room;
    room.id = r.at("id").get<std::string>();
    auto type = room_type_from(r.at("type").get<std::string>());
    if (!type) raise(Errc::FormatMismatch, "plan.json: unknown room type");
    room.type = *type;
    room.rect = rect_from_json(r.at("rect"));
    room.label_anchor = {r.at("label_anchor").at("x").get<int>(),
                         r.at("label_anchor").at("y").get<int>()};
    plan.rooms.push_back(room);
  }
  for (const auto& d : j.at("doors")) {
    PlacedDoor door;
    door.room_a = d.at("room_a").get<std::string>();
    door.room_b = d.at("room_b").is_null() ? "" : d.at("room_b").get<std::string>();
    door.axis = d.at("axis").get<std::string>() == "h" ? Axis::Horizontal : Axis::Vertical;
    door.start = {d.at("x").get<int>(), d.at("y").get<int>()};
    door.width = d.at("width").get<int>();
    for (const auto& c : d.at("clearances")) door.clearances.push_back(rect_from_json(c));
    plan.doors.push_back(door);
  }
  for (const auto& f : j.at("furniture")) {
    FurniturePlacement item;
    item.symbol = f.at("symbol").get<std::string>();
    item.room_id = f.at("room").get<std::string>();
    item.rect = rect_from_json(f.at("rect"));
    item.rotation = f.at("rotation").get<int>();
    plan.furniture.push_back(item);
  }
  return plan;
}

std::string truth_to_json(const GroundTruthPlan& truth) {
  json j;
  json rooms = json::array();
  for (const auto& room : truth.rooms) rooms.push_back(room_to_json(room));
  j["rooms"] = rooms;
  json doors = json::array();
  for (const auto& [a, b] : truth.door_edges) doors.push_back({a, b});
  j["door_edges"] = doors;
  json adj = json::array();
  for (const auto& [a, b] : truth.adjacency_edges) adj.push_back({a, b});
  j["adjacency_edges"] = adj;
  return j.dump(1) + "\n";
}

GroundTruthPlan truth_from_json(const std::string& text) {
  json j = parse(text, "truth.json");
  GroundTruthPlan truth;
  for (const auto& r : j.at("rooms")) truth.rooms.push_back(room_from_json(r));
  for (const auto& e : j.at("door_edges"))
    truth.door_edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
  for (const auto& e : j.at("adjacency_edges"))
    truth.adjacency_edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
  return truth;
}

std::string labels_to_tsv(const std::vector<SentenceLabel>& labels) {
  std::ostringstream out;
  for (const auto& label : labels) {
    out << label.sentence_index << "\t";
    if (label.room_tags.empty()) {
      out << "-";
    } else {
      bool first = true;
      for (RoomType t : label.room_tags) {
        if (!first) out << ",";
        out << to_string(t);
        first = false;
      }
    }
    out << "\t" << (label.is_relation ? 1 : 0) << "\n";
  }
  return out.str();
}

std::vector<SentenceLabel> labels_from_tsv(const std::string& text) {
  std::vector<SentenceLabel> labels;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string idx, tags, rel;
    if (!std::getline(fields, idx, '\t') || !std::getline(fields, tags, '\t') ||
        !std::getline(fields, rel, '\t'))
      raise(Errc::FormatMismatch,
            "labels.tsv line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
    SentenceLabel label;
    label.sentence_index = static_cast<std::size_t>(std::stoull(idx));
    if (tags != "-" && !tags.empty()) {
      std::istringstream tag_in(tags);
      std::string tag;
      while (std::getline(tag_in, tag, ',')) {
        auto type = room_type_from(tag);
        if (!type)
          raise(Errc::FormatMismatch,
                "labels.tsv line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        label.room_tags.insert(*type);
      }
    }
    label.is_relation = rel == "1" || rel == "true";
    labels.push_back(label);
  }
  return labels;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot write " + path.string());
  out << content;
}

}  // namespace t2p
