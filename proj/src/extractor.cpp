#include "t2p/extractor.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "t2p/errors.hpp"

namespace t2p {

namespace {

std::optional<int> numeric_value(const std::string& token, const Lexicon& lex) {
  if (!token.empty() && std::isdigit(static_cast<unsigned char>(token[0]))) {
    // integer layout units; decimals are not used by the record
    if (token.find('.') != std::string::npos) return std::nullopt;
    try {
      return std::stoi(token);
    } catch (...) {
      return std::nullopt;
    }
  }
  return lex.number(token);
}

std::vector<RoomType> room_mentions(const Sentence& s, const Lexicon& lex) {
  std::vector<RoomType> mentions;
  for (const auto& tok : s.tokens)
    if (auto room = lex.room(tok)) mentions.push_back(*room);
  return mentions;
}

}  // namespace

RoomSpec extract_room_spec(RoomType type, const std::vector<Sentence>& cluster,
                           const Lexicon& lex, Diagnostics* diags, bool strict) {
  RoomSpec spec;
  spec.id = std::string(to_string(type));
  spec.type = type;
  spec.shape = "rectangle";
  spec.sides = 4;

  std::optional<std::pair<int, int>> dims;
  std::string dims_source;
  std::vector<DoorPlacement> doors;
  std::vector<FurnitureCount> furniture;

  for (const Sentence& s : cluster) {
    const auto& toks = s.tokens;
    std::vector<RoomType> mentions = room_mentions(s, lex);
    std::set<RoomType> distinct(mentions.begin(), mentions.end());
    // Multi-room sentences describe the first-mentioned room; attribute
    // room-local slots to that room only.
    bool owns = distinct.size() < 2 || (!mentions.empty() && mentions.front() == type);
    if (!owns) continue;

    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      if (toks[i + 1] != "by" && toks[i + 1] != "x") continue;
      if (i + 2 >= toks.size()) continue;
      auto w = numeric_value(toks[i], lex);
      auto h = numeric_value(toks[i + 2], lex);
      if (!w || !h) continue;
      if (dims && (dims->first != *w || dims->second != *h)) {
        std::string msg = "room '" + spec.id + "': dimensions " + std::to_string(*w) + "x" +
                          std::to_string(*h) + " ('" + s.raw + "') conflict with " +
                          std::to_string(dims->first) + "x" + std::to_string(dims->second) +
                          " ('" + dims_source + "')";
        if (strict) raise(Errc::ConflictingDimensions, msg);
        if (diags) diags->add("extract", Severity::Warning, msg + "; keeping first mention");
      } else if (!dims) {
        dims = {*w, *h};
        dims_source = s.raw;
      }
    }

    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] != "door" && toks[i] != "doors") continue;
      int count = 1;
      if (i > 0)
        if (auto n = lex.number(toks[i - 1])) count = *n;
      // wall index from "... on the second wall" / "... at the north wall"
      std::optional<int> wall;
      for (std::size_t k = i + 1; k < toks.size() && k <= i + 5; ++k) {
        if (toks[k] == "wall") {
          for (std::size_t back = k; back > i; --back) {
            if (auto n = lex.number(toks[back - 1])) {
              wall = *n;
              break;
            }
            if (auto dw = lex.direction_wall(toks[back - 1])) {
              wall = *dw;
              break;
            }
          }
          break;
        }
      }
      if (!wall) continue;  // relation phrasing like "a door connects ..."
      bool merged = false;
      for (auto& dp : doors) {
        if (dp.wall == *wall) {
          dp.count += count;
          merged = true;
          break;
        }
      }
      if (!merged) doors.push_back({*wall, count});
    }

    for (std::size_t i = 0; i < toks.size(); ++i) {
      auto symbol = lex.furniture(toks[i]);
      if (!symbol) continue;
      int count = 1;
      if (i > 0)
        if (auto n = lex.number(toks[i - 1])) count = *n;
      bool merged = false;
      for (auto& fc : furniture) {
        if (fc.symbol == *symbol) {
          fc.count += count;
          merged = true;
          break;
        }
      }
      if (!merged) furniture.push_back({*symbol, count});
    }
  }

  if (dims) {
    spec.dimensions = {dims->first, dims->second, dims->first, dims->second};
  } else {
    spec.dimensions = {200, 150, 200, 150};
    if (diags)
      diags->add("extract", Severity::Info,
                 "room '" + spec.id + "': no dimensions found, using 200x150");
  }
  if (!doors.empty()) {
    spec.door_placement = std::move(doors);
  } else {
    spec.door_placement = {{1, 1}};
    if (diags)
      diags->add("extract", Severity::Info,
                 "room '" + spec.id + "': no door sentence, defaulting to one door on wall 1");
  }
  spec.furnitures = std::move(furniture);
  validate(spec);
  return spec;
}

std::vector<Relation> extract_relations(const std::vector<Sentence>& relation_sentences,
                                        const Lexicon& lex, Diagnostics* diags) {
  std::vector<Relation> relations;
  for (const Sentence& s : relation_sentences) {
    std::vector<RoomType> mentions = room_mentions(s, lex);
    std::vector<RoomType> distinct;
    for (RoomType m : mentions)
      if (std::find(distinct.begin(), distinct.end(), m) == distinct.end())
        distinct.push_back(m);
    if (distinct.size() < 2) {
      if (diags)
        diags->add("extract", Severity::Warning,
                   "relation sentence " + std::to_string(s.index) +
                       " has fewer than two room mentions, skipped: '" + s.raw + "'");
      continue;
    }
    std::optional<EdgeKind> kind;
    for (const auto& tok : s.tokens) {
      auto k = lex.connective_kind(tok);
      if (!k) continue;
      if (*k == RelationKind::Door) {
        kind = EdgeKind::Door;
        break;  // door verbs win
      }
      kind = EdgeKind::Adjacent;
    }
    if (!kind) {
      if (diags)
        diags->add("extract", Severity::Warning,
                   "relation sentence " + std::to_string(s.index) +
                       " has no connective, skipped: '" + s.raw + "'");
      continue;
    }
    relations.push_back({std::string(to_string(distinct[0])),
                         std::string(to_string(distinct[1])), *kind});
  }
  return relations;
}

DoorConnectivityGraph build_dcg(const std::vector<RoomSpec>& rooms,
                                const std::vector<Relation>& relations, Diagnostics* diags) {
  DoorConnectivityGraph dcg;
  std::set<std::string> ids;
  for (const auto& room : rooms) {
    if (!ids.insert(room.id).second)
      raise(Errc::FormatMismatch, "duplicate room id '" + room.id + "'");
    dcg.nodes.push_back(room.id);
  }

  std::map<RoomPair, EdgeKind> edges;
  for (const auto& rel : relations) {
    if (!ids.count(rel.room_a))
      raise(Errc::UnknownRoomReference, "relation names room '" + rel.room_a + "'");
    if (!ids.count(rel.room_b))
      raise(Errc::UnknownRoomReference, "relation names room '" + rel.room_b + "'");
    if (rel.room_a == rel.room_b) {
      if (diags)
        diags->add("extract", Severity::Warning,
                   "self-relation on '" + rel.room_a + "' ignored");
      continue;
    }
    RoomPair key = rel.room_a < rel.room_b ? RoomPair{rel.room_a, rel.room_b}
                                           : RoomPair{rel.room_b, rel.room_a};
    auto [it, inserted] = edges.insert({key, rel.kind});
    if (!inserted && rel.kind == EdgeKind::Door) it->second = EdgeKind::Door;
  }
  for (const auto& [pair, kind] : edges) dcg.edges.push_back({pair.first, pair.second, kind});

  // connectivity over all edge kinds
  std::map<std::string, std::string> parent;
  for (const auto& id : dcg.nodes) parent[id] = id;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : dcg.edges) parent[find(e.a)] = find(e.b);
  std::set<std::string> roots;
  for (const auto& id : dcg.nodes) roots.insert(find(id));
  dcg.connected = roots.size() <= 1;
  if (!dcg.connected && diags)
    diags->add("extract", Severity::Warning,
               "door connectivity graph has " + std::to_string(roots.size()) +
                   " components; they will be tiled side by side");
  return dcg;
}

}  // namespace t2p
