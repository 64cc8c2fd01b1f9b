#pragma once

#include <string>
#include <vector>

#include "t2p/classifier.hpp"
#include "t2p/diagnostics.hpp"
#include "t2p/lexicon.hpp"
#include "t2p/room_spec.hpp"
#include "t2p/text.hpp"

namespace t2p {

struct Relation {
  std::string room_a;
  std::string room_b;
  EdgeKind kind = EdgeKind::Door;
};

// Slot filling over a room's sentence cluster. Recognized patterns:
//   dimensions    <num> by <num> | <num> x <num>   (spelled numbers resolve
//                 through the lexicon; first wall listed is wall 1)
//   doors         [<count>] door(s) ... <ordinal|compass> wall
//   furniture     [<count>] <furniture-term>, count defaults to 1
// Missing attributes fall back to defaults (rectangle, 4 sides,
// 200x150, one door on wall 1, no furniture) with a diagnostic. Conflicting
// dimensions raise ConflictingDimensions in strict mode; otherwise the first
// mention wins. Sentences mentioning several rooms only contribute furniture
// to the room mentioned first.
RoomSpec extract_room_spec(RoomType type, const std::vector<Sentence>& cluster,
                           const Lexicon& lex, Diagnostics* diags = nullptr,
                           bool strict = false);

// One (room_a, room_b, kind) per relation sentence with at least two distinct
// resolvable room mentions; others are skipped with a diagnostic. Door verbs
// win over adjacency words when both occur.
std::vector<Relation> extract_relations(const std::vector<Sentence>& relation_sentences,
                                        const Lexicon& lex, Diagnostics* diags = nullptr);

// Deduplicated undirected graph; a door edge supersedes an adjacent edge on
// the same pair. Throws UnknownRoomReference for relations naming rooms
// without a RoomSpec. Reports disconnectedness via diagnostics and the
// `connected` flag.
DoorConnectivityGraph build_dcg(const std::vector<RoomSpec>& rooms,
                                const std::vector<Relation>& relations,
                                Diagnostics* diags = nullptr);

}  // namespace t2p
