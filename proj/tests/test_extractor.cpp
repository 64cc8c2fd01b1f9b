#include <doctest.h>

#include "t2p/errors.hpp"
#include "t2p/extractor.hpp"

using namespace t2p;

namespace {

std::vector<Sentence> cluster_from(const std::vector<std::string>& raws, const Lexicon& lex) {
  std::vector<Sentence> cluster;
  for (std::size_t i = 0; i < raws.size(); ++i) {
    Sentence s;
    s.index = i;
    s.raw = raws[i];
    s.tokens = tokenize(raws[i], lex);
    cluster.push_back(std::move(s));
  }
  return cluster;
}

}  // namespace

TEST_CASE("extract_room_spec reproduces the hall record") {
  Lexicon lex = Lexicon::defaults();
  auto cluster = cluster_from(
      {"The hall is 250 by 200.",
       "The hall has one door on the second wall and one door on the third wall.",
       "The hall features a sofa and a chair."},
      lex);
  RoomSpec spec = extract_room_spec(RoomType::Hall, cluster, lex);
  CHECK(spec.id == "hall");
  CHECK(spec.type == RoomType::Hall);
  CHECK(spec.shape == "rectangle");
  CHECK(spec.sides == 4);
  CHECK(spec.dimensions == std::vector<int>{250, 200, 250, 200});
  REQUIRE(spec.door_placement.size() == 2);
  CHECK(spec.door_placement[0].wall == 2);
  CHECK(spec.door_placement[0].count == 1);
  CHECK(spec.door_placement[1].wall == 3);
  CHECK(spec.door_placement[1].count == 1);
  REQUIRE(spec.furnitures.size() == 2);
  CHECK(spec.furnitures[0].symbol == "sofa");
  CHECK(spec.furnitures[0].count == 1);
  CHECK(spec.furnitures[1].symbol == "chair");
  CHECK(spec.furnitures[1].count == 1);
}

TEST_CASE("extract_room_spec fills defaults and reports them") {
  Lexicon lex = Lexicon::defaults();
  Diagnostics diags;
  auto cluster = cluster_from({"The kitchen is modern."}, lex);
  RoomSpec spec = extract_room_spec(RoomType::Kitchen, cluster, lex, &diags);
  CHECK(spec.dimensions == std::vector<int>{200, 150, 200, 150});
  REQUIRE(spec.door_placement.size() == 1);
  CHECK(spec.door_placement[0].wall == 1);
  CHECK(spec.furnitures.empty());
  CHECK(diags.entries().size() == 2);  // missing dimensions + missing door
}

TEST_CASE("extract_room_spec resolves counted furniture") {
  Lexicon lex = Lexicon::defaults();
  auto cluster = cluster_from({"The dining area has two chairs and a table."}, lex);
  RoomSpec spec = extract_room_spec(RoomType::Dining, cluster, lex);
  REQUIRE(spec.furnitures.size() == 2);
  CHECK(spec.furnitures[0].symbol == "chair");
  CHECK(spec.furnitures[0].count == 2);
  CHECK(spec.furnitures[1].symbol == "table");
  CHECK(spec.furnitures[1].count == 1);
}

TEST_CASE("extract_room_spec wall phrasing variants") {
  Lexicon lex = Lexicon::defaults();
  SUBCASE("compass direction maps to the clockwise index") {
    auto cluster = cluster_from({"The bedroom has one door on the north wall."}, lex);
    RoomSpec spec = extract_room_spec(RoomType::Bedroom, cluster, lex);
    REQUIRE(spec.door_placement.size() == 1);
    CHECK(spec.door_placement[0].wall == 1);
  }
  SUBCASE("counted doors") {
    auto cluster = cluster_from({"The bedroom has two doors on the fourth wall."}, lex);
    RoomSpec spec = extract_room_spec(RoomType::Bedroom, cluster, lex);
    REQUIRE(spec.door_placement.size() == 1);
    CHECK(spec.door_placement[0].wall == 4);
    CHECK(spec.door_placement[0].count == 2);
  }
  SUBCASE("relation phrasing without a wall is not a door placement") {
    auto cluster = cluster_from({"A door connects the bedroom and the hall."}, lex);
    Diagnostics diags;
    RoomSpec spec = extract_room_spec(RoomType::Bedroom, cluster, lex, &diags);
    REQUIRE(spec.door_placement.size() == 1);
    CHECK(spec.door_placement[0].wall == 1);  // default, not parsed from the relation
  }
}

TEST_CASE("conflicting dimensions by policy") {
  Lexicon lex = Lexicon::defaults();
  auto cluster = cluster_from({"The hall is 250 by 200.", "The hall is 100 by 120."}, lex);
  SUBCASE("first mention wins in relaxed mode") {
    Diagnostics diags;
    RoomSpec spec = extract_room_spec(RoomType::Hall, cluster, lex, &diags, false);
    CHECK(spec.dimensions == std::vector<int>{250, 200, 250, 200});
    CHECK(diags.has(Severity::Warning));
  }
  SUBCASE("strict mode raises ConflictingDimensions") {
    CHECK_THROWS_AS(extract_room_spec(RoomType::Hall, cluster, lex, nullptr, true), Error);
    try {
      extract_room_spec(RoomType::Hall, cluster, lex, nullptr, true);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ConflictingDimensions);
    }
  }
  SUBCASE("a repeated equal mention is not a conflict") {
    auto repeat = cluster_from({"The hall is 250 by 200.", "The hall is 250 by 200."}, lex);
    Diagnostics diags;
    RoomSpec spec = extract_room_spec(RoomType::Hall, repeat, lex, &diags, true);
    CHECK(spec.dimensions == std::vector<int>{250, 200, 250, 200});
  }
}

TEST_CASE("multi-room sentences attribute furniture to the first room only") {
  Lexicon lex = Lexicon::defaults();
  auto cluster = cluster_from(
      {"The bedroom is adjacent to hall and there is a bed in the centre."}, lex);
  RoomSpec bedroom = extract_room_spec(RoomType::Bedroom, cluster, lex);
  REQUIRE(bedroom.furnitures.size() == 1);
  CHECK(bedroom.furnitures[0].symbol == "bed");

  // the very same sentence sits in the hall cluster but contributes nothing
  RoomSpec hall = extract_room_spec(RoomType::Hall, cluster, lex);
  CHECK(hall.furnitures.empty());
}

TEST_CASE("extract_relations resolves the connective phrasings") {
  Lexicon lex = Lexicon::defaults();
  auto sentences = cluster_from(
      {"The bedroom leads to bathroom.",
       "The bedroom is adjacent to hall and there is a bed in the centre.",
       "It is spacious."},
      lex);
  Diagnostics diags;
  auto relations = extract_relations(sentences, lex, &diags);
  REQUIRE(relations.size() == 2);
  CHECK(relations[0].room_a == "bedroom");
  CHECK(relations[0].room_b == "bathroom");
  CHECK(relations[0].kind == EdgeKind::Door);
  CHECK(relations[1].room_a == "bedroom");
  CHECK(relations[1].room_b == "hall");
  CHECK(relations[1].kind == EdgeKind::Adjacent);
  CHECK(diags.has(Severity::Warning));  // the roomless sentence was skipped
}

TEST_CASE("build_dcg constructs a connected path") {
  std::vector<RoomSpec> rooms(4);
  const char* ids[] = {"hall", "kitchen", "bedroom", "bathroom"};
  RoomType types[] = {RoomType::Hall, RoomType::Kitchen, RoomType::Bedroom, RoomType::Bathroom};
  for (int i = 0; i < 4; ++i) {
    rooms[static_cast<std::size_t>(i)].id = ids[i];
    rooms[static_cast<std::size_t>(i)].type = types[i];
    rooms[static_cast<std::size_t>(i)].dimensions = {200, 150, 200, 150};
    rooms[static_cast<std::size_t>(i)].door_placement = {{1, 1}};
  }
  std::vector<Relation> relations = {{"hall", "kitchen", EdgeKind::Door},
                                     {"kitchen", "bedroom", EdgeKind::Door},
                                     {"bedroom", "bathroom", EdgeKind::Door}};
  auto dcg = build_dcg(rooms, relations);
  CHECK(dcg.nodes.size() == 4);
  CHECK(dcg.edges.size() == 3);
  CHECK(dcg.connected);
}

TEST_CASE("build_dcg deduplicates and lets door win") {
  std::vector<RoomSpec> rooms(2);
  rooms[0].id = "hall";
  rooms[0].type = RoomType::Hall;
  rooms[0].dimensions = {200, 150, 200, 150};
  rooms[0].door_placement = {{1, 1}};
  rooms[1].id = "kitchen";
  rooms[1].type = RoomType::Kitchen;
  rooms[1].dimensions = {200, 150, 200, 150};
  rooms[1].door_placement = {{1, 1}};

  SUBCASE("duplicate door relation becomes a single edge") {
    std::vector<Relation> relations = {{"hall", "kitchen", EdgeKind::Door},
                                       {"hall", "kitchen", EdgeKind::Door}};
    auto dcg = build_dcg(rooms, relations);
    CHECK(dcg.edges.size() == 1);
    CHECK(dcg.edges[0].kind == EdgeKind::Door);
  }
  SUBCASE("door supersedes adjacent regardless of order") {
    std::vector<Relation> relations = {{"hall", "kitchen", EdgeKind::Adjacent},
                                       {"kitchen", "hall", EdgeKind::Door}};
    auto dcg = build_dcg(rooms, relations);
    REQUIRE(dcg.edges.size() == 1);
    CHECK(dcg.edges[0].kind == EdgeKind::Door);
  }
  SUBCASE("unknown room reference raises") {
    std::vector<Relation> relations = {{"hall", "garage", EdgeKind::Door}};
    CHECK_THROWS_AS(build_dcg(rooms, relations), Error);
  }
  SUBCASE("disconnected graph is reported") {
    Diagnostics diags;
    auto dcg = build_dcg(rooms, {}, &diags);
    CHECK(!dcg.connected);
    CHECK(diags.has(Severity::Warning));
  }
}

TEST_CASE("room specs serialize through JSON unchanged") {
  // round-trip check lives here because extraction owns the record shape
  Lexicon lex = Lexicon::defaults();
  auto cluster = cluster_from(
      {"The hall is 250 by 200.",
       "The hall has one door on the second wall and one door on the third wall.",
       "The hall features a sofa and a chair."},
      lex);
  RoomSpec spec = extract_room_spec(RoomType::Hall, cluster, lex);
  validate(spec);
}
