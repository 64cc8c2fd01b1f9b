#include "t2p/generator.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "t2p/errors.hpp"
#include "t2p/rng.hpp"

namespace t2p {

namespace {

// Text name used in sentences; "dining" alone reads badly as a noun.
std::string text_name(RoomType t) {
  return t == RoomType::Dining ? std::string("dining area") : std::string(to_string(t));
}

const std::vector<std::string>& furniture_pool(RoomType t) {
  static const std::vector<std::string> bedroom = {"bed", "wardrobe", "chair", "table"};
  static const std::vector<std::string> kitchen = {"stove", "refrigerator", "sink", "table"};
  static const std::vector<std::string> bathroom = {"tub", "toilet", "washbasin", "sink"};
  static const std::vector<std::string> hall = {"sofa", "armchair", "chair", "table"};
  static const std::vector<std::string> dining = {"table", "chair", "armchair"};
  switch (t) {
    case RoomType::Bedroom: return bedroom;
    case RoomType::Kitchen: return kitchen;
    case RoomType::Bathroom: return bathroom;
    case RoomType::Hall: return hall;
    case RoomType::Dining: return dining;
  }
  return hall;
}

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

const std::vector<std::string> kAdjectives = {"cozy",  "spacious", "bright", "sunny",
                                              "large", "small",    "modern", "airy"};
const std::vector<std::string> kOrdinalWords = {"first", "second", "third", "fourth"};
const std::vector<std::string> kCompassWords = {"north", "east", "south", "west"};
const std::vector<std::string> kCountWords = {"one", "two"};

std::string plural(const std::string& symbol) { return symbol + "s"; }

std::string article_for(const std::string& word) {
  bool vowel = word.find_first_of("aeiou") == 0;
  return vowel ? "an" : "a";
}

// "a bed" / "two chairs"
std::string counted(const std::string& symbol, int count) {
  if (count == 1) return article_for(symbol) + " " + symbol;
  return kCountWords[static_cast<std::size_t>(count - 1)] + " " + plural(symbol);
}

// "bed" / "two chairs" (bare form, used by the list templates)
std::string counted_bare(const std::string& symbol, int count) {
  if (count == 1) return symbol;
  return kCountWords[static_cast<std::size_t>(count - 1)] + " " + plural(symbol);
}

}  // namespace

GeneratedDescription generate_description(std::uint64_t seed, int size) {
  if (size < 2 || size > 5)
    raise(Errc::UnsupportedSize,
          "room count " + std::to_string(size) + " outside supported range 2..5");

  Rng rng(seed);
  GeneratedDescription out;

  std::vector<RoomType> types(kRoomTypes.begin(), kRoomTypes.end());
  rng.shuffle(types);
  types.resize(static_cast<std::size_t>(size));

  struct RoomDraft {
    RoomType type;
    std::string id;
    int w = 0, h = 0;
    int door_wall = 1;
    std::vector<FurnitureCount> furniture;
  };
  std::vector<RoomDraft> drafts;
  for (RoomType t : types) {
    RoomDraft d;
    d.type = t;
    d.id = std::string(to_string(t));
    d.w = 140 + 10 * static_cast<int>(rng.below(17));  // 140..300
    d.h = 140 + 10 * static_cast<int>(rng.below(17));
    d.door_wall = 1 + static_cast<int>(rng.below(4));
    if (rng.unit() < 0.85) {
      std::vector<std::string> pool = furniture_pool(t);
      rng.shuffle(pool);
      std::size_t n = 1 + rng.below(std::min<std::uint64_t>(3, pool.size()));
      for (std::size_t i = 0; i < n; ++i) {
        int count = rng.unit() < 0.3 ? 2 : 1;
        d.furniture.push_back({pool[i], count});
      }
    }
    drafts.push_back(std::move(d));
  }

  std::vector<std::string> sentences;
  std::vector<std::vector<std::string>> labels;
  auto add = [&](const std::string& sentence, std::vector<std::string> tags) {
    sentences.push_back(sentence);
    labels.push_back(std::move(tags));
  };

  for (const RoomDraft& d : drafts) {
    const std::string name = text_name(d.type);
    const std::string tag = d.id;
    const std::string adj = rng.pick(kAdjectives);

    const std::string an = article_for(adj);
    switch (rng.below(4)) {
      case 0: add("There is " + an + " " + adj + " " + name + " in the house.", {tag}); break;
      case 1: add("The house has " + an + " " + adj + " " + name + ".", {tag}); break;
      case 2: add(capitalize("the " + name + " is " + adj + "."), {tag}); break;
      default:
        add(capitalize(an + " " + adj + " " + name + " is part of the plan."), {tag});
        break;
    }

    const std::string w = std::to_string(d.w);
    const std::string h = std::to_string(d.h);
    switch (rng.below(3)) {
      case 0: add(capitalize("the " + name + " is " + w + " by " + h + "."), {tag}); break;
      case 1: add(capitalize("the " + name + " measures " + w + " x " + h + "."), {tag}); break;
      default:
        add(capitalize("the " + name + " is a rectangle of " + w + " by " + h + "."), {tag});
        break;
    }

    const std::string ordinal = kOrdinalWords[static_cast<std::size_t>(d.door_wall - 1)];
    const std::string compass = kCompassWords[static_cast<std::size_t>(d.door_wall - 1)];
    switch (rng.below(3)) {
      case 0:
        add(capitalize("the " + name + " has one door on the " + ordinal + " wall."), {tag});
        break;
      case 1:
        add("There is one door on the " + ordinal + " wall of the " + name + ".", {tag});
        break;
      default:
        add(capitalize("the " + name + " has one door on the " + compass + " wall."), {tag});
        break;
    }

    if (!d.furniture.empty()) {
      auto bare_list = [&]() {
        std::string s;
        for (std::size_t i = 0; i < d.furniture.size(); ++i) {
          if (i > 0) s += (i + 1 == d.furniture.size()) ? " and " : ", ";
          s += counted_bare(d.furniture[i].symbol, d.furniture[i].count);
        }
        return s;
      };
      auto article_list = [&]() {
        std::string s;
        for (std::size_t i = 0; i < d.furniture.size(); ++i) {
          if (i > 0) s += (i + 1 == d.furniture.size()) ? " and " : ", ";
          s += counted(d.furniture[i].symbol, d.furniture[i].count);
        }
        return s;
      };
      switch (rng.below(3)) {
        case 0: add(capitalize("the " + name + " features " + bare_list() + "."), {tag}); break;
        case 1: add(capitalize("the " + name + " has " + article_list() + "."), {tag}); break;
        default:
          add(capitalize("the " + name + " contains " + article_list() + "."), {tag});
          break;
      }
    }
  }

  // Door edges form a spanning tree over the rooms.
  std::vector<RoomPair> door_edges;
  for (std::size_t i = 1; i < drafts.size(); ++i) {
    std::size_t parent = rng.below(i);
    door_edges.push_back({drafts[parent].id, drafts[i].id});
  }
  std::vector<RoomPair> adjacency_edges;
  if (size >= 3 && rng.unit() < 0.35) {
    // one extra adjacency edge between a non-tree pair
    std::set<RoomPair> used;
    for (const auto& [a, b] : door_edges) used.insert(a < b ? RoomPair{a, b} : RoomPair{b, a});
    std::vector<RoomPair> candidates;
    for (std::size_t i = 0; i < drafts.size(); ++i)
      for (std::size_t j = i + 1; j < drafts.size(); ++j) {
        RoomPair p = drafts[i].id < drafts[j].id ? RoomPair{drafts[i].id, drafts[j].id}
                                                 : RoomPair{drafts[j].id, drafts[i].id};
        if (!used.count(p)) candidates.push_back(p);
      }
    if (!candidates.empty()) adjacency_edges.push_back(rng.pick(candidates));
  }

  auto name_of = [&](const std::string& id) {
    return text_name(*room_type_from(id));
  };
  for (const auto& [a, b] : door_edges) {
    switch (rng.below(3)) {
      case 0:
        add(capitalize("the " + name_of(a) + " leads to the " + name_of(b) + "."),
            {a, b, "relation"});
        break;
      case 1:
        add(capitalize("the " + name_of(a) + " opens into the " + name_of(b) + "."),
            {a, b, "relation"});
        break;
      default:
        add("A door connects the " + name_of(a) + " and the " + name_of(b) + ".",
            {a, b, "relation"});
        break;
    }
  }
  for (const auto& [a, b] : adjacency_edges) {
    if (rng.below(2) == 0)
      add(capitalize("the " + name_of(a) + " is adjacent to the " + name_of(b) + "."),
          {a, b, "relation"});
    else
      add(capitalize("the " + name_of(a) + " is next to the " + name_of(b) + "."),
          {a, b, "relation"});
  }

  std::string text;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) text += " ";
    text += sentences[i];
  }
  out.text = std::move(text);
  out.labels = std::move(labels);

  for (const RoomDraft& d : drafts) {
    RoomSpec spec;
    spec.id = d.id;
    spec.type = d.type;
    spec.shape = "rectangle";
    spec.sides = 4;
    spec.dimensions = {d.w, d.h, d.w, d.h};
    spec.door_placement = {{d.door_wall, 1}};
    spec.furnitures = d.furniture;
    out.truth.rooms.push_back(std::move(spec));
  }
  out.truth.door_edges = std::move(door_edges);
  out.truth.adjacency_edges = std::move(adjacency_edges);
  return out;
}

}  // namespace t2p
