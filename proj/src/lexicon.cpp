#include "t2p/lexicon.hpp"

#include <cctype>
#include <fstream>

#include "t2p/errors.hpp"

namespace t2p {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Lexicon::index_fusion(const std::string& term) {
  std::size_t us = term.find('_');
  if (us == std::string::npos) return;
  // Only two-word terms occur in the dictionaries.
  std::array<std::string, 3> f = {term.substr(0, us), term.substr(us + 1), term};
  for (const auto& existing : fusions_)
    if (existing == f) return;
  fusions_.push_back(f);
}

void Lexicon::add_room(const std::string& term, RoomType type) {
  room_words_[term] = type;
  index_fusion(term);
}

void Lexicon::add_furniture(const std::string& term, const std::string& symbol) {
  furniture_words_[term] = symbol;
  index_fusion(term);
}

void Lexicon::add_number(const std::string& term, int value) { number_words_[term] = value; }

void Lexicon::add_direction(const std::string& term, int wall) { direction_words_[term] = wall; }

void Lexicon::add_connective(const std::string& term, RelationKind kind) {
  connective_words_[term] = kind;
}

std::optional<RoomType> Lexicon::room(const std::string& token) const {
  auto it = room_words_.find(token);
  if (it == room_words_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::furniture(const std::string& token) const {
  auto it = furniture_words_.find(token);
  if (it == furniture_words_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Lexicon::number(const std::string& token) const {
  auto it = number_words_.find(token);
  if (it == number_words_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_direction(const std::string& token) const {
  return direction_words_.count(token) != 0;
}

std::optional<int> Lexicon::direction_wall(const std::string& token) const {
  auto it = direction_words_.find(token);
  if (it == direction_words_.end() || it->second == 0) return std::nullopt;
  return it->second;
}

bool Lexicon::is_connective(const std::string& token) const {
  return connective_words_.count(token) != 0;
}

std::optional<RelationKind> Lexicon::connective_kind(const std::string& token) const {
  auto it = connective_words_.find(token);
  if (it == connective_words_.end()) return std::nullopt;
  return it->second;
}

WordClass Lexicon::word_class(const std::string& token) const {
  if (room_words_.count(token)) return WordClass::Room;
  if (furniture_words_.count(token)) return WordClass::Furniture;
  if (number_words_.count(token)) return WordClass::Number;
  if (!token.empty() && (std::isdigit(static_cast<unsigned char>(token[0])) != 0))
    return WordClass::Number;
  if (direction_words_.count(token)) return WordClass::Direction;
  if (connective_words_.count(token)) return WordClass::Connective;
  return WordClass::Other;
}

Lexicon Lexicon::defaults() {
  Lexicon lex;

  auto room_all = [&](std::initializer_list<const char*> terms, RoomType t) {
    for (const char* s : terms) lex.add_room(s, t);
  };
  room_all({"bedroom", "bedrooms"}, RoomType::Bedroom);
  room_all({"kitchen", "kitchens"}, RoomType::Kitchen);
  room_all({"bathroom", "bathrooms", "washroom"}, RoomType::Bathroom);
  room_all({"hall", "hallway", "living_room"}, RoomType::Hall);
  room_all({"dining", "dining_area", "dining_room"}, RoomType::Dining);

  auto furn_all = [&](std::initializer_list<const char*> terms, const char* sym) {
    for (const char* s : terms) lex.add_furniture(s, sym);
  };
  furn_all({"bed", "beds"}, "bed");
  furn_all({"sofa", "sofas", "couch"}, "sofa");
  furn_all({"armchair", "armchairs"}, "armchair");
  furn_all({"chair", "chairs"}, "chair");
  furn_all({"table", "tables"}, "table");
  furn_all({"wardrobe", "wardrobes"}, "wardrobe");
  furn_all({"sink", "sinks"}, "sink");
  furn_all({"tub", "tubs", "bathtub"}, "tub");
  furn_all({"toilet", "toilets"}, "toilet");
  furn_all({"stove", "stoves"}, "stove");
  furn_all({"refrigerator", "refrigerators", "fridge"}, "refrigerator");
  furn_all({"washbasin", "washbasins"}, "washbasin");

  const char* cardinals[] = {"one", "two",   "three", "four", "five",  "six",
                             "seven", "eight", "nine",  "ten",  "eleven", "twelve"};
  for (int i = 0; i < 12; ++i) lex.add_number(cardinals[i], i + 1);
  const char* ordinals[] = {"first", "second", "third", "fourth", "fifth", "sixth"};
  for (int i = 0; i < 6; ++i) lex.add_number(ordinals[i], i + 1);

  // Compass directions map to clockwise wall indices, wall 1 = north/top.
  lex.add_direction("north", 1);
  lex.add_direction("east", 2);
  lex.add_direction("south", 3);
  lex.add_direction("west", 4);
  lex.add_direction("left", 0);
  lex.add_direction("right", 0);
  lex.add_direction("top", 1);
  lex.add_direction("bottom", 3);

  auto conn_all = [&](std::initializer_list<const char*> terms, RelationKind k) {
    for (const char* s : terms) lex.add_connective(s, k);
  };
  conn_all({"leads", "opens", "connects", "connected", "door", "doors"}, RelationKind::Door);
  conn_all({"adjacent", "next", "beside", "adjoining"}, RelationKind::Adjacent);

  return lex;
}

void Lexicon::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) raise(Errc::IoError, "cannot write " + path.string());
  out << "[rooms]\n";
  for (const auto& [term, type] : room_words_) out << term << "=" << to_string(type) << "\n";
  out << "[furniture]\n";
  for (const auto& [term, sym] : furniture_words_) out << term << "=" << sym << "\n";
  out << "[numbers]\n";
  for (const auto& [term, n] : number_words_) out << term << "=" << n << "\n";
  out << "[directions]\n";
  for (const auto& [term, wall] : direction_words_) out << term << "=" << wall << "\n";
  out << "[connectives]\n";
  for (const auto& [term, kind] : connective_words_)
    out << term << "=" << (kind == RelationKind::Door ? "door" : "adjacent") << "\n";
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::IoError, "cannot read " + path.string());
  Lexicon lex;
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      raise(Errc::FormatMismatch,
            path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (section == "rooms") {
      auto type = room_type_from(value);
      if (!type)
        raise(Errc::FormatMismatch, path.string() + ":" + std::to_string(lineno) +
                                        ": unknown room type '" + value + "'");
      lex.add_room(key, *type);
    } else if (section == "furniture") {
      if (!is_furniture_symbol(value))
        raise(Errc::FormatMismatch, path.string() + ":" + std::to_string(lineno) +
                                        ": unknown furniture symbol '" + value + "'");
      lex.add_furniture(key, value);
    } else if (section == "numbers") {
      lex.add_number(key, std::stoi(value));
    } else if (section == "directions") {
      lex.add_direction(key, std::stoi(value));
    } else if (section == "connectives") {
      if (value == "door")
        lex.add_connective(key, RelationKind::Door);
      else if (value == "adjacent")
        lex.add_connective(key, RelationKind::Adjacent);
      else
        raise(Errc::FormatMismatch, path.string() + ":" + std::to_string(lineno) +
                                        ": connective kind must be door or adjacent");
    } else {
      raise(Errc::FormatMismatch,
            path.string() + ":" + std::to_string(lineno) + ": line outside a known section");
    }
  }
  return lex;
}

}  // namespace t2p
