#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "t2p/domain.hpp"

namespace t2p {

enum class WordClass { Room, Furniture, Number, Direction, Connective, Other };

enum class RelationKind { Door, Adjacent };

// Custom dictionaries backing tokenization, extraction and the rule-based
// classifier. Terms are lowercase; multiword terms use '_' as the joiner and
// are fused by the tokenizer ("dining area" -> "dining_area").
class Lexicon {
 public:
  static Lexicon defaults();

  // File format: sections [rooms] [furniture] [numbers] [directions]
  // [connectives], key=value lines; '#' starts a comment.
  static Lexicon load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::optional<RoomType> room(const std::string& token) const;
  std::optional<std::string> furniture(const std::string& token) const;
  std::optional<int> number(const std::string& token) const;
  bool is_direction(const std::string& token) const;
  // Wall index 1..4 for compass directions (north=1 clockwise), nullopt otherwise.
  std::optional<int> direction_wall(const std::string& token) const;
  bool is_connective(const std::string& token) const;
  std::optional<RelationKind> connective_kind(const std::string& token) const;

  WordClass word_class(const std::string& token) const;

  // Multiword terms as (first, second, fused) triples, for the tokenizer.
  const std::vector<std::array<std::string, 3>>& fusions() const { return fusions_; }

  void add_room(const std::string& term, RoomType type);
  void add_furniture(const std::string& term, const std::string& symbol);
  void add_number(const std::string& term, int value);
  void add_direction(const std::string& term, int wall);  // wall 0 = no fixed wall
  void add_connective(const std::string& term, RelationKind kind);

 private:
  void index_fusion(const std::string& term);

  std::map<std::string, RoomType> room_words_;
  std::map<std::string, std::string> furniture_words_;
  std::map<std::string, int> number_words_;
  std::map<std::string, int> direction_words_;
  std::map<std::string, RelationKind> connective_words_;
  std::vector<std::array<std::string, 3>> fusions_;
};

}  // namespace t2p
