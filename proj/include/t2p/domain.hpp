#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace t2p {

enum class RoomType { Bedroom, Kitchen, Bathroom, Hall, Dining };

inline constexpr std::array<RoomType, 5> kRoomTypes = {
    RoomType::Bedroom, RoomType::Kitchen, RoomType::Bathroom, RoomType::Hall, RoomType::Dining};

inline std::string_view to_string(RoomType t) {
  switch (t) {
    case RoomType::Bedroom: return "bedroom";
    case RoomType::Kitchen: return "kitchen";
    case RoomType::Bathroom: return "bathroom";
    case RoomType::Hall: return "hall";
    case RoomType::Dining: return "dining";
  }
  return "bedroom";
}

inline std::optional<RoomType> room_type_from(std::string_view s) {
  for (RoomType t : kRoomTypes)
    if (s == to_string(t)) return t;
  return std::nullopt;
}

// The twelve decor symbols the renderer knows how to draw.
inline constexpr std::array<std::string_view, 12> kFurnitureSymbols = {
    "bed",  "sofa",   "armchair", "chair", "table",        "wardrobe",
    "sink", "tub",    "toilet",   "stove", "refrigerator", "washbasin"};

inline bool is_furniture_symbol(std::string_view s) {
  for (auto sym : kFurnitureSymbols)
    if (s == sym) return true;
  return false;
}

}  // namespace t2p
