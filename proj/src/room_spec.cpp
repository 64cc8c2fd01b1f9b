#include "t2p/room_spec.hpp"

#include "t2p/errors.hpp"

namespace t2p {

void validate(const RoomSpec& spec) {
  if (spec.id.empty()) raise(Errc::FormatMismatch, "room without id");
  if (spec.shape != "rectangle")
    raise(Errc::UnsupportedShape, "room '" + spec.id + "' has shape '" + spec.shape + "'");
  if (spec.sides != 4)
    raise(Errc::UnsupportedShape,
          "room '" + spec.id + "': rectangle must have 4 sides, got " +
              std::to_string(spec.sides));
  if (static_cast<int>(spec.dimensions.size()) != spec.sides)
    raise(Errc::FormatMismatch, "room '" + spec.id + "': dimension count != sides");
  for (int d : spec.dimensions)
    if (d <= 0) raise(Errc::FormatMismatch, "room '" + spec.id + "': non-positive dimension");
  if (spec.dimensions[0] != spec.dimensions[2] || spec.dimensions[1] != spec.dimensions[3])
    raise(Errc::FormatMismatch, "room '" + spec.id + "': opposite sides differ");
  for (const auto& dp : spec.door_placement) {
    if (dp.wall < 1 || dp.wall > spec.sides)
      raise(Errc::FormatMismatch, "room '" + spec.id + "': wall index out of range");
    if (dp.count < 1)
      raise(Errc::FormatMismatch, "room '" + spec.id + "': non-positive door count");
  }
  for (const auto& f : spec.furnitures) {
    if (!is_furniture_symbol(f.symbol))
      raise(Errc::UnknownSymbol, "room '" + spec.id + "': unknown symbol '" + f.symbol + "'");
    if (f.count < 1)
      raise(Errc::FormatMismatch, "room '" + spec.id + "': non-positive furniture count");
  }
}

}  // namespace t2p
