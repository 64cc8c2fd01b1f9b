#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "t2p/room_spec.hpp"

namespace t2p {

struct GeneratedDescription {
  std::string text;
  GroundTruthPlan truth;
  // Per-sentence labels aligned with split_sentences(text): room type names
  // plus "relation" for relation sentences.
  std::vector<std::vector<std::string>> labels;
};

// Template-based synthetic house description. One sentence cluster per room
// (intro, dimensions, door placement, usually furniture) followed by relation
// sentences whose door edges form a spanning tree. Pure function of
// (seed, size); size is the room count, 2..5 (throws UnsupportedSize).
GeneratedDescription generate_description(std::uint64_t seed, int size);

}  // namespace t2p
