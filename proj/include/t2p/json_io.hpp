#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "t2p/classifier.hpp"
#include "t2p/layout.hpp"
#include "t2p/room_spec.hpp"

namespace t2p {

// rooms.json: array of room records with keys id/type/shape/sides/dimensions/
// door_placement/furnitures; door_placement and furnitures as [key, count]
// pair arrays.
std::string rooms_to_json(const std::vector<RoomSpec>& rooms);
std::vector<RoomSpec> rooms_from_json(const std::string& text);

// dcg.json: { "nodes": [...], "edges": [{"a","b","kind"}] }
std::string dcg_to_json(const DoorConnectivityGraph& dcg);
DoorConnectivityGraph dcg_from_json(const std::string& text);

// plan.json: the full floor plan; the renderer's sole input.
std::string plan_to_json(const FloorPlan& plan);
FloorPlan plan_from_json(const std::string& text);

std::string truth_to_json(const GroundTruthPlan& truth);
GroundTruthPlan truth_from_json(const std::string& text);

// labels.tsv dump: sentence_index <TAB> comma-joined tags or "-" <TAB> 0|1
std::string labels_to_tsv(const std::vector<SentenceLabel>& labels);
std::vector<SentenceLabel> labels_from_tsv(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace t2p
