#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "t2p/classifier.hpp"
#include "t2p/diagnostics.hpp"
#include "t2p/lexicon.hpp"
#include "t2p/summarizer.hpp"

namespace t2p {

enum class ClassifierMode { Rule, Cnn };

struct PipelineConfig {
  double reduction_ratio = 0.6;
  std::uint64_t seed = 0;
  ClassifierMode classifier = ClassifierMode::Rule;
  Centrality centrality = Centrality::WeightedDegree;
  bool strict = false;
  bool keep_partial = false;
  std::filesystem::path output_dir = ".";
  std::filesystem::path model_path;    // required for ClassifierMode::Cnn
  std::filesystem::path lexicon_path;  // empty = built-in dictionaries
};

// Flat key=value config file (ratio, seed, classifier, centrality, strict,
// keep_partial, out, model, lexicon). Unknown keys are an error.
void apply_config_file(PipelineConfig& config, const std::filesystem::path& path);

// Artifact kind detected from content, for stage input validation.
enum class ArtifactKind { Text, LabelsTsv, RoomsJson, DcgJson, PlanJson, Svg };

const char* to_string(ArtifactKind kind);
ArtifactKind sniff_artifact(const std::string& content);

// The pipeline stages. Each reads its declared inputs, writes its artifacts
// into config.output_dir and appends diagnostics; `render` composes them by
// chaining these exact functions, so the composite run is byte-identical to
// running the stages one by one.
void stage_summarize(const std::filesystem::path& input_text, const PipelineConfig& config,
                     Diagnostics& diags);
void stage_classify(const std::filesystem::path& summary_txt, const PipelineConfig& config,
                    Diagnostics& diags);
void stage_extract(const std::filesystem::path& summary_txt,
                   const std::filesystem::path& labels_tsv, const PipelineConfig& config,
                   Diagnostics& diags);
void stage_layout(const std::filesystem::path& rooms_json, const std::filesystem::path& dcg_json,
                  const PipelineConfig& config, Diagnostics& diags);
void stage_render(const std::filesystem::path& plan_json, const PipelineConfig& config,
                  Diagnostics& diags);

// summarize -> classify -> extract -> layout -> render over one description.
void run_render(const std::filesystem::path& input_text, const PipelineConfig& config,
                Diagnostics& diags);

struct TrainOutcome {
  std::map<std::string, double> held_out_accuracy;  // per head
  int sentence_count = 0;
};

// Reads a corpus directory (*.txt with sibling *.labels.tsv), trains the
// embedding table and all six binary heads on an 80/20 split, writes the
// model file, reports held-out accuracy per head.
TrainOutcome run_train(const std::filesystem::path& corpus_dir,
                       const std::filesystem::path& model_out, const PipelineConfig& config,
                       Diagnostics& diags);

// Writes n generated descriptions with label and ground-truth files.
void run_gen_corpus(int n, std::uint64_t seed, const std::filesystem::path& out_dir);

Lexicon load_lexicon(const PipelineConfig& config);

}  // namespace t2p
