#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "t2p/errors.hpp"
#include "t2p/json_io.hpp"
#include "t2p/pipeline.hpp"

namespace {

using t2p::ArtifactKind;
using t2p::Diagnostics;
using t2p::PipelineConfig;

void flush_diagnostics(const Diagnostics& diags) {
  for (const auto& d : diags.entries()) std::cerr << t2p::format_diagnostic(d) << "\n";
}

int fail(const Diagnostics& diags, const std::string& stage, const std::string& message) {
  flush_diagnostics(diags);
  std::cerr << stage << ":error:" << message << "\n";
  return 1;
}

struct CommonFlags {
  std::string config_file;
  std::string out_dir;
  std::string model;
  std::string lexicon;
  std::string classifier;
  std::string centrality;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  bool strict = false;
  bool keep_partial = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_file, "flat key=value config file");
  cmd->add_option("--out", flags.out_dir, "output directory for artifacts");
  cmd->add_option("--model", flags.model, "trained model file (T2P-MODEL-v1)");
  cmd->add_option("--lexicon", flags.lexicon, "lexicon file overriding the built-in one");
  cmd->add_option("--classifier", flags.classifier, "rule|cnn")
      ->check(CLI::IsMember({"rule", "cnn"}));
  cmd->add_option("--centrality", flags.centrality, "degree|pagerank")
      ->check(CLI::IsMember({"degree", "pagerank"}));
  cmd->add_option("--ratio", flags.ratio, "summary reduction ratio in (0,1]");
  cmd->add_option("--seed", flags.seed, "seed for all randomized steps");
  cmd->add_flag("--strict", flags.strict, "escalate recoverable diagnostics to errors");
  cmd->add_flag("--keep-partial", flags.keep_partial, "keep artifacts of failed runs");
}

// Precedence: flags > config file > environment fallback > defaults.
PipelineConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
  PipelineConfig config;
  std::string file = flags.config_file;
  if (file.empty()) {
    if (const char* env = std::getenv("T2P_CONFIG")) file = env;
  }
  if (!file.empty()) t2p::apply_config_file(config, file);

  if (cmd->count("--ratio")) config.reduction_ratio = flags.ratio;
  if (cmd->count("--seed")) config.seed = flags.seed;
  if (cmd->count("--out")) config.output_dir = flags.out_dir;
  if (cmd->count("--model")) config.model_path = flags.model;
  if (cmd->count("--lexicon")) config.lexicon_path = flags.lexicon;
  if (cmd->count("--classifier"))
    config.classifier = flags.classifier == "cnn" ? t2p::ClassifierMode::Cnn
                                                  : t2p::ClassifierMode::Rule;
  if (cmd->count("--centrality"))
    config.centrality = flags.centrality == "pagerank" ? t2p::Centrality::PowerIteration
                                                       : t2p::Centrality::WeightedDegree;
  if (cmd->count("--strict")) config.strict = flags.strict;
  if (cmd->count("--keep-partial")) config.keep_partial = flags.keep_partial;

  if (config.reduction_ratio <= 0.0 || config.reduction_ratio > 1.0)
    t2p::raise(t2p::Errc::FormatMismatch, "reduction ratio must be in (0,1]");
  return config;
}

ArtifactKind sniff_file(const std::string& path) {
  return t2p::sniff_artifact(t2p::read_file(path));
}

void expect_kind(const std::string& path, ArtifactKind want) {
  ArtifactKind got = sniff_file(path);
  if (got != want)
    t2p::raise(t2p::Errc::FormatMismatch, path + " looks like " + t2p::to_string(got) +
                                              ", expected " + t2p::to_string(want));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"text2plan - render 2D floor plans from English descriptions"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* render = app.add_subcommand("render", "run the full pipeline on a description");
  std::string render_input;
  render->add_option("input", render_input, "description text file")->required();
  add_common(render, flags);

  auto* train = app.add_subcommand("train", "train classifier heads on a labelled corpus");
  std::string train_corpus;
  std::string train_model_out = "model.json";
  train->add_option("corpus", train_corpus, "corpus directory (*.txt + *.labels.tsv)")
      ->required();
  train->add_option("--model-out", train_model_out, "where to write the model file");
  add_common(train, flags);

  auto* gen = app.add_subcommand("gen-corpus", "generate a synthetic labelled corpus");
  int gen_n = 0;
  gen->add_option("n", gen_n, "number of descriptions")->required();
  add_common(gen, flags);

  auto* stage = app.add_subcommand("stage", "run a single pipeline stage");
  std::string stage_name;
  std::vector<std::string> stage_inputs;
  stage->add_option("name", stage_name, "summarize|classify|extract|layout|render")
      ->required()
      ->check(CLI::IsMember({"summarize", "classify", "extract", "layout", "render"}));
  stage->add_option("inputs", stage_inputs, "input artifact path(s)")->required();
  add_common(stage, flags);

  CLI11_PARSE(app, argc, argv);

  Diagnostics diags;
  try {
    if (render->parsed()) {
      PipelineConfig config = build_config(render, flags);
      t2p::run_render(render_input, config, diags);
      flush_diagnostics(diags);
      return 0;
    }
    if (train->parsed()) {
      PipelineConfig config = build_config(train, flags);
      auto outcome = t2p::run_train(train_corpus, train_model_out, config, diags);
      flush_diagnostics(diags);
      std::printf("trained on %d sentences\n", outcome.sentence_count);
      for (const auto& [head, accuracy] : outcome.held_out_accuracy)
        std::printf("%-10s held-out accuracy %.4f\n", head.c_str(), accuracy);
      return 0;
    }
    if (gen->parsed()) {
      PipelineConfig config = build_config(gen, flags);
      if (gen_n < 1) {
        std::cerr << "gen-corpus:error:n must be at least 1\n";
        return 2;
      }
      t2p::run_gen_corpus(gen_n, config.seed, config.output_dir);
      return 0;
    }
    if (stage->parsed()) {
      PipelineConfig config = build_config(stage, flags);
      std::filesystem::create_directories(config.output_dir);
      if (stage_name == "summarize") {
        if (stage_inputs.size() != 1)
          t2p::raise(t2p::Errc::FormatMismatch, "summarize takes one text input");
        expect_kind(stage_inputs[0], ArtifactKind::Text);
        t2p::stage_summarize(stage_inputs[0], config, diags);
      } else if (stage_name == "classify") {
        if (stage_inputs.size() != 1)
          t2p::raise(t2p::Errc::FormatMismatch, "classify takes summary.txt");
        expect_kind(stage_inputs[0], ArtifactKind::Text);
        t2p::stage_classify(stage_inputs[0], config, diags);
      } else if (stage_name == "extract") {
        if (stage_inputs.size() != 2)
          t2p::raise(t2p::Errc::FormatMismatch, "extract takes summary.txt and labels.tsv");
        expect_kind(stage_inputs[0], ArtifactKind::Text);
        expect_kind(stage_inputs[1], ArtifactKind::LabelsTsv);
        t2p::stage_extract(stage_inputs[0], stage_inputs[1], config, diags);
      } else if (stage_name == "layout") {
        if (stage_inputs.size() != 2)
          t2p::raise(t2p::Errc::FormatMismatch, "layout takes rooms.json and dcg.json");
        expect_kind(stage_inputs[0], ArtifactKind::RoomsJson);
        expect_kind(stage_inputs[1], ArtifactKind::DcgJson);
        t2p::stage_layout(stage_inputs[0], stage_inputs[1], config, diags);
      } else {  // render
        if (stage_inputs.size() != 1)
          t2p::raise(t2p::Errc::FormatMismatch, "render takes plan.json");
        expect_kind(stage_inputs[0], ArtifactKind::PlanJson);
        t2p::stage_render(stage_inputs[0], config, diags);
      }
      flush_diagnostics(diags);
      return 0;
    }
  } catch (const t2p::Error& e) {
    return fail(diags, app.get_subcommands().empty() ? "cli"
                                                     : app.get_subcommands()[0]->get_name(),
                e.what());
  } catch (const std::exception& e) {
    return fail(diags, "cli", e.what());
  }
  return 2;
}
