#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "t2p/diagnostics.hpp"
#include "t2p/embeddings.hpp"
#include "t2p/lexicon.hpp"
#include "t2p/text.hpp"

namespace t2p {

struct ConvHyperparams {
  int dim = 32;
  int max_len = 16;
  std::array<int, 3> filter_sizes = {3, 4, 5};
  int filters_per_size = 16;
  double dropout_rate = 0.5;  // training only
  double learning_rate = 0.05;
  int batch_size = 16;
  int max_epochs = 200;
  // Stop once the clean (dropout-off) mean cross-entropy over the training
  // set falls below this; keeps full training within the time budget.
  double early_stop_loss = 0.02;

  int feature_count() const { return filters_per_size * 3; }
};

// Three parallel convolution groups (window sizes 3/4/5 over the embedding
// matrix), ReLU, max-pool over positions, one dense layer to two logits,
// softmax. Parameters are public; tests perturb them directly.
struct ConvTextModel {
  ConvHyperparams hyper;
  // conv_weights[g]: filters_per_size rows of (filter_sizes[g] * dim)
  std::array<std::vector<double>, 3> conv_weights;
  std::array<std::vector<double>, 3> conv_bias;
  std::vector<double> dense_weights;  // 2 x feature_count
  std::vector<double> dense_bias;     // 2

  // input: row-major max_len x dim. Returns {p(negative), p(positive)}.
  std::array<double, 2> forward(const std::vector<double>& input) const;
};

struct ConvGradients {
  std::array<std::vector<double>, 3> conv_weights;
  std::array<std::vector<double>, 3> conv_bias;
  std::vector<double> dense_weights;
  std::vector<double> dense_bias;
};

ConvTextModel init_conv_model(const ConvHyperparams& hyper, std::uint64_t seed);

// Mean cross-entropy over the batch plus parameter gradients. dropout_mask
// is per-example per-feature keep/drop (empty = no dropout); used by both the
// trainer and the finite-difference tests.
double conv_loss_and_gradients(const ConvTextModel& model,
                               const std::vector<const std::vector<double>*>& inputs,
                               const std::vector<int>& labels,
                               const std::vector<std::vector<std::uint8_t>>& dropout_mask,
                               ConvGradients* grads);

struct TrainReport {
  int epochs_run = 0;
  double initial_loss = 0.0;
  double final_loss = 0.0;
};

// Minibatch SGD with a fixed shuffling seed. Throws DegenerateLabels when the
// training set is single-class.
ConvTextModel train_binary(const std::vector<std::vector<double>>& inputs,
                           const std::vector<int>& labels, const ConvHyperparams& hyper,
                           std::uint64_t seed, TrainReport* report = nullptr);

struct SentenceLabel {
  std::size_t sentence_index = 0;
  std::set<RoomType> room_tags;
  bool is_relation = false;
};

// The trained pipeline artifact: embeddings + corpus stats + one binary head
// per room class and one for relation sentences.
struct ModelBundle {
  EmbeddingTable embeddings;
  CorpusStats stats;
  std::map<std::string, ConvTextModel> heads;  // five room names + "relation"
  double threshold = 0.5;

  void save(const std::filesystem::path& path) const;
  static ModelBundle load(const std::filesystem::path& path);
};

SentenceLabel classify_sentence(const ModelBundle& bundle, const Sentence& sentence);

// Keyword fallback: a room tag per room word present; relation when a
// connective occurs alongside at least two room-word mentions.
SentenceLabel rule_based_classify(const Sentence& sentence, const Lexicon& lex);

struct RoomClusters {
  std::map<RoomType, std::vector<Sentence>> rooms;
  std::vector<Sentence> relations;
};

// Fans each sentence out to every room cluster it is tagged with; relation
// sentences additionally join the relation list. Unlabeled sentences raise
// UnlabeledSentence in strict mode, otherwise they are dropped with a warning.
RoomClusters cluster_by_room(const std::vector<SentenceLabel>& labels,
                             const std::vector<Sentence>& sentences, bool strict = false,
                             Diagnostics* diags = nullptr);

}  // namespace t2p
