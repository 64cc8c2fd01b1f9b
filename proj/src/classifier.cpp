#include "t2p/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "t2p/errors.hpp"
#include "t2p/rng.hpp"

namespace t2p {

namespace {

// ReLU conv activations for one group at one position.
inline double conv_at(const double* weights, const double* bias, const double* input, int window,
                      int dim, int pos, int filter) {
  const double* w = weights + static_cast<long>(filter) * window * dim;
  const double* x = input + static_cast<long>(pos) * dim;
  double sum = bias[filter];
  for (int k = 0; k < window * dim; ++k) sum += w[k] * x[k];
  return sum;
}

std::array<double, 2> softmax2(double a, double b) {
  double m = std::max(a, b);
  double ea = std::exp(a - m);
  double eb = std::exp(b - m);
  double z = ea + eb;
  return {ea / z, eb / z};
}

}  // namespace

std::array<double, 2> ConvTextModel::forward(const std::vector<double>& input) const {
  const int dim = hyper.dim;
  const int f = hyper.filters_per_size;
  std::vector<double> pooled(static_cast<std::size_t>(hyper.feature_count()), 0.0);
  for (int g = 0; g < 3; ++g) {
    const int window = hyper.filter_sizes[static_cast<std::size_t>(g)];
    const int positions = hyper.max_len - window + 1;
    for (int j = 0; j < f; ++j) {
      double best = 0.0;  // ReLU floor: max over positions of max(0, act)
      for (int p = 0; p < positions; ++p) {
        double act = conv_at(conv_weights[static_cast<std::size_t>(g)].data(),
                             conv_bias[static_cast<std::size_t>(g)].data(), input.data(), window,
                             dim, p, j);
        if (act > best) best = act;
      }
      pooled[static_cast<std::size_t>(g * f + j)] = best;
    }
  }
  const int feats = hyper.feature_count();
  double logit0 = dense_bias[0];
  double logit1 = dense_bias[1];
  for (int j = 0; j < feats; ++j) {
    logit0 += dense_weights[static_cast<std::size_t>(j)] * pooled[static_cast<std::size_t>(j)];
    logit1 += dense_weights[static_cast<std::size_t>(feats + j)] *
              pooled[static_cast<std::size_t>(j)];
  }
  return softmax2(logit0, logit1);
}

ConvTextModel init_conv_model(const ConvHyperparams& hyper, std::uint64_t seed) {
  ConvTextModel m;
  m.hyper = hyper;
  Rng rng(seed);
  for (int g = 0; g < 3; ++g) {
    const int window = hyper.filter_sizes[static_cast<std::size_t>(g)];
    m.conv_weights[static_cast<std::size_t>(g)].resize(
        static_cast<std::size_t>(hyper.filters_per_size) * window * hyper.dim);
    m.conv_bias[static_cast<std::size_t>(g)].assign(
        static_cast<std::size_t>(hyper.filters_per_size), 0.0);
    for (auto& w : m.conv_weights[static_cast<std::size_t>(g)]) w = rng.range(-0.1, 0.1);
  }
  m.dense_weights.resize(static_cast<std::size_t>(2) * hyper.feature_count());
  for (auto& w : m.dense_weights) w = rng.range(-0.1, 0.1);
  m.dense_bias.assign(2, 0.0);
  return m;
}

double conv_loss_and_gradients(const ConvTextModel& model,
                               const std::vector<const std::vector<double>*>& inputs,
                               const std::vector<int>& labels,
                               const std::vector<std::vector<std::uint8_t>>& dropout_mask,
                               ConvGradients* grads) {
  const ConvHyperparams& h = model.hyper;
  const int dim = h.dim;
  const int f = h.filters_per_size;
  const int feats = h.feature_count();
  const double keep_scale = 1.0 / (1.0 - h.dropout_rate);
  const bool use_dropout = !dropout_mask.empty();

  if (grads) {
    for (int g = 0; g < 3; ++g) {
      grads->conv_weights[static_cast<std::size_t>(g)].assign(
          model.conv_weights[static_cast<std::size_t>(g)].size(), 0.0);
      grads->conv_bias[static_cast<std::size_t>(g)].assign(
          model.conv_bias[static_cast<std::size_t>(g)].size(), 0.0);
    }
    grads->dense_weights.assign(model.dense_weights.size(), 0.0);
    grads->dense_bias.assign(model.dense_bias.size(), 0.0);
  }

  double total_loss = 0.0;
  std::vector<double> pooled(static_cast<std::size_t>(feats));
  std::vector<int> argmax(static_cast<std::size_t>(feats));
  for (std::size_t e = 0; e < inputs.size(); ++e) {
    const std::vector<double>& x = *inputs[e];
    // forward, remembering pool winners
    for (int g = 0; g < 3; ++g) {
      const int window = h.filter_sizes[static_cast<std::size_t>(g)];
      const int positions = h.max_len - window + 1;
      for (int j = 0; j < f; ++j) {
        double best = 0.0;
        int best_pos = -1;
        for (int p = 0; p < positions; ++p) {
          double act = conv_at(model.conv_weights[static_cast<std::size_t>(g)].data(),
                               model.conv_bias[static_cast<std::size_t>(g)].data(), x.data(),
                               window, dim, p, j);
          if (act > best) {
            best = act;
            best_pos = p;
          }
        }
        pooled[static_cast<std::size_t>(g * f + j)] = best;
        argmax[static_cast<std::size_t>(g * f + j)] = best_pos;
      }
    }
    if (use_dropout) {
      const auto& mask = dropout_mask[e];
      for (int j = 0; j < feats; ++j)
        pooled[static_cast<std::size_t>(j)] =
            mask[static_cast<std::size_t>(j)] ? pooled[static_cast<std::size_t>(j)] * keep_scale
                                              : 0.0;
    }
    double logit0 = model.dense_bias[0];
    double logit1 = model.dense_bias[1];
    for (int j = 0; j < feats; ++j) {
      logit0 += model.dense_weights[static_cast<std::size_t>(j)] *
                pooled[static_cast<std::size_t>(j)];
      logit1 += model.dense_weights[static_cast<std::size_t>(feats + j)] *
                pooled[static_cast<std::size_t>(j)];
    }
    auto probs = softmax2(logit0, logit1);
    const int y = labels[e];
    total_loss += -std::log(std::max(probs[static_cast<std::size_t>(y)], 1e-300));

    if (!grads) continue;
    const double scale = 1.0 / static_cast<double>(inputs.size());
    std::array<double, 2> dlogit = {probs[0], probs[1]};
    dlogit[static_cast<std::size_t>(y)] -= 1.0;
    grads->dense_bias[0] += dlogit[0] * scale;
    grads->dense_bias[1] += dlogit[1] * scale;
    for (int j = 0; j < feats; ++j) {
      double zj = pooled[static_cast<std::size_t>(j)];
      grads->dense_weights[static_cast<std::size_t>(j)] += dlogit[0] * zj * scale;
      grads->dense_weights[static_cast<std::size_t>(feats + j)] += dlogit[1] * zj * scale;
      double dz = dlogit[0] * model.dense_weights[static_cast<std::size_t>(j)] +
                  dlogit[1] * model.dense_weights[static_cast<std::size_t>(feats + j)];
      if (use_dropout) {
        const auto& mask = dropout_mask[e];
        dz = mask[static_cast<std::size_t>(j)] ? dz * keep_scale : 0.0;
      }
      int g = j / f;
      int filter = j % f;
      int pos = argmax[static_cast<std::size_t>(j)];
      if (pos < 0) continue;  // pooled value was the ReLU floor, no gradient
      const int window = h.filter_sizes[static_cast<std::size_t>(g)];
      double* gw = grads->conv_weights[static_cast<std::size_t>(g)].data() +
                   static_cast<long>(filter) * window * dim;
      const double* xin = x.data() + static_cast<long>(pos) * dim;
      for (int k = 0; k < window * dim; ++k) gw[k] += dz * xin[k] * scale;
      grads->conv_bias[static_cast<std::size_t>(g)][static_cast<std::size_t>(filter)] +=
          dz * scale;
    }
  }
  return total_loss / static_cast<double>(inputs.size());
}

ConvTextModel train_binary(const std::vector<std::vector<double>>& inputs,
                           const std::vector<int>& labels, const ConvHyperparams& hyper,
                           std::uint64_t seed, TrainReport* report) {
  if (inputs.empty() || inputs.size() != labels.size())
    raise(Errc::EmptyCorpus, "no training examples");
  int positives = 0;
  for (int y : labels) positives += y;
  if (positives == 0 || positives == static_cast<int>(labels.size()))
    raise(Errc::DegenerateLabels, "training set is single-class");

  ConvTextModel model = init_conv_model(hyper, seed);
  Rng rng(seed ^ 0x5eedf00dULL);

  std::vector<std::size_t> order(inputs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  auto clean_loss = [&]() {
    std::vector<const std::vector<double>*> ptrs;
    std::vector<int> ys;
    ptrs.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      ptrs.push_back(&inputs[i]);
      ys.push_back(labels[i]);
    }
    return conv_loss_and_gradients(model, ptrs, ys, {}, nullptr);
  };

  if (report) report->initial_loss = clean_loss();

  const int feats = hyper.feature_count();
  int epochs_run = 0;
  double last_loss = report ? report->initial_loss : 0.0;
  for (int epoch = 0; epoch < hyper.max_epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += hyper.batch_size) {
      std::size_t end = std::min(order.size(), start + hyper.batch_size);
      std::vector<const std::vector<double>*> batch;
      std::vector<int> ys;
      std::vector<std::vector<std::uint8_t>> masks;
      for (std::size_t i = start; i < end; ++i) {
        batch.push_back(&inputs[order[i]]);
        ys.push_back(labels[order[i]]);
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(feats));
        for (auto& m : mask) m = rng.unit() >= hyper.dropout_rate ? 1 : 0;
        masks.push_back(std::move(mask));
      }
      ConvGradients grads;
      conv_loss_and_gradients(model, batch, ys,
                              hyper.dropout_rate > 0.0 ? masks
                                                       : std::vector<std::vector<std::uint8_t>>{},
                              &grads);
      const double lr = hyper.learning_rate;
      for (int g = 0; g < 3; ++g) {
        auto& w = model.conv_weights[static_cast<std::size_t>(g)];
        const auto& gw = grads.conv_weights[static_cast<std::size_t>(g)];
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= lr * gw[k];
        auto& b = model.conv_bias[static_cast<std::size_t>(g)];
        const auto& gb = grads.conv_bias[static_cast<std::size_t>(g)];
        for (std::size_t k = 0; k < b.size(); ++k) b[k] -= lr * gb[k];
      }
      for (std::size_t k = 0; k < model.dense_weights.size(); ++k)
        model.dense_weights[k] -= hyper.learning_rate * grads.dense_weights[k];
      for (std::size_t k = 0; k < model.dense_bias.size(); ++k)
        model.dense_bias[k] -= hyper.learning_rate * grads.dense_bias[k];
    }
    ++epochs_run;
    last_loss = clean_loss();
    if (last_loss < hyper.early_stop_loss) break;
  }
  if (report) {
    report->epochs_run = epochs_run;
    report->final_loss = last_loss;
  }
  return model;
}

SentenceLabel classify_sentence(const ModelBundle& bundle, const Sentence& sentence) {
  SentenceLabel label;
  label.sentence_index = sentence.index;
  int max_len = bundle.heads.empty() ? 16 : bundle.heads.begin()->second.hyper.max_len;
  std::vector<double> input = embed_sentence(sentence.tokens, bundle.embeddings, max_len);
  for (const auto& [name, model] : bundle.heads) {
    double p = model.forward(input)[1];
    if (p < bundle.threshold) continue;
    if (name == "relation")
      label.is_relation = true;
    else if (auto t = room_type_from(name))
      label.room_tags.insert(*t);
  }
  return label;
}

SentenceLabel rule_based_classify(const Sentence& sentence, const Lexicon& lex) {
  SentenceLabel label;
  label.sentence_index = sentence.index;
  int room_mentions = 0;
  bool has_connective = false;
  for (const auto& tok : sentence.tokens) {
    if (auto room = lex.room(tok)) {
      label.room_tags.insert(*room);
      ++room_mentions;
    }
    if (lex.is_connective(tok)) has_connective = true;
  }
  label.is_relation = has_connective && room_mentions >= 2;
  return label;
}

RoomClusters cluster_by_room(const std::vector<SentenceLabel>& labels,
                             const std::vector<Sentence>& sentences, bool strict,
                             Diagnostics* diags) {
  std::map<std::size_t, const Sentence*> by_index;
  for (const auto& s : sentences) by_index[s.index] = &s;

  RoomClusters clusters;
  for (const auto& label : labels) {
    auto it = by_index.find(label.sentence_index);
    if (it == by_index.end()) continue;
    const Sentence& s = *it->second;
    if (label.room_tags.empty() && !label.is_relation) {
      if (strict)
        raise(Errc::UnlabeledSentence,
              "sentence " + std::to_string(label.sentence_index) + ": '" + s.raw + "'");
      if (diags)
        diags->add("classify", Severity::Warning,
                   "dropping unlabeled sentence " + std::to_string(label.sentence_index));
      continue;
    }
    for (RoomType t : label.room_tags) clusters.rooms[t].push_back(s);
    if (label.is_relation) clusters.relations.push_back(s);
  }
  return clusters;
}

// ---------------------------------------------------------------------------
// model container

namespace {

using nlohmann::json;

json to_json(const ConvTextModel& m) {
  json j;
  j["dim"] = m.hyper.dim;
  j["max_len"] = m.hyper.max_len;
  j["filter_sizes"] = m.hyper.filter_sizes;
  j["filters_per_size"] = m.hyper.filters_per_size;
  j["dropout_rate"] = m.hyper.dropout_rate;
  j["conv_weights"] = m.conv_weights;
  j["conv_bias"] = m.conv_bias;
  j["dense_weights"] = m.dense_weights;
  j["dense_bias"] = m.dense_bias;
  return j;
}

ConvTextModel conv_from_json(const json& j) {
  ConvTextModel m;
  m.hyper.dim = j.at("dim").get<int>();
  m.hyper.max_len = j.at("max_len").get<int>();
  m.hyper.filter_sizes = j.at("filter_sizes").get<std::array<int, 3>>();
  m.hyper.filters_per_size = j.at("filters_per_size").get<int>();
  m.hyper.dropout_rate = j.at("dropout_rate").get<double>();
  m.conv_weights = j.at("conv_weights").get<std::array<std::vector<double>, 3>>();
  m.conv_bias = j.at("conv_bias").get<std::array<std::vector<double>, 3>>();
  m.dense_weights = j.at("dense_weights").get<std::vector<double>>();
  m.dense_bias = j.at("dense_bias").get<std::vector<double>>();
  return m;
}

constexpr const char* kModelMagic = "T2P-MODEL-v1";

}  // namespace

void ModelBundle::save(const std::filesystem::path& path) const {
  json j;
  j["magic"] = kModelMagic;
  j["threshold"] = threshold;
  j["embedding"]["dim"] = embeddings.dim;
  j["embedding"]["unk"] = embeddings.unk_vector;
  j["embedding"]["vectors"] = embeddings.vectors;
  j["stats"]["doc_count"] = stats.doc_count;
  j["stats"]["avg_sentence_len"] = stats.avg_sentence_len;
  j["stats"]["doc_freq"] = stats.doc_freq;
  json heads_json;
  for (const auto& [name, model] : heads) heads_json[name] = to_json(model);
  j["heads"] = heads_json;
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot write " + path.string());
  out << j.dump(1) << "\n";
}

ModelBundle ModelBundle::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::FormatMismatch, path.string() + ": not a model file (" + e.what() + ")");
  }
  if (!j.is_object() || j.value("magic", "") != kModelMagic)
    raise(Errc::FormatMismatch, path.string() + ": missing magic " + kModelMagic);
  ModelBundle bundle;
  bundle.threshold = j.at("threshold").get<double>();
  bundle.embeddings.dim = j.at("embedding").at("dim").get<int>();
  bundle.embeddings.unk_vector = j.at("embedding").at("unk").get<std::vector<double>>();
  bundle.embeddings.vectors =
      j.at("embedding").at("vectors").get<std::map<std::string, std::vector<double>>>();
  bundle.stats.doc_count = j.at("stats").at("doc_count").get<int>();
  bundle.stats.avg_sentence_len = j.at("stats").at("avg_sentence_len").get<double>();
  bundle.stats.doc_freq = j.at("stats").at("doc_freq").get<std::map<std::string, int>>();
  for (const auto& [name, head] : j.at("heads").items())
    bundle.heads[name] = conv_from_json(head);
  return bundle;
}

}  // namespace t2p
