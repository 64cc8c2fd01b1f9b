#include "t2p/embeddings.hpp"

#include <algorithm>
#include <cmath>

#include "t2p/errors.hpp"
#include "t2p/rng.hpp"

namespace t2p {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  double denom = std::sqrt(na) * std::sqrt(nb);
  return denom > 0.0 ? dot / denom : 0.0;
}

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

EmbeddingTable train_embeddings(const std::vector<TokenizedDoc>& corpus,
                                const SkipGramParams& params, std::uint64_t seed) {
  if (corpus.empty()) raise(Errc::EmptyCorpus, "no documents to train embeddings on");

  // Vocabulary in lexicographic order so indices are reproducible.
  std::map<std::string, int> vocab;
  std::map<std::string, long long> counts;
  for (const auto& doc : corpus)
    for (const auto& sent : doc)
      for (const auto& tok : sent) counts[tok] += 1;
  if (counts.empty()) raise(Errc::EmptyCorpus, "corpus contains no tokens");
  int next = 0;
  for (const auto& [tok, n] : counts) vocab[tok] = next++;
  const int v = next;
  const int dim = params.dim;

  // Unigram^0.75 table for negative sampling.
  std::vector<double> cumulative(static_cast<std::size_t>(v));
  std::vector<std::string> words(static_cast<std::size_t>(v));
  double total = 0.0;
  for (const auto& [tok, idx] : vocab) {
    total += std::pow(static_cast<double>(counts[tok]), 0.75);
    cumulative[static_cast<std::size_t>(idx)] = total;
    words[static_cast<std::size_t>(idx)] = tok;
  }
  Rng rng(seed);
  auto sample_negative = [&]() {
    double r = rng.unit() * total;
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), r);
    return static_cast<int>(it - cumulative.begin());
  };

  std::vector<double> in(static_cast<std::size_t>(v) * dim);
  std::vector<double> out(static_cast<std::size_t>(v) * dim, 0.0);
  for (auto& x : in) x = (rng.unit() - 0.5) / dim;

  std::vector<double> accum(static_cast<std::size_t>(dim));
  const double lr = params.learning_rate;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    for (const auto& doc : corpus) {
      for (const auto& sent : doc) {
        const int len = static_cast<int>(sent.size());
        for (int center = 0; center < len; ++center) {
          const int ci = vocab.at(sent[static_cast<std::size_t>(center)]);
          double* vc = &in[static_cast<std::size_t>(ci) * dim];
          for (int off = -params.window; off <= params.window; ++off) {
            if (off == 0) continue;
            int pos = center + off;
            if (pos < 0 || pos >= len) continue;
            const int ctx = vocab.at(sent[static_cast<std::size_t>(pos)]);
            std::fill(accum.begin(), accum.end(), 0.0);
            // positive pair then k negatives
            for (int k = 0; k <= params.negatives; ++k) {
              int target;
              double label;
              if (k == 0) {
                target = ctx;
                label = 1.0;
              } else {
                target = sample_negative();
                if (target == ctx) continue;
                label = 0.0;
              }
              double* vo = &out[static_cast<std::size_t>(target) * dim];
              double dot = 0.0;
              for (int j = 0; j < dim; ++j) dot += vc[j] * vo[j];
              double g = (label - sigmoid(dot)) * lr;
              for (int j = 0; j < dim; ++j) {
                accum[static_cast<std::size_t>(j)] += g * vo[j];
                vo[j] += g * vc[j];
              }
            }
            for (int j = 0; j < dim; ++j) vc[j] += accum[static_cast<std::size_t>(j)];
          }
        }
      }
    }
  }

  EmbeddingTable table;
  table.dim = dim;
  std::vector<double> mean(static_cast<std::size_t>(dim), 0.0);
  for (const auto& [tok, idx] : vocab) {
    std::vector<double> vec(in.begin() + static_cast<long>(idx) * dim,
                            in.begin() + static_cast<long>(idx + 1) * dim);
    double norm = 0.0;
    for (double x : vec) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 1e-12)
      for (double& x : vec) x /= norm;
    else
      vec[0] = 1.0;  // degenerate draw, pin to a unit axis
    for (int j = 0; j < dim; ++j) mean[static_cast<std::size_t>(j)] += vec[static_cast<std::size_t>(j)];
    table.vectors[tok] = std::move(vec);
  }
  double mnorm = 0.0;
  for (double x : mean) mnorm += x * x;
  mnorm = std::sqrt(mnorm);
  if (mnorm > 1e-12)
    for (double& x : mean) x /= mnorm;
  else
    mean[0] = 1.0;
  table.unk_vector = std::move(mean);
  return table;
}

std::vector<double> embed_sentence(const std::vector<std::string>& tokens,
                                   const EmbeddingTable& table, int max_len) {
  const int dim = table.dim;
  std::vector<double> matrix(static_cast<std::size_t>(max_len) * dim, 0.0);
  const int n = std::min<int>(max_len, static_cast<int>(tokens.size()));
  for (int i = 0; i < n; ++i) {
    const auto& vec = table.at(tokens[static_cast<std::size_t>(i)]);
    std::copy(vec.begin(), vec.end(), matrix.begin() + static_cast<long>(i) * dim);
  }
  return matrix;
}

}  // namespace t2p
