#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "t2p/text.hpp"

namespace t2p {

struct EmbeddingTable {
  int dim = 32;
  std::map<std::string, std::vector<double>> vectors;  // unit-norm, one per vocab token
  std::vector<double> unk_vector;

  const std::vector<double>& at(const std::string& token) const {
    auto it = vectors.find(token);
    return it == vectors.end() ? unk_vector : it->second;
  }
};

struct SkipGramParams {
  int dim = 32;
  int window = 2;
  int negatives = 5;
  int epochs = 15;
  double learning_rate = 0.025;
};

double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Skip-gram with negative sampling over the document sentences, single
// threaded so the gradient stream (and therefore the table) is a pure
// function of (corpus, params, seed). Vectors are L2-normalized afterwards;
// the unk vector is the normalized vocabulary mean. Throws EmptyCorpus.
EmbeddingTable train_embeddings(const std::vector<TokenizedDoc>& corpus,
                                const SkipGramParams& params, std::uint64_t seed);

// Row-major max_len x dim matrix: row i is token i's vector, unknown tokens
// map to unk, short sentences are zero-padded, long ones truncated.
std::vector<double> embed_sentence(const std::vector<std::string>& tokens,
                                   const EmbeddingTable& table, int max_len);

}  // namespace t2p
