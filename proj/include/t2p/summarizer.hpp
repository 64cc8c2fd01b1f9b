#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "t2p/text.hpp"

namespace t2p {

struct ScoringParams {
  double alpha = 1.2;
  double beta = 0.5;
  double gamma = 1.0;
};

// Undirected, complete over the scored sentences. Edge weights are the
// symmetrized pair scores; keys are (i, j) with i < j, in document indices.
struct SimilarityGraph {
  std::vector<std::size_t> nodes;
  std::map<std::pair<std::size_t, std::size_t>, double> edge_weight;

  double weight(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    auto it = edge_weight.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    return it == edge_weight.end() ? 0.0 : it->second;
  }
};

enum class Centrality { WeightedDegree, PowerIteration };

struct SummarizerOptions {
  Centrality centrality = Centrality::WeightedDegree;
  // Keep only lexicon-classed tokens (room/furniture/number/direction/
  // connective) on the query side of the pair score.
  bool word_class_filter = true;
};

struct SummaryRequest {
  double reduction_ratio = 0.6;  // in (0, 1]
};

// ln((D - D(q) + 0.5) / (D(q) + 0.5)); negative once the token appears in
// more than half of the documents. Unseen tokens count as frequency 0.
double inverse_doc_weight(const std::string& token, const CorpusStats& stats);

// Directional pair score: d is the document side, q the query side. Every
// query token contributes its inverse-document weight times the saturated
// term-frequency fraction plus gamma. Empty q scores 0.
double sentence_similarity(const Sentence& d, const Sentence& q, const CorpusStats& stats,
                           const ScoringParams& params);

// Complete graph; edge weight is (score(d,q) + score(q,d)) / 2 so the graph
// is undirected by construction. The word-class filter (when enabled and a
// lexicon is given) drops unclassified tokens from the query side only.
SimilarityGraph build_similarity_graph(const std::vector<Sentence>& sentences,
                                       const CorpusStats& stats, const ScoringParams& params,
                                       const SummarizerOptions& options = {},
                                       const Lexicon* lex = nullptr);

// Node indices in descending centrality, ties broken by ascending document
// index. Weighted degree by default; damped power iteration (0.85, up to 100
// rounds, 1e-8 convergence, negative weights clamped to 0) when selected.
std::vector<std::size_t> rank_sentences(const SimilarityGraph& graph,
                                        Centrality mode = Centrality::WeightedDegree);

// Full pipeline step: split, score, rank, keep ceil(ratio * n) sentences
// (at least one), re-emitted in document order. Sentences that tokenize to
// nothing are dropped before ranking.
std::vector<Sentence> summarize(const std::string& text, const SummaryRequest& request,
                                const CorpusStats& stats, const Lexicon& lex,
                                const ScoringParams& params = {},
                                const SummarizerOptions& options = {});

}  // namespace t2p
