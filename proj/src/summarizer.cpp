#include "t2p/summarizer.hpp"

#include <algorithm>
#include <cmath>

#include "t2p/errors.hpp"

namespace t2p {

double inverse_doc_weight(const std::string& token, const CorpusStats& stats) {
  double total = static_cast<double>(stats.doc_count);
  double present = static_cast<double>(stats.freq(token));
  return std::log((total - present + 0.5) / (present + 0.5));
}

double sentence_similarity(const Sentence& d, const Sentence& q, const CorpusStats& stats,
                           const ScoringParams& params) {
  if (q.tokens.empty()) return 0.0;
  const double doc_len = static_cast<double>(d.tokens.size());
  const double avg_len = stats.avg_sentence_len;
  double score = 0.0;
  for (const auto& term : q.tokens) {
    double tf = 0.0;
    for (const auto& t : d.tokens)
      if (t == term) tf += 1.0;
    double idw = inverse_doc_weight(term, stats);
    double saturated =
        tf * (params.alpha + 1.0) /
        (tf + params.alpha * (1.0 - params.beta + params.beta * doc_len / avg_len));
    score += idw * (saturated + params.gamma);
  }
  return score;
}

SimilarityGraph build_similarity_graph(const std::vector<Sentence>& sentences,
                                       const CorpusStats& stats, const ScoringParams& params,
                                       const SummarizerOptions& options, const Lexicon* lex) {
  SimilarityGraph graph;
  graph.nodes.reserve(sentences.size());
  for (const auto& s : sentences) graph.nodes.push_back(s.index);

  std::vector<Sentence> query_side = sentences;
  if (options.word_class_filter && lex != nullptr) {
    for (auto& s : query_side) {
      std::vector<std::string> kept;
      for (const auto& t : s.tokens)
        if (lex->word_class(t) != WordClass::Other) kept.push_back(t);
      s.tokens = std::move(kept);
    }
  }

  for (std::size_t a = 0; a < sentences.size(); ++a) {
    for (std::size_t b = a + 1; b < sentences.size(); ++b) {
      double forward = sentence_similarity(sentences[a], query_side[b], stats, params);
      double backward = sentence_similarity(sentences[b], query_side[a], stats, params);
      double w = (forward + backward) / 2.0;
      std::size_t i = sentences[a].index;
      std::size_t j = sentences[b].index;
      graph.edge_weight[i < j ? std::make_pair(i, j) : std::make_pair(j, i)] = w;
    }
  }
  return graph;
}

namespace {

std::vector<double> weighted_degree(const SimilarityGraph& graph) {
  std::vector<double> score(graph.nodes.size(), 0.0);
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) pos[graph.nodes[k]] = k;
  for (const auto& [key, w] : graph.edge_weight) {
    score[pos.at(key.first)] += w;
    score[pos.at(key.second)] += w;
  }
  return score;
}

std::vector<double> power_iteration(const SimilarityGraph& graph) {
  constexpr double kDamping = 0.85;
  constexpr int kMaxRounds = 100;
  constexpr double kTolerance = 1e-8;

  const std::size_t n = graph.nodes.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos[graph.nodes[k]] = k;

  // Random-walk weights need to be non-negative; inverse-document weights can
  // push edges below zero, so clamp.
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  std::vector<double> out_sum(n, 0.0);
  for (const auto& [key, w] : graph.edge_weight) {
    double cw = std::max(w, 0.0);
    std::size_t i = pos.at(key.first);
    std::size_t j = pos.at(key.second);
    adj[i].push_back({j, cw});
    adj[j].push_back({i, cw});
    out_sum[i] += cw;
    out_sum[j] += cw;
  }

  std::vector<double> rank(n, n > 0 ? 1.0 / static_cast<double>(n) : 0.0);
  std::vector<double> next(n, 0.0);
  for (int round = 0; round < kMaxRounds; ++round) {
    double base = (1.0 - kDamping) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) next[i] = base;
    for (std::size_t j = 0; j < n; ++j) {
      if (out_sum[j] <= 0.0) continue;
      double share = kDamping * rank[j] / out_sum[j];
      for (const auto& [i, w] : adj[j]) next[i] += share * w;
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (delta < kTolerance) break;
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> rank_sentences(const SimilarityGraph& graph, Centrality mode) {
  std::vector<double> score = mode == Centrality::WeightedDegree ? weighted_degree(graph)
                                                                 : power_iteration(graph);
  std::vector<std::size_t> order(graph.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return graph.nodes[a] < graph.nodes[b];
  });
  std::vector<std::size_t> result;
  result.reserve(order.size());
  for (std::size_t k : order) result.push_back(graph.nodes[k]);
  return result;
}

std::vector<Sentence> summarize(const std::string& text, const SummaryRequest& request,
                                const CorpusStats& stats, const Lexicon& lex,
                                const ScoringParams& params, const SummarizerOptions& options) {
  std::vector<Sentence> all = split_sentences(text, lex);
  std::vector<Sentence> scored;
  for (const auto& s : all)
    if (!s.tokens.empty()) scored.push_back(s);
  if (scored.empty()) return {};

  SimilarityGraph graph = build_similarity_graph(scored, stats, params, options, &lex);
  std::vector<std::size_t> ranked = rank_sentences(graph, options.centrality);

  std::size_t n = scored.size();
  std::size_t keep = static_cast<std::size_t>(
      std::ceil(request.reduction_ratio * static_cast<double>(n)));
  keep = std::max<std::size_t>(1, std::min(keep, n));

  std::vector<std::size_t> selected(ranked.begin(), ranked.begin() + static_cast<long>(keep));
  std::sort(selected.begin(), selected.end());

  std::vector<Sentence> summary;
  summary.reserve(selected.size());
  for (std::size_t idx : selected) {
    for (const auto& s : scored)
      if (s.index == idx) summary.push_back(s);
  }
  return summary;
}

}  // namespace t2p
