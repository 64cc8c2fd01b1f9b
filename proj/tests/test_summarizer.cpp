#include <doctest.h>

#include <cmath>

#include "t2p/errors.hpp"
#include "t2p/rng.hpp"
#include "t2p/summarizer.hpp"
#include "support/oracles.hpp"

using namespace t2p;

namespace {

Sentence make_sentence(std::size_t index, std::vector<std::string> tokens) {
  Sentence s;
  s.index = index;
  s.tokens = std::move(tokens);
  return s;
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}

}  // namespace

TEST_CASE("inverse_doc_weight matches hand evaluations") {
  CorpusStats stats;
  stats.doc_count = 3;
  stats.doc_freq = {{"seen_once", 1}, {"seen_all", 3}};
  stats.avg_sentence_len = 5.0;
  CHECK(inverse_doc_weight("seen_once", stats) == doctest::Approx(std::log(2.5 / 1.5)));
  CHECK(inverse_doc_weight("seen_all", stats) == doctest::Approx(std::log(0.5 / 3.5)));
  CHECK(inverse_doc_weight("unseen", stats) == doctest::Approx(std::log(3.5 / 0.5)));
  // quarter-point values: 0.5108, -1.9459, 1.9459
  CHECK(inverse_doc_weight("seen_once", stats) == doctest::Approx(0.5108256).epsilon(1e-6));
  CHECK(inverse_doc_weight("seen_all", stats) == doctest::Approx(-1.9459101).epsilon(1e-6));
}

TEST_CASE("sentence_similarity with no term overlap collapses to the idw sum") {
  CorpusStats stats;
  stats.doc_count = 4;
  stats.doc_freq = {{"sofa", 1}, {"stove", 2}};
  stats.avg_sentence_len = 3.0;
  Sentence d = make_sentence(0, {"bed", "wardrobe", "chair"});
  Sentence q = make_sentence(1, {"sofa", "stove"});
  ScoringParams params;  // gamma = 1
  double want = inverse_doc_weight("sofa", stats) + inverse_doc_weight("stove", stats);
  CHECK(sentence_similarity(d, q, stats, params) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("sentence_similarity single-term unit fraction case") {
  // F=1 and |D| = L make the fraction exactly 1, so the score is 2*idw.
  CorpusStats stats;
  stats.doc_count = 10;
  stats.doc_freq = {{"sofa", 2}};
  stats.avg_sentence_len = 4.0;
  Sentence d = make_sentence(0, {"sofa", "sits", "right", "there"});
  Sentence q = make_sentence(1, {"sofa"});
  ScoringParams params;
  CHECK(sentence_similarity(d, q, stats, params) ==
        doctest::Approx(2.0 * inverse_doc_weight("sofa", stats)).epsilon(1e-12));
}

TEST_CASE("sentence_similarity empty query scores zero") {
  CorpusStats stats;
  stats.doc_count = 1;
  stats.avg_sentence_len = 2.0;
  Sentence d = make_sentence(0, {"a", "b"});
  Sentence q = make_sentence(1, {});
  CHECK(sentence_similarity(d, q, stats, {}) == 0.0);
}

TEST_CASE("sentence_similarity agrees with the straight-line oracle") {
  Rng rng(20240817);
  std::vector<std::string> vocab;
  for (int i = 0; i < 20; ++i) vocab.push_back("tok" + std::to_string(i));

  for (int round = 0; round < 200; ++round) {
    CorpusStats stats;
    stats.doc_count = 1 + static_cast<int>(rng.below(40));
    for (const auto& tok : vocab)
      stats.doc_freq[tok] = static_cast<int>(rng.below(stats.doc_count + 1));
    stats.avg_sentence_len = 1.0 + rng.unit() * 15.0;

    auto random_tokens = [&](std::size_t max_len) {
      std::vector<std::string> tokens;
      std::size_t n = 1 + rng.below(max_len);
      for (std::size_t i = 0; i < n; ++i) tokens.push_back(rng.pick(vocab));
      return tokens;
    };
    Sentence d = make_sentence(0, random_tokens(12));
    Sentence q = make_sentence(1, random_tokens(12));
    ScoringParams params;
    params.alpha = 0.5 + rng.unit() * 1.5;
    params.beta = rng.unit();
    params.gamma = rng.unit() * 2.0;

    double got = sentence_similarity(d, q, stats, params);
    double want = oracle::pair_score(d.tokens, q.tokens, stats, params.alpha, params.beta,
                                     params.gamma);
    CAPTURE(round);
    CHECK(rel_err(got, want) < 1e-9);
  }
}

TEST_CASE("gamma shifts the score by the idw sum") {
  CorpusStats stats;
  stats.doc_count = 6;
  stats.doc_freq = {{"rare", 1}, {"common", 6}};
  stats.avg_sentence_len = 2.0;
  Sentence d = make_sentence(0, {"rare", "common"});

  SUBCASE("positive idw sum: increasing gamma increases the score") {
    Sentence q = make_sentence(1, {"rare"});
    ScoringParams lo{1.2, 0.5, 0.5}, hi{1.2, 0.5, 1.5};
    CHECK(sentence_similarity(d, q, stats, hi) > sentence_similarity(d, q, stats, lo));
  }
  SUBCASE("negative idw sum: increasing gamma decreases the score") {
    Sentence q = make_sentence(1, {"common"});
    ScoringParams lo{1.2, 0.5, 0.5}, hi{1.2, 0.5, 1.5};
    CHECK(sentence_similarity(d, q, stats, hi) < sentence_similarity(d, q, stats, lo));
  }
}

TEST_CASE("build_similarity_graph sizes and symmetry") {
  CorpusStats stats;
  stats.doc_count = 3;
  stats.doc_freq = {{"hall", 1}, {"sofa", 2}, {"bed", 1}};
  stats.avg_sentence_len = 3.0;
  ScoringParams params;

  std::vector<Sentence> one = {make_sentence(0, {"hall", "sofa"})};
  auto g1 = build_similarity_graph(one, stats, params);
  CHECK(g1.nodes.size() == 1);
  CHECK(g1.edge_weight.empty());

  std::vector<Sentence> many;
  for (std::size_t i = 0; i < 5; ++i)
    many.push_back(make_sentence(i, {i % 2 ? "hall" : "bed", "sofa"}));
  auto g5 = build_similarity_graph(many, stats, params);
  CHECK(g5.edge_weight.size() == 10);  // n(n-1)/2

  // symmetrized weight equals the mean of both directed scores
  double forward = sentence_similarity(many[0], many[1], stats, params);
  double backward = sentence_similarity(many[1], many[0], stats, params);
  CHECK(g5.weight(0, 1) == doctest::Approx((forward + backward) / 2.0));
  CHECK(g5.weight(1, 0) == doctest::Approx(g5.weight(0, 1)));
}

TEST_CASE("rank_sentences breaks ties by document order") {
  SimilarityGraph g;
  g.nodes = {0, 1};
  g.edge_weight[{0, 1}] = 2.5;
  CHECK(rank_sentences(g) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank_sentences puts a heavy star center first") {
  // star: node 2 connected to 0, 1, 3; leaves get weight 1 each, center 3.
  SimilarityGraph g;
  g.nodes = {0, 1, 2, 3};
  g.edge_weight[{0, 2}] = 1.0;
  g.edge_weight[{1, 2}] = 1.0;
  g.edge_weight[{2, 3}] = 1.0;
  auto order = rank_sentences(g);
  CHECK(order[0] == 2);
  CHECK(order == std::vector<std::size_t>{2, 0, 1, 3});

  auto pr = rank_sentences(g, Centrality::PowerIteration);
  CHECK(pr[0] == 2);
}

TEST_CASE("rank_sentences on an all-zero graph is the identity") {
  SimilarityGraph g;
  for (std::size_t i = 0; i < 6; ++i) g.nodes.push_back(i);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) g.edge_weight[{i, j}] = 0.0;
  CHECK(rank_sentences(g) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  CHECK(rank_sentences(g, Centrality::PowerIteration) ==
        std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("rank output is a permutation of the nodes") {
  Rng rng(99);
  SimilarityGraph g;
  for (std::size_t i = 0; i < 9; ++i) g.nodes.push_back(i);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) g.edge_weight[{i, j}] = rng.unit() * 4.0 - 1.0;
  for (Centrality mode : {Centrality::WeightedDegree, Centrality::PowerIteration}) {
    auto order = rank_sentences(g, mode);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == g.nodes);
    CHECK(order == rank_sentences(g, mode));  // deterministic
  }
}

TEST_CASE("summarize keeps everything at ratio 1 in document order") {
  Lexicon lex = Lexicon::defaults();
  CorpusStats stats;
  stats.doc_count = 2;
  stats.doc_freq = {{"hall", 1}, {"sofa", 1}, {"bedroom", 1}};
  stats.avg_sentence_len = 4.0;
  std::string text = "The hall is big. The bedroom is small. There is a sofa.";
  auto summary = summarize(text, {1.0}, stats, lex);
  REQUIRE(summary.size() == 3);
  CHECK(summary[0].index == 0);
  CHECK(summary[1].index == 1);
  CHECK(summary[2].index == 2);
}

TEST_CASE("summarize selects ceil(ratio * n) sentences") {
  Lexicon lex = Lexicon::defaults();
  CorpusStats stats;
  stats.doc_count = 1;
  stats.avg_sentence_len = 4.0;
  std::string text;
  for (int i = 0; i < 10; ++i)
    text += "The hall number " + std::to_string(i) + " has a sofa. ";
  CHECK(summarize(text, {0.25}, stats, lex).size() == 3);
  CHECK(summarize(text, {0.1}, stats, lex).size() == 1);
  CHECK(summarize(text, {0.5}, stats, lex).size() == 5);
}

TEST_CASE("summarize of a single sentence returns it for any ratio") {
  Lexicon lex = Lexicon::defaults();
  CorpusStats stats;
  stats.doc_count = 1;
  stats.avg_sentence_len = 4.0;
  auto summary = summarize("Only the hall exists.", {0.01}, stats, lex);
  REQUIRE(summary.size() == 1);
  CHECK(summary[0].raw == "Only the hall exists.");
}

TEST_CASE("summary sentences are a subset of the input") {
  Lexicon lex = Lexicon::defaults();
  CorpusStats stats;
  stats.doc_count = 3;
  stats.doc_freq = {{"hall", 2}, {"bedroom", 1}};
  stats.avg_sentence_len = 5.0;
  std::string text = "The hall is big. The bedroom is tiny. The kitchen has a stove. More hall.";
  auto input = split_sentences(text, lex);
  auto summary = summarize(text, {0.5}, stats, lex);
  for (const auto& s : summary) {
    bool found = false;
    for (const auto& in : input) found = found || in.raw == s.raw;
    CHECK(found);
  }
}
