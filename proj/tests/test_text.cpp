#include <doctest.h>

#include <fstream>
#include <sstream>

#include "t2p/errors.hpp"
#include "t2p/generator.hpp"
#include "t2p/lexicon.hpp"
#include "t2p/text.hpp"

using namespace t2p;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(T2P_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string squash_whitespace(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

TEST_CASE("split_sentences basic period split") {
  Lexicon lex = Lexicon::defaults();
  auto sentences = split_sentences("The hall is big. It has a sofa.", lex);
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].index == 0);
  CHECK(sentences[1].index == 1);
  CHECK(sentences[0].raw == "The hall is big.");
  CHECK(sentences[1].raw == "It has a sofa.");
}

TEST_CASE("split_sentences keeps decimal points") {
  Lexicon lex = Lexicon::defaults();
  auto sentences = split_sentences("There are 2.5 m walls.", lex);
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].raw == "There are 2.5 m walls.");
}

TEST_CASE("split_sentences rejects empty input") {
  Lexicon lex = Lexicon::defaults();
  CHECK_THROWS_AS(split_sentences("", lex), Error);
  CHECK_THROWS_AS(split_sentences("   \n\t ", lex), Error);
  try {
    split_sentences("", lex);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyDocument);
  }
}

TEST_CASE("split_sentences matches the hand-segmented fixture") {
  Lexicon lex = Lexicon::defaults();
  std::string text = slurp("segmentation.txt");
  std::string expected = slurp("segmentation.expected");

  std::vector<std::string> want;
  std::istringstream in(expected);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) want.push_back(line);
  REQUIRE(want.size() == 30);

  auto sentences = split_sentences(text, lex);
  REQUIRE(sentences.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(sentences[i].raw == want[i]);
    CHECK(sentences[i].index == i);
  }
}

TEST_CASE("split_sentences partitions the input") {
  Lexicon lex = Lexicon::defaults();
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 11ULL}) {
    auto gen = generate_description(seed, 4);
    auto sentences = split_sentences(gen.text, lex);
    std::string joined;
    for (const auto& s : sentences) joined += s.raw;
    CHECK(squash_whitespace(joined) == squash_whitespace(gen.text));
  }
}

TEST_CASE("tokenize lowers and strips punctuation") {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("The bedroom leads to bathroom.", lex);
  CHECK(tokens == std::vector<std::string>{"the", "bedroom", "leads", "to", "bathroom"});
}

TEST_CASE("tokenize fuses multiword lexicon terms") {
  Lexicon lex = Lexicon::defaults();
  auto tokens = tokenize("dining area is 200 by 300", lex);
  CHECK(tokens == std::vector<std::string>{"dining_area", "is", "200", "by", "300"});
}

TEST_CASE("tokenize punctuation-only input") {
  Lexicon lex = Lexicon::defaults();
  CHECK(tokenize("!!!", lex).empty());
}

TEST_CASE("tokenize keeps decimals and folds the multiplication sign") {
  Lexicon lex = Lexicon::defaults();
  CHECK(tokenize("walls are 2.5 m", lex) ==
        std::vector<std::string>{"walls", "are", "2.5", "m"});
  CHECK(tokenize("kitchen is 200 \xC3\x97 300", lex) ==
        std::vector<std::string>{"kitchen", "is", "200", "x", "300"});
}

TEST_CASE("build_corpus_stats counts documents and averages lengths") {
  TokenizedDoc d1 = {{"a", "sofa", "here", "now"}, {"b", "c", "d", "e", "f", "g"}};
  TokenizedDoc d2 = {{"a", "b"}};
  TokenizedDoc d3 = {{"c", "d"}};
  auto stats = build_corpus_stats({d1, d2, d3});
  CHECK(stats.doc_count == 3);
  CHECK(stats.freq("sofa") == 1);
  CHECK(stats.freq("a") == 2);
  CHECK(stats.freq("missing") == 0);

  auto single = build_corpus_stats({d1});
  CHECK(single.avg_sentence_len == doctest::Approx(5.0));
}

TEST_CASE("build_corpus_stats rejects an empty corpus") {
  CHECK_THROWS_AS(build_corpus_stats({}), Error);
}

TEST_CASE("doc_freq never exceeds doc_count") {
  Lexicon lex = Lexicon::defaults();
  std::vector<TokenizedDoc> docs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto gen = generate_description(seed, 2 + static_cast<int>(seed % 4));
    TokenizedDoc doc;
    for (const auto& s : split_sentences(gen.text, lex)) doc.push_back(s.tokens);
    docs.push_back(doc);
  }
  auto stats = build_corpus_stats(docs);
  for (const auto& [token, freq] : stats.doc_freq) {
    CAPTURE(token);
    CHECK(freq <= stats.doc_count);
    CHECK(freq >= 1);
  }
}

TEST_CASE("lexicon round-trips through its file format") {
  Lexicon lex = Lexicon::defaults();
  auto path = std::filesystem::temp_directory_path() / "t2p_lexicon_test.txt";
  lex.save(path);
  Lexicon loaded = Lexicon::load(path);
  CHECK(loaded.room("bedroom") == RoomType::Bedroom);
  CHECK(loaded.room("dining_area") == RoomType::Dining);
  CHECK(loaded.furniture("chairs") == std::string("chair"));
  CHECK(loaded.number("two") == 2);
  CHECK(loaded.number("second") == 2);
  CHECK(loaded.direction_wall("north") == 1);
  CHECK(!loaded.direction_wall("left").has_value());
  CHECK(loaded.is_connective("leads"));
  CHECK(loaded.connective_kind("adjacent") == RelationKind::Adjacent);
  CHECK(loaded.word_class("sofa") == WordClass::Furniture);
  CHECK(loaded.word_class("250") == WordClass::Number);
  CHECK(loaded.word_class("gleaming") == WordClass::Other);
  std::filesystem::remove(path);
}
