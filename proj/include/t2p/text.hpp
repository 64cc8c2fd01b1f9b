#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "t2p/lexicon.hpp"

namespace t2p {

struct Sentence {
  std::size_t index = 0;        // document order, 0-based
  std::string raw;              // original text, surrounding whitespace trimmed
  std::vector<std::string> tokens;
};

// One tokenized document: sentences as token lists.
using TokenizedDoc = std::vector<std::vector<std::string>>;

struct CorpusStats {
  int doc_count = 0;
  std::map<std::string, int> doc_freq;  // documents containing the token at least once
  double avg_sentence_len = 0.0;        // tokens per sentence across the corpus

  int freq(const std::string& token) const {
    auto it = doc_freq.find(token);
    return it == doc_freq.end() ? 0 : it->second;
  }
};

// Lowercased tokens, punctuation stripped. Decimal numbers stay single tokens
// ("2.5"); multiword lexicon terms are fused ("dining area" -> "dining_area").
std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex);

// Splits on '.', '!', '?' followed by whitespace or end of input. Decimal
// points never match (a digit follows) and a fixed abbreviation table ("sq.",
// "ft.", ...) suppresses the period rule. Throws EmptyDocument for
// empty/whitespace-only input. Sentences keep document order; punctuation-only
// chunks are kept (with empty token lists) so the raws partition the input.
std::vector<Sentence> split_sentences(std::string_view text, const Lexicon& lex);

// Throws EmptyCorpus when documents is empty.
CorpusStats build_corpus_stats(const std::vector<TokenizedDoc>& documents);

}  // namespace t2p
