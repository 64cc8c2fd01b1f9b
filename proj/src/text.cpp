#include "t2p/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "t2p/errors.hpp"

namespace t2p {

namespace {

bool is_ascii_alnum(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 128 && std::isalnum(u) != 0;
}

// Last run of letters before position i (exclusive), lowercased.
std::string word_before(std::string_view text, std::size_t i) {
  std::size_t e = i;
  std::size_t b = e;
  while (b > 0 && std::isalpha(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string w(text.substr(b, e - b));
  for (char& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return w;
}

const std::set<std::string>& abbreviations() {
  static const std::set<std::string> table = {"sq", "ft", "mr", "mrs", "dr",
                                              "no", "vs", "etc", "approx"};
  return table;
}

std::string trim_view(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence, const Lexicon& lex) {
  // U+00D7 (multiplication sign) appears in dimension phrases; fold it to 'x'.
  std::string normalized;
  normalized.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    unsigned char u = static_cast<unsigned char>(sentence[i]);
    if (u == 0xC3 && i + 1 < sentence.size() &&
        static_cast<unsigned char>(sentence[i + 1]) == 0x97) {
      normalized += " x ";
      ++i;
    } else if (u < 128) {
      normalized += sentence[i];
    }
    // other non-ASCII bytes dropped
  }

  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    char c = normalized[i];
    if (is_ascii_alnum(c)) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (c == '.' && !cur.empty() && std::isdigit(static_cast<unsigned char>(cur.back())) &&
               i + 1 < normalized.size() &&
               std::isdigit(static_cast<unsigned char>(normalized[i + 1]))) {
      cur += '.';  // decimal point inside a number
    } else {
      flush();
    }
  }
  flush();

  // Fuse multiword lexicon terms.
  if (!lex.fusions().empty() && tokens.size() >= 2) {
    std::vector<std::string> fused;
    fused.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      bool matched = false;
      if (i + 1 < tokens.size()) {
        for (const auto& f : lex.fusions()) {
          if (tokens[i] == f[0] && tokens[i + 1] == f[1]) {
            fused.push_back(f[2]);
            ++i;
            matched = true;
            break;
          }
        }
      }
      if (!matched) fused.push_back(tokens[i]);
    }
    return fused;
  }
  return tokens;
}

std::vector<Sentence> split_sentences(std::string_view text, const Lexicon& lex) {
  if (trim_view(text).empty()) raise(Errc::EmptyDocument, "input has no content");

  std::vector<Sentence> sentences;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    std::string raw = trim_view(text.substr(start, end - start));
    if (!raw.empty()) {
      Sentence s;
      s.index = sentences.size();
      s.raw = std::move(raw);
      s.tokens = tokenize(s.raw, lex);
      sentences.push_back(std::move(s));
    }
    start = end;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    bool at_end = true;
    for (std::size_t j = i + 1; j < text.size(); ++j) {
      if (std::isspace(static_cast<unsigned char>(text[j]))) break;
      at_end = false;
      break;
    }
    if (!at_end) continue;  // "2.5" never reaches here: '5' follows the '.'
    if (c == '.' && abbreviations().count(word_before(text, i))) continue;
    emit(i + 1);
  }
  emit(text.size());  // trailing chunk without terminal punctuation

  return sentences;
}

CorpusStats build_corpus_stats(const std::vector<TokenizedDoc>& documents) {
  if (documents.empty()) raise(Errc::EmptyCorpus, "no documents");

  CorpusStats stats;
  stats.doc_count = static_cast<int>(documents.size());
  long long total_tokens = 0;
  long long total_sentences = 0;
  for (const auto& doc : documents) {
    std::set<std::string> seen;
    for (const auto& sent : doc) {
      total_sentences += 1;
      total_tokens += static_cast<long long>(sent.size());
      for (const auto& tok : sent) seen.insert(tok);
    }
    for (const auto& tok : seen) stats.doc_freq[tok] += 1;
  }
  stats.avg_sentence_len =
      total_sentences > 0 ? static_cast<double>(total_tokens) / static_cast<double>(total_sentences)
                          : 0.0;
  return stats;
}

}  // namespace t2p
