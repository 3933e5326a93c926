#pragma once

#include <cctype>
#include <cmath>
#include <set>
#include <string>
#include <string_view>

#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/linguistics/word_lists.hpp"
#include "veritag/util/numeric.hpp"

namespace veritag::linguistics {

struct ReadabilityScores {
  double fri = 0, fki = 0, msi = 0, gfi = 0, cli = 0, ari = 0, lwi = 0;
  double ws = 0;   // words per sentence
  long w = 0;      // words (URL tokens excluded)
  long stc = 0;    // sentences
  long ch = 0;     // non-whitespace characters
  long sy = 0;     // syllables
  long lx = 0;     // distinct lowercase words
  long cw_cap = 0;      // words starting with an uppercase letter
  long cw_complex = 0;  // words of three or more syllables
  long dw = 0;     // words missing from the easy-word list
  long lw = 0;     // words with more than six letters
  long url = 0;
  double ps = 0;   // percent stopwords
};

/// Letters (ASCII letters and non-ASCII code points) in a word.
inline long letter_count(std::string_view word) {
  long n = 0;
  for (char c : word) {
    auto u = static_cast<unsigned char>(c);
    if ((u & 0xC0) == 0x80) continue;
    if (std::isalpha(u) || u >= 0x80) ++n;
  }
  return n;
}

/// Linsear Write over the first 100 words: 1 point per word under three
/// syllables, 3 per word with more; divided by the sentences those words
/// touch; halved above 20, otherwise (r - 2) / 2.
inline double linsear_write(const TokenizedText& t) {
  long points = 0, words = 0;
  std::set<std::size_t> sentences;
  for (std::size_t s = 0; s < t.sentences.size() && words < 100; ++s) {
    for (std::size_t i = t.sentences[s].begin; i < t.sentences[s].end && words < 100; ++i) {
      if (t.is_url[i]) continue;
      points += count_syllables(t.tokens[i]) >= 3 ? 3 : 1;
      ++words;
      sentences.insert(s);
    }
  }
  if (sentences.empty()) return 0.0;
  double r = static_cast<double>(points) / static_cast<double>(sentences.size());
  return r > 20.0 ? r / 2.0 : (r - 2.0) / 2.0;
}

/// Readability indices and raw counts. Every ratio with a zero denominator is
/// 0, and with no words all indices are 0.
inline ReadabilityScores readability_features(const TokenizedText& t, const WordLists& lists = WordLists::defaults()) {
  ReadabilityScores r;
  r.ch = static_cast<long>(t.char_count);
  r.stc = static_cast<long>(t.sentences.size());
  long letters = 0, stop = 0;
  std::set<std::string> lexicon;
  for (std::size_t i = 0; i < t.tokens.size(); ++i) {
    if (t.is_url[i]) {
      ++r.url;
      continue;
    }
    const std::string& tok = t.tokens[i];
    ++r.w;
    int syl = count_syllables(tok);
    r.sy += syl;
    if (syl >= 3) ++r.cw_complex;
    long lc = letter_count(tok);
    letters += lc;
    if (lc > 6) ++r.lw;
    if (std::isupper(static_cast<unsigned char>(tok[0]))) ++r.cw_cap;
    if (!lists.easy_words.contains(tok)) ++r.dw;
    if (lists.stopwords.contains(tok)) ++stop;
    lexicon.insert(util::to_lower(tok));
  }
  r.lx = static_cast<long>(lexicon.size());
  if (r.w == 0 || r.stc == 0) return r;

  const double w = static_cast<double>(r.w), stc = static_cast<double>(r.stc);
  const double words_per_sentence = w / stc;
  const double syllables_per_word = static_cast<double>(r.sy) / w;
  r.ws = words_per_sentence;
  r.ps = 100.0 * static_cast<double>(stop) / w;
  r.fri = 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word;
  r.fki = 0.39 * words_per_sentence + 11.8 * syllables_per_word - 15.59;
  r.msi = 1.0430 * std::sqrt(static_cast<double>(r.cw_complex) * 30.0 / stc) + 3.1291;
  r.gfi = 0.4 * (words_per_sentence + 100.0 * static_cast<double>(r.cw_complex) / w);
  const double l = 100.0 * static_cast<double>(letters) / w;
  const double s = 100.0 * stc / w;
  r.cli = 0.0588 * l - 0.296 * s - 15.8;
  r.ari = 4.71 * (static_cast<double>(r.ch) / w) + 0.5 * words_per_sentence - 21.43;
  r.lwi = linsear_write(t);
  return r;
}

}  // namespace veritag::linguistics
