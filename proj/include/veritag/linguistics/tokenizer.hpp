#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "veritag/linguistics/word_lists.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::linguistics {

/// Half-open token index range [begin, end).
struct SentenceRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const SentenceRange&) const = default;
};

struct TokenizedText {
  std::vector<std::string> tokens;
  std::vector<bool> is_url;  // parallel to tokens
  std::vector<SentenceRange> sentences;
  std::size_t char_count = 0;  // non-whitespace code points of the input
};

namespace detail {

enum class CharClass { space, word, apostrophe, punct };

struct CodePoint {
  std::uint32_t value = 0;
  std::size_t length = 1;
};

inline CodePoint decode(std::string_view s, std::size_t i) {
  auto b = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char c = b(i);
  if (c < 0x80) return {c, 1};
  std::size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 1;
  if (i + len > s.size() || len == 1) return {0xFFFD, 1};
  std::uint32_t v = c & (len == 2 ? 0x1F : len == 3 ? 0x0F : 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    if ((b(i + k) & 0xC0) != 0x80) return {0xFFFD, 1};
    v = (v << 6) | (b(i + k) & 0x3F);
  }
  return {v, len};
}

inline CharClass classify(std::uint32_t cp) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    if (util::is_ascii_space(c)) return CharClass::space;
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) return CharClass::word;
    if (c == '\'') return CharClass::apostrophe;
    return CharClass::punct;
  }
  if (cp == 0x2018 || cp == 0x2019) return CharClass::apostrophe;
  if (cp == 0x00A0 || cp == 0x2028 || cp == 0x2029 || (cp >= 0x2000 && cp <= 0x200B) || cp == 0x3000)
    return CharClass::space;
  if ((cp >= 0x00A1 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 || (cp >= 0x2010 && cp <= 0x206F) ||
      (cp >= 0x20A0 && cp <= 0x20CF) || (cp >= 0x2190 && cp <= 0x2BFF) || (cp >= 0x3001 && cp <= 0x303F) ||
      cp == 0xFFFD || (cp >= 0xFE30 && cp <= 0xFE4F) || (cp >= 0xFF01 && cp <= 0xFF0F))
    return CharClass::punct;
  return CharClass::word;
}

inline bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

inline bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}'; }

inline bool is_opener(char c) { return c == '"' || c == '\'' || c == '(' || c == '['; }

inline std::size_t url_length(std::string_view s, std::size_t i) {
  auto rest = s.substr(i);
  auto lower_prefix = util::to_lower(rest.substr(0, 8));
  if (!util::starts_with(lower_prefix, "http://") && !util::starts_with(lower_prefix, "https://") &&
      !util::starts_with(lower_prefix, "www."))
    return 0;
  std::size_t j = i;
  while (j < s.size() && !util::is_ascii_space(s[j])) ++j;
  // trailing punctuation belongs to the sentence, not the URL
  while (j > i && std::string_view(".,;:!?)]}\"'").find(s[j - 1]) != std::string_view::npos) --j;
  std::size_t len = j - i;
  std::size_t scheme = util::starts_with(lower_prefix, "www.") ? 4 : (lower_prefix[4] == 's' ? 8 : 7);
  return len > scheme ? len : 0;
}

}  // namespace detail

/// Splits text into word tokens and sentences.
///
/// Tokens are maximal runs of letters, digits and apostrophes (leading and
/// trailing apostrophes trimmed); `http://`, `https://` and `www.` URLs are
/// single tokens. A sentence ends at a run of `.`, `!` or `?` followed by
/// whitespace and an uppercase letter, or by the end of the text, unless the
/// run is a single `.` after an abbreviation or a single-letter initial. A
/// line break also ends a sentence.
inline TokenizedText tokenize(std::string_view text, const WordSet& abbreviations) {
  TokenizedText out;
  out.char_count = util::count_non_space_chars(text);
  std::vector<std::size_t> breaks;  // token counts at which a sentence closes
  auto close_sentence = [&] {
    if (!out.tokens.empty() && (breaks.empty() || breaks.back() < out.tokens.size()))
      breaks.push_back(out.tokens.size());
  };
  std::size_t last_token_end = std::string_view::npos;

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      close_sentence();
      ++i;
      continue;
    }
    bool prev_is_word = i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1]));
    if (!prev_is_word) {
      if (std::size_t len = detail::url_length(text, i); len > 0) {
        out.tokens.emplace_back(text.substr(i, len));
        out.is_url.push_back(true);
        i += len;
        last_token_end = i;
        continue;
      }
    }
    auto cp = detail::decode(text, i);
    auto cls = detail::classify(cp.value);
    if (cls == detail::CharClass::space) {
      i += cp.length;
      continue;
    }
    if (cls == detail::CharClass::word || cls == detail::CharClass::apostrophe) {
      std::size_t j = i;
      while (j < n) {
        auto next = detail::decode(text, j);
        auto k = detail::classify(next.value);
        if (k != detail::CharClass::word && k != detail::CharClass::apostrophe) break;
        j += next.length;
      }
      std::string_view run = text.substr(i, j - i);
      // trim apostrophes (ASCII and U+2018/U+2019) at both ends
      while (!run.empty()) {
        if (run.front() == '\'') run.remove_prefix(1);
        else if (run.size() >= 3 && (run.substr(0, 3) == "\xE2\x80\x98" || run.substr(0, 3) == "\xE2\x80\x99"))
          run.remove_prefix(3);
        else break;
      }
      while (!run.empty()) {
        if (run.back() == '\'') run.remove_suffix(1);
        else if (run.size() >= 3 && (util::ends_with(run, "\xE2\x80\x98") || util::ends_with(run, "\xE2\x80\x99")))
          run.remove_suffix(3);
        else break;
      }
      if (!run.empty()) {
        out.tokens.emplace_back(run);
        out.is_url.push_back(false);
        last_token_end = j;
      }
      i = j;
      continue;
    }
    if (detail::is_terminator(c)) {
      std::size_t j = i;
      while (j < n && detail::is_terminator(text[j])) ++j;
      const bool single_period = (j - i == 1 && c == '.');
      while (j < n && detail::is_closer(text[j])) ++j;
      std::size_t k = j;
      while (k < n && util::is_ascii_space(text[k]) && text[k] != '\n') ++k;
      bool boundary = false;
      if (k >= n) {
        boundary = true;
      } else if (text[k] == '\n') {
        boundary = true;
      } else if (k > j) {
        while (k < n && detail::is_opener(text[k])) ++k;
        boundary = k < n && text[k] >= 'A' && text[k] <= 'Z';
      }
      if (boundary && single_period && last_token_end == i && !out.tokens.empty() && !out.is_url.back()) {
        const std::string& prev = out.tokens.back();
        if (abbreviations.contains(prev) || (prev.size() == 1 && std::isalpha(static_cast<unsigned char>(prev[0]))))
          boundary = false;
      }
      if (boundary) close_sentence();
      i = j;
      continue;
    }
    i += cp.length;
  }
  close_sentence();

  std::size_t begin = 0;
  for (std::size_t b : breaks) {
    out.sentences.push_back({begin, b});
    begin = b;
  }
  return out;
}

inline TokenizedText tokenize(std::string_view text) {
  return tokenize(text, WordLists::defaults().abbreviations);
}

/// Vowel-group syllable estimate: runs of a/e/i/o/u/y, less a silent final
/// "e" (kept for consonant + "le"), never below 1.
inline int count_syllables(std::string_view word) {
  std::string w;
  for (char c : word)
    if (std::isalpha(static_cast<unsigned char>(c))) w.push_back(util::ascii_lower(c));
  auto vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    bool v = vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && !vowel(w[n - 2])) {
    bool consonant_le = n >= 3 && w[n - 2] == 'l' && !vowel(w[n - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

}  // namespace veritag::linguistics
