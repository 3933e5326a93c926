#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "veritag/linguistics/pos_tagger.hpp"
#include "veritag/linguistics/tokenizer.hpp"

namespace veritag::linguistics {

/// The 33 part-of-speech features, in feature order. FOW is the foreign-word
/// tag (Penn "FW"), renamed so it cannot collide with the function-word
/// dictionary category.
inline constexpr std::array<std::string_view, 33> morphological_tags = {
    "WDT", "PDT", "JJ",  "VB",  "MD",  "CD",  "VBD", "VBG", "VBN", "RP",   "DT",
    "NNPS", "NN", "CC",  "WRB", "FOW", "NNS", "TO",  "WP$", "JJS", "WP",   "POS",
    "VBP", "RBR", "NNP", "UH",  "PRP", "VBZ", "RBS", "PRP$", "RB", "JJR", "IN"};

struct PosTagCounts {
  std::array<int, morphological_tags.size()> counts{};

  int operator[](std::string_view tag) const {
    for (std::size_t i = 0; i < morphological_tags.size(); ++i)
      if (morphological_tags[i] == tag) return counts[i];
    return 0;
  }
  bool operator==(const PosTagCounts&) const = default;
};

/// Counts feature tags in a tag sequence; tags outside the table are ignored.
inline PosTagCounts count_tags(const std::vector<std::string>& tags) {
  PosTagCounts out;
  for (const auto& t : tags) {
    std::string_view name = t == "FW" ? std::string_view("FOW") : std::string_view(t);
    for (std::size_t i = 0; i < morphological_tags.size(); ++i)
      if (morphological_tags[i] == name) {
        ++out.counts[i];
        break;
      }
  }
  return out;
}

inline PosTagCounts morphological_features(const TokenizedText& text, const PosTagger& tagger) {
  return count_tags(tagger.tag(text));
}

inline PosTagCounts morphological_features(const std::vector<std::string>& tokens, const PosTagger& tagger) {
  return count_tags(tagger.tag(tokens));
}

}  // namespace veritag::linguistics
