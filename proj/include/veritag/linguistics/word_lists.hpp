#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "veritag/resources_data.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::linguistics {

/// Case-insensitive word set loaded from a one-entry-per-line resource.
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(const std::vector<std::string>& words) {
    for (const auto& w : words) words_.insert(util::to_lower(w));
  }

  static WordSet from_text(std::string_view text) { return WordSet(util::parse_word_list(text)); }
  static WordSet from_file(const std::string& path) { return WordSet(util::load_word_list(path)); }

  bool contains(std::string_view word) const { return words_.count(util::to_lower(word)) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// The resource lists used by tokenization and readability. Defaults are
/// the bundled lists in resources/.
struct WordLists {
  WordSet stopwords = WordSet::from_text(resources::stopwords);
  WordSet easy_words = WordSet::from_text(resources::easy_words);
  WordSet abbreviations = WordSet::from_text(resources::abbreviations);

  static const WordLists& defaults() {
    static const WordLists lists;
    return lists;
  }
};

}  // namespace veritag::linguistics
