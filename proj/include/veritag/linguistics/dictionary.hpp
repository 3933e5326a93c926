#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veritag/error.hpp"
#include "veritag/linguistics/tokenizer.hpp"
#include "veritag/resources_data.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::linguistics {

struct DictionaryPattern {
  std::string text;  // lowercase, without the trailing '*'
  bool prefix = false;
  std::vector<std::size_t> categories;  // indices into CategoryDictionary::categories
};

/// LIWC-style category dictionary.
///
/// File layout: a header between two `%` lines holding `id<TAB>name` rows,
/// then `pattern<TAB>id[<TAB>id...]` rows. A pattern ending in `*` matches
/// by prefix, anything else by whole word; both case-insensitively.
class CategoryDictionary {
 public:
  std::vector<std::string> categories;
  std::vector<DictionaryPattern> patterns;

  static CategoryDictionary parse(std::string_view text, const std::string& origin = "dictionary") {
    CategoryDictionary d;
    std::map<long, std::size_t> id_to_index;
    std::set<std::string> names;
    int section = 0;  // 0 before header, 1 inside header, 2 patterns
    auto lines = util::split(text, '\n');
    for (std::size_t n = 0; n < lines.size(); ++n) {
      const std::string where = origin + ":" + std::to_string(n + 1);
      auto line = util::trim(lines[n]);
      if (line.empty()) continue;
      if (line == "%") {
        if (section == 2) throw DataError(where + ": unexpected '%' after the category header");
        ++section;
        continue;
      }
      if (section == 0) throw DataError(where + ": expected '%' to open the category header");
      auto fields = line.find('\t') != std::string_view::npos ? util::split(line, '\t') : util::split_ws(line);
      std::vector<std::string> parts;
      for (auto& f : fields) {
        auto t = util::trim(f);
        if (!t.empty()) parts.emplace_back(t);
      }
      if (section == 1) {
        if (parts.size() != 2) throw DataError(where + ": header rows are 'id<TAB>name'");
        long id = parse_id(parts[0], where);
        if (id_to_index.count(id)) throw DataError(where + ": duplicate category id " + parts[0]);
        if (!names.insert(parts[1]).second) throw DataError(where + ": duplicate category name '" + parts[1] + "'");
        id_to_index[id] = d.categories.size();
        d.categories.push_back(parts[1]);
        continue;
      }
      if (parts.size() < 2) throw DataError(where + ": pattern rows are 'pattern<TAB>id[<TAB>id...]'");
      DictionaryPattern p;
      std::string pat = util::to_lower(parts[0]);
      auto star = pat.find('*');
      if (star != std::string::npos && star + 1 != pat.size())
        throw DataError(where + ": '*' is only allowed as the final character");
      p.prefix = star != std::string::npos;
      p.text = p.prefix ? pat.substr(0, pat.size() - 1) : pat;
      for (std::size_t k = 1; k < parts.size(); ++k) {
        long id = parse_id(parts[k], where);
        auto it = id_to_index.find(id);
        if (it == id_to_index.end())
          throw DataError(where + ": pattern '" + parts[0] + "' references undeclared category id " + parts[k]);
        if (std::find(p.categories.begin(), p.categories.end(), it->second) == p.categories.end())
          p.categories.push_back(it->second);
      }
      d.patterns.push_back(std::move(p));
    }
    if (section < 2) throw DataError(origin + ": category header is not closed by '%'");
    if (d.categories.empty()) throw DataError(origin + ": no categories declared");
    d.build_index();
    return d;
  }

  static CategoryDictionary load(const std::string& path) { return parse(util::read_file(path), path); }

  /// The bundled demonstration dictionary (24 categories).
  static const CategoryDictionary& demo() {
    static const CategoryDictionary d = parse(resources::demo_dictionary, "demo.dic");
    return d;
  }

  /// Category indices matched by one token, ascending, without duplicates.
  std::vector<std::size_t> match(std::string_view token) const {
    std::string w = util::to_lower(token);
    std::vector<bool> hit(categories.size(), false);
    if (auto it = literal_.find(w); it != literal_.end())
      for (auto p : it->second)
        for (auto c : patterns[p].categories) hit[c] = true;
    for (std::size_t len = 0; len <= w.size(); ++len) {
      auto it = prefix_.find(w.substr(0, len));
      if (it == prefix_.end()) continue;
      for (auto p : it->second)
        for (auto c : patterns[p].categories) hit[c] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < hit.size(); ++c)
      if (hit[c]) out.push_back(c);
    return out;
  }

 private:
  static long parse_id(const std::string& s, const std::string& where) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw DataError(where + ": category id '" + s + "' is not an integer");
    }
  }

  void build_index() {
    literal_.clear();
    prefix_.clear();
    for (std::size_t i = 0; i < patterns.size(); ++i)
      (patterns[i].prefix ? prefix_ : literal_)[patterns[i].text].push_back(i);
  }

  std::unordered_map<std::string, std::vector<std::size_t>> literal_;
  std::unordered_map<std::string, std::vector<std::size_t>> prefix_;
};

/// Percentage of tokens matching each category, in category order. A token
/// may count toward several categories. No tokens: all zeros.
inline std::vector<double> dictionary_scores(const std::vector<std::string>& tokens, const CategoryDictionary& dict) {
  std::vector<double> out(dict.categories.size(), 0.0);
  if (tokens.empty()) return out;
  std::vector<std::size_t> counts(dict.categories.size(), 0);
  for (const auto& t : tokens)
    for (auto c : dict.match(t)) ++counts[c];
  for (std::size_t c = 0; c < counts.size(); ++c)
    out[c] = 100.0 * static_cast<double>(counts[c]) / static_cast<double>(tokens.size());
  return out;
}

}  // namespace veritag::linguistics
