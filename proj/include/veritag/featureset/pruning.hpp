#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "veritag/featureset/schema.hpp"

namespace veritag::featureset {

inline const std::vector<std::string_view>& paper_pruning_list(Granularity g) {
  static const std::vector<std::string_view> h = {"FOW", "IN",  "JJR", "PRP$", "TO",           "VBD",
                                                  "VBG", "VBZ", "WP$", "MSI",  "CW",           "TT",
                                                  "FW.semicolon", "BP.ingest", "RL.time", "PC.home"};
  static const std::vector<std::string_view> c = {"DT", "PDT", "RBR", "RP", "OG", "UH"};
  static const std::vector<std::string_view> hc = {"DT", "JJS", "PDT", "POS", "RBR", "RBS", "UH", "WRB"};
  switch (g) {
    case Granularity::H: return h;
    case Granularity::C: return c;
    default: return hc;
  }
}

/// Web-markup features kept at every granularity.
inline const std::set<std::string_view>& paper_markup_keep() {
  static const std::set<std::string_view> keep = {"IT", "AVT", "AU", "LKT", "ADS", "ST", "BT"};
  return keep;
}

/// `entry` names feature `name` when it equals the part after the group
/// prefix or is a dotted prefix of it ("CW" covers "R.CW.cap").
inline bool pruning_entry_matches(std::string_view entry, std::string_view name) {
  if (name.size() < 3 || name[1] != '.') return false;
  auto rest = name.substr(2);
  if (rest == entry) return true;
  return rest.size() > entry.size() && rest.substr(0, entry.size()) == entry && rest[entry.size()] == '.';
}

struct PruningResult {
  FeatureSchema schema;
  std::vector<std::string> removed;
  std::vector<std::string> warnings;
};

/// Published per-granularity removal list plus the fixed W keep-set.
inline PruningResult apply_paper_pruning(const FeatureSchema& in) {
  PruningResult out;
  out.schema = in;
  out.schema.names.clear();
  out.schema.pruning = "paper";
  const auto& list = paper_pruning_list(in.granularity);
  std::vector<bool> used(list.size(), false);
  for (const auto& name : in.names) {
    bool drop = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (pruning_entry_matches(list[i], name)) {
        used[i] = true;
        drop = true;
      }
    }
    if (!drop && group_of_feature(name) == Group::W && !paper_markup_keep().count(std::string_view(name).substr(2)))
      drop = true;
    if (drop) out.removed.push_back(name);
    else out.schema.names.push_back(name);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!used[i])
      out.warnings.push_back("pruning entry '" + std::string(list[i]) + "' matches no feature in the " +
                             std::string(to_string(in.granularity)) + " schema");
  return out;
}

/// Keeps the features listed in `keep` (a computed selection), in `in` order.
inline FeatureSchema apply_computed_pruning(const FeatureSchema& in, const FeatureSchema& keep,
                                            const std::string& source) {
  FeatureSchema out = in;
  out.names.clear();
  std::set<std::string> wanted(keep.names.begin(), keep.names.end());
  for (const auto& n : in.names)
    if (wanted.count(n)) out.names.push_back(n);
  out.pruning = "computed:" + source;
  return out;
}

}  // namespace veritag::featureset
