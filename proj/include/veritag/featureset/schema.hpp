#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/label.hpp"
#include "veritag/util/hash.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::featureset {

/// Feature groups: morphological (N), psychological (L), readability (R),
/// web markup (W). Declaration order is the column order.
enum class Group { N, L, R, W };

/// Which text feeds the linguistic groups: headline, content, or both.
enum class Granularity { H, C, HC };

inline constexpr Group all_groups[] = {Group::N, Group::L, Group::R, Group::W};

inline char group_letter(Group g) { return "NLRW"[static_cast<int>(g)]; }

inline std::optional<Group> parse_group(char c) {
  switch (c) {
    case 'N': return Group::N;
    case 'L': return Group::L;
    case 'R': return Group::R;
    case 'W': return Group::W;
    default: return std::nullopt;
  }
}

using GroupSet = std::set<Group>;

/// "L-N-R-W", "N,W", "LNRW" and so on.
inline GroupSet parse_groups(std::string_view spec) {
  GroupSet out;
  for (char c : spec) {
    if (c == '-' || c == ',' || c == ' ' || c == '+') continue;
    auto g = parse_group(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (!g) throw UsageError("unknown feature group '" + std::string(1, c) + "' in '" + std::string(spec) + "'");
    out.insert(*g);
  }
  if (out.empty()) throw UsageError("empty feature group list");
  return out;
}

/// Canonical "L-N-R-W" style label (alphabetical, like the result tables).
inline std::string groups_label(const GroupSet& groups) {
  std::string letters;
  for (Group g : groups) letters.push_back(group_letter(g));
  std::sort(letters.begin(), letters.end());
  std::string out;
  for (char c : letters) {
    if (!out.empty()) out.push_back('-');
    out.push_back(c);
  }
  return out;
}

inline std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::H: return "H";
    case Granularity::C: return "C";
    default: return "HC";
  }
}

inline Granularity parse_granularity(std::string_view s) {
  if (s == "H") return Granularity::H;
  if (s == "C") return Granularity::C;
  if (s == "HC") return Granularity::HC;
  throw UsageError("granularity must be H, C or HC, got '" + std::string(s) + "'");
}

/// Ordered feature names `group.name[.subcategory]`.
struct FeatureSchema {
  std::vector<std::string> names;
  Granularity granularity = Granularity::HC;
  GroupSet groups;
  std::string pruning = "none";  // none | paper | computed:PATH

  std::size_t size() const { return names.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }

  /// Stable identity of the column layout, checked when a model is loaded.
  std::string hash() const {
    std::string key(to_string(granularity));
    for (const auto& n : names) key += "\x1f" + n;
    return util::hex64(util::fnv1a64(key));
  }

  /// Throws unless names are unique and every prefix is a member group.
  void validate() const {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) throw DataError("schema: duplicate feature name '" + n + "'");
      auto g = n.size() > 2 && n[1] == '.' ? parse_group(n[0]) : std::nullopt;
      if (!g) throw DataError("schema: feature '" + n + "' lacks a group prefix");
      if (!groups.count(*g)) throw DataError("schema: feature '" + n + "' belongs to a group not in the schema");
    }
  }

  bool operator==(const FeatureSchema&) const = default;
};

inline Group group_of_feature(std::string_view name) {
  auto g = name.size() > 2 && name[1] == '.' ? parse_group(name[0]) : std::nullopt;
  if (!g) throw DataError("feature '" + std::string(name) + "' lacks a group prefix");
  return *g;
}

struct FeatureVector {
  std::string doc_id;
  std::vector<double> values;
  std::optional<Label> label;
};

/// Rows aligned to one schema.
struct FeatureMatrix {
  FeatureSchema schema;
  std::vector<FeatureVector> rows;

  std::vector<std::vector<double>> values() const {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.values);
    return out;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
      if (!r.label) throw DataError("feature matrix row '" + r.doc_id + "' has no label");
      out.push_back(class_id(*r.label));
    }
    return out;
  }
};

/// Reorders / subsets `values` (laid out per `from`) into the layout of `to`.
inline std::vector<double> project(const std::vector<double>& values, const FeatureSchema& from,
                                   const FeatureSchema& to) {
  std::vector<double> out;
  out.reserve(to.size());
  for (const auto& n : to.names) {
    auto idx = from.index_of(n);
    if (!idx) throw DataError("feature '" + n + "' is not available in the source schema");
    out.push_back(values[*idx]);
  }
  return out;
}

inline FeatureMatrix project(const FeatureMatrix& m, const FeatureSchema& to) {
  FeatureMatrix out;
  out.schema = to;
  std::vector<std::size_t> idx;
  for (const auto& n : to.names) {
    auto i = m.schema.index_of(n);
    if (!i) throw DataError("feature '" + n + "' is not available in the source schema");
    idx.push_back(*i);
  }
  for (const auto& r : m.rows) {
    FeatureVector v{r.doc_id, {}, r.label};
    v.values.reserve(idx.size());
    for (auto i : idx) v.values.push_back(r.values[i]);
    out.rows.push_back(std::move(v));
  }
  return out;
}

inline nlohmann::json schema_to_json(const FeatureSchema& s) {
  nlohmann::json j;
  j["names"] = s.names;
  std::vector<std::string> groups;
  for (Group g : s.groups) groups.emplace_back(1, group_letter(g));
  j["groups"] = groups;
  j["granularity"] = std::string(to_string(s.granularity));
  j["pruning"] = s.pruning;
  return j;
}

inline FeatureSchema schema_from_json(const nlohmann::json& j) {
  try {
    FeatureSchema s;
    s.names = j.at("names").get<std::vector<std::string>>();
    for (const auto& g : j.at("groups").get<std::vector<std::string>>()) {
      auto parsed = g.size() == 1 ? parse_group(g[0]) : std::nullopt;
      if (!parsed) throw DataError("schema: unknown group '" + g + "'");
      s.groups.insert(*parsed);
    }
    s.granularity = parse_granularity(j.at("granularity").get<std::string>());
    s.pruning = j.value("pruning", std::string("none"));
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("schema: ") + e.what());
  }
}

/// Schema JSON files use a fixed key order so reruns are byte-identical.
inline std::string schema_file_text(const FeatureSchema& s) {
  nlohmann::ordered_json j;
  j["names"] = s.names;
  std::vector<std::string> groups;
  for (Group g : s.groups) groups.emplace_back(1, group_letter(g));
  j["groups"] = groups;
  j["granularity"] = std::string(to_string(s.granularity));
  j["pruning"] = s.pruning;
  return j.dump(2) + "\n";
}

inline FeatureSchema load_schema(const std::string& path) {
  try {
    return schema_from_json(nlohmann::json::parse(util::read_file(path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace veritag::featureset
