#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/label.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::corpus {

inline constexpr int default_min_year = 1990;
inline constexpr int default_max_year = 2100;

/// One crawled page.
struct RawDocument {
  std::string id;
  std::string url;
  std::string site;
  Label label = Label::unreliable;
  int year = 0;
  std::string html;
};

/// Manifest row; the page bytes stay on disk until load_documents.
struct ManifestEntry {
  std::string id;
  std::string url;
  std::string site;
  Label label = Label::unreliable;
  int year = 0;
  std::string html_path;  // relative to the corpus directory
};

/// Page metadata before label projection.
struct PageRecord {
  std::string id;
  std::string url;
  std::string site;
  int year = 0;
  std::string html_path;
  std::string html;
};

using SiteLabels = std::map<std::string, Label>;

struct CorpusManifest {
  std::filesystem::path root;
  std::vector<ManifestEntry> entries;
  SiteLabels site_labels;
};

struct YearRange {
  int min = default_min_year;
  int max = default_max_year;
};

/// Registrable-domain form: lowercase, no scheme, no path, no port.
inline bool is_canonical_site(const std::string& site) {
  if (site.empty()) return false;
  for (char c : site) {
    if (c >= 'A' && c <= 'Z') return false;
    if (c == '/' || c == ':' || util::is_ascii_space(c)) return false;
  }
  return true;
}

inline SiteLabels parse_site_labels(const std::string& text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw DataError(origin + ": expected a JSON object of site -> label");
  SiteLabels out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!is_canonical_site(it.key()))
      throw DataError(origin + ": site '" + it.key() + "' is not a lowercase bare domain");
    if (!it.value().is_string()) throw DataError(origin + ": label for '" + it.key() + "' is not a string");
    auto label = parse_label(it.value().get<std::string>());
    if (!label) throw DataError(origin + ": unknown label for site '" + it.key() + "'");
    out.emplace(it.key(), *label);
  }
  return out;
}

namespace detail {

inline std::string require_string(const nlohmann::json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) throw DataError(where + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

inline int require_year(const nlohmann::json& j, const std::string& where, YearRange range) {
  auto it = j.find("year");
  if (it == j.end() || !it->is_number_integer()) throw DataError(where + ": missing integer field 'year'");
  int year = it->get<int>();
  if (year < range.min || year > range.max)
    throw DataError(where + ": year " + std::to_string(year) + " outside [" + std::to_string(range.min) +
                    ", " + std::to_string(range.max) + "]");
  return year;
}

}  // namespace detail

/// Parses manifest.jsonl content against already-loaded site labels.
/// Entry order is file order.
inline std::vector<ManifestEntry> parse_manifest_lines(const std::string& text, const SiteLabels& labels,
                                                       const std::string& origin, YearRange range = {}) {
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  auto lines = util::split(text, '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto line = util::trim(lines[n]);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(n + 1);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw DataError(where + ": malformed JSON record");
    }
    if (!j.is_object()) throw DataError(where + ": record is not a JSON object");
    ManifestEntry e;
    e.id = detail::require_string(j, "id", where);
    e.url = detail::require_string(j, "url", where);
    e.site = detail::require_string(j, "site", where);
    e.html_path = detail::require_string(j, "html_path", where);
    e.year = detail::require_year(j, where, range);
    auto label = parse_label(detail::require_string(j, "label", where));
    if (!label) throw DataError(where + ": label must be 'reliable' or 'unreliable'");
    e.label = *label;
    if (e.id.empty()) throw DataError(where + ": empty id");
    if (!is_canonical_site(e.site)) throw DataError(where + ": site '" + e.site + "' is not a lowercase bare domain");
    if (!seen.insert(e.id).second) throw DataError(where + ": duplicate id '" + e.id + "'");
    auto site = labels.find(e.site);
    if (site == labels.end()) throw DataError(where + ": site '" + e.site + "' missing from site_labels");
    if (site->second != e.label)
      throw DataError(where + ": label mismatch for id '" + e.id + "': entry says " +
                      std::string(to_string(e.label)) + ", site '" + e.site + "' is " +
                      std::string(to_string(site->second)));
    entries.push_back(std::move(e));
  }
  return entries;
}

/// Loads `DIR/manifest.jsonl` and `DIR/site_labels.json`.
inline CorpusManifest load_manifest(const std::filesystem::path& dir, YearRange range = {}) {
  if (!std::filesystem::is_directory(dir)) throw DataError("corpus directory not found: " + dir.string());
  CorpusManifest m;
  m.root = dir;
  auto labels_path = dir / "site_labels.json";
  auto manifest_path = dir / "manifest.jsonl";
  if (!std::filesystem::exists(labels_path)) throw DataError("missing " + labels_path.string());
  if (!std::filesystem::exists(manifest_path)) throw DataError("missing " + manifest_path.string());
  m.site_labels = parse_site_labels(util::read_file(labels_path.string()), labels_path.string());
  m.entries = parse_manifest_lines(util::read_file(manifest_path.string()), m.site_labels,
                                   manifest_path.string(), range);
  return m;
}

inline RawDocument load_document(const CorpusManifest& m, const ManifestEntry& e) {
  RawDocument d;
  d.id = e.id;
  d.url = e.url;
  d.site = e.site;
  d.label = e.label;
  d.year = e.year;
  d.html = util::read_file((m.root / e.html_path).string());
  return d;
}

inline std::vector<RawDocument> load_documents(const CorpusManifest& m) {
  std::vector<RawDocument> docs;
  docs.reserve(m.entries.size());
  for (const auto& e : m.entries) docs.push_back(load_document(m, e));
  return docs;
}

/// Entries whose HTML file is missing.
inline std::vector<std::string> missing_html(const CorpusManifest& m) {
  std::vector<std::string> out;
  for (const auto& e : m.entries)
    if (!std::filesystem::is_regular_file(m.root / e.html_path)) out.push_back(e.id);
  return out;
}

/// Writes a corpus directory whose html_path values point back at the
/// source files (relative to `out_dir`). Only sites used by entries are kept.
inline void write_manifest(const std::filesystem::path& out_dir, const std::filesystem::path& source_root,
                           const std::vector<ManifestEntry>& entries, const SiteLabels& labels) {
  std::filesystem::create_directories(out_dir);
  std::string lines;
  SiteLabels used;
  for (const auto& e : entries) {
    ManifestEntry copy = e;
    auto src = std::filesystem::absolute(source_root / e.html_path).lexically_normal();
    copy.html_path = src.lexically_relative(std::filesystem::absolute(out_dir).lexically_normal()).generic_string();
    nlohmann::ordered_json j;
    j["id"] = copy.id;
    j["url"] = copy.url;
    j["site"] = copy.site;
    j["label"] = std::string(to_string(copy.label));
    j["year"] = copy.year;
    j["html_path"] = copy.html_path;
    lines += j.dump() + "\n";
    used[e.site] = labels.at(e.site);
  }
  nlohmann::ordered_json sl = nlohmann::ordered_json::object();
  for (const auto& [site, label] : used) sl[site] = std::string(to_string(label));
  util::write_file((out_dir / "manifest.jsonl").string(), lines);
  util::write_file((out_dir / "site_labels.json").string(), sl.dump(2) + "\n");
}

struct ProjectionResult {
  std::vector<RawDocument> documents;
  std::size_t dropped_unknown_site = 0;
};

/// Assigns every page its site's label. Pages from sites absent from the
/// table are dropped and counted.
inline ProjectionResult project_labels(const SiteLabels& labels, const std::vector<PageRecord>& pages) {
  ProjectionResult r;
  for (const auto& p : pages) {
    auto it = labels.find(p.site);
    if (it == labels.end()) {
      ++r.dropped_unknown_site;
      continue;
    }
    RawDocument d;
    d.id = p.id;
    d.url = p.url;
    d.site = p.site;
    d.label = it->second;
    d.year = p.year;
    d.html = p.html;
    r.documents.push_back(std::move(d));
  }
  return r;
}

/// Overload for already-labelled documents; relabels by site.
inline ProjectionResult project_labels(const SiteLabels& labels, const std::vector<RawDocument>& docs) {
  std::vector<PageRecord> pages;
  pages.reserve(docs.size());
  for (const auto& d : docs) pages.push_back({d.id, d.url, d.site, d.year, {}, d.html});
  return project_labels(labels, pages);
}

/// Reads unlabelled page records (manifest layout without `label`).
inline std::vector<PageRecord> load_page_records(const std::filesystem::path& path, YearRange range = {}) {
  std::vector<PageRecord> out;
  std::set<std::string> seen;
  auto lines = util::split(util::read_file(path.string()), '\n');
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto line = util::trim(lines[n]);
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(n + 1);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw DataError(where + ": malformed JSON record");
    }
    PageRecord p;
    p.id = detail::require_string(j, "id", where);
    p.url = detail::require_string(j, "url", where);
    p.site = detail::require_string(j, "site", where);
    p.html_path = detail::require_string(j, "html_path", where);
    p.year = detail::require_year(j, where, range);
    if (!seen.insert(p.id).second) throw DataError(where + ": duplicate id '" + p.id + "'");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace veritag::corpus
