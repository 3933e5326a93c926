#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "veritag/featureset/schema.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::featureset {

/// Header `doc_id,<names...>[,label]`; values at 9 significant digits.
inline std::string feature_matrix_csv(const FeatureMatrix& m) {
  bool labeled = !m.rows.empty();
  for (const auto& r : m.rows) labeled = labeled && r.label.has_value();
  std::vector<std::string> header{"doc_id"};
  header.insert(header.end(), m.schema.names.begin(), m.schema.names.end());
  if (labeled) header.push_back("label");
  std::string out = util::csv_row(header);
  for (const auto& r : m.rows) {
    std::vector<std::string> fields{r.doc_id};
    for (double v : r.values) fields.push_back(util::format_g9(v));
    if (labeled) fields.emplace_back(to_string(*r.label));
    out += util::csv_row(fields);
  }
  return out;
}

/// Sidecar carrying granularity and pruning, which the CSV header cannot.
inline std::string schema_sidecar_path(const std::string& csv_path) { return csv_path + ".schema.json"; }

inline void write_feature_matrix(const std::string& path, const FeatureMatrix& m) {
  util::write_file(path, feature_matrix_csv(m));
  util::write_file(schema_sidecar_path(path), schema_file_text(m.schema));
}

inline FeatureMatrix parse_feature_matrix(std::string_view text, const std::string& origin = "<matrix>") {
  auto rows = util::parse_csv(text);
  if (rows.empty() || rows.front().empty() || rows.front().front() != "doc_id")
    throw DataError(origin + ": feature matrix must start with a doc_id column");
  const auto& header = rows.front();
  const bool labeled = header.back() == "label";
  const std::size_t first = 1, last = header.size() - (labeled ? 1 : 0);
  FeatureMatrix m;
  for (std::size_t c = first; c < last; ++c) {
    m.schema.names.push_back(header[c]);
    m.schema.groups.insert(group_of_feature(header[c]));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() == 1 && row[0].empty()) continue;
    const std::string where = origin + ":" + std::to_string(i + 1);
    if (row.size() != header.size()) throw DataError(where + ": expected " + std::to_string(header.size()) + " fields");
    FeatureVector v;
    v.doc_id = row[0];
    for (std::size_t c = first; c < last; ++c) {
      double x;
      try {
        std::size_t used = 0;
        x = std::stod(row[c], &used);
        if (used != row[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw DataError(where + ": '" + row[c] + "' is not a number");
      }
      if (!std::isfinite(x)) throw DataError(where + ": non-finite value");
      v.values.push_back(x);
    }
    if (labeled) {
      v.label = parse_label(row.back());
      if (!v.label) throw DataError(where + ": unknown label '" + row.back() + "'");
    }
    m.rows.push_back(std::move(v));
  }
  return m;
}

/// Reads the CSV and, when present, its schema sidecar.
inline FeatureMatrix read_feature_matrix(const std::string& path) {
  auto m = parse_feature_matrix(util::read_file(path), path);
  const auto sidecar = schema_sidecar_path(path);
  if (std::filesystem::exists(sidecar)) {
    auto s = load_schema(sidecar);
    if (s.names != m.schema.names) throw DataError(sidecar + ": names disagree with " + path);
    m.schema = s;
  }
  m.schema.validate();
  return m;
}

}  // namespace veritag::featureset
