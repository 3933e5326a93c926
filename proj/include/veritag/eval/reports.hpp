#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/eval/protocols.hpp"
#include "veritag/eval/terms.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::eval {

/// Every report starts with one `# config: <json>` line holding the
/// resolved configuration; readers skip lines starting with '#'.
inline std::string config_line(const nlohmann::ordered_json& config) { return "# config: " + config.dump() + "\n"; }

/// Columns: fold, accuracy; a final row has fold = "mean".
inline std::string cv_report_csv(const EvalReport& r) {
  std::string out = config_line(r.config) + util::csv_row({"fold", "accuracy"});
  for (std::size_t f = 0; f < r.fold_accuracies.size(); ++f)
    out += util::csv_row({std::to_string(f), util::format_g9(r.fold_accuracies[f])});
  out += util::csv_row({"mean", util::format_g9(r.mean_accuracy)});
  return out;
}

/// Long form: train_year, test_year, accuracy. Absent cells have an empty
/// accuracy; per-train-year means use test_year = "mean".
inline std::string temporal_report_csv(const TemporalReport& r) {
  nlohmann::ordered_json config = r.config;
  if (!r.warnings.empty()) config["warnings"] = r.warnings;
  std::string out = config_line(config) + util::csv_row({"train_year", "test_year", "accuracy"});
  for (const auto& [key, v] : r.cells)
    out += util::csv_row({std::to_string(key.first), std::to_string(key.second), v ? util::format_g9(*v) : ""});
  for (const auto& [year, v] : r.means)
    out += util::csv_row({std::to_string(year), "mean", v ? util::format_g9(*v) : ""});
  return out;
}

/// Columns: training, test, classifier, baseline, tag.
inline std::string cross_domain_report_csv(const CrossDomainReport& r) {
  std::string out = config_line(r.config) + util::csv_row({"training", "test", "classifier", "baseline", "tag"});
  for (const auto& row : r.rows)
    out += util::csv_row(
        {r.train_name, r.test_name, row.classifier, util::format_g9(row.baseline), util::format_g9(row.tag)});
  return out;
}

/// One row per feature-group set, one column per granularity (mean accuracy).
inline std::string grid_report_csv(const std::vector<GridCell>& cells, const nlohmann::ordered_json& config) {
  std::vector<featureset::Granularity> grans;
  std::vector<std::string> rows;
  for (const auto& c : cells) {
    if (std::find(grans.begin(), grans.end(), c.granularity) == grans.end()) grans.push_back(c.granularity);
    auto label = featureset::groups_label(c.groups);
    if (std::find(rows.begin(), rows.end(), label) == rows.end()) rows.push_back(label);
  }
  std::vector<std::string> header{"features"};
  for (auto g : grans) header.emplace_back(featureset::to_string(g));
  std::string out = config_line(config) + util::csv_row(header);
  for (const auto& label : rows) {
    std::vector<std::string> fields{label};
    for (auto g : grans) {
      std::string v;
      for (const auto& c : cells)
        if (c.granularity == g && featureset::groups_label(c.groups) == label) v = util::format_g9(c.report.mean_accuracy);
      fields.push_back(v);
    }
    out += util::csv_row(fields);
  }
  return out;
}

/// Columns: year, rank, term, count.
inline std::string term_report_csv(const TermFrequencyReport& r, const nlohmann::ordered_json& config) {
  std::string out = config_line(config) + util::csv_row({"year", "rank", "term", "count"});
  for (const auto& [year, terms] : r.by_year)
    for (std::size_t i = 0; i < terms.size(); ++i)
      out += util::csv_row({std::to_string(year), std::to_string(i + 1), terms[i].term, std::to_string(terms[i].count)});
  return out;
}

}  // namespace veritag::eval
