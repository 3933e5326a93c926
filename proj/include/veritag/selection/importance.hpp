#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "veritag/error.hpp"
#include "veritag/featureset/schema.hpp"
#include "veritag/featureset/standardizer.hpp"
#include "veritag/selection/binning.hpp"
#include "veritag/selection/extra_trees.hpp"
#include "veritag/selection/l1_logistic.hpp"
#include "veritag/util/csv.hpp"
#include "veritag/util/parallel.hpp"
#include "veritag/util/strings.hpp"

namespace veritag::selection {

inline constexpr double entropy_epsilon = 1e-9;

struct ImportanceScores {
  std::vector<std::string> features;
  std::vector<double> se_raw, tb_raw, l1_raw, mi_raw;
  std::vector<double> se_inv_norm, tb_norm, l1_norm, mi_norm;
  std::vector<double> r;
  std::vector<bool> retained;

  std::size_t size() const { return r.size(); }
};

/// Min-max to [0, 1]; an all-equal column maps to 1.
inline std::vector<double> min_max_normalize(const std::vector<double>& v) {
  if (v.empty()) return {};
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double a = *lo, b = *hi;
  std::vector<double> out(v.size(), 1.0);
  if (b > a)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - a) / (b - a);
  return out;
}

/// r = (se_inv * tb * l1 * mi)^(1/4) over normalized factors.
inline double geometric_importance(double se_inv_norm, double tb_norm, double l1_norm, double mi_norm) {
  const double product = se_inv_norm * tb_norm * l1_norm * mi_norm;
  return product > 0.0 ? std::pow(product, 0.25) : 0.0;
}

inline ImportanceScores aggregate_importance(const std::vector<double>& se_raw, const std::vector<double>& tb_raw,
                                             const std::vector<double>& l1_raw, const std::vector<double>& mi_raw) {
  const std::size_t d = se_raw.size();
  if (tb_raw.size() != d || l1_raw.size() != d || mi_raw.size() != d)
    throw InvariantError("aggregate_importance: score arrays differ in length");
  ImportanceScores s;
  s.se_raw = se_raw;
  s.tb_raw = tb_raw;
  s.l1_raw = l1_raw;
  s.mi_raw = mi_raw;
  std::vector<double> se_inv(d);
  for (std::size_t i = 0; i < d; ++i) se_inv[i] = 1.0 / (se_raw[i] + entropy_epsilon);
  s.se_inv_norm = min_max_normalize(se_inv);
  s.tb_norm = min_max_normalize(tb_raw);
  s.l1_norm = min_max_normalize(l1_raw);
  s.mi_norm = min_max_normalize(mi_raw);
  s.r.resize(d);
  s.retained.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    s.r[i] = geometric_importance(s.se_inv_norm[i], s.tb_norm[i], s.l1_norm[i], s.mi_norm[i]);
    s.retained[i] = s.r[i] > 0.0;
  }
  return s;
}

struct SelectionConfig {
  int bins = 10;
  int trees = 250;
  double lambda = default_l1_lambda;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

struct SelectionResult {
  featureset::FeatureSchema schema;
  ImportanceScores scores;
};

/// Scores every feature on the standardized matrix and keeps those with r > 0,
/// in schema order.
inline SelectionResult select_features(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                                       const featureset::FeatureSchema& schema, const SelectionConfig& cfg = {}) {
  if (X.empty() || X.size() != y.size()) throw DataError("select: X and y must be nonempty and aligned");
  if (X.front().size() != schema.size()) throw DataError("select: matrix width differs from schema");
  const auto Z = featureset::standardize_apply(featureset::standardize_fit(X), X);
  const std::size_t d = schema.size();

  std::vector<double> se(d), mi(d);
  util::parallel_for(d, cfg.jobs, [&](std::size_t j) {
    std::vector<double> col(Z.size());
    for (std::size_t i = 0; i < Z.size(); ++i) col[i] = Z[i][j];
    se[j] = shannon_entropy_score(col, cfg.bins);
    mi[j] = mutual_info_score(col, y, cfg.bins);
  });
  auto tb = tree_importance(Z, y, cfg.trees, cfg.seed, cfg.jobs);
  auto l1 = l1_score(Z, y, cfg.lambda);

  SelectionResult out;
  out.scores = aggregate_importance(se, tb, l1, mi);
  out.scores.features = schema.names;
  out.schema = schema;
  out.schema.names.clear();
  for (std::size_t j = 0; j < d; ++j)
    if (out.scores.retained[j]) out.schema.names.push_back(schema.names[j]);
  if (out.schema.names.empty()) throw DataError("select: every feature has zero importance (degenerate data)");
  return out;
}

inline std::string importance_report_csv(const ImportanceScores& s) {
  std::string out = util::csv_row({"feature", "se_raw", "tb_raw", "l1_raw", "mi_raw", "se_inv_norm", "tb_norm",
                                   "l1_norm", "mi_norm", "r", "retained"});
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += util::csv_row({s.features.at(i), util::format_g9(s.se_raw[i]), util::format_g9(s.tb_raw[i]),
                          util::format_g9(s.l1_raw[i]), util::format_g9(s.mi_raw[i]), util::format_g9(s.se_inv_norm[i]),
                          util::format_g9(s.tb_norm[i]), util::format_g9(s.l1_norm[i]), util::format_g9(s.mi_norm[i]),
                          util::format_g9(s.r[i]), s.retained[i] ? "1" : "0"});
  }
  return out;
}

}  // namespace veritag::selection
