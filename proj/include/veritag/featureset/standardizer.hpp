#pragma once

#include <cmath>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/util/numeric.hpp"

namespace veritag::featureset {

struct StandardizerParams {
  std::vector<double> mean;
  std::vector<double> stddev;      // population standard deviation
  std::vector<bool> zero_variance;

  std::size_t size() const { return mean.size(); }
  bool operator==(const StandardizerParams&) const = default;
};

/// Column sums use pairwise summation so results do not depend on how the
/// rows were produced.
inline StandardizerParams standardize_fit(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DataError("standardizer: cannot fit on an empty matrix");
  const std::size_t d = rows.front().size();
  const double n = static_cast<double>(rows.size());
  StandardizerParams p;
  p.mean.resize(d);
  p.stddev.resize(d);
  p.zero_variance.resize(d);
  std::vector<double> col(rows.size());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != d) throw DataError("standardizer: ragged matrix");
      if (!std::isfinite(rows[i][j])) throw DataError("standardizer: non-finite input value");
      col[i] = rows[i][j];
    }
    const double mean = util::pairwise_sum(col) / n;
    for (auto& v : col) v = (v - mean) * (v - mean);
    const double sd = std::sqrt(util::pairwise_sum(col) / n);
    p.mean[j] = mean;
    // tiny spreads come from rounding of constant columns
    p.zero_variance[j] = !(sd > 1e-12 * std::max(1.0, std::abs(mean)));
    p.stddev[j] = p.zero_variance[j] ? 0.0 : sd;
  }
  return p;
}

inline std::vector<double> standardize_apply(const StandardizerParams& p, const std::vector<double>& x) {
  if (x.size() != p.size()) throw DataError("standardizer: dimension mismatch");
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = p.zero_variance[j] ? 0.0 : (x[j] - p.mean[j]) / p.stddev[j];
    if (!std::isfinite(out[j])) out[j] = 0.0;
  }
  return out;
}

inline std::vector<std::vector<double>> standardize_apply(const StandardizerParams& p,
                                                          const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(standardize_apply(p, r));
  return out;
}

/// Zero-variance columns map back to their mean.
inline std::vector<double> standardize_inverse(const StandardizerParams& p, const std::vector<double>& z) {
  if (z.size() != p.size()) throw DataError("standardizer: dimension mismatch");
  std::vector<double> out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = p.zero_variance[j] ? p.mean[j] : z[j] * p.stddev[j] + p.mean[j];
  return out;
}

inline nlohmann::ordered_json to_json(const StandardizerParams& p) {
  nlohmann::ordered_json j;
  j["mean"] = p.mean;
  j["stddev"] = p.stddev;
  j["zero_variance"] = p.zero_variance;
  return j;
}

inline StandardizerParams standardizer_from_json(const nlohmann::json& j) {
  StandardizerParams p;
  p.mean = j.at("mean").get<std::vector<double>>();
  p.stddev = j.at("stddev").get<std::vector<double>>();
  p.zero_variance = j.at("zero_variance").get<std::vector<bool>>();
  if (p.stddev.size() != p.mean.size() || p.zero_variance.size() != p.mean.size())
    throw DataError("standardizer: inconsistent parameter lengths");
  return p;
}

}  // namespace veritag::featureset
