#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "veritag/error.hpp"

namespace veritag::selection {

/// Equal-frequency bin index for every value of `column`.
///
/// Edge k (k = 1..bins-1) sits at sorted position p = (n-1)k/bins, linearly
/// interpolated. Because every value being binned is itself a sample, the
/// test `v < edge` reduces to order comparisons against the neighbouring
/// order statistics, so the result is exactly invariant under any strictly
/// increasing rescaling. Coinciding edges leave empty bins, which is the
/// same as merging them.
inline std::vector<int> quantile_bins(const std::vector<double>& column, int bins) {
  if (column.empty()) throw DataError("binning: empty column");
  if (bins < 2) throw UsageError("binning: bins must be at least 2");
  std::vector<double> s = column;
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  struct Edge {
    double lo, hi;
    bool exact;
  };
  std::vector<Edge> edges;
  for (int k = 1; k < bins; ++k) {
    const std::size_t num = (n - 1) * static_cast<std::size_t>(k);
    const std::size_t lo = num / static_cast<std::size_t>(bins);
    const bool exact = num % static_cast<std::size_t>(bins) == 0;
    edges.push_back({s[lo], exact ? s[lo] : s[std::min(lo + 1, n - 1)], exact});
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = column[i];
    int b = 0;
    for (const auto& e : edges) {
      bool below = (e.exact || e.lo == e.hi) ? v < e.lo : v <= e.lo;
      if (!below) ++b;
    }
    out[i] = b;
  }
  return out;
}

inline double entropy_bits(const std::vector<double>& counts, double total) {
  double h = 0.0;
  for (double c : counts)
    if (c > 0) {
      const double p = c / total;
      h -= p * std::log2(p);
    }
  return h;
}

/// Shannon entropy (bits) of the quantile-binned column.
inline double shannon_entropy_score(const std::vector<double>& column, int bins) {
  auto b = quantile_bins(column, bins);
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (int x : b) counts[static_cast<std::size_t>(x)] += 1.0;
  const double h = entropy_bits(counts, static_cast<double>(column.size()));
  return h > 0.0 ? h : 0.0;
}

/// Plug-in mutual information (bits) between the binned column and labels.
inline double mutual_info_score(const std::vector<double>& column, const std::vector<int>& y, int bins) {
  if (column.empty() || y.empty()) throw DataError("mutual information: empty input");
  if (column.size() != y.size()) throw DataError("mutual information: length mismatch");
  auto b = quantile_bins(column, bins);
  std::map<int, double> py;
  std::vector<double> px(static_cast<std::size_t>(bins), 0.0);
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < y.size(); ++i) {
    px[static_cast<std::size_t>(b[i])] += 1;
    py[y[i]] += 1;
    joint[{b[i], y[i]}] += 1;
  }
  const double n = static_cast<double>(y.size());
  double mi = 0.0;
  for (const auto& [key, c] : joint) {
    const double pxy = c / n;
    mi += pxy * std::log2(pxy / ((px[static_cast<std::size_t>(key.first)] / n) * (py[key.second] / n)));
  }
  return mi > 0.0 ? mi : 0.0;
}

}  // namespace veritag::selection
