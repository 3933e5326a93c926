#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "veritag/error.hpp"
#include "veritag/util/numeric.hpp"
#include "veritag/util/parallel.hpp"
#include "veritag/util/random.hpp"

namespace veritag::selection {

namespace detail {

inline double gini(const std::vector<double>& counts, double total) {
  if (total <= 0) return 0.0;
  double s = 0.0;
  for (double c : counts) s += (c / total) * (c / total);
  return 1.0 - s;
}

/// Grows one extremely randomized tree and accumulates the weighted impurity
/// decrease per feature into `importance`.
class ExtraTreeGrower {
 public:
  ExtraTreeGrower(const std::vector<std::vector<double>>& X, const std::vector<int>& y, int n_classes,
                  std::uint64_t seed)
      : X_(X), y_(y), n_classes_(n_classes), rng_(seed), importance_(X.front().size(), 0.0) {
    const std::size_t d = X.front().size();
    max_features_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(d))));
  }

  std::vector<double> grow() {
    std::vector<std::size_t> rows(X_.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    split(rows);
    return importance_;
  }

 private:
  std::vector<double> class_counts(const std::vector<std::size_t>& rows) const {
    std::vector<double> c(static_cast<std::size_t>(n_classes_), 0.0);
    for (auto r : rows) c[static_cast<std::size_t>(y_[r])] += 1;
    return c;
  }

  void split(const std::vector<std::size_t>& rows) {
    const double n = static_cast<double>(rows.size());
    auto counts = class_counts(rows);
    const double impurity = gini(counts, n);
    if (rows.size() < 2 || impurity == 0.0) return;

    // features that are not constant within this node
    const std::size_t d = importance_.size();
    std::vector<std::size_t> usable;
    std::vector<std::pair<double, double>> range(d);
    for (std::size_t j = 0; j < d; ++j) {
      double lo = X_[rows[0]][j], hi = lo;
      for (auto r : rows) {
        lo = std::min(lo, X_[r][j]);
        hi = std::max(hi, X_[r][j]);
      }
      range[j] = {lo, hi};
      if (hi > lo) usable.push_back(j);
    }
    if (usable.empty()) return;

    // draw up to max_features_ candidates without replacement
    const std::size_t k = std::min(max_features_, usable.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(usable[i], usable[i + util::uniform_index(rng_, usable.size() - i)]);

    double best_gain = -1.0, best_threshold = 0.0;
    std::size_t best_feature = d;
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t j = usable[c];
      const auto [lo, hi] = range[j];
      const double t = lo + util::uniform_real(rng_) * (hi - lo);
      std::vector<double> left(static_cast<std::size_t>(n_classes_), 0.0), right = left;
      double nl = 0, nr = 0;
      for (auto r : rows) {
        if (X_[r][j] <= t) {
          left[static_cast<std::size_t>(y_[r])] += 1;
          nl += 1;
        } else {
          right[static_cast<std::size_t>(y_[r])] += 1;
          nr += 1;
        }
      }
      if (nl == 0 || nr == 0) continue;
      const double gain = impurity - (nl / n) * gini(left, nl) - (nr / n) * gini(right, nr);
      if (gain > best_gain) {
        best_gain = gain;
        best_feature = j;
        best_threshold = t;
      }
    }
    if (best_feature == d) return;

    importance_[best_feature] += n / static_cast<double>(X_.size()) * std::max(0.0, best_gain);
    std::vector<std::size_t> l, r;
    for (auto row : rows) (X_[row][best_feature] <= best_threshold ? l : r).push_back(row);
    split(l);
    split(r);
  }

  const std::vector<std::vector<double>>& X_;
  const std::vector<int>& y_;
  int n_classes_;
  util::Rng rng_;
  std::size_t max_features_;
  std::vector<double> importance_;
};

inline void normalize_to_unit_sum(std::vector<double>& v) {
  const double s = util::pairwise_sum(v);
  if (s > 0)
    for (auto& x : v) x /= s;
}

}  // namespace detail

/// Impurity-decrease importance from an ensemble of extremely randomized
/// trees (no bootstrap, sqrt(d) candidates per node, uniform thresholds).
/// Each tree's importances are normalized, averaged, then normalized again.
/// All zeros when no tree can split.
inline std::vector<double> tree_importance(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                                           int n_trees, std::uint64_t seed, unsigned jobs = 1) {
  if (X.empty() || X.size() != y.size()) throw DataError("tree importance: X and y must be nonempty and aligned");
  if (n_trees < 1) throw UsageError("tree importance: n_trees must be at least 1");
  int n_classes = 0;
  bool seen0 = false, seen1 = false;
  for (int c : y) {
    if (c < 0) throw DataError("tree importance: negative class id");
    n_classes = std::max(n_classes, c + 1);
    seen0 = seen0 || c == y.front();
    seen1 = seen1 || c != y.front();
  }
  if (!(seen0 && seen1)) throw DataError("tree importance: at least two classes required");

  const std::size_t d = X.front().size();
  std::vector<std::vector<double>> per_tree(static_cast<std::size_t>(n_trees));
  util::parallel_for(per_tree.size(), jobs, [&](std::size_t t) {
    detail::ExtraTreeGrower g(X, y, n_classes, util::derive_seed(seed, t));
    per_tree[t] = g.grow();
    detail::normalize_to_unit_sum(per_tree[t]);
  });
  std::vector<double> out(d, 0.0), col(per_tree.size());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t t = 0; t < per_tree.size(); ++t) col[t] = per_tree[t][j];
    out[j] = util::pairwise_sum(col) / static_cast<double>(n_trees);
  }
  detail::normalize_to_unit_sum(out);
  return out;
}

}  // namespace veritag::selection
