#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/models/common.hpp"
#include "veritag/util/parallel.hpp"
#include "veritag/util/random.hpp"

namespace veritag::models {

inline constexpr int default_rf_trees = 100;

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // x[feature] <= threshold goes left
  int left = -1, right = -1;
  std::array<double, 2> counts{};  // class counts of the training rows reaching the node

  bool operator==(const TreeNode&) const = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  bool operator==(const DecisionTree&) const = default;
};

struct RandomForestModel {
  std::vector<DecisionTree> trees;
  int n_trees = default_rf_trees;
  std::string max_features = "sqrt";
  std::uint64_t seed = 0;
  std::size_t n_features = 0;

  bool operator==(const RandomForestModel&) const = default;
};

namespace detail {

inline double gini2(double a, double b) {
  const double n = a + b;
  if (n <= 0) return 0.0;
  const double pa = a / n, pb = b / n;
  return 1.0 - pa * pa - pb * pb;
}

class CartGrower {
 public:
  CartGrower(const Matrix& X, const std::vector<int>& y, std::uint64_t seed) : X_(X), y_(y), rng_(seed) {
    const std::size_t d = X.front().size();
    max_features_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(d))));
  }

  DecisionTree grow() {
    const std::size_t n = X_.size();
    std::vector<std::size_t> rows(n);
    for (auto& r : rows) r = util::uniform_index(rng_, n);  // bootstrap
    std::sort(rows.begin(), rows.end());
    tree_.nodes.clear();
    build(rows);
    return std::move(tree_);
  }

 private:
  int build(const std::vector<std::size_t>& rows) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::array<double, 2> counts{};
    for (auto r : rows) counts[static_cast<std::size_t>(y_[r])] += 1;
    tree_.nodes[static_cast<std::size_t>(id)].counts = counts;
    if (counts[0] == 0 || counts[1] == 0) return id;

    const std::size_t d = X_.front().size();
    std::vector<std::size_t> usable;
    for (std::size_t j = 0; j < d; ++j) {
      const double first = X_[rows.front()][j];
      for (auto r : rows)
        if (X_[r][j] != first) {
          usable.push_back(j);
          break;
        }
    }
    if (usable.empty()) return id;
    const std::size_t k = std::min(max_features_, usable.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(usable[i], usable[i + util::uniform_index(rng_, usable.size() - i)]);

    const double n = static_cast<double>(rows.size());
    const double parent = gini2(counts[0], counts[1]);
    double best_gain = 0.0, best_threshold = 0.0;
    int best_feature = -1;
    std::vector<std::pair<double, int>> col(rows.size());
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t j = usable[c];
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = {X_[rows[i]][j], y_[rows[i]]};
      std::sort(col.begin(), col.end());
      double left0 = 0, left1 = 0;
      for (std::size_t i = 0; i + 1 < col.size(); ++i) {
        (col[i].second == 0 ? left0 : left1) += 1;
        if (col[i].first == col[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1), nr = n - nl;
        const double child = (nl / n) * gini2(left0, left1) + (nr / n) * gini2(counts[0] - left0, counts[1] - left1);
        const double gain = parent - child;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(j);
          best_threshold = col[i].first + (col[i + 1].first - col[i].first) / 2.0;
          if (!(best_threshold < col[i + 1].first)) best_threshold = col[i].first;
        }
      }
    }
    // zero-gain splits still separate rows; take the first valid one so the
    // tree keeps growing toward purity
    if (best_feature < 0) {
      const std::size_t j = usable[0];
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = {X_[rows[i]][j], y_[rows[i]]};
      std::sort(col.begin(), col.end());
      for (std::size_t i = 0; i + 1 < col.size(); ++i)
        if (col[i].first != col[i + 1].first) {
          best_feature = static_cast<int>(j);
          best_threshold = col[i].first + (col[i + 1].first - col[i].first) / 2.0;
          if (!(best_threshold < col[i + 1].first)) best_threshold = col[i].first;
          break;
        }
    }

    std::vector<std::size_t> l, r;
    for (auto row : rows) (X_[row][static_cast<std::size_t>(best_feature)] <= best_threshold ? l : r).push_back(row);
    const int left = build(l);
    const int right = build(r);
    auto& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left;
    node.right = right;
    return id;
  }

  const Matrix& X_;
  const std::vector<int>& y_;
  util::Rng rng_;
  std::size_t max_features_;
  DecisionTree tree_;
};

}  // namespace detail

/// Majority class of the reached leaf; ties go to class 0.
inline int tree_vote(const DecisionTree& t, const std::vector<double>& x) {
  std::size_t i = 0;
  while (t.nodes[i].feature >= 0) {
    const auto& n = t.nodes[i];
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
  }
  return t.nodes[i].counts[1] > t.nodes[i].counts[0] ? 1 : 0;
}

/// Bootstrap CART trees (Gini, sqrt(d) candidate features per node, grown
/// to purity). Tree t uses seed derive_seed(seed, t).
inline RandomForestModel rf_train(const Matrix& X, const std::vector<int>& y, int n_trees = default_rf_trees,
                                  std::uint64_t seed = 0, unsigned jobs = 1) {
  const std::size_t d = check_binary_training_set(X, y, "rf");
  if (n_trees < 1) throw UsageError("rf: n_trees must be at least 1");
  RandomForestModel m;
  m.n_trees = n_trees;
  m.seed = seed;
  m.n_features = d;
  m.trees.resize(static_cast<std::size_t>(n_trees));
  util::parallel_for(m.trees.size(), jobs, [&](std::size_t t) {
    detail::CartGrower g(X, y, util::derive_seed(seed, t));
    m.trees[t] = g.grow();
  });
  return m;
}

/// Hard majority vote over trees; ties go to class 0.
inline Prediction rf_predict(const RandomForestModel& m, const std::vector<double>& x) {
  check_dimension(m.n_features, x.size(), "rf");
  if (m.trees.empty()) throw DataError("rf: empty model");
  double votes[2] = {0, 0};
  for (const auto& t : m.trees) votes[tree_vote(t, x)] += 1;
  const int label = votes[1] > votes[0] ? 1 : 0;
  return {label, votes[label] / static_cast<double>(m.trees.size())};
}

inline nlohmann::ordered_json to_json(const RandomForestModel& m) {
  nlohmann::ordered_json j;
  j["n_trees"] = m.n_trees;
  j["max_features"] = m.max_features;
  j["seed"] = m.seed;
  j["n_features"] = m.n_features;
  auto trees = nlohmann::ordered_json::array();
  for (const auto& t : m.trees) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : t.nodes)
      nodes.push_back({n.feature, n.threshold, n.left, n.right, n.counts[0], n.counts[1]});
    trees.push_back(std::move(nodes));
  }
  j["trees"] = std::move(trees);
  return j;
}

inline RandomForestModel rf_from_json(const nlohmann::json& j) {
  RandomForestModel m;
  m.n_trees = j.at("n_trees").get<int>();
  m.max_features = j.at("max_features").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.n_features = j.at("n_features").get<std::size_t>();
  for (const auto& jt : j.at("trees")) {
    DecisionTree t;
    for (const auto& jn : jt) {
      TreeNode n;
      n.feature = jn.at(0).get<int>();
      n.threshold = jn.at(1).get<double>();
      n.left = jn.at(2).get<int>();
      n.right = jn.at(3).get<int>();
      n.counts = {jn.at(4).get<double>(), jn.at(5).get<double>()};
      t.nodes.push_back(n);
    }
    // children always follow their parent, which also rules out cycles
    const int size = static_cast<int>(t.nodes.size());
    for (int i = 0; i < size; ++i) {
      const auto& n = t.nodes[static_cast<std::size_t>(i)];
      const bool leaf = n.feature < 0;
      if (n.counts[0] < 0 || n.counts[1] < 0 || (n.counts[0] + n.counts[1]) == 0 ||
          (!leaf && (n.left <= i || n.left >= size || n.right <= i || n.right >= size ||
                     static_cast<std::size_t>(n.feature) >= m.n_features)))
        throw DataError("rf: malformed tree in model file");
    }
    if (t.nodes.empty()) throw DataError("rf: empty tree in model file");
    m.trees.push_back(std::move(t));
  }
  return m;
}

}  // namespace veritag::models
