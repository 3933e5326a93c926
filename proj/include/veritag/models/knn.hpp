#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/models/common.hpp"

namespace veritag::models {

inline constexpr int default_knn_k = 5;

struct KnnModel {
  int k = default_knn_k;
  Matrix points;
  std::vector<int> labels;

  bool operator==(const KnnModel&) const = default;
};

inline KnnModel knn_train(const Matrix& X, const std::vector<int>& y, int k = default_knn_k) {
  check_binary_training_set(X, y, "knn");
  if (k < 1) throw UsageError("knn: k must be at least 1");
  if (static_cast<std::size_t>(k) > X.size())
    throw DataError("knn: k = " + std::to_string(k) + " exceeds the " + std::to_string(X.size()) + " training points");
  return {k, X, y};
}

/// Euclidean k nearest neighbours. Equidistant neighbours are ordered by
/// label and then coordinates, so the neighbour set does not depend on the
/// storage order. Vote ties go to the class with the smaller summed
/// distance, then to the lower class id.
inline Prediction knn_predict(const KnnModel& m, const std::vector<double>& x) {
  if (m.points.empty()) throw DataError("knn: empty model");
  check_dimension(m.points.front().size(), x.size(), "knn");
  std::vector<std::pair<double, std::size_t>> dist(m.points.size());
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double diff = m.points[i][j] - x[j];
      s += diff * diff;
    }
    dist[i] = {s, i};
  }
  const auto k = static_cast<std::size_t>(std::min<int>(m.k, static_cast<int>(m.points.size())));
  auto closer = [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (m.labels[a.second] != m.labels[b.second]) return m.labels[a.second] < m.labels[b.second];
    return m.points[a.second] < m.points[b.second];
  };
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end(), closer);
  double votes[2] = {0, 0}, summed[2] = {0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    const int c = m.labels[dist[i].second];
    votes[c] += 1;
    summed[c] += std::sqrt(dist[i].first);
  }
  int label;
  if (votes[0] != votes[1]) label = votes[1] > votes[0] ? 1 : 0;
  else label = summed[1] < summed[0] ? 1 : 0;
  return {label, votes[label] / static_cast<double>(k)};
}

inline nlohmann::ordered_json to_json(const KnnModel& m) {
  nlohmann::ordered_json j;
  j["k"] = m.k;
  j["points"] = m.points;
  j["labels"] = m.labels;
  return j;
}

inline KnnModel knn_from_json(const nlohmann::json& j) {
  KnnModel m;
  m.k = j.at("k").get<int>();
  m.points = j.at("points").get<Matrix>();
  m.labels = j.at("labels").get<std::vector<int>>();
  if (m.points.size() != m.labels.size() || m.k < 1) throw DataError("knn: inconsistent model file");
  return m;
}

}  // namespace veritag::models
