#pragma once

#include <vector>

#include "veritag/error.hpp"

namespace veritag::eval {

inline double accuracy(const std::vector<int>& predictions, const std::vector<int>& labels) {
  if (predictions.empty()) throw DataError("accuracy: empty input");
  if (predictions.size() != labels.size()) throw DataError("accuracy: length mismatch");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) hits += predictions[i] == labels[i];
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

}  // namespace veritag::eval
