#pragma once

#include <string>
#include <vector>

#include "veritag/error.hpp"

namespace veritag::models {

using Matrix = std::vector<std::vector<double>>;

struct Prediction {
  int label = 0;
  double score = 0.0;  // SVM: signed margin; KNN and RF: vote fraction of `label`
};

/// Checks alignment, rectangularity and that both classes 0 and 1 appear.
inline std::size_t check_binary_training_set(const Matrix& X, const std::vector<int>& y, const std::string& who) {
  if (X.empty() || X.size() != y.size()) throw DataError(who + ": X and y must be nonempty and aligned");
  const std::size_t d = X.front().size();
  bool has0 = false, has1 = false;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].size() != d) throw DataError(who + ": ragged matrix");
    if (y[i] == 0) has0 = true;
    else if (y[i] == 1) has1 = true;
    else throw DataError(who + ": labels must be 0 or 1");
  }
  if (!has0 || !has1) throw DataError(who + ": training data must contain both classes");
  return d;
}

inline void check_dimension(std::size_t expected, std::size_t got, const std::string& who) {
  if (expected != got)
    throw DataError(who + ": dimension mismatch (model has " + std::to_string(expected) + " features, input has " +
                    std::to_string(got) + ")");
}

}  // namespace veritag::models
