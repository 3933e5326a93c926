#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "veritag/error.hpp"
#include "veritag/models/common.hpp"

namespace veritag::models {

inline constexpr double default_svm_cost = 0.1;

struct SvmOptions {
  double cost = default_svm_cost;
  double gap_tolerance = 1e-4;
  int max_passes = 10000;
};

struct LinearSvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  double cost = default_svm_cost;

  bool operator==(const LinearSvmModel&) const = default;
};

struct SvmTrainingTrace {
  std::vector<double> dual;    // after each pass; nondecreasing
  std::vector<double> primal;  // after each pass
  int passes = 0;
  bool converged = false;
};

namespace detail {

inline double dot(const std::vector<double>& w, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += w[j] * x[j];
  return s;
}

}  // namespace detail

/// Hinge-loss linear SVM, (1/2)|w|^2 + C sum hinge, solved by dual
/// coordinate descent over examples in fixed index order. The bias is an
/// extra constant-1 feature and so is regularized with w. Class 1 maps to
/// +1, class 0 to -1.
inline LinearSvmModel svm_train(const Matrix& X, const std::vector<int>& y, const SvmOptions& opt = {},
                                SvmTrainingTrace* trace = nullptr) {
  const std::size_t d = check_binary_training_set(X, y, "svm");
  if (!(opt.cost > 0)) throw UsageError("svm: cost must be positive");
  const std::size_t n = X.size();
  std::vector<double> w(d + 1, 0.0), alpha(n, 0.0), qii(n), sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    qii[i] = detail::dot(X[i], X[i]) + 1.0;
    sign[i] = y[i] == 1 ? 1.0 : -1.0;
  }
  auto margin = [&](std::size_t i) { return detail::dot(w, X[i]) + w[d]; };
  const double C = opt.cost;
  SvmTrainingTrace local;
  SvmTrainingTrace& tr = trace ? *trace : local;
  tr = {};
  double previous_dual = 0.0;
  for (int pass = 1; pass <= opt.max_passes; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      const double g = sign[i] * margin(i) - 1.0;
      const double a = std::clamp(alpha[i] - g / qii[i], 0.0, C);
      const double delta = a - alpha[i];
      if (delta == 0.0) continue;
      alpha[i] = a;
      for (std::size_t j = 0; j < d; ++j) w[j] += delta * sign[i] * X[i][j];
      w[d] += delta * sign[i];
    }
    const double wnorm = detail::dot(w, w);
    double alpha_sum = 0.0, hinge = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      alpha_sum += alpha[i];
      hinge += std::max(0.0, 1.0 - sign[i] * margin(i));
    }
    const double dual = alpha_sum - 0.5 * wnorm;
    const double primal = 0.5 * wnorm + C * hinge;
    tr.dual.push_back(dual);
    tr.primal.push_back(primal);
    tr.passes = pass;
    check_invariant(dual >= previous_dual - 1e-9 * std::max(1.0, std::abs(previous_dual)),
                    "svm: dual objective decreased during a pass");
    previous_dual = dual;
    if ((primal - dual) / std::max(1.0, std::abs(primal)) <= opt.gap_tolerance) {
      tr.converged = true;
      break;
    }
  }
  LinearSvmModel m;
  m.bias = w[d];
  w.pop_back();
  m.weights = std::move(w);
  m.cost = C;
  return m;
}

inline double svm_decision(const LinearSvmModel& m, const std::vector<double>& x) {
  check_dimension(m.weights.size(), x.size(), "svm");
  return detail::dot(m.weights, x) + m.bias;
}

/// Margin exactly 0 goes to class 0.
inline Prediction svm_predict(const LinearSvmModel& m, const std::vector<double>& x) {
  const double s = svm_decision(m, x);
  return {s > 0.0 ? 1 : 0, s};
}

inline nlohmann::ordered_json to_json(const LinearSvmModel& m) {
  nlohmann::ordered_json j;
  j["weights"] = m.weights;
  j["bias"] = m.bias;
  j["cost"] = m.cost;
  return j;
}

inline LinearSvmModel svm_from_json(const nlohmann::json& j) {
  LinearSvmModel m;
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.cost = j.at("cost").get<double>();
  for (double v : m.weights)
    if (!std::isfinite(v)) throw DataError("svm: non-finite weight in model file");
  return m;
}

}  // namespace veritag::models
