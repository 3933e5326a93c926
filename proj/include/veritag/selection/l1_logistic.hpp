#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "veritag/error.hpp"

namespace veritag::selection {

inline constexpr double default_l1_lambda = 0.03;

struct L1Options {
  double lambda = default_l1_lambda;
  double tolerance = 1e-6;
  int max_sweeps = 10000;
};

struct L1Fit {
  std::vector<double> coef;
  double bias = 0.0;
  int sweeps = 0;
  bool converged = false;
};

namespace detail {

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

}  // namespace detail

/// Minimizes (1/n) sum log-loss + lambda * |w|_1 (bias unpenalized) by
/// proximal coordinate descent in fixed cyclic order, using the logistic
/// curvature bound (1/4n) sum x^2 as the step for each coordinate.
///
/// Bit-identical columns are solved as one coordinate and the resulting
/// coefficient is shared equally among them, so duplicates score alike.
inline L1Fit l1_logistic_fit(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                             const L1Options& opt = {}) {
  if (X.empty() || X.size() != y.size()) throw DataError("l1: X and y must be nonempty and aligned");
  for (int c : y)
    if (c != 0 && c != 1) throw DataError("l1: labels must be binary 0/1");
  if (opt.lambda < 0) throw UsageError("l1: lambda must be nonnegative");
  const std::size_t n = X.size(), d = X.front().size();
  const double nd = static_cast<double>(n);

  std::vector<std::vector<double>> cols(d, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (X[i].size() != d) throw DataError("l1: ragged matrix");
    for (std::size_t j = 0; j < d; ++j) cols[j][i] = X[i][j];
  }
  std::map<std::vector<double>, std::size_t> first_of;
  std::vector<std::size_t> rep(d);
  std::vector<std::size_t> unique;
  for (std::size_t j = 0; j < d; ++j) {
    auto [it, inserted] = first_of.emplace(cols[j], unique.size());
    if (inserted) unique.push_back(j);
    rep[j] = it->second;
  }

  const std::size_t m = unique.size();
  std::vector<double> w(m, 0.0), curvature(m, 0.0);
  for (std::size_t u = 0; u < m; ++u)
    for (double x : cols[unique[u]]) curvature[u] += x * x;
  for (auto& c : curvature) c /= 4.0 * nd;

  std::vector<double> z(n, 0.0);
  double b = 0.0;
  L1Fit fit;
  for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
    double max_change = 0.0;
    {
      double g = 0.0;
      for (std::size_t i = 0; i < n; ++i) g += detail::sigmoid(z[i]) - y[i];
      const double delta = -(g / nd) / 0.25;
      b += delta;
      for (auto& v : z) v += delta;
      max_change = std::abs(delta);
    }
    for (std::size_t u = 0; u < m; ++u) {
      if (curvature[u] == 0.0) continue;
      const auto& x = cols[unique[u]];
      double g = 0.0;
      for (std::size_t i = 0; i < n; ++i) g += (detail::sigmoid(z[i]) - y[i]) * x[i];
      g /= nd;
      const double updated = detail::soft_threshold(w[u] - g / curvature[u], opt.lambda / curvature[u]);
      const double delta = updated - w[u];
      if (delta != 0.0) {
        for (std::size_t i = 0; i < n; ++i) z[i] += delta * x[i];
        w[u] = updated;
      }
      max_change = std::max(max_change, std::abs(delta));
    }
    fit.sweeps = sweep;
    if (max_change < opt.tolerance) {
      fit.converged = true;
      break;
    }
  }

  std::vector<double> group_size(m, 0.0);
  for (std::size_t j = 0; j < d; ++j) group_size[rep[j]] += 1.0;
  fit.coef.resize(d);
  for (std::size_t j = 0; j < d; ++j) fit.coef[j] = w[rep[j]] / group_size[rep[j]];
  fit.bias = b;
  return fit;
}

/// |coefficients| of the L1-regularized logistic fit.
inline std::vector<double> l1_score(const std::vector<std::vector<double>>& X, const std::vector<int>& y,
                                    double lambda = default_l1_lambda) {
  L1Options opt;
  opt.lambda = lambda;
  auto fit = l1_logistic_fit(X, y, opt);
  for (auto& c : fit.coef) c = std::abs(c);
  return fit.coef;
}

}  // namespace veritag::selection
