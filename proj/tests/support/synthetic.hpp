#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "veritag/util/random.hpp"

namespace vt_test {

namespace util = veritag::util;

struct Dataset {
  std::vector<std::vector<double>> X;
  std::vector<int> y;
};

inline double normal(util::Rng& rng) {
  double u = util::uniform_real(rng), v = util::uniform_real(rng);
  return std::sqrt(-2.0 * std::log(1.0 - u)) * std::cos(6.283185307179586 * v);
}

// 500 x 20: column 0 copies the label, column 1 is constant, the rest are
// standard normal noise.
inline Dataset selection_suite(std::uint64_t seed, std::size_t n = 500, std::size_t noise = 18) {
  util::Rng rng(seed);
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    int label = static_cast<int>(i % 2);
    std::vector<double> row{static_cast<double>(label), 3.0};
    for (std::size_t j = 0; j < noise; ++j) row.push_back(normal(rng));
    d.X.push_back(std::move(row));
    d.y.push_back(label);
  }
  return d;
}

// Two Gaussian-free clusters separated by a margin of at least 1 along a
// random unit direction.
inline Dataset separable_set(std::uint64_t seed, std::size_t n = 200, std::size_t dim = 5) {
  util::Rng rng(seed);
  std::vector<double> dir(dim);
  double norm = 0.0;
  for (auto& v : dir) {
    v = normal(rng);
    norm += v * v;
  }
  for (auto& v : dir) v /= std::sqrt(norm);
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    int label = static_cast<int>(i % 2);
    std::vector<double> x(dim);
    for (auto& v : x) v = 4.0 * util::uniform_real(rng) - 2.0;
    double proj = 0.0;
    for (std::size_t j = 0; j < dim; ++j) proj += x[j] * dir[j];
    const double want = (label ? 1.0 : -1.0) * (0.5 + 2.0 * util::uniform_real(rng));
    for (std::size_t j = 0; j < dim; ++j) x[j] += (want - proj) * dir[j];
    d.X.push_back(std::move(x));
    d.y.push_back(label);
  }
  return d;
}

// XOR of the signs of two uniform coordinates on [-1, 1].
inline Dataset xor_set(std::uint64_t seed, std::size_t n = 400) {
  util::Rng rng(seed);
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    double a = 2.0 * util::uniform_real(rng) - 1.0, b = 2.0 * util::uniform_real(rng) - 1.0;
    d.X.push_back({a, b});
    d.y.push_back((a > 0) != (b > 0) ? 1 : 0);
  }
  return d;
}

}  // namespace vt_test
