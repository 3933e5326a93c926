#pragma once

#include <cmath>
#include <span>

namespace veritag::util {

/// Pairwise (cascade) summation. Fixed recursion shape, so the result depends
/// only on the sequence, never on threading.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

/// x / y, or 0 when y == 0.
inline double safe_div(double x, double y) { return y == 0.0 ? 0.0 : x / y; }

}  // namespace veritag::util
