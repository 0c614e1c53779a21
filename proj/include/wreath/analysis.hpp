#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wreath/cayley_ball.hpp"
#include "wreath/exponent.hpp"

namespace wreath {

struct SlopeFit {
  double slope = 0;
  std::string rational;  // best approximation p/q with q <= 1000
  /// log2(v(2l) / v(l)) for the last pair with doubled l; NaN when none.
  double last_doubling = 0;
  /// v(2l) / v(l) for that pair.
  double last_ratio = 0;
};

/// Least-squares slope of log(value) against log(l). Needs at least three
/// points, positive values, and two distinct l; throws std::invalid_argument.
SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points);

/// p/q closest to x with q <= max_den (continued fractions).
std::string rational_approx(double x, long max_den = 1000);

struct CoefficientBoundRow {
  std::int64_t n = 0;
  double max_ratio = 0;
  std::string argmax;  // which input attained it
};

struct CoefficientBoundReport {
  int kappa = 0;
  std::vector<CoefficientBoundRow> rows;  // n = 8, 16, 32, 64
  double baseline = 0;  // row n = 8
  double worst_later = 0;
  bool passed = false;
};

/// For random f (coefficients in [-5, 5]) and plateau/ramp inputs of degree
/// below n: max|z_i| / (S(h f) n^max(kappa-1, 0)). Passes when no later n
/// exceeds twice the n = 8 value.
CoefficientBoundReport coefficient_bound_check(const ZPoly& h, int trials, std::uint64_t seed);

/// Per-l lower bounds for the distortion of the subgroup generated by `gens`
/// in A wr Z: the largest H-distance (from a BFS of H-radius `radius`) among
/// elements of G-length <= l. Returns (l, value) for l = 1..max G-length seen.
std::vector<std::pair<std::int64_t, std::int64_t>> measure_subgroup_distortion(const WreathGroupPtr& group,
                                                                               const std::vector<WreathElement>& gens,
                                                                               std::int64_t radius,
                                                                               std::size_t max_elements = 3'000'000);

/// Exact distortion of <b, h a> in Z_2 wr Z for l = 1..radius, h a polynomial
/// over F_2 given by its 0/1 coefficients with h(0) = 1. Uses the full G-ball,
/// polynomial division over F_2 for membership, and the lamplighter length
/// of the quotient for the H-length.
std::vector<std::pair<std::int64_t, std::int64_t>> lamplighter_subgroup_distortion(const std::vector<int>& h,
                                                                                   std::int64_t radius);

}  // namespace wreath
