#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "wreath/laurent.hpp"

namespace wreath {

/// Rectangular matrix over Q[x, 1/x].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QLaurent& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QLaurent& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QLaurent> a_;
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

/// Bareiss fraction-free elimination with exact Laurent division.
QLaurent determinant(const LaurentMatrix& m);

/// Nonzero c x^j: the units of Q[x, 1/x].
bool is_unit(const QLaurent& f);

/// U M V = diag(d_1, ..., d_r, 0, ...) with U, V invertible, d_i | d_{i+1},
/// and every d_i of valuation 0 with leading coefficient 1.
struct SnfResult {
  LaurentMatrix U, V;
  std::vector<QLaurent> diagonal;  // nonzero entries only
  /// The padded rows x cols diagonal matrix.
  LaurentMatrix D(std::size_t rows, std::size_t cols) const;
};

/// Pivot on the entry of least span (ties in row-major order), clear its row
/// and column by Euclidean division, and fold in a row whenever the pivot
/// fails to divide the rest.
SnfResult snf_laurent(const LaurentMatrix& m);

/// Unit multiple with valuation 0 and leading coefficient 1.
QLaurent normalize_associate(const QLaurent& f);

nlohmann::json to_json(const LaurentMatrix& m);

}  // namespace wreath
