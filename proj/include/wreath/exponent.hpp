#pragma once

#include <gmpxx.h>

#include <vector>

#include <json.hpp>

#include "wreath/roots.hpp"

namespace wreath {

struct SquarefreeFactor {
  ZPoly factor;  // primitive, constant term > 0
  int multiplicity = 0;
};

/// Yun's algorithm over Q. h = const * prod factor^multiplicity, factors
/// squarefree and pairwise coprime, sorted by multiplicity.
std::vector<SquarefreeFactor> squarefree_decomp(const ZPoly& h);

struct ExponentLevel {
  int multiplicity = 0;
  ZPoly factor;
  UnitCircleData unit_circle;
};

struct ExponentCertificate {
  int kappa = 0;
  int exponent = 1;
  std::vector<ExponentLevel> levels;
};

/// Growth exponent of the polynomial distortion of h: one plus the largest
/// multiplicity of a root on the unit circle (1 when there is none).
/// Accepts any nonzero polynomial; x-powers and sign are normalized away.
ExponentCertificate distortion_exponent(const ZPoly& h);
ExponentCertificate distortion_exponent(const ZLaurent& h);

nlohmann::json to_json(const ExponentCertificate& c);

using QMatrix = std::vector<std::vector<mpq_class>>;

/// t x t matrix with ones on the superdiagonal and last row
/// a_j = -d_{t-j+1} / d_0. Throws std::invalid_argument for constants or d_0 = 0.
QMatrix companion_matrix(const ZPoly& h);

/// det(x I - M), ascending coefficients, by Faddeev-LeVerrier.
QPoly characteristic_polynomial(const QMatrix& m);

/// x^t h(1/x) / d_0.
QPoly reversed_monic(const ZPoly& h);

std::string to_string(const QPoly& p);

}  // namespace wreath
