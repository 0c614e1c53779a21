#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "wreath/exponent.hpp"
#include "wreath/laurent.hpp"

namespace wreath {

/// A lower-bound witness f for the polynomial distortion of h at scale l,
/// built from a unit-circle root c of top multiplicity kappa.
struct Witness {
  ZLaurent f;
  std::int64_t l_used = 0;  // l, or l+1 when the complex-root rule moved it
  mpz_class norm_f;  // S(f)
  mpz_class norm_hf;  // S(h f)
  std::string root;  // "1", "-1", "exp(i*theta)" or "none"
  double theta = 0;  // argument of c for a complex root
  int kappa = 0;
  /// S(h f) / l_used: the realized linear constant.
  double realized_constant = 0;
  /// 2 / |1 - c^2| for complex roots (coefficient bound of v_l * conj(v_l)).
  double coefficient_bound = 0;
};

/// v_l^(kappa+1) for c = +-1; the integer rounding of (v_l conj(v_l))^(kappa+1)
/// for complex c, with l bumped to l+1 when |sin(l theta) / sin(theta)| < 1/2;
/// the constant l when h has no root on the unit circle.
/// v_l(x) = sum_{i<l} c^(l-1-i) x^i. Requires l >= 1.
Witness witness_family(const ZPoly& h, std::int64_t l);

/// v_l for a real c = +-1.
ZPoly geometric_poly(int c, std::int64_t l);

struct DistortionValue {
  std::int64_t degree_cap = 0;  // deg f <= degree_cap
  std::int64_t budget = 0;  // S(h f) <= budget
  mpz_class lower;  // S(witness)
  mpq_class upper;  // == lower when exact
  bool exact = false;
  ZLaurent witness;  // regular, valuation 0 with positive constant term, or 0
  mpz_class witness_image_norm;  // S(h * witness)
  std::uint64_t nodes = 0;  // search nodes spent (exact attempts)
};

enum class SolveMode { Exact, Bounds };

struct SolverOptions {
  /// Deterministic work cap for the exact search; past it the result falls
  /// back to bounds with exact = false.
  std::uint64_t node_budget = 20'000'000;
};

/// max S(f) over integer polynomials f with deg f <= degree_cap and
/// S(h f) <= budget. In exact mode the lexicographically least maximizer with
/// positive constant term is returned.
DistortionValue solve_max_norm(const ZPoly& h, std::int64_t degree_cap, std::int64_t budget, SolveMode mode,
                               const SolverOptions& opts = {});

/// The polynomial distortion of h with slack c: degree cap and budget are
/// both floor(c * l).
DistortionValue poly_distortion(const ZPoly& h, const mpq_class& c, std::int64_t l, SolveMode mode,
                                const SolverOptions& opts = {});

/// Certified upper bound sum_j min(F_j, B_j) where F_j (B_j) bounds |z_j| by
/// solving h f = y forwards (backwards from the top coefficient), capped by
/// the l1 norm of the truncated inverse series times the budget.
mpq_class certified_upper_bound(const ZPoly& h, std::int64_t degree_cap, std::int64_t budget);

/// Best scaled member of the witness families fitting the caps.
std::pair<mpz_class, ZLaurent> family_lower_bound(const ZPoly& h, std::int64_t degree_cap, std::int64_t budget);

/// First `count` coefficients of the power series 1/p (p(0) != 0).
std::vector<mpq_class> inverse_series(const ZPoly& p, std::size_t count);

nlohmann::json to_json(const DistortionValue& v);
nlohmann::json to_json(const Witness& w);

}  // namespace wreath
