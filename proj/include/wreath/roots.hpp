#pragma once

// Exact real-root machinery over Q: Sturm sequences, root isolation, and
// counting roots on the complex unit circle.

#include <gmpxx.h>

#include <vector>

#include "wreath/dense_poly.hpp"
#include "wreath/laurent.hpp"

namespace wreath {

using dense::QPoly;
using dense::ZPoly;

/// Integer polynomial d_0 + ... + d_t x^t with d_0 > 0, obtained from a
/// nonzero Laurent polynomial by multiplying with the unit +-x^-s.
struct NormalizedPoly {
  ZPoly coeffs;
  std::int64_t stripped_shift = 0;  // s
  int sign = 1;
};
NormalizedPoly normalize_poly(const ZLaurent& h);
ZPoly to_int_poly(const ZLaurent& h);  // coeffs of normalize_poly

bool is_squarefree(const ZPoly& p);

std::vector<QPoly> sturm_sequence(const QPoly& p);
/// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<QPoly>& seq, const mpq_class& a, const mpq_class& b);

/// Half-open (lo, hi] holding exactly one root; lo == hi marks an exact root.
struct RootInterval {
  mpq_class lo, hi;
};
/// Isolates the distinct real roots of p inside the open interval (a, b).
std::vector<RootInterval> isolate_real_roots(const QPoly& p, const mpq_class& a, const mpq_class& b);
/// Bisects a sign-changing isolating interval down to width < 2^-bits.
RootInterval refine_root(const QPoly& p, RootInterval iv, int bits = 64);

/// Writes a palindromic polynomial of degree 2m as x^m q(x + 1/x).
QPoly palindromic_to_trace_poly(const QPoly& g);

struct UnitCircleData {
  int count = 0;  // distinct roots with |c| = 1
  int off_circle = 0;  // independent tally of the remaining roots
  bool root_at_one = false;
  bool root_at_minus_one = false;
  QPoly reciprocal_gcd;  // gcd(p, reversal p), monic
  QPoly trace_poly;  // q with (reciprocal part without x-+1) = x^m q(x + 1/x)
  std::vector<RootInterval> intervals;  // roots of q in (-2, 2)
};

/// Throws std::invalid_argument when p is zero or not squarefree.
UnitCircleData unit_circle_roots(const ZPoly& p);
int unit_circle_root_count(const ZPoly& p);

}  // namespace wreath
