#pragma once

// Dense univariate polynomial kernels over Z (mpz_class) and Q (mpq_class).
// A polynomial is a coefficient vector in ascending degree with no trailing
// zeros; the zero polynomial is the empty vector.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wreath::dense {

template <class C>
using Poly = std::vector<C>;

using ZPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;

template <class C>
void trim(Poly<C>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class C>
long degree(const Poly<C>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class C>
Poly<C> add(const Poly<C>& a, const Poly<C>& b) {
  Poly<C> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

template <class C>
Poly<C> sub(const Poly<C>& a, const Poly<C>& b) {
  Poly<C> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

template <class C>
Poly<C> mul(const Poly<C>& a, const Poly<C>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<C> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class C>
Poly<C> scale(const Poly<C>& a, const C& k) {
  if (k == 0) return {};
  Poly<C> r(a);
  for (auto& c : r) c *= k;
  return r;
}

template <class C>
Poly<C> derivative(const Poly<C>& a) {
  if (a.size() <= 1) return {};
  Poly<C> r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

/// x^deg * p(1/x): the coefficient list read backwards.
template <class C>
Poly<C> reversal(const Poly<C>& a) {
  Poly<C> r(a.rbegin(), a.rend());
  trim(r);
  return r;
}

template <class C>
C eval(const Poly<C>& a, const C& x) {
  C acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r = a;
  if (r.size() < b.size()) return {QPoly{}, r};
  QPoly q(r.size() - b.size() + 1);
  const mpq_class& lead = b.back();
  for (long k = static_cast<long>(r.size() - b.size()); k >= 0; --k) {
    const mpq_class coef = r[k + b.size() - 1] / lead;
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= coef * b[j];
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

inline QPoly monic(QPoly a) {
  if (a.empty()) return a;
  const mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

/// Monic gcd over Q (zero if both inputs are zero).
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

inline mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = ::gcd(g, c);
  return g;
}

/// Clears denominators and removes the content, keeping the sign of the
/// leading coefficient.
inline ZPoly primitive_part(const QPoly& a) {
  if (a.empty()) return {};
  mpz_class den = 1;
  for (const auto& c : a) den = lcm(den, mpz_class(c.get_den()));
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpq_class v = a[i] * den;
    r[i] = v.get_num();
  }
  mpz_class g = content(r);
  for (auto& c : r) c /= g;
  return r;
}

inline QPoly to_q(const ZPoly& a) {
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

/// Exact division over Z; returns false when b does not divide a with an
/// integral quotient.
inline bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) {
    quotient.clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const mpz_class& lead = b.back();
  for (long k = static_cast<long>(a.size() - b.size()); k >= 0; --k) {
    const mpz_class& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_class coef = top / lead;
    q[k] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= coef * b[j];
  }
  for (const auto& c : r) {
    if (c != 0) return false;
  }
  trim(q);
  quotient = std::move(q);
  return true;
}

}  // namespace wreath::dense
