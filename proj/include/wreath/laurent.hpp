#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreath/dense_poly.hpp"

namespace wreath {

/// Finitely supported map from integer exponents to nonzero coefficients:
/// an element of Z[x, 1/x] or Q[x, 1/x] depending on C.
template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Terms = std::map<std::int64_t, C>;

  Laurent() = default;
  explicit Laurent(const C& constant) { set(0, constant); }

  static Laurent monomial(const C& c, std::int64_t exponent) {
    Laurent r;
    r.set(exponent, c);
    return r;
  }
  /// x^s * (coeffs[0] + coeffs[1] x + ...).
  static Laurent from_coeffs(std::int64_t valuation, const std::vector<C>& coeffs) {
    Laurent r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.set(valuation + static_cast<std::int64_t>(i), coeffs[i]);
    return r;
  }
  /// 1 + x + ... + x^(n-1).
  static Laurent geometric(std::int64_t n) {
    Laurent r;
    for (std::int64_t i = 0; i < n; ++i) r.set(i, C(1));
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::optional<std::int64_t> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<std::int64_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }
  /// degree - valuation; the Euclidean size in the Laurent ring.
  std::int64_t span() const { return terms_.empty() ? 0 : *degree() - *valuation(); }

  C coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  /// Coefficients from valuation to degree, zeros included.
  std::vector<C> dense() const {
    if (terms_.empty()) return {};
    std::vector<C> out(static_cast<std::size_t>(span() + 1));
    const std::int64_t v = *valuation();
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - v)] = c;
    return out;
  }

  void set(std::int64_t exponent, const C& c) {
    if (c == 0) {
      terms_.erase(exponent);
    } else {
      terms_[exponent] = c;
    }
  }
  void add_term(std::int64_t exponent, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by x^k.
  Laurent shifted(std::int64_t k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// Sum of absolute values of coefficients.
  C norm1() const {
    C s = 0;
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  Laurent& operator*=(const C& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= k;
    }
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const C& k) { return a *= k; }
  friend Laurent operator*(const C& k, Laurent a) { return a *= k; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto da = a.dense();
    auto db = b.dense();
    auto prod = dense::mul(da, db);
    return from_coeffs(*a.valuation() + *b.valuation(), prod);
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using ZLaurent = Laurent<mpz_class>;
using QLaurent = Laurent<mpq_class>;

/// S(f), valuation and degree; valuation/degree are empty for f = 0.
template <class C>
struct LpStats {
  C norm;
  std::optional<std::int64_t> valuation;
  std::optional<std::int64_t> degree;
};

template <class C>
LpStats<C> lp_stats(const Laurent<C>& f) {
  return {f.norm1(), f.valuation(), f.degree()};
}

template <class C>
Laurent<C> lp_mul(const Laurent<C>& f, const Laurent<C>& g) {
  return f * g;
}

/// Returns f with p = h*f. Over Z the quotient must have integer
/// coefficients; over Q any exact quotient is accepted.
std::optional<ZLaurent> lp_divide_exact(const ZLaurent& p, const ZLaurent& h);
std::optional<QLaurent> lp_divide_exact(const QLaurent& p, const QLaurent& h);

/// Euclidean division in Q[x, 1/x] with the span as size function:
/// a = q*b + r and r = 0 or span(r) < span(b).
std::pair<QLaurent, QLaurent> lp_divmod(const QLaurent& a, const QLaurent& b);

QLaurent to_rational(const ZLaurent& f);
/// Integer image of f, or nullopt when some coefficient is not integral.
std::optional<ZLaurent> to_integer(const QLaurent& f);
/// Multiplies by the lcm of the denominators and divides by the content.
ZLaurent clear_denominators(const QLaurent& f);

/// Evaluates the (regular, valuation >= 0 not required) polynomial at x.
mpq_class lp_eval(const QLaurent& f, const mpq_class& x);

/// Text syntax: sums of terms c, c*x^k, x^k (k any integer), with products,
/// parentheses and nonnegative powers of parenthesized factors; or the list
/// form "[c_s, ..., c_{s+p}] @ s".
ZLaurent parse_zlaurent(std::string_view text);
QLaurent parse_qlaurent(std::string_view text);

std::string to_string(const ZLaurent& f);
std::string to_string(const QLaurent& f);

/// {"s": valuation, "coeffs": [...]}; coefficients are JSON integers when
/// they fit in 64 bits, decimal strings otherwise (rationals as "p/q").
nlohmann::json to_json(const ZLaurent& f);
nlohmann::json to_json(const QLaurent& f);
/// Accepts the object form or a text string.
ZLaurent zlaurent_from_json(const nlohmann::json& j);
QLaurent qlaurent_from_json(const nlohmann::json& j);

}  // namespace wreath
