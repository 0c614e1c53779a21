#include "wreath/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath {

namespace {

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    int v = sgn(dense::eval(s, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

/// Divides out every factor x from the bottom.
ZPoly strip_x(const ZPoly& p, int& removed) {
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  removed = static_cast<int>(k);
  return ZPoly(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
}

}  // namespace

NormalizedPoly normalize_poly(const ZLaurent& h) {
  if (h.is_zero()) throw std::invalid_argument("zero polynomial");
  NormalizedPoly r;
  r.coeffs = h.dense();
  r.stripped_shift = *h.valuation();
  if (r.coeffs.front() < 0) {
    r.sign = -1;
    for (auto& c : r.coeffs) c = -c;
  }
  return r;
}

ZPoly to_int_poly(const ZLaurent& h) { return normalize_poly(h).coeffs; }

bool is_squarefree(const ZPoly& p) {
  if (p.empty()) return false;
  auto q = dense::to_q(p);
  return dense::gcd(q, dense::derivative(q)).size() <= 1;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  if (p.empty()) return seq;
  seq.push_back(p);
  QPoly d = dense::derivative(p);
  while (!d.empty()) {
    seq.push_back(d);
    auto r = dense::divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  return seq;
}

int sturm_count(const std::vector<QPoly>& seq, const mpq_class& a, const mpq_class& b) {
  return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p, const mpq_class& a, const mpq_class& b) {
  std::vector<RootInterval> out;
  if (p.size() <= 1) return out;
  // Work with the squarefree part so Sturm counts distinct roots.
  QPoly sf = dense::divmod(p, dense::gcd(p, dense::derivative(p))).first;
  auto seq = sturm_sequence(sf);
  std::vector<RootInterval> stack{{a, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = sturm_count(seq, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      if (dense::eval(sf, hi) == 0) {
        out.push_back({hi, hi});
      } else {
        out.push_back({lo, hi});
      }
      continue;
    }
    mpq_class mid = (lo + hi) / 2;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  // Open at b.
  if (!out.empty() && out.back().lo == b && out.back().hi == b) out.pop_back();
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return out;
}

RootInterval refine_root(const QPoly& p, RootInterval iv, int bits) {
  if (iv.lo == iv.hi) return iv;
  mpq_class width_cap(1);
  width_cap /= mpq_class(mpz_class(1) << bits);
  if (dense::eval(p, iv.hi) == 0) return {iv.hi, iv.hi};
  int s_lo = sgn(dense::eval(p, iv.lo));
  while (iv.hi - iv.lo >= width_cap) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int s = sgn(dense::eval(p, mid));
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

QPoly palindromic_to_trace_poly(const QPoly& g) {
  if (g.empty() || (g.size() - 1) % 2 != 0) throw std::invalid_argument("palindromic polynomial of even degree expected");
  const std::size_t m = (g.size() - 1) / 2;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] != g[g.size() - 1 - k]) throw std::invalid_argument("polynomial is not palindromic");
  }
  // x^k + x^-k = P_k(y): P_0 = 2, P_1 = y, P_k = y P_{k-1} - P_{k-2}.
  QPoly q{g[m]};
  QPoly prev{mpq_class(2)}, cur{mpq_class(0), mpq_class(1)};
  for (std::size_t k = 1; k <= m; ++k) {
    q = dense::add(q, dense::scale(cur, g[m + k]));
    QPoly next = dense::sub(dense::mul(QPoly{mpq_class(0), mpq_class(1)}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

UnitCircleData unit_circle_roots(const ZPoly& p_in) {
  if (p_in.empty()) throw std::invalid_argument("zero polynomial");
  if (!is_squarefree(p_in)) throw std::invalid_argument("unit-circle root count needs a squarefree polynomial");
  int x_roots = 0;
  ZPoly p = strip_x(p_in, x_roots);
  UnitCircleData d;
  QPoly pq = dense::to_q(p);
  d.root_at_one = dense::eval(pq, mpq_class(1)) == 0;
  d.root_at_minus_one = dense::eval(pq, mpq_class(-1)) == 0;
  d.reciprocal_gcd = dense::gcd(pq, dense::reversal(pq));
  QPoly g = d.reciprocal_gcd;
  if (d.root_at_one) g = dense::divmod(g, QPoly{mpq_class(-1), mpq_class(1)}).first;
  if (d.root_at_minus_one) g = dense::divmod(g, QPoly{mpq_class(1), mpq_class(1)}).first;
  d.trace_poly = palindromic_to_trace_poly(g);
  d.intervals = isolate_real_roots(d.trace_poly, mpq_class(-2), mpq_class(2));
  const int inside = static_cast<int>(d.intervals.size());
  d.count = int(d.root_at_one) + int(d.root_at_minus_one) + 2 * inside;
  const int deg_q = static_cast<int>(d.trace_poly.size()) - 1;
  d.off_circle = x_roots + static_cast<int>(p.size() - d.reciprocal_gcd.size()) + 2 * (deg_q - inside);
  return d;
}

int unit_circle_root_count(const ZPoly& p) { return unit_circle_roots(p).count; }

}  // namespace wreath
