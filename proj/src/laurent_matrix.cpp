#include "wreath/laurent_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wreath {

namespace {

void swap_rows(LaurentMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(LaurentMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

/// row_dst += q * row_src
void add_row(LaurentMatrix& m, std::size_t dst, std::size_t src, const QLaurent& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!m(src, j).is_zero()) m(dst, j) += q * m(src, j);
  }
}

/// col_dst += q * col_src
void add_col(LaurentMatrix& m, std::size_t dst, std::size_t src, const QLaurent& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, src).is_zero()) m(i, dst) += m(i, src) * q;
  }
}

}  // namespace

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QLaurent(mpq_class(1));
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& e : a_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

QLaurent determinant(const LaurentMatrix& m_in) {
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m_in.rows();
  if (n == 0) return QLaurent(mpq_class(1));
  LaurentMatrix m = m_in;
  QLaurent prev(mpq_class(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        QLaurent num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = lp_divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = QLaurent{};
    }
    prev = m(k, k);
  }
  QLaurent d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

bool is_unit(const QLaurent& f) { return f.term_count() == 1; }

QLaurent normalize_associate(const QLaurent& f) {
  if (f.is_zero()) return f;
  QLaurent g = f.shifted(-*f.valuation());
  const mpq_class lead = g.coeff(*g.degree());
  g *= mpq_class(1 / lead);
  return g;
}

LaurentMatrix SnfResult::D(std::size_t rows, std::size_t cols) const {
  LaurentMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

SnfResult snf_laurent(const LaurentMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("matrix must have nonzero dimensions");
  const std::size_t R = m.rows(), C = m.cols();
  LaurentMatrix a = m;
  SnfResult res{LaurentMatrix::identity(R), LaurentMatrix::identity(C), {}};
  for (std::size_t s = 0; s < std::min(R, C); ++s) {
    while (true) {
      // Pivot: least span, first in row-major order.
      std::size_t pi = R, pj = C;
      for (std::size_t i = s; i < R; ++i) {
        for (std::size_t j = s; j < C; ++j) {
          if (a(i, j).is_zero()) continue;
          if (pi == R || a(i, j).span() < a(pi, pj).span()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == R) break;
      swap_rows(a, s, pi);
      swap_rows(res.U, s, pi);
      swap_cols(a, s, pj);
      swap_cols(res.V, s, pj);

      bool leftover = false;
      for (std::size_t i = s + 1; i < R; ++i) {
        if (a(i, s).is_zero()) continue;
        auto [q, r] = lp_divmod(a(i, s), a(s, s));
        add_row(a, i, s, -q);
        add_row(res.U, i, s, -q);
        if (!r.is_zero()) leftover = true;
      }
      for (std::size_t j = s + 1; j < C; ++j) {
        if (a(s, j).is_zero()) continue;
        auto [q, r] = lp_divmod(a(s, j), a(s, s));
        add_col(a, j, s, -q);
        add_col(res.V, j, s, -q);
        if (!r.is_zero()) leftover = true;
      }
      if (leftover) continue;  // a smaller remainder becomes the next pivot

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = R;
      for (std::size_t i = s + 1; i < R && bad == R; ++i) {
        for (std::size_t j = s + 1; j < C; ++j) {
          if (!a(i, j).is_zero() && !lp_divmod(a(i, j), a(s, s)).second.is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad != R) {
        add_row(a, s, bad, QLaurent(mpq_class(1)));
        add_row(res.U, s, bad, QLaurent(mpq_class(1)));
        continue;
      }

      // Make the pivot monic with valuation 0 by a unit on the row.
      const QLaurent& p = a(s, s);
      const std::int64_t v = *p.valuation();
      const mpq_class lead = p.coeff(*p.degree());
      QLaurent unit_inv = QLaurent::monomial(mpq_class(1 / lead), -v);
      for (std::size_t j = 0; j < C; ++j) a(s, j) = a(s, j) * unit_inv;
      for (std::size_t j = 0; j < R; ++j) res.U(s, j) = res.U(s, j) * unit_inv;
      res.diagonal.push_back(a(s, s));
      break;
    }
    if (res.diagonal.size() <= s) break;  // remaining block is zero
  }
  return res;
}

nlohmann::json to_json(const LaurentMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wreath
