#include "wreath/exponent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wreath {

namespace {

ZPoly normalized_factor(const QPoly& f) {
  ZPoly z = dense::primitive_part(f);
  if (!z.empty() && z.front() < 0) {
    for (auto& c : z) c = -c;
  }
  return z;
}

ZPoly strip_x_and_sign(const ZPoly& h) {
  std::size_t k = 0;
  while (k < h.size() && h[k] == 0) ++k;
  ZPoly r(h.begin() + static_cast<std::ptrdiff_t>(k), h.end());
  if (!r.empty() && r.front() < 0) {
    for (auto& c : r) c = -c;
  }
  return r;
}

nlohmann::json qpoly_json(const QPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p) a.push_back(c.get_str());
  return a;
}

nlohmann::json zpoly_json(const ZPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p) {
    if (c.fits_slong_p()) {
      a.push_back(c.get_si());
    } else {
      a.push_back(c.get_str());
    }
  }
  return a;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomp(const ZPoly& h_in) {
  ZPoly h = strip_x_and_sign(h_in);
  if (h.empty()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (h.size() == 1) return out;
  QPoly f = dense::to_q(h);
  QPoly fp = dense::derivative(f);
  QPoly a = dense::gcd(f, fp);
  QPoly b = dense::divmod(f, a).first;
  QPoly c = dense::divmod(fp, a).first;
  QPoly d = dense::sub(c, dense::derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    QPoly ai = dense::gcd(b, d);
    QPoly nb = dense::divmod(b, ai).first;
    QPoly nc = dense::divmod(d, ai).first;
    d = dense::sub(nc, dense::derivative(nb));
    b = std::move(nb);
    if (ai.size() > 1) out.push_back({normalized_factor(ai), i});
  }
  return out;
}

ExponentCertificate distortion_exponent(const ZPoly& h_in) {
  ZPoly h = strip_x_and_sign(h_in);
  if (h.empty()) throw std::invalid_argument("distortion exponent of the zero polynomial");
  ExponentCertificate cert;
  for (auto& [factor, mult] : squarefree_decomp(h)) {
    ExponentLevel level{mult, factor, unit_circle_roots(factor)};
    if (level.unit_circle.count > 0) cert.kappa = std::max(cert.kappa, mult);
    cert.levels.push_back(std::move(level));
  }
  cert.exponent = cert.kappa + 1;
  return cert;
}

ExponentCertificate distortion_exponent(const ZLaurent& h) {
  if (h.is_zero()) throw std::invalid_argument("distortion exponent of the zero polynomial");
  return distortion_exponent(h.dense());
}

nlohmann::json to_json(const ExponentCertificate& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : c.levels) {
    nlohmann::json ivs = nlohmann::json::array();
    for (const auto& iv : lv.unit_circle.intervals) ivs.push_back({iv.lo.get_str(), iv.hi.get_str()});
    levels.push_back({{"multiplicity", lv.multiplicity},
                      {"factor", zpoly_json(lv.factor)},
                      {"unit_circle_roots", lv.unit_circle.count},
                      {"off_circle_roots", lv.unit_circle.off_circle},
                      {"root_at_1", lv.unit_circle.root_at_one},
                      {"root_at_-1", lv.unit_circle.root_at_minus_one},
                      {"trace_poly", qpoly_json(lv.unit_circle.trace_poly)},
                      {"isolating_intervals", ivs}});
  }
  return {{"kappa", c.kappa}, {"exponent", c.exponent}, {"levels", levels}};
}

QMatrix companion_matrix(const ZPoly& h) {
  if (h.size() < 2) throw std::invalid_argument("a constant has no companion matrix");
  if (h.front() == 0) throw std::invalid_argument("companion matrix needs a nonzero constant term");
  const std::size_t t = h.size() - 1;
  QMatrix m(t, std::vector<mpq_class>(t));
  for (std::size_t i = 0; i + 1 < t; ++i) m[i][i + 1] = 1;
  for (std::size_t j = 1; j <= t; ++j) {
    m[t - 1][j - 1] = mpq_class(-h[t - j + 1], h[0]);
    m[t - 1][j - 1].canonicalize();
  }
  return m;
}

QPoly characteristic_polynomial(const QMatrix& a) {
  const std::size_t n = a.size();
  auto matmul = [&](const QMatrix& x, const QMatrix& y) {
    QMatrix r(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    }
    return r;
  };
  QPoly c(n + 1);
  c[n] = 1;
  QMatrix mk(n, std::vector<mpq_class>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = matmul(a, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    QMatrix am = matmul(a, mk);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  dense::trim(c);
  return c;
}

QPoly reversed_monic(const ZPoly& h) {
  if (h.empty() || h.front() == 0) throw std::invalid_argument("nonzero constant term required");
  QPoly r(h.rbegin(), h.rend());
  for (auto& c : r) c /= mpq_class(h.front());
  dense::trim(r);
  return r;
}

std::string to_string(const QPoly& p) { return to_string(QLaurent::from_coeffs(0, p)); }

}  // namespace wreath
