#include "wreath/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "wreath/poly_distortion.hpp"
#include "wreath/word_length.hpp"

namespace wreath {

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("slope fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [l, v] : points) {
    if (!(l > 0) || !(v > 0)) throw std::invalid_argument("slope fit needs positive l and values");
    sx += std::log(l);
    sy += std::log(v);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [l, v] : points) {
    sxx += (std::log(l) - mx) * (std::log(l) - mx);
    sxy += (std::log(l) - mx) * (std::log(v) - my);
  }
  if (sxx == 0) throw std::invalid_argument("slope fit needs two distinct l");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.rational = rational_approx(fit.slope);
  fit.last_doubling = std::numeric_limits<double>::quiet_NaN();
  fit.last_ratio = std::numeric_limits<double>::quiet_NaN();
  double top = 0;
  for (const auto& [l2, v2] : points) {
    for (const auto& [l1, v1] : points) {
      if (l2 == 2 * l1 && l2 > top) {
        top = l2;
        fit.last_ratio = v2 / v1;
        fit.last_doubling = std::log2(v2 / v1);
      }
    }
  }
  return fit;
}

std::string rational_approx(double x, long max_den) {
  if (!std::isfinite(x)) return "nan";
  const bool neg = x < 0;
  double r = std::fabs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(r);
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1 / frac;
  }
  std::string num = (neg ? "-" : "") + std::to_string(p1);
  return q1 == 1 ? num : num + "/" + std::to_string(q1);
}

CoefficientBoundReport coefficient_bound_check(const ZPoly& h, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  CoefficientBoundReport rep;
  rep.kappa = distortion_exponent(h).kappa;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto ratio = [&](const ZPoly& f, std::int64_t n) {
    mpz_class mx = 0, s = 0;
    for (const auto& c : f) mx = std::max(mx, mpz_class(abs(c)));
    for (const auto& c : dense::mul(h, f)) s += abs(c);
    return mx.get_d() / (s.get_d() * std::pow(static_cast<double>(n), std::max(rep.kappa - 1, 0)));
  };
  for (std::int64_t n : {8, 16, 32, 64}) {
    CoefficientBoundRow row{n, 0, ""};
    auto consider = [&](const ZPoly& f, const std::string& label) {
      if (f.empty()) return;
      double r = ratio(f, n);
      if (r > row.max_ratio) {
        row.max_ratio = r;
        row.argmax = label;
      }
    };
    for (int c : {1, -1}) {
      const std::string root = c > 0 ? "+1" : "-1";
      consider(geometric_poly(c, n), "plateau" + root);
      ZPoly half = geometric_poly(c, n / 2);
      consider(dense::mul(half, half), "ramp" + root);
    }
    for (int k = 0; k < trials; ++k) {
      ZPoly f(static_cast<std::size_t>(n));
      for (auto& z : f) z = coef(rng);
      if (f.back() == 0) f.back() = 1;
      consider(f, "random");
    }
    rep.rows.push_back(row);
  }
  rep.baseline = rep.rows.front().max_ratio;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) rep.worst_later = std::max(rep.worst_later, rep.rows[i].max_ratio);
  rep.passed = rep.worst_later <= 2 * rep.baseline;
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> measure_subgroup_distortion(const WreathGroupPtr& group,
                                                                               const std::vector<WreathElement>& gens,
                                                                               std::int64_t radius,
                                                                               std::size_t max_elements) {
  Ball ball = bfs_ball(group, gens, radius, max_elements);
  std::map<std::int64_t, std::int64_t> best;  // G-length -> max H-length
  TraceOptions opts;
  opts.allow_heuristic = false;
  for (const auto& [e, dh] : ball.distance) {
    std::int64_t dg = wr_length(e, opts).total;
    auto& slot = best[dg];
    slot = std::max(slot, dh);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t running = 0;
  const std::int64_t top = best.empty() ? 0 : best.rbegin()->first;
  for (std::int64_t l = 1; l <= top; ++l) {
    if (auto it = best.find(l); it != best.end()) running = std::max(running, it->second);
    out.emplace_back(l, running);
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> lamplighter_subgroup_distortion(const std::vector<int>& h_bits,
                                                                                   std::int64_t radius) {
  std::vector<int> h = h_bits;
  while (!h.empty() && h.back() == 0) h.pop_back();
  if (h.empty() || h.front() != 1) throw std::invalid_argument("h over F_2 must have h(0) = 1");
  auto G = make_wreath_group(FgAbelianGroup::cyclic(2), 1);
  Ball ball = bfs_ball(G, radius);
  std::vector<std::int64_t> best(static_cast<std::size_t>(radius) + 1, 0);
  const std::size_t t = h.size() - 1;
  for (const auto& [e, dg] : ball.distance) {
    if (e.support().empty()) {
      std::int64_t dh = wr_len_closed(e).total;  // b^n
      best[static_cast<std::size_t>(dg)] = std::max(best[static_cast<std::size_t>(dg)], dh);
      continue;
    }
    const std::int64_t v = e.support().begin()->first[0];
    const std::int64_t top = e.support().rbegin()->first[0];
    std::vector<int> p(static_cast<std::size_t>(top - v + 1), 0);
    for (const auto& [pos, val] : e.support()) p[static_cast<std::size_t>(pos[0] - v)] = 1;
    if (p.size() < h.size()) continue;
    // long division over F_2, from the top
    std::vector<int> q(p.size() - t, 0);
    for (std::size_t k = p.size() - t; k-- > 0;) {
      if (p[k + t] == 0) continue;
      q[k] = 1;
      for (std::size_t j = 0; j <= t; ++j) p[k + j] ^= h[j];
    }
    if (std::any_of(p.begin(), p.end(), [](int c) { return c != 0; })) continue;
    WreathElement::Support s;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k]) s.emplace(Point{v + static_cast<std::int64_t>(k)}, G->base().element({1}));
    }
    std::int64_t dh = wr_len_closed(WreathElement(G, std::move(s), e.translation())).total;
    best[static_cast<std::size_t>(dg)] = std::max(best[static_cast<std::size_t>(dg)], dh);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::int64_t running = 0;
  for (std::int64_t l = 1; l <= radius; ++l) {
    running = std::max(running, best[static_cast<std::size_t>(l)]);
    out.emplace_back(l, running);
  }
  return out;
}

}  // namespace wreath
