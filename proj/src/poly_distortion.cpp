#include "wreath/poly_distortion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace wreath {

namespace {

using cld = std::complex<long double>;

ZPoly normalized(const ZPoly& h_in) {
  std::size_t k = 0;
  while (k < h_in.size() && h_in[k] == 0) ++k;
  ZPoly h(h_in.begin() + static_cast<std::ptrdiff_t>(k), h_in.end());
  if (h.empty()) throw std::invalid_argument("h must be nonzero");
  if (h.front() < 0) {
    for (auto& c : h) c = -c;
  }
  return h;
}

mpz_class norm(const ZPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += abs(c);
  return s;
}

ZPoly power(const ZPoly& p, int e) {
  ZPoly r{mpz_class(1)};
  for (int i = 0; i < e; ++i) r = dense::mul(r, p);
  return r;
}

/// Integer rounding of (v_n conj(v_n))^e for c = exp(i theta).
ZPoly rounded_conjugate_power(long double theta, std::int64_t n, int e) {
  const std::size_t len = static_cast<std::size_t>(n);
  std::vector<cld> v(len), vb(len);
  for (std::size_t i = 0; i < len; ++i) {
    long double a = theta * static_cast<long double>(n - 1 - static_cast<std::int64_t>(i));
    v[i] = cld(std::cos(a), std::sin(a));
    vb[i] = std::conj(v[i]);
  }
  std::vector<long double> base(2 * len - 1, 0.0L);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) base[i + j] += (v[i] * vb[j]).real();
  }
  std::vector<long double> acc{1.0L};
  for (int k = 0; k < e; ++k) {
    std::vector<long double> next(acc.size() + base.size() - 1, 0.0L);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  ZPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<long>(std::llround(acc[i]));
  dense::trim(out);
  return out;
}

/// A unit-circle root of h picked for witnesses: +1 or -1 (real = true), or
/// exp(+-i theta).
struct UnitRoot {
  bool real = true;
  int sign = 1;
  long double theta = 0;
  int multiplicity = 0;
};

std::vector<UnitRoot> unit_roots(const ExponentCertificate& cert) {
  std::vector<UnitRoot> out;
  for (const auto& lv : cert.levels) {
    const auto& u = lv.unit_circle;
    if (u.root_at_one) out.push_back({true, 1, 0, lv.multiplicity});
    if (u.root_at_minus_one) out.push_back({true, -1, 0, lv.multiplicity});
    for (const auto& iv : u.intervals) {
      auto r = refine_root(u.trace_poly, iv, 80);
      mpq_class mid = (r.lo + r.hi) / 2;
      long double y = static_cast<long double>(mid.get_d());
      out.push_back({false, 0, std::acos(std::clamp(y / 2.0L, -1.0L, 1.0L)), lv.multiplicity});
    }
  }
  // Highest multiplicity first; real roots before complex ones, +1 before -1.
  std::stable_sort(out.begin(), out.end(), [](const UnitRoot& a, const UnitRoot& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    if (a.real != b.real) return a.real;
    return a.sign > b.sign;
  });
  return out;
}

ZPoly positive_constant(ZPoly p) {
  if (!p.empty() && p.front() < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

/// Depth-first branch and bound over z_0..z_D.
class ExactSearch {
 public:
  ExactSearch(const ZPoly& h, std::int64_t degree_cap, std::int64_t budget, std::uint64_t node_budget)
      : D_(degree_cap), B_(budget), node_budget_(node_budget) {
    for (const auto& c : h) {
      if (!c.fits_slong_p()) throw std::overflow_error("coefficients of h too large for the exact search");
      d_.push_back(c.get_si());
    }
    t_ = static_cast<std::int64_t>(d_.size()) - 1;
    const std::size_t n = static_cast<std::size_t>(D_ + 1);
    auto g = inverse_series(h, n);
    ZPoly rev(h.rbegin(), h.rend());
    auto gt = inverse_series(rev, n);
    fwd_max_.resize(n);
    bwd_max_.resize(n);
    long double run_f = 0, run_b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      run_f = std::max(run_f, static_cast<long double>(std::abs(g[k].get_d())));
      run_b = std::max(run_b, static_cast<long double>(std::abs(gt[k].get_d())));
      fwd_max_[k] = run_f * (1 + 1e-12L);
      bwd_max_[k] = run_b * (1 + 1e-12L);
    }
    z_.assign(n, 0);
    hom_.assign(n, 0);
  }

  /// Returns false when the node budget ran out.
  bool run(std::int64_t seed_best) {
    best_ = seed_best;
    try {
      descend(0, 0, 0);
    } catch (const Budget&) {
      return false;
    }
    return true;
  }

  std::int64_t best() const { return best_; }
  const std::vector<std::int64_t>& best_z() const { return best_z_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Budget {};

  std::int64_t partial(std::int64_t i) const {
    std::int64_t p = 0;
    for (std::int64_t k = 1; k <= t_ && k <= i; ++k) p += d_[k] * z_[i - k];
    return p;
  }

  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

  /// Upper bound on sum_{j>i} |z_j| with remaining budget r.
  std::int64_t remaining_gain(std::int64_t i, std::int64_t r) {
    if (i >= D_) return 0;
    // Continuation with all later y equal to zero.
    for (std::int64_t j = std::max<std::int64_t>(0, i - t_ + 1); j <= i; ++j) hom_[j] = static_cast<long double>(z_[j]);
    long double total = 0;
    for (std::int64_t j = i + 1; j <= D_; ++j) {
      long double s = 0;
      for (std::int64_t k = 1; k <= t_ && k <= j; ++k) s += d_[k] * hom_[j - k];
      hom_[j] = -s / d_[0];
      long double fwd = std::fabs(hom_[j]) + r * fwd_max_[j - i - 1];
      long double bwd = r * bwd_max_[D_ - j];
      long double b = std::min(fwd, bwd);
      if (!std::isfinite(b)) b = bwd;
      total += std::floor(b + 1e-9L);
      if (total > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4)) break;
    }
    return static_cast<std::int64_t>(std::min<long double>(total, std::numeric_limits<std::int64_t>::max() / 4));
  }

  void descend(std::int64_t i, std::int64_t spent, std::int64_t gain) {
    const std::int64_t p = partial(i);
    const std::int64_t r = B_ - spent;
    std::int64_t lo = ceil_div(-r - p, d_[0]);
    std::int64_t hi = floor_div(r - p, d_[0]);
    if (i == 0) lo = std::max<std::int64_t>(lo, 1);
    for (std::int64_t zi = lo; zi <= hi; ++zi) {
      if (++nodes_ > node_budget_) throw Budget{};
      z_[i] = zi;
      const std::int64_t yi = d_[0] * zi + p;
      const std::int64_t s2 = spent + (yi < 0 ? -yi : yi);
      const std::int64_t g2 = gain + (zi < 0 ? -zi : zi);
      if (i == D_) {
        std::int64_t tail = 0;
        for (std::int64_t s = 1; s <= t_; ++s) {
          std::int64_t y = 0;
          for (std::int64_t k = s; k <= t_ && D_ + s - k >= 0; ++k) y += d_[k] * z_[D_ + s - k];
          tail += y < 0 ? -y : y;
        }
        if (s2 + tail <= B_ && g2 > best_) {
          best_ = g2;
          best_z_ = z_;
        }
        continue;
      }
      if (g2 + remaining_gain(i, B_ - s2) <= best_) continue;
      descend(i + 1, s2, g2);
    }
    z_[i] = 0;
  }

  std::int64_t D_, B_;
  std::uint64_t node_budget_;
  std::vector<std::int64_t> d_;
  std::int64_t t_ = 0;
  std::vector<long double> fwd_max_, bwd_max_, hom_;
  std::vector<std::int64_t> z_, best_z_;
  std::int64_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ZPoly geometric_poly(int c, std::int64_t l) {
  ZPoly v(static_cast<std::size_t>(l));
  for (std::int64_t i = 0; i < l; ++i) v[static_cast<std::size_t>(i)] = ((l - 1 - i) % 2 != 0 && c < 0) ? -1 : 1;
  return v;
}

std::vector<mpq_class> inverse_series(const ZPoly& p, std::size_t count) {
  if (p.empty() || p.front() == 0) throw std::invalid_argument("power series inverse needs p(0) != 0");
  std::vector<mpq_class> g(count);
  const mpq_class d0(p.front());
  for (std::size_t k = 0; k < count; ++k) {
    mpq_class s = k == 0 ? mpq_class(1) : mpq_class(0);
    for (std::size_t m = 1; m < p.size() && m <= k; ++m) s -= mpq_class(p[m]) * g[k - m];
    g[k] = s / d0;
  }
  return g;
}

Witness witness_family(const ZPoly& h_in, std::int64_t l) {
  if (l < 1) throw std::invalid_argument("witness family needs l >= 1");
  ZPoly h = normalized(h_in);
  auto cert = distortion_exponent(h);
  Witness w;
  w.kappa = cert.kappa;
  w.l_used = l;
  ZPoly f;
  auto roots = unit_roots(cert);
  if (roots.empty()) {
    w.root = "none";
    f = ZPoly{mpz_class(static_cast<long>(l))};
  } else if (const auto& c = roots.front(); c.real) {
    w.root = c.sign > 0 ? "1" : "-1";
    f = power(geometric_poly(c.sign, l), cert.kappa + 1);
  } else {
    w.root = "exp(i*theta)";
    w.theta = static_cast<double>(c.theta);
    auto vbar_at_c = [&](std::int64_t n) {
      return std::fabs(std::sin(static_cast<long double>(n) * c.theta) / std::sin(c.theta));
    };
    if (vbar_at_c(l) < 0.5L) w.l_used = l + 1;
    f = rounded_conjugate_power(c.theta, w.l_used, cert.kappa + 1);
    w.coefficient_bound = static_cast<double>(2.0L / std::abs(1.0L - std::polar(1.0L, 2 * c.theta)));
  }
  f = positive_constant(f);
  w.f = ZLaurent::from_coeffs(0, f);
  w.norm_f = norm(f);
  w.norm_hf = norm(dense::mul(h, f));
  w.realized_constant = w.norm_hf.get_d() / static_cast<double>(w.l_used);
  return w;
}

mpq_class certified_upper_bound(const ZPoly& h_in, std::int64_t degree_cap, std::int64_t budget) {
  if (degree_cap < 0 || budget <= 0) return 0;
  ZPoly h = normalized(h_in);
  const std::size_t n = static_cast<std::size_t>(degree_cap + 1);
  auto g = inverse_series(h, n);
  ZPoly rev(h.rbegin(), h.rend());
  auto gt = inverse_series(rev, n);
  std::vector<mpq_class> fmax(n), bmax(n);
  mpq_class rf = 0, rb = 0;
  for (std::size_t k = 0; k < n; ++k) {
    rf = std::max(rf, mpq_class(abs(g[k])));
    rb = std::max(rb, mpq_class(abs(gt[k])));
    fmax[k] = rf;
    bmax[k] = rb;
  }
  mpq_class u = 0;
  for (std::size_t j = 0; j < n; ++j) u += std::min(fmax[j], bmax[n - 1 - j]);
  // f is the truncated series times h f, so S(f) <= (sum |g_k|) S(h f);
  // this is the sharper bound when 1/h decays in one direction
  mpq_class l1f = 0, l1b = 0;
  for (std::size_t k = 0; k < n; ++k) {
    l1f += abs(g[k]);
    l1b += abs(gt[k]);
  }
  return std::min({u, l1f, l1b}) * budget;
}

std::pair<mpz_class, ZLaurent> family_lower_bound(const ZPoly& h_in, std::int64_t degree_cap, std::int64_t budget) {
  ZPoly h = normalized(h_in);
  mpz_class best = 0;
  ZPoly best_f;
  auto consider = [&](const ZPoly& p) {
    if (p.empty() || static_cast<std::int64_t>(p.size()) - 1 > degree_cap) return;
    mpz_class image = norm(dense::mul(h, p));
    mpz_class m = mpz_class(budget) / image;
    mpz_class value = m * norm(p);
    if (value > best) {
      best = value;
      best_f = positive_constant(dense::scale(p, m));
    }
  };
  if (degree_cap < 0 || budget <= 0) return {0, ZLaurent{}};
  consider(ZPoly{mpz_class(1)});
  auto cert = distortion_exponent(h);
  for (const auto& c : unit_roots(cert)) {
    for (int j = 1; j <= c.multiplicity + 1; ++j) {
      for (std::int64_t n = 1;; ++n) {
        const std::int64_t deg = c.real ? j * (n - 1) : 2 * j * (n - 1);
        if (deg > degree_cap) break;
        consider(c.real ? power(geometric_poly(c.sign, n), j) : rounded_conjugate_power(c.theta, n, j));
      }
    }
  }
  return {best, ZLaurent::from_coeffs(0, best_f)};
}

DistortionValue solve_max_norm(const ZPoly& h_in, std::int64_t degree_cap, std::int64_t budget, SolveMode mode,
                               const SolverOptions& opts) {
  ZPoly h = normalized(h_in);
  DistortionValue v;
  v.degree_cap = degree_cap;
  v.budget = budget;
  if (degree_cap < 0 || budget < h.front()) {
    // Only f = 0 fits: any f != 0 has S(h f) >= |d_0 z_0| after shifting.
    v.exact = true;
    return v;
  }
  auto [fam_value, fam_f] = family_lower_bound(h, degree_cap, budget);
  if (mode == SolveMode::Exact) {
    ExactSearch search(h, degree_cap, budget, opts.node_budget);
    const std::int64_t seed = fam_value.fits_slong_p() ? fam_value.get_si() - 1 : 0;
    bool complete = search.run(std::max<std::int64_t>(seed, 0));
    v.nodes = search.nodes();
    if (complete) {
      v.exact = true;
      if (search.best_z().empty()) {
        // The seed sits one below a feasible value, so this means the optimum is 0.
        v.lower = fam_value;
        v.witness = fam_f;
      } else {
        ZPoly z(search.best_z().size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<long>(search.best_z()[i]);
        dense::trim(z);
        v.lower = search.best();
        v.witness = ZLaurent::from_coeffs(0, z);
      }
      v.upper = v.lower;
      v.witness_image_norm = norm(dense::mul(h, v.witness.dense()));
      return v;
    }
    if (search.best() > fam_value && !search.best_z().empty()) {
      ZPoly z(search.best_z().size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<long>(search.best_z()[i]);
      dense::trim(z);
      fam_value = search.best();
      fam_f = ZLaurent::from_coeffs(0, z);
    }
  }
  v.exact = false;
  v.lower = fam_value;
  v.witness = fam_f;
  v.witness_image_norm = norm(dense::mul(h, fam_f.dense()));
  v.upper = certified_upper_bound(h, degree_cap, budget);
  return v;
}

DistortionValue poly_distortion(const ZPoly& h, const mpq_class& c, std::int64_t l, SolveMode mode,
                                const SolverOptions& opts) {
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  if (c <= 0) throw std::invalid_argument("c must be positive");
  mpz_class cap = mpz_class(c * l);  // truncation is floor for nonnegative values
  if (!cap.fits_slong_p()) throw std::overflow_error("c*l too large");
  return solve_max_norm(h, cap.get_si(), cap.get_si(), mode, opts);
}

nlohmann::json to_json(const DistortionValue& v) {
  return {{"degree_cap", v.degree_cap},
          {"budget", v.budget},
          {"lower", v.lower.get_str()},
          {"upper", v.upper.get_str()},
          {"exact", v.exact},
          {"witness", to_json(v.witness)},
          {"witness_image_norm", v.witness_image_norm.get_str()},
          {"nodes", v.nodes}};
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json j{{"f", to_json(w.f)},
                   {"l_used", w.l_used},
                   {"norm_f", w.norm_f.get_str()},
                   {"norm_hf", w.norm_hf.get_str()},
                   {"root", w.root},
                   {"kappa", w.kappa},
                   {"realized_constant", w.realized_constant}};
  if (w.root == "exp(i*theta)") {
    j["theta"] = w.theta;
    j["coefficient_bound"] = w.coefficient_bound;
  }
  return j;
}

}  // namespace wreath
