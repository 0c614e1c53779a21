#include "oracles.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {

IntVec convolve(const IntVec& a, const IntVec& b) {
  if (a.empty() || b.empty()) return {};
  IntVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::int64_t l1(const IntVec& a) {
  std::int64_t s = 0;
  for (auto v : a) s += std::llabs(v);
  return s;
}

namespace {

struct Enum {
  const IntVec& h;
  std::int64_t n, budget, bound;
  IntVec z;
  MaxNorm best;

  // cost of y_k for k < i is fixed once z_0..z_{i-1} are chosen
  void go(std::int64_t i, std::int64_t fixed_cost) {
    if (fixed_cost > budget) return;
    if (i == n) {
      std::int64_t total = l1(convolve(h, z));
      if (total > budget) return;
      std::int64_t v = l1(z);
      if (v > best.value) {
        best.value = v;
        best.argmax = z;
      }
      return;
    }
    for (std::int64_t c = (i == 0 ? 1 : -bound); c <= bound; ++c) {
      z[i] = c;
      std::int64_t y = 0;
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(h.size()) && k <= i; ++k) y += h[k] * z[i - k];
      go(i + 1, fixed_cost + std::llabs(y));
    }
    z[i] = 0;
  }
};

}  // namespace

MaxNorm max_norm_enumerate(const IntVec& h, std::int64_t degree_cap, std::int64_t budget, std::int64_t bound) {
  if (degree_cap < 0) return {};
  Enum e{h, degree_cap + 1, budget, bound, IntVec(static_cast<std::size_t>(degree_cap + 1), 0), {}};
  e.go(0, 0);
  while (!e.best.argmax.empty() && e.best.argmax.back() == 0) e.best.argmax.pop_back();
  return e.best;
}

std::int64_t delta_enumerate(const IntVec& h, std::int64_t l) {
  // f lives on positions -l..l (index p + l); h is regular with h[0] != 0.
  const std::int64_t n = 2 * l + 1;
  IntVec f(static_cast<std::size_t>(n), 0);
  std::int64_t best = 0;
  auto rec = [&](auto&& self, std::int64_t i, std::int64_t fixed_cost) -> void {
    if (fixed_cost > l) return;
    if (i == n) {
      IntVec y = convolve(h, f);  // y[k] is the coefficient of x^(k - l)
      if (l1(y) > l) return;
      std::int64_t lo = 0, hi = 0;
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0) continue;
        std::int64_t pos = static_cast<std::int64_t>(k) - l;
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
      }
      if (hi - lo <= l) best = std::max(best, l1(f));
      return;
    }
    for (std::int64_t c = -l; c <= l; ++c) {
      f[i] = c;
      std::int64_t y = 0;
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(h.size()) && k <= i; ++k) y += h[k] * f[i - k];
      self(self, i + 1, fixed_cost + std::llabs(y));
    }
    f[i] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

std::vector<std::complex<double>> roots_numeric(const IntVec& p_in) {
  IntVec p = p_in;
  while (!p.empty() && p.back() == 0) p.pop_back();
  const std::size_t n = p.size() - 1;
  std::vector<std::complex<double>> r(n);
  if (n == 0) return r;
  std::vector<std::complex<double>> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = static_cast<double>(p[i]) / static_cast<double>(p.back());
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
  };
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::pow(seed, static_cast<double>(i));
  for (int iter = 0; iter < 5000; ++iter) {
    double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) den *= r[i] - r[j];
      }
      std::complex<double> step = eval(r[i]) / den;
      r[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  return r;
}

int count_unit_roots_numeric(const IntVec& p, double tol) {
  int c = 0;
  for (auto z : roots_numeric(p)) {
    if (std::abs(std::abs(z) - 1.0) < tol) ++c;
  }
  return c;
}

}  // namespace oracle
