#include "wreath/word_length.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

namespace {

std::int64_t a_part_of(const WreathElement& u) {
  std::int64_t s = 0;
  for (const auto& [p, v] : u.support()) s += a_length(u.group().base(), v);
  return s;
}

std::int64_t path_cost(const Point& start, const std::vector<Point>& order, const Point& end) {
  std::int64_t c = 0;
  const Point* cur = &start;
  for (const auto& p : order) {
    c += l1_distance(*cur, p);
    cur = &p;
  }
  return c + l1_distance(*cur, end);
}

std::vector<Point> heuristic_order(const std::vector<Point>& pts, const Point& origin, const Point& t) {
  std::vector<Point> order;
  std::vector<bool> used(pts.size(), false);
  Point cur = origin;
  for (std::size_t step = 0; step < pts.size(); ++step) {
    std::size_t best = pts.size();
    std::int64_t bd = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (used[k]) continue;
      auto d = l1_distance(cur, pts[k]);
      if (d < bd) {
        bd = d;
        best = k;
      }
    }
    used[best] = true;
    order.push_back(pts[best]);
    cur = pts[best];
  }
  // 2-opt with both endpoints pinned.
  auto at = [&](std::ptrdiff_t i) -> const Point& {
    if (i < 0) return origin;
    if (i >= static_cast<std::ptrdiff_t>(order.size())) return t;
    return order[static_cast<std::size_t>(i)];
  };
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(order.size()); ++i) {
      for (std::ptrdiff_t j = i + 1; j < static_cast<std::ptrdiff_t>(order.size()); ++j) {
        auto before = l1_distance(at(i - 1), at(i)) + l1_distance(at(j), at(j + 1));
        auto after = l1_distance(at(i - 1), at(j)) + l1_distance(at(i), at(j + 1));
        if (after < before) {
          std::reverse(order.begin() + i, order.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
  return order;
}

}  // namespace

std::int64_t l1_distance(const Point& p, const Point& q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
  return s;
}

LengthBreakdown wr_len_closed(const WreathElement& u) {
  if (u.group().dim() != 1) throw std::invalid_argument("closed length formula needs d = 1");
  std::vector<Point> neg, nonneg;
  for (const auto& [p, v] : u.support()) (p[0] < 0 ? neg : nonneg).push_back(p);
  std::reverse(neg.begin(), neg.end());  // -1, -2, ...
  const std::int64_t iota = nonneg.empty() ? 0 : nonneg.back()[0];
  const std::int64_t eps = neg.empty() ? 0 : -neg.back()[0];
  const std::int64_t t = u.translation()[0];
  const std::int64_t left_first = 2 * eps + iota + std::abs(t - iota);
  const std::int64_t right_first = 2 * iota + eps + std::abs(t + eps);

  LengthBreakdown r;
  r.a_part = a_part_of(u);
  if (left_first <= right_first) {
    r.trace_part = left_first;
    r.visit_order = neg;
    r.visit_order.insert(r.visit_order.end(), nonneg.begin(), nonneg.end());
  } else {
    r.trace_part = right_first;
    r.visit_order = nonneg;
    r.visit_order.insert(r.visit_order.end(), neg.begin(), neg.end());
  }
  r.total = r.a_part + r.trace_part;
  return r;
}

LengthBreakdown wr_len_trace(const WreathElement& u, const TraceOptions& opts) {
  const Point origin = u.group().origin();
  const Point& t = u.translation();
  std::vector<Point> pts;
  pts.reserve(u.support().size());
  for (const auto& [p, v] : u.support()) pts.push_back(p);  // already lexicographic

  LengthBreakdown r;
  r.a_part = a_part_of(u);
  const std::size_t n = pts.size();
  if (n == 0) {
    r.trace_part = l1_distance(origin, t);
    r.total = r.a_part + r.trace_part;
    return r;
  }
  if (n > opts.support_cap) {
    if (!opts.allow_heuristic) {
      throw CapExceeded("support of size " + std::to_string(n) + " exceeds the trace cap " +
                        std::to_string(opts.support_cap));
    }
    r.visit_order = heuristic_order(pts, origin, t);
    r.trace_part = path_cost(origin, r.visit_order, t);
    r.total = r.a_part + r.trace_part;
    r.certified = false;
    return r;
  }
  if (n > 24) throw CapExceeded("trace DP is limited to 24 points");

  std::vector<std::int64_t> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = l1_distance(pts[i], pts[j]);
  }
  // rest[mask * n + j]: cheapest way to finish at t, standing on point j with
  // `mask` (which contains j) already visited.
  const std::size_t full = (std::size_t{1} << n) - 1;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> rest((full + 1) * n, kInf);
  for (std::size_t mask = full; mask >= 1; --mask) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      std::int64_t best;
      if (mask == full) {
        best = l1_distance(pts[j], t);
      } else {
        best = kInf;
        for (std::size_t k = 0; k < n; ++k) {
          if (mask >> k & 1) continue;
          best = std::min(best, dist[j * n + k] + rest[(mask | std::size_t{1} << k) * n + k]);
        }
      }
      rest[mask * n + j] = best;
    }
  }
  std::int64_t opt = kInf;
  for (std::size_t j = 0; j < n; ++j) opt = std::min(opt, l1_distance(origin, pts[j]) + rest[(std::size_t{1} << j) * n + j]);

  // Forward walk, always taking the smallest index that stays optimal.
  std::size_t mask = 0, cur = n;
  std::int64_t spent = 0;
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) continue;
      std::int64_t d = cur == n ? l1_distance(origin, pts[k]) : dist[cur * n + k];
      if (spent + d + rest[(mask | std::size_t{1} << k) * n + k] == opt) {
        spent += d;
        mask |= std::size_t{1} << k;
        cur = k;
        r.visit_order.push_back(pts[k]);
        break;
      }
    }
  }
  r.trace_part = opt;
  r.total = r.a_part + r.trace_part;
  return r;
}

LengthBreakdown wr_length(const WreathElement& u, const TraceOptions& opts) {
  return u.group().dim() == 1 ? wr_len_closed(u) : wr_len_trace(u, opts);
}

Word word_along(const WreathElement& u, const std::vector<Point>& order) {
  const auto& A = u.group().base();
  Word w;
  Point cur = u.group().origin();
  auto walk_to = [&](const Point& p) {
    for (std::size_t axis = 0; axis < p.size(); ++axis) {
      while (cur[axis] != p[axis]) {
        int s = p[axis] > cur[axis] ? 1 : -1;
        w.push_back({Generator::Kind::Active, axis, s});
        cur[axis] += s;
      }
    }
  };
  for (const auto& p : order) {
    walk_to(p);
    const AElement& v = u.support().at(p);
    for (std::size_t i = 0; i < A.rank(); ++i) {
      std::int64_t c = v[i];
      const std::int64_t n = A.order(i);
      std::int64_t count = 0;
      int sign = 1;
      if (n == 0) {
        count = c < 0 ? -c : c;
        sign = c < 0 ? -1 : 1;
      } else if (c <= n - c) {
        count = c;
      } else {
        count = n - c;
        sign = n == 2 ? 1 : -1;
      }
      for (std::int64_t k = 0; k < count; ++k) w.push_back({Generator::Kind::Base, i, sign});
    }
  }
  walk_to(u.translation());
  return w;
}

Word wr_geodesic_word(const WreathElement& u, const TraceOptions& opts) {
  return word_along(u, wr_length(u, opts).visit_order);
}

}  // namespace wreath
