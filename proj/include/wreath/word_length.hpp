#pragma once

#include <cstdint>
#include <vector>

#include "wreath/wreath_element.hpp"

namespace wreath {

/// total = a_part + trace_part. a_part is the summed A-length of the support
/// values; trace_part is the length of the shortest lattice path from the
/// origin through every support point to the translation, and visit_order
/// lists the support points in the order that path reaches them.
struct LengthBreakdown {
  std::int64_t total = 0;
  std::int64_t a_part = 0;
  std::int64_t trace_part = 0;
  std::vector<Point> visit_order;
  /// False when the trace came from the heuristic fallback (an upper bound).
  bool certified = true;
};

struct TraceOptions {
  std::size_t support_cap = 16;
  /// Past the cap: nearest neighbour + 2-opt instead of throwing CapExceeded.
  bool allow_heuristic = false;
};

/// Closed lamplighter-style formula for d = 1, any support size.
/// Throws std::invalid_argument when d != 1.
LengthBreakdown wr_len_closed(const WreathElement& u);

/// Exact path-TSP (Held-Karp) for any d. Among optimal orders the
/// lexicographically least one (points compared lexicographically) is returned.
LengthBreakdown wr_len_trace(const WreathElement& u, const TraceOptions& opts = {});

/// wr_len_closed for d = 1, wr_len_trace otherwise.
LengthBreakdown wr_length(const WreathElement& u, const TraceOptions& opts = {});

/// A word of length wr_length(u).total that evaluates to u: walk the visit
/// order axis by axis, dropping the A-letters at each support point.
Word wr_geodesic_word(const WreathElement& u, const TraceOptions& opts = {});

/// Word along a given visit order (used by the geodesic emitter and tests).
Word word_along(const WreathElement& u, const std::vector<Point>& order);

std::int64_t l1_distance(const Point& p, const Point& q);

}  // namespace wreath
