#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "wreath/cayley_ball.hpp"
#include "wreath/error.hpp"
#include "wreath/word_length.hpp"

using namespace wreath;

namespace {

std::int64_t len(const WreathGroupPtr& G, const char* text) {
  return wr_length(parse_wreath_element(G, text)).total;
}

}  // namespace

TEST_CASE("lamplighter lengths") {
  auto G = parse_wreath_group("Z2 wr Z");
  CHECK(len(G, "a; 1") == 2);
  CHECK(len(G, "x*a; 0") == 3);
  CHECK(len(G, "(1 + x^-1)*a; 0") == 4);
  CHECK(len(G, "0; -3") == 3);
  CHECK(len(G, "0; 0") == 0);
  // lamps on both sides of the origin, ending to the right
  CHECK(len(G, "(x^-2 + x^3)*a; 1") == 2 + 2 * 2 + 3 + 2);
}

TEST_CASE("geodesic word for a lamp at 1") {
  auto G = parse_wreath_group("Z2 wr Z");
  WreathElement u = parse_wreath_element(G, "x*a; 0");
  Word w = wr_geodesic_word(u);
  CHECK(format_word(*G, w) == "b a b^-1");
  CHECK(evaluate_word(G, w) == u);
}

TEST_CASE("Z base counts lamp values") {
  auto G = parse_wreath_group("Z wr Z");
  CHECK(len(G, "3*a; 0") == 3);
  CHECK(len(G, "(-2 + 2*x)*a; 1") == 2 + 2 + 1);
}

TEST_CASE("closed formula and trace agree in dimension one") {
  auto G = parse_wreath_group("Z wr Z");
  for (const char* s : {"a; 1", "(x^-3 + 2*x^2)*a; -1", "(1 - x^5)*a; 7", "x^-4*a; -6"}) {
    WreathElement u = parse_wreath_element(G, s);
    CHECK(wr_len_closed(u).total == wr_len_trace(u).total);
  }
}

TEST_CASE("planar lamplighter") {
  auto G = parse_wreath_group("Z2 wr Z^2");
  CHECK(len(G, "{ (0,0)->1 | (0,0) }") == 1);
  CHECK(len(G, "{ (1,1)->1 | (0,0) }") == 5);
  // the l = 2 square with a corner lamp pair
  CHECK(len(G, "{ (0,0)->1 ; (0,1)->1 ; (2,0)->1 ; (2,1)->1 | (0,0) }") == 4 + 6);
  CHECK_THROWS_AS(wr_len_closed(parse_wreath_element(G, "{ (1,1)->1 | (0,0) }")), std::invalid_argument);
}

TEST_CASE("visit order is lexicographically least among optimal orders") {
  auto G = parse_wreath_group("Z2 wr Z^2");
  LengthBreakdown b = wr_len_trace(parse_wreath_element(G, "{ (1,0)->1 ; (0,1)->1 | (0,0) }"));
  CHECK(b.trace_part == 4);
  REQUIRE(b.visit_order.size() == 2);
  CHECK(b.visit_order[0] == Point{0, 1});
}

TEST_CASE("support cap") {
  auto G = parse_wreath_group("Z2 wr Z^2");
  WreathElement::Support s;
  for (std::int64_t i = 0; i < 5; ++i) s.emplace(Point{i, i % 2}, G->base().element({1}));
  WreathElement u(G, s, G->origin());
  TraceOptions tight;
  tight.support_cap = 4;
  CHECK_THROWS_AS(wr_len_trace(u, tight), CapExceeded);
  tight.allow_heuristic = true;
  LengthBreakdown h = wr_len_trace(u, tight);
  CHECK_FALSE(h.certified);
  CHECK(h.total >= wr_len_trace(u).total);
  CHECK(wr_len_trace(u).certified);
}

TEST_CASE("ball sizes") {
  auto Z2 = parse_wreath_group("Z2 wr Z");
  Ball b1 = bfs_ball(Z2, 1);
  CHECK(b1.distance.size() == 4);
  auto Z = parse_wreath_group("Z wr Z");
  CHECK(bfs_ball(Z, 1).distance.size() == 5);
  auto P = parse_wreath_group("Z2 wr Z^2");
  CHECK(bfs_ball(P, 1).distance.size() == 6);
  CHECK(layers(bfs_ball(Z2, 2)).size() == 3);
}

TEST_CASE("ball cap keeps finished layers") {
  auto G = parse_wreath_group("Z wr Z^2");
  try {
    bfs_ball(G, 10, 200);
    FAIL("expected the cap to trip");
  } catch (const BallCapExceeded& e) {
    CHECK(e.partial().complete_radius >= 1);
    CHECK(e.partial().complete_radius < 10);
  }
}

TEST_CASE("BFS distances match the formula") {
  auto G = parse_wreath_group("Z wr Z");
  Ball b = bfs_ball(G, 5);
  for (const auto& [e, d] : b.distance) CHECK(wr_length(e).total == d);
}
