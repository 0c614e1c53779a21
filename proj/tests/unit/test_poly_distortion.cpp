#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "wreath/poly_distortion.hpp"

using namespace wreath;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.push_back(v);
  return p;
}

oracle::IntVec iv(const ZPoly& p) {
  oracle::IntVec r;
  for (const auto& c : p) r.push_back(c.get_si());
  return r;
}

}  // namespace

TEST_CASE("trivial and constant h") {
  for (std::int64_t l : {1, 3, 7}) CHECK(poly_distortion(zp({1}), 1, l, SolveMode::Exact).lower == l);
  DistortionValue two = poly_distortion(zp({2}), 1, 4, SolveMode::Exact);
  CHECK(two.exact);
  CHECK(two.lower == 2);
}

TEST_CASE("1 - x at l = 4") {
  DistortionValue v = poly_distortion(zp({1, -1}), 1, 4, SolveMode::Exact);
  REQUIRE(v.exact);
  CHECK(v.lower == 10);
  CHECK(v.upper == 10);
  CHECK(v.witness.norm1() == 10);
  CHECK(v.witness_image_norm <= 4);
  CHECK((v.witness * ZLaurent::from_coeffs(0, zp({1, -1}))).norm1() == v.witness_image_norm);
}

TEST_CASE("exact solver agrees with enumeration") {
  for (ZPoly h : {zp({1, -1}), zp({1, -2, 1}), zp({2, -1}), zp({1, 0, 1}), zp({1, 1})}) {
    for (std::int64_t cap = 1; cap <= 3; ++cap) {
      for (std::int64_t budget = 1; budget <= 4; ++budget) {
        DistortionValue v = solve_max_norm(h, cap, budget, SolveMode::Exact);
        oracle::MaxNorm o = oracle::max_norm_enumerate(iv(h), cap, budget, 12);
        CHECK(v.exact);
        CHECK(v.lower == o.value);
      }
    }
  }
}

TEST_CASE("bounds bracket the exact value") {
  ZPoly h = zp({1, -2, 1});
  for (std::int64_t l = 2; l <= 6; ++l) {
    DistortionValue e = poly_distortion(h, 1, l, SolveMode::Exact);
    DistortionValue b = poly_distortion(h, 1, l, SolveMode::Bounds);
    CHECK_FALSE(b.exact);
    CHECK(b.lower <= e.lower);
    CHECK(b.upper >= e.lower);
    CHECK(certified_upper_bound(h, l, l) >= e.lower);
  }
}

TEST_CASE("node budget downgrades to bounds") {
  SolverOptions tiny;
  tiny.node_budget = 10;
  DistortionValue v = poly_distortion(zp({1, -2, 1}), 1, 8, SolveMode::Exact, tiny);
  CHECK_FALSE(v.exact);
  CHECK(v.upper >= v.lower);
  CHECK(v.lower > 0);
}

TEST_CASE("slack constant scales the caps") {
  DistortionValue v = poly_distortion(zp({1, -1}), mpq_class(1, 2), 8, SolveMode::Exact);
  CHECK(v.degree_cap == 4);
  CHECK(v.budget == 4);
  CHECK(v.lower == 10);
}

TEST_CASE("witness families") {
  Witness a = witness_family(zp({1, -1}), 5);
  CHECK(a.norm_f == 25);
  CHECK(a.norm_hf == 10);
  CHECK(a.root == "1");
  Witness b = witness_family(zp({1, 1}), 5);
  CHECK(b.norm_f == 25);
  CHECK(b.norm_hf == 10);
  CHECK(b.root == "-1");
  Witness c = witness_family(zp({1, 0, 1}), 6);
  CHECK(c.l_used == 7);
  CHECK(c.norm_f == 49);
  CHECK(c.norm_hf == 14);
  Witness n = witness_family(zp({2, -1}), 6);
  CHECK(n.root == "none");
  CHECK(n.norm_f == 6);
  CHECK_THROWS_AS(witness_family(zp({1, -1}), 0), std::invalid_argument);
}

TEST_CASE("geometric polynomials") {
  CHECK(geometric_poly(1, 3) == zp({1, 1, 1}));
  CHECK(geometric_poly(-1, 3) == zp({1, -1, 1}));
}

TEST_CASE("inverse series") {
  auto s = inverse_series(zp({1, -1}), 4);
  REQUIRE(s.size() == 4);
  for (const auto& c : s) CHECK(c == 1);
  auto t = inverse_series(zp({2, -1}), 3);
  CHECK(t[2] == mpq_class(1, 8));
}

TEST_CASE("family lower bound respects the caps") {
  auto [value, f] = family_lower_bound(zp({1, -1}), 7, 8);
  CHECK(value == f.norm1());
  CHECK((f * ZLaurent::from_coeffs(0, zp({1, -1}))).norm1() <= 8);
  CHECK(f.degree().value_or(0) <= 7);
}
