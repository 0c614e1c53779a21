#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "oracles.hpp"

TEST_CASE("convolution and l1") {
  CHECK(oracle::convolve({1, -1}, {1, 1}) == oracle::IntVec{1, 0, -1});
  CHECK(oracle::l1({3, -4, 0}) == 7);
}

TEST_CASE("enumeration on hand-checked cases") {
  // h = 1: S(f) <= budget
  CHECK(oracle::max_norm_enumerate({1}, 3, 5, 5).value == 5);
  // h = 2: each |z_i| costs 2
  CHECK(oracle::max_norm_enumerate({2}, 3, 4, 4).value == 2);
  // h = 1 - x, cap 1, budget 2: f = 1 + x gives S(hf) = 2
  oracle::MaxNorm m = oracle::max_norm_enumerate({1, -1}, 1, 2, 3);
  CHECK(m.value == 2);
  CHECK(m.argmax == oracle::IntVec{1, 1});
}

TEST_CASE("delta enumeration of h = 1") {
  for (std::int64_t l = 1; l <= 3; ++l) CHECK(oracle::delta_enumerate({1}, l) == l);
}

TEST_CASE("numeric roots") {
  auto r = oracle::roots_numeric({-2, 0, 1});
  REQUIRE(r.size() == 2);
  for (auto c : r) CHECK(std::abs(c * c - 2.0) < 1e-8);
  CHECK(oracle::count_unit_roots_numeric({1, 0, 1}) == 2);
  CHECK(oracle::count_unit_roots_numeric({1, -3, 1}) == 0);
}
