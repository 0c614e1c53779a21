#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "wreath/abelian.hpp"
#include "wreath/error.hpp"

using namespace wreath;

TEST_CASE("a_length of the listed elements") {
  FgAbelianGroup z2 = FgAbelianGroup::free(2);
  CHECK(a_length(z2, z2.element({3, -2})) == 5);
  FgAbelianGroup z5 = FgAbelianGroup::cyclic(5);
  CHECK(a_length(z5, z5.element({4})) == 1);
  FgAbelianGroup mixed(1, {4});
  CHECK(a_length(mixed, mixed.element({2, 3})) == 3);
}

TEST_CASE("a_length is zero exactly on the identity") {
  FgAbelianGroup A(1, {6});
  CHECK(a_length(A, A.identity()) == 0);
  CHECK(a_length(A, A.element({0, 3})) == 3);
  CHECK(a_length(A, A.element({-1, 0})) == 1);
}

TEST_CASE("torsion coordinates are reduced") {
  FgAbelianGroup A = FgAbelianGroup::cyclic(4);
  CHECK(A.element({5}) == A.element({1}));
  CHECK(A.element({-1}) == A.element({3}));
  CHECK(A.add(A.element({3}), A.element({3})) == A.element({2}));
  CHECK(A.negate(A.element({1})) == A.element({3}));
}

TEST_CASE("dimension mismatch is rejected") {
  FgAbelianGroup A = FgAbelianGroup::free(2);
  CHECK_THROWS_AS(A.element({1}), std::invalid_argument);
  FgAbelianGroup B = FgAbelianGroup::free(3);
  CHECK_THROWS_AS(a_length(B, A.element({1, 1})), std::invalid_argument);
}

TEST_CASE("power stacks copies of the summands") {
  FgAbelianGroup A(1, {2});
  FgAbelianGroup P = A.power(3);
  CHECK(P.free_rank() == 3);
  CHECK(P.torsion_orders() == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("parsing group descriptors") {
  CHECK(parse_abelian_group("Z") == FgAbelianGroup::free(1));
  CHECK(parse_abelian_group("Z^3") == FgAbelianGroup::free(3));
  CHECK(parse_abelian_group("Z2") == FgAbelianGroup::cyclic(2));
  CHECK(parse_abelian_group("Z_4") == FgAbelianGroup::cyclic(4));
  CHECK(parse_abelian_group("Z^2 x Z3") == FgAbelianGroup(2, {3}));
  CHECK(parse_abelian_group("Z + Z_2") == FgAbelianGroup(1, {2}));
  CHECK_THROWS_AS(parse_abelian_group("Q"), ParseError);
  CHECK_THROWS_AS(parse_abelian_group("Z1"), ParseError);
}
