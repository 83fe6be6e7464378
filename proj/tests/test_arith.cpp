#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ba/arith.hpp"

using namespace ba;

TEST_CASE("pow_k") {
  CHECK(pow_k(2, 0) == 1);
  CHECK(pow_k(2, 10) == 1024);
  CHECK(pow_k(10, 5) == 100000);
  CHECK(pow_k(3, 4) == 81);
}

TEST_CASE("digit_count") {
  CHECK(digit_count(2, 0) == 0);
  CHECK(digit_count(2, 1) == 1);
  CHECK(digit_count(2, 13) == 4);
  CHECK(digit_count(10, 305) == 3);
  CHECK(digit_count(10, 999) == 3);
  CHECK(digit_count(10, 1000) == 4);
}

TEST_CASE("v_k") {
  CHECK(v_k(2, 0) == 0);
  CHECK(v_k(2, 12) == 4);
  CHECK(v_k(2, 13) == 1);
  CHECK(v_k(2, 8) == 8);
  CHECK(v_k(3, 18) == 9);
  CHECK(v_k(10, 305) == 1);
  CHECK(v_k(10, 3050) == 10);
}

TEST_CASE("is_power") {
  CHECK(is_power(2, 1));
  CHECK(is_power(2, 2));
  CHECK(is_power(2, 64));
  CHECK_FALSE(is_power(2, 0));
  CHECK_FALSE(is_power(2, 6));
  CHECK(is_power(3, 27));
  CHECK_FALSE(is_power(3, 12));
}

TEST_CASE("expansion of a single number") {
  CHECK(expansion(2, 13) == std::vector<int>{1, 0, 1, 1});
  CHECK(expansion(2, 0) == std::vector<int>{});
  CHECK(expansion(10, 305) == std::vector<int>{5, 0, 3});
  CHECK(expansion(10, 305, 4) == std::vector<int>{5, 0, 3, 0});
  CHECK(expansion(2, 13, 6) == std::vector<int>{1, 0, 1, 1, 0, 0});
}

TEST_CASE("from_expansion inverts expansion") {
  CHECK(from_expansion(2, {1, 0, 1, 1}) == 13);
  CHECK(from_expansion(2, {1, 0, 1, 1, 0, 0}) == 13);
  CHECK(from_expansion(10, {}) == 0);
  for (int x = 0; x < 200; ++x)
    CHECK(from_expansion(3, expansion(3, x)) == x);
}

TEST_CASE("tuple_expansion zips tracks") {
  auto w = tuple_expansion(2, {Nat(3), Nat(1), Nat(4)}, 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0].digits == std::vector<int>{1, 1, 0});
  CHECK(w[1].digits == std::vector<int>{1, 0, 0});
  CHECK(w[2].digits == std::vector<int>{0, 0, 1});
}

TEST_CASE("digit_at") {
  CHECK(digit_at(2, 13, 1) == 1);
  CHECK(digit_at(2, 13, 2) == 0);
  CHECK(digit_at(2, 13, 4) == 1);
  CHECK(digit_at(2, 13, 8) == 1);
  CHECK(digit_at(2, 13, 16) == 0);
  CHECK(digit_at(10, 305, 10) == 0);
  CHECK(digit_at(10, 305, 100) == 3);
}

TEST_CASE("restrict_to") {
  CHECK(restrict_to(3, 25, 9) == 7);
  CHECK(restrict_to(2, 13, 4) == 1);
  CHECK(restrict_to(2, 13, 1) == 0);
  CHECK(restrict_to(10, 305, 1000) == 305);
}

TEST_CASE("g_bound is the least power strictly above the max") {
  CHECK(g_bound(2, {Nat(5)}) == 8);
  CHECK(g_bound(3, {Nat(9), Nat(2)}) == 27);
  CHECK(g_bound(2, {Nat(0), Nat(0)}) == 1);
  CHECK(g_bound(2, {Nat(8)}) == 16);
  CHECK(g_bound(10, {Nat(99), Nat(100)}) == 1000);
}

TEST_CASE("check_base rejects k < 2") {
  CHECK_THROWS_AS(check_base(1), std::invalid_argument);
  CHECK_THROWS_AS(check_base(0), std::invalid_argument);
  CHECK_NOTHROW(check_base(2));
}
