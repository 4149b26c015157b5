#include <catch2/catch.hpp>
#include <random>

#include "realchar/field.hpp"

using namespace realchar;

TEST_CASE("GF(8) uses x^3+x+1 and has generator of order 7") {
  auto F = Field::get(2, 3);
  CHECK(F->size_q == 8);
  CHECK(F->modulus == 11u);  // x^3 + x + 1 encoded base 2
  CHECK(F->elem_order(F->gen) == 7);
  for (u32 a = 1; a < 8; ++a) {
    CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->pow(a, 7) == 1);
  }
}

TEST_CASE("GF(27) generator order by exhaustive check") {
  auto F = Field::get(3, 3);
  CHECK(F->size_q == 27);
  // order of the stored generator is exactly 26: successive powers hit each
  // nonzero element once
  std::vector<bool> seen(27, false);
  u32 x = 1;
  for (int i = 0; i < 26; ++i) {
    CHECK_FALSE(seen[x]);
    seen[x] = true;
    x = F->mul(x, F->gen);
  }
  CHECK(x == 1);
  // Frobenius has order 3
  for (u32 a = 0; a < 27; ++a)
    CHECK(F->frobenius(F->frobenius(F->frobenius(a))) == a);
  bool moved = false;
  for (u32 a = 0; a < 27; ++a)
    if (F->frobenius(a) != a) moved = true;
  CHECK(moved);
}

TEST_CASE("GF(2): Frobenius is the identity") {
  auto F = Field::get(2, 1);
  CHECK(F->size_q == 2);
  CHECK(F->frobenius(0) == 0);
  CHECK(F->frobenius(1) == 1);
}

TEST_CASE("field axioms, exhaustive for small fields") {
  for (auto [p, k] : std::vector<std::pair<u64, u64>>{{2, 1}, {2, 2}, {3, 1}, {2, 3},
                                                      {3, 2}, {5, 1}, {7, 1}, {2, 5},
                                                      {5, 2}, {2, 6}}) {
    auto F = Field::get(p, k);
    u64 q = F->size_q;
    REQUIRE(q <= 64);
    for (u32 a = 0; a < q; ++a)
      for (u32 b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (u32 c = 0; c < q; ++c) {
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
  }
}

TEST_CASE("field axioms, random triples for larger fields") {
  std::mt19937_64 rng(12345);
  for (auto [p, k] : std::vector<std::pair<u64, u64>>{{3, 4}, {2, 7}, {5, 3}, {13, 2}}) {
    auto F = Field::get(p, k);
    std::uniform_int_distribution<u32> dist(0, u32(F->size_q - 1));
    for (int i = 0; i < 500; ++i) {
      u32 a = dist(rng), b = dist(rng), c = dist(rng);
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->sub(F->add(a, b), b) == a);
      if (a) CHECK(F->mul(a, F->inv(a)) == 1);
    }
  }
}

TEST_CASE("frobenius is the p-power map and fixes the prime field") {
  auto F = Field::get(3, 2);
  for (u32 a = 0; a < 9; ++a) CHECK(F->frobenius(a) == F->pow(a, 3));
  for (u32 a = 0; a < 3; ++a) CHECK(F->frobenius(a) == a);  // constants
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::get(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 21), CapError);
  CHECK_THROWS(Field::get(2, 3)->inv(0));
}
