#include <catch2/catch.hpp>

#include "realchar/intmath.hpp"

using namespace realchar;

namespace {

// independent oracle: trial division
bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division up to 20000") {
  for (u64 n = 0; n < 20000; ++n) REQUIRE(is_prime_u64(n) == trial_division_prime(n));
}

TEST_CASE("primality on pinned values") {
  CHECK(is_prime_u64(547));
  CHECK(is_prime_u64(1093));
  CHECK_FALSE(is_prime_u64(121));
  CHECK(is_prime((u128(1) << 61) - 1));       // Mersenne prime
  CHECK_FALSE(is_prime((u128(1) << 67) - 1)); // 193707721 * 761838257287
  CHECK(is_prime(u128(761838257287ULL)));
  // around and above the proven Miller-Rabin bound the Lucas stage must engage
  u128 big = pow_u128(3, 61);  // 3^61 odd composite
  CHECK_FALSE(is_prime(big));
  CHECK(is_prime(pow_u128(2, 89) - 1));
  CHECK_FALSE(is_prime(pow_u128(2, 101) - 1));
}

TEST_CASE("factorization invariants") {
  for (u128 n : {u128(2) * 3 * 3 * 5 * 7919, u128(1) << 40, pow_u128(3, 25) - 1,
                 u128(0xfffffffffffffffbULL), pow_u128(10, 18) + 9}) {
    auto f = factorize(n);
    u128 prod = 1;
    for (const auto& pp : f) {
      CHECK(is_prime(pp.prime));
      for (unsigned i = 0; i < pp.exp; ++i) prod *= pp.prime;
    }
    CHECK(prod == n);
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i - 1].prime < f[i].prime);
  }
}

TEST_CASE("divisors: sorted, counted, gcd-closed") {
  for (u64 n : {u64(1), u64(12), u64(360), u64(29120), u64(87360)}) {
    auto d = divisors(n);
    REQUIRE(std::is_sorted(d.begin(), d.end()));
    u64 expected_count = 1;
    for (auto [p, e] : factorize_u64(n)) expected_count *= (e + 1);
    CHECK(d.size() == expected_count);
    for (size_t i = 0; i < d.size(); i += 3)
      for (size_t j = 0; j < d.size(); j += 5) {
        u64 g = std::gcd(d[i], d[j]);
        CHECK(std::binary_search(d.begin(), d.end(), g));
      }
  }
}

TEST_CASE("phi and moebius") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(5460) == 1152);
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
}

TEST_CASE("root of unity traces") {
  CHECK(root_of_unity_trace(5, 0) == 4);   // phi(5)
  CHECK(root_of_unity_trace(5, 1) == -1);
  CHECK(root_of_unity_trace(5, 2) == -1);
  CHECK(root_of_unity_trace(6, 1) == 1);
  CHECK(root_of_unity_trace(4, 2) == -2);  // zeta_4^2 = -1
  CHECK(root_of_unity_trace(12, 6) == -4);
  // column sum over all exponents of a fixed order is 0 for o > 1
  for (u64 o : {2, 3, 4, 5, 6, 7, 8, 9, 12, 30}) {
    i64 s = 0;
    for (u64 t = 0; t < o; ++t) s += root_of_unity_trace(o, t);
    CHECK(s == 0);
  }
}

TEST_CASE("unit group generators span (Z/n)^*") {
  for (u64 n : {u64(3), u64(4), u64(8), u64(12), u64(16), u64(30), u64(84), u64(105),
                u64(120), u64(168), u64(1820)}) {
    auto gens = unit_group_generators(n);
    std::vector<bool> seen(n, false);
    std::vector<u64> frontier{1 % n};
    seen[1 % n] = true;
    size_t count = 1;
    while (!frontier.empty()) {
      u64 x = frontier.back();
      frontier.pop_back();
      for (u64 g : gens) {
        u64 y = mulmod(x, g, n);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          frontier.push_back(y);
        }
      }
    }
    CHECK(count == euler_phi(n));
  }
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK(multiplicative_order(2, 1093 * 2 + 1) == multiplicative_order(2, 2187));
}

TEST_CASE("dixon prime selection rule") {
  CHECK(next_prime_in_class(3, 3) == 7);
  CHECK(next_prime_in_class(30, 15) == 31);
  CHECK(next_prime_in_class(84, 25) == 337);
}

TEST_CASE("exact rationals") {
  Rat a(9, 3);
  CHECK(a.num == 3);
  CHECK(a.den == 1);
  Rat b(9, 2);
  Rat c = b - Rat(2);
  CHECK(c == Rat(5, 2));
  CHECK(Rat(-1, 4) < Rat(0));
  CHECK(Rat(7, 2).str() == "7/2");
}

TEST_CASE("scan for (3^f+1)/4 and (3^f-1)/2 both prime") {
  auto hits7 = scan_3f_prime_pairs(7);
  REQUIRE(hits7 == std::vector<unsigned>{7});
  CHECK(scan_3f_prime_pairs(5).empty());
  CHECK(scan_3f_prime_pairs(3).empty());
  // f = 7: 3^7+1 = 4*547 and 3^7-1 = 2*1093, both prime by the oracle above
  CHECK(trial_division_prime(547));
  CHECK(trial_division_prime(1093));
  auto hits80 = scan_3f_prime_pairs(80);
  for (unsigned f : hits80) {
    CHECK(f % 2 == 1);
    CHECK(is_prime_u64(f));
    CHECK(f >= 7);
  }
  CHECK(std::find(hits80.begin(), hits80.end(), 7) != hits80.end());
}

TEST_CASE("Suzuki torus factorization identity") {
  for (unsigned f = 1; f <= 10; ++f) CHECK(sz_torus_factor_check(f));
  // f = 1: 4^3+1 = 65 = 13 * 5
  u128 lhs = pow_u128(4, 3) + 1;
  CHECK(lhs == 65);
}
