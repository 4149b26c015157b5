#include <catch2/catch.hpp>
#include <set>

#include "realchar/classes.hpp"

using namespace realchar;

namespace {

PermGroup a5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}
PermGroup s5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
}
PermGroup s4() {
  return PermGroup(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
}
PermGroup psl27() {
  // PSL(2,7) on the projective line over F7: x -> x+1 and x -> -1/x, infinity = 7
  return PermGroup(8, {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}}),
                       Perm::from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}})});
}
PermGroup f21() {
  return PermGroup(7, {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}),
                       Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}})});
}
PermGroup c_n(u32 n) {
  std::vector<u32> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

std::multiset<u64> sizes_of(const ClassSet& cs) {
  std::multiset<u64> s;
  for (const auto& c : cs.classes) s.insert(c.size);
  return s;
}
std::multiset<u64> orders_of(const ClassSet& cs) {
  std::multiset<u64> s;
  for (const auto& c : cs.classes) s.insert(c.order);
  return s;
}

// independent oracle: classes as orbits of conjugation by the full element set
std::multiset<std::pair<u64, u64>> brute_force_classes(const PermGroup& G) {
  auto elems = G.elements();
  std::set<Perm> rest(elems.begin(), elems.end());
  std::multiset<std::pair<u64, u64>> out;  // (order, size)
  while (!rest.empty()) {
    Perm x = *rest.begin();
    std::set<Perm> cls;
    for (const auto& g : elems) cls.insert(x.conj(g));
    for (const auto& y : cls) rest.erase(y);
    out.insert({x.order(), cls.size()});
  }
  return out;
}

std::multiset<std::pair<u64, u64>> chain_classes(const ClassSet& cs) {
  std::multiset<std::pair<u64, u64>> out;
  for (const auto& c : cs.classes) out.insert({c.order, c.size});
  return out;
}

}  // namespace

TEST_CASE("A5 class data") {
  auto cs = conjugacy_classes(a5());
  REQUIRE(cs.classes.size() == 5);
  CHECK(sizes_of(cs) == std::multiset<u64>{1, 15, 20, 12, 12});
  CHECK(orders_of(cs) == std::multiset<u64>{1, 2, 3, 5, 5});
  CHECK(cs.k_real() == 5);
  CHECK(cs.real_element_orders() == std::vector<u64>{1, 2, 3, 5});
  CHECK(cs.is_c_group());
  CHECK(cs.k_rational() == 3);  // the two order-5 classes are swapped by squaring
  CHECK(cs.exponent == 30);
}

TEST_CASE("PSL(2,7) class data") {
  auto G = psl27();
  REQUIRE(G.order() == 168);
  auto cs = conjugacy_classes(G);
  REQUIRE(cs.classes.size() == 6);
  CHECK(orders_of(cs) == std::multiset<u64>{1, 2, 3, 4, 7, 7});
  CHECK(sizes_of(cs) == std::multiset<u64>{1, 21, 56, 42, 24, 24});
  CHECK(cs.k_real() == 4);
  CHECK(cs.real_element_orders() == std::vector<u64>{1, 2, 3, 4});
  CHECK(cs.k_rational() == 4);
}

TEST_CASE("S5 classes are all real and rational") {
  auto cs = conjugacy_classes(s5());
  CHECK(cs.classes.size() == 7);
  CHECK(cs.k_real() == 7);
  CHECK(cs.k_rational() == 7);
  CHECK_FALSE(cs.is_c_group());  // (0 1)(2 3 4) is real of order 6
  CHECK(cs.real_classes_of_order(6) == 1);
  CHECK(cs.real_classes_of_order(1) == 1);
}

TEST_CASE("orbit partition equals brute-force conjugation closure") {
  for (const PermGroup& G :
       {a5(), s5(), s4(), psl27(), f21(), c_n(12), direct_product(s4(), c_n(3)), wreath_c2(s4())}) {
    auto cs = conjugacy_classes(G);
    CHECK(chain_classes(cs) == brute_force_classes(G));
  }
}

TEST_CASE("real orders are divisor-closed") {
  for (const PermGroup& G : {a5(), s5(), psl27(), wreath_c2(a5()), direct_product(a5(), c_n(7))}) {
    auto cs = conjugacy_classes(G);
    auto orders = cs.real_element_orders();
    std::set<u64> oset(orders.begin(), orders.end());
    for (u64 m : orders)
      for (u64 d : divisors(m)) CHECK(oset.count(d) == 1);
  }
}

TEST_CASE("real count and real orders are multiplicative over direct products") {
  auto A = a5();
  auto B = c_n(7);
  auto csA = conjugacy_classes(A), csB = conjugacy_classes(B);
  auto csP = conjugacy_classes(direct_product(A, B));
  CHECK(csP.k_real() == csA.k_real() * csB.k_real());
  std::set<u64> expected;
  for (u64 x : csA.real_element_orders())
    for (u64 y : csB.real_element_orders()) expected.insert(std::lcm(x, y));
  auto got = csP.real_element_orders();
  CHECK(std::set<u64>(got.begin(), got.end()) == expected);

  auto csQ = conjugacy_classes(direct_product(s4(), a5()));
  auto cs4 = conjugacy_classes(s4());
  CHECK(csQ.k_real() == cs4.k_real() * csA.k_real());
}

TEST_CASE("power maps compose") {
  for (const PermGroup& G : {a5(), s5(), psl27()}) {
    auto cs = conjugacy_classes(G);
    for (u64 m : {2, 3, 5}) {
      for (u64 mp : {2, 3, 7}) {
        for (size_t j = 0; j < cs.classes.size(); ++j) {
          u32 step1 = cs.power_class[j][size_t(m % cs.classes[j].order)];
          u32 step2 = cs.power_class[step1][size_t(mp % cs.classes[step1].order)];
          u32 direct = cs.power_class[j][size_t((m * mp) % cs.classes[j].order)];
          CHECK(step2 == direct);
        }
      }
    }
  }
}

TEST_CASE("inverse map is an involution; identity fixed by everything") {
  for (const PermGroup& G : {a5(), s5(), psl27(), f21()}) {
    auto cs = conjugacy_classes(G);
    for (size_t j = 0; j < cs.classes.size(); ++j)
      CHECK(cs.classes[cs.classes[j].inverse_class].inverse_class == j);
    for (const auto& [m, pm] : cs.stored_power_maps) CHECK(pm[0] == 0);
  }
}

TEST_CASE("odd-order groups have exactly one real class") {
  for (const PermGroup& G : {f21(), c_n(15), c_n(21), direct_product(c_n(5), c_n(9))}) {
    auto cs = conjugacy_classes(G);
    CHECK(cs.k_real() == 1);
    CHECK(cs.k_rational() == 1);
    CHECK(cs.real_element_orders() == std::vector<u64>{1});
  }
}

TEST_CASE("class data is independent of the permutation realization") {
  auto G = s4();
  auto cs_natural = conjugacy_classes(G);
  // regular representation on 24 points
  auto elems = G.elements();
  std::map<Perm, u32> pos;
  for (u32 i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<Perm> regular_gens;
  for (const auto& g : G.generators()) {
    std::vector<point> img(elems.size());
    for (u32 i = 0; i < elems.size(); ++i) img[i] = point(pos.at(elems[i] * g));
    regular_gens.emplace_back(std::move(img));
  }
  auto R = PermGroup(u32(elems.size()), regular_gens);
  REQUIRE(R.order() == 24);
  auto cs_regular = conjugacy_classes(R);
  CHECK(chain_classes(cs_natural) == chain_classes(cs_regular));
  CHECK(cs_natural.k_real() == cs_regular.k_real());
  CHECK(cs_natural.real_element_orders() == cs_regular.real_element_orders());
}

TEST_CASE("enumeration caps produce explicit errors") {
  // C2^21 has order 2097152 > 2e6
  PermGroup big = c_n(2);
  for (int i = 1; i < 21; ++i) big = direct_product(big, c_n(2));
  REQUIRE(big.order() == (1u << 21));
  CHECK_THROWS_AS(conjugacy_classes(big), CapError);
  CHECK_THROWS_WITH(conjugacy_classes(big), Catch::Contains("too large for enumeration"));
}

TEST_CASE("real_data bundle") {
  auto rd = real_data(conjugacy_classes(a5()));
  CHECK(rd.k_real == 5);
  CHECK(rd.real_orders == std::vector<u64>{1, 2, 3, 5});
  CHECK(rd.k_rational == 3);
}
