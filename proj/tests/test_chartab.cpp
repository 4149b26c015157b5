#include <catch2/catch.hpp>
#include <set>

#include "realchar/chartab.hpp"

using namespace realchar;

namespace {

PermGroup a5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
}
PermGroup s5() {
  return PermGroup(5, {Perm::from_cycles(5, {{0, 1}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
}
PermGroup psl27() {
  return PermGroup(8, {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}}),
                       Perm::from_cycles(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}})});
}
PermGroup c_n(u32 n) {
  std::vector<u32> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  return PermGroup(n, {Perm::from_cycles(n, {cyc})});
}

std::multiset<u64> degrees_of(const CharTable& t) {
  std::multiset<u64> d;
  for (const auto& r : t.rows) d.insert(r.degree);
  return d;
}

}  // namespace

TEST_CASE("dixon prime selection") {
  CHECK(dixon_prime(60, 30) == 31);
  CHECK(dixon_prime(3, 3) == 7);
  CHECK(dixon_prime(168, 84) == 337);
}

TEST_CASE("characteristic polynomial matches brute force on small matrices") {
  using namespace dixon_detail;
  const u64 p = 101;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    u64 n = 1 + rng() % 5;
    Mat M(n);
    for (u64 i = 0; i < n * n; ++i) M.a[i] = rng() % p;
    Poly cp = charpoly(M, p);
    REQUIRE(cp.size() == n + 1);
    CHECK(cp[n] == 1);
    // evaluate det(xI - M) at a few points by Gaussian elimination
    for (u64 x : {u64(0), u64(1), u64(17), u64(55)}) {
      std::vector<std::vector<u64>> rows(n, std::vector<u64>(n));
      for (u64 r = 0; r < n; ++r)
        for (u64 c = 0; c < n; ++c)
          rows[r][c] = r == c ? (x + p - M.at(r, c)) % p : (p - M.at(r, c)) % p;
      // determinant
      u64 det = 1;
      for (u64 col = 0; col < n && det; ++col) {
        u64 sel = col;
        while (sel < n && rows[sel][col] == 0) ++sel;
        if (sel == n) {
          det = 0;
          break;
        }
        if (sel != col) {
          std::swap(rows[sel], rows[col]);
          det = p - det;
        }
        det = mulmod(det, rows[col][col], p);
        u64 inv = powmod(rows[col][col], p - 2, p);
        for (u64 r = col + 1; r < n; ++r) {
          u64 f = mulmod(rows[r][col], inv, p);
          for (u64 c = col; c < n; ++c)
            rows[r][c] = (rows[r][c] + p - mulmod(f, rows[col][c], p)) % p;
        }
      }
      u64 val = 0;
      for (size_t c = cp.size(); c-- > 0;) val = (mulmod(val, x, p) + cp[c]) % p;
      CHECK(val == det % p);
    }
  }
}

TEST_CASE("A5 character table") {
  auto cs = conjugacy_classes(a5());
  auto t = character_table(cs);
  CHECK(t.prime == 31);
  CHECK(degrees_of(t) == std::multiset<u64>{1, 3, 3, 4, 5});
  CHECK(t.k_real() == 5);
  CHECK(t.k_rational() == 3);
}

TEST_CASE("C7 character table: seven linear rows, one real") {
  auto cs = conjugacy_classes(c_n(7));
  auto t = character_table(cs);
  REQUIRE(t.rows.size() == 7);
  for (const auto& r : t.rows) CHECK(r.degree == 1);
  CHECK(t.k_real() == 1);
  CHECK(t.k_rational() == 1);
}

TEST_CASE("PSL(2,7) character table") {
  auto cs = conjugacy_classes(psl27());
  auto t = character_table(cs);
  REQUIRE(t.rows.size() == 6);
  CHECK(degrees_of(t) == std::multiset<u64>{1, 3, 3, 6, 7, 8});
  CHECK(t.k_real() == 4);
  CHECK(t.k_rational() == 4);
  // the two degree-3 rows are the non-real ones
  for (const auto& r : t.rows)
    if (r.degree == 3)
      CHECK_FALSE(r.real);
    else
      CHECK(r.real);
}

TEST_CASE("S5 character table is rational") {
  auto cs = conjugacy_classes(s5());
  auto t = character_table(cs);
  REQUIRE(t.rows.size() == 7);
  CHECK(degrees_of(t) == std::multiset<u64>{1, 1, 4, 4, 5, 5, 6});
  CHECK(t.k_real() == 7);
  CHECK(t.k_rational() == 7);
}

TEST_CASE("conjugating every row permutes the rows; fixed rows are the real ones") {
  for (const PermGroup& G : {a5(), psl27(), s5(), c_n(9)}) {
    auto cs = conjugacy_classes(G);
    auto t = character_table(cs);
    for (const auto& r : t.rows) {
      CharRow conj_row;
      conj_row.degree = r.degree;
      // conjugate value at class j lives at the same class column
      for (const auto& v : r.values) conj_row.values.push_back(v.conjugate());
      bool found = false, fixed = true;
      for (const auto& other : t.rows) {
        if (other.degree == r.degree && other.values == conj_row.values) found = true;
      }
      fixed = conj_row.values == r.values;
      CHECK(found);
      CHECK(fixed == r.real);
    }
  }
}

TEST_CASE("Galois power maps permute the rows") {
  for (const PermGroup& G : {a5(), psl27(), c_n(12)}) {
    auto cs = conjugacy_classes(G);
    auto t = character_table(cs);
    for (u64 j : unit_group_generators(t.exponent)) {
      std::set<std::vector<CycValue>> originals, mapped;
      for (const auto& r : t.rows) {
        originals.insert(r.values);
        std::vector<CycValue> gal;
        for (const auto& v : r.values) gal.push_back(v.galois(j % v.order == 0 ? 1 : j));
        mapped.insert(gal);
      }
      CHECK(originals == mapped);
    }
  }
}

TEST_CASE("tables are deterministic and seed-independent after canonicalization") {
  auto cs = conjugacy_classes(psl27());
  auto t0 = character_table(cs, 0);
  auto t1 = character_table(cs, 12345);
  REQUIRE(t0.rows.size() == t1.rows.size());
  for (size_t i = 0; i < t0.rows.size(); ++i) {
    CHECK(t0.rows[i].degree == t1.rows[i].degree);
    CHECK(t0.rows[i].values == t1.rows[i].values);
  }
}

TEST_CASE("wreath product table satisfies all built-in checks") {
  auto W = wreath_c2(a5());
  REQUIRE(W.order() == 7200);
  auto cs = conjugacy_classes(W);
  auto t = character_table(cs);
  CHECK(t.k_real() == cs.k_real());
  u64 sq = 0;
  for (const auto& r : t.rows) sq += r.degree * r.degree;
  CHECK(sq == 7200);
}

TEST_CASE("trivial group table") {
  auto cs = conjugacy_classes(PermGroup::trivial(1));
  auto t = character_table(cs);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].degree == 1);
}

TEST_CASE("odd order: exactly one real row") {
  for (u32 n : {3u, 9u, 15u, 21u}) {
    auto cs = conjugacy_classes(c_n(n));
    auto t = character_table(cs);
    CHECK(t.k_real() == 1);
  }
}
