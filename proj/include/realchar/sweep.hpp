#pragma once

// A generated breadth sample of groups of order <= 100, used by the
// solvability and quotient-shape sweeps: all abelian types, dihedral and
// dicyclic series, split metacyclic groups C_n : C_m over every action, the
// extraspecial group of order 27 and exponent 3, the small alternating and
// symmetric groups, and direct products of pairs.  Entries are deduplicated
// by fingerprint and sorted, so the sweep is stable across runs.

#include "realchar/catalog.hpp"

namespace realchar {

struct SweepEntry {
  std::string name;
  PermGroup group;
};

namespace sweep_detail {

inline PermGroup regular_group(u32 n, const std::function<u32(u32, u32)>& mult,
                               const std::vector<u32>& gen_elems) {
  std::vector<Perm> gens;
  for (u32 g : gen_elems) {
    std::vector<point> img(n);
    for (u32 i = 0; i < n; ++i) img[i] = point(mult(i, g));
    gens.emplace_back(std::move(img));
  }
  PermGroup G(n, gens);
  if (G.order() != n) throw IntegrityError("regular_group: order mismatch");
  return G;
}

// dicyclic group of order 4n: <a,b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>
inline PermGroup dicyclic_group(u32 n) {
  u32 two_n = 2 * n, order = 4 * n;
  auto mult = [two_n, n](u32 x, u32 y) {
    u32 i = x % two_n, j = x / two_n;
    u32 i2 = y % two_n, j2 = y / two_n;
    if (j == 0) return (i + i2) % two_n + two_n * j2;
    u32 base = (i + two_n - i2) % two_n;
    if (j2 == 0) return base + two_n;
    return (base + n) % two_n;
  };
  return regular_group(order, mult, {1, two_n});
}

// split metacyclic C_n : C_m with b^-1 a b = a^act
inline PermGroup metacyclic_group(u32 n, u32 m, u32 act) {
  u32 order = n * m;
  std::vector<u32> act_pow(m);
  act_pow[0] = 1;
  for (u32 j = 1; j < m; ++j) act_pow[j] = u32(u64(act_pow[j - 1]) * act % n);
  auto mult = [n, m, act_pow](u32 x, u32 y) {
    u32 i = x % n, j = x / n;
    u32 i2 = y % n, j2 = y / n;
    return u32((i + u64(i2) * act_pow[j]) % n) + n * ((j + j2) % m);
  };
  return regular_group(order, mult, {1, n});
}

// extraspecial of order p^3 and exponent p, acting on the affine plane
inline PermGroup heisenberg_group(u32 p) {
  u32 deg = p * p;
  auto enc = [p](u32 x, u32 y) { return x * p + y; };
  auto shear = [&](u32 a, u32 b, u32 c) {
    std::vector<point> img(deg);
    for (u32 x = 0; x < p; ++x)
      for (u32 y = 0; y < p; ++y) img[enc(x, y)] = point(enc((x + a) % p, (y + b + c * x) % p));
    return Perm(std::move(img));
  };
  PermGroup G(deg, {shear(1, 0, 0), shear(0, 1, 0), shear(0, 0, 1)});
  if (G.order() != u64(p) * p * p) throw IntegrityError("heisenberg_group: order mismatch");
  return G;
}

inline std::string fingerprint_key(const Fingerprint& fp) {
  std::string key = fp.str() + "|";
  for (auto [o, n] : fp.order_histogram)
    key += std::to_string(o) + ":" + std::to_string(n) + ",";
  key += "|" + std::to_string(fp.class_count);
  return key;
}

}  // namespace sweep_detail

inline const std::vector<SweepEntry>& small_group_sweep(u64 cap = 100) {
  static std::mutex mu;
  static std::map<u64, std::vector<SweepEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cap);
  if (it != cache.end()) return it->second;

  using namespace sweep_detail;
  std::vector<SweepEntry> raw;

  // abelian: multisets of prime powers with product <= cap
  {
    std::vector<u64> prime_powers;
    for (u64 q = 2; q <= cap; ++q)
      if (parse_detail::is_prime_power(q)) prime_powers.push_back(q);
    std::vector<u64> current;
    std::function<void(u64, u64)> rec = [&](u64 min_idx, u64 product) {
      if (!current.empty()) {
        std::string name;
        PermGroup G = PermGroup::trivial(1);
        bool first = true;
        for (u64 q : current) {
          name += (first ? "" : " x ") + std::string("C") + std::to_string(q);
          G = first ? cyclic_group(q) : direct_product(G, cyclic_group(q));
          first = false;
        }
        raw.push_back({name, std::move(G)});
      }
      for (u64 i = min_idx; i < prime_powers.size(); ++i) {
        u64 q = prime_powers[i];
        if (product * q > cap) continue;
        current.push_back(q);
        rec(i, product * q);
        current.pop_back();
      }
    };
    rec(0, 1);
    raw.push_back({"C1", PermGroup::trivial(1)});
  }

  // dihedral and dicyclic
  for (u32 n = 3; 2 * n <= cap; ++n) raw.push_back({"D" + std::to_string(n), dihedral_group(n)});
  for (u32 n = 2; 4 * n <= cap; ++n)
    raw.push_back({"Dic" + std::to_string(4 * n), dicyclic_group(n)});

  // split metacyclic over all actions
  for (u32 n = 3; n <= cap / 2; ++n)
    for (u32 m = 2; u64(n) * m <= cap; ++m)
      for (u32 a = 2; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (powmod(a, m, n) != 1) continue;
        raw.push_back({"C" + std::to_string(n) + ":C" + std::to_string(m) + "(a=" +
                           std::to_string(a) + ")",
                       metacyclic_group(n, m, a)});
      }

  // a few named non-split examples
  raw.push_back({"Heis27", heisenberg_group(3)});
  raw.push_back({"A4", alternating_group(4)});
  raw.push_back({"S4", symmetric_group(4)});
  raw.push_back({"A5", alternating_group(5)});

  // dedupe by fingerprint
  std::map<std::string, size_t> seen;
  std::vector<SweepEntry> base;
  for (auto& e : raw) {
    if (e.group.order() > cap) continue;
    auto key = fingerprint_key(fingerprint(e.group));
    if (seen.count(key)) continue;
    seen.emplace(key, base.size());
    base.push_back(std::move(e));
  }

  // direct products of pairs
  std::vector<SweepEntry> out = base;
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t j = i; j < base.size(); ++j) {
      u64 o = base[i].group.order() * base[j].group.order();
      if (o > cap || base[i].group.order() == 1 || base[j].group.order() == 1) continue;
      PermGroup P = direct_product(base[i].group, base[j].group);
      auto key = fingerprint_key(fingerprint(P));
      if (seen.count(key)) continue;
      seen.emplace(key, out.size());
      out.push_back({base[i].name + " x " + base[j].name, std::move(P)});
    }

  std::sort(out.begin(), out.end(), [](const SweepEntry& a, const SweepEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  return cache.emplace(cap, std::move(out)).first->second;
}

}  // namespace realchar
