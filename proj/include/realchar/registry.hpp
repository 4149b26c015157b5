#pragma once

// Catalog registry: the bundled named entries with closed-form orders and
// outer-automorphism orders, lazy fingerprint identification, the bundled
// socle/overgroup pairs, closed-form real-class profiles for PSL(2,q) with
// odd q (validated against enumeration before use), and growth scans.

#include <mutex>

#include "realchar/catalog.hpp"

namespace realchar {

// ---------------------------------------------------------------------------
// analytic real-class data for PSL(2,q), q odd
//
// For q = p^f odd, q ≡ eps (mod 4): the two dihedrally-normalized cyclic
// subgroups have orders (q-eps)/2 (even) and (q+eps)/2 (odd); every element
// of either is real, contributing phi(m)/2 classes per divisor order m > 2,
// one involution class, and the unipotent classes of order p are real exactly
// when q ≡ 1 (mod 4) (two classes).

struct Psl2RealProfile {
  u64 q = 0;
  std::vector<u64> real_orders;
  u64 k_real = 0;
  std::vector<std::pair<u64, u64>> per_order;  // order -> number of real classes
};

inline Psl2RealProfile psl2_real_profile_analytic(u64 q) {
  u64 p, f;
  if (!parse_detail::is_prime_power(q, &p, &f) || p == 2 || q < 5)
    throw std::invalid_argument("psl2_real_profile: odd prime power q >= 5 required");
  Psl2RealProfile prof;
  prof.q = q;
  u64 h_even = q % 4 == 1 ? (q - 1) / 2 : (q + 1) / 2;
  u64 h_odd = q % 4 == 1 ? (q + 1) / 2 : (q - 1) / 2;
  std::map<u64, u64> counts;
  counts[1] = 1;
  counts[2] = 1;
  for (u64 h : {h_even, h_odd})
    for (u64 m : divisors(h))
      if (m > 2) counts[m] += euler_phi(m) / 2;
  if (q % 4 == 1) counts[p] += 2;
  for (auto [m, c] : counts) {
    prof.real_orders.push_back(m);
    prof.per_order.emplace_back(m, c);
    prof.k_real += c;
  }
  return prof;
}

inline Psl2RealProfile psl2_real_profile_enumerated(u64 q) {
  auto G = build_psl2(q).group;
  auto cs = conjugacy_classes(G);
  Psl2RealProfile prof;
  prof.q = q;
  prof.k_real = cs.k_real();
  prof.real_orders = cs.real_element_orders();
  for (u64 m : prof.real_orders) prof.per_order.emplace_back(m, cs.real_classes_of_order(m));
  return prof;
}

inline const std::vector<u64>& odd_prime_powers_5_to_81() {
  static const std::vector<u64> qs = [] {
    std::vector<u64> v;
    for (u64 q = 5; q <= 81; ++q)
      if (q % 2 == 1 && parse_detail::is_prime_power(q)) v.push_back(q);
    return v;
  }();
  return qs;
}

inline bool psl2_profile_matches_enumeration(u64 q) {
  auto a = psl2_real_profile_analytic(q);
  auto e = psl2_real_profile_enumerated(q);
  return a.real_orders == e.real_orders && a.k_real == e.k_real && a.per_order == e.per_order;
}

// validates the formula against enumeration for every odd prime power q <= 81
// (runs once; required before the formula is trusted at larger q)
inline void ensure_psl2_profile_validated() {
  static std::once_flag flag;
  static bool ok = false;
  std::call_once(flag, [] {
    for (u64 q : odd_prime_powers_5_to_81())
      if (!psl2_profile_matches_enumeration(q))
        throw IntegrityError("psl2_real_profile: formula disagrees with enumeration at q = " +
                             std::to_string(q));
    ok = true;
  });
  if (!ok) throw IntegrityError("psl2_real_profile: validation did not complete");
}

inline Psl2RealProfile psl2_real_profile(u64 q) {
  if (q > 81) {
    ensure_psl2_profile_validated();
    return psl2_real_profile_analytic(q);
  }
  auto a = psl2_real_profile_analytic(q);
  if (!psl2_profile_matches_enumeration(q))
    throw IntegrityError("psl2_real_profile: enumeration cross-check failed at q = " +
                         std::to_string(q));
  return a;
}

// ---------------------------------------------------------------------------
// growth scans: k_real(S) / |Out(S)| - |Out(S)| per family member

struct AsymptoticRecord {
  std::string family;  // "A", "PSL2", "Sz"
  u64 parameter = 0;   // n or q
  u64 group_order = 0;
  u64 k_real = 0;
  u64 out = 1;
  Rat growth;          // exactly k_real/out - out
};

inline std::vector<AsymptoticRecord> asymptotic_scan(const std::string& family, u64 lo, u64 hi) {
  std::vector<AsymptoticRecord> recs;
  if (family == "A") {
    for (u64 n = std::max<u64>(lo, 5); n <= hi; ++n) {
      if (n > 10) throw CapError("asymptotic scan: A_n over enumeration cap for n > 10");
      auto G = alternating_group(n);
      auto cs = conjugacy_classes(G);
      AsymptoticRecord r;
      r.family = "A";
      r.parameter = n;
      r.group_order = G.order();
      r.k_real = cs.k_real();
      r.out = n == 6 ? 4 : 2;
      r.growth = Rat(i64(r.k_real), i64(r.out)) - Rat(i64(r.out));
      recs.push_back(std::move(r));
    }
  } else if (family == "PSL2") {
    for (u64 q = std::max<u64>(lo, 5); q <= hi; ++q) {
      u64 p, f;
      if (q % 2 == 0 || !parse_detail::is_prime_power(q, &p, &f)) continue;
      auto prof = psl2_real_profile(q);
      AsymptoticRecord r;
      r.family = "PSL2";
      r.parameter = q;
      r.group_order = q * (q * q - 1) / 2;
      r.k_real = prof.k_real;
      r.out = std::gcd<u64>(2, q - 1) * f;
      r.growth = Rat(i64(r.k_real), i64(r.out)) - Rat(i64(r.out));
      recs.push_back(std::move(r));
    }
  } else if (family == "Sz") {
    if (lo <= 8 && 8 <= hi) {
      auto G = build_sz8().group;
      auto cs = conjugacy_classes(G);
      AsymptoticRecord r;
      r.family = "Sz";
      r.parameter = 8;
      r.group_order = G.order();
      r.k_real = cs.k_real();
      r.out = 3;
      r.growth = Rat(i64(r.k_real), i64(r.out)) - Rat(i64(r.out));
      recs.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("asymptotic_scan: unknown family " + family);
  }
  std::sort(recs.begin(), recs.end(),
            [](const AsymptoticRecord& a, const AsymptoticRecord& b) {
              return a.group_order < b.group_order;
            });
  return recs;
}

// ---------------------------------------------------------------------------
// the bundled catalog

struct CatalogEntry {
  std::string name;  // canonical descriptor
  u64 order = 0;     // closed-form expected order
  bool simple = false;
  bool buildable = true;
  bool enumerable = true;  // class data within enumeration caps
  u64 out = 0;             // |Out|, simple entries only
  std::string note;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"C1", 1, false, true, true, 0, ""},
      {"A5", 60, true, true, true, 2, ""},
      {"A6", 360, true, true, true, 4, ""},
      {"A7", 2520, true, true, true, 2, ""},
      {"A8", 20160, true, true, true, 2, ""},
      {"S5", 120, false, true, true, 0, ""},
      {"S6", 720, false, true, true, 0, ""},
      {"SL(3,2)", 168, true, true, true, 2, ""},
      {"PSL(3,3)", 5616, true, true, true, 2, ""},
      {"PSU(3,3)", 6048, true, true, true, 2, ""},
      {"PSL(2,8)", 504, true, true, true, 3, ""},
      {"PSL(2,11)", 660, true, true, true, 2, ""},
      {"PSL(2,27)", 9828, true, true, true, 6, ""},
      {"PSU(3,4)", 62400, true, true, true, 4, ""},
      {"PSL(3,4)", 20160, true, true, true, 12, ""},
      {"Sz(8)", 29120, true, true, true, 3, ""},
      {"PSL(2,8).3", 1512, false, true, true, 0, ""},
      {"PSL(2,27).3", 29484, false, true, true, 0, ""},
      {"Sz(8).3", 87360, false, true, true, 0, ""},
      {"PSU(3,8)", 5515776, true, true, false, 18,
       "claimed: 6 distinct real element orders (not verified by enumeration)"},
      {"J1", 175560, true, false, false, 1,
       "optional generator data not bundled; claimed: more than 5 distinct real element orders"},
  };
  return entries;
}

inline const CatalogEntry* catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

// fingerprints of all buildable, enumerable entries; pairwise distinct
inline const std::vector<std::pair<std::string, Fingerprint>>& catalog_fingerprints() {
  static const std::vector<std::pair<std::string, Fingerprint>> fps = [] {
    std::vector<std::pair<std::string, Fingerprint>> out;
    for (const auto& e : catalog_entries()) {
      if (!e.buildable || !e.enumerable) continue;
      PermGroup G = build_group(e.name);
      if (G.order() != e.order)
        throw IntegrityError("catalog: built order differs from closed form for " + e.name);
      out.emplace_back(e.name, fingerprint(G));
    }
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        if (out[i].second == out[j].second)
          throw IntegrityError("catalog: fingerprint collision between " + out[i].first +
                               " and " + out[j].first);
    return out;
  }();
  return fps;
}

// name of the catalog entry with this fingerprint, or "unknown"
inline std::string identify(const Fingerprint& fp) {
  for (const auto& [name, known] : catalog_fingerprints())
    if (known == fp) return name;
  return "unknown";
}

// ---------------------------------------------------------------------------
// bundled socle/overgroup pairs (same point set; the socle generators are
// members of the overgroup)

struct AlmostSimplePair {
  std::string socle;
  std::string group;
  bool full_automorphism_group;  // whether `group` realizes Aut(socle)
};

inline const std::vector<AlmostSimplePair>& bundled_pairs() {
  static const std::vector<AlmostSimplePair> pairs = {
      {"A5", "S5", true},
      {"A6", "S6", false},
      {"PSL(2,8)", "PSL(2,8).3", true},
      {"Sz(8)", "Sz(8).3", true},
      {"PSL(2,27)", "PSL(2,27).3", false},
  };
  return pairs;
}

// pairs used for the rational-extension witness search
inline const std::vector<AlmostSimplePair>& extension_witness_pairs() {
  static const std::vector<AlmostSimplePair> pairs = {
      {"A5", "S5", true},
      {"A6", "S6", false},
      {"PSL(2,8)", "PSL(2,8).3", true},
      {"Sz(8)", "Sz(8).3", true},
  };
  return pairs;
}

}  // namespace realchar
