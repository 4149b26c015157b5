#pragma once

// Normal-structure computations: p-cores, the Fitting subgroup, the solvable
// radical with its quotient realized as a permutation group, the smallest
// normal subgroup with odd quotient, and isomorphism fingerprints.
//
// O_p(G) is generated by the class representatives of p-power order whose
// normal closure is a p-group; Sol(G) is the preimage of Sol(G/F(G)),
// iterated until the Fitting subgroup vanishes.

#include <map>

#include "realchar/classes.hpp"
#include "realchar/quotient.hpp"

namespace realchar {

struct Fingerprint {
  u64 order = 1;
  u64 class_count = 1;
  u64 k_real = 1;
  std::vector<u64> real_orders{1};
  std::vector<std::pair<u64, u64>> order_histogram{{1, 1}};  // order -> element count
  bool solvable = true;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.order == b.order && a.class_count == b.class_count && a.k_real == b.k_real &&
           a.real_orders == b.real_orders && a.order_histogram == b.order_histogram &&
           a.solvable == b.solvable;
  }

  std::string str() const {
    std::string s = "order=" + std::to_string(order) + " classes=" + std::to_string(class_count) +
                    " kR=" + std::to_string(k_real) + " realorders={";
    for (size_t i = 0; i < real_orders.size(); ++i)
      s += (i ? "," : "") + std::to_string(real_orders[i]);
    s += "} solvable=";
    s += solvable ? "yes" : "no";
    return s;
  }
};

inline Fingerprint fingerprint_of(const ClassSet& cs, bool solvable) {
  Fingerprint fp;
  fp.order = cs.group_order;
  fp.class_count = cs.classes.size();
  fp.k_real = cs.k_real();
  fp.real_orders = cs.real_element_orders();
  fp.order_histogram.clear();
  for (auto [o, n] : cs.order_histogram()) fp.order_histogram.emplace_back(o, n);
  fp.solvable = solvable;
  return fp;
}

inline Fingerprint fingerprint(const PermGroup& G) {
  // quotient realizations may live on more than 300 points while staying
  // small as groups, so only the group-degree cap applies here
  auto cs = conjugacy_classes(G, 2'000'000, PermGroup::kDegreeCap);
  return fingerprint_of(cs, is_solvable(G));
}

// largest normal p-subgroup
inline PermGroup p_core(const PermGroup& G, const ClassSet& cs, u64 p) {
  std::vector<Perm> seeds;
  for (const auto& c : cs.classes) {
    if (c.order == 1) continue;
    u64 o = c.order;
    while (o % p == 0) o /= p;
    if (o != 1) continue;  // not p-power order
    PermGroup closure = normal_closure(G, {c.rep});
    u64 co = closure.order();
    while (co % p == 0) co /= p;
    if (co == 1) seeds.push_back(c.rep);
  }
  if (seeds.empty()) return PermGroup::trivial(G.degree());
  PermGroup core = normal_closure(G, seeds);
  u64 co = core.order();
  while (co % p == 0) co /= p;
  if (co != 1) throw IntegrityError("p_core: output is not a p-group");
  return core;
}

inline PermGroup fitting_subgroup(const PermGroup& G, const ClassSet& cs,
                                  std::map<u64, PermGroup>* cores_out = nullptr) {
  std::vector<Perm> gens;
  u64 expected = 1;
  for (auto [p, e] : factorize_u64(G.order())) {
    PermGroup core = p_core(G, cs, p);
    expected *= core.order();
    for (const auto& g : core.generators()) gens.push_back(g);
    if (cores_out) cores_out->emplace(p, std::move(core));
  }
  PermGroup F(G.degree(), gens);
  if (F.order() != expected)
    throw IntegrityError("fitting_subgroup: product of p-cores has wrong order");
  return F;
}

// smallest normal subgroup with odd-order quotient: the normal closure of all
// elements of 2-power order
inline PermGroup o2prime_subgroup(const PermGroup& G, const ClassSet& cs) {
  std::vector<Perm> seeds;
  for (const auto& c : cs.classes) {
    if (c.order == 1) continue;
    u64 o = c.order;
    while (o % 2 == 0) o /= 2;
    if (o == 1) seeds.push_back(c.rep);
  }
  if (seeds.empty()) return PermGroup::trivial(G.degree());
  PermGroup L = normal_closure(G, seeds);
  if ((G.order() / L.order()) % 2 == 0)
    throw IntegrityError("o2prime_subgroup: quotient is not of odd order");
  return L;
}

// the solvable radical as a subgroup of G
inline PermGroup solvable_radical_group(const PermGroup& G, int depth = 0) {
  if (depth > 20) throw CapError("solvable radical: Fitting iteration depth over cap 20");
  if (is_solvable(G)) return G;
  auto cs = conjugacy_classes(G, 2'000'000, PermGroup::kDegreeCap);
  PermGroup F = fitting_subgroup(G, cs);
  if (F.is_trivial()) return PermGroup::trivial(G.degree());
  auto qa = coset_action(G, F);
  PermGroup SQ = solvable_radical_group(qa.image, depth + 1);
  std::vector<Perm> gens = F.generators();
  for (const auto& q : SQ.generators()) gens.push_back(qa.preimage(q));
  PermGroup S(G.degree(), gens);
  if (S.order() != F.order() * SQ.order())
    throw IntegrityError("solvable radical: preimage order mismatch");
  if (!is_solvable(S)) throw IntegrityError("solvable radical: result is not solvable");
  return S;
}

struct StructureReport {
  PermGroup sol_radical = PermGroup::trivial(1);
  PermGroup fitting = PermGroup::trivial(1);
  std::map<u64, PermGroup> p_cores;
  PermGroup o2prime = PermGroup::trivial(1);
  PermGroup quotient = PermGroup::trivial(1);  // G / Sol(G) as a permutation group
  Fingerprint quotient_fingerprint;
};

inline StructureReport structure_report(const PermGroup& G) {
  StructureReport rep;
  auto cs = conjugacy_classes(G);
  rep.fitting = fitting_subgroup(G, cs, &rep.p_cores);
  rep.o2prime = o2prime_subgroup(G, cs);
  rep.sol_radical = solvable_radical_group(G);
  if (rep.sol_radical.order() == G.order()) {
    rep.quotient = PermGroup::trivial(1);
  } else if (rep.sol_radical.is_trivial()) {
    rep.quotient = G;
  } else {
    rep.quotient = coset_action(G, rep.sol_radical).image;
  }
  rep.quotient_fingerprint = fingerprint(rep.quotient);
  return rep;
}

}  // namespace realchar
