#pragma once

// Character-theoretic checks for a simple socle S inside an almost simple
// overgroup G on the same point set:
//
//  - the index split: the number of real rows of G whose kernel does not
//    contain S equals k_real(G) - k_real(G/S), with the bounds
//    k_real(G) >= k_real(S)/|Out(S)| and k_real(G/S) <= |Out(S)|;
//
//  - the rational extension witness: a rational-valued row of G of degree
//    greater than one whose restriction to S stays irreducible (norm one
//    against the S-classes through the fusion map).

#include "realchar/chartab.hpp"
#include "realchar/quotient.hpp"
#include "realchar/registry.hpp"

namespace realchar {

struct SoclePairData {
  std::string socle, group;
  PermGroup S = PermGroup::trivial(1);
  PermGroup G = PermGroup::trivial(1);
  ClassSet cs_S, cs_G;
  CharTable table_G;
  std::vector<u32> fused_classes;  // G-class index of each S-class representative
  std::vector<u64> socle_class_sizes;
};

inline SoclePairData load_socle_pair(const std::string& socle_desc, const std::string& group_desc) {
  SoclePairData d;
  d.socle = socle_desc;
  d.group = group_desc;
  d.S = build_group(socle_desc);
  d.G = build_group(group_desc);
  if (d.S.degree() != d.G.degree())
    throw std::invalid_argument("socle pair: degree mismatch");
  for (const auto& g : d.S.generators())
    if (!d.G.contains(g)) throw std::invalid_argument("socle pair: socle not inside group");
  d.cs_S = conjugacy_classes(d.S);
  d.cs_G = conjugacy_classes(d.G);
  d.table_G = character_table(d.cs_G);
  for (const auto& c : d.cs_S.classes) {
    d.fused_classes.push_back(d.cs_G.elements->class_of_perm(c.rep));
    d.socle_class_sizes.push_back(c.size);
  }
  return d;
}

inline bool row_kernel_contains_socle(const CharRow& row, const std::vector<u32>& fused) {
  for (u32 c : fused)
    if (!row.values[c].equals_integer(row.degree)) return false;
  return true;
}

// ---------------------------------------------------------------------------

struct IndexSplitCheck {
  std::string socle, group;
  u64 k_real_socle = 0;
  u64 k_real_group = 0;
  u64 k_real_quotient = 0;
  u64 out = 0;
  u64 k_real_outside = 0;  // real rows of G whose kernel does not contain S
  bool equality = false;   // k_real_outside == k_real_group - k_real_quotient
  bool group_bound = false;     // k_real_group * out >= k_real_socle
  bool quotient_bound = false;  // k_real_quotient <= out
  bool lower_bound = false;     // k_real_outside >= k_real_socle/out - out

  bool all_hold() const { return equality && group_bound && quotient_bound && lower_bound; }
};

inline IndexSplitCheck real_character_index_split(const std::string& socle_desc,
                                                  const std::string& group_desc) {
  SoclePairData d = load_socle_pair(socle_desc, group_desc);
  IndexSplitCheck r;
  r.socle = socle_desc;
  r.group = group_desc;
  r.k_real_socle = d.cs_S.k_real();
  r.k_real_group = d.cs_G.k_real();
  r.out = out_order(socle_desc);

  if (d.S.order() == d.G.order()) {
    r.k_real_quotient = 1;
  } else {
    auto qa = coset_action(d.G, d.S);
    auto cs_Q = conjugacy_classes(qa.image, 2'000'000, PermGroup::kDegreeCap);
    r.k_real_quotient = cs_Q.k_real();
  }

  r.k_real_outside = 0;
  for (const auto& row : d.table_G.rows)
    if (row.real && !row_kernel_contains_socle(row, d.fused_classes)) ++r.k_real_outside;

  r.equality = r.k_real_outside == r.k_real_group - r.k_real_quotient;
  r.group_bound = r.k_real_group * r.out >= r.k_real_socle;
  r.quotient_bound = r.k_real_quotient <= r.out;
  // k_real_outside >= k_real_socle/out - out, cross-multiplied by out
  r.lower_bound = i64(r.k_real_outside * r.out) >= i64(r.k_real_socle) - i64(r.out * r.out);
  return r;
}

// ---------------------------------------------------------------------------

struct ExtensionWitness {
  std::string socle, group;
  bool found = false;
  u64 degree = 0;
  std::vector<std::string> restricted_values;  // per socle class, canonical order
};

// searches the rational rows of G for one whose restriction to S is
// irreducible and non-principal
inline ExtensionWitness rational_extension_witness(const std::string& socle_desc,
                                                   const std::string& group_desc) {
  SoclePairData d = load_socle_pair(socle_desc, group_desc);
  ExtensionWitness w;
  w.socle = socle_desc;
  w.group = group_desc;
  std::vector<const CharRow*> candidates;
  for (const auto& row : d.table_G.rows)
    if (row.rational && row.degree > 1) candidates.push_back(&row);
  std::sort(candidates.begin(), candidates.end(),
            [](const CharRow* a, const CharRow* b) { return a->degree < b->degree; });
  for (const CharRow* row : candidates) {
    std::vector<CycValue> restricted;
    for (u32 c : d.fused_classes) restricted.push_back(row->values[c]);
    i128 norm = exact_weighted_norm_sum(restricted, d.socle_class_sizes, d.table_G.exponent);
    if (norm == i128(d.S.order())) {
      w.found = true;
      w.degree = row->degree;
      for (const auto& v : restricted) w.restricted_values.push_back(v.str());
      return w;
    }
  }
  return w;
}

}  // namespace realchar
