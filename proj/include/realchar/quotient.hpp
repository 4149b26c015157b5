#pragma once

// Quotient groups G/N realized as permutation groups.
//
// Two realizations, tried in order:
//   1. restriction: if N is exactly the pointwise stabilizer of its own fixed
//      point set, G/N acts faithfully on those points (degree stays small);
//   2. coset action: right cosets of N, deduplicated by an orbit-pattern hash
//      plus membership sifting (index capped at 10^5).
// The image group always tracks witness words, so any image element can be
// pulled back to a source element by evaluating its word on the source
// generators (the generator map is index-to-index).

#include <unordered_map>

#include "realchar/group.hpp"

namespace realchar {

struct QuotientAction {
  const PermGroup* source = nullptr;  // non-owning; caller keeps G alive
  PermGroup kernel = PermGroup::trivial(1);
  PermGroup image = PermGroup::trivial(1);
  std::vector<Perm> image_gens;  // image of source generator i (may be identity)

  // apply the quotient map to one source element (needs the coset table or
  // the restriction point set)
  std::function<Perm(const Perm&)> project;

  // preimage of an image element, via its witness word
  Perm preimage(const Perm& image_elem) const {
    auto w = image.membership_word(image_elem);
    if (!w) throw std::invalid_argument("preimage: element not in quotient image");
    return PermGroup::eval_word_on(source->generators(), source->degree(), *w);
  }
};

namespace detail {

inline void check_normal(const PermGroup& G, const PermGroup& N) {
  if (N.degree() != G.degree()) throw std::invalid_argument("coset_action: degree mismatch");
  for (const auto& n : N.generators()) {
    if (!G.contains(n)) throw std::invalid_argument("coset_action: N is not a subgroup of G");
    for (const auto& g : G.generators())
      if (!N.contains(n.conj(g))) throw std::invalid_argument("coset_action: N is not normal in G");
  }
}

// points fixed by every generator of N
inline std::vector<u32> fixed_points(const PermGroup& N, u32 degree) {
  std::vector<u32> fp;
  for (u32 p = 0; p < degree; ++p) {
    bool fixed = true;
    for (const auto& g : N.generators())
      if (g[p] != p) {
        fixed = false;
        break;
      }
    if (fixed) fp.push_back(p);
  }
  return fp;
}

inline Perm restrict_to(const Perm& g, const std::vector<u32>& pts,
                        const std::vector<i64>& pos_of) {
  std::vector<point> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    i64 q = pos_of[g[pts[i]]];
    if (q < 0) throw IntegrityError("restrict_to: point set not invariant");
    img[i] = point(q);
  }
  return Perm(std::move(img));
}

}  // namespace detail

inline QuotientAction coset_action(const PermGroup& G, const PermGroup& N,
                                   u64 index_cap = 100000) {
  detail::check_normal(G, N);
  if (G.order() % N.order() != 0) throw IntegrityError("coset_action: order division");
  u64 index = G.order() / N.order();
  QuotientAction qa;
  qa.source = &G;
  qa.kernel = N;

  // trivial cases
  if (index == 1) {
    qa.image = PermGroup::trivial(1);
    qa.image_gens.assign(G.generators().size(), Perm(1));
    qa.project = [](const Perm&) { return Perm(1); };
    return qa;
  }

  // path 1: restriction to the fixed points of N
  {
    std::vector<u32> fp = detail::fixed_points(N, G.degree());
    if (!fp.empty()) {
      // the set must be G-invariant for the restriction to be defined
      bool invariant = true;
      std::vector<i64> pos_of(G.degree(), -1);
      for (size_t i = 0; i < fp.size(); ++i) pos_of[fp[i]] = i64(i);
      for (const auto& g : G.generators()) {
        for (u32 p : fp)
          if (pos_of[g[p]] < 0) {
            invariant = false;
            break;
          }
        if (!invariant) break;
      }
      if (invariant && G.pointwise_stabilizer(fp).order() == N.order()) {
        std::vector<Perm> igens;
        for (const auto& g : G.generators()) igens.push_back(detail::restrict_to(g, fp, pos_of));
        PermGroup image(u32(fp.size()), igens, /*track_words=*/true);
        if (image.order() != index) throw IntegrityError("coset_action: restriction image order");
        qa.image = std::move(image);
        qa.image_gens = std::move(igens);
        qa.project = [fp, pos_of](const Perm& g) { return detail::restrict_to(g, fp, pos_of); };
        return qa;
      }
    }
  }

  // path 2: explicit action on right cosets N*g
  if (index > index_cap) throw CapError("coset_action: index over cap");

  // orbit-pattern invariant of the coset N*g: images of N's orbits as sets
  std::vector<i64> orbit_id(G.degree(), -1);
  std::vector<std::vector<u32>> norbits;
  for (u32 p = 0; p < G.degree(); ++p) {
    if (orbit_id[p] >= 0) continue;
    std::vector<u32> orb{p};
    orbit_id[p] = i64(norbits.size());
    for (size_t qi = 0; qi < orb.size(); ++qi)
      for (const auto& g : N.generators()) {
        u32 q = g[orb[qi]];
        if (orbit_id[q] < 0) {
          orbit_id[q] = i64(norbits.size());
          orb.push_back(q);
        }
      }
    norbits.push_back(std::move(orb));
  }
  auto coset_key = [&](const Perm& g) {
    u64 h = 1469598103934665603ULL;
    for (const auto& orb : norbits) {
      std::vector<u32> img;
      img.reserve(orb.size());
      for (u32 p : orb) img.push_back(g[p]);
      std::sort(img.begin(), img.end());
      for (u32 v : img) {
        h ^= v;
        h *= 1099511628211ULL;
      }
    }
    return h;
  };

  std::vector<Perm> reps{Perm(G.degree())};
  std::unordered_multimap<u64, u32> by_key;
  by_key.emplace(coset_key(reps[0]), 0);
  auto find_coset = [&](const Perm& g) -> i64 {
    auto range = by_key.equal_range(coset_key(g));
    for (auto it = range.first; it != range.second; ++it)
      if (N.contains(g * reps[it->second].inverse())) return i64(it->second);
    return -1;
  };

  const auto& gens = G.generators();
  std::vector<std::vector<point>> action(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) action[i].resize(1);
  for (size_t ci = 0; ci < reps.size(); ++ci) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = reps[ci] * gens[gi];
      i64 idx = find_coset(next);
      if (idx < 0) {
        idx = i64(reps.size());
        if (u64(idx) >= index_cap) throw CapError("coset_action: index over cap");
        by_key.emplace(coset_key(next), u32(idx));
        reps.push_back(std::move(next));
        for (auto& col : action) col.resize(reps.size());
      }
      action[gi][ci] = point(idx);
    }
  }
  if (reps.size() != index) throw IntegrityError("coset_action: coset count mismatch");

  std::vector<Perm> igens;
  for (auto& col : action) igens.emplace_back(std::move(col));
  PermGroup image(u32(reps.size()), igens, /*track_words=*/true);
  if (image.order() != index) throw IntegrityError("coset_action: image order mismatch");

  qa.image = std::move(image);
  qa.image_gens = std::move(igens);
  // keep what the projection lambda needs alive by value
  auto reps_ptr = std::make_shared<std::vector<Perm>>(std::move(reps));
  auto nref = std::make_shared<PermGroup>(N);
  auto key_ptr = std::make_shared<std::decay_t<decltype(by_key)>>(std::move(by_key));
  auto norb_ptr = std::make_shared<std::vector<std::vector<u32>>>(std::move(norbits));
  qa.project = [reps_ptr, nref, key_ptr, norb_ptr](const Perm& g) {
    auto key_of = [&](const Perm& x) {
      u64 h = 1469598103934665603ULL;
      for (const auto& orb : *norb_ptr) {
        std::vector<u32> img;
        img.reserve(orb.size());
        for (u32 p : orb) img.push_back(x[p]);
        std::sort(img.begin(), img.end());
        for (u32 v : img) {
          h ^= v;
          h *= 1099511628211ULL;
        }
      }
      return h;
    };
    std::vector<point> img((*reps_ptr).size());
    for (size_t ci = 0; ci < reps_ptr->size(); ++ci) {
      Perm next = (*reps_ptr)[ci] * g;
      auto range = key_ptr->equal_range(key_of(next));
      i64 idx = -1;
      for (auto it = range.first; it != range.second; ++it)
        if (nref->contains(next * (*reps_ptr)[it->second].inverse())) {
          idx = i64(it->second);
          break;
        }
      if (idx < 0) throw std::invalid_argument("project: element not in source group");
      img[ci] = point(idx);
    }
    return Perm(std::move(img));
  };
  return qa;
}

}  // namespace realchar
