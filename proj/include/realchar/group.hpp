#pragma once

// Permutation groups with deterministic Schreier-Sims stabilizer chains.
// Supplies order, membership (optionally with a word witness in the original
// generators), deterministic element enumeration, pointwise stabilizers,
// normal closures, derived series and the product constructions.

#include <functional>
#include <optional>
#include <vector>

#include "realchar/errors.hpp"
#include "realchar/perm.hpp"

namespace realchar {

// word in group generators: signed 1-based indices, applied left to right;
// a negative entry means the inverse of that generator
using Word = std::vector<std::int32_t>;

inline Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

class PermGroup {
 public:
  static constexpr u32 kDegreeCap = 1024;

  PermGroup(u32 degree, std::vector<Perm> generators, bool track_words = false,
            std::vector<u32> base_prefix = {})
      : degree_(degree), words_on_(track_words) {
    if (degree_ > kDegreeCap) throw CapError("PermGroup: degree over the 1024 cap");
    for (auto& g : generators) {
      if (g.degree() != degree_)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    build_chain(base_prefix);
  }

  static PermGroup trivial(u32 degree) { return PermGroup(degree, {}); }

  u32 degree() const { return degree_; }
  u64 order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool tracks_words() const { return words_on_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::vector<u32> base() const {
    std::vector<u32> b;
    for (const auto& L : levels_) b.push_back(L.b);
    return b;
  }

  bool contains(const Perm& x) const {
    if (x.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
    Perm h = x;
    for (const auto& L : levels_) {
      point p = h[L.b];
      if (!L.in_orbit[p]) return false;
      h = h * L.trans[p].inverse();
    }
    return h.is_identity();
  }

  // word in the original generators evaluating to x (requires word tracking)
  std::optional<Word> membership_word(const Perm& x) const {
    if (!words_on_) throw std::logic_error("membership_word: group built without word tracking");
    if (x.degree() != degree_) throw std::invalid_argument("membership_word: degree mismatch");
    Perm h = x;
    std::vector<const Word*> used;
    for (const auto& L : levels_) {
      point p = h[L.b];
      if (!L.in_orbit[p]) return std::nullopt;
      h = h * L.trans[p].inverse();
      used.push_back(&L.twords[p]);
    }
    if (!h.is_identity()) return std::nullopt;
    Word w;
    for (auto it = used.rbegin(); it != used.rend(); ++it)
      w.insert(w.end(), (*it)->begin(), (*it)->end());
    return w;
  }

  Perm eval_word(const Word& w) const { return eval_word_on(gens_, degree_, w); }

  static Perm eval_word_on(const std::vector<Perm>& gens, u32 degree, const Word& w) {
    Perm r(degree);
    for (auto idx : w) {
      if (idx == 0 || size_t(std::abs(idx)) > gens.size())
        throw std::invalid_argument("eval_word: index out of range");
      const Perm& g = gens[std::abs(idx) - 1];
      r = idx > 0 ? r * g : r * g.inverse();
    }
    return r;
  }

  // deterministic traversal of all elements (product of transversal reps,
  // deepest level first)
  void for_each_element(const std::function<void(const Perm&)>& fn) const {
    if (levels_.empty()) {
      fn(Perm(degree_));
      return;
    }
    walk(int(levels_.size()) - 1, Perm(degree_), fn);
  }

  std::vector<Perm> elements(u64 cap = 10'000'000) const {
    if (order_ > cap) throw CapError("elements: order over enumeration cap");
    std::vector<Perm> out;
    out.reserve(size_t(order_));
    for_each_element([&](const Perm& p) { out.push_back(p); });
    return out;
  }

  // subgroup fixing every point of pts, as a group on the same degree
  PermGroup pointwise_stabilizer(const std::vector<u32>& pts) const {
    PermGroup rebased(degree_, gens_, false, pts);
    if (rebased.levels_.size() < pts.size()) return trivial(degree_);
    return PermGroup(degree_, rebased.levels_.size() == pts.size()
                                  ? std::vector<Perm>{}
                                  : rebased.levels_[pts.size()].gens);
  }

 private:
  struct Level {
    u32 b = 0;
    std::vector<Perm> gens;
    std::vector<Word> gwords;
    std::vector<u32> orbit;        // discovery order
    std::vector<char> in_orbit;    // degree-sized
    std::vector<Perm> trans;       // degree-sized; trans[p] maps b -> p
    std::vector<Word> twords;      // degree-sized (only when words tracked)
  };

  u32 degree_;
  bool words_on_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  u64 order_ = 1;

  void walk(int lvl, const Perm& acc, const std::function<void(const Perm&)>& fn) const {
    if (lvl < 0) {
      fn(acc);
      return;
    }
    const Level& L = levels_[lvl];
    for (u32 p : L.orbit) walk(lvl - 1, acc * L.trans[p], fn);
  }

  void bfs_orbit(Level& L) {
    L.orbit.clear();
    L.in_orbit.assign(degree_, 0);
    L.trans.assign(degree_, Perm());
    if (words_on_) L.twords.assign(degree_, Word());
    L.orbit.push_back(L.b);
    L.in_orbit[L.b] = 1;
    L.trans[L.b] = Perm(degree_);
    for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
      u32 pt = L.orbit[qi];
      for (size_t gi = 0; gi < L.gens.size(); ++gi) {
        point q = L.gens[gi][pt];
        if (!L.in_orbit[q]) {
          L.in_orbit[q] = 1;
          L.orbit.push_back(q);
          L.trans[q] = L.trans[pt] * L.gens[gi];
          if (words_on_) {
            L.twords[q] = L.twords[pt];
            const Word& gw = L.gwords[gi];
            L.twords[q].insert(L.twords[q].end(), gw.begin(), gw.end());
          }
        }
      }
    }
  }

  // strip h through levels [from, end); returns残 residue and the level reached
  std::pair<Perm, size_t> strip(Perm h, size_t from, Word* hw) const {
    for (size_t l = from; l < levels_.size(); ++l) {
      const Level& L = levels_[l];
      point p = h[L.b];
      if (!L.in_orbit[p]) return {h, l};
      h = h * L.trans[p].inverse();
      if (hw) {
        Word iw = inverse_word(L.twords[p]);
        hw->insert(hw->end(), iw.begin(), iw.end());
      }
    }
    return {h, levels_.size()};
  }

  void build_chain(const std::vector<u32>& base_prefix) {
    levels_.clear();
    order_ = 1;
    if (gens_.empty() && base_prefix.empty()) return;

    // initial levels: prescribed prefix first, then smallest moved points
    std::vector<Perm> cur = gens_;
    std::vector<Word> curw;
    if (words_on_)
      for (size_t i = 0; i < gens_.size(); ++i) curw.push_back({std::int32_t(i + 1)});
    size_t prefix_used = 0;
    while (!cur.empty() || prefix_used < base_prefix.size()) {
      u32 b;
      if (prefix_used < base_prefix.size()) {
        b = base_prefix[prefix_used++];
        if (b >= degree_) throw std::invalid_argument("base prefix point out of range");
      } else {
        b = degree_;
        for (const auto& g : cur) b = std::min(b, g.smallest_moved_point());
        if (b == degree_) break;  // all remaining generators trivial
      }
      Level L;
      L.b = b;
      L.gens = cur;
      L.gwords = curw;
      levels_.push_back(std::move(L));
      bfs_orbit(levels_.back());
      std::vector<Perm> next;
      std::vector<Word> nextw;
      for (size_t i = 0; i < cur.size(); ++i)
        if (cur[i][b] == b) {
          next.push_back(cur[i]);
          if (words_on_) nextw.push_back(curw[i]);
        }
      cur = std::move(next);
      curw = std::move(nextw);
    }

    if (levels_.empty()) return;

    // deterministic Schreier-Sims: verify each level bottom-up, restarting at
    // the level where a new strong generator lands
    int i = int(levels_.size()) - 1;
    while (i >= 0) {
      bool clean = true;
      for (size_t oi = 0; oi < levels_[i].orbit.size() && clean; ++oi) {
        for (size_t gi = 0; gi < levels_[i].gens.size() && clean; ++gi) {
          u32 beta = levels_[i].orbit[oi];
          const Perm x = levels_[i].gens[gi];
          point xbeta = x[beta];
          Perm g = levels_[i].trans[beta] * x * levels_[i].trans[xbeta].inverse();
          if (g.is_identity()) continue;
          Word gw;
          Word* gwp = nullptr;
          if (words_on_) {
            gw = levels_[i].twords[beta];
            const Word& xw = levels_[i].gwords[gi];
            gw.insert(gw.end(), xw.begin(), xw.end());
            Word iw = inverse_word(levels_[i].twords[xbeta]);
            gw.insert(gw.end(), iw.begin(), iw.end());
            gwp = &gw;
          }
          auto [h, j] = strip(std::move(g), size_t(i) + 1, gwp);
          if (h.is_identity()) continue;
          if (j == levels_.size()) {
            Level L;
            L.b = h.smallest_moved_point();
            levels_.push_back(std::move(L));
            bfs_orbit(levels_.back());
          }
          for (size_t l = size_t(i) + 1; l <= j; ++l) {
            levels_[l].gens.push_back(h);
            if (words_on_) levels_[l].gwords.push_back(gw);
            bfs_orbit(levels_[l]);
          }
          i = int(j);
          clean = false;
        }
      }
      if (clean) --i;
    }

    order_ = 1;
    for (const auto& L : levels_) order_ *= L.orbit.size();
  }
};

// ---------------------------------------------------------------------------
// derived constructions

inline PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seeds) {
  for (const auto& s : seeds)
    if (!G.contains(s)) throw std::invalid_argument("normal_closure: seed not in group");
  std::vector<Perm> hgens;
  for (const auto& s : seeds)
    if (!s.is_identity()) hgens.push_back(s);
  PermGroup H(G.degree(), hgens);
  std::vector<Perm> queue = hgens;
  while (!queue.empty()) {
    Perm s = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : G.generators()) {
      Perm c = s.conj(g);
      if (!H.contains(c)) {
        hgens.push_back(c);
        queue.push_back(std::move(c));
        H = PermGroup(G.degree(), hgens);
      }
    }
  }
  return H;
}

inline PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Perm> seeds;
  const auto& gs = G.generators();
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(G, seeds);
}

inline std::vector<PermGroup> derived_series(const PermGroup& G) {
  std::vector<PermGroup> series{G};
  for (int guard = 0; guard < 64; ++guard) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().is_trivial()) break;
  }
  return series;
}

inline bool is_solvable(const PermGroup& G) { return derived_series(G).back().is_trivial(); }

inline Perm embed_left(const Perm& a, u32 total) {
  std::vector<point> img(total);
  for (u32 i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (u32 i = a.degree(); i < total; ++i) img[i] = point(i);
  return Perm(std::move(img));
}

inline Perm embed_right(const Perm& b, u32 offset, u32 total) {
  std::vector<point> img(total);
  for (u32 i = 0; i < offset; ++i) img[i] = point(i);
  for (u32 i = 0; i < b.degree(); ++i) img[offset + i] = point(offset + b[i]);
  return Perm(std::move(img));
}

// point numbering: left factor first
inline PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  u32 total = A.degree() + B.degree();
  std::vector<Perm> gens;
  for (const auto& g : A.generators()) gens.push_back(embed_left(g, total));
  for (const auto& g : B.generators()) gens.push_back(embed_right(g, A.degree(), total));
  PermGroup P(total, gens);
  if (P.order() != A.order() * B.order())
    throw IntegrityError("direct_product: order mismatch");
  return P;
}

// (A x A) : C2 with the coordinate swap; order 2|A|^2
inline PermGroup wreath_c2(const PermGroup& A) {
  u32 n = A.degree(), total = 2 * n;
  std::vector<Perm> gens;
  for (const auto& g : A.generators()) gens.push_back(embed_left(g, total));
  std::vector<point> swap_img(total);
  for (u32 i = 0; i < n; ++i) {
    swap_img[i] = point(i + n);
    swap_img[i + n] = point(i);
  }
  gens.emplace_back(std::move(swap_img));
  PermGroup W(total, gens);
  if (W.order() != 2 * A.order() * A.order())
    throw IntegrityError("wreath_c2: order mismatch");
  return W;
}

}  // namespace realchar
