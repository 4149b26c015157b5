#pragma once

// Conjugacy classes by full-enumeration orbit partition: every group element
// is stored in a flat arena with an open-addressing index, then classes are
// the orbits of conjugation by the generators.  Representatives are the
// lexicographically smallest members, and classes are ordered by (element
// order, class size, representative), so the output is stable across runs.
//
// Caps: |G| <= 2*10^6 and degree <= 300.

#include <map>
#include <memory>

#include "realchar/group.hpp"

namespace realchar {

class ElementIndex {
 public:
  ElementIndex(const PermGroup& G, u64 order_cap, u32 degree_cap) : degree_(G.degree()) {
    if (G.order() > order_cap)
      throw CapError("conjugacy classes: too large for enumeration (order cap " +
                     std::to_string(order_cap) + ")");
    if (G.degree() > degree_cap)
      throw CapError("conjugacy classes: too large for enumeration (degree cap " +
                     std::to_string(degree_cap) + ")");
    n_ = G.order();
    data_.reserve(size_t(n_) * degree_);
    u64 slots = 4;
    while (slots < 2 * n_) slots <<= 1;
    mask_ = slots - 1;
    table_.assign(size_t(slots), kEmpty);
    u64 count = 0;
    G.for_each_element([&](const Perm& p) {
      const auto& img = p.images();
      data_.insert(data_.end(), img.begin(), img.end());
      insert(count++);
    });
    if (count != n_) throw IntegrityError("ElementIndex: enumeration size mismatch");
    class_of.assign(size_t(n_), kUnassigned);
  }

  u64 size() const { return n_; }
  u32 degree() const { return degree_; }

  const point* raw(u64 i) const { return data_.data() + size_t(i) * degree_; }

  Perm get(u64 i) const {
    return Perm(std::vector<point>(raw(i), raw(i) + degree_));
  }

  i64 find_raw(const point* buf) const {
    u64 h = hash_buf(buf) & mask_;
    while (table_[h] != kEmpty) {
      if (std::equal(buf, buf + degree_, raw(table_[h]))) return i64(table_[h]);
      h = (h + 1) & mask_;
    }
    return -1;
  }

  i64 find(const Perm& p) const { return find_raw(p.images().data()); }

  u32 class_of_perm(const Perm& p) const {
    i64 i = find(p);
    if (i < 0) throw std::invalid_argument("class_of_perm: element not in group");
    return class_of[size_t(i)];
  }

  static constexpr u32 kEmpty = 0xffffffffu;
  static constexpr u32 kUnassigned = 0xffffffffu;
  std::vector<u32> class_of;

 private:
  u32 degree_;
  u64 n_ = 0;
  std::vector<point> data_;
  std::vector<u32> table_;
  u64 mask_ = 0;

  u64 hash_buf(const point* buf) const {
    u64 h = 1469598103934665603ULL;
    for (u32 i = 0; i < degree_; ++i) {
      h ^= buf[i];
      h *= 1099511628211ULL;
    }
    return h;
  }

  void insert(u64 idx) {
    u64 h = hash_buf(raw(idx)) & mask_;
    while (table_[h] != kEmpty) {
      if (std::equal(raw(idx), raw(idx) + degree_, raw(table_[h])))
        throw IntegrityError("ElementIndex: duplicate element in enumeration");
      h = (h + 1) & mask_;
    }
    table_[h] = u32(idx);
  }
};

struct ClassInfo {
  Perm rep;
  u64 size = 0;
  u64 order = 0;
  bool real = false;
  bool rational = false;
  u32 inverse_class = 0;
};

class ClassSet {
 public:
  u64 group_order = 0;
  u32 degree = 0;
  u64 exponent = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<u32>> power_class;  // [j][s] = class of rep_j^s, s in [0, order_j)
  // induced maps on class indices for generators of (Z/eZ)^* and for -1
  std::vector<std::pair<u64, std::vector<u32>>> stored_power_maps;
  std::shared_ptr<ElementIndex> elements;  // heavyweight; reset() when done

  u64 k_real() const {
    u64 k = 0;
    for (const auto& c : classes) k += c.real;
    return k;
  }

  u64 k_rational() const {
    u64 k = 0;
    for (const auto& c : classes) k += c.rational;
    return k;
  }

  u64 class_count() const { return classes.size(); }

  // set of orders of real elements
  std::vector<u64> real_element_orders() const {
    std::vector<u64> orders;
    for (const auto& c : classes)
      if (c.real) orders.push_back(c.order);
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
  }

  u64 real_classes_of_order(u64 m) const {
    u64 k = 0;
    for (const auto& c : classes) k += (c.real && c.order == m);
    return k;
  }

  // no real element of order 2m with m > 1 odd
  bool is_c_group() const {
    for (const auto& c : classes)
      if (c.real && c.order > 2 && c.order % 2 == 0 && (c.order / 2) % 2 == 1) return false;
    return true;
  }

  // element order -> number of elements of that order
  std::map<u64, u64> order_histogram() const {
    std::map<u64, u64> h;
    for (const auto& c : classes) h[c.order] += c.size;
    return h;
  }

  std::vector<u32> power_map(u64 m) const {
    std::vector<u32> out(classes.size());
    for (size_t j = 0; j < classes.size(); ++j)
      out[j] = power_class[j][size_t(m % classes[j].order)];
    return out;
  }
};

inline ClassSet conjugacy_classes(const PermGroup& G, u64 order_cap = 2'000'000,
                                  u32 degree_cap = 300) {
  ClassSet cs;
  cs.group_order = G.order();
  cs.degree = G.degree();
  cs.elements = std::make_shared<ElementIndex>(G, order_cap, degree_cap);
  ElementIndex& idx = *cs.elements;
  const u64 n = idx.size();
  const u32 deg = idx.degree();

  // conjugation orbit partition
  std::vector<point> buf(deg);
  std::vector<u64> queue;
  struct RawClass {
    u64 rep_index;
    u64 size;
  };
  std::vector<RawClass> raw_classes;
  for (u64 i = 0; i < n; ++i) {
    if (idx.class_of[size_t(i)] != ElementIndex::kUnassigned) continue;
    u32 cid = u32(raw_classes.size());
    idx.class_of[size_t(i)] = cid;
    queue.assign(1, i);
    u64 rep = i, size = 1;
    while (!queue.empty()) {
      u64 m = queue.back();
      queue.pop_back();
      const point* x = idx.raw(m);
      for (const auto& g : G.generators()) {
        const auto& gi = g.images();
        for (u32 p = 0; p < deg; ++p) buf[gi[p]] = gi[x[p]];
        i64 c = idx.find_raw(buf.data());
        if (c < 0) throw IntegrityError("conjugacy_classes: conjugate not found");
        if (idx.class_of[size_t(c)] == ElementIndex::kUnassigned) {
          idx.class_of[size_t(c)] = cid;
          queue.push_back(u64(c));
          ++size;
          if (std::lexicographical_compare(idx.raw(u64(c)), idx.raw(u64(c)) + deg,
                                           idx.raw(rep), idx.raw(rep) + deg))
            rep = u64(c);
        }
      }
    }
    raw_classes.push_back({rep, size});
  }

  // canonical ordering: (element order, class size, representative)
  struct Keyed {
    u64 order;
    u64 size;
    u64 rep_index;
    u32 old_id;
  };
  std::vector<Keyed> keyed;
  for (u32 c = 0; c < raw_classes.size(); ++c) {
    Perm rep = idx.get(raw_classes[c].rep_index);
    keyed.push_back({rep.order(), raw_classes[c].size, raw_classes[c].rep_index, c});
  }
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return std::lexicographical_compare(idx.raw(a.rep_index), idx.raw(a.rep_index) + deg,
                                        idx.raw(b.rep_index), idx.raw(b.rep_index) + deg);
  });
  std::vector<u32> new_id(raw_classes.size());
  for (u32 j = 0; j < keyed.size(); ++j) new_id[keyed[j].old_id] = j;
  for (auto& c : idx.class_of) c = new_id[c];

  u64 total = 0;
  for (const auto& k : keyed) {
    ClassInfo ci;
    ci.rep = idx.get(k.rep_index);
    ci.size = k.size;
    ci.order = k.order;
    cs.classes.push_back(std::move(ci));
    total += k.size;
    cs.exponent = std::lcm(cs.exponent, k.order);
  }
  if (total != n) throw IntegrityError("conjugacy_classes: sizes do not sum to |G|");

  // power maps on class indices
  cs.power_class.resize(cs.classes.size());
  for (size_t j = 0; j < cs.classes.size(); ++j) {
    u64 o = cs.classes[j].order;
    auto& row = cs.power_class[j];
    row.resize(size_t(o));
    row[0] = 0;  // identity class sorts first
    Perm p(deg);
    for (u64 s = 1; s < o; ++s) {
      p = p * cs.classes[j].rep;
      row[size_t(s)] = idx.class_of_perm(p);
    }
  }
  for (size_t j = 0; j < cs.classes.size(); ++j) {
    u64 o = cs.classes[j].order;
    auto& ci = cs.classes[j];
    ci.inverse_class = o == 1 ? u32(j) : cs.power_class[j][size_t(o - 1)];
    ci.real = ci.inverse_class == u32(j);
    ci.rational = true;
    for (u64 s = 1; s < o; ++s)
      if (std::gcd(s, o) == 1 && cs.power_class[j][size_t(s)] != j) {
        ci.rational = false;
        break;
      }
  }

  for (u64 m : unit_group_generators(cs.exponent)) cs.stored_power_maps.emplace_back(m, cs.power_map(m));
  cs.stored_power_maps.emplace_back(cs.exponent - 1 == 0 ? 1 : cs.exponent - 1,
                                    cs.power_map(cs.exponent - 1 == 0 ? 1 : cs.exponent - 1));

  // structural sanity
  for (const auto& c : cs.classes) {
    if (cs.group_order % c.size != 0)
      throw IntegrityError("conjugacy_classes: class size does not divide |G|");
    if (c.rational && !c.real) throw IntegrityError("conjugacy_classes: rational but not real");
  }
  if (cs.classes[0].order != 1 || cs.classes[0].size != 1)
    throw IntegrityError("conjugacy_classes: identity class not first");
  return cs;
}

// (number of real classes, set of real element orders, number of rational classes)
struct RealData {
  u64 k_real;
  std::vector<u64> real_orders;
  u64 k_rational;
};

inline RealData real_data(const ClassSet& cs) {
  return {cs.k_real(), cs.real_element_orders(), cs.k_rational()};
}

}  // namespace realchar
