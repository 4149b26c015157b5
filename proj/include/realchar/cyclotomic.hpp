#pragma once

// Character values as eigenvalue multisets: a value at a class of element
// order o is sum_t mult[t] * zeta_o^t with nonnegative integer multiplicities
// summing to the character degree.  This representation is canonical for the
// construction (the multiset of eigenvalues of a representing matrix), so
// equality, conjugation, the Galois action and reality/rationality tests are
// plain vector operations.  Exact rational-integer sums are extracted through
// traces of roots of unity (Ramanujan's closed form).

#include <vector>

#include "realchar/errors.hpp"
#include "realchar/intmath.hpp"

namespace realchar {

struct CycValue {
  u64 order = 1;          // conductor: the order of the class representative
  std::vector<u64> mult;  // length `order`; multiplicity of zeta^t

  CycValue() : mult{0} {}
  CycValue(u64 o, std::vector<u64> m) : order(o), mult(std::move(m)) {
    if (mult.size() != order) throw std::invalid_argument("CycValue: length mismatch");
  }

  static CycValue integer(u64 n) {
    CycValue v;
    v.order = 1;
    v.mult = {n};
    return v;
  }

  u64 total() const {
    u64 s = 0;
    for (u64 m : mult) s += m;
    return s;
  }

  CycValue conjugate() const {
    CycValue r;
    r.order = order;
    r.mult.resize(order);
    for (u64 t = 0; t < order; ++t) r.mult[(order - t) % order] = mult[t];
    return r;
  }

  // zeta^t -> zeta^(j t); requires gcd(j, order) = 1
  CycValue galois(u64 j) const {
    if (std::gcd(j % order, order) != 1)
      throw std::invalid_argument("CycValue::galois: j not coprime to order");
    CycValue r;
    r.order = order;
    r.mult.assign(order, 0);
    for (u64 t = 0; t < order; ++t) r.mult[(t * (j % order)) % order] += mult[t];
    return r;
  }

  bool is_real() const {
    for (u64 t = 0; t < order; ++t)
      if (mult[t] != mult[(order - t) % order]) return false;
    return true;
  }

  bool is_rational() const {
    for (u64 j : unit_group_generators(order))
      if (!(galois(j) == *this)) return false;
    return true;
  }

  // exact test: the value equals the rational integer n
  // (a sum of `total` roots of unity equals `total` only if every root is 1)
  bool equals_integer(u64 n) const {
    if (mult[0] != n) return false;
    for (u64 t = 1; t < order; ++t)
      if (mult[t] != 0) return false;
    return true;
  }

  friend bool operator==(const CycValue& a, const CycValue& b) {
    return a.order == b.order && a.mult == b.mult;
  }
  friend bool operator<(const CycValue& a, const CycValue& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.mult < b.mult;
  }

  // Tr over Q(zeta_order)/Q, an exact rational integer
  i128 trace() const {
    i128 s = 0;
    for (u64 t = 0; t < order; ++t)
      if (mult[t]) s += i128(mult[t]) * root_of_unity_trace(order, t);
    return s;
  }

  // coefficient vector of value * conj(value) in Z[x]/(x^order - 1)
  std::vector<u64> norm_square_coeffs() const {
    std::vector<u64> c(order, 0);
    for (u64 s = 0; s < order; ++s) {
      if (!mult[s]) continue;
      for (u64 t = 0; t < order; ++t) {
        if (!mult[t]) continue;
        c[(s + order - t) % order] += mult[s] * mult[t];
      }
    }
    return c;
  }

  // Tr over Q(zeta_order)/Q of |value|^2
  i128 norm_square_trace() const {
    auto c = norm_square_coeffs();
    i128 s = 0;
    for (u64 t = 0; t < order; ++t)
      if (c[t]) s += i128(c[t]) * root_of_unity_trace(order, t);
    return s;
  }

  std::string str() const {
    if (equals_integer(mult[0])) return std::to_string(mult[0]);
    std::string s;
    bool first = true;
    for (u64 t = 0; t < order; ++t) {
      if (!mult[t]) continue;
      if (!first) s += "+";
      first = false;
      if (t == 0) {
        s += std::to_string(mult[t]);
      } else {
        if (mult[t] != 1) s += std::to_string(mult[t]) + "*";
        s += "z" + std::to_string(order);
        if (t != 1) s += "^" + std::to_string(t);
      }
    }
    return s.empty() ? "0" : s;
  }
};

}  // namespace realchar
