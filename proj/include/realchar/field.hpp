#pragma once

// Small finite fields GF(p^k), p^k <= 2^20.
//
// Elements are encoded as machine words: the residue c0 + c1*x + ... +
// c_{k-1}*x^{k-1} maps to the integer c0 + c1*p + ... + c_{k-1}*p^{k-1}, so
// the elements are exactly the integers in [0, p^k).  The modulus is the
// monic irreducible polynomial of degree k with the smallest such encoding;
// fixing that choice makes every build reproducible.  Multiplication runs on
// discrete-log tables over a stored generator.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "realchar/errors.hpp"
#include "realchar/intmath.hpp"

namespace realchar {

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
 public:
  using elem = u32;

  u64 char_p;    // characteristic
  u64 degree_k;  // extension degree
  u64 size_q;    // p^k
  elem modulus;  // encoding of the monic irreducible, degree k (leading digit included)
  elem gen;      // multiplicative generator, order q-1

  static FieldRef get(u64 p, u64 k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field: p is not prime");
    if (k < 1) throw std::invalid_argument("Field: degree must be >= 1");
    u64 q = 1;
    for (u64 i = 0; i < k; ++i) {
      q *= p;
      if (q > (1u << 20)) throw CapError("Field: p^k over the 2^20 cap");
    }
    static std::mutex mu;
    static std::map<std::pair<u64, u64>, FieldRef> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find({p, k});
    if (it != registry.end()) return it->second;
    FieldRef f(new Field(p, k, q));
    registry.emplace(std::make_pair(p, k), f);
    return f;
  }

  elem zero() const { return 0; }
  elem one() const { return 1; }

  elem add(elem a, elem b) const {
    if (char_p == 2) return a ^ b;
    elem r = 0, mul = 1;
    for (u64 i = 0; i < degree_k; ++i) {
      u64 da = (a / mul) % char_p, db = (b / mul) % char_p;
      r += elem(((da + db) % char_p) * mul);
      mul *= elem(char_p);
    }
    return r;
  }

  elem neg(elem a) const {
    if (char_p == 2) return a;
    elem r = 0, mul = 1;
    for (u64 i = 0; i < degree_k; ++i) {
      u64 da = (a / mul) % char_p;
      r += elem(((char_p - da) % char_p) * mul);
      mul *= elem(char_p);
    }
    return r;
  }

  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return pow_tab_[(u64(log_tab_[a]) + log_tab_[b]) % (size_q - 1)];
  }

  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("Field: inversion of zero");
    return pow_tab_[(size_q - 1 - log_tab_[a]) % (size_q - 1)];
  }

  elem pow(elem a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return pow_tab_[u64(u128(log_tab_[a]) * (e % (size_q - 1)) % (size_q - 1))];
  }

  elem frobenius(elem a) const { return pow(a, char_p); }

  // discrete log of a nonzero element with respect to the stored generator
  u64 log(elem a) const {
    if (a == 0) throw std::domain_error("Field: log of zero");
    return log_tab_[a];
  }

  elem from_log(u64 i) const { return pow_tab_[i % (size_q - 1)]; }

  u64 elem_order(elem a) const {
    if (a == 0) throw std::domain_error("Field: order of zero");
    return (size_q - 1) / std::gcd(size_q - 1, log_tab_[a]);
  }

 private:
  std::vector<elem> pow_tab_;  // i -> gen^i, length q-1
  std::vector<u32> log_tab_;   // element -> discrete log

  // --- construction-time polynomial arithmetic (no tables yet) ---

  std::vector<u32> decode(u64 v, u64 len) const {
    std::vector<u32> d(len);
    for (u64 i = 0; i < len; ++i) {
      d[i] = u32(v % char_p);
      v /= char_p;
    }
    return d;
  }

  static void trim(std::vector<u32>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  std::vector<u32> poly_mulmod(const std::vector<u32>& a, const std::vector<u32>& b,
                               const std::vector<u32>& f) const {
    std::vector<u32> prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j)
        prod[i + j] = u32((prod[i + j] + u64(a[i]) * b[j]) % char_p);
    }
    // f is monic of degree f.size()-1
    size_t df = f.size() - 1;
    for (size_t i = prod.size(); i-- > df;) {
      if (!prod[i]) continue;
      u32 c = prod[i];
      for (size_t j = 0; j <= df; ++j) {
        u64 sub = u64(c) * f[j] % char_p;
        prod[i - df + j] = u32((prod[i - df + j] + char_p - sub) % char_p);
      }
    }
    prod.resize(df);
    return prod;
  }

  std::vector<u32> poly_powmod_xq(const std::vector<u32>& f, u64 e_exp) const {
    // x^(p^e_exp) mod f by repeated p-th powering
    std::vector<u32> x{0, 1};
    std::vector<u32> r = poly_mulmod(x, {1}, f);
    for (u64 i = 0; i < e_exp; ++i) {
      // r := r^p mod f
      std::vector<u32> acc{1};
      std::vector<u32> base = r;
      u64 e = char_p;
      while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f);
        base = poly_mulmod(base, base, f);
        e >>= 1;
      }
      r = acc;
    }
    return r;
  }

  static std::vector<u32> poly_gcd(std::vector<u32> a, std::vector<u32> b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
      // a mod b
      while (a.size() >= b.size() && !a.empty()) {
        u64 lead_inv = powmod(b.back(), p - 2, p);
        u64 c = u64(a.back()) * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[shift + j] = u32((a[shift + j] + p - c * b[j] % p) % p);
        trim(a);
      }
      std::swap(a, b);
    }
    return a;
  }

  bool is_irreducible(const std::vector<u32>& f) const {
    u64 k = f.size() - 1;
    // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/t)) - x, f) = 1 per prime t | k
    std::vector<u32> xqk = poly_powmod_xq(f, k);
    std::vector<u32> x{0, 1};
    std::vector<u32> diff(std::max(xqk.size(), x.size()), 0);
    for (size_t i = 0; i < diff.size(); ++i) {
      u64 a = i < xqk.size() ? xqk[i] : 0, b = i < x.size() ? x[i] : 0;
      diff[i] = u32((a + char_p - b) % char_p);
    }
    trim(diff);
    if (!diff.empty()) return false;
    for (auto [t, e] : factorize_u64(k)) {
      std::vector<u32> xq = poly_powmod_xq(f, k / t);
      std::vector<u32> d2(std::max(xq.size(), x.size()), 0);
      for (size_t i = 0; i < d2.size(); ++i) {
        u64 a = i < xq.size() ? xq[i] : 0, b = i < x.size() ? x[i] : 0;
        d2[i] = u32((a + char_p - b) % char_p);
      }
      auto g = poly_gcd(d2, f, char_p);
      if (g.size() != 1) return false;
    }
    return true;
  }

  Field(u64 p, u64 k, u64 q) : char_p(p), degree_k(k), size_q(q) {
    if (k == 1) {
      modulus = elem(p);  // the polynomial x
    } else {
      modulus = 0;
      for (u64 low = 0; low < q; ++low) {
        u64 enc = q + low;  // monic: leading digit 1
        auto f = decode(enc, k + 1);
        if (is_irreducible(f)) {
          modulus = elem(enc);
          break;
        }
      }
      if (modulus == 0) throw IntegrityError("Field: no irreducible polynomial found");
    }

    // raw multiply for table construction
    auto fpoly = k == 1 ? std::vector<u32>{0, 1} : decode(modulus, k + 1);
    auto raw_mul = [&](elem a, elem b) -> elem {
      if (k == 1) return elem(u64(a) * b % p);
      auto r = poly_mulmod(decode(a, k), decode(b, k), fpoly);
      u64 enc = 0, m = 1;
      for (size_t i = 0; i < r.size(); ++i) {
        enc += r[i] * m;
        m *= p;
      }
      return elem(enc);
    };
    auto raw_pow = [&](elem a, u64 e) -> elem {
      elem r = 1;
      while (e) {
        if (e & 1) r = raw_mul(r, a);
        a = raw_mul(a, a);
        e >>= 1;
      }
      return r;
    };

    // smallest generator of the multiplicative group
    auto pf = factorize_u64(q - 1);
    gen = 0;
    for (elem g = 2; g < q; ++g) {
      bool ok = true;
      for (auto [pr, e] : pf)
        if (raw_pow(g, (q - 1) / pr) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
    if (gen == 0) {
      if (q == 2)
        gen = 1;
      else
        throw IntegrityError("Field: no generator found");
    }

    pow_tab_.resize(q - 1);
    log_tab_.assign(q, 0);
    elem cur = 1;
    for (u64 i = 0; i < q - 1; ++i) {
      pow_tab_[i] = cur;
      log_tab_[cur] = u32(i);
      cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw IntegrityError("Field: generator order mismatch");
  }
};

}  // namespace realchar
