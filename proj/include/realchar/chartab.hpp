#pragma once

// Exact character tables by the Dixon-Schneider modular method.
//
// The class-sum structure constants are diagonalized over F_p for a prime
// p ≡ 1 (mod exp(G)) with p > 2*sqrt(|G|); each one-dimensional common
// eigenspace is a central character, degrees are recovered from the
// orthogonality relation (square root mod p, unique below p/2), and values
// lift to eigenvalue multisets by discrete Fourier inversion over the power
// map of each class.  Orthogonality is re-verified in exact integer
// arithmetic: the weighted norm sums are Galois-invariant algebraic integers,
// so each equals its trace divided by phi of the conductor.

#include <random>

#include "realchar/classes.hpp"
#include "realchar/cyclotomic.hpp"

namespace realchar {

struct SplitError : std::runtime_error {
  explicit SplitError(const std::string& m) : std::runtime_error(m) {}
};

struct CharRow {
  u64 degree = 0;
  std::vector<CycValue> values;  // one per class, canonical class order
  bool real = false;
  bool rational = false;
};

struct CharTable {
  u64 group_order = 0;
  u64 exponent = 1;
  u64 prime = 0;
  std::vector<u64> class_sizes;
  std::vector<u64> class_orders;
  std::vector<u32> inverse_class;
  std::vector<CharRow> rows;

  u64 k_real() const {
    u64 k = 0;
    for (const auto& r : rows) k += r.real;
    return k;
  }
  u64 k_rational() const {
    u64 k = 0;
    for (const auto& r : rows) k += r.rational;
    return k;
  }
};

// smallest prime p ≡ 1 (mod e) with p > 2*sqrt(|G|)
inline u64 dixon_prime(u64 group_order, u64 exponent) {
  u64 p = exponent + 1;
  while (u128(p) * p <= u128(4) * group_order || !is_prime_u64(p)) p += exponent;
  return p;
}

// structure constants a[i][j*k+t] = #{(x,y) in C_i x C_j : x*y = z_t}
inline std::vector<std::vector<u64>> class_matrices(const ClassSet& cs) {
  if (!cs.elements) throw std::logic_error("class_matrices: element index dropped");
  const ElementIndex& idx = *cs.elements;
  const size_t k = cs.classes.size();
  const u32 deg = idx.degree();
  std::vector<std::vector<u64>> A(k, std::vector<u64>(k * k, 0));
  std::vector<point> buf(deg);
  for (size_t t = 0; t < k; ++t) {
    const auto& zimg = cs.classes[t].rep.images();
    for (u64 e = 0; e < idx.size(); ++e) {
      const point* x = idx.raw(e);
      for (u32 pp = 0; pp < deg; ++pp) buf[x[pp]] = zimg[pp];  // y = x^{-1} z
      i64 y = idx.find_raw(buf.data());
      if (y < 0) throw IntegrityError("class_matrices: product left the group");
      u32 i = idx.class_of[size_t(e)];
      u32 j = idx.class_of[size_t(y)];
      A[i][j * k + t] += 1;
    }
  }
  // counting identities
  for (size_t i = 0; i < k; ++i)
    for (size_t t = 0; t < k; ++t) {
      u64 row_sum = 0;
      for (size_t j = 0; j < k; ++j) row_sum += A[i][j * k + t];
      if (row_sum != cs.classes[i].size)
        throw IntegrityError("class_matrices: row sum identity failed");
    }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      u128 weighted = 0;
      for (size_t t = 0; t < k; ++t) weighted += u128(A[i][j * k + t]) * cs.classes[t].size;
      if (weighted != u128(cs.classes[i].size) * cs.classes[j].size)
        throw IntegrityError("class_matrices: weighted sum identity failed");
    }
  return A;
}

namespace dixon_detail {

inline u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (powmod(a, (p - 1) / 2, p) != 1) throw IntegrityError("sqrt_mod: not a quadratic residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1, s = 0;
  while (!(q & 1)) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 t2 = t, i = 0;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
      if (i == m) throw IntegrityError("sqrt_mod: element not a residue");
    }
    u64 b = powmod(c, u64(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// ---- dense polynomials over F_p, low degree first ----

using Poly = std::vector<u64>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return c;
}

inline Poly poly_mod(Poly a, const Poly& f, u64 p) {
  poly_trim(a);
  u64 lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - f.size();
    for (size_t j = 0; j < f.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    poly_trim(a);
  }
  return a;
}

// quotient of exact division a / f
inline Poly poly_div(Poly a, const Poly& f, u64 p) {
  poly_trim(a);
  if (a.size() < f.size()) return {};
  Poly q(a.size() - f.size() + 1, 0);
  u64 lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - f.size();
    q[shift] = c;
    for (size_t j = 0; j < f.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mulmod(c, f[j], p)) % p;
    poly_trim(a);
  }
  return q;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
    base = poly_mod(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_derivative(const Poly& a, u64 p) {
  Poly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
  poly_trim(d);
  return d;
}

// all roots of a squarefree polynomial that splits into linear factors
inline void poly_roots(Poly g, u64 p, std::mt19937_64& rng, std::vector<u64>& out) {
  poly_trim(g);
  while (g.size() > 1) {
    if (g.size() == 2) {
      out.push_back(mulmod(p - (g[0] % p), powmod(g[1], p - 2, p), p) % p);
      return;
    }
    if (g[0] == 0) {
      out.push_back(0);
      g.erase(g.begin());
      continue;
    }
    bool split = false;
    for (int tries = 0; tries < 256 && !split; ++tries) {
      Poly xa{rng() % p, 1};
      Poly t = poly_powmod(std::move(xa), (p - 1) / 2, g, p);
      if (t.empty()) t = Poly{0};
      t[0] = (t[0] + p - 1) % p;
      poly_trim(t);
      if (t.empty()) continue;
      Poly d = poly_gcd(t, g, p);
      if (d.size() > 1 && d.size() < g.size()) {
        Poly q = poly_div(g, d, p);
        poly_roots(d, p, rng, out);
        g = std::move(q);
        split = true;
      }
    }
    if (!split) throw SplitError("poly_roots: equal-degree splitting failed");
  }
}

// ---- dense matrices over F_p ----

struct Mat {
  u64 n = 0;
  std::vector<u64> a;  // row-major
  Mat() = default;
  explicit Mat(u64 dim) : n(dim), a(dim * dim, 0) {}
  u64& at(u64 r, u64 c) { return a[r * n + c]; }
  u64 at(u64 r, u64 c) const { return a[r * n + c]; }
};

inline std::vector<u64> mat_vec(const std::vector<u64>& flat, u64 k,
                                const std::vector<u64>& v, u64 p) {
  std::vector<u64> r(k, 0);
  for (u64 i = 0; i < k; ++i) {
    u128 acc = 0;
    const u64* row = &flat[i * k];
    for (u64 j = 0; j < k; ++j) {
      if (v[j]) {
        acc += u128(row[j] % p) * v[j];
        if ((j & 31) == 31) acc %= p;
      }
    }
    r[i] = u64(acc % p);
  }
  return r;
}

// reduced row echelon form in place; returns pivot columns
inline std::vector<u32> rref(std::vector<std::vector<u64>>& rows, u64 p) {
  std::vector<u32> pivots;
  size_t rank = 0;
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < width && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    u64 inv = powmod(rows[rank][col], p - 2, p);
    for (auto& x : rows[rank]) x = mulmod(x, inv, p);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 f = rows[r][col];
      for (size_t c = 0; c < width; ++c)
        rows[r][c] = (rows[r][c] + p - mulmod(f, rows[rank][c], p)) % p;
    }
    pivots.push_back(u32(col));
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// characteristic polynomial (monic, of degree n) via Hessenberg reduction
inline Poly charpoly(Mat H, u64 p) {
  const u64 n = H.n;
  for (u64 col = 0; col + 2 < n; ++col) {
    u64 piv = col + 1;
    while (piv < n && H.at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (u64 c = 0; c < n; ++c) std::swap(H.at(piv, c), H.at(col + 1, c));
      for (u64 r = 0; r < n; ++r) std::swap(H.at(r, piv), H.at(r, col + 1));
    }
    u64 inv = powmod(H.at(col + 1, col), p - 2, p);
    for (u64 r = col + 2; r < n; ++r) {
      u64 f = mulmod(H.at(r, col), inv, p);
      if (!f) continue;
      for (u64 c = 0; c < n; ++c)
        H.at(r, c) = (H.at(r, c) + p - mulmod(f, H.at(col + 1, c), p)) % p;
      for (u64 r2 = 0; r2 < n; ++r2)
        H.at(r2, col + 1) = (H.at(r2, col + 1) + mulmod(f, H.at(r2, r), p)) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod subdiag) p_{i-1}
  std::vector<Poly> ps{{1}};
  for (u64 m = 1; m <= n; ++m) {
    Poly pm(ps[m - 1].size() + 1, 0);
    u64 hmm = H.at(m - 1, m - 1) % p;
    for (size_t c = 0; c < ps[m - 1].size(); ++c) {
      pm[c + 1] = (pm[c + 1] + ps[m - 1][c]) % p;
      pm[c] = (pm[c] + p - mulmod(hmm, ps[m - 1][c], p)) % p;
    }
    u64 prod = 1;
    for (u64 i = m - 1; i >= 1; --i) {
      prod = mulmod(prod, H.at(i, i - 1), p);
      if (!prod) break;
      u64 coef = mulmod(H.at(i - 1, m - 1) % p, prod, p);
      if (coef)
        for (size_t c = 0; c < ps[i - 1].size(); ++c)
          pm[c] = (pm[c] + p - mulmod(coef, ps[i - 1][c], p)) % p;
    }
    ps.push_back(std::move(pm));
  }
  return ps[n];
}

struct Subspace {
  std::vector<std::vector<u64>> basis;  // RREF rows, ambient width k
  std::vector<u32> pivots;
};

// matrix of A restricted to the invariant subspace W, in W's basis
inline Mat restrict_to_subspace(const std::vector<u64>& A, u64 k, const Subspace& W, u64 p) {
  const u64 d = W.basis.size();
  Mat B(d);
  for (u64 j = 0; j < d; ++j) {
    std::vector<u64> v = mat_vec(A, k, W.basis[j], p);
    // coords in RREF basis read off at pivot columns
    std::vector<u64> coord(d);
    for (u64 i = 0; i < d; ++i) coord[i] = v[W.pivots[i]];
    // verify membership (invariance)
    for (u64 c = 0; c < k; ++c) {
      u128 acc = 0;
      for (u64 i = 0; i < d; ++i) acc += u128(coord[i]) * W.basis[i][c];
      if (u64(acc % p) != v[c])
        throw IntegrityError("restrict_to_subspace: subspace not invariant");
    }
    for (u64 i = 0; i < d; ++i) B.at(i, j) = coord[i];
  }
  return B;
}

// kernel basis of B - lambda*I (rows of length d)
inline std::vector<std::vector<u64>> eigen_kernel(const Mat& B, u64 lambda, u64 p) {
  const u64 d = B.n;
  std::vector<std::vector<u64>> rows(d, std::vector<u64>(d));
  for (u64 r = 0; r < d; ++r)
    for (u64 c = 0; c < d; ++c) rows[r][c] = r == c ? (B.at(r, c) + p - lambda % p) % p : B.at(r, c);
  auto pivots = rref(rows, p);
  std::vector<char> is_pivot(d, 0);
  for (u32 c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<u64>> kernel;
  for (u64 free_col = 0; free_col < d; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<u64> v(d, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < rows.size(); ++r)
      v[pivots[r]] = (p - mulmod(rows[r][free_col], 1, p)) % p;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace dixon_detail

// ---------------------------------------------------------------------------
// exact orthogonality sums
//
// sum_c weight_c * |values_c|^2 over classes: Galois-invariant, hence a
// rational integer equal to its Q(zeta_E)-trace divided by phi(E).

inline i128 exact_weighted_norm_sum(const std::vector<CycValue>& values,
                                    const std::vector<u64>& weights, u64 big_e) {
  u64 phi_e = euler_phi(big_e);
  i128 acc = 0;
  for (size_t c = 0; c < values.size(); ++c) {
    u64 o = values[c].order;
    if (big_e % o != 0) throw std::invalid_argument("exact_weighted_norm_sum: conductor");
    acc += i128(weights[c]) * (phi_e / euler_phi(o)) * values[c].norm_square_trace();
  }
  if (acc % i128(phi_e) != 0)
    throw IntegrityError("exact_weighted_norm_sum: sum is not an integer");
  return acc / i128(phi_e);
}

// ---------------------------------------------------------------------------

inline CharTable character_table_attempt(const ClassSet& cs, u64 seed) {
  using namespace dixon_detail;
  const size_t k = cs.classes.size();
  if (k > 120) throw CapError("character table: class count over the 120 cap");

  CharTable tab;
  tab.group_order = cs.group_order;
  tab.exponent = cs.exponent;
  for (const auto& c : cs.classes) {
    tab.class_sizes.push_back(c.size);
    tab.class_orders.push_back(c.order);
    tab.inverse_class.push_back(c.inverse_class);
  }

  if (k == 1) {
    CharRow r;
    r.degree = 1;
    r.values = {CycValue::integer(1)};
    r.real = r.rational = true;
    tab.rows.push_back(std::move(r));
    tab.prime = 2;
    return tab;
  }

  const u64 p = dixon_prime(cs.group_order, cs.exponent);
  tab.prime = p;
  auto A = class_matrices(cs);

  // matrix application order: ascending class size, identity class skipped
  std::vector<u32> order_idx;
  for (u32 i = 1; i < k; ++i) order_idx.push_back(i);
  std::stable_sort(order_idx.begin(), order_idx.end(),
                   [&](u32 a, u32 b) { return cs.classes[a].size < cs.classes[b].size; });

  std::mt19937_64 rng(0x5eed0000 + seed);
  std::vector<dixon_detail::Subspace> spaces;
  {
    dixon_detail::Subspace full;
    full.basis.assign(k, std::vector<u64>(k, 0));
    for (size_t i = 0; i < k; ++i) full.basis[i][i] = 1;
    full.pivots.resize(k);
    for (size_t i = 0; i < k; ++i) full.pivots[i] = u32(i);
    spaces.push_back(std::move(full));
  }

  size_t next_matrix = 0;
  int consecutive_failures = 0;
  int guard = 0;
  auto all_split = [&]() {
    for (const auto& w : spaces)
      if (w.basis.size() > 1) return false;
    return true;
  };
  std::vector<u64> combo;  // reused buffer
  while (!all_split()) {
    if (++guard > 400) throw SplitError("character table: eigenspace splitting stalled");
    const std::vector<u64>* M = nullptr;
    if (consecutive_failures < 3 && next_matrix < order_idx.size()) {
      M = &A[order_idx[next_matrix++]];
    } else {
      // random linear combination of the nontrivial class matrices
      combo.assign(k * k, 0);
      for (size_t i = 1; i < k; ++i) {
        u64 c = rng() % p;
        if (!c) continue;
        const auto& Ai = A[i];
        for (size_t t = 0; t < k * k; ++t) combo[t] = (combo[t] + mulmod(c, Ai[t] % p, p)) % p;
      }
      M = &combo;
    }
    bool progress = false;
    std::vector<dixon_detail::Subspace> next_spaces;
    for (auto& W : spaces) {
      if (W.basis.size() <= 1) {
        next_spaces.push_back(std::move(W));
        continue;
      }
      Mat B = restrict_to_subspace(*M, k, W, p);
      Poly f = charpoly(B, p);
      Poly fs = poly_gcd(f, poly_derivative(f, p), p);
      Poly sqfree = fs.size() > 1 ? poly_div(f, fs, p) : f;
      std::vector<u64> roots;
      poly_roots(sqfree, p, rng, roots);
      std::sort(roots.begin(), roots.end());
      if (roots.size() <= 1) {
        next_spaces.push_back(std::move(W));
        continue;
      }
      u64 dim_sum = 0;
      for (u64 lambda : roots) {
        auto ker = eigen_kernel(B, lambda, p);
        if (ker.empty()) throw IntegrityError("character table: empty eigenspace");
        dixon_detail::Subspace piece;
        piece.basis.reserve(ker.size());
        for (const auto& coord : ker) {
          std::vector<u64> v(k, 0);
          for (size_t i = 0; i < W.basis.size(); ++i) {
            if (!coord[i]) continue;
            for (size_t c = 0; c < k; ++c)
              v[c] = (v[c] + mulmod(coord[i], W.basis[i][c], p)) % p;
          }
          piece.basis.push_back(std::move(v));
        }
        piece.pivots = rref(piece.basis, p);
        dim_sum += piece.basis.size();
        next_spaces.push_back(std::move(piece));
      }
      if (dim_sum != W.basis.size())
        throw IntegrityError("character table: eigenspace dimensions do not add up");
      progress = true;
    }
    spaces = std::move(next_spaces);
    consecutive_failures = progress ? 0 : consecutive_failures + 1;
  }
  if (spaces.size() != k) throw IntegrityError("character table: wrong number of eigenspaces");

  // central character vectors, normalized at the identity class
  std::vector<std::vector<u64>> omegas;
  for (const auto& W : spaces) {
    std::vector<u64> w = W.basis[0];
    if (w[0] == 0) throw IntegrityError("character table: eigenvector vanishes at identity");
    u64 inv = powmod(w[0], p - 2, p);
    for (auto& x : w) x = mulmod(x, inv, p);
    omegas.push_back(std::move(w));
  }

  // degrees and value lifts
  std::vector<u64> inv_size(k);
  for (size_t j = 0; j < k; ++j) inv_size[j] = powmod(cs.classes[j].size % p, p - 2, p);
  const u64 g0 = primitive_root_mod(p);
  const u64 z = powmod(g0, (p - 1) / cs.exponent, p);  // canonical primitive e-th root

  u64 sq_degree_sum = 0;
  for (auto& w : omegas) {
    u64 s = 0;
    for (size_t j = 0; j < k; ++j) {
      u64 term = mulmod(mulmod(w[j], w[cs.classes[j].inverse_class], p), inv_size[j], p);
      s = (s + term) % p;
    }
    if (s == 0) throw IntegrityError("character table: degenerate norm");
    u64 d2 = mulmod(cs.group_order % p, powmod(s, p - 2, p), p);
    u64 r = dixon_detail::sqrt_mod(d2, p);
    u64 d = std::min(r, p - r);
    if (d == 0 || cs.group_order % d != 0)
      throw IntegrityError("character table: invalid degree");
    sq_degree_sum += d * d;

    CharRow row;
    row.degree = d;
    row.values.resize(k);
    for (size_t j = 0; j < k; ++j) {
      const u64 o = cs.classes[j].order;
      // theta(g^s) for s = 0..o-1 through the power map
      std::vector<u64> theta(o);
      for (u64 s2 = 0; s2 < o; ++s2) {
        u32 cls = cs.power_class[j][size_t(s2)];
        theta[s2] = mulmod(mulmod(d % p, w[cls], p), inv_size[cls], p);
      }
      const u64 zo = powmod(z, cs.exponent / o, p);
      const u64 zo_inv = powmod(zo, p - 2, p);
      const u64 inv_o = powmod(o % p, p - 2, p);
      std::vector<u64> zpow(o);  // zo^{-u}
      zpow[0] = 1;
      for (u64 u = 1; u < o; ++u) zpow[u] = mulmod(zpow[u - 1], zo_inv, p);
      std::vector<u64> mu(o);
      u64 mu_sum = 0;
      for (u64 t = 0; t < o; ++t) {
        u64 acc = 0;
        for (u64 s2 = 0; s2 < o; ++s2) acc = (acc + mulmod(theta[s2], zpow[(s2 * t) % o], p)) % p;
        mu[t] = mulmod(acc, inv_o, p);
        if (mu[t] > d) throw IntegrityError("character table: multiplicity lift out of range");
        mu_sum += mu[t];
      }
      if (mu_sum != d) throw IntegrityError("character table: multiplicities do not sum to degree");
      row.values[j] = CycValue(o, std::move(mu));
    }
    row.real = true;
    row.rational = true;
    for (const auto& v : row.values) {
      row.real = row.real && v.is_real();
      row.rational = row.rational && v.is_rational();
    }
    tab.rows.push_back(std::move(row));
  }
  if (sq_degree_sum != cs.group_order)
    throw IntegrityError("character table: degree squares do not sum to |G|");

  // canonical row order
  std::sort(tab.rows.begin(), tab.rows.end(), [](const CharRow& a, const CharRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });

  // Brauer consistency is a hard integrity requirement, not a test
  if (tab.k_real() != cs.k_real())
    throw IntegrityError("character table: real row count differs from real class count");
  if (tab.k_rational() != cs.k_rational())
    throw IntegrityError("character table: rational row count differs from rational class count");

  // exact orthogonality
  for (const auto& row : tab.rows) {
    i128 s = exact_weighted_norm_sum(row.values, tab.class_sizes, tab.exponent);
    if (s != i128(cs.group_order)) throw IntegrityError("character table: row orthonormality");
    if (!row.values[0].equals_integer(row.degree))
      throw IntegrityError("character table: first column is not the degree");
  }
  for (size_t j = 0; j < k; ++j) {
    u64 o = cs.classes[j].order;
    u64 phi_o = euler_phi(o);
    i128 acc = 0;
    for (const auto& row : tab.rows) acc += row.values[j].norm_square_trace();
    if (acc % i128(phi_o) != 0)
      throw IntegrityError("character table: column sum is not an integer");
    if (acc / i128(phi_o) != i128(cs.group_order / cs.classes[j].size))
      throw IntegrityError("character table: column orthogonality");
  }
  return tab;
}

inline CharTable character_table(const ClassSet& cs, u64 seed = 0) {
  for (u64 attempt = 0; attempt < 3; ++attempt) {
    try {
      return character_table_attempt(cs, seed + attempt);
    } catch (const SplitError&) {
      if (attempt == 2) throw;
    }
  }
  throw SplitError("character table: all attempts failed");
}

// (number of real rows, number of rational rows); construction already
// enforces agreement with the class-side counts
inline std::pair<u64, u64> real_rational_counts(const CharTable& t) {
  return {t.k_real(), t.k_rational()};
}

}  // namespace realchar
