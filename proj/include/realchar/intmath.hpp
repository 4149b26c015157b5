#pragma once

// Exact integer arithmetic on up to 128 bits: deterministic primality,
// factorization, divisor lattices, unit-group generators and the handful of
// closed-form arithmetic scans the verification suite needs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace realchar {

using u32 = std::uint32_t;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string_u128(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline u128 parse_u128(const std::string& s) {
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_u128: digit expected");
    v = v * 10 + u128(c - '0');
  }
  return v;
}

// ---------------------------------------------------------------------------
// modular arithmetic

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline u128 addmod128(u128 a, u128 b, u128 m) {
  // requires a,b < m < 2^127 so the sum cannot wrap
  u128 s = a + b;
  if (s >= m) s -= m;
  return s;
}

inline u128 mulmod128(u128 a, u128 b, u128 m) {
  if (m <= 0xffffffffffffffffULL) return u128(mulmod(u64(a % m), u64(b % m), u64(m)));
  a %= m;
  b %= m;
  u128 r = 0;
  while (b) {
    if (b & 1) r = addmod128(r, a, m);
    a = addmod128(a, a, m);
    b >>= 1;
  }
  return r;
}

inline u128 powmod128(u128 a, u128 e, u128 m) {
  u128 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, a, m);
    a = mulmod128(a, a, m);
    e >>= 1;
  }
  return r;
}

inline u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = u64(std::sqrt(double(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

inline u128 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u128 r = 0, bit = u128(1) << 126;
  while (bit > n) bit >>= 2;
  while (bit) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

inline bool is_perfect_square(u128 n) {
  u128 r = isqrt_u128(n);
  return r * r == n;
}

// ---------------------------------------------------------------------------
// primality
//
// Deterministic Miller-Rabin with the witness set {2,...,37}, proven correct
// for all n < 3317044064679887385961981 (Sorenson & Webster).  Above that
// bound the verdict is Baillie-PSW (base-2 strong probable prime plus strong
// Lucas with Selfridge parameters); no BPSW pseudoprime is known.

inline bool miller_rabin_witness(u128 n, u128 a) {
  // returns true if a proves n composite
  a %= n;
  if (a == 0) return false;
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u128 x = powmod128(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod128(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

inline int jacobi_symbol(i128 a, u128 n) {
  // n odd positive
  a %= i128(n);
  if (a < 0) a += i128(n);
  u128 ua = u128(a), un = n;
  int t = 1;
  while (ua != 0) {
    while ((ua & 1) == 0) {
      ua >>= 1;
      u128 r = un & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(ua, un);
    if ((ua & 3) == 3 && (un & 3) == 3) t = -t;
    ua %= un;
  }
  return un == 1 ? t : 0;
}

inline bool strong_lucas_prp(u128 n) {
  // n odd, n > 2, not a perfect square
  i128 d_param = 5;
  while (true) {
    int j = jacobi_symbol(d_param, n);
    if (j == 0) return u128(d_param < 0 ? -d_param : d_param) == n;
    if (j == -1) break;
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
    if (d_param > 1000 || d_param < -1000)
      throw std::runtime_error("strong_lucas_prp: no usable discriminant");
  }
  // P = 1, Q = (1 - D)/4
  i128 q_param = (1 - d_param) / 4;
  u128 Q = q_param >= 0 ? u128(q_param) % n : n - (u128(-q_param) % n);
  u128 D = d_param >= 0 ? u128(d_param) % n : n - (u128(-d_param) % n);

  u128 np1 = n + 1;
  int s = 0;
  u128 d = np1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  auto halve = [&](u128 x) { return (x & 1) ? ((x + n) >> 1) % n : (x >> 1); };

  // binary ladder from the top bit of d
  u128 U = 1, V = 1, Qk = Q;  // U_1, V_1, Q^1
  int bits = 0;
  for (u128 t = d; t > 1; t >>= 1) ++bits;
  for (int i = bits - 1; i >= 0; --i) {
    // double: k -> 2k
    U = mulmod128(U, V, n);
    V = mulmod128(V, V, n);
    V = addmod128(V, n - mulmod128(2 % n, Qk, n), n);
    Qk = mulmod128(Qk, Qk, n);
    if ((d >> i) & 1) {
      // increment: 2k -> 2k+1  (P = 1)
      u128 U2 = halve(addmod128(U, V, n));
      u128 V2 = halve(addmod128(mulmod128(D, U, n), V, n));
      U = U2;
      V = V2;
      Qk = mulmod128(Qk, Q, n);
    }
  }
  if (U == 0) return true;
  for (int r = 0; r < s; ++r) {
    if (V == 0) return true;
    V = mulmod128(V, V, n);
    V = addmod128(V, n - mulmod128(2 % n, Qk, n), n);
    Qk = mulmod128(Qk, Qk, n);
  }
  return false;
}

inline const u128 kMillerRabinProvenBound = u128(331704406467988738ULL) * 10000000ULL + 5961981ULL;

inline bool is_prime(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u128 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (miller_rabin_witness(n, a)) return false;
  if (n < kMillerRabinProvenBound) return true;
  if (is_perfect_square(n)) return false;
  return strong_lucas_prp(n);
}

inline bool is_prime_u64(u64 n) { return is_prime(u128(n)); }

// ---------------------------------------------------------------------------
// factorization: trial division then Brent's cycle-finding rho

inline u128 pollard_brent(u128 n) {
  // n composite, odd, no factor below the trial bound
  for (u128 c = 1;; ++c) {
    auto f = [&](u128 x) { return addmod128(mulmod128(x, x, n), c, n); };
    u128 y = 2, g = 1, r = 1, q = 1, x = 0, ys = y;
    const u128 batch = 128;
    while (g == 1) {
      x = y;
      for (u128 i = 0; i < r; ++i) y = f(y);
      u128 k = 0;
      while (k < r && g == 1) {
        ys = y;
        u128 steps = std::min(batch, r - k);
        for (u128 i = 0; i < steps; ++i) {
          y = f(y);
          u128 diff = x > y ? x - y : y - x;
          if (diff != 0) q = mulmod128(q, diff, n);
        }
        g = gcd128(q, n);
        k += batch;
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      y = ys;
      while (g == 1) {
        y = f(y);
        u128 diff = x > y ? x - y : y - x;
        g = gcd128(diff == 0 ? n : diff, n);
      }
    }
    if (g != n) return g;
  }
}

struct PrimePower {
  u128 prime;
  unsigned exp;
};

inline void factor_rec(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u128 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

inline std::vector<PrimePower> factorize(u128 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<u128> primes;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                73, 79, 83, 89, 97}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u128 p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exp;
    else
      out.push_back({p, 1});
  }
  return out;
}

inline std::vector<std::pair<u64, unsigned>> factorize_u64(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (const auto& pp : factorize(u128(n))) out.emplace_back(u64(pp.prime), pp.exp);
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  auto f = factorize_u64(n);
  std::vector<u64> divs{1};
  for (auto [p, e] : f) {
    size_t sz = divs.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [p, e] : factorize_u64(n)) r = r / p * (p - 1);
  return r;
}

inline int moebius(u64 n) {
  int sign = 1;
  for (auto [p, e] : factorize_u64(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Tr_{Q(zeta_o)/Q}(zeta_o^t), via the Ramanujan-sum closed form.
inline i64 root_of_unity_trace(u64 o, u64 t) {
  u64 g = std::gcd(t % o, o);
  u64 m = o / g;
  int mu = moebius(m);
  if (mu == 0) return 0;
  return i64(mu) * i64(euler_phi(o) / euler_phi(m));
}

// ---------------------------------------------------------------------------
// multiplicative groups mod n

inline u64 multiplicative_order(u64 a, u64 n) {
  u64 ord = euler_phi(n);
  for (auto [p, e] : factorize_u64(ord)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, ord / p, n) == 1)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

inline u64 primitive_root_mod(u64 n) {
  // n = 2, 4, p^k or 2p^k (p odd prime); smallest generator of (Z/n)^*
  u64 phi = euler_phi(n);
  auto pf = factorize_u64(phi);
  for (u64 g = 2; g < n; ++g) {
    if (std::gcd(g, n) != 1) continue;
    bool ok = true;
    for (auto [p, e] : pf)
      if (powmod(g, phi / p, n) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::runtime_error("primitive_root_mod: none found");
}

// Generators of (Z/n)^*: CRT lifts of primitive roots of the odd prime-power
// parts, plus -1 and 5 for the 2-power part.
inline std::vector<u64> unit_group_generators(u64 n) {
  if (n <= 2) return {};
  auto pf = factorize_u64(n);
  std::vector<u64> gens;
  auto crt_lift = [&](u64 q, u64 r) {
    // x = r mod q, x = 1 mod n/q
    u64 m = n / q;
    // x = 1 + m*t with m*t = r-1 mod q
    u64 minv = powmod(m % q, euler_phi(q) - 1, q);  // gcd(m,q)=1
    u64 t = mulmod((r + q - 1) % q, minv, q);
    return (1 + u64(u128(m) * t % n)) % n;
  };
  for (auto [p, e] : pf) {
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e >= 2) gens.push_back(crt_lift(q, q - 1));
      if (e >= 3) gens.push_back(crt_lift(q, 5));
    } else {
      gens.push_back(crt_lift(q, primitive_root_mod(q)));
    }
  }
  return gens;
}

// smallest prime p ≡ 1 (mod e) with p > lower_bound
inline u64 next_prime_in_class(u64 e, u64 lower_bound) {
  u64 p = e + 1;
  while (p <= lower_bound) p += e;
  while (!is_prime_u64(p)) p += e;
  return p;
}

// ---------------------------------------------------------------------------
// exact rationals (small numerators; enough for the scan records)

struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n, i64 d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// ---------------------------------------------------------------------------
// arithmetic scans used by the verification suite

inline u128 pow_u128(u128 b, unsigned e) {
  u128 r = 1;
  while (e--) r *= b;
  return r;
}

// Odd primes f with 7 <= f <= f_max such that (3^f + 1)/4 and (3^f - 1)/2 are
// distinct odd primes.  f_max <= 80 keeps 3^f inside 128 bits.
inline std::vector<unsigned> scan_3f_prime_pairs(unsigned f_max) {
  if (f_max > 80) throw std::invalid_argument("scan_3f_prime_pairs: f_max over 128-bit range");
  std::vector<unsigned> hits;
  for (unsigned f = 7; f <= f_max; ++f) {
    if (f % 2 == 0 || !is_prime_u64(f)) continue;
    u128 t = pow_u128(3, f);
    if ((t + 1) % 4 != 0) continue;
    u128 r = (t + 1) / 4, s = (t - 1) / 2;
    if (r == s || r % 2 == 0 || s % 2 == 0) continue;
    if (is_prime(r) && is_prime(s)) hits.push_back(f);
  }
  return hits;
}

// 4^(2f+1) + 1 = (2^(2f+1) + 2^(f+1) + 1) * (2^(2f+1) - 2^(f+1) + 1), and the
// left side is divisible by 5.  Both torus orders of the Suzuki group Sz(2^(2f+1)).
inline bool sz_torus_factor_check(unsigned f) {
  if (f < 1 || 2 * f + 1 > 60) throw std::invalid_argument("sz_torus_factor_check: range");
  u128 q = u128(1) << (2 * f + 1);        // 2^(2f+1)
  u128 lhs = q * q + 1;                   // 4^(2f+1) + 1
  u128 t = u128(1) << (f + 1);            // 2^(f+1)
  u128 a = q + t + 1, b = q - t + 1;
  return lhs == a * b && lhs % 5 == 0;
}

}  // namespace realchar
