#pragma once

// Group catalog: a descriptor grammar, permutation constructors for the named
// families (alternating, symmetric, cyclic, dihedral, linear, unitary and
// Suzuki groups, field-automorphism extensions, direct products, wreath by
// C2), the outer-automorphism-order table, closed-form real-class profiles
// for PSL(2,q) with q odd, and growth scans.
//
//   expr := term { "x" term }
//   term := atom [ "wr" atom ] [ "." nat ]
//   atom := "A" nat | "S" nat | "C" nat | "D" nat
//         | "PSL(" nat "," ppow ")" | "SL(" nat "," ppow ")" | "PGL(" nat "," ppow ")"
//         | "PSU(3," ppow ")" | "Sz(" ppow ")" | "J1" | "(" expr ")"
//
// Case-sensitive, whitespace insignificant; the canonical printer puts single
// spaces around "x" and "wr" and nothing elsewhere.

#include <memory>
#include <sstream>

#include "realchar/classes.hpp"
#include "realchar/field.hpp"
#include "realchar/group.hpp"
#include "realchar/structure.hpp"

namespace realchar {

// ---------------------------------------------------------------------------
// descriptor AST

struct Descriptor;
using DescPtr = std::shared_ptr<const Descriptor>;

struct Descriptor {
  enum class Kind { Named, Product, Wreath, Extension };
  Kind kind = Kind::Named;

  // Named
  std::string family;       // "A","S","C","D","PSL","SL","PGL","PSU","Sz","J1"
  std::vector<u64> params;  // e.g. {2, 8}

  // Product (flattened, >= 2 factors)
  std::vector<DescPtr> factors;

  // Wreath
  DescPtr wr_left, wr_right;

  // Extension
  DescPtr base;
  u64 ext_order = 0;

  std::string str() const {
    switch (kind) {
      case Kind::Named: {
        if (family == "J1") return "J1";
        if (family == "Sz") return "Sz(" + std::to_string(params[0]) + ")";
        if (params.size() == 1) return family + std::to_string(params[0]);
        return family + "(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
      }
      case Kind::Product: {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
          if (i) s += " x ";
          bool paren = factors[i]->kind == Kind::Product;
          s += paren ? "(" + factors[i]->str() + ")" : factors[i]->str();
        }
        return s;
      }
      case Kind::Wreath: {
        return wr_left->str() + " wr " + wr_right->str();
      }
      case Kind::Extension: {
        bool paren = base->kind == Kind::Product || base->kind == Kind::Wreath;
        std::string b = paren ? "(" + base->str() + ")" : base->str();
        return b + "." + std::to_string(ext_order);
      }
    }
    return "?";
  }
};

// ---------------------------------------------------------------------------
// parser

namespace parse_detail {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  explicit Scanner(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  u64 nat() {
    skip_ws();
    if (pos >= s.size() || !isdigit((unsigned char)s[pos])) fail("number expected");
    u64 v = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) {
      v = v * 10 + u64(s[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return v;
  }
};

inline bool is_prime_power(u64 q, u64* p_out = nullptr, u64* k_out = nullptr) {
  if (q < 2) return false;
  auto f = factorize_u64(q);
  if (f.size() != 1) return false;
  if (p_out) *p_out = f[0].first;
  if (k_out) *k_out = f[0].second;
  return true;
}

DescPtr parse_expr(Scanner& sc);

inline DescPtr parse_atom(Scanner& sc) {
  sc.skip_ws();
  auto named = [](std::string fam, std::vector<u64> ps) {
    auto d = std::make_shared<Descriptor>();
    d->kind = Descriptor::Kind::Named;
    d->family = std::move(fam);
    d->params = std::move(ps);
    return DescPtr(d);
  };
  if (sc.eat('(')) {
    DescPtr inner = parse_expr(sc);
    if (!sc.eat(')')) sc.fail("')' expected");
    return inner;
  }
  if (sc.eat_word("PSL") || sc.eat_word("PGL")) {
    std::string fam = sc.s.compare(sc.pos - 3, 3, "PSL") == 0 ? "PSL" : "PGL";
    if (!sc.eat('(')) sc.fail("'(' expected");
    u64 n = sc.nat();
    if (!sc.eat(',')) sc.fail("',' expected");
    size_t qpos = sc.pos;
    u64 q = sc.nat();
    if (!sc.eat(')')) sc.fail("')' expected");
    if (!is_prime_power(q)) {
      sc.pos = qpos;
      sc.fail(std::to_string(q) + " is not a prime power");
    }
    if (fam == "PSL" && n != 2 && n != 3) sc.fail("PSL supports dimensions 2 and 3");
    if (fam == "PGL" && n != 2) sc.fail("PGL supports dimension 2");
    return named(fam, {n, q});
  }
  if (sc.eat_word("PSU")) {
    if (!sc.eat('(')) sc.fail("'(' expected");
    u64 n = sc.nat();
    if (n != 3) sc.fail("PSU supports dimension 3");
    if (!sc.eat(',')) sc.fail("',' expected");
    size_t qpos = sc.pos;
    u64 q = sc.nat();
    if (!sc.eat(')')) sc.fail("')' expected");
    if (!is_prime_power(q)) {
      sc.pos = qpos;
      sc.fail(std::to_string(q) + " is not a prime power");
    }
    return named("PSU", {n, q});
  }
  if (sc.eat_word("SL")) {
    if (!sc.eat('(')) sc.fail("'(' expected");
    u64 n = sc.nat();
    if (!sc.eat(',')) sc.fail("',' expected");
    size_t qpos = sc.pos;
    u64 q = sc.nat();
    if (!sc.eat(')')) sc.fail("')' expected");
    if (!is_prime_power(q)) {
      sc.pos = qpos;
      sc.fail(std::to_string(q) + " is not a prime power");
    }
    if (n != 2 && n != 3) sc.fail("SL supports dimensions 2 and 3");
    return named("SL", {n, q});
  }
  if (sc.eat_word("Sz")) {
    if (!sc.eat('(')) sc.fail("'(' expected");
    size_t qpos = sc.pos;
    u64 q = sc.nat();
    if (!sc.eat(')')) sc.fail("')' expected");
    if (q != 8) {
      sc.pos = qpos;
      sc.fail("Sz(q) is only catalogued for q = 8");
    }
    return named("Sz", {q});
  }
  if (sc.eat_word("J1")) return named("J1", {});
  char c = sc.peek();
  if (c == 'A' || c == 'S' || c == 'C' || c == 'D') {
    ++sc.pos;
    u64 n = sc.nat();
    return named(std::string(1, c), {n});
  }
  sc.fail("group atom expected");
}

inline DescPtr parse_term(Scanner& sc) {
  DescPtr a = parse_atom(sc);
  sc.skip_ws();
  if (sc.s.compare(sc.pos, 2, "wr") == 0) {
    sc.pos += 2;
    DescPtr b = parse_atom(sc);
    auto d = std::make_shared<Descriptor>();
    d->kind = Descriptor::Kind::Wreath;
    d->wr_left = a;
    d->wr_right = b;
    a = d;
  }
  if (sc.eat('.')) {
    u64 n = sc.nat();
    auto d = std::make_shared<Descriptor>();
    d->kind = Descriptor::Kind::Extension;
    d->base = a;
    d->ext_order = n;
    a = d;
  }
  return a;
}

inline DescPtr parse_expr(Scanner& sc) {
  DescPtr t = parse_term(sc);
  std::vector<DescPtr> factors{t};
  while (true) {
    sc.skip_ws();
    if (sc.pos < sc.s.size() && sc.s[sc.pos] == 'x') {
      ++sc.pos;
      factors.push_back(parse_term(sc));
    } else {
      break;
    }
  }
  if (factors.size() == 1) return factors[0];
  auto d = std::make_shared<Descriptor>();
  d->kind = Descriptor::Kind::Product;
  d->factors = std::move(factors);
  return d;
}

}  // namespace parse_detail

inline DescPtr parse_descriptor(const std::string& s) {
  parse_detail::Scanner sc(s);
  DescPtr d = parse_detail::parse_expr(sc);
  sc.skip_ws();
  if (sc.pos != s.size()) sc.fail("unexpected trailing input");
  return d;
}

// ---------------------------------------------------------------------------
// matrix-to-permutation machinery

namespace build_detail {

struct Mat2 {
  FieldRef F;
  u32 a, b, c, d;
};

inline Mat2 mat2_mul(const Mat2& m, const Mat2& n) {
  const auto& F = *m.F;
  return {m.F, F.add(F.mul(m.a, n.a), F.mul(m.b, n.c)), F.add(F.mul(m.a, n.b), F.mul(m.b, n.d)),
          F.add(F.mul(m.c, n.a), F.mul(m.d, n.c)), F.add(F.mul(m.c, n.b), F.mul(m.d, n.d))};
}

// projective line: point x in [0,q) is (x:1), point q is (1:0)
inline Perm mat2_to_line_perm(const Mat2& m) {
  const auto& F = *m.F;
  u64 q = F.size_q;
  std::vector<point> img(q + 1);
  for (u64 x = 0; x <= q; ++x) {
    u32 vx, vy;
    if (x < q) {
      vx = F.add(F.mul(m.a, u32(x)), m.b);
      vy = F.add(F.mul(m.c, u32(x)), m.d);
    } else {
      vx = m.a;
      vy = m.c;
    }
    img[x] = vy == 0 ? point(q) : point(F.mul(vx, F.inv(vy)));
  }
  return Perm(std::move(img));
}

inline Perm frobenius_line_perm(const FieldRef& F) {
  u64 q = F->size_q;
  std::vector<point> img(q + 1);
  for (u64 x = 0; x < q; ++x) img[x] = point(F->frobenius(u32(x)));
  img[q] = point(q);
  return Perm(std::move(img));
}

using Vec3 = std::array<u32, 3>;

struct Mat3 {
  FieldRef F;
  std::array<std::array<u32, 3>, 3> m;
};

inline Vec3 mat3_apply(const Mat3& M, const Vec3& v) {
  const auto& F = *M.F;
  Vec3 r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] = F.add(r[i], F.mul(M.m[i][j], v[j]));
  return r;
}

inline Vec3 normalize3(const FieldRef& F, Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      u32 inv = F->inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = F->mul(v[j], inv);
      return v;
    }
  }
  throw IntegrityError("normalize3: zero vector");
}

struct PointSpace3 {
  FieldRef F;
  std::vector<Vec3> points;
  std::map<Vec3, u32> index;

  u32 id(const Vec3& v) const {
    auto it = index.find(v);
    if (it == index.end()) throw IntegrityError("PointSpace3: point missing");
    return it->second;
  }

  Perm to_perm(const Mat3& M) const {
    std::vector<point> img(points.size());
    for (u32 i = 0; i < points.size(); ++i)
      img[i] = point(id(normalize3(F, mat3_apply(M, points[i]))));
    return Perm(std::move(img));
  }
};

// all projective points of F^3
inline PointSpace3 projective_plane(const FieldRef& F) {
  PointSpace3 ps;
  ps.F = F;
  u64 q = F->size_q;
  auto add = [&](Vec3 v) {
    if (!ps.index.count(v)) {
      ps.index.emplace(v, u32(ps.points.size()));
      ps.points.push_back(v);
    }
  };
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b) add({1, u32(a), u32(b)});
  for (u64 a = 0; a < q; ++a) add({0, 1, u32(a)});
  add({0, 0, 1});
  if (ps.points.size() != q * q + q + 1) throw IntegrityError("projective_plane: count");
  return ps;
}

// isotropic projective points of the hermitian form <u,v> = u0 conj(v2) +
// u1 conj(v1) + u2 conj(v0) over GF(q^2), conj = x^q
inline PointSpace3 hermitian_isotropic_points(const FieldRef& F2, u64 q) {
  PointSpace3 ps;
  ps.F = F2;
  auto conj = [&](u32 x) { return F2->pow(x, q); };
  auto herm = [&](const Vec3& u, const Vec3& v) {
    u32 s = F2->mul(u[0], conj(v[2]));
    s = F2->add(s, F2->mul(u[1], conj(v[1])));
    s = F2->add(s, F2->mul(u[2], conj(v[0])));
    return s;
  };
  u64 q2 = F2->size_q;
  auto consider = [&](Vec3 v) {
    if (herm(v, v) == 0 && !ps.index.count(v)) {
      ps.index.emplace(v, u32(ps.points.size()));
      ps.points.push_back(v);
    }
  };
  for (u64 a = 0; a < q2; ++a)
    for (u64 b = 0; b < q2; ++b) consider({1, u32(a), u32(b)});
  for (u64 a = 0; a < q2; ++a) consider({0, 1, u32(a)});
  consider({0, 0, 1});
  if (ps.points.size() != q * q * q + 1)
    throw IntegrityError("hermitian_isotropic_points: expected q^3+1 points");
  return ps;
}

}  // namespace build_detail

// ---------------------------------------------------------------------------
// named builders

struct BuiltGroup {
  PermGroup group = PermGroup::trivial(1);
  // canonical field-automorphism permutation of the same point set, when the
  // family has one (used by the ".n" extensions)
  std::optional<Perm> field_auto;
  u64 field_auto_order = 1;
};

inline PermGroup alternating_group(u64 n) {
  if (n > 20) throw CapError("alternating: order over the 64-bit cap");
  u32 deg = u32(std::max<u64>(n, 1));
  if (n < 3) return PermGroup::trivial(deg);
  std::vector<Perm> gens{Perm::from_cycles(deg, {{0, 1, 2}})};
  std::vector<u32> cyc;
  if (n % 2 == 1) {
    for (u32 i = 0; i < n; ++i) cyc.push_back(i);
  } else {
    for (u32 i = 1; i < n; ++i) cyc.push_back(i);
  }
  gens.push_back(Perm::from_cycles(deg, {cyc}));
  PermGroup G(deg, gens);
  u64 expect = 1;
  for (u64 i = 3; i <= n; ++i) expect *= i;  // n!/2
  if (G.order() != expect) throw IntegrityError("alternating: order mismatch");
  return G;
}

inline PermGroup symmetric_group(u64 n) {
  if (n > 20) throw CapError("symmetric: order over the 64-bit cap");
  u32 deg = u32(std::max<u64>(n, 1));
  if (n < 2) return PermGroup::trivial(deg);
  std::vector<u32> cyc(n, 0u);
  std::iota(cyc.begin(), cyc.end(), 0);
  PermGroup G(deg, {Perm::from_cycles(deg, {{0, 1}}), Perm::from_cycles(deg, {cyc})});
  u64 expect = 1;
  for (u64 i = 2; i <= n; ++i) expect *= i;
  if (G.order() != expect) throw IntegrityError("symmetric: order mismatch");
  return G;
}

inline PermGroup cyclic_group(u64 n) {
  if (n > PermGroup::kDegreeCap) throw CapError("cyclic: degree over cap");
  if (n <= 1) return PermGroup::trivial(1);
  std::vector<u32> cyc(n, 0u);
  std::iota(cyc.begin(), cyc.end(), 0);
  return PermGroup(u32(n), {Perm::from_cycles(u32(n), {cyc})});
}

inline PermGroup dihedral_group(u64 n) {
  if (n < 3) throw ParseError("dihedral: n >= 3 required");
  if (n > PermGroup::kDegreeCap) throw CapError("dihedral: degree over cap");
  std::vector<u32> cyc(n, 0u);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::vector<point> refl(n, point(0));
  for (u64 i = 0; i < n; ++i) refl[i] = point((n - i) % n);
  PermGroup G(u32(n), {Perm::from_cycles(u32(n), {cyc}), Perm(std::move(refl))});
  if (G.order() != 2 * n) throw IntegrityError("dihedral: order mismatch");
  return G;
}

inline BuiltGroup build_psl2(u64 q, bool projective_general = false) {
  using namespace build_detail;
  u64 p, k;
  if (!parse_detail::is_prime_power(q, &p, &k)) throw ParseError("PSL(2,q): q not a prime power");
  if (q + 1 > PermGroup::kDegreeCap) throw CapError("PSL(2,q): degree over cap");
  FieldRef F = Field::get(p, k);
  std::vector<Perm> gens;
  // unipotents over an F_p-basis, the torus, and the Weyl element
  u32 basis = 1;
  for (u64 i = 0; i < k; ++i) {
    gens.push_back(mat2_to_line_perm({F, 1, basis, 0, 1}));
    basis = u32(basis * p);
  }
  gens.push_back(mat2_to_line_perm({F, 0, 1, F->neg(1), 0}));
  if (q > 3) gens.push_back(mat2_to_line_perm({F, F->gen, 0, 0, F->inv(F->gen)}));
  if (projective_general && q > 2)
    gens.push_back(mat2_to_line_perm({F, F->gen, 0, 0, 1}));
  BuiltGroup bg;
  bg.group = PermGroup(u32(q + 1), gens);
  u64 expect = projective_general ? q * (q * q - 1) : q * (q * q - 1) / std::gcd<u64>(2, q - 1);
  if (bg.group.order() != expect) throw IntegrityError("PSL/PGL(2,q): order mismatch");
  bg.field_auto = frobenius_line_perm(F);
  bg.field_auto_order = k;
  return bg;
}

inline PermGroup build_sl2_vectors(u64 q) {
  // faithful action on the nonzero vectors of F_q^2 (used when the center is
  // nontrivial, i.e. q odd)
  using namespace build_detail;
  u64 p, k;
  parse_detail::is_prime_power(q, &p, &k);
  if (q * q - 1 > PermGroup::kDegreeCap) throw CapError("SL(2,q): degree over cap");
  FieldRef F = Field::get(p, k);
  std::vector<std::pair<u32, u32>> vecs;
  std::map<std::pair<u32, u32>, u32> vid;
  for (u64 x = 0; x < q; ++x)
    for (u64 y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      vid.emplace(std::make_pair(u32(x), u32(y)), u32(vecs.size()));
      vecs.emplace_back(u32(x), u32(y));
    }
  auto to_perm = [&](const Mat2& M) {
    std::vector<point> img(vecs.size());
    for (u32 i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      u32 nx = F->add(F->mul(M.a, x), F->mul(M.b, y));
      u32 ny = F->add(F->mul(M.c, x), F->mul(M.d, y));
      img[i] = point(vid.at({nx, ny}));
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  u32 basis = 1;
  for (u64 i = 0; i < k; ++i) {
    gens.push_back(to_perm({F, 1, basis, 0, 1}));
    basis = u32(basis * p);
  }
  gens.push_back(to_perm({F, 0, 1, F->neg(1), 0}));
  if (q > 3) gens.push_back(to_perm({F, F->gen, 0, 0, F->inv(F->gen)}));
  PermGroup G(u32(vecs.size()), gens);
  if (G.order() != q * (q * q - 1)) throw IntegrityError("SL(2,q): order mismatch");
  return G;
}

inline BuiltGroup build_psl3(u64 q, bool special_linear_points = false) {
  using namespace build_detail;
  u64 p, k;
  if (!parse_detail::is_prime_power(q, &p, &k)) throw ParseError("PSL(3,q): q not a prime power");
  FieldRef F = Field::get(p, k);
  u64 center = std::gcd<u64>(3, q - 1);
  bool on_vectors = special_linear_points && center > 1;
  if (!on_vectors && q * q + q + 1 > PermGroup::kDegreeCap)
    throw CapError("PSL(3,q): degree over cap");
  if (on_vectors && q * q * q - 1 > PermGroup::kDegreeCap)
    throw CapError("SL(3,q): degree over cap");

  std::vector<Mat3> mats;
  auto ident = [&]() {
    Mat3 M{F, {}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) M.m[i][j] = i == j ? 1 : 0;
    return M;
  };
  u32 basis = 1;
  for (u64 i = 0; i < k; ++i) {
    for (auto [r, c] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 2}, {2, 1}}) {
      Mat3 M = ident();
      M.m[r][c] = basis;
      mats.push_back(M);
    }
    basis = u32(basis * p);
  }

  std::vector<Perm> gens;
  u32 degree;
  if (on_vectors) {
    // nonzero vectors of F^3
    std::vector<Vec3> vecs;
    std::map<Vec3, u32> vid;
    for (u64 a = 0; a < q; ++a)
      for (u64 b = 0; b < q; ++b)
        for (u64 c = 0; c < q; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          Vec3 v{u32(a), u32(b), u32(c)};
          vid.emplace(v, u32(vecs.size()));
          vecs.push_back(v);
        }
    for (const auto& M : mats) {
      std::vector<point> img(vecs.size());
      for (u32 i = 0; i < vecs.size(); ++i) img[i] = point(vid.at(mat3_apply(M, vecs[i])));
      gens.emplace_back(std::move(img));
    }
    degree = u32(vecs.size());
  } else {
    PointSpace3 ps = projective_plane(F);
    for (const auto& M : mats) gens.push_back(ps.to_perm(M));
    degree = u32(ps.points.size());
  }
  BuiltGroup bg;
  bg.group = PermGroup(degree, gens);
  u64 sl_order = q * q * q;
  sl_order *= q * q * q - 1;
  sl_order *= q * q - 1;
  u64 expect = on_vectors ? sl_order : sl_order / center;
  if (special_linear_points && !on_vectors) expect = sl_order / center;  // SL = PSL here
  if (bg.group.order() != expect) throw IntegrityError("PSL/SL(3,q): order mismatch");
  return bg;
}

inline BuiltGroup build_psu3(u64 q) {
  using namespace build_detail;
  u64 p, k;
  if (!parse_detail::is_prime_power(q, &p, &k)) throw ParseError("PSU(3,q): q not a prime power");
  if (q * q * q + 1 > PermGroup::kDegreeCap) throw CapError("PSU(3,q): degree over cap");
  FieldRef F2 = Field::get(p, 2 * k);  // GF(q^2)
  auto conj = [&](u32 x) { return F2->pow(x, q); };
  PointSpace3 ps = hermitian_isotropic_points(F2, q);

  // root subgroup: upper unitriangular unitary determinant-one matrices
  // [[1,a,b],[0,1,c],[0,0,1]]; the form forces c = -conj(a) and
  // b + conj(b) + a conj(a) = 0
  std::vector<Mat3> roots;
  u64 q2 = F2->size_q;
  for (u64 a = 0; a < q2 && roots.size() < 4096; ++a)
    for (u64 b = 0; b < q2; ++b) {
      u32 aa = u32(a), bb = u32(b);
      if (F2->add(F2->add(bb, conj(bb)), F2->mul(aa, conj(aa))) != 0) continue;
      Mat3 M{F2, {}};
      M.m[0][0] = M.m[1][1] = M.m[2][2] = 1;
      M.m[0][1] = aa;
      M.m[0][2] = bb;
      M.m[1][2] = F2->neg(conj(aa));
      roots.push_back(M);
    }
  if (roots.size() != q * q * q) throw IntegrityError("PSU(3,q): root group size");

  // torus diag(t, t^{q-1}, t^{-q}) and the antidiagonal Weyl element
  Mat3 T{F2, {}};
  T.m[0][0] = F2->gen;
  T.m[1][1] = F2->pow(F2->gen, q - 1);
  T.m[2][2] = F2->inv(F2->pow(F2->gen, q));
  Mat3 W{F2, {}};
  W.m[0][2] = 1;
  W.m[1][1] = F2->neg(1);
  W.m[2][0] = 1;

  u64 su_order = q * q * q;
  su_order *= q * q * q + 1;
  su_order *= q * q - 1;
  u64 expect = su_order / std::gcd<u64>(3, q + 1);

  std::vector<Perm> gens{ps.to_perm(T), ps.to_perm(W)};
  BuiltGroup bg;
  // add root elements until the whole group is generated
  for (const auto& R : roots) {
    PermGroup probe(u32(ps.points.size()), gens);
    if (probe.order() == expect) break;
    gens.push_back(ps.to_perm(R));
  }
  bg.group = PermGroup(u32(ps.points.size()), gens);
  if (bg.group.order() != expect) throw IntegrityError("PSU(3,q): order mismatch");
  return bg;
}

// Suzuki group on its ovoid: 1 + q^2 points, q = 2^(2m+1), theta = 2^(m+1)
inline BuiltGroup build_sz8() {
  FieldRef F = Field::get(2, 3);
  const u64 q = 8;
  const u64 theta = 4;  // x -> x^4, with theta^2 = 2q
  auto enc = [&](u32 x, u32 y) { return point(1 + 8 * x + y); };
  const point INF = 0;
  auto make = [&](auto&& fn) {
    std::vector<point> img(65);
    img[INF] = INF;
    for (u32 x = 0; x < 8; ++x)
      for (u32 y = 0; y < 8; ++y) img[enc(x, y)] = fn(x, y);
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  // translations (x,y) -> (x+a, y+b+x a^theta)
  for (u32 a : {1u, 2u, 4u}) {
    u32 at = F->pow(a, theta);
    gens.push_back(make([&](u32 x, u32 y) {
      return enc(F->add(x, a), F->add(y, F->mul(x, at)));
    }));
    gens.push_back(make([&](u32 x, u32 y) { return enc(x, F->add(y, a)); }));
  }
  // torus (x,y) -> (gx, g^{theta+1} y)
  {
    u32 g = F->gen, gt = F->pow(F->gen, theta + 1);
    gens.push_back(make([&](u32 x, u32 y) { return enc(F->mul(g, x), F->mul(gt, y)); }));
  }
  // involution swapping infinity and the origin:
  // (x,y) -> (y/f, x/f) with f = x^(theta+2) + xy + y^theta
  {
    std::vector<point> img(65);
    img[INF] = enc(0, 0);
    img[enc(0, 0)] = INF;
    for (u32 x = 0; x < 8; ++x)
      for (u32 y = 0; y < 8; ++y) {
        if (x == 0 && y == 0) continue;
        u32 f = F->add(F->add(F->pow(x, theta + 2), F->mul(x, y)), F->pow(y, theta));
        if (f == 0) throw IntegrityError("Sz(8): ovoid norm vanished");
        u32 fi = F->inv(f);
        img[enc(x, y)] = enc(F->mul(y, fi), F->mul(x, fi));
      }
    Perm tau(std::move(img));
    if (!(tau * tau).is_identity()) throw IntegrityError("Sz(8): involution check failed");
    gens.push_back(std::move(tau));
  }
  BuiltGroup bg;
  bg.group = PermGroup(65, gens);
  if (bg.group.order() != q * q * (q * q + 1) * (q - 1))
    throw IntegrityError("Sz(8): order mismatch");
  // coordinate Frobenius (x,y) -> (x^2, y^2)
  std::vector<point> img(65);
  img[INF] = INF;
  for (u32 x = 0; x < 8; ++x)
    for (u32 y = 0; y < 8; ++y) img[enc(x, y)] = enc(F->frobenius(x), F->frobenius(y));
  bg.field_auto = Perm(std::move(img));
  bg.field_auto_order = 3;
  return bg;
}

// ---------------------------------------------------------------------------
// recursive builder

inline BuiltGroup build_built(const DescPtr& d);

inline PermGroup build_group(const DescPtr& d) { return build_built(d).group; }

inline PermGroup build_group(const std::string& descriptor) {
  return build_group(parse_descriptor(descriptor));
}

inline BuiltGroup build_built(const DescPtr& d) {
  switch (d->kind) {
    case Descriptor::Kind::Named: {
      const std::string& f = d->family;
      if (f == "A") return {alternating_group(d->params[0]), std::nullopt, 1};
      if (f == "S") return {symmetric_group(d->params[0]), std::nullopt, 1};
      if (f == "C") return {cyclic_group(d->params[0]), std::nullopt, 1};
      if (f == "D") return {dihedral_group(d->params[0]), std::nullopt, 1};
      if (f == "PSL" && d->params[0] == 2) return build_psl2(d->params[1]);
      if (f == "PGL") return build_psl2(d->params[1], /*projective_general=*/true);
      if (f == "PSL" && d->params[0] == 3) return build_psl3(d->params[1]);
      if (f == "SL" && d->params[0] == 3) return build_psl3(d->params[1], true);
      if (f == "SL" && d->params[0] == 2) {
        u64 q = d->params[1];
        if (q % 2 == 0) return build_psl2(q);  // trivial center
        return {build_sl2_vectors(q), std::nullopt, 1};
      }
      if (f == "PSU") return build_psu3(d->params[1]);
      if (f == "Sz") return build_sz8();
      if (f == "J1")
        throw ParseError("J1: optional generator data is not bundled in this build");
      throw ParseError("unknown family: " + f);
    }
    case Descriptor::Kind::Product: {
      BuiltGroup acc = build_built(d->factors[0]);
      std::optional<Perm> fa = acc.field_auto;
      u64 fao = acc.field_auto_order;
      u32 auto_block_offset = 0, auto_block_degree = acc.group.degree();
      bool auto_unique = fa.has_value() && fao > 1;
      for (size_t i = 1; i < d->factors.size(); ++i) {
        BuiltGroup next = build_built(d->factors[i]);
        u32 off = acc.group.degree();
        if (next.field_auto.has_value() && next.field_auto_order > 1) {
          if (auto_unique) {
            auto_unique = false;  // ambiguous; no canonical extension
          } else {
            auto_unique = true;
            fa = next.field_auto;
            fao = next.field_auto_order;
            auto_block_offset = off;
            auto_block_degree = next.group.degree();
          }
        }
        acc.group = direct_product(acc.group, next.group);
      }
      BuiltGroup bg;
      bg.group = acc.group;
      if (auto_unique && fa.has_value()) {
        // embed the factor automorphism, identity elsewhere
        std::vector<point> img(bg.group.degree());
        std::iota(img.begin(), img.end(), point(0));
        for (u32 i = 0; i < auto_block_degree; ++i)
          img[auto_block_offset + i] = point(auto_block_offset + (*fa)[i]);
        bg.field_auto = Perm(std::move(img));
        bg.field_auto_order = fao;
      }
      return bg;
    }
    case Descriptor::Kind::Wreath: {
      const Descriptor& r = *d->wr_right;
      if (r.kind != Descriptor::Kind::Named || r.family != "C" || r.params[0] != 2)
        throw ParseError("wreath: only 'wr C2' is supported");
      BuiltGroup l = build_built(d->wr_left);
      return {wreath_c2(l.group), std::nullopt, 1};
    }
    case Descriptor::Kind::Extension: {
      BuiltGroup base = build_built(d->base);
      if (!base.field_auto.has_value() || base.field_auto_order != d->ext_order)
        throw ParseError("extension ." + std::to_string(d->ext_order) +
                         " undefined for base " + d->base->str());
      const Perm& phi = *base.field_auto;
      // the automorphism must normalize the base group
      for (const auto& g : base.group.generators())
        if (!base.group.contains(g.conj(phi)))
          throw IntegrityError("extension: automorphism does not normalize the base");
      std::vector<Perm> gens = base.group.generators();
      gens.push_back(phi);
      PermGroup E(base.group.degree(), gens);
      if (E.order() != base.group.order() * d->ext_order)
        throw IntegrityError("extension: order mismatch");
      return {std::move(E), std::nullopt, 1};
    }
  }
  throw IntegrityError("build: unreachable");
}

// ---------------------------------------------------------------------------
// |Out(S)| for the tabulated simple families

inline u64 out_order(const DescPtr& d) {
  if (d->kind != Descriptor::Kind::Named)
    throw std::invalid_argument("out_order: not a named simple group");
  const std::string& f = d->family;
  u64 nu = 0, p = 0;
  auto prime_power_nu = [&](u64 q) {
    parse_detail::is_prime_power(q, &p, &nu);
    return nu;
  };
  if (f == "A") {
    u64 n = d->params[0];
    if (n < 5) throw std::invalid_argument("out_order: alternating group not simple");
    return n == 6 ? 4 : 2;
  }
  if (f == "PSL" && d->params[0] == 2) {
    u64 q = d->params[1];
    return std::gcd<u64>(2, q - 1) * prime_power_nu(q);
  }
  if ((f == "PSL" || f == "SL") && d->params[0] == 3) {
    u64 q = d->params[1];
    return 2 * std::gcd<u64>(3, q - 1) * prime_power_nu(q);
  }
  if (f == "PSU" && d->params[0] == 3) {
    u64 q = d->params[1];
    return 2 * std::gcd<u64>(3, q + 1) * prime_power_nu(q);
  }
  if (f == "Sz") return prime_power_nu(d->params[0]);
  throw std::invalid_argument("out_order: family not tabulated");
}

inline u64 out_order(const std::string& descriptor) {
  return out_order(parse_descriptor(descriptor));
}

}  // namespace realchar
