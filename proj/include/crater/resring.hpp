#pragma once

#include <map>
#include <set>

#include <crater/qorder.hpp>

namespace crater {

// The residue ring O/NO, realized as (Z/N)[Phi] with the inherited relation
// Phi^2 = s*Phi - m.  Elements are coefficient pairs (a, b) mod N standing
// for a + b*Phi.  A pair is also read as a point of a rank-2 module with
// basis 1, Phi, which is how level structures are stored.
struct ResRing {
  QuadOrder O;
  u64 N;
  u64 s, m;

  using Elem = std::pair<u64, u64>;

  ResRing(const QuadOrder& ord, u64 modulus) : O(ord), N(modulus), s(0), m(0) {
    if (N < 1) throw std::invalid_argument("ResRing: modulus must be positive");
    s = static_cast<u64>(((O.s % static_cast<i64>(N)) + static_cast<i64>(N)) % static_cast<i64>(N));
    m = static_cast<u64>(((O.m % static_cast<i64>(N)) + static_cast<i64>(N)) % static_cast<i64>(N));
  }

  Elem make(i64 x, i64 y) const {
    i64 n = static_cast<i64>(N);
    return {static_cast<u64>(((x % n) + n) % n), static_cast<u64>(((y % n) + n) % n)};
  }
  Elem zero() const { return {0, 0}; }
  Elem one() const { return make(1, 0); }
  Elem phi() const { return make(0, 1); }
  Elem add(const Elem& a, const Elem& b) const {
    return {(a.first + b.first) % N, (a.second + b.second) % N};
  }
  Elem neg(const Elem& a) const {
    return {a.first ? N - a.first : 0, a.second ? N - a.second : 0};
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& u, const Elem& v) const {
    u64 a = u.first, b = u.second, c = v.first, d = v.second;
    u64 bd = (b * d) % N;
    u64 x = ((a * c) % N + N - (bd * m) % N) % N;
    u64 y = ((a * d) % N + (b * c) % N + (bd * s) % N) % N;
    return {x, y};
  }
  Elem scalar(u64 t, const Elem& a) const { return mul(make(static_cast<i64>(t), 0), a); }
  Elem conj(const Elem& a) const { return make(static_cast<i64>(a.first + a.second * s), -static_cast<i64>(a.second)); }
  u64 norm(const Elem& e) const {
    u64 a = e.first, b = e.second;
    return ((a * a) % N + (((s * a) % N) * b) % N + (((m * b) % N) * b) % N) % N;
  }
  bool is_unit(const Elem& a) const { return std::gcd(norm(a), N) == 1; }
  Elem inv(const Elem& a) const {
    u64 nm = norm(a);
    if (std::gcd(nm, N) != 1) throw std::invalid_argument("ResRing: inverse of a non-unit");
    auto [g, u, v] = ext_gcd(static_cast<i64>(nm), static_cast<i64>(N));
    (void)g;
    (void)v;
    return scalar(static_cast<u64>(((u % static_cast<i64>(N)) + static_cast<i64>(N)) % static_cast<i64>(N)), conj(a));
  }
  Elem pow(Elem a, u64 e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 unit_order(const Elem& a) const {
    if (!is_unit(a)) throw std::invalid_argument("ResRing: order of a non-unit");
    Elem t = a;
    u64 k = 1;
    while (!(t == one())) {
      t = mul(t, a);
      ++k;
      if (k > N * N) throw std::runtime_error("ResRing: runaway unit order");
    }
    return k;
  }
  u64 additive_order(const Elem& a) const { return N / std::gcd(std::gcd(a.first, a.second), N); }
  std::vector<Elem> all_units() const {
    std::vector<Elem> out;
    for (u64 a = 0; a < N; ++a)
      for (u64 b = 0; b < N; ++b)
        if (is_unit({a, b})) out.push_back({a, b});
    return out;
  }
};

// O modulo an arbitrary integral ideal, with coset representatives taken in
// the Hermite box (x in [0, a), y in [0, c)).  Used for the per-stratum unit
// orders, where the modulus is a proper divisor of NO.
struct QuotientRing {
  QuadIdeal I;

  using Elem = std::pair<i64, i64>;

  explicit QuotientRing(const QuadIdeal& ideal) : I(ideal) {}

  Elem reduce(i64 x, i64 y) const {
    i64 v = ((y % I.c) + I.c) % I.c;
    i128 t = (i128(y) - v) / I.c;
    i128 xr = i128(x) - t * I.b;
    i64 u = static_cast<i64>(((xr % I.a) + I.a) % I.a);
    return {u, v};
  }
  Elem from(const QuadOrder::Elem& e) const { return reduce(e.first, e.second); }
  Elem one() const { return reduce(1, 0); }
  Elem mul(const Elem& a, const Elem& b) const {
    auto p = I.O.mul(a, b);
    return reduce(p.first, p.second);
  }
  bool is_unit(const Elem& a) const {
    if (a.first == 0 && a.second == 0) return I.norm() == 1;
    return QuadIdeal::span(I.O, {{a.first, a.second}, {I.a, 0}, {I.b, I.c}}) ==
           QuadIdeal::of_integer(I.O, 1);
  }
  u64 unit_order(const Elem& a0) const {
    Elem a = reduce(a0.first, a0.second);
    if (!is_unit(a)) throw std::invalid_argument("QuotientRing: order of a non-unit");
    Elem t = a;
    u64 k = 1;
    u64 cap = static_cast<u64>(I.norm()) + 1;
    while (!(t == one())) {
      t = mul(t, a);
      ++k;
      if (k > cap) throw std::runtime_error("QuotientRing: runaway unit order");
    }
    return k;
  }
};

enum class LevelKind { gamma0, gamma1, full };

inline const char* kind_name(LevelKind k) {
  switch (k) {
    case LevelKind::gamma0: return "gamma0";
    case LevelKind::gamma1: return "gamma1";
    case LevelKind::full: return "full";
  }
  throw std::invalid_argument("kind_name: bad kind");
}

inline LevelKind kind_from_name(const std::string& s) {
  if (s == "gamma0") return LevelKind::gamma0;
  if (s == "gamma1") return LevelKind::gamma1;
  if (s == "full") return LevelKind::full;
  throw std::invalid_argument("kind_from_name: unknown kind " + s);
}

// A level structure on the module (Z/N)^2 = O/NO, stored by canonical
// representative points: the lex-least generator of the cyclic subgroup
// (gamma0), the lex-least of P and -P (gamma1), or the simultaneous-sign
// representative of a basis pair (full).
struct LevelStructure {
  std::vector<ResRing::Elem> pts;
  bool operator==(const LevelStructure& o) const { return pts == o.pts; }
  bool operator<(const LevelStructure& o) const { return pts < o.pts; }
};

inline LevelStructure canonical_structure(const ResRing& R, LevelKind kind,
                                          std::vector<ResRing::Elem> pts) {
  switch (kind) {
    case LevelKind::gamma0: {
      ResRing::Elem best = pts[0];
      for (u64 t = 2; t < R.N; ++t) {
        if (std::gcd(t, R.N) != 1) continue;
        best = std::min(best, R.scalar(t, pts[0]));
      }
      return {{best}};
    }
    case LevelKind::gamma1:
      return {{std::min(pts[0], R.neg(pts[0]))}};
    case LevelKind::full: {
      std::vector<ResRing::Elem> flip{R.neg(pts[0]), R.neg(pts[1])};
      return {std::min(pts, flip)};
    }
  }
  throw std::invalid_argument("canonical_structure: bad kind");
}

// Every level structure of the given kind, sorted.
inline std::vector<LevelStructure> enumerate_structures(const ResRing& R, LevelKind kind) {
  std::set<LevelStructure> out;
  if (kind == LevelKind::full) {
    for (u64 p1 = 0; p1 < R.N; ++p1)
      for (u64 p2 = 0; p2 < R.N; ++p2)
        for (u64 q1 = 0; q1 < R.N; ++q1)
          for (u64 q2 = 0; q2 < R.N; ++q2) {
            u64 det = (p1 * q2 % R.N + R.N - p2 * q1 % R.N) % R.N;
            if (std::gcd(det, R.N) != 1) continue;
            out.insert(canonical_structure(R, kind, {{p1, p2}, {q1, q2}}));
          }
  } else {
    for (u64 a = 0; a < R.N; ++a)
      for (u64 b = 0; b < R.N; ++b) {
        ResRing::Elem P{a, b};
        if (R.additive_order(P) != R.N) continue;
        out.insert(canonical_structure(R, kind, {P}));
      }
  }
  return {out.begin(), out.end()};
}

// Image of a structure under multiplication by a unit of the ring.
inline LevelStructure act_unit(const ResRing& R, LevelKind kind, const LevelStructure& S,
                               const ResRing::Elem& u) {
  std::vector<ResRing::Elem> im;
  im.reserve(S.pts.size());
  for (const auto& P : S.pts) im.push_back(R.mul(u, P));
  return canonical_structure(R, kind, std::move(im));
}

// O-annihilator of the structure's generating points, as an integral ideal
// between NO and O.
inline QuadIdeal structure_annihilator(const ResRing& R, LevelKind kind, const LevelStructure& S) {
  (void)kind;
  std::vector<QuadOrder::Elem> gens{{static_cast<i64>(R.N), 0}};
  for (i64 u = 0; u < static_cast<i64>(R.N); ++u)
    for (i64 v = 0; v < static_cast<i64>(R.N); ++v) {
      bool kills = true;
      for (const auto& P : S.pts)
        if (!(R.mul(R.make(u, v), P) == R.zero())) {
          kills = false;
          break;
        }
      if (kills) gens.push_back({u, v});
    }
  return QuadIdeal::span(R.O, gens);
}

// Orbits of the structure set under the group generated by the given units.
inline std::vector<std::vector<LevelStructure>> structure_orbits(
    const ResRing& R, LevelKind kind, const std::vector<ResRing::Elem>& gens) {
  for (const auto& g : gens)
    if (!R.is_unit(g)) throw std::invalid_argument("structure_orbits: generator is not a unit");
  auto all = enumerate_structures(R, kind);
  std::map<LevelStructure, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<bool> seen(all.size(), false);
  std::vector<std::vector<LevelStructure>> orbits;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> todo{i};
    std::vector<LevelStructure> orb;
    seen[i] = true;
    while (!todo.empty()) {
      std::size_t j = todo.back();
      todo.pop_back();
      orb.push_back(all[j]);
      for (const auto& g : gens) {
        auto im = act_unit(R, kind, all[j], g);
        auto it = index.find(im);
        if (it == index.end()) throw std::runtime_error("structure_orbits: action left the set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          todo.push_back(it->second);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return orbits;
}

// Multiset of orbit sizes: size -> number of orbits of that size.
inline std::map<u64, u64> orbit_profile(const ResRing& R, LevelKind kind,
                                        const std::vector<ResRing::Elem>& gens) {
  std::map<u64, u64> prof;
  for (const auto& orb : structure_orbits(R, kind, gens)) ++prof[orb.size()];
  return prof;
}

}  // namespace crater
