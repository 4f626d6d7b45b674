#pragma once

#include <crater/arith.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crater {

// Affine point on a short Weierstrass curve over the field F.  The default
// constructed point is the point at infinity.
template <class F>
struct EPoint {
  bool inf = true;
  typename F::Elem x{};
  typename F::Elem y{};
};

// Group arithmetic on y^2 = x^3 + A x + B over a field object.  The field is
// any type with the Fp/ExtField element interface; coefficients live in it.
template <class F>
struct CurveOps {
  using Elem = typename F::Elem;
  using Pt = EPoint<F>;

  F fld;
  Elem A, B;

  CurveOps(const F& field, const Elem& a, const Elem& b) : fld(field), A(a), B(b) {}

  Pt infinity() const { return Pt{}; }

  // x^3 + A x + B.
  Elem rhs(const Elem& x) const {
    return fld.add(fld.mul(x, fld.add(fld.mul(x, x), A)), B);
  }

  bool on(const Pt& P) const {
    if (P.inf) return true;
    return fld.eq(fld.mul(P.y, P.y), rhs(P.x));
  }

  Pt make(const Elem& x, const Elem& y) const {
    Pt P{false, x, y};
    if (!on(P)) throw std::invalid_argument("CurveOps: point is not on the curve");
    return P;
  }

  bool eq(const Pt& P, const Pt& Q) const {
    if (P.inf || Q.inf) return P.inf == Q.inf;
    return fld.eq(P.x, Q.x) && fld.eq(P.y, Q.y);
  }

  // Total order with infinity first, then (x, y) lexicographically.
  bool less(const Pt& P, const Pt& Q) const {
    if (P.inf != Q.inf) return P.inf;
    if (P.inf) return false;
    if (!(P.x == Q.x)) return P.x < Q.x;
    return P.y < Q.y;
  }

  Pt neg(const Pt& P) const {
    if (P.inf) return P;
    return Pt{false, P.x, fld.neg(P.y)};
  }

  Pt add(const Pt& P, const Pt& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (fld.eq(P.x, Q.x)) {
      if (fld.eq(P.y, fld.neg(Q.y))) return infinity();
      // doubling; P.y != 0 here since y = -y would have matched above
      Elem num = fld.add(fld.mul(fld.from_u64(3), fld.mul(P.x, P.x)), A);
      Elem s = fld.mul(num, fld.inv(fld.add(P.y, P.y)));
      Elem x3 = fld.sub(fld.mul(s, s), fld.add(P.x, Q.x));
      Elem y3 = fld.sub(fld.mul(s, fld.sub(P.x, x3)), P.y);
      return Pt{false, x3, y3};
    }
    Elem s = fld.mul(fld.sub(Q.y, P.y), fld.inv(fld.sub(Q.x, P.x)));
    Elem x3 = fld.sub(fld.sub(fld.mul(s, s), P.x), Q.x);
    Elem y3 = fld.sub(fld.mul(s, fld.sub(P.x, x3)), P.y);
    return Pt{false, x3, y3};
  }

  Pt sub(const Pt& P, const Pt& Q) const { return add(P, neg(Q)); }

  Pt scalar(u64 n, const Pt& P) const {
    Pt r = infinity(), base = P;
    while (n) {
      if (n & 1) r = add(r, base);
      base = add(base, base);
      n >>= 1;
    }
    return r;
  }

  Pt scalar(const mpz_class& n, const Pt& P) const {
    if (n < 0) throw std::invalid_argument("CurveOps: negative scalar");
    Pt r = infinity();
    for (mp_bitcnt_t i = mpz_sizeinbase(n.get_mpz_t(), 2); i-- > 0;) {
      r = add(r, r);
      if (mpz_tstbit(n.get_mpz_t(), i)) r = add(r, P);
    }
    return r;
  }

  // Exact order of P given a multiple M of it (e.g. the group order).
  u64 point_order(const Pt& P, u64 M) const {
    if (!eq(scalar(M, P), infinity()))
      throw std::invalid_argument("CurveOps: M is not a multiple of the point order");
    u64 d = M;
    for (auto [q, e] : factor_u64(M)) {
      (void)e;
      while (d % q == 0 && eq(scalar(d / q, P), infinity())) d /= q;
    }
    return d;
  }
};

// Point-count data for a curve over its prime field: #E(F_p) = p + 1 - trace,
// frob_disc = trace^2 - 4p is the discriminant of Frobenius (negative).
struct CurveCount {
  u64 order;
  i64 trace;
  i64 frob_disc;
};

// Ordinary short Weierstrass curve y^2 = x^3 + a x + b over F_p, p >= 5,
// with j not in {0, 1728}.  The trace cache is filled once by point_count.
struct Curve {
  Fp F;
  u64 a, b;
  u64 j;
  std::optional<CurveCount> counted;

  Curve(const Fp& field, u64 a_, u64 b_) : F(field), a(field.from_u64(a_)), b(field.from_u64(b_)) {
    if (F.p < 5) throw std::invalid_argument("Curve: characteristic must be at least 5");
    u64 a3 = F.mul(a, F.mul(a, a));
    u64 disc = F.add(F.mul(F.from_u64(4), a3), F.mul(F.from_u64(27), F.mul(b, b)));
    if (disc == 0) throw std::invalid_argument("Curve: singular equation (4a^3 + 27b^2 = 0)");
    j = F.mul(F.from_u64(1728), F.mul(F.mul(F.from_u64(4), a3), F.inv(disc)));
    if (j == 0) throw std::invalid_argument("Curve: j = 0 is excluded");
    if (j == F.from_u64(1728)) throw std::invalid_argument("Curve: j = 1728 is excluded");
  }

  CurveOps<Fp> ops() const { return CurveOps<Fp>(F, a, b); }
};

// #E(F_p) by summing quadratic characters of x^3 + ax + b.
inline u64 count_points_exhaustive(const Fp& F, u64 a, u64 b) {
  const u64 p = F.p;
  i64 total = static_cast<i64>(p) + 1;
  for (u64 x = 0; x < p; ++x) {
    u64 fx = F.add(F.mul(x, F.add(F.mul(x, x), a)), b);
    if (fx == 0) continue;
    u64 chi = F.pow(fx, (p - 1) / 2);
    total += (chi == 1) ? 1 : -1;
  }
  return static_cast<u64>(total);
}

// #E(F_p) by intersecting, over sampled points, the sets of annihilating
// multiples inside the Hasse interval [p + 1 - 2 sqrt p, p + 1 + 2 sqrt p].
inline u64 count_points_bsgs(const Fp& F, u64 a, u64 b) {
  const u64 p = F.p;
  CurveOps<Fp> C(F, a, b);
  using Pt = CurveOps<Fp>::Pt;
  const u64 s = isqrt_u64(4 * p);
  const u64 L = p + 1 - s, R = p + 1 + s;

  auto annihilators = [&](const Pt& P) {
    std::vector<u64> valid;
    const u64 W = R - L + 1;
    const u64 g = isqrt_u64(W) + 1;
    // baby steps jP for j in [0, g); if the order of P is below g it shows up
    // as an infinity hit and the multiples of it fill the interval directly
    std::map<std::pair<u64, u64>, u64> baby;
    Pt T = C.infinity();
    for (u64 jstep = 0; jstep < g; ++jstep) {
      if (T.inf && jstep > 0) {
        u64 d = jstep;  // order of P divides every annihilating multiple
        for (u64 M = ((L + d - 1) / d) * d; M <= R; M += d) valid.push_back(M);
        return valid;
      }
      std::pair<u64, u64> key = T.inf ? std::pair<u64, u64>{p, p} : std::pair<u64, u64>{T.x, T.y};
      baby.emplace(key, jstep);
      T = C.add(T, P);
    }
    Pt G = C.scalar(g, P);
    Pt cur = C.scalar(L, P);
    for (u64 i = 0; L + i * g <= R; ++i) {
      // (L + ig + j) P = O  <=>  jP = -cur
      Pt target = C.neg(cur);
      std::pair<u64, u64> key =
          target.inf ? std::pair<u64, u64>{p, p} : std::pair<u64, u64>{target.x, target.y};
      auto it = baby.find(key);
      if (it != baby.end()) {
        u64 M = L + i * g + it->second;
        if (M >= L && M <= R) valid.push_back(M);
      }
      cur = C.add(cur, G);
    }
    return valid;
  };

  std::vector<u64> candidates;
  bool seeded = false;
  for (u64 x = 0; x < p; ++x) {
    u64 fx = F.add(F.mul(x, F.add(F.mul(x, x), a)), b);
    std::optional<u64> y;
    if (fx == 0)
      y = 0;
    else if (F.pow(fx, (p - 1) / 2) == 1)
      y = canonical_sqrt(F, fx);
    if (!y) continue;
    Pt P = C.make(x, *y);
    std::vector<u64> valid = annihilators(P);
    if (!seeded) {
      candidates = std::move(valid);
      seeded = true;
    } else {
      std::vector<u64> merged;
      std::set_intersection(candidates.begin(), candidates.end(), valid.begin(), valid.end(),
                            std::back_inserter(merged));
      candidates = std::move(merged);
    }
    if (candidates.empty()) throw std::runtime_error("count_points_bsgs: inconsistent samples");
    if (candidates.size() == 1) return candidates[0];
  }
  throw std::runtime_error("count_points_bsgs: group order is ambiguous");
}

// Count, cache and return the point-count data; rejects supersingular curves.
inline const CurveCount& point_count(Curve& E) {
  if (E.counted) return *E.counted;
  const u64 p = E.F.p;
  u64 M = p < 10000 ? count_points_exhaustive(E.F, E.a, E.b) : count_points_bsgs(E.F, E.a, E.b);
  i64 t = static_cast<i64>(p) + 1 - static_cast<i64>(M);
  if (t * t > 4 * static_cast<i64>(p))
    throw std::runtime_error("point_count: trace violates the Hasse bound");
  if (t % static_cast<i64>(p) == 0)
    throw std::runtime_error("point_count: supersingular curve (trace divisible by p)");
  E.counted = CurveCount{M, t, t * t - 4 * static_cast<i64>(p)};
  return *E.counted;
}

// k-th symmetric power of the Frobenius trace: t_0 = 2, t_1 = t,
// t_{k+1} = t t_k - p t_{k-1}; then #E(F_{p^k}) = p^k + 1 - t_k.
inline mpz_class trace_power(i64 t, u64 p, u64 k) {
  mpz_class t0 = 2, t1 = t;
  if (k == 0) return t0;
  for (u64 i = 1; i < k; ++i) {
    mpz_class t2 = t * t1 - mpz_class(p) * t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

inline mpz_class order_ext(u64 p, i64 t, u64 k) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
  return pk + 1 - trace_power(t, p, k);
}

// x-only division polynomials P_0 .. P_m: the full psi_m equals P_m for odd m
// and y P_m for even m (so psi_2^2 = 4 (x^3 + ax + b)).  deg P_m is
// (m^2 - 1)/2 for odd m and (m^2 - 4)/2 for even m.
inline std::vector<PolyRing<Fp>::Poly> division_polynomials(const Curve& E, u64 m) {
  const Fp& F = E.F;
  PolyRing<Fp> R(F);
  using Poly = PolyRing<Fp>::Poly;
  const u64 a = E.a, b = E.b;

  std::vector<Poly> psi(std::max<u64>(m + 1, 5));
  psi[0] = R.zero();
  psi[1] = R.one();
  psi[2] = R.constant(F.from_u64(2));
  psi[3] = R.normalize({F.neg(F.mul(a, a)), F.mul(F.from_u64(12), b), F.mul(F.from_u64(6), a),
                        F.zero(), F.from_u64(3)});
  Poly inner = R.normalize(
      {F.neg(F.add(F.mul(F.from_u64(8), F.mul(b, b)), F.mul(a, F.mul(a, a)))),
       F.neg(F.mul(F.from_u64(4), F.mul(a, b))), F.neg(F.mul(F.from_u64(5), F.mul(a, a))),
       F.mul(F.from_u64(20), b), F.mul(F.from_u64(5), a), F.zero(), F.one()});
  psi[4] = R.mul_elem(inner, F.from_u64(4));

  Poly f = R.normalize({b, a, F.zero(), F.one()});
  Poly f2 = R.mul(f, f);
  u64 inv2 = F.inv(F.from_u64(2));
  for (u64 n = 5; n <= m; ++n) {
    u64 k = n / 2;
    if (n & 1) {
      // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3 with y^4 -> f^2
      // attached to whichever pair has even index
      Poly t1 = R.mul(psi[k + 2], R.mul(psi[k], R.mul(psi[k], psi[k])));
      Poly t2 = R.mul(psi[k - 1], R.mul(psi[k + 1], R.mul(psi[k + 1], psi[k + 1])));
      psi[n] = (k % 2 == 0) ? R.sub(R.mul(f2, t1), t2) : R.sub(t1, R.mul(f2, t2));
    } else {
      // psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2) / (2y)
      Poly t1 = R.mul(psi[k + 2], R.mul(psi[k - 1], psi[k - 1]));
      Poly t2 = R.mul(psi[k - 2], R.mul(psi[k + 1], psi[k + 1]));
      psi[n] = R.mul_elem(R.mul(psi[k], R.sub(t1, t2)), inv2);
    }
  }
  return psi;
}

inline PolyRing<Fp>::Poly division_polynomial(const Curve& E, u64 m) {
  if (m == 0) throw std::invalid_argument("division_polynomial: index must be positive");
  return division_polynomials(E, m)[m];
}

// Basis of the N-torsion over the minimal extension F_{p^degree}.  P is the
// least point of exact order N under the coordinate order, Q the least point
// making the N^2 combinations iP + jQ pairwise distinct.
struct TorsionBasis {
  u64 N;
  int degree;
  ExtField K;
  EPoint<ExtField> P, Q;
};

inline TorsionBasis torsion_basis(Curve& E, u64 N, int max_degree = 24) {
  const u64 p = E.F.p;
  if (N == 0) throw std::invalid_argument("torsion_basis: N must be positive");
  if (N % p == 0) throw std::invalid_argument("torsion_basis: N shares the field characteristic");
  if (N == 1) {
    ExtField K(p, 1);
    CurveOps<ExtField> C(K, K.embed(E.a), K.embed(E.b));
    return TorsionBasis{1, 1, K, C.infinity(), C.infinity()};
  }

  const CurveCount& cc = point_count(E);
  PolyRing<Fp> Rp(E.F);
  PolyRing<Fp>::Poly cubic = Rp.normalize({E.b, E.a, E.F.zero(), E.F.one()});
  // x-coordinates of E[N] \ {O} factored over F_p once.  The factor degrees
  // decide which extensions hold every x-coordinate, and one quadratic
  // character power per factor product decides whether the y-coordinates
  // follow: the character is Frobenius-invariant, hence constant on each
  // irreducible factor, so rhs^((p^k-1)/2) = 1 mod a product exactly when
  // every one of its roots lifts to two rational points.  The 2-torsion
  // x-coordinates (y = 0) always lift and are kept separate.
  auto psi_parts = distinct_degree_products(E.F, division_polynomial(E, N));
  auto two_parts = N % 2 == 0 ? distinct_degree_products(E.F, cubic) : decltype(psi_parts){};

  for (int k = 1; k <= max_degree; ++k) {
    mpz_class card = order_ext(p, cc.trace, static_cast<u64>(k));
    if (!mpz_divisible_ui_p(card.get_mpz_t(), N * N)) continue;
    bool rational = true;
    for (const auto& [d, g] : psi_parts)
      if (k % d != 0) rational = false;
    for (const auto& [d, g] : two_parts)
      if (k % d != 0) rational = false;
    if (!rational) continue;
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    half = (half - 1) / 2;
    for (const auto& [d, g] : psi_parts) {
      auto w = Rp.pow_mod(Rp.divrem(cubic, g).second, half, g);
      if (!Rp.is_zero(Rp.sub(w, Rp.one()))) {
        rational = false;
        break;
      }
    }
    if (!rational) continue;

    // k is the minimal degree carrying all of E[N]; construct the points
    ExtField K(p, k);
    CurveOps<ExtField> C(K, K.embed(E.a), K.embed(E.b));
    std::vector<EPoint<ExtField>> pts;  // all of E[N] except infinity

    mpz_class fsz;
    mpz_ui_pow_ui(fsz.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    if (fsz <= 4096) {
      // the whole field fits in a scan: enumerate the torsion directly
      u64 qn = mpz_get_ui(fsz.get_mpz_t());
      for (u64 i = 0; i < qn; ++i) {
        ExtField::Elem x = K.elem_at(i);
        ExtField::Elem fx = C.rhs(x);
        std::vector<ExtField::Elem> ys;
        if (K.is_zero(fx))
          ys.push_back(K.zero());
        else if (auto y = field_sqrt(K, fx)) {
          ys.push_back(*y);
          ys.push_back(K.neg(*y));
        }
        for (const auto& y : ys) {
          EPoint<ExtField> P = C.make(x, y);
          if (C.eq(C.scalar(N, P), C.infinity())) pts.push_back(P);
        }
      }
      if (pts.size() + 1 != N * N)
        throw std::runtime_error("torsion_basis: rational torsion does not fill out E[N]");
    } else {
      // cofactor sampling: for q^e || N the q-primary part is hit by [m]R
      // with m = #E(F_{p^k}) stripped of q; a sample deep enough yields an
      // exact order-q^e component, and components across the primes of N sum
      // to a point of exact order N.  The x-scan is deterministic; it starts
      // past the base-field constants, which sit on curves over proper
      // subfields where the torsion can collapse to a single cyclic part.
      auto fac = factor_u64(N);
      u64 scan = k > 1 ? static_cast<u64>(p) : 0;
      u64 budget = fsz < 16384 ? mpz_get_ui(fsz.get_mpz_t()) : 16384;
      auto component = [&](u64 q, u64 e) {
        mpz_class m = card;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q)))
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(q));
        while (scan < budget) {
          ExtField::Elem x = K.elem_at(scan++);
          ExtField::Elem fx = C.rhs(x);
          EPoint<ExtField> R;
          if (K.is_zero(fx))
            R = C.make(x, K.zero());
          else if (auto y = field_sqrt(K, fx))
            R = C.make(x, *y);
          else
            continue;
          EPoint<ExtField> T = C.scalar(m, R);
          std::vector<EPoint<ExtField>> chain{T};
          while (!chain.back().inf) chain.push_back(C.scalar(q, chain.back()));
          u64 depth = chain.size() - 1;  // minimal j with [q^j]T = O
          if (depth < e) continue;
          return chain[depth - e];
        }
        throw std::runtime_error("torsion_basis: sampling budget exhausted");
      };
      auto candidate = [&]() {
        EPoint<ExtField> S = C.infinity();
        for (auto [q, e] : fac) S = C.add(S, component(q, e));
        return S;
      };
      EPoint<ExtField> P0 = candidate();
      ExtField::Elem infkey(static_cast<std::size_t>(k) + 1, p);
      bool built = false;
      for (int tries = 0; tries < 256 && !built; ++tries) {
        if (tries && tries % 8 == 0) P0 = candidate();
        EPoint<ExtField> Q0 = candidate();
        // N^2 distinct combinations certify a basis and enumerate E[N]
        std::set<std::pair<ExtField::Elem, ExtField::Elem>> seen;
        std::vector<EPoint<ExtField>> grid;
        EPoint<ExtField> Pi = C.infinity();
        bool dup = false;
        for (u64 i = 0; i < N && !dup; ++i) {
          EPoint<ExtField> Rj = Pi;
          for (u64 j = 0; j < N; ++j) {
            auto key = Rj.inf ? std::pair{infkey, infkey} : std::pair{Rj.x, Rj.y};
            if (!seen.insert(key).second) {
              dup = true;
              break;
            }
            if (!Rj.inf) grid.push_back(Rj);
            Rj = C.add(Rj, Q0);
          }
          Pi = C.add(Pi, P0);
        }
        if (dup) continue;
        pts = std::move(grid);
        built = true;
      }
      if (!built)
        throw std::runtime_error("torsion_basis: no independent pair within the sampling budget");
    }

    // points of exact order N, in canonical coordinate order
    std::vector<EPoint<ExtField>> gens;
    for (const auto& P : pts) {
      bool exact = C.eq(C.scalar(N, P), C.infinity());
      for (auto [q, e] : factor_u64(N)) {
        (void)e;
        if (!exact) break;
        if (C.eq(C.scalar(N / q, P), C.infinity())) exact = false;
      }
      if (exact) gens.push_back(P);
    }
    std::sort(gens.begin(), gens.end(), [&](const auto& P, const auto& Q) { return C.less(P, Q); });
    if (gens.empty()) throw std::runtime_error("torsion_basis: no point of exact order N");

    const EPoint<ExtField>& P = gens[0];
    for (std::size_t qi = 1; qi < gens.size(); ++qi) {
      const EPoint<ExtField>& Q = gens[qi];
      std::set<std::pair<ExtField::Elem, ExtField::Elem>> seen;
      ExtField::Elem infkey(static_cast<std::size_t>(k) + 1, p);
      bool independent = true;
      EPoint<ExtField> Pi = C.infinity();
      for (u64 i = 0; i < N && independent; ++i) {
        EPoint<ExtField> Rp2 = Pi;
        for (u64 jj = 0; jj < N; ++jj) {
          auto key = Rp2.inf ? std::pair{infkey, infkey} : std::pair{Rp2.x, Rp2.y};
          if (!seen.insert(key).second) {
            independent = false;
            break;
          }
          Rp2 = C.add(Rp2, Q);
        }
        Pi = C.add(Pi, P);
      }
      if (independent) return TorsionBasis{N, k, K, P, Q};
    }
    throw std::runtime_error("torsion_basis: full torsion without an independent pair");
  }
  throw std::runtime_error("torsion_basis: N-torsion is not rational within extension degree " +
                           std::to_string(max_degree));
}

}  // namespace crater
