#pragma once

#include <crater/arith.hpp>
#include <crater/curve.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace crater {

// Monic polynomial over F_p cutting out the abscissae of an order-ell kernel
// subgroup: degree (ell-1)/2 for odd ell, a linear factor of x^3+ax+b for
// ell = 2.  It divides the ell-th division polynomial and its root set is
// stable under x -> x^p.
struct KernelPoly {
  PolyRing<Fp>::Poly h;
  u64 ell;
};

// Separable degree-ell isogeny with rational maps over F_p:
//   (x, y) -> (xnum(x)/xden(x), y * ynum(x)/yden(x)).
// The x-map numerator is monic of degree ell; the kernel consists of infinity
// and the points whose abscissa is a root of xden.
struct IsogenyMap {
  Curve source;
  Curve target;
  u64 ell;
  PolyRing<Fp>::Poly xnum, xden, ynum, yden;
};

// Scale a point by the twist (x, y) -> (u^2 x, u^3 y) for a base-field u.
template <class F>
inline EPoint<F> transport_point(const F& fld, u64 u, const EPoint<F>& P) {
  if (P.inf) return P;
  typename F::Elem U = fld.from_u64(u);
  typename F::Elem u2 = fld.mul(U, U);
  return EPoint<F>{false, fld.mul(u2, P.x), fld.mul(fld.mul(u2, U), P.y)};
}

// Twist scalar u with a2 = u^4 a1 and b2 = u^6 b1 if the curves are
// isomorphic over F_p; the quadratic twist answers none.
inline std::optional<u64> isomorphism(const Curve& E1, const Curve& E2) {
  if (E1.F.p != E2.F.p) throw std::invalid_argument("isomorphism: curves over different fields");
  if (E1.j != E2.j) return std::nullopt;
  const Fp& F = E1.F;
  // u^2 = (b2 a1)/(b1 a2); with equal j this forces u^4 = a2/a1, u^6 = b2/b1
  u64 c = F.mul(F.mul(E2.b, E1.a), F.inv(F.mul(E1.b, E2.a)));
  if (!F.eq(F.mul(F.mul(c, c), E1.a), E2.a) || !F.eq(F.mul(F.mul(c, F.mul(c, c)), E1.b), E2.b))
    throw std::runtime_error("isomorphism: inconsistent twist data at equal j");
  auto u = canonical_sqrt(F, c);
  if (!u) return std::nullopt;
  return *u;
}

// The F_p-rational order-ell kernel subgroups of E.  Abscissae of candidate
// generators are found among the roots of the ell-th division polynomial over
// F_{p^L}, L = lcm(1..(ell-1)/2); the subgroup closure is generated x-only
// and kept when its kernel polynomial descends to F_p.  Empty when ell is
// inert for E (no rational degree-ell kernel exists).
inline std::vector<KernelPoly> rational_kernels(const Curve& E, u64 ell) {
  const Fp& F = E.F;
  if (!is_prime_u64(ell)) throw std::invalid_argument("rational_kernels: ell must be prime");
  if (ell == F.p) throw std::invalid_argument("rational_kernels: ell equals the characteristic");
  PolyRing<Fp> R(F);
  std::vector<KernelPoly> out;

  if (ell == 2) {
    auto roots = poly_roots(F, R.normalize({E.b, E.a, F.zero(), F.one()}));
    std::sort(roots.begin(), roots.end());
    for (u64 r : roots) out.push_back(KernelPoly{R.normalize({F.neg(r), F.one()}), 2});
    return out;
  }

  const u64 d = (ell - 1) / 2;
  u64 L = 1;
  for (u64 i = 2; i <= d; ++i) L = std::lcm(L, i);
  ExtField K(F.p, static_cast<int>(L));
  PolyRing<ExtField> RK(K);
  auto embed_poly = [&](const PolyRing<Fp>::Poly& g) {
    PolyRing<ExtField>::Poly out2;
    out2.reserve(g.size());
    for (u64 c : g) out2.push_back(K.embed(c));
    return out2;
  };

  auto psis = division_polynomials(E, ell);
  auto psiK = embed_poly(psis[ell]);
  auto fK = embed_poly(R.normalize({E.b, E.a, F.zero(), F.one()}));
  auto roots = poly_roots(K, psiK);

  std::set<PolyRing<Fp>::Poly> seen;
  for (const auto& x0 : roots) {
    // abscissae x([i]Q) = x0 - psi_{i-1} psi_{i+1} / psi_i^2 at x0, with the
    // x-only parity convention placing f on the odd/even side
    std::vector<ExtField::Elem> xs{x0};
    bool ok = true;
    for (u64 i = 2; i <= d && ok; ++i) {
      ExtField::Elem num = K.mul(RK.eval(embed_poly(psis[i - 1]), x0),
                                 RK.eval(embed_poly(psis[i + 1]), x0));
      ExtField::Elem den = RK.eval(embed_poly(psis[i]), x0);
      den = K.mul(den, den);
      ExtField::Elem fx = RK.eval(fK, x0);
      if (i % 2 == 1)
        num = K.mul(fx, num);
      else
        den = K.mul(fx, den);
      if (K.is_zero(den)) {
        ok = false;
        break;
      }
      xs.push_back(K.sub(x0, K.mul(num, K.inv(den))));
    }
    if (!ok) continue;

    PolyRing<ExtField>::Poly h = RK.one();
    for (const auto& xi : xs) h = RK.mul(h, {K.neg(xi), K.one()});
    PolyRing<Fp>::Poly hp;
    bool rational = true;
    for (const auto& c : h) {
      if (!K.in_base(c)) {
        rational = false;
        break;
      }
      hp.push_back(K.to_base(c));
    }
    if (!rational) continue;
    hp = R.normalize(hp);

    // explicit stability check: Frobenius permutes the abscissa set
    for (const auto& xi : xs)
      if (!K.is_zero(RK.eval(h, K.frobenius(xi))))
        throw std::runtime_error("rational_kernels: rational subgroup not Frobenius-stable");

    if (seen.insert(hp).second) out.push_back(KernelPoly{hp, ell});
  }
  std::sort(out.begin(), out.end(),
            [](const KernelPoly& a, const KernelPoly& b) { return a.h < b.h; });
  return out;
}

// Velu isogeny from a kernel polynomial, in Kohel's x-only form: for odd ell
//   X = ell x - 2 p1 - 2 f' h'/h + 4 f (h'^2 - h h'')/h^2,  Y = y X'(x),
// with p1 the abscissa power sum; for ell = 2 the single-slope special case.
// The target satisfies A' = a - 5v, B' = b - 7w for the Velu sums v, w.
inline IsogenyMap velu(const Curve& E, const KernelPoly& kp) {
  const Fp& F = E.F;
  PolyRing<Fp> R(F);
  using Poly = PolyRing<Fp>::Poly;
  const u64 ell = kp.ell;
  if (!is_prime_u64(ell) || ell == F.p)
    throw std::invalid_argument("velu: ell must be a prime different from the characteristic");

  Poly h = R.normalize(kp.h);
  const u64 d = ell == 2 ? 1 : (ell - 1) / 2;
  if (R.is_zero(h) || static_cast<u64>(R.deg(h)) != d || !F.eq(R.lead(h), F.one()))
    throw std::invalid_argument("velu: kernel polynomial must be monic of the kernel degree");
  Poly f = R.normalize({E.b, E.a, F.zero(), F.one()});
  Poly divided = ell == 2 ? f : division_polynomial(E, ell);
  if (!R.is_zero(R.mod(divided, h)))
    throw std::invalid_argument("velu: kernel polynomial does not divide the division polynomial");

  // power sums of the kernel abscissae from the coefficients of h
  u64 e1 = F.neg(R.coeff(h, static_cast<int>(d) - 1));
  u64 e2 = d >= 2 ? R.coeff(h, static_cast<int>(d) - 2) : F.zero();
  u64 e3 = d >= 3 ? F.neg(R.coeff(h, static_cast<int>(d) - 3)) : F.zero();
  u64 p1 = e1;
  u64 p2 = F.sub(F.mul(e1, p1), F.mul(F.from_u64(2), e2));
  u64 p3 = F.add(F.sub(F.mul(e1, p2), F.mul(e2, p1)), F.mul(F.from_u64(3), e3));

  Poly xnum, xden, ynum, yden;
  u64 v, w;
  if (ell == 2) {
    u64 x0 = p1;  // f(x0) = 0 for a 2-torsion abscissa
    v = F.add(F.mul(F.from_u64(3), F.mul(x0, x0)), E.a);
    w = F.mul(v, x0);
    xnum = R.add(R.mul(R.x(), h), R.constant(v));
    xden = h;
  } else {
    v = F.mul(F.from_u64(2), F.add(F.mul(F.from_u64(3), p2), F.mul(F.from_u64(d), E.a)));
    w = F.add(F.mul(F.from_u64(10), p3),
              F.add(F.mul(F.mul(F.from_u64(6), E.a), p1), F.mul(F.mul(F.from_u64(4), E.b), F.from_u64(d))));
    Poly h1 = R.derivative(h), h2 = R.derivative(h1);
    Poly lead = R.mul(R.sub(R.mul_elem(R.x(), F.from_u64(ell)), R.constant(F.mul(F.from_u64(2), p1))),
                      R.mul(h, h));
    Poly mid = R.mul_elem(R.mul(R.derivative(f), R.mul(h1, h)), F.from_u64(2));
    Poly tail = R.mul_elem(R.mul(f, R.sub(R.mul(h1, h1), R.mul(h, h2))), F.from_u64(4));
    xnum = R.add(R.sub(lead, mid), tail);
    xden = R.mul(h, h);
  }
  // normalized isogeny: the y-map is y X'(x)
  ynum = R.sub(R.mul(R.derivative(xnum), xden), R.mul(xnum, R.derivative(xden)));
  yden = R.mul(xden, xden);

  Curve target(F, F.sub(E.a, F.mul(F.from_u64(5), v)), F.sub(E.b, F.mul(F.from_u64(7), w)));
  IsogenyMap phi{E, target, ell, xnum, xden, ynum, yden};
  if (static_cast<u64>(R.deg(phi.xnum)) != ell || !F.eq(R.lead(phi.xnum), F.one()))
    throw std::runtime_error("velu: x-map numerator is not monic of degree ell");

  // construction check: sampled rational points land on the target curve
  CurveOps<Fp> Ct = target.ops();
  int checked = 0;
  for (u64 x = 0; x < F.p && checked < 3; ++x) {
    u64 dn = R.eval(phi.xden, x);
    if (dn == 0) continue;
    u64 fx = F.add(F.mul(x, F.add(F.mul(x, x), E.a)), E.b);
    auto y = canonical_sqrt(F, fx);
    if (!y) continue;
    u64 X = F.mul(R.eval(phi.xnum, x), F.inv(dn));
    u64 Y = F.mul(*y, F.mul(R.eval(phi.ynum, x), F.inv(R.eval(phi.yden, x))));
    if (!Ct.on(EPoint<Fp>{false, X, Y}))
      throw std::runtime_error("velu: image fails the target equation");
    ++checked;
  }
  return phi;
}

// Push a point over an extension field through the isogeny.  Kernel points
// (and infinity) map to infinity; images are verified against the target.
inline EPoint<ExtField> evaluate(const IsogenyMap& phi, const ExtField& K,
                                 const EPoint<ExtField>& P) {
  if (K.base.p != phi.source.F.p)
    throw std::invalid_argument("evaluate: extension of a different prime field");
  if (P.inf) return P;
  CurveOps<ExtField> Cs(K, K.embed(phi.source.a), K.embed(phi.source.b));
  if (!Cs.on(P)) throw std::invalid_argument("evaluate: point is not on the source curve");

  PolyRing<ExtField> RK(K);
  auto embed_poly = [&](const PolyRing<Fp>::Poly& g) {
    PolyRing<ExtField>::Poly out;
    out.reserve(g.size());
    for (u64 c : g) out.push_back(K.embed(c));
    return out;
  };
  ExtField::Elem den = RK.eval(embed_poly(phi.xden), P.x);
  if (K.is_zero(den)) return EPoint<ExtField>{};
  ExtField::Elem X = K.mul(RK.eval(embed_poly(phi.xnum), P.x), K.inv(den));
  ExtField::Elem Y = K.mul(P.y, K.mul(RK.eval(embed_poly(phi.ynum), P.x),
                                      K.inv(RK.eval(embed_poly(phi.yden), P.x))));
  EPoint<ExtField> img{false, X, Y};
  CurveOps<ExtField> Ct(K, K.embed(phi.target.a), K.embed(phi.target.b));
  if (!Ct.on(img)) throw std::runtime_error("evaluate: image fails the target equation");
  return img;
}

// The dual isogeny, composed back to the exact source model: the rational
// kernel of the target whose Velu map lands on a curve isomorphic to the
// source and whose composition with phi is multiplication by ell.
inline IsogenyMap dual_isogeny(const IsogenyMap& phi) {
  const Curve& E = phi.source;
  const Fp& F = E.F;
  PolyRing<Fp> R(F);
  ExtField K(F.p, 2);
  CurveOps<ExtField> Cs(K, K.embed(E.a), K.embed(E.b));

  // sample source points over the quadratic extension (every abscissa lifts)
  std::vector<EPoint<ExtField>> samples;
  for (u64 x = 0; samples.size() < 5 && x < F.p; ++x) {
    ExtField::Elem fx = Cs.rhs(K.embed(x));
    if (K.is_zero(fx)) continue;
    auto y = field_sqrt(K, fx);
    if (y) samples.push_back(Cs.make(K.embed(x), *y));
  }

  for (const KernelPoly& kp : rational_kernels(phi.target, phi.ell)) {
    IsogenyMap psi = velu(phi.target, kp);
    auto u = isomorphism(psi.target, E);
    if (!u) continue;
    for (u64 uu : {*u, F.p - *u}) {
      IsogenyMap cand = psi;
      u64 u2 = F.mul(uu, uu);
      cand.target = E;
      cand.xnum = R.mul_elem(psi.xnum, u2);
      cand.ynum = R.mul_elem(psi.ynum, F.mul(u2, uu));
      bool good = true;
      for (const auto& P : samples) {
        EPoint<ExtField> lhs = evaluate(cand, K, evaluate(phi, K, P));
        if (!Cs.eq(lhs, Cs.scalar(phi.ell, P))) {
          good = false;
          break;
        }
      }
      if (good) return cand;
    }
  }
  throw std::runtime_error("dual_isogeny: no candidate composes to multiplication by ell");
}

}  // namespace crater
