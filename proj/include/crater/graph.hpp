#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <crater/curve.hpp>
#include <crater/isogeny.hpp>
#include <crater/theory.hpp>

namespace crater {

// An ordinary crater: the cycle of horizontal ell-isogenies on curves whose
// endomorphism order is O.  Vertex i is the representative model curves[i];
// l_edges[i] maps vertex i to vertex i+1 (mod n) and lbar_edges[i] maps
// vertex i to vertex i-1 (mod n).  Each edge's velu target may be a different
// model of the destination class; the companion transport scalar carries
// points onto the stored representative via (x, y) -> (u^2 x, u^3 y).
//
// Invariants: composing every l-edge with its transport returns to curves[0]
// (the closing scalar is l_tw[n-1]); j-invariants are pairwise distinct along
// the cycle; pi = u + c*Phi matches the curve through trace and discriminant
// (c^2 * O.D equals the Frobenius discriminant).
struct CraterCycle {
  QuadOrder O;
  u64 ell = 0;
  u64 n = 0;
  CraterClass cls;
  i64 trace = 0;
  i64 c = 0;  // conductor of Z[pi] inside O, up to sign; canonically positive
  i64 u = 0;  // pi = u + c*Phi
  std::vector<Curve> curves;
  std::vector<IsogenyMap> l_edges;
  std::vector<u64> l_tw;
  std::vector<IsogenyMap> lbar_edges;
  std::vector<u64> lbar_tw;
};

namespace detail {

// A point generating the kernel cut out by kp, over the smallest extension
// that contains one.  Kernel abscissae lie in degree <= deg(kp.h) and the
// ordinates at worst double that, so the scan is bounded.
inline std::pair<ExtField, EPoint<ExtField>> kernel_point(const Curve& E, const KernelPoly& kp) {
  PolyRing<Fp> R(E.F);
  int dh = std::max(1, R.deg(kp.h));
  for (int e = 1; e <= 2 * dh; ++e) {
    ExtField K(E.F.p, e);
    std::vector<ExtField::Elem> hK;
    for (u64 coef : kp.h) hK.push_back(K.embed(coef));
    auto roots = poly_roots(K, hK);
    std::sort(roots.begin(), roots.end());
    CurveOps<ExtField> C(K, K.embed(E.a), K.embed(E.b));
    for (const auto& x : roots) {
      ExtField::Elem fx = C.rhs(x);
      if (K.is_zero(fx)) return {K, C.make(x, K.zero())};
      if (auto y = field_sqrt(K, fx)) return {K, C.make(x, *y)};
    }
  }
  throw std::runtime_error("kernel_point: no kernel point within the expected extension");
}

// The eigenvalue of Phi on the kernel cut out by kp, or nullopt when the
// kernel is not Phi-stable (a vertical direction).  pi = u + c*Phi acts on
// any rational kernel; when ell does not divide c the Phi-eigenvalue is
// recovered from the pi-eigenvalue directly.  When ell | c, pi is a scalar
// on the whole ell-torsion and Phi is computed honestly as (pi - u)/c: lift
// the kernel point P to Q with [ell^s]Q = P inside the ell^{s+1}-torsion,
// apply pi - [u], and divide by the unit part of c.
inline std::optional<u64> kernel_phi_eigenvalue(Curve& E, const KernelPoly& kp, u64 ell, i64 c,
                                                i64 u, int max_degree) {
  i64 le = static_cast<i64>(ell);
  u64 cl = static_cast<u64>(((c % le) + le) % le);
  u64 um = static_cast<u64>(((u % le) + le) % le);
  if (cl != 0) {
    auto [K, P] = kernel_point(E, kp);
    CurveOps<ExtField> C(K, K.embed(E.a), K.embed(E.b));
    EPoint<ExtField> piP = C.make(K.frobenius(P.x), K.frobenius(P.y));
    for (u64 a = 0; a < ell; ++a) {
      if (!C.eq(piP, C.scalar(a, P))) continue;
      u64 cinv = ell == 2 ? 1 : powmod(cl, ell - 2, ell);
      return ((a + ell - um) % ell) * cinv % ell;
    }
    throw std::runtime_error("kernel_phi_eigenvalue: rational kernel is not Frobenius-stable");
  }
  int s = 0;
  i64 cp = c;
  while (cp % le == 0) {
    cp /= le;
    ++s;
  }
  u64 M = 1;
  for (int i = 0; i <= s; ++i) M *= ell;
  TorsionBasis tb = torsion_basis(E, M, max_degree);
  const ExtField& K = tb.K;
  CurveOps<ExtField> C(K, K.embed(E.a), K.embed(E.b));
  std::vector<ExtField::Elem> hK;
  for (u64 coef : kp.h) hK.push_back(K.embed(coef));
  auto roots = poly_roots(K, hK);
  std::sort(roots.begin(), roots.end());
  if (roots.empty()) throw std::runtime_error("kernel_phi_eigenvalue: kernel does not split in the torsion field");
  EPoint<ExtField> P = C.infinity();
  for (const auto& x : roots) {
    ExtField::Elem fx = C.rhs(x);
    if (K.is_zero(fx)) {
      P = C.make(x, K.zero());
      break;
    }
    if (auto y = field_sqrt(K, fx)) {
      P = C.make(x, *y);
      break;
    }
  }
  if (P.inf) throw std::runtime_error("kernel_phi_eigenvalue: kernel point fails to lift");
  u64 ls = M / ell;
  EPoint<ExtField> Q = C.infinity();
  for (u64 i = 0; i < M && Q.inf; ++i)
    for (u64 j = 0; j < M; ++j) {
      EPoint<ExtField> cand = C.add(C.scalar(i, tb.P), C.scalar(j, tb.Q));
      if (C.eq(C.scalar(ls, cand), P)) {
        Q = cand;
        break;
      }
    }
  if (Q.inf) throw std::runtime_error("kernel_phi_eigenvalue: kernel point is outside the torsion lattice");
  i64 m64 = static_cast<i64>(M);
  u64 uM = static_cast<u64>(((u % m64) + m64) % m64);
  EPoint<ExtField> piQ = C.make(K.frobenius(Q.x), K.frobenius(Q.y));
  EPoint<ExtField> W = C.sub(piQ, C.scalar(uM, Q));
  u64 cpl = static_cast<u64>(((cp % le) + le) % le);
  u64 cinv = ell == 2 ? 1 : powmod(cpl, ell - 2, ell);
  EPoint<ExtField> phiP = C.scalar(cinv, W);
  for (u64 r = 0; r < ell; ++r)
    if (C.eq(phiP, C.scalar(r, P))) return r;
  return std::nullopt;
}

}  // namespace detail

// Walk the crater of (E, ell) inside the class graph of O.  At each vertex all
// rational ell-kernels are computed and labeled by their Phi-eigenvalue;
// vertical kernels (not Phi-stable) are discarded, the kernel with the
// canonical eigenvalue is the l-direction and the conjugate eigenvalue the
// lbar-direction.  Closure back to the seed is verified after exactly n steps.
inline CraterCycle build_crater(Curve seed, u64 ell, const QuadOrder& O, int max_degree = 24) {
  const CurveCount& cnt = point_count(seed);
  if (cnt.frob_disc % O.D != 0)
    throw std::invalid_argument("build_crater: order discriminant does not divide the Frobenius discriminant");
  i64 q = cnt.frob_disc / O.D;
  i64 cval = static_cast<i64>(isqrt_u64(static_cast<u64>(q)));
  if (cval * cval != q || cval == 0)
    throw std::invalid_argument("build_crater: Frobenius discriminant is not a square multiple of the order discriminant");
  i64 udbl = cnt.trace - cval * O.s;
  if (udbl % 2 != 0)
    throw std::invalid_argument("build_crater: Frobenius does not embed into the order");
  i64 uval = udbl / 2;

  CraterClass cls = classify_crater(O, ell);
  if (cls.splitting == Splitting::inert)
    throw std::invalid_argument(
        "build_crater: ell is inert, the horizontal ell-isogeny graph is totally disconnected");
  u64 n = cls.n;
  u64 r = cls.eigenvalue;
  i64 le = static_cast<i64>(ell);
  u64 r2 = static_cast<u64>((((O.s - static_cast<i64>(r)) % le) + le) % le);

  std::vector<Curve> curves{seed};
  curves.reserve(n);
  std::vector<IsogenyMap> l_edges;
  std::vector<u64> l_tw;
  std::vector<KernelPoly> lbar_kernels;
  for (u64 i = 0; i < n; ++i) {
    auto kernels = rational_kernels(curves[i], ell);
    std::optional<KernelPoly> lk, lbk;
    for (const auto& kp : kernels) {
      auto eig = detail::kernel_phi_eigenvalue(curves[i], kp, ell, cval, uval, max_degree);
      if (!eig) continue;  // vertical direction
      if (*eig == r && !lk)
        lk = kp;
      else if (*eig == r2 && !lbk)
        lbk = kp;
    }
    if (r == r2 && lk) lbk = lk;
    if (!lk || !lbk)
      throw std::runtime_error("build_crater: seed is not on the crater of this order (missing horizontal direction)");
    IsogenyMap phi = velu(curves[i], *lk);
    if (i + 1 < n) {
      curves.push_back(phi.target);
      l_tw.push_back(1);
    } else {
      auto iso = isomorphism(phi.target, curves[0]);
      if (!iso)
        throw std::runtime_error("build_crater: walk does not close after n steps, seed is not on the crater of this order");
      l_tw.push_back(*iso);
    }
    l_edges.push_back(std::move(phi));
    lbar_kernels.push_back(*lbk);
  }
  for (u64 i = 0; i < n; ++i)
    for (u64 j = i + 1; j < n; ++j)
      if (curves[i].j == curves[j].j)
        throw std::runtime_error("build_crater: walk revisits a j-invariant before closing");

  std::vector<IsogenyMap> lbar_edges;
  std::vector<u64> lbar_tw;
  for (u64 i = 0; i < n; ++i) {
    IsogenyMap psi = velu(curves[i], lbar_kernels[i]);
    u64 prev = (i + n - 1) % n;
    auto iso = isomorphism(psi.target, curves[prev]);
    if (!iso)
      throw std::runtime_error("build_crater: conjugate direction leaves the crater");
    lbar_edges.push_back(std::move(psi));
    lbar_tw.push_back(*iso);
  }

  return CraterCycle{O,      ell,     n,    cls,        cnt.trace, cval, uval,
                     curves, l_edges, l_tw, lbar_edges, lbar_tw};
}

// A vertex of the level-structure graph: a curve index on the crater together
// with the canonical datum, encoded as points over the common torsion field.
// gamma0 stores the least generator of the cyclic subgroup, gamma1 the least
// of {P, -P}, full the least of {(P, Q), (-P, -Q)}; N = 1 stores no points.
struct LSVertex {
  u64 curve = 0;
  std::vector<EPoint<ExtField>> pts;
  std::string key;
};

struct LSEdge {
  u64 from = 0;
  u64 to = 0;
  bool conj = false;  // false: l-direction, true: lbar-direction
};

// Level-structure graph over a crater.  Vertices are sorted by key, edges by
// (from, conj, to); both orders are deterministic.  The undirected flag marks
// the gamma0 graph, whose edge relation is symmetric.
struct LSGraph {
  CraterCycle crater;
  u64 N = 0;
  LevelKind kind = LevelKind::gamma0;
  bool undirected = false;
  int degree = 1;
  ExtField K;
  std::vector<LSVertex> vertices;
  std::vector<LSEdge> edges;
};

namespace detail {

inline std::string elem_str(const ExtField::Elem& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

inline std::string point_str(const EPoint<ExtField>& P) {
  if (P.inf) return "O";
  return elem_str(P.x) + ";" + elem_str(P.y);
}

inline std::string datum_key(u64 curve, const std::vector<EPoint<ExtField>>& pts) {
  std::string s = std::to_string(curve);
  for (const auto& P : pts) s += "|" + point_str(P);
  return s;
}

// S[a][b] = a*P + b*Q over a torsion basis.  Every canonicalization below is
// index arithmetic plus a lookup into this table, so data that agree as point
// tuples canonicalize identically no matter how their indices were reached.
using PointGrid = std::vector<std::vector<EPoint<ExtField>>>;

inline PointGrid point_grid(const CurveOps<ExtField>& C, const TorsionBasis& tb, u64 N) {
  PointGrid S(N, std::vector<EPoint<ExtField>>(N, C.infinity()));
  for (u64 a = 0; a < N; ++a) {
    if (a) S[a][0] = C.add(S[a - 1][0], tb.P);
    for (u64 b = 1; b < N; ++b) S[a][b] = C.add(S[a][b - 1], tb.Q);
  }
  return S;
}

// Canonical representative of the level datum with the given grid indices:
// least unit multiple of the point for gamma0, the lesser of the point and its
// negative for gamma1, and the lexicographically lesser of the pair and its
// negative for full level.
inline std::vector<EPoint<ExtField>> canonical_by_index(const CurveOps<ExtField>& C,
                                                        const PointGrid& S, LevelKind kind, u64 N,
                                                        const std::vector<std::pair<u64, u64>>& idx) {
  if (idx.empty()) return {};
  auto at = [&](std::pair<u64, u64> ab) -> const EPoint<ExtField>& { return S[ab.first][ab.second]; };
  auto negate = [&](std::pair<u64, u64> ab) {
    return std::pair{(N - ab.first) % N, (N - ab.second) % N};
  };
  const auto [a, b] = idx[0];
  if (kind == LevelKind::gamma0) {
    const EPoint<ExtField>* best = &at({a, b});
    for (u64 c = 2; c < N; ++c) {
      if (std::gcd(c, N) != 1) continue;
      const EPoint<ExtField>* cand = &at({c * a % N, c * b % N});
      if (C.less(*cand, *best)) best = cand;
    }
    return {*best};
  }
  if (kind == LevelKind::gamma1) {
    const auto& P = at({a, b});
    const auto& nP = at(negate({a, b}));
    return {C.less(nP, P) ? nP : P};
  }
  const auto& P = at(idx[0]);
  const auto& Q = at(idx[1]);
  const auto& nP = at(negate(idx[0]));
  const auto& nQ = at(negate(idx[1]));
  if (C.less(nP, P) || (C.eq(nP, P) && C.less(nQ, Q))) return {nP, nQ};
  return {P, Q};
}

// All canonical level data of the given kind on one curve.
inline std::vector<std::vector<EPoint<ExtField>>> enumerate_data(const CurveOps<ExtField>& C,
                                                                 const PointGrid& S, LevelKind kind,
                                                                 u64 N) {
  std::vector<std::vector<EPoint<ExtField>>> out;
  if (N == 1) {
    out.push_back({});
    return out;
  }
  std::set<std::string> seen;
  auto keep = [&](std::vector<EPoint<ExtField>> datum) {
    if (seen.insert(datum_key(0, datum)).second) out.push_back(std::move(datum));
  };
  if (kind == LevelKind::full) {
    for (u64 a = 0; a < N; ++a)
      for (u64 b = 0; b < N; ++b)
        for (u64 c = 0; c < N; ++c)
          for (u64 d = 0; d < N; ++d) {
            u64 det = (a * d % N + N - b * c % N) % N;
            if (std::gcd(det, N) != 1) continue;
            keep(canonical_by_index(C, S, kind, N, {{a, b}, {c, d}}));
          }
    return out;
  }
  for (u64 a = 0; a < N; ++a)
    for (u64 b = 0; b < N; ++b) {
      if (std::gcd(std::gcd(a, b), N) != 1) continue;  // exact order N
      keep(canonical_by_index(C, S, kind, N, {{a, b}}));
    }
  return out;
}

}  // namespace detail

namespace detail {

inline void validate_attach(const CraterCycle& C, u64 N) {
  if (N == 0) throw std::invalid_argument("attach_level_structures: level must be positive");
  const u64 p = C.curves[0].F.p;
  if (std::gcd(N, p) != 1 || std::gcd(N, C.ell) != 1)
    throw std::invalid_argument("attach_level_structures: level must be coprime to p and ell");
}

}  // namespace detail

// Torsion bases for every crater vertex; reusable across level kinds, since
// the basis does not depend on the kind.
inline std::vector<TorsionBasis> crater_torsion_bases(CraterCycle& C, u64 N,
                                                      int max_degree = 24) {
  detail::validate_attach(C, N);
  std::vector<TorsionBasis> bases;
  bases.reserve(C.n);
  for (u64 i = 0; i < C.n; ++i) bases.push_back(torsion_basis(C.curves[i], N, max_degree));
  return bases;
}

// Attach all level-N structures of the given kind to a crater.  Each crater
// vertex contributes structure_count(N, kind) graph vertices, enumerated from
// a torsion basis whose extension degree must agree with the order of pi in
// (O/N)^*.  Both edge directions are pushed through the crater isogenies with
// transport onto the representative models and canonicalized.  Verified here:
// the census per vertex and in total, the l-action being a permutation (which
// makes weak and strong components coincide), and l followed by lbar landing
// on the [ell]-scaled datum.
inline LSGraph attach_level_structures(CraterCycle& C, u64 N, LevelKind kind,
                                       const std::vector<TorsionBasis>& bases) {
  detail::validate_attach(C, N);

  int expected = 1;
  if (N > 1) {
    ResRing R(C.O, N);
    expected = static_cast<int>(R.unit_order(R.make(C.u, C.c)));
  }

  if (bases.size() != C.n)
    throw std::invalid_argument("attach_level_structures: one torsion basis per crater vertex");
  for (const auto& tb : bases)
    if (tb.degree != expected)
      throw std::runtime_error("attach_level_structures: torsion degree disagrees with the residue ring");
  ExtField K = bases[0].K;

  // Per curve: point grid over its basis plus a reverse index from point to
  // grid coordinates, so pushed and scaled data canonicalize by index without
  // any further curve arithmetic.
  std::vector<CurveOps<ExtField>> ops;
  std::vector<detail::PointGrid> grids;
  std::vector<std::map<std::string, std::pair<u64, u64>>> coords(C.n);
  for (u64 i = 0; i < C.n; ++i) {
    ops.emplace_back(K, K.embed(C.curves[i].a), K.embed(C.curves[i].b));
    grids.push_back(detail::point_grid(ops[i], bases[i], N));
    for (u64 a = 0; a < N; ++a)
      for (u64 b = 0; b < N; ++b) coords[i][detail::point_str(grids[i][a][b])] = {a, b};
  }
  auto locate = [&](u64 curve, const EPoint<ExtField>& P) {
    auto it = coords[curve].find(detail::point_str(P));
    if (it == coords[curve].end())
      throw std::runtime_error("attach_level_structures: pushed structure is missing from the target inventory");
    return it->second;
  };

  u64 per_vertex = structure_count(N, kind);
  std::vector<LSVertex> verts;
  for (u64 i = 0; i < C.n; ++i) {
    auto data = detail::enumerate_data(ops[i], grids[i], kind, N);
    if (data.size() != per_vertex)
      throw std::runtime_error("attach_level_structures: vertex census disagrees with the structure count");
    for (auto& d : data) verts.push_back(LSVertex{i, d, detail::datum_key(i, d)});
  }
  if (verts.size() != vertex_count(C.n, N, kind))
    throw std::runtime_error("attach_level_structures: total census disagrees with the closed form");
  std::sort(verts.begin(), verts.end(),
            [](const LSVertex& a, const LSVertex& b) { return a.key < b.key; });
  std::map<std::string, u64> index;
  for (u64 v = 0; v < verts.size(); ++v) index[verts[v].key] = v;

  auto push_through = [&](const std::vector<EPoint<ExtField>>& pts, const IsogenyMap& phi, u64 tw,
                          u64 target) {
    std::vector<std::pair<u64, u64>> idx;
    for (const auto& P : pts) {
      EPoint<ExtField> img = transport_point(K, tw, evaluate(phi, K, P));
      if (img.inf)
        throw std::runtime_error("attach_level_structures: level point collapses through an isogeny");
      idx.push_back(locate(target, img));
    }
    return detail::datum_key(target,
                             detail::canonical_by_index(ops[target], grids[target], kind, N, idx));
  };

  std::vector<u64> lnext(verts.size()), lbnext(verts.size());
  std::vector<LSEdge> edges;
  edges.reserve(2 * verts.size());
  for (u64 v = 0; v < verts.size(); ++v) {
    const LSVertex& V = verts[v];
    u64 nxt = (V.curve + 1) % C.n;
    u64 prv = (V.curve + C.n - 1) % C.n;
    auto il = index.find(push_through(V.pts, C.l_edges[V.curve], C.l_tw[V.curve], nxt));
    auto ib = index.find(push_through(V.pts, C.lbar_edges[V.curve], C.lbar_tw[V.curve], prv));
    if (il == index.end() || ib == index.end())
      throw std::runtime_error("attach_level_structures: pushed structure is missing from the target inventory");
    lnext[v] = il->second;
    lbnext[v] = ib->second;
    edges.push_back(LSEdge{v, il->second, false});
    edges.push_back(LSEdge{v, ib->second, true});
  }
  std::sort(edges.begin(), edges.end(), [](const LSEdge& a, const LSEdge& b) {
    return std::tie(a.from, a.conj, a.to) < std::tie(b.from, b.conj, b.to);
  });

  std::vector<u64> indeg(verts.size(), 0);
  for (u64 v = 0; v < verts.size(); ++v) ++indeg[lnext[v]];
  for (u64 v = 0; v < verts.size(); ++v)
    if (indeg[v] != 1)
      throw std::runtime_error("attach_level_structures: the l-action is not a permutation");

  u64 lm = C.ell % N;
  for (u64 v = 0; v < verts.size(); ++v) {
    const LSVertex& V = verts[v];
    std::vector<std::pair<u64, u64>> idx;
    for (const auto& P : V.pts) {
      auto [a, b] = locate(V.curve, P);
      idx.emplace_back(lm * a % N, lm * b % N);
    }
    std::string skey = detail::datum_key(
        V.curve, detail::canonical_by_index(ops[V.curve], grids[V.curve], kind, N, idx));
    if (lbnext[lnext[v]] != index.at(skey))
      throw std::runtime_error("attach_level_structures: l then lbar is not multiplication by ell");
  }

  return LSGraph{C,        N,           kind,  kind == LevelKind::gamma0,
                 expected, bases[0].K,  verts, edges};
}

inline LSGraph attach_level_structures(CraterCycle& C, u64 N, LevelKind kind,
                                       int max_degree = 24) {
  return attach_level_structures(C, N, kind, crater_torsion_bases(C, N, max_degree));
}

struct ComponentData {
  std::vector<u64> comp;      // vertex -> component id, ids in first-vertex order
  std::map<u64, u64> profile;  // component size -> count
};

// Connected components of the l-labeled subgraph (undirected sense).  The
// conjugate-direction edges duplicate the same partition; for gamma0 the
// l-edges are themselves symmetric.
inline ComponentData components(const LSGraph& G) {
  std::vector<u64> parent(G.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](u64 x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : G.edges) {
    if (e.conj) continue;
    u64 a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  ComponentData out;
  out.comp.resize(G.vertices.size());
  std::map<u64, u64> label;
  std::map<u64, u64> size;
  for (u64 v = 0; v < G.vertices.size(); ++v) {
    u64 root = find(v);
    auto it = label.find(root);
    if (it == label.end()) it = label.emplace(root, label.size()).first;
    out.comp[v] = it->second;
    ++size[it->second];
  }
  for (const auto& [id, sz] : size) {
    (void)id;
    ++out.profile[sz];
  }
  return out;
}

inline std::map<u64, u64> component_profile(const LSGraph& G) { return components(G).profile; }

// The vertices in v's component that share v's underlying curve.
inline std::vector<LSVertex> principal_vertices(const LSGraph& G, const LSVertex& v) {
  auto it = std::find_if(G.vertices.begin(), G.vertices.end(),
                         [&](const LSVertex& w) { return w.key == v.key; });
  if (it == G.vertices.end())
    throw std::invalid_argument("principal_vertices: vertex is not in the graph");
  u64 idx = static_cast<u64>(it - G.vertices.begin());
  ComponentData cd = components(G);
  std::vector<LSVertex> out;
  for (u64 w = 0; w < G.vertices.size(); ++w)
    if (cd.comp[w] == cd.comp[idx] && G.vertices[w].curve == v.curve)
      out.push_back(G.vertices[w]);
  return out;
}

}  // namespace crater
