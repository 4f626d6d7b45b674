#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace crater {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

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

inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 x = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (x > 0 && static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

// g = gcd(a, b) >= 0 together with u, v such that u*a + v*b = g.
inline std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b) {
  i64 r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
    std::tie(u0, u1) = std::make_tuple(u1, u0 - q * u1);
    std::tie(v0, v1) = std::make_tuple(v1, v0 - q * v1);
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  return {r0, u0, v0};
}

// Trial-division factorization, (prime, exponent) pairs in ascending order.
inline std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero");
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; static_cast<u128>(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Deterministic Miller-Rabin; this base set is exact for every 64-bit input.
inline bool is_prime_u64(u64 n) {
  constexpr u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 b : bases)
    if (n % b == 0) return n == b;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 b : bases) {
    u64 x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// Prime field F_p.  Elements are bare uint64_t residues in [0, p); every
// operation takes and returns that representation.
struct Fp {
  u64 p;
  using Elem = u64;

  explicit Fp(u64 prime) : p(prime) {
    if (!is_prime_u64(prime))
      throw std::invalid_argument("Fp: modulus " + std::to_string(prime) + " is not prime");
    if (prime >> 62) throw std::invalid_argument("Fp: modulus does not fit the arithmetic");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_u64(u64 a) const { return a % p; }
  Elem from_i64(i64 a) const {
    i64 r = a % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("Fp: inverse of zero");
    return powmod(a, p - 2, p);
  }
  Elem pow(Elem a, u64 e) const { return powmod(a, e, p); }
  Elem pow(Elem a, const mpz_class& e) const {
    if (e < 0) throw std::invalid_argument("Fp: negative exponent");
    Elem r = 1;
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
  }
  // Quadratic character: 1 on nonzero squares, -1 on non-squares, 0 at zero.
  int chi(Elem a) const {
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
  }
  mpz_class size() const { return mpz_class(static_cast<unsigned long>(p)); }
  Elem elem_at(u64 i) const {
    if (i >= p) throw std::invalid_argument("Fp: element index out of range");
    return i;
  }
};

// Dense univariate polynomials over a runtime field context F.  A polynomial
// is a coefficient vector, low degree first, kept normalized: no trailing
// zero coefficients, and the zero polynomial is the empty vector.
template <class F>
struct PolyRing {
  using Elem = typename F::Elem;
  using Poly = std::vector<Elem>;

  F fld;

  explicit PolyRing(const F& field) : fld(field) {}

  Poly normalize(Poly a) const {
    while (!a.empty() && fld.is_zero(a.back())) a.pop_back();
    return a;
  }
  int deg(const Poly& a) const { return static_cast<int>(a.size()) - 1; }
  bool is_zero(const Poly& a) const { return a.empty(); }
  bool eq(const Poly& a, const Poly& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!fld.eq(a[i], b[i])) return false;
    return true;
  }
  Poly zero() const { return {}; }
  Poly one() const { return {fld.one()}; }
  Poly x() const { return {fld.zero(), fld.one()}; }
  Poly constant(const Elem& c) const { return normalize(Poly{c}); }
  Elem coeff(const Poly& a, int i) const {
    return (i >= 0 && i <= deg(a)) ? a[static_cast<std::size_t>(i)] : fld.zero();
  }
  Elem lead(const Poly& a) const {
    if (a.empty()) throw std::invalid_argument("PolyRing: leading coefficient of zero");
    return a.back();
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), fld.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fld.add(coeff(a, static_cast<int>(i)), coeff(b, static_cast<int>(i)));
    return normalize(std::move(r));
  }
  Poly sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), fld.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = fld.sub(coeff(a, static_cast<int>(i)), coeff(b, static_cast<int>(i)));
    return normalize(std::move(r));
  }
  Poly neg(const Poly& a) const {
    Poly r = a;
    for (auto& c : r) c = fld.neg(c);
    return r;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, fld.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
    return normalize(std::move(r));
  }
  Poly mul_elem(const Poly& a, const Elem& c) const {
    Poly r = a;
    for (auto& t : r) t = fld.mul(t, c);
    return normalize(std::move(r));
  }

  // Quotient and remainder by a nonzero divisor.
  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const {
    if (b.empty()) throw std::invalid_argument("PolyRing: division by zero");
    Poly r = a;
    int db = deg(b);
    if (deg(a) < db) return {zero(), r};
    Poly q(static_cast<std::size_t>(deg(a) - db) + 1, fld.zero());
    Elem il = fld.inv(lead(b));
    for (int i = deg(r); i >= db; --i) {
      Elem c = r[static_cast<std::size_t>(i)];
      if (fld.is_zero(c)) continue;
      Elem s = fld.mul(c, il);
      q[static_cast<std::size_t>(i - db)] = s;
      for (int j = 0; j <= db; ++j) {
        auto& t = r[static_cast<std::size_t>(i - db + j)];
        t = fld.sub(t, fld.mul(s, b[static_cast<std::size_t>(j)]));
      }
    }
    return {normalize(std::move(q)), normalize(std::move(r))};
  }
  Poly mod(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    return mul_elem(a, fld.inv(lead(a)));
  }
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Inverse of a modulo f for coprime inputs, via the extended Euclid scheme.
  Poly invmod(const Poly& a, const Poly& f) const {
    Poly r0 = f, r1 = mod(a, f);
    Poly t0 = zero(), t1 = one();
    while (!r1.empty()) {
      auto [q, r2] = divrem(r0, r1);
      Poly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw std::invalid_argument("PolyRing: invmod of non-unit");
    return mod(mul_elem(t0, fld.inv(r0[0])), f);
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return mod(mul(a, b), m); }
  Poly pow_mod(const Poly& base, u64 e, const Poly& m) const {
    Poly r = mod(one(), m), b = mod(base, m);
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  }
  Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m) const {
    if (e < 0) throw std::invalid_argument("PolyRing: negative exponent");
    Poly r = mod(one(), m), b = mod(base, m);
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
      r = mulmod(r, r, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, b, m);
    }
    return r;
  }

  Elem eval(const Poly& a, const Elem& t) const {
    Elem r = fld.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = fld.add(fld.mul(r, t), a[i]);
    return r;
  }
  Poly derivative(const Poly& a) const {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, fld.zero());
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = fld.mul(a[i], fld.from_u64(i));
    return normalize(std::move(r));
  }

  // Rabin's criterion: f of degree d is irreducible iff x^(q^d) = x mod f and
  // x^(q^(d/r)) - x is coprime to f for every prime r dividing d.
  bool is_irreducible(const Poly& f) const {
    int d = deg(f);
    if (d < 1) throw std::invalid_argument("PolyRing: irreducibility of a constant");
    if (d == 1) return true;
    mpz_class q = fld.size();
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = mod(x(), f);
    for (int j = 1; j <= d; ++j) frob[static_cast<std::size_t>(j)] = pow_mod(frob[static_cast<std::size_t>(j - 1)], q, f);
    if (!eq(frob[static_cast<std::size_t>(d)], mod(x(), f))) return false;
    int rest = d;
    for (int r = 2; r * r <= rest; ++r) {
      if (rest % r) continue;
      if (deg(gcd(sub(frob[static_cast<std::size_t>(d / r)], x()), f)) != 0) return false;
      while (rest % r == 0) rest /= r;
    }
    if (rest > 1) {
      if (deg(gcd(sub(frob[static_cast<std::size_t>(d / rest)], x()), f)) != 0) return false;
    }
    return true;
  }
};

// The finite field F_{p^k}, realized as F_p[x]/(m(x)) with a canonical
// modulus: non-leading coefficient tuples are enumerated as the base-p digit
// expansions of 0, 1, 2, ... and the first monic irreducible wins.  Elements
// are length-k coefficient vectors, low degree first, so comparisons and
// the std::vector ordering give a stable element encoding.
struct ExtField {
  Fp base;
  int k;
  std::vector<u64> modulus;  // c_0 .. c_{k-1} of m(x) = x^k + sum c_i x^i
  using Elem = std::vector<u64>;

  ExtField(u64 p, int ext_deg) : base(p), k(ext_deg) {
    if (ext_deg < 1 || ext_deg > 64) throw std::invalid_argument("ExtField: degree out of range");
    PolyRing<Fp> R(base);
    for (u64 m = 0;; ++m) {
      std::vector<u64> cand(static_cast<std::size_t>(k) + 1, 0);
      cand[static_cast<std::size_t>(k)] = 1;
      u64 t = m;
      for (int i = 0; i < k; ++i) {
        cand[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      if (t != 0) throw std::runtime_error("ExtField: modulus search exhausted");
      if (R.is_irreducible(cand)) {
        modulus.assign(cand.begin(), cand.end() - 1);
        break;
      }
    }
  }

  Elem zero() const { return Elem(static_cast<std::size_t>(k), 0); }
  Elem one() const {
    Elem e(static_cast<std::size_t>(k), 0);
    e[0] = 1;
    return e;
  }
  Elem embed(u64 a) const {
    Elem e(static_cast<std::size_t>(k), 0);
    e[0] = base.from_u64(a);
    return e;
  }
  Elem from_u64(u64 a) const { return embed(a); }
  Elem from_i64(i64 a) const {
    Elem e(static_cast<std::size_t>(k), 0);
    e[0] = base.from_i64(a);
    return e;
  }
  // The class of x; for k = 1 this is the constant -c_0.
  Elem gen() const {
    Elem e(static_cast<std::size_t>(k), 0);
    if (k >= 2)
      e[1] = 1;
    else
      e[0] = base.neg(modulus[0]);
    return e;
  }
  bool is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = base.add(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = base.sub(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = base.neg(a[static_cast<std::size_t>(i)]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<u64> buf(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < k; ++j) {
        auto& t = buf[static_cast<std::size_t>(i + j)];
        t = base.add(t, base.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
      }
    }
    for (int i = 2 * k - 2; i >= k; --i) {
      u64 t = buf[static_cast<std::size_t>(i)];
      if (t == 0) continue;
      buf[static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < k; ++j) {
        auto& c = buf[static_cast<std::size_t>(i - k + j)];
        c = base.sub(c, base.mul(t, modulus[static_cast<std::size_t>(j)]));
      }
    }
    buf.resize(static_cast<std::size_t>(k));
    return buf;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("ExtField: inverse of zero");
    PolyRing<Fp> R(base);
    std::vector<u64> m = modulus;
    m.push_back(1);
    Elem r = R.invmod(R.normalize(a), m);
    r.resize(static_cast<std::size_t>(k), 0);
    return r;
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
  Elem pow(const Elem& a, const mpz_class& e) const {
    if (e < 0) throw std::invalid_argument("ExtField: negative exponent");
    Elem r = one();
    for (mp_bitcnt_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
    }
    return r;
  }
  Elem frobenius(const Elem& a) const { return pow(a, base.p); }
  bool in_base(const Elem& a) const {
    for (int i = 1; i < k; ++i)
      if (a[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }
  u64 to_base(const Elem& a) const {
    if (!in_base(a)) throw std::invalid_argument("ExtField: element is not in the prime field");
    return a[0];
  }
  mpz_class size() const {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(base.p), static_cast<unsigned long>(k));
    return s;
  }
  Elem elem_at(u64 idx) const {
    Elem e(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k && idx; ++i) {
      e[static_cast<std::size_t>(i)] = idx % base.p;
      idx /= base.p;
    }
    if (idx != 0) throw std::invalid_argument("ExtField: element index out of range");
    return e;
  }
};

// Distinct-degree decomposition of a squarefree polynomial: (d, product of
// the irreducible factors of degree d) pairs, degrees ascending, constants
// giving the empty list.  Repeated factors are not detected, so the products
// are only meaningful for squarefree input.
template <class F>
std::vector<std::pair<int, typename PolyRing<F>::Poly>> distinct_degree_products(
    const F& fld, const std::vector<typename F::Elem>& a) {
  PolyRing<F> R(fld);
  auto f = R.normalize(a);
  if (R.is_zero(f)) throw std::invalid_argument("distinct_degree_products: zero polynomial");
  std::vector<std::pair<int, typename PolyRing<F>::Poly>> out;
  if (R.deg(f) == 0) return out;
  f = R.monic(f);
  mpz_class q = fld.size();
  auto h = R.x();
  for (int d = 1; R.deg(f) > 0; ++d) {
    if (2 * d > R.deg(f)) {
      // fewer than two factors of degree >= d can remain: f is irreducible
      out.emplace_back(R.deg(f), f);
      break;
    }
    h = R.pow_mod(h, q, f);
    auto g = R.gcd(R.sub(h, R.x()), f);
    if (R.deg(g) > 0) {
      out.emplace_back(d, g);
      f = R.divrem(f, g).first;
      h = R.divrem(h, f).second;
    }
  }
  return out;
}

// All roots of a nonzero polynomial over the field, each listed once, sorted
// by element encoding.  Small fields are scanned; larger ones go through
// x^q - x and deterministic quadratic-residue splitting, so the output never
// depends on hidden randomness.
template <class F>
std::vector<typename F::Elem> poly_roots(const F& fld, const std::vector<typename F::Elem>& a) {
  PolyRing<F> R(fld);
  auto f = R.normalize(a);
  if (R.is_zero(f)) throw std::invalid_argument("poly_roots: zero polynomial");
  std::vector<typename F::Elem> out;
  if (R.deg(f) == 0) return out;
  mpz_class q = fld.size();
  if (q <= (1 << 20)) {
    u64 qn = mpz_get_ui(q.get_mpz_t());
    for (u64 i = 0; i < qn; ++i) {
      auto t = fld.elem_at(i);
      if (fld.is_zero(R.eval(f, t))) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (mpz_even_p(q.get_mpz_t()))
    throw std::invalid_argument("poly_roots: large even-characteristic fields are unsupported");
  f = R.monic(f);
  auto xq = R.pow_mod(R.x(), q, f);
  auto lin = R.gcd(R.sub(xq, R.x()), f);  // product of the distinct linear factors
  if (R.deg(lin) == 0) return out;
  mpz_class h = (q - 1) / 2;
  std::vector<typename PolyRing<F>::Poly> stack{lin};
  while (!stack.empty()) {
    auto t = stack.back();
    stack.pop_back();
    if (R.deg(t) == 1) {
      out.push_back(fld.neg(t[0]));  // t is monic
      continue;
    }
    bool split = false;
    for (u64 probe = 0; probe < (u64(1) << 24); ++probe) {
      auto shift = R.add(R.x(), R.constant(fld.elem_at(probe)));
      auto w = R.sub(R.pow_mod(shift, h, t), R.one());
      auto d = R.gcd(w, t);
      if (R.deg(d) > 0 && R.deg(d) < R.deg(t)) {
        stack.push_back(d);
        stack.push_back(R.divrem(t, d).first);
        split = true;
        break;
      }
    }
    if (!split) throw std::runtime_error("poly_roots: splitting did not terminate");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Square root in a finite field of odd order, when one exists.  Uses the
// (q+1)/4 shortcut for q = 3 mod 4 and Tonelli-Shanks otherwise, with the
// non-residue found by scanning the element encoding in order.
template <class F>
std::optional<typename F::Elem> field_sqrt(const F& fld, const typename F::Elem& a) {
  if (fld.is_zero(a)) return a;
  mpz_class q = fld.size();
  if (mpz_even_p(q.get_mpz_t())) throw std::invalid_argument("field_sqrt: even-order field");
  mpz_class half = (q - 1) / 2;
  if (!fld.eq(fld.pow(a, half), fld.one())) return std::nullopt;
  if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) return fld.pow(a, (q + 1) / 4);
  mpz_class t = q - 1;
  unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
  t >>= s;
  typename F::Elem z = fld.zero();
  bool found = false;
  for (u64 i = 1; i < (u64(1) << 24); ++i) {
    z = fld.elem_at(i);
    if (!fld.is_zero(z) && !fld.eq(fld.pow(z, half), fld.one())) {
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("field_sqrt: no non-residue found");
  auto c = fld.pow(z, t);
  auto r = fld.pow(a, (t + 1) / 2);
  auto u = fld.pow(a, t);
  unsigned long m = s;
  while (!fld.eq(u, fld.one())) {
    auto v = u;
    unsigned long i = 0;
    while (!fld.eq(v, fld.one())) {
      v = fld.mul(v, v);
      ++i;
      if (i >= m) throw std::runtime_error("field_sqrt: inconsistent residue state");
    }
    auto b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = fld.mul(b, b);
    m = i;
    c = fld.mul(b, b);
    u = fld.mul(u, c);
    r = fld.mul(r, b);
  }
  return r;
}

// Of the two square roots, the one with the smaller element encoding.
template <class F>
std::optional<typename F::Elem> canonical_sqrt(const F& fld, const typename F::Elem& a) {
  auto r = field_sqrt(fld, a);
  if (!r) return r;
  auto n = fld.neg(*r);
  return std::min(*r, n);
}

}  // namespace crater
