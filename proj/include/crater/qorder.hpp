#pragma once

#include <array>
#include <limits>

#include <crater/arith.hpp>

namespace crater {

inline i64 narrow_i128(i128 v, const char* where) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw std::runtime_error(std::string(where) + ": intermediate overflows 64 bits");
  return static_cast<i64>(v);
}

// Kronecker symbol (D | n).
inline int kronecker(i64 D, u64 n) {
  mpz_class d(static_cast<long>(D));
  return mpz_kronecker_ui(d.get_mpz_t(), static_cast<unsigned long>(n));
}

inline bool is_square_free(u64 n) {
  for (u64 d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// Fundamental means: D = 1 mod 4 square-free, or D = 4k with k square-free
// and k = 2 or 3 mod 4.
inline bool is_fundamental_discriminant(i64 D) {
  if (D >= 0) return false;
  i64 r = ((D % 4) + 4) % 4;
  if (r == 1) return is_square_free(static_cast<u64>(-D));
  if (r != 0) return false;
  i64 k = D / 4;
  i64 kr = ((k % 4) + 4) % 4;
  return (kr == 2 || kr == 3) && is_square_free(static_cast<u64>(-k));
}

// D factors uniquely as f^2 * D0 with D0 fundamental; this is f.
inline i64 conductor_of(i64 D) {
  if (D >= 0) throw std::invalid_argument("conductor_of: discriminant must be negative");
  for (i64 f = static_cast<i64>(isqrt_u64(static_cast<u64>(-D))); f >= 1; --f) {
    if (D % (f * f)) continue;
    if (is_fundamental_discriminant(D / (f * f))) return f;
  }
  throw std::invalid_argument("conductor_of: not a discriminant");
}

// The imaginary quadratic order of discriminant D < 0 (D = 0 or 1 mod 4),
// presented as Z[Phi] with Phi^2 = s*Phi - m, where s = D mod 2 and
// m = (s^2 - D) / 4.  Elements are integer pairs (x, y) meaning x + y*Phi.
struct QuadOrder {
  i64 D, s, m;

  explicit QuadOrder(i64 disc) : D(disc) {
    if (disc >= 0) throw std::invalid_argument("QuadOrder: discriminant must be negative");
    i64 r = ((disc % 4) + 4) % 4;
    if (r != 0 && r != 1)
      throw std::invalid_argument("QuadOrder: discriminant must be 0 or 1 mod 4");
    s = r;
    m = (s * s - disc) / 4;
  }

  bool operator==(const QuadOrder& o) const { return D == o.D; }

  using Elem = std::pair<i64, i64>;

  Elem mul(const Elem& u, const Elem& v) const {
    i128 a = u.first, b = u.second, c = v.first, d = v.second;
    i128 x = a * c - b * d * m;
    i128 y = a * d + b * c + b * d * s;
    return {narrow_i128(x, "QuadOrder::mul"), narrow_i128(y, "QuadOrder::mul")};
  }
  Elem conj(const Elem& u) const { return {u.first + u.second * s, -u.second}; }
  i64 norm(i64 x, i64 y) const {
    i128 n = i128(x) * x + i128(s) * x * y + i128(m) * y * y;
    return narrow_i128(n, "QuadOrder::norm");
  }
  i64 trace(i64 x, i64 y) const { return 2 * x + s * y; }

  // All x + y*Phi of the given norm, sorted by (y, x).
  std::vector<Elem> elements_of_norm(i64 N) const {
    if (N < 0) return {};
    std::vector<Elem> out;
    if (N == 0) {
      out.emplace_back(0, 0);
      return out;
    }
    i64 ymax = static_cast<i64>(isqrt_u64(static_cast<u64>(4 * N / (-D)))) + 1;
    for (i64 y = -ymax; y <= ymax; ++y) {
      i128 disc_y = i128(D) * y * y + i128(4) * N;
      if (disc_y < 0) continue;
      u64 dy = static_cast<u64>(disc_y);
      u64 t = isqrt_u64(dy);
      if (static_cast<u128>(t) * t != dy) continue;
      for (i64 sign : {1, -1}) {
        i64 num = -s * y + sign * static_cast<i64>(t);
        if (num % 2 != 0) continue;
        i64 x = num / 2;
        if (norm(x, y) == N) out.emplace_back(x, y);
      }
    }
    std::sort(out.begin(), out.end(), [](const Elem& a, const Elem& b) {
      return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Elem> units() const { return elements_of_norm(1); }
};

// Integral O-ideal in Hermite form: the lattice a*Z + (b + c*Phi)*Z with
// a, c > 0, 0 <= b < a, c | a and c | b.  The norm is a*c and the content
// (largest rational integer divisor) is c.
struct QuadIdeal {
  QuadOrder O;
  i64 a, b, c;

  QuadIdeal(const QuadOrder& ord, i64 a_, i64 b_, i64 c_) : O(ord), a(a_), b(b_), c(c_) {
    if (a <= 0 || c <= 0 || b < 0 || b >= a || a % c || b % c)
      throw std::invalid_argument("QuadIdeal: not a Hermite basis");
    // closure under Phi: Phi*a and Phi*(b + c*Phi) must lie in the lattice
    if (!lattice_contains(0, a) || !lattice_contains(-c * O.m, b + c * O.s))
      throw std::invalid_argument("QuadIdeal: lattice is not an O-module");
  }

  bool lattice_contains(i64 x, i64 y) const {
    if (y % c) return false;
    i128 r = i128(x) - i128(y / c) * b;
    return r % a == 0;
  }
  bool contains(const QuadOrder::Elem& e) const { return lattice_contains(e.first, e.second); }
  bool contains(const QuadIdeal& J) const {
    return lattice_contains(J.a, 0) && lattice_contains(J.b, J.c);
  }
  bool operator==(const QuadIdeal& J) const {
    return O == J.O && a == J.a && b == J.b && c == J.c;
  }

  i64 norm() const { return narrow_i128(i128(a) * c, "QuadIdeal::norm"); }

  static i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Hermite form of the O-span of the given elements.  Combination
  // coefficients can exceed 64 bits, so the accumulator runs in 128 bits and
  // the working x-coordinate is damped modulo the running axis gcd (the axis
  // vector is already in the lattice, so this does not change the span).
  static QuadIdeal span(const QuadOrder& O, const std::vector<QuadOrder::Elem>& gens) {
    std::vector<std::pair<i64, i64>> vecs;
    for (const auto& g : gens) {
      if (g.first == 0 && g.second == 0) continue;
      vecs.push_back(g);
      vecs.push_back(O.mul({0, 1}, g));  // Phi * g
    }
    if (vecs.empty()) throw std::invalid_argument("QuadIdeal::span: zero ideal");
    i128 A = 0, cx = 0;
    i64 cy = 0;
    bool have = false;
    auto fold = [&](i128 x) {
      A = gcd_i128(A, x);
      if (A != 0) cx %= A;
    };
    for (const auto& [x, y] : vecs) {
      if (y == 0) {
        fold(x);
        continue;
      }
      if (!have) {
        cx = x;
        cy = y;
        have = true;
        continue;
      }
      auto [g, u, v] = ext_gcd(cy, y);
      i128 nx = i128(u) * cx + i128(v) * x;
      i128 rx = i128(y / g) * cx - i128(cy / g) * x;
      cx = nx;
      cy = g;
      fold(rx);
    }
    if (!have || A == 0) throw std::runtime_error("QuadIdeal::span: rank-deficient generator set");
    if (cy < 0) {
      cy = -cy;
      cx = -cx;
    }
    i64 a = narrow_i128(A, "QuadIdeal::span");
    i64 B = narrow_i128(((cx % A) + A) % A, "QuadIdeal::span");
    return QuadIdeal(O, a, B, cy);
  }

  static QuadIdeal principal(const QuadOrder& O, i64 x, i64 y) { return span(O, {{x, y}}); }
  static QuadIdeal of_integer(const QuadOrder& O, i64 n) {
    if (n == 0) throw std::invalid_argument("QuadIdeal: zero ideal");
    return span(O, {{std::abs(n), 0}});
  }

  QuadIdeal mul(const QuadIdeal& J) const {
    if (!(O == J.O)) throw std::invalid_argument("QuadIdeal::mul: different orders");
    std::vector<QuadOrder::Elem> gens;
    std::array<QuadOrder::Elem, 2> bi{{{a, 0}, {b, c}}};
    std::array<QuadOrder::Elem, 2> bj{{{J.a, 0}, {J.b, J.c}}};
    for (const auto& u : bi)
      for (const auto& v : bj) gens.push_back(O.mul(u, v));
    return span(O, gens);
  }
  QuadIdeal pow(u64 e) const {
    if (e == 0) return of_integer(O, 1);
    QuadIdeal r = *this;
    for (u64 i = 1; i < e; ++i) r = r.mul(*this);
    return r;
  }
  QuadIdeal conjugate() const { return span(O, {{a, 0}, O.conj({b, c})}); }

  QuadIdeal primitive_part() const { return QuadIdeal(O, a / c, b / c, 1); }

  // All generators when the ideal is principal; empty otherwise.
  std::vector<QuadOrder::Elem> generators() const {
    std::vector<QuadOrder::Elem> out;
    for (const auto& g : O.elements_of_norm(norm()))
      if (principal(O, g.first, g.second) == *this) out.push_back(g);
    return out;
  }
  // Canonical generator of a principal ideal: among the generators with
  // y < 0, or y = 0 and x > 0, the (y, x)-lexicographically smallest.
  std::optional<QuadOrder::Elem> principal_generator() const {
    auto gens = generators();
    for (const auto& g : gens)
      if (g.second < 0 || (g.second == 0 && g.first > 0)) return g;
    return std::nullopt;
  }
  bool is_principal() const { return !generators().empty(); }
};

enum class Splitting { split, ramified, inert };

// The prime ideals of O above the rational prime q, sorted by the Hermite
// entry b; for the inert case the list is just qO.  The classification is
// cross-checked against the Kronecker symbol (D | q).
struct PrimesOver {
  Splitting type;
  std::vector<QuadIdeal> primes;
};

inline PrimesOver primes_over(const QuadOrder& O, u64 q) {
  if (!is_prime_u64(q)) throw std::invalid_argument("primes_over: q must be prime");
  Fp F(q);
  auto roots = poly_roots(F, {F.from_i64(O.m), F.from_i64(-O.s), 1});  // x^2 - s x + m
  PrimesOver res;
  int kr = kronecker(O.D, q);
  if (roots.empty()) {
    res.type = Splitting::inert;
    res.primes.push_back(QuadIdeal::of_integer(O, static_cast<i64>(q)));
    if (kr != -1) throw std::runtime_error("primes_over: splitting disagrees with (D|q)");
    return res;
  }
  res.type = roots.size() == 2 ? Splitting::split : Splitting::ramified;
  if ((res.type == Splitting::split) != (kr == 1))
    throw std::runtime_error("primes_over: splitting disagrees with (D|q)");
  for (u64 r : roots) {
    i64 bb = static_cast<i64>((q - r) % q);  // Phi - r lies in the ideal
    res.primes.push_back(QuadIdeal(O, static_cast<i64>(q), bb, 1));
  }
  std::sort(res.primes.begin(), res.primes.end(),
            [](const QuadIdeal& x, const QuadIdeal& y) { return x.b < y.b; });
  return res;
}

// Largest j with I inside P^j, for a prime ideal P.
inline int valuation(const QuadIdeal& I, const QuadIdeal& P) {
  int v = 0;
  QuadIdeal Pj = P;
  while (Pj.contains(I)) {
    ++v;
    Pj = Pj.mul(P);
    if (v > 200) throw std::runtime_error("valuation: runaway exponent");
  }
  return v;
}

// The colon ideal (nO : I) = { x in O : x*I is inside nO }.  The solution
// set is a lattice containing nO, so scanning representatives u + v*Phi with
// 0 <= u, v < n is exhaustive.
inline QuadIdeal colon_ideal(u64 n, const QuadIdeal& I) {
  const QuadOrder& O = I.O;
  QuadIdeal nO = QuadIdeal::of_integer(O, static_cast<i64>(n));
  std::vector<QuadOrder::Elem> gens{{static_cast<i64>(n), 0}};
  std::array<QuadOrder::Elem, 2> basis{{{I.a, 0}, {I.b, I.c}}};
  for (i64 u = 0; u < static_cast<i64>(n); ++u)
    for (i64 v = 0; v < static_cast<i64>(n); ++v) {
      bool ok = true;
      for (const auto& g : basis)
        if (!nO.contains(O.mul({u, v}, g))) {
          ok = false;
          break;
        }
      if (ok) gens.push_back({u, v});
    }
  return QuadIdeal::span(O, gens);
}

// #(O/I)^x through the prime factorization of I; requires the prime-power
// norms of the factors to recompose to N(I) exactly.
inline u64 phi_ideal(const QuadIdeal& I) {
  u64 N = static_cast<u64>(I.norm());
  if (N == 1) return 1;
  u64 phi = 1;
  u128 recomposed = 1;
  for (auto [q, e] : factor_u64(N)) {
    (void)e;
    auto po = primes_over(I.O, q);
    for (const auto& P : po.primes) {
      int v = valuation(I, P);
      if (v == 0) continue;
      u64 nq = static_cast<u64>(P.norm());
      for (int i = 1; i < v; ++i) {
        phi *= nq;
        recomposed *= nq;
      }
      phi *= nq - 1;
      recomposed *= nq;
    }
  }
  if (recomposed != N) throw std::runtime_error("phi_ideal: factorization does not recompose");
  return phi;
}

// Primitive positive-definite binary quadratic form A x^2 + B x y + C y^2.
struct QuadForm {
  i64 A, B, C;

  i64 disc() const { return narrow_i128(i128(B) * B - i128(4) * A * C, "QuadForm::disc"); }
  i64 eval(i64 x, i64 y) const {
    return narrow_i128(i128(A) * x * x + i128(B) * x * y + i128(C) * y * y, "QuadForm::eval");
  }
  bool operator==(const QuadForm& g) const { return A == g.A && B == g.B && C == g.C; }

  static QuadForm identity(i64 D) {
    i64 s = ((D % 2) + 2) % 2;
    return {1, s, (s * s - D) / 4};
  }
  bool is_reduced() const {
    if (!(std::abs(B) <= A && A <= C)) return false;
    if ((std::abs(B) == A || A == C) && B < 0) return false;
    return true;
  }
  QuadForm reduced() const {
    i64 D = disc();
    if (D >= 0 || A <= 0) throw std::invalid_argument("QuadForm: not positive definite");
    i64 a = A, bq = B, c = C;
    for (int guard = 0; guard < 100000; ++guard) {
      // normalize b into (-a, a]
      i64 twoa = 2 * a;
      i64 r = ((bq % twoa) + twoa) % twoa;  // [0, 2a)
      if (r > a) r -= twoa;
      bq = r;
      c = narrow_i128((i128(bq) * bq - D) / (4 * a), "QuadForm::reduced");
      if (a > c) {
        std::tie(a, bq, c) = std::make_tuple(c, -bq, a);
        continue;
      }
      if (a == c && bq < 0) bq = -bq;
      QuadForm f{a, bq, c};
      if (!f.is_reduced() || f.disc() != D) throw std::runtime_error("QuadForm: reduction failed");
      return f;
    }
    throw std::runtime_error("QuadForm: reduction did not terminate");
  }
  QuadForm inverse() const { return QuadForm{A, -B, C}.reduced(); }

  // Gauss composition: steer the second form to a leading coefficient
  // coprime to A, make the middle coefficients concordant by CRT, multiply.
  QuadForm compose(const QuadForm& other) const {
    QuadForm f = reduced(), g = other.reduced();
    i64 D = f.disc();
    if (D != g.disc()) throw std::invalid_argument("QuadForm::compose: discriminant mismatch");
    i64 x0 = 0, y0 = 0;
    bool found = false;
    for (i64 shell = 0; shell <= 60 && !found; ++shell)
      for (i64 x = -shell; x <= shell && !found; ++x)
        for (i64 y = -shell; y <= shell && !found; ++y) {
          if (std::max(std::abs(x), std::abs(y)) != shell) continue;
          if (std::gcd(x, y) != 1) continue;
          if (std::gcd(g.eval(x, y), f.A) == 1) {
            x0 = x;
            y0 = y;
            found = true;
          }
        }
    if (!found) throw std::runtime_error("QuadForm::compose: no coprime representation found");
    auto [gg, v0, u0n] = ext_gcd(x0, y0);
    (void)gg;
    // unimodular [[x0, u],[y0, v]] with x0*v - y0*u = 1
    i64 v = v0, u = -u0n;
    i64 A2 = g.eval(x0, y0);
    i64 B2 = narrow_i128(i128(2) * (i128(g.A) * x0 * u + i128(g.C) * y0 * v) +
                             i128(g.B) * (i128(x0) * v + i128(y0) * u),
                         "QuadForm::compose");
    i64 A1 = f.A, B1 = f.B;
    // CRT: W = B1 mod 2*A1 and W = B2 mod 2*A2, with gcd(A1, A2) = 1
    i64 diff = B2 - B1;
    if (diff % 2) throw std::runtime_error("QuadForm::compose: parity broke");
    auto [g2, inv, dummy] = ext_gcd(((A1 % A2) + A2) % A2, A2);
    (void)dummy;
    if (g2 != 1) throw std::runtime_error("QuadForm::compose: leading coefficients not coprime");
    i64 t = narrow_i128(((i128(diff / 2) % A2) * inv) % A2, "QuadForm::compose");
    i64 W = narrow_i128(i128(B1) + i128(2) * A1 * t, "QuadForm::compose");
    i64 AA = narrow_i128(i128(A1) * A2, "QuadForm::compose");
    i128 cc = (i128(W) * W - D) / (i128(4) * AA);
    QuadForm prod{AA, W, narrow_i128(cc, "QuadForm::compose")};
    if (prod.disc() != D) throw std::runtime_error("QuadForm::compose: discriminant broke");
    return prod.reduced();
  }

  QuadForm pow(u64 e) const {
    i64 D = disc();
    QuadForm r = identity(D).reduced(), base = reduced();
    while (e) {
      if (e & 1) r = r.compose(base);
      base = base.compose(base);
      e >>= 1;
    }
    return r;
  }
  bool is_identity() const { return reduced() == identity(disc()).reduced(); }
  u64 order() const {
    QuadForm f = reduced(), g = f;
    u64 k = 1;
    while (!g.is_identity()) {
      g = g.compose(f);
      ++k;
      if (k > 1000000) throw std::runtime_error("QuadForm::order: runaway order");
    }
    return k;
  }

  // Every reduced primitive form of discriminant D, sorted by (A, B, C).
  static std::vector<QuadForm> all_reduced(i64 D) {
    QuadOrder check(D);  // validates D
    (void)check;
    std::vector<QuadForm> out;
    i64 par = ((D % 2) + 2) % 2;
    for (i64 bq = par; 3 * bq * bq <= -D; bq += 2) {
      i64 n = narrow_i128((i128(bq) * bq - D) / 4, "QuadForm::all_reduced");
      for (i64 a = std::max<i64>(bq, 1); a * a <= n; ++a) {
        if (n % a) continue;
        i64 c = n / a;
        if (std::gcd(std::gcd(a, bq), c) != 1) continue;
        out.push_back({a, bq, c});
        if (bq > 0 && bq != a && a != c) out.push_back({a, -bq, c});
      }
    }
    std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
      return std::tie(x.A, x.B, x.C) < std::tie(y.A, y.B, y.C);
    });
    return out;
  }
  static u64 class_number(i64 D) { return all_reduced(D).size(); }
};

// Dictionary between primitive ideals and forms: [a, b + Phi] corresponds to
// (a, -(2b + s), N(b + Phi)/a).  Arbitrary ideals go through their primitive
// part, which does not change the class.
inline QuadForm form_of_ideal(const QuadIdeal& I) {
  QuadIdeal P = I.primitive_part();
  i64 nb = P.O.norm(P.b, 1);
  if (nb % P.a) throw std::runtime_error("form_of_ideal: norm is not divisible");
  QuadForm f{P.a, -(2 * P.b + P.O.s), nb / P.a};
  if (f.disc() != P.O.D) throw std::runtime_error("form_of_ideal: discriminant mismatch");
  return f.reduced();
}

inline QuadIdeal ideal_of_form(const QuadOrder& O, const QuadForm& f) {
  if (f.disc() != O.D) throw std::invalid_argument("ideal_of_form: discriminant mismatch");
  i64 twoa = 2 * f.A;
  i64 b = ((-(f.B + O.s) / 2) % f.A + f.A) % f.A;
  (void)twoa;
  return QuadIdeal(O, f.A, b, 1);
}

// Order of the ideal class in the form class group of O.
inline u64 ideal_class_order(const QuadIdeal& I) { return form_of_ideal(I).order(); }

}  // namespace crater
