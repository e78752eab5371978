#include "asreg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>

namespace asreg {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p < 2^31, constant term first.

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;

struct Zp {
  u64 p;

  void trim(MPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 inv(u64 a) const {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  MPoly add(const MPoly& a, const MPoly& b) const {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
  }
  MPoly sub(const MPoly& a, const MPoly& b) const {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
  }
  MPoly mul(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  MPoly scale(const MPoly& a, u64 s) const {
    MPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s);
    trim(r);
    return r;
  }
  std::pair<MPoly, MPoly> divmod(const MPoly& a, const MPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    MPoly r = a, q(a.size() - b.size() + 1, 0);
    u64 li = inv(b.back());
    for (size_t k = q.size(); k-- > 0;) {
      u64 f = mul(r[k + b.size() - 1], li);
      q[k] = f;
      if (!f) continue;
      for (size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] + p - mul(f, b[j])) % p;
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
  }
  MPoly rem(const MPoly& a, const MPoly& b) const { return divmod(a, b).second; }
  MPoly monic(const MPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  MPoly gcd(MPoly a, MPoly b) const {
    while (!b.empty()) {
      MPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s, t with s a + t b = 1 for coprime a, b.
  std::pair<MPoly, MPoly> exgcd(const MPoly& a, const MPoly& b) const {
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      MPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 li = inv(r0.back());
    return {scale(s0, li), scale(t0, li)};
  }
  MPoly powmod(MPoly base, const Integer& e, const MPoly& f) const {
    MPoly r{1};
    base = rem(base, f);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), f);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), f);
    }
    return r;
  }
  MPoly derivative(const MPoly& a) const {
    MPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }

  // Distinct-degree then equal-degree factorization of a monic squarefree f.
  std::vector<MPoly> factor(const MPoly& f) const {
    std::vector<MPoly> out;
    MPoly rest = f, h{0, 1};
    const MPoly x{0, 1};
    for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
      h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
      MPoly g = gcd(rest, sub(h, x));
      if (g.size() > 1) {
        equal_degree(g, d, out);
        rest = divmod(rest, g).first;
        h = rem(h, rest);
      }
    }
    if (rest.size() > 1) out.push_back(monic(rest));
    std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
  }

  void equal_degree(const MPoly& g, int d, std::vector<MPoly>& out) const {
    int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
      out.push_back(g);
      return;
    }
    Integer pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    Integer e = (pd - 1) / 2;
    std::mt19937_64 rng(0x5eed0000u + n * 131 + d);
    for (;;) {
      MPoly r(n);
      for (auto& c : r) c = rng() % p;
      trim(r);
      if (r.size() < 2) continue;
      MPoly w = sub(powmod(r, e, g), MPoly{1});
      MPoly h = gcd(g, w);
      if (h.size() > 1 && h.size() < g.size()) {
        equal_degree(h, d, out);
        equal_degree(monic(divmod(g, h).first), d, out);
        return;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Integer polynomials, constant term first.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly zmod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  ztrim(r);
  return r;
}

ZPoly zsymmetric(const ZPoly& a, const Integer& m) {
  ZPoly r = zmod(a, m);
  Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  ztrim(r);
  return r;
}

MPoly to_mod(const ZPoly& a, u64 p) {
  MPoly r(a.size());
  Integer P(static_cast<unsigned long>(p));
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], P).get_ui();
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

ZPoly from_mod(const MPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
  return r;
}

// Exact quotient by a monic divisor, if it divides.
std::optional<ZPoly> zdivide_monic(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a, q(a.size() - b.size() + 1, Integer(0));
  for (size_t k = q.size(); k-- > 0;) {
    Integer f = r[k + b.size() - 1];
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] -= f * b[j];
  }
  for (size_t j = 0; j + 1 < b.size(); ++j)
    if (sgn(r[j]) != 0) return std::nullopt;
  ztrim(q);
  return q;
}

bool is_prime(u64 n) { return mpz_probab_prime_p(Integer(static_cast<unsigned long>(n)).get_mpz_t(), 30) > 0; }

// Lift F = a0 * b0 (mod p) to F = a * b (mod p^k); F, a0, b0 monic.
std::pair<ZPoly, ZPoly> hensel2(const ZPoly& F, const MPoly& a0, const MPoly& b0, const Zp& zp, int k) {
  auto [s, t] = zp.exgcd(a0, b0);
  ZPoly a = from_mod(a0), b = from_mod(b0);
  Integer pj(static_cast<unsigned long>(zp.p));
  Integer P = pj;
  for (int j = 1; j < k; ++j) {
    ZPoly e = zsub(F, zmul(a, b));
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    MPoly em = to_mod(e, zp.p);
    auto [q, da] = zp.divmod(zp.mul(em, t), a0);
    MPoly db = zp.add(zp.mul(em, s), zp.mul(q, b0));
    ZPoly za = from_mod(da), zb = from_mod(db);
    for (size_t i = 0; i < za.size(); ++i) a[i] += pj * za[i];
    for (size_t i = 0; i < zb.size(); ++i) b[i] += pj * zb[i];
    pj *= P;
  }
  return {zmod(a, pj), zmod(b, pj)};
}

// Factors of a monic squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& G) {
  int n = static_cast<int>(G.size()) - 1;
  // Prime choice: the fewest modular factors among the first few good primes.
  std::vector<MPoly> best;
  u64 best_p = 0;
  int tried = 0;
  for (u64 p = 3; tried < 4 && p < (1u << 31); p += 2) {
    if (!is_prime(p)) continue;
    Zp zp{p};
    MPoly g = to_mod(G, p);
    if (static_cast<int>(g.size()) - 1 != n) continue;
    if (zp.gcd(g, zp.derivative(g)).size() != 1) continue;
    auto fs = zp.factor(g);
    ++tried;
    if (best_p == 0 || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.size() <= 1) return {G};
  Zp zp{best_p};

  // Coefficient bound 2^n ||G||_2 for any factor; need p^k > 2B.
  Integer norm2 = 0;
  for (const auto& c : G) norm2 += c * c;
  Integer B = sqrt(norm2) + 1;
  B <<= n;
  Integer M(static_cast<unsigned long>(best_p));
  int k = 1;
  while (M <= 2 * B) {
    M *= static_cast<unsigned long>(best_p);
    ++k;
  }

  std::vector<ZPoly> lifted;
  ZPoly cur = G;
  for (size_t i = 0; i + 1 < best.size(); ++i) {
    MPoly rest{1};
    for (size_t j = i + 1; j < best.size(); ++j) rest = zp.mul(rest, best[j]);
    auto [a, b] = hensel2(cur, best[i], rest, zp, k);
    lifted.push_back(std::move(a));
    cur = std::move(b);
  }
  lifted.push_back(cur);

  std::vector<ZPoly> out;
  std::vector<int> remaining(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) remaining[i] = static_cast<int>(i);
  ZPoly rest = G;
  for (size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<int> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      ZPoly H{Integer(1)};
      for (int i : idx) H = zsymmetric(zmul(H, lifted[remaining[i]]), M);
      bool ok = true;
      if (sgn(rest[0]) != 0 && sgn(H[0]) == 0) ok = false;
      if (ok && sgn(rest[0]) != 0 && !mpz_divisible_p(rest[0].get_mpz_t(), H[0].get_mpz_t())) ok = false;
      if (ok) {
        if (auto q = zdivide_monic(rest, H)) {
          out.push_back(H);
          rest = *q;
          std::vector<int> keep;
          for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
            if (j < s && idx[j] == static_cast<int>(i)) {
              ++j;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = keep;
          found = true;
          break;
        }
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == static_cast<int>(remaining.size() - s) + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) out.push_back(rest);
  return out;
}

// Squarefree rational polynomial -> monic irreducible factors.
std::vector<UniPoly> factor_squarefree_q(const UniPoly& f) {
  int n = f.degree();
  if (n <= 1) return {f.monic()};
  // Primitive integer multiple.
  Integer den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly g;
  for (const auto& c : f.coeffs()) g.push_back(Integer(c.rational() * den));
  Integer cont = 0;
  for (const auto& c : g) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
  if (g.back() < 0) cont = -cont;
  for (auto& c : g) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
  Integer l = g.back();
  // Monic transform G(y) = l^(n-1) g(y/l).
  ZPoly G(n + 1);
  Integer lp = 1;
  for (int k = n; k >= 0; --k) {
    G[k] = k == n ? Integer(1) : g[k] * lp;
    if (k < n) lp *= l;
  }
  std::vector<UniPoly> out;
  for (const auto& H : zassenhaus(G)) {
    // h(x) = H(l x), made monic.
    std::vector<Scalar> v;
    Integer pw = 1;
    for (const auto& c : H) {
      v.push_back(Scalar(Rational(c * pw)));
      pw *= l;
    }
    out.push_back(UniPoly(std::move(v)).monic());
  }
  return out;
}

bool all_rational(const UniPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

bool all_constant(const UniPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.is_function()) return false;
  return true;
}

bool squarefree(const UniPoly& p) { return poly_gcd(p, p.derivative()).degree() == 0; }

UniPoly conj_poly(const UniPoly& p) {
  std::vector<Scalar> v;
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return UniPoly(std::move(v));
}

// Trager's norm method over Q(i) for a squarefree monic polynomial.
std::vector<UniPoly> factor_squarefree_qi(const UniPoly& g) {
  if (g.degree() <= 1) return {g.monic()};
  const Scalar I = Scalar::i();
  for (int k = 0;; ++k) {
    int s = (k + 1) / 2 * (k % 2 ? 1 : -1);
    UniPoly shift({Scalar(s) * I, Scalar(1)});
    UniPoly gs = g.compose(shift);
    UniPoly N = gs * conj_poly(gs);
    if (!squarefree(N)) continue;
    UniPoly back({-(Scalar(s) * I), Scalar(1)});
    std::vector<UniPoly> out;
    for (const auto& Nj : factor_squarefree_q(N)) {
      UniPoly h = poly_gcd(gs, Nj);
      if (h.degree() > 0) out.push_back(h.compose(back).monic());
    }
    return out;
  }
}

std::vector<UniPoly> factor_squarefree_base(const UniPoly& g, bool with_i) {
  if (!with_i) {
    if (!all_rational(g)) throw Error(ErrorKind::FieldMismatch, "coefficient outside Q");
    return factor_squarefree_q(g);
  }
  if (all_rational(g)) {
    std::vector<UniPoly> out;
    for (const auto& f : factor_squarefree_q(g))
      for (auto& h : factor_squarefree_qi(f)) out.push_back(std::move(h));
    return out;
  }
  return factor_squarefree_qi(g);
}

// ---- rational function coefficients ----

TPoly to_tpoly_times(const Scalar& c, const TPoly& den) {
  RatFunc f = c.function();
  return exact_quotient(f.num * den, f.den);
}

// Monic linear and quadratic splitting over K(t).
std::vector<UniPoly> split_quadratic(const UniPoly& g, const FieldSpec& field) {
  Scalar b = g.coeff(1) / g.lead(), c = g.coeff(0) / g.lead();
  Scalar disc = b * b - Scalar(4) * c;
  auto s = scalar_sqrt(disc, field);
  if (!s) return {g.monic()};
  Scalar half = Scalar::fraction(1, 2);
  Scalar r1 = (-b + *s) * half, r2 = (-b - *s) * half;
  return {UniPoly({-r1, Scalar(1)}), UniPoly({-r2, Scalar(1)})};
}

std::vector<TPoly> monic_divisors(const TPoly& c, bool with_i) {
  // All monic divisors of c in K[t].
  UniPoly cu;
  {
    std::vector<Scalar> v;
    for (const auto& x : c.coeffs()) v.push_back(Scalar(x));
    cu = UniPoly(std::move(v));
  }
  std::vector<TPoly> divs{TPoly::constant(Gaussian(1))};
  if (cu.degree() < 1) return divs;
  auto parts = squarefree_parts(cu);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (const auto& f : factor_squarefree_base(parts[i], with_i)) {
      std::vector<Gaussian> fv;
      for (const auto& x : f.coeffs()) fv.push_back(x.gaussian());
      TPoly ft(std::move(fv));
      std::vector<TPoly> next;
      for (const auto& d : divs) {
        TPoly m = d;
        for (size_t e = 0; e <= i + 1; ++e) {
          next.push_back(m);
          m = m * ft;
        }
      }
      divs = std::move(next);
    }
  }
  return divs;
}

// A root of g in K(t) found by the rational root theorem over K[t].
std::optional<Scalar> find_root(const UniPoly& g, bool with_i) {
  int n = g.degree();
  TPoly den = TPoly::constant(Gaussian(1));
  for (const auto& c : g.coeffs()) {
    RatFunc f = c.function();
    den = exact_quotient(den * f.den, poly_gcd(den, f.den));
  }
  std::vector<TPoly> c;
  for (const auto& x : g.coeffs()) c.push_back(to_tpoly_times(x, den));
  if (c[0].is_zero()) return Scalar(0);
  for (const auto& u : monic_divisors(c[0], with_i)) {
    for (const auto& v : monic_divisors(c[n], with_i)) {
      if (poly_gcd(u, v).degree() > 0) continue;
      // sum_k c_k lambda^k u^k v^(n-k) = 0 coefficientwise in t.
      std::vector<TPoly> terms;
      std::vector<TPoly> up{TPoly::constant(Gaussian(1))}, vp{TPoly::constant(Gaussian(1))};
      for (int k = 1; k <= n; ++k) {
        up.push_back(up.back() * u);
        vp.push_back(vp.back() * v);
      }
      int maxdeg = 0;
      for (int k = 0; k <= n; ++k) {
        terms.push_back(c[k] * up[k] * vp[n - k]);
        maxdeg = std::max(maxdeg, terms.back().degree());
      }
      UniPoly G;
      for (int j = 0; j <= maxdeg; ++j) {
        std::vector<Scalar> v2;
        for (int k = 0; k <= n; ++k) v2.push_back(Scalar(terms[k].coeff(j)));
        UniPoly Pj(std::move(v2));
        if (Pj.is_zero()) continue;
        G = G.is_zero() ? Pj.monic() : poly_gcd(G, Pj);
        if (G.degree() < 1) break;
      }
      if (G.degree() < 1) continue;
      for (const auto& part : squarefree_parts(G)) {
        if (part.degree() < 1) continue;
        for (const auto& f : factor_squarefree_base(part, with_i)) {
          if (f.degree() != 1 || f.coeff(0).is_zero()) continue;
          Scalar lambda = -f.coeff(0);
          return lambda * Scalar::from_function(u, v);
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<UniPoly> factor_squarefree_t(UniPoly g, const FieldSpec& field) {
  if (all_constant(g)) return factor_squarefree_base(g, field.has_i());
  if (g.degree() <= 1) return {g.monic()};
  if (g.degree() == 2) return split_quadratic(g, field);
  std::vector<UniPoly> out;
  while (g.degree() >= 3) {
    auto r = find_root(g, field.has_i());
    if (!r) break;
    UniPoly lin({-*r, Scalar(1)});
    out.push_back(lin);
    g = exact_quotient(g, lin);
  }
  if (g.degree() >= 4)
    throw Error(ErrorKind::UnsupportedField,
                "cannot factor " + poly_str(g.monic()) + " over rational functions (no linear factor)");
  if (g.degree() == 3) {
    out.push_back(g.monic());
  } else if (g.degree() >= 1) {
    for (auto& h : factor_squarefree_t(g, field)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

std::vector<Factor> factor_irreducible(const UniPoly& p, const FieldSpec& field) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  if (!field.contains(poly_field(p)))
    throw Error(ErrorKind::FieldMismatch, "polynomial coefficients lie outside " + field.name());
  std::vector<Factor> out;
  auto parts = squarefree_parts(p);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    std::vector<UniPoly> fs;
    if (field.has_t())
      fs = factor_squarefree_t(parts[i], field);
    else
      fs = factor_squarefree_base(parts[i], field.has_i());
    for (auto& f : fs) out.push_back({f.monic(), static_cast<int>(i + 1)});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    std::string sa = poly_str(a.poly), sb = poly_str(b.poly);
    if (sa != sb) return sa < sb;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<Factor> factor_irreducible(const UniPoly& p) { return factor_irreducible(p, poly_field(p)); }

long totient(long n) {
  long r = n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

UniPoly cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, UniPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  UniPoly f = UniPoly::monomial(Scalar(1), n) - UniPoly::constant(Scalar(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) f = exact_quotient(f, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, f);
  return f;
}

std::optional<int> cyclotomic_index(const UniPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.is_function()) throw Error(ErrorKind::UnsupportedField, "cyclotomic test needs constant coefficients");
  if (!all_rational(p) || p.degree() < 1) return std::nullopt;
  UniPoly m = p.monic();
  long d = m.degree();
  for (long N = 1; N <= 2 * d * d + 2; ++N)
    if (totient(N) == d && cyclotomic(static_cast<int>(N)) == m) return static_cast<int>(N);
  return std::nullopt;
}

Scalar resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  int da = a.degree(), db = b.degree();
  if (db == 0) return b.lead().pow(da);
  if (da == 0) return a.lead().pow(db);
  UniPoly r = divmod(a, b).second;
  if (r.is_zero()) return Scalar(0);
  Scalar s = b.lead().pow(da - r.degree()) * resultant(b, r);
  return (static_cast<long>(da) * db) % 2 ? -s : s;
}

UniPoly ratio_resultant(const UniPoly& p0, const UniPoly& q0) {
  if (p0.degree() < 1 || q0.degree() < 1) throw Error(ErrorKind::InvalidArgument, "ratio resultant needs nonconstant inputs");
  if (p0.coeff(0).is_zero() || q0.coeff(0).is_zero())
    throw Error(ErrorKind::ZeroRoot, "polynomial has zero as a root");
  UniPoly p = p0.monic(), q = q0.monic();
  int m = p.degree(), n = q.degree(), D = m * n;
  // Values at x = 1..D+1, then Newton interpolation.
  std::vector<Scalar> xs, ys;
  for (int k = 1; k <= D + 1; ++k) {
    Scalar x(k);
    std::vector<Scalar> v;
    Scalar pw(1);
    for (const auto& c : q.coeffs()) {
      v.push_back(c * pw);
      pw = pw * x;
    }
    xs.push_back(x);
    ys.push_back(resultant(p, UniPoly(std::move(v))));
  }
  std::vector<Scalar> dd = ys;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly R = UniPoly::constant(dd[D]);
  for (int i = D - 1; i >= 0; --i) R = R * UniPoly({-xs[i], Scalar(1)}) + UniPoly::constant(dd[i]);
  return R.monic();
}

bool has_root_of_unity_ratio(const UniPoly& p, const UniPoly& p2, bool exclude_trivial) {
  UniPoly R = ratio_resultant(p, p2);
  if (exclude_trivial && p.monic() == p2.monic()) {
    UniPoly lin({Scalar(-1), Scalar(1)});
    for (int k = 0; k < p.degree(); ++k) R = exact_quotient(R, lin);
  }
  if (R.degree() < 1) return false;
  // Constant roots: common roots of the t-coefficient polynomials.
  UniPoly G;
  if (all_constant(R)) {
    G = R;
  } else {
    TPoly den = TPoly::constant(Gaussian(1));
    for (const auto& c : R.coeffs()) {
      RatFunc f = c.function();
      den = exact_quotient(den * f.den, poly_gcd(den, f.den));
    }
    std::vector<TPoly> c;
    int maxdeg = 0;
    for (const auto& x : R.coeffs()) {
      c.push_back(to_tpoly_times(x, den));
      maxdeg = std::max(maxdeg, c.back().degree());
    }
    for (int j = 0; j <= maxdeg; ++j) {
      std::vector<Scalar> v;
      for (const auto& ck : c) v.push_back(Scalar(ck.coeff(j)));
      UniPoly Sj(std::move(v));
      if (Sj.is_zero()) continue;
      G = G.is_zero() ? Sj.monic() : poly_gcd(G, Sj);
    }
  }
  long d = G.degree();
  if (d < 1) return false;
  for (long N = 1; N <= 2 * d * d + 2; ++N) {
    if (totient(N) > d) continue;
    if (poly_gcd(G, cyclotomic(static_cast<int>(N))).degree() > 0) return true;
  }
  return false;
}

}  // namespace asreg
