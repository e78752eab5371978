#pragma once

// Dense univariate polynomials over an exact field K.  K must be
// constructible from int, provide + - * / and a free is_zero(const K&).

#include <algorithm>
#include <utility>
#include <vector>

#include "asreg/errors.hpp"

namespace asreg {

template <class K>
bool coeff_is_zero(const K& a) {
  return is_zero(a);
}

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
  static Poly monomial(const K& a, int k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = a;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& lead() const { return c_.back(); }
  K coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : K(0);
  }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_constant() const { return c_.size() <= 1; }

  K eval(const K& x) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly operator-() const {
    std::vector<K> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (asreg_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const K& s, const Poly& p) {
    if (asreg_is_zero(s)) return Poly();
    std::vector<K> v(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) v[i] = s * p.c_[i];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    K inv = K(1) / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      K f = r[k + b.degree()] * inv;
      q[k] = f;
      if (asreg_is_zero(f)) continue;
      for (int j = 0; j <= b.degree(); ++j) r[k + j] = r[k + j] - f * b.c_[j];
    }
    r.resize(b.c_.size() - 1);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return (K(1) / lead()) * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = K(static_cast<int>(i)) * c_[i];
    return Poly(std::move(v));
  }

  /// p(-x)
  Poly negate_var() const {
    std::vector<K> v = c_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
  }

  /// x^deg p(1/x), unnormalized.
  Poly reversed() const {
    std::vector<K> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  /// Composition p(q).
  Poly compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(K(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  static bool asreg_is_zero(const K& a) { return coeff_is_zero(a); }
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// a / b, which must divide exactly.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

/// Yun's squarefree decomposition of a nonzero polynomial: returns
/// monic s_1, s_2, ... with p = lc * prod s_i^i (characteristic zero).
template <class K>
std::vector<Poly<K>> squarefree_parts(const Poly<K>& p) {
  std::vector<Poly<K>> out;
  if (p.degree() < 1) return out;
  Poly<K> f = p.monic();
  Poly<K> df = f.derivative();
  Poly<K> a = poly_gcd(f, df);
  Poly<K> b = exact_quotient(f, a);
  Poly<K> c = exact_quotient(df, a);
  Poly<K> d = c - b.derivative();
  while (b.degree() > 0) {
    Poly<K> s = poly_gcd(b, d);
    out.push_back(s);
    b = exact_quotient(b, s);
    c = exact_quotient(d, s);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace asreg
