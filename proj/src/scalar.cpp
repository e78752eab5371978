#include "asreg/scalar.hpp"

#include <optional>

namespace asreg {

FieldSpec FieldSpec::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name == "Qi") return gaussian();
  if (name == "Qt") return functions(false);
  if (name == "Qit") return functions(true);
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + std::string(name) + "' (expected Q, Qi, Qt or Qit)");
}

std::string FieldSpec::name() const {
  switch (kind) {
    case Kind::Rationals: return "Q";
    case Kind::Gaussian: return "Qi";
    case Kind::RationalFunctions: return gaussian_base ? "Qit" : "Qt";
  }
  return "Q";
}

bool FieldSpec::contains(const FieldSpec& other) const {
  if (other.has_i() && !has_i()) return false;
  if (other.has_t() && !has_t()) return false;
  return true;
}

FieldSpec FieldSpec::join(const FieldSpec& other) const {
  bool i = has_i() || other.has_i();
  if (has_t() || other.has_t()) return functions(i, has_t() ? var : other.var);
  return i ? gaussian() : rationals();
}

Gaussian operator/(const Gaussian& a, const Gaussian& b) {
  if (is_zero(b)) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (b.is_real()) return {a.re / b.re, a.im / b.re};
  Rational n = b.norm();
  Gaussian p = a * b.conj();
  return {p.re / n, p.im / n};
}

Scalar::Scalar(const Gaussian& g) {
  if (g.is_real())
    v_ = g.re;
  else
    v_ = g;
}

Scalar Scalar::from_function(TPoly num, TPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return Scalar();
  if (den.degree() > 0) {
    TPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  Gaussian l = den.lead();
  if (l != Gaussian(1)) {
    Gaussian inv = Gaussian(1) / l;
    num = inv * num;
    den = inv * den;
  }
  if (num.degree() == 0 && den.degree() == 0) return Scalar(num.lead());
  Scalar s;
  s.v_ = std::make_shared<const RatFunc>(RatFunc{std::move(num), std::move(den)});
  return s;
}

Scalar Scalar::t() { return from_function(TPoly::x(), TPoly::constant(Gaussian(1))); }

bool Scalar::is_zero() const { return v_.index() == 0 && sgn(std::get<0>(v_)) == 0; }

bool Scalar::is_one() const { return v_.index() == 0 && std::get<0>(v_) == 1; }

Gaussian Scalar::gaussian() const {
  switch (v_.index()) {
    case 0: return Gaussian(std::get<0>(v_));
    case 1: return std::get<1>(v_);
  }
  throw Error(ErrorKind::FieldMismatch, "rational function used where a constant was required");
}

RatFunc Scalar::function() const {
  if (v_.index() == 2) return *std::get<2>(v_);
  return {TPoly::constant(gaussian()), TPoly::constant(Gaussian(1))};
}

FieldSpec Scalar::minimal_field() const {
  switch (v_.index()) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::gaussian();
  }
  const RatFunc& f = *std::get<2>(v_);
  bool gi = false;
  for (const auto& c : f.num.coeffs()) gi = gi || !c.is_real();
  for (const auto& c : f.den.coeffs()) gi = gi || !c.is_real();
  return FieldSpec::functions(gi);
}

bool Scalar::belongs_to(const FieldSpec& f) const { return f.contains(minimal_field()); }

Scalar Scalar::inverse() const {
  switch (v_.index()) {
    case 0:
      if (sgn(std::get<0>(v_)) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
      return Scalar(Rational(1) / std::get<0>(v_));
    case 1: return Scalar(Gaussian(1) / std::get<1>(v_));
  }
  const RatFunc& f = *std::get<2>(v_);
  return from_function(f.den, f.num);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

static TPoly conj_poly(const TPoly& p) {
  std::vector<Gaussian> v;
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return TPoly(std::move(v));
}

Scalar Scalar::conj() const {
  switch (v_.index()) {
    case 0: return *this;
    case 1: return Scalar(std::get<1>(v_).conj());
  }
  const RatFunc& f = *std::get<2>(v_);
  return from_function(conj_poly(f.num), conj_poly(f.den));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == 0 && b.v_.index() == 0) return Scalar(std::get<0>(a.v_) + std::get<0>(b.v_));
  if (a.v_.index() < 2 && b.v_.index() < 2) return Scalar(a.gaussian() + b.gaussian());
  RatFunc x = a.function(), y = b.function();
  if (x.den == y.den) return Scalar::from_function(x.num + y.num, x.den);
  return Scalar::from_function(x.num * y.den + y.num * x.den, x.den * y.den);
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(Rational(-std::get<0>(v_)));
    case 1: return Scalar(-std::get<1>(v_));
  }
  const RatFunc& f = *std::get<2>(v_);
  Scalar s;
  s.v_ = std::make_shared<const RatFunc>(RatFunc{-f.num, f.den});
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == 0 && b.v_.index() == 0) return Scalar(std::get<0>(a.v_) - std::get<0>(b.v_));
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == 0 && b.v_.index() == 0) return Scalar(std::get<0>(a.v_) * std::get<0>(b.v_));
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.v_.index() < 2 && b.v_.index() < 2) return Scalar(a.gaussian() * b.gaussian());
  RatFunc x = a.function(), y = b.function();
  return Scalar::from_function(x.num * y.num, x.den * y.den);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == 0 && b.v_.index() == 0) {
    if (sgn(std::get<0>(b.v_)) == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Scalar(std::get<0>(a.v_) / std::get<0>(b.v_));
  }
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
    case 1: return std::get<1>(a.v_) == std::get<1>(b.v_);
  }
  const RatFunc& x = *std::get<2>(a.v_);
  const RatFunc& y = *std::get<2>(b.v_);
  return x.num == y.num && x.den == y.den;
}

// ---- text ----

static std::string gaussian_str(const Gaussian& g) {
  if (g.is_real()) return g.re.get_str();
  Integer den;
  mpz_lcm(den.get_mpz_t(), g.re.get_den_mpz_t(), g.im.get_den_mpz_t());
  Rational A = g.re * den, B = g.im * den;
  std::string ipart;
  if (B == 1)
    ipart = "i";
  else if (B == -1)
    ipart = "-i";
  else
    ipart = B.get_str() + "i";
  std::string body;
  if (sgn(A) == 0) {
    body = ipart;
    return den == 1 ? body : body + "/" + den.get_str();
  }
  body = A.get_str() + (ipart[0] == '-' ? "" : "+") + ipart;
  return den == 1 ? body : "(" + body + ")/" + den.get_str();
}

// Coefficient text in front of a power of a variable; empty for 1, "-" for -1.
static std::string coeff_prefix(const std::string& c) {
  if (c == "1") return "";
  if (c == "-1") return "-";
  if (c.find_first_not_of("-0123456789") == std::string::npos) return c;  // integer: "3x"
  bool compound = c.find_first_of("+-", 1) != std::string::npos;
  return (compound ? "(" + c + ")" : c) + "*";
}

static std::string power(const std::string& x, int k) {
  return k == 1 ? x : x + "^" + std::to_string(k);
}

template <class C, class F>
static std::string sum_str(const std::vector<C>& coeffs, const std::string& x, F to_str) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (is_zero(coeffs[k])) continue;
    std::string c = to_str(coeffs[k]);
    std::string term = k == 0 ? c : coeff_prefix(c) + power(x, k);
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string tpoly_str(const TPoly& p, const std::string& var) {
  return sum_str(p.coeffs(), var, gaussian_str);
}

static int term_count(const TPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += !is_zero(c);
  return n;
}

std::string Scalar::str(const std::string& var) const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: return gaussian_str(std::get<1>(v_));
  }
  const RatFunc& f = *std::get<2>(v_);
  std::string num = tpoly_str(f.num, var);
  if (f.den.degree() == 0) return num;
  if (term_count(f.num) > 1) num = "(" + num + ")";
  std::string den = tpoly_str(f.den, var);
  if (term_count(f.den) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string poly_str(const UniPoly& p, const std::string& x, const std::string& var) {
  return sum_str(p.coeffs(), x, [&](const Scalar& s) { return s.str(var); });
}

FieldSpec poly_field(const UniPoly& p) {
  FieldSpec f;
  for (const auto& c : p.coeffs()) f = f.join(c.minimal_field());
  return f;
}

// ---- square roots ----

std::optional<Rational> rational_sqrt(const Rational& a) {
  if (sgn(a) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(Integer(a.get_num())), d = sqrt(Integer(a.get_den()));
  return Rational(n, d);
}

std::optional<Gaussian> gaussian_sqrt(const Gaussian& a) {
  if (a.is_real()) {
    if (sgn(a.re) >= 0) {
      if (auto r = rational_sqrt(a.re)) return Gaussian(*r);
      return std::nullopt;
    }
    if (auto r = rational_sqrt(-a.re)) return Gaussian(0, *r);
    return std::nullopt;
  }
  auto n = rational_sqrt(a.norm());
  if (!n) return std::nullopt;
  auto x = rational_sqrt((*n + a.re) / 2);
  auto y = rational_sqrt((*n - a.re) / 2);
  if (!x || !y) return std::nullopt;
  Gaussian r(*x, sgn(a.im) < 0 ? Rational(-*y) : *y);
  if (r * r != a) return std::nullopt;
  return r;
}

static std::optional<Gaussian> base_sqrt(const Gaussian& a, bool with_i) {
  if (!with_i) {
    if (!a.is_real()) return std::nullopt;
    if (auto r = rational_sqrt(a.re)) return Gaussian(*r);
    return std::nullopt;
  }
  return gaussian_sqrt(a);
}

// Square root of a polynomial in t, if it is a perfect square over the base.
static std::optional<TPoly> tpoly_sqrt(const TPoly& p, bool with_i) {
  if (p.is_zero()) return TPoly();
  if (p.degree() % 2) return std::nullopt;
  auto lc = base_sqrt(p.lead(), with_i);
  if (!lc) return std::nullopt;
  TPoly m = p.monic();
  int n = m.degree(), h = n / 2;
  std::vector<Gaussian> r(h + 1, Gaussian(0));
  r[h] = Gaussian(1);
  // Match coefficients of m from the top: coefficient of t^(h+k) in r^2.
  for (int k = h - 1; k >= 0; --k) {
    Gaussian acc = m.coeff(h + k);
    for (int i = k + 1; i < h; ++i) acc = acc - r[i] * r[h + k - i];
    r[k] = acc / Gaussian(2);
  }
  TPoly root(std::move(r));
  if (root * root != m) return std::nullopt;
  return *lc * root;
}

std::optional<Scalar> scalar_sqrt(const Scalar& a, const FieldSpec& field) {
  if (a.is_zero()) return Scalar();
  if (!a.is_function()) {
    if (auto g = base_sqrt(a.gaussian(), field.has_i())) return Scalar(*g);
    return std::nullopt;
  }
  if (!field.has_t()) return std::nullopt;
  RatFunc f = a.function();
  auto s = tpoly_sqrt(f.num * f.den, field.has_i());
  if (!s) return std::nullopt;
  return Scalar::from_function(*s, f.den);
}

}  // namespace asreg
