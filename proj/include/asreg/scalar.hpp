#pragma once

// Exact coefficient fields: Q, Q(i) and rational functions in one
// transcendental t over either of them.  Every Scalar lives in the
// universal field Q(i)(t) and is stored in its smallest representation,
// so equality is structural.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "asreg/poly.hpp"

namespace asreg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

struct FieldSpec {
  enum class Kind { Rationals, Gaussian, RationalFunctions };
  Kind kind = Kind::Rationals;
  bool gaussian_base = false;  // only meaningful for RationalFunctions
  std::string var = "t";

  static FieldSpec rationals() { return {}; }
  static FieldSpec gaussian() { return {Kind::Gaussian, true, "t"}; }
  static FieldSpec functions(bool over_gaussian = false, std::string v = "t") {
    return {Kind::RationalFunctions, over_gaussian, std::move(v)};
  }
  /// Accepts Q, Qi, Qt, Qit.
  static FieldSpec parse(std::string_view name);

  bool has_i() const { return kind == Kind::Gaussian || (kind == Kind::RationalFunctions && gaussian_base); }
  bool has_t() const { return kind == Kind::RationalFunctions; }
  std::string name() const;
  bool contains(const FieldSpec& other) const;
  FieldSpec join(const FieldSpec& other) const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.has_i() == b.has_i() && (!a.has_t() || a.var == b.var);
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

struct Gaussian {
  Rational re, im;

  Gaussian() = default;
  Gaussian(int v) : re(v) {}  // NOLINT
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  Gaussian operator-() const { return {-re, -im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    if (a.is_real() && b.is_real()) return {a.re * b.re, 0};
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b);
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline bool is_zero(const Gaussian& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

using TPoly = Poly<Gaussian>;

/// num/den with den monic and gcd(num, den) = 1.
struct RatFunc {
  TPoly num, den;
};

class Scalar {
 public:
  enum class Kind { Rational, Gaussian, Function };

  Scalar() : v_(Rational(0)) {}
  Scalar(int v) : v_(Rational(v)) {}  // NOLINT
  Scalar(const Rational& q) : v_(q) {}  // NOLINT
  Scalar(const Gaussian& g);  // NOLINT
  static Scalar fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return Scalar(r);
  }
  static Scalar from_function(TPoly num, TPoly den);
  static Scalar i() { return Scalar(Gaussian(0, 1)); }
  static Scalar t();

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_rational() const { return v_.index() == 0; }
  bool is_function() const { return v_.index() == 2; }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const { return std::get<0>(v_); }
  Gaussian gaussian() const;  // requires kind() != Function
  RatFunc function() const;   // any kind, as num/den
  FieldSpec minimal_field() const;
  bool belongs_to(const FieldSpec& f) const;

  Scalar inverse() const;
  Scalar pow(long e) const;
  Scalar conj() const;  // complex conjugation on coefficients

  /// Canonical text form; `var` names the transcendental.
  std::string str(const std::string& var = "t") const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  using FuncPtr = std::shared_ptr<const RatFunc>;
  std::variant<Rational, Gaussian, FuncPtr> v_;
};

inline bool is_zero(const Scalar& a) { return a.is_zero(); }

using UniPoly = Poly<Scalar>;

/// Text form of a polynomial in `x` (coefficients in `var`).
std::string poly_str(const UniPoly& p, const std::string& x = "x", const std::string& var = "t");
std::string tpoly_str(const TPoly& p, const std::string& var = "t");

/// Join of the minimal fields of all coefficients.
FieldSpec poly_field(const UniPoly& p);

/// Square root inside the field, if one exists.
std::optional<Rational> rational_sqrt(const Rational& a);
std::optional<Gaussian> gaussian_sqrt(const Gaussian& a);
std::optional<Scalar> scalar_sqrt(const Scalar& a, const FieldSpec& field);

}  // namespace asreg
