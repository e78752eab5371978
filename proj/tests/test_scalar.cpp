#include <random>

#include "asreg/factor.hpp"
#include "doctest.h"

using namespace asreg;

namespace doctest {
template <>
struct StringMaker<Scalar> {
  static String convert(const Scalar& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<UniPoly> {
  static String convert(const UniPoly& p) { return poly_str(p).c_str(); }
};
}  // namespace doctest

namespace {

Scalar q(long a, long b = 1) { return Scalar::fraction(a, b); }
Scalar g(long a, long b) { return Scalar(Gaussian(Rational(a), Rational(b))); }
const Scalar T = Scalar::t();

UniPoly P(std::vector<Scalar> c) { return UniPoly(std::move(c)); }
UniPoly lin(const Scalar& root) { return P({-root, Scalar(1)}); }

UniPoly product(const std::vector<Factor>& fs) {
  UniPoly r = UniPoly::constant(Scalar(1));
  for (const auto& f : fs) r = r * f.poly.pow(f.multiplicity);
  return r;
}

Scalar random_scalar(std::mt19937& rng, int kind) {
  std::uniform_int_distribution<int> d(-9, 9), pos(1, 9);
  Scalar r = q(d(rng), pos(rng));
  if (kind >= 1) r = r + q(d(rng), pos(rng)) * Scalar::i();
  if (kind >= 2) {
    UniPoly num = P({q(d(rng)), q(d(rng)), q(d(rng))});
    std::vector<Gaussian> nv, dv;
    for (int k = 0; k < 3; ++k) nv.push_back(Gaussian(d(rng), d(rng)));
    dv = {Gaussian(d(rng)), Gaussian(pos(rng)), Gaussian(1)};
    r = r + Scalar::from_function(TPoly(nv), TPoly(dv));
  }
  return r;
}

// Phi_N by the Moebius product of (x^d - 1)^mu(N/d).
int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

UniPoly mobius_cyclotomic(int N) {
  UniPoly num = UniPoly::constant(Scalar(1)), den = num;
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    UniPoly f = UniPoly::monomial(Scalar(1), d) - UniPoly::constant(Scalar(1));
    int mu = mobius(N / d);
    if (mu == 1) num = num * f;
    if (mu == -1) den = den * f;
  }
  return exact_quotient(num, den);
}

}  // namespace

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int kind = 0; kind < 3; ++kind) {
    for (int it = 0; it < 40; ++it) {
      Scalar a = random_scalar(rng, kind), b = random_scalar(rng, kind), c = random_scalar(rng, kind);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Scalar(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
  }
}

TEST_CASE("demotion keeps equality structural") {
  CHECK((Scalar::i() * Scalar::i()).is_rational());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK((T / T).is_one());
  CHECK((T + Scalar(1) - T).is_rational());
  CHECK(T.minimal_field() == FieldSpec::functions());
  CHECK((T * Scalar::i()).minimal_field() == FieldSpec::functions(true));
}

TEST_CASE("serialization") {
  CHECK(q(3, 4).str() == "3/4");
  CHECK(q(-5).str() == "-5");
  CHECK(g(0, 1).str() == "i");
  CHECK(g(0, -1).str() == "-i");
  CHECK((g(1, 2) / q(5)).str() == "(1+2i)/5");
  CHECK((g(0, 3) / q(5)).str() == "3i/5");
  CHECK(g(1, -1).str() == "1-i");
  Scalar f = (T * T + Scalar(1)) / (T - Scalar(1));
  CHECK(f.str() == "(t^2+1)/(t-1)");
  CHECK(T.inverse().str() == "1/t");
  CHECK((q(3, 4) * T * T).str("q") == "3/4*q^2");
  CHECK((g(1, 2) * T * T - T).str() == "(1+2i)*t^2-t");
  CHECK(poly_str(P({q(-1), q(0), q(1)})) == "x^2-1");
  CHECK(poly_str(P({T, T + Scalar(1), Scalar(1)})) == "x^2+(t+1)*x+t");
}

TEST_CASE("square roots") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(!rational_sqrt(Rational(2)));
  auto s = gaussian_sqrt(Gaussian(3, 4));
  REQUIRE(s);
  CHECK(*s * *s == Gaussian(3, 4));
  auto r = scalar_sqrt((T + Scalar(1)) * (T + Scalar(1)) / (T * T), FieldSpec::functions());
  REQUIRE(r);
  CHECK(*r * *r == (T + Scalar(1)) * (T + Scalar(1)) / (T * T));
  CHECK(!scalar_sqrt(T, FieldSpec::functions()));
  CHECK(!scalar_sqrt(Scalar(-1), FieldSpec::rationals()));
  CHECK(scalar_sqrt(Scalar(-1), FieldSpec::gaussian()));
}

TEST_CASE("factor x^2-1 over Q") {
  auto fs = factor_irreducible(P({q(-1), q(0), q(1)}), FieldSpec::rationals());
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].poly == lin(q(-1)));
  CHECK(fs[1].poly == lin(q(1)));
  CHECK(fs[0].multiplicity == 1);
}

TEST_CASE("factor x^2+1 over Q(i)") {
  UniPoly p = P({q(1), q(0), q(1)});
  CHECK(factor_irreducible(p, FieldSpec::rationals()).size() == 1);
  auto fs = factor_irreducible(p, FieldSpec::gaussian());
  REQUIRE(fs.size() == 2);
  CHECK(product(fs) == p);
  bool has_i = false, has_mi = false;
  for (const auto& f : fs) {
    has_i = has_i || f.poly == lin(Scalar::i());
    has_mi = has_mi || f.poly == lin(-Scalar::i());
  }
  CHECK(has_i);
  CHECK(has_mi);
}

TEST_CASE("factor x^2 + (t+1/t)x + 1 over Q(t)") {
  UniPoly p = P({Scalar(1), T + T.inverse(), Scalar(1)});
  auto fs = factor_irreducible(p, FieldSpec::functions());
  REQUIRE(fs.size() == 2);
  CHECK(product(fs) == p);
  bool a = false, b = false;
  for (const auto& f : fs) {
    a = a || f.poly == lin(-T);
    b = b || f.poly == lin(-T.inverse());
  }
  CHECK(a);
  CHECK(b);
}

TEST_CASE("factorization re-multiplies over Q") {
  std::vector<UniPoly> polys = {
      P({q(-1), q(0), q(0), q(0), q(1)}),
      P({q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0), q(1)}),
      P({q(-2), q(0), q(1)}) * P({q(-3), q(0), q(1)}),
      P({q(1), q(1), q(1)}) * P({q(1), q(1), q(1)}) * P({q(-1, 2), q(1)}),
      P({q(3), q(-7, 3), q(0), q(5), q(2)}) * P({q(1), q(0), q(1)}),
      mobius_cyclotomic(12) * mobius_cyclotomic(15) * lin(q(2)).pow(3),
      // Swinnerton-Dyer style x^4-10x^2+1 is irreducible but splits mod every prime.
      P({q(1), q(0), q(-10), q(0), q(1)}),
  };
  for (const auto& p : polys) {
    auto fs = factor_irreducible(p, FieldSpec::rationals());
    CHECK(product(fs) == p.monic());
    for (const auto& f : fs) CHECK(f.poly.lead() == Scalar(1));
  }
  CHECK(factor_irreducible(polys[6], FieldSpec::rationals()).size() == 1);
  CHECK(factor_irreducible(polys[0], FieldSpec::rationals()).size() == 3);
  CHECK(factor_irreducible(polys[1], FieldSpec::rationals()).size() == 1);
  auto f3 = factor_irreducible(polys[3], FieldSpec::rationals());
  REQUIRE(f3.size() == 2);
  CHECK(f3[1].multiplicity == 2);
}

TEST_CASE("factorization over Q(i) and Q(t) re-multiplies") {
  UniPoly p = P({q(1), q(0), q(0), q(0), q(1)});
  auto fs = factor_irreducible(p, FieldSpec::gaussian());
  CHECK(fs.size() == 2);
  CHECK(product(fs) == p);
  UniPoly p2 = lin(g(1, 2)) * lin(g(0, 1)) * P({q(2), q(0), q(1)});
  auto f2 = factor_irreducible(p2, FieldSpec::gaussian());
  CHECK(f2.size() == 3);
  CHECK(product(f2) == p2);
  UniPoly p3 = lin(-T) * lin(T.inverse()) * lin(q(2) * T * T) * lin(q(3));
  auto f3 = factor_irreducible(p3, FieldSpec::functions());
  CHECK(f3.size() == 4);
  CHECK(product(f3) == p3);
  UniPoly p4 = lin(T) * P({T, Scalar(0), Scalar(1)});
  auto f4 = factor_irreducible(p4, FieldSpec::functions());
  CHECK(f4.size() == 2);
  CHECK(product(f4) == p4);
  CHECK_THROWS_AS(factor_irreducible(P({T, Scalar(0), Scalar(0), Scalar(0), Scalar(1)}) *
                                         P({T + Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(1)}),
                                     FieldSpec::functions()),
                  Error);
}

TEST_CASE("cyclotomic index") {
  CHECK(cyclotomic_index(lin(q(1))) == 1);
  CHECK(cyclotomic_index(P({q(1), q(1), q(1)})) == 3);
  CHECK(!cyclotomic_index(P({q(1), q(-3), q(1)})));
  for (int N = 1; N <= 30; ++N) {
    UniPoly phi = mobius_cyclotomic(N);
    CHECK(cyclotomic(N) == phi);
    CHECK(cyclotomic_index(phi) == N);
  }
  CHECK_THROWS_AS(cyclotomic_index(lin(T)), Error);
}

TEST_CASE("ratio resultant") {
  CHECK(ratio_resultant(lin(q(2)), lin(q(6))) == lin(q(3)));
  CHECK(ratio_resultant(lin(q(5)), lin(q(5))) == lin(q(1)));
  CHECK(ratio_resultant(lin(-T), lin(-T.inverse())) == lin(T.pow(-2)));
  // Roots oracle: product of (x - b/a).
  std::vector<Scalar> ra = {q(2), q(-3)}, rb = {q(5), q(7, 2), q(-1)};
  UniPoly pa = UniPoly::constant(Scalar(1)), pb = pa, expect = pa;
  for (const auto& a : ra) pa = pa * lin(a);
  for (const auto& b : rb) pb = pb * lin(b);
  for (const auto& a : ra)
    for (const auto& b : rb) expect = expect * lin(b / a);
  UniPoly R = ratio_resultant(pa, pb);
  CHECK(R == expect);
  CHECK(R.degree() == 6);
  CHECK_THROWS_AS(ratio_resultant(P({q(0), q(1)}), lin(q(1))), Error);
}

TEST_CASE("root of unity ratios") {
  CHECK(has_root_of_unity_ratio(lin(q(-1)), lin(q(1)), false));
  CHECK(!has_root_of_unity_ratio(lin(q(2)), lin(q(3)), false));
  UniPoly w = P({q(1), q(1), q(1)});
  CHECK(has_root_of_unity_ratio(w, w, true));
  UniPoly z = P({q(-2), q(0), q(1)});
  CHECK(!has_root_of_unity_ratio(lin(q(2)), lin(q(2)), true));
  CHECK(has_root_of_unity_ratio(z, z, true));  // sqrt2 / -sqrt2 = -1
  for (const auto& p : {lin(q(2)), w, z, P({q(1), q(-3), q(1)})}) CHECK(has_root_of_unity_ratio(p, p, false));
  // -t and -1/t: ratio t^2 is not constant.
  CHECK(!has_root_of_unity_ratio(lin(-T), lin(-T.inverse()), false));
  CHECK(has_root_of_unity_ratio(lin(-T), lin(T), false));
  CHECK(has_root_of_unity_ratio(lin(Scalar::i()), lin(-Scalar::i()), false));
}
