#include <random>

#include "asreg/canonical.hpp"
#include "doctest.h"

using namespace asreg;

namespace {

Scalar q(long a, long b = 1) { return Scalar::fraction(a, b); }
const Scalar T = Scalar::t();

Matrix random_invertible(std::mt19937& rng, int n, bool gaussian = false) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = gaussian ? q(d(rng)) + q(d(rng)) * Scalar::i() : q(d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

CanonicalDecomposition decomp(std::vector<Summand> s) {
  CanonicalDecomposition d{std::move(s), 0};
  d.normalize();
  return d;
}

Summand dq(int r, const Scalar& s) { return Summand::double_quantum(r, AlgebraicScalar::of(s)); }

// Random decomposition of total size n with q from a fixed pool.
CanonicalDecomposition random_decomposition(std::mt19937& rng, int n) {
  const std::vector<Scalar> pool = {q(2), q(3), q(5), q(-2), q(1, 2)};
  std::vector<Summand> s;
  int left = n;
  while (left > 0) {
    std::uniform_int_distribution<int> kind(0, 2);
    int k = kind(rng);
    if (k < 2 || left < 2) {
      std::uniform_int_distribution<int> sz(1, std::min(left, 3));
      int m = sz(rng);
      s.push_back(Summand::jordan(m));
      left -= m;
    } else {
      std::uniform_int_distribution<int> sz(1, std::min(left / 2, 2));
      std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
      int r = sz(rng);
      s.push_back(dq(r, pool[pick(rng)]));
      left -= 2 * r;
    }
  }
  return decomp(std::move(s));
}

}  // namespace

TEST_CASE("canonical matrices") {
  CHECK(canonical_matrix(decomp({Summand::jordan(1), Summand::jordan(1)})) == Matrix::identity(2));
  CHECK(canonical_matrix(decomp({dq(1, T)})) == Matrix::of({{q(0), q(1)}, {T.inverse(), q(0)}}));
  CHECK(double_quantum_block(1, T) == Matrix::of({{q(0), q(1)}, {T, q(0)}}));
  CHECK(jordan_block(3) == Matrix::of({{q(0), q(0), q(1)}, {q(0), q(-1), q(-1)}, {q(1), q(1), q(0)}}));
  CHECK(jordan_block(2) == Matrix::of({{q(0), q(-1)}, {q(1), q(1)}}));
  CHECK(jordan_block(1) == Matrix::identity(1));
  CHECK(double_quantum_block(2, q(3)) == Matrix::of({{q(0), q(0), q(1), q(0)},
                                                     {q(0), q(0), q(0), q(1)},
                                                     {q(3), q(1), q(0), q(0)},
                                                     {q(0), q(3), q(0), q(0)}}));
  CanonicalDecomposition irr{{Summand::double_quantum(1, AlgebraicScalar::root_of(UniPoly({q(1), q(3), q(1)})))}, 2};
  CHECK_THROWS_AS(canonical_matrix(irr), Error);
  CHECK_THROWS_AS(canonical_matrix(decomp({dq(1, q(1))})), Error);
}

TEST_CASE("canonical decomposition examples") {
  CHECK(canonical_decomposition(Matrix::identity(2)) == decomp({Summand::jordan(1), Summand::jordan(1)}));
  CHECK(canonical_decomposition(double_quantum_block(1, T)) == decomp({dq(1, T)}));
  CHECK(canonical_decomposition(double_quantum_block(1, q(2))).summands[0].q.str() == "1/2");
  std::mt19937 rng(11);
  Matrix C = direct_sum({jordan_block(1), double_quantum_block(1, q(2))});
  for (int it = 0; it < 5; ++it) {
    Matrix P = random_invertible(rng, 3);
    CHECK(canonical_decomposition(congruence_transform(C, P)) == decomp({Summand::jordan(1), dq(1, q(2))}));
  }
  CHECK_THROWS_AS(canonical_decomposition(Matrix::of({{q(1), q(1)}, {q(1), q(1)}})), Error);
}

TEST_CASE("irrational q is kept by minimal polynomial") {
  // D4-shaped form with B of characteristic polynomial x^2+3x+1, so q is a root of it.
  Matrix B = Matrix::of({{q(0), q(-1)}, {q(1), q(-3)}});  // charpoly x^2+3x+1
  Matrix E(4, 4);
  for (int i = 0; i < 2; ++i) {
    E(i, 2 + i) = q(1);
    for (int j = 0; j < 2; ++j) E(2 + i, j) = B(i, j);
  }
  auto d = canonical_decomposition(E);
  REQUIRE(d.summands.size() == 2);
  for (const auto& s : d.summands) {
    CHECK(s.type == Summand::Type::DoubleQuantum);
    CHECK(!s.q.is_exact());
    CHECK(s.q.minpoly == UniPoly({q(1), q(3), q(1)}));
  }
}

TEST_CASE("round trip of canonical matrices") {
  std::mt19937 rng(12);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + it % 8;
    auto d = random_decomposition(rng, n);
    CHECK(canonical_decomposition(canonical_matrix(d)) == d);
  }
}

TEST_CASE("congruence invariance") {
  std::mt19937 rng(13);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + it % 6;
    auto d = random_decomposition(rng, n);
    Matrix C = canonical_matrix(d);
    Matrix P = random_invertible(rng, n);
    Matrix E = congruence_transform(C, P);
    CHECK(canonical_decomposition(E) == d);
    CHECK(are_congruent(E, C));
  }
}

TEST_CASE("congruence over Q(i) and Q(t)") {
  std::mt19937 rng(14);
  Matrix C = direct_sum({jordan_block(2), double_quantum_block(1, Scalar::i())});
  Matrix P = random_invertible(rng, 4, true);
  CHECK(are_congruent(C, congruence_transform(C, P)));
  Matrix Ct = direct_sum({jordan_block(1), double_quantum_block(1, T)});
  Matrix Pt = random_invertible(rng, 3);
  Pt(0, 1) = T;
  CHECK(are_congruent(Ct, congruence_transform(Ct, Pt)));
  CHECK(are_congruent(double_quantum_block(1, q(2)), double_quantum_block(1, q(1, 2))));
  CHECK(!are_congruent(double_quantum_block(1, q(2)), double_quantum_block(1, q(3))));
  CHECK(are_congruent(Matrix::identity(2), Matrix::of({{q(0), q(1)}, {q(1), q(0)}})));
}

TEST_CASE("symmetric and skew-symmetric Nakayama identities") {
  std::mt19937 rng(15);
  for (int it = 0; it < 20; ++it) {
    int n = 1 + it % 5;
    Matrix A = random_invertible(rng, n);
    Matrix S = A + A.transpose();
    if (!determinant(S).is_zero()) CHECK(nakayama_matrix(S) == -Matrix::identity(n));
    Matrix K = A - A.transpose();
    if (n % 2 == 0 && !determinant(K).is_zero()) CHECK(nakayama_matrix(K).is_identity());
  }
  CHECK(nakayama_matrix(direct_sum({double_quantum_block(1, q(-1)), double_quantum_block(1, q(-1))})).is_identity());
}

TEST_CASE("Jordan blocks have a single Nakayama eigenvalue (-1)^n") {
  for (int n = 1; n <= 6; ++n) {
    auto s = segre_data(nakayama_matrix(jordan_block(n)));
    REQUIRE(s.size() == 1);
    CHECK(s[0].factor == UniPoly({q(n % 2 ? 1 : -1), q(1)}));
    CHECK(s[0].sizes == std::vector<int>{n});
  }
}
