#include <random>

#include "asreg/groebner.hpp"
#include "asreg/matrix.hpp"
#include "asreg/parse.hpp"
#include "doctest.h"

using namespace asreg;

namespace {

Scalar q(long a, long b = 1) { return Scalar::fraction(a, b); }

NcPoly P(const AlphabetPtr& a, const std::string& s) { return parse_ncpoly(s, a); }

std::vector<Word> all_words(int letters, int len) {
  std::vector<Word> out{Word()};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int x = 0; x < letters; ++x) next.push_back(w + letter(x));
    out = std::move(next);
  }
  return out;
}

// dim of (F/I)_k from the rank of {u r v} spanning I_k; no rewriting involved.
long quotient_dim_oracle(const std::vector<NcPoly>& rels, int letters, int k) {
  auto words = all_words(letters, k);
  std::map<Word, int> col;
  for (size_t i = 0; i < words.size(); ++i) col[words[i]] = static_cast<int>(i);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : rels) {
    int e = k - r.degree();
    if (e < 0) continue;
    for (int left = 0; left <= e; ++left)
      for (const auto& u : all_words(letters, left))
        for (const auto& v : all_words(letters, e - left)) {
          std::vector<Scalar> row(words.size(), Scalar(0));
          for (const auto& [w, c] : r.terms()) row[col[u + w + v]] = c;
          rows.push_back(row);
        }
  }
  if (rows.empty()) return static_cast<long>(words.size());
  Matrix m = Matrix::of(rows);
  return static_cast<long>(words.size()) - rank(m);
}

// Words of length k containing no leading word as a subword.
long brute_irreducible(const GBasis& G, int letters, int k) {
  long n = 0;
  for (const auto& w : all_words(letters, k)) {
    bool red = false;
    for (const auto& r : G.rules())
      if (w.find(r.lead_word()) != Word::npos) red = true;
    if (!red) ++n;
  }
  return n;
}

NcPoly random_poly(std::mt19937& rng, const AlphabetPtr& a, int maxdeg, int terms) {
  std::uniform_int_distribution<int> c(-3, 3), len(0, maxdeg), let(0, a->size() - 1);
  NcPoly p(a);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w += letter(let(rng));
    p.add_term(w, q(c(rng), 1 + (t % 2)));
  }
  return p;
}

}  // namespace

TEST_CASE("products") {
  auto A = make_alphabet({"x", "y"});
  CHECK(P(A, "x") * P(A, "y") == P(A, "x y"));
  CHECK((P(A, "x + y") * P(A, "x - y")) == P(A, "x x - x y + y x - y y"));
  CHECK_THROWS_AS(P(A, "x") * P(make_alphabet({"u"}), "u"), Error);
  auto V = make_alphabet({"v1", "v2"}), H = make_alphabet({"a", "b"});
  TensorPoly l = TensorPoly::pure({P(V, "v1"), P(H, "a")});
  TensorPoly r = TensorPoly::pure({P(V, "v2"), P(H, "b")});
  CHECK(l * r == TensorPoly::pure({P(V, "v1 v2"), P(H, "a b")}));
}

TEST_CASE("morphisms") {
  auto A = make_alphabet({"x", "y"});
  NcPoly p = P(A, "2 x y x - 1/3 y + 5");
  CHECK(GenMorphism::identity(A).apply_plain(p) == p);

  // coaction v_i -> sum_s v_s (x) a_si on the quantum plane, n = 2
  auto V = make_alphabet({"v1", "v2"});
  auto H = make_alphabet({"a11", "a12", "a21", "a22"});
  GenMorphism rho{V, {V, H}, {}, false};
  for (int i = 0; i < 2; ++i) {
    TensorPoly img({V, H});
    for (int s = 0; s < 2; ++s)
      img = img + TensorPoly::pure({NcPoly::gen(V, s), NcPoly::gen(H, "a" + std::to_string(s + 1) + std::to_string(i + 1))});
    rho.images.push_back(img);
  }
  TensorPoly out = rho.apply(P(V, "v1 v2"));
  CHECK(out.terms().size() == 4);
  TensorPoly expect({V, H});
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      expect = expect + TensorPoly::pure({NcPoly::gen(V, s) * NcPoly::gen(V, t),
                                          P(H, "a" + std::to_string(s + 1) + "1 a" + std::to_string(t + 1) + "2")});
  CHECK(out == expect);

  // anti-homomorphism reverses words
  auto B = make_alphabet({"a", "b", "d2", "b2"});
  GenMorphism S{B, {B}, {}, true};
  S.images = {TensorPoly::from(P(B, "d2")), TensorPoly::from(P(B, "b2")), TensorPoly::from(P(B, "a")),
              TensorPoly::from(P(B, "b"))};
  CHECK(S.apply_plain(P(B, "a b")) == P(B, "b2 d2"));

  // factorwise application and multiplication
  TensorPoly x = TensorPoly::pure({P(A, "x"), P(A, "y + 1")});
  GenMorphism sw{A, {A}, {TensorPoly::from(P(A, "y")), TensorPoly::from(P(A, "x"))}, false};
  CHECK(apply_factorwise({sw, GenMorphism::identity(A)}, x) == TensorPoly::pure({P(A, "y"), P(A, "y + 1")}));
  CHECK(multiply_out(x) == P(A, "x y + x"));
}

TEST_CASE("polynomial text round trip") {
  auto A = make_alphabet({"x", "y", "D", "Di"});
  std::mt19937 rng(21);
  for (int it = 0; it < 50; ++it) {
    NcPoly p = random_poly(rng, A, 4, 5);
    if (it % 3 == 0) p = Scalar::i() * p;
    if (it % 5 == 0) p = (Scalar::t() + q(1)) * p;
    CHECK(parse_ncpoly(p.str(), A) == p);
  }
  CHECK(P(A, "x y - y x").str() == "-y x + x y");
  CHECK(P(A, "-x").str() == "-x");
  CHECK(P(A, "(1+i) * x y + 3/4 * D").str() == "(1+i) * x y + 3/4 * D");
  CHECK(P(A, "2 x^2 y").str() == "2 * x x y");
  CHECK_THROWS_AS(P(A, "x z"), ParseError);
  try {
    P(A, "x +\n  y ) ");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("scalar and matrix parsing") {
  CHECK(parse_scalar("3/4") == q(3, 4));
  CHECK(parse_scalar("(1+2i)/5") == (q(1) + q(2) * Scalar::i()) * q(1, 5));
  CHECK(parse_scalar("(t^2+1)/(t-1)", FieldSpec::functions()) ==
        (Scalar::t() * Scalar::t() + q(1)) * (Scalar::t() - q(1)).inverse());
  CHECK_THROWS_AS(parse_scalar("i", FieldSpec::rationals()), ParseError);
  CHECK_THROWS_AS(parse_scalar("q", FieldSpec::gaussian()), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  Matrix m = parse_matrix("[[0,1],[q,0]]", FieldSpec::functions());
  CHECK(m == Matrix::of({{q(0), q(1)}, {Scalar::t(), q(0)}}));
  CHECK(parse_matrix("[[1,0],[0,1]]") == Matrix::identity(2));
  CHECK(parse_matrix("{\"field\": \"Q\", \"matrix\": [[0, \"-1\"], [1, 1]]}") == Matrix::of({{q(0), q(-1)}, {q(1), q(1)}}));
  try {
    parse_matrix("[[1,0],\n [0,1x]]");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_matrix("[[1,0],[0]]"), Error);
  std::vector<Matrix> corpus = {Matrix::of({{q(1, 2), Scalar::i()}, {q(-3), q(0)}}),
                                Matrix::of({{Scalar::t().inverse(), Scalar::t() + q(1)}, {q(2), q(0)}})};
  for (const auto& c : corpus) CHECK(parse_matrix(matrix_str(c)) == c);
}

TEST_CASE("groebner examples") {
  auto V = make_alphabet({"v1", "v2"});
  // quantum plane v1 v2 + q v2 v1
  NcPoly r = P(V, "v1 v2 + q v2 v1");
  GBasis G = groebner_to_degree({r}, 6);
  REQUIRE(G.rules().size() == 1);
  CHECK(G.rules()[0] == P(V, "v2 v1 + 1/q v1 v2"));
  CHECK(G.complete());
  CHECK(hilbert_counts(G, 6) == std::vector<long>{1, 2, 3, 4, 5, 6, 7});

  auto X = make_alphabet({"x"});
  GBasis G1 = groebner_to_degree({P(X, "x^2 - 1")}, 4);
  REQUIRE(G1.rules().size() == 1);
  CHECK(G1.normal_form(P(X, "x^5")) == P(X, "x"));

  GBasis Gc = groebner_to_degree({P(V, "v2 v1 - v1 v2")}, 5);
  CHECK(hilbert_counts(Gc, 5) == std::vector<long>{1, 2, 3, 4, 5, 6});

  GBasis Gf = groebner_to_degree({}, 5, V);
  CHECK(hilbert_counts(Gf, 5) == std::vector<long>{1, 2, 4, 8, 16, 32});

  // Jordan plane -v1 v2 + v2 v1 + v2^2 (E = J2), ordered v2 < v1
  auto W = make_alphabet({"v2", "v1"});
  GBasis Gj = groebner_to_degree({P(W, "-v1 v2 + v2 v1 + v2 v2")}, 6);
  REQUIRE(Gj.rules().size() == 1);
  CHECK(Gj.rules()[0].lead_word() == P(W, "v1 v2").lead_word());
  CHECK(Gj.complete());
  CHECK(hilbert_counts(Gj, 6) == std::vector<long>{1, 2, 3, 4, 5, 6, 7});

  CHECK_THROWS_AS(groebner_to_degree({P(V, "v1 v1 v2")}, 2), Error);
  CHECK_THROWS_AS(hilbert_counts(groebner_to_degree({P(X, "x^2 - 1")}, 4), 3), Error);

  GBasis Gu = groebner_to_degree({P(X, "x - 1"), P(X, "x^2 - 2")}, 4);
  CHECK(Gu.unit_ideal());
  CHECK(Gu.normal_form(P(X, "x^3 + 7")).is_zero());
}

TEST_CASE("membership certificates") {
  auto V = make_alphabet({"v1", "v2"});
  std::vector<NcPoly> rels = {P(V, "v1 v2 + q v2 v1")};
  auto c1 = ideal_member_to_degree(P(V, "v2 v1 + 1/q v1 v2"), rels, 4);
  CHECK(c1.member);
  auto c2 = ideal_member_to_degree(P(V, "v1 v2"), rels, 4);
  CHECK(!c2.member);
  CHECK(c2.normal_form == P(V, "v1 v2"));
  CHECK_THROWS_AS(ideal_member_to_degree(P(V, "v1 v2 v1 v2 v1"), rels, 4), Error);

  auto XY = make_alphabet({"x", "y"});
  auto c3 = ideal_member_to_degree(P(XY, "y x x y + x x"), {P(XY, "y y - 1"), P(XY, "y x y + x")}, 8);
  CHECK(!c3.member);
  CHECK(c3.normal_form == P(XY, "2 x x"));
  auto c4 = ideal_member_to_degree(P(XY, "y y x y + y x"), {P(XY, "y y - 1"), P(XY, "y x y + x")}, 8);
  CHECK(c4.member);

  // tensor membership in I (x) F + F (x) I for I = (x^2)
  auto X = make_alphabet({"x"});
  GBasis G = groebner_to_degree({P(X, "x^2")}, 4);
  TensorPoly in = TensorPoly::pure({P(X, "x^2"), P(X, "x")}) + TensorPoly::pure({P(X, "x"), P(X, "x^3")});
  CHECK(tensor_member(in, {&G, &G}).member);
  TensorPoly out = TensorPoly::pure({P(X, "x"), P(X, "x + 1")});
  auto tc = tensor_member(out, {&G, &G});
  CHECK(!tc.member);
  CHECK(tc.status() == CertStatus::Failed);
}

TEST_CASE("normal form properties and Hilbert oracles") {
  std::mt19937 rng(22);
  for (int it = 0; it < 12; ++it) {
    int letters = 2 + it % 2;
    std::vector<std::string> names;
    for (int k = 0; k < letters; ++k) names.push_back(std::string(1, char('x' + k)));
    auto A = make_alphabet(names);
    // random homogeneous quadratic relations
    std::vector<NcPoly> rels;
    int nrel = 1 + it % 3;
    std::uniform_int_distribution<int> c(-2, 2), let(0, letters - 1);
    for (int r = 0; r < nrel; ++r) {
      NcPoly p(A);
      for (int t = 0; t < 3; ++t) p.add_term(letter(let(rng)) + letter(let(rng)), q(c(rng)));
      if (!p.is_zero()) rels.push_back(p);
    }
    int d = letters == 2 ? 5 : 4;
    GBasis G = groebner_to_degree(rels, d, A);
    auto h = hilbert_counts(G, d);
    for (int k = 0; k <= d; ++k) {
      CHECK(h[k] == brute_irreducible(G, letters, k));
      if (k <= 4) CHECK(h[k] == quotient_dim_oracle(rels, letters, k));
    }
    for (const auto& r : rels) CHECK(G.normal_form(r).is_zero());
    for (int j = 0; j < 5; ++j) {
      NcPoly a = random_poly(rng, A, d, 4), b = random_poly(rng, A, d, 4);
      NcPoly na = G.normal_form(a), nb = G.normal_form(b);
      CHECK(G.normal_form(na) == na);
      CHECK(G.normal_form(q(2) * a - q(3, 2) * b) == q(2) * na - q(3, 2) * nb);
      for (const auto& [w, s] : na.terms()) CHECK(!G.is_reducible(w));
    }
    CHECK(groebner_to_degree(rels, d, A).str() == G.str());
  }
}
