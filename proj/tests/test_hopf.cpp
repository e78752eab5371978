#include "asreg/canonical.hpp"
#include "asreg/hopf.hpp"
#include "asreg/parse.hpp"
#include "doctest.h"

using namespace asreg;

namespace {

const FieldSpec Qt = FieldSpec::parse("Qt");

Matrix D2(const std::string& q) { return parse_matrix("[[0,1],[" + q + ",0]]", q == "q" ? std::optional(Qt) : std::nullopt); }

std::vector<NcPoly> polys(const AlphabetPtr& a, const std::vector<std::string>& src, std::optional<FieldSpec> f = {}) {
  std::vector<NcPoly> out;
  for (const auto& s : src) out.push_back(parse_ncpoly(s, a, f));
  return out;
}

void require_equal_ideals(const std::vector<NcPoly>& ours, const std::vector<NcPoly>& theirs, int d) {
  auto cmp = compare_ideals(ours, theirs, d);
  for (const auto& [s, c] : cmp.left_in_right) CHECK_MESSAGE(c.member, s, " not in listed ideal: ", c.normal_form.str());
  for (const auto& [s, c] : cmp.right_in_left) CHECK_MESSAGE(c.member, s, " not in built ideal: ", c.normal_form.str());
  CHECK(cmp.equal);
}

VerificationReport grid_report(const Matrix& E, Named w, int d) {
  HopfPresentation H = build_named(E, w);
  GBasis G = groebner_to_degree(H.relations, d, H.alphabet);
  VerificationReport rep = verify_hopf_axioms(H, G);
  rep.add(verify_comodule(E, H, G));
  if (w == Named::OcGL) rep.add(verify_identity(H, Identity::DCentral, G));
  if (w == Named::GLS2) rep.add(verify_identity(H, Identity::Involutory, G));
  if (w == Named::SL) rep.add(verify_identity(H, Identity::S2Conjugation, G));
  return rep;
}

std::vector<NcPoly> central_D(const HopfPresentation& H) {
  std::vector<NcPoly> out;
  NcPoly D = H.Dpoly();
  for (int g = 0; g < H.alphabet->size(); ++g)
    if (g != H.D && g != H.Di) out.push_back(commutator(D, NcPoly::gen(H.alphabet, g)));
  NcPoly one = NcPoly::constant(H.alphabet, Scalar(1));
  out.push_back(H.Dpoly() * H.Dinv() - one);
  out.push_back(H.Dinv() * H.Dpoly() - one);
  return out;
}

}  // namespace

TEST_CASE("one-dimensional presentations") {
  HopfPresentation sl = build_named(jordan_block(1), Named::SL);
  REQUIRE(sl.relations.size() == 1);
  CHECK(sl.relations[0].monic() == parse_ncpoly("a a - 1", sl.alphabet));
  CHECK(sl.antipode->images[0].to_poly() == sl.gen("a"));

  HopfPresentation gl = build_named(jordan_block(1), Named::OcGL);
  CHECK(gl.alphabet->names() == std::vector<std::string>{"a", "D", "Di"});
  CHECK(verify_hopf_axioms(gl, 4).all_certified());
}

TEST_CASE("construction argument errors") {
  CHECK_THROWS_AS(build_B(parse_matrix("[[1,1],[1,1]]")), Error);
  try {
    build_G(parse_matrix("[[0,1],[1,0]]"), parse_matrix("[[1]]"));
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
  HopfPresentation H = build_named(D2("2"), Named::GLS2);
  try {
    s2m_quotient(H, 1);
    FAIL("non-central D accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCentralCodeterminant);
  }
  try {
    verify_identity(H, Identity::DCentral, 4);
    FAIL("hypothesis not checked");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisNotMet);
    CHECK(std::string(e.what()).find("[[1/2,0],[0,2]]") != std::string::npos);
  }
}

TEST_CASE("quantum plane presentations match the listed relations") {
  Matrix E = D2("q");
  auto mm = build_named(E, Named::M);
  auto gl = build_named(E, Named::OcGL);
  auto s2 = build_named(E, Named::GLS2);
  auto sl = build_named(E, Named::SL);
  auto al = gl.alphabet;
  std::vector<std::string> m_rel = {"a b + q b a", "c d + q d c", "a d + q b c - D", "d a + 1/q c b - D"};
  std::vector<std::string> gl_extra = {"b d + q d b", "a c + q c a", "a d + q c b - D", "d a + 1/q b c - D",
                                       "D Di - 1", "Di D - 1"};
  std::vector<std::string> s2_extra = {"b d + 1/q d b", "a c + 1/q c a", "a d + 1/q c b - D", "d a + q b c - D",
                                       "D Di - 1", "Di D - 1"};

  require_equal_ideals(groebner_to_degree(mm.relations, 2, mm.alphabet).rules(), polys(mm.alphabet, m_rel, Qt), 4);

  auto gl_list = polys(al, m_rel, Qt);
  for (auto& p : polys(al, gl_extra, Qt)) gl_list.push_back(p);
  require_equal_ideals(groebner_to_degree(gl.relations, 2, al).rules(), gl_list, 4);

  auto s2_list = polys(s2.alphabet, m_rel, Qt);
  for (auto& p : polys(s2.alphabet, s2_extra, Qt)) s2_list.push_back(p);
  require_equal_ideals(groebner_to_degree(s2.relations, 2, s2.alphabet).rules(), s2_list, 4);

  // D := 1
  auto sl_list = polys(sl.alphabet, {"a b + q b a", "c d + q d c", "a d + q b c - 1", "d a + 1/q c b - 1",
                                     "b d + q d b", "a c + q c a", "a d + q c b - 1", "d a + 1/q b c - 1"},
                       Qt);
  require_equal_ideals(groebner_to_degree(sl.relations, 2, sl.alphabet).rules(), sl_list, 4);

  // listed antipode agrees modulo the ideal
  GBasis G = groebner_to_degree(gl.relations, 4, al);
  auto S = polys(al, {"d Di", "1/q b Di", "q c Di", "a Di"}, Qt);
  for (int k = 0; k < 4; ++k) CHECK(ideal_member(gl.antipode->images[k].to_poly() - S[k], G).member);
}

TEST_CASE("Jordan plane presentations match the listed relations") {
  Matrix E = jordan_block(2);
  auto mm = build_named(E, Named::M);
  auto gl = build_named(E, Named::OcGL);
  auto s2 = build_named(E, Named::GLS2);
  std::vector<std::string> m_rel = {"a b - b a - b b", "c d - d c - c b + d a + d b - d d",
                                    "-a b + a d + b a + b b - b c - b d - D", "-c b + d a + d b - D"};
  std::vector<std::string> gl_extra = {"d b - b d - b b", "c a - a c - a a - b a - b c + d a",
                                       "-b a - b c + d a - D", "a b + a d + b b + b d - c b - d b - D",
                                       "D Di - 1", "Di D - 1"};
  std::vector<std::string> s2_extra = {"d b - b d + b b", "c a - a c + a a - b a + b c - d a",
                                       "b a - b c + d a - D", "-a b + a d + b b - b d - c b + d b - D",
                                       "D Di - 1", "Di D - 1"};
  require_equal_ideals(groebner_to_degree(mm.relations, 2, mm.alphabet).rules(), polys(mm.alphabet, m_rel), 4);
  auto gl_list = polys(gl.alphabet, m_rel);
  for (auto& p : polys(gl.alphabet, gl_extra)) gl_list.push_back(p);
  require_equal_ideals(groebner_to_degree(gl.relations, 2, gl.alphabet).rules(), gl_list, 4);
  auto s2_list = polys(s2.alphabet, m_rel);
  for (auto& p : polys(s2.alphabet, s2_extra)) s2_list.push_back(p);
  require_equal_ideals(groebner_to_degree(s2.relations, 2, s2.alphabet).rules(), s2_list, 4);

  GBasis G = groebner_to_degree(gl.relations, 4, gl.alphabet);
  auto S = polys(gl.alphabet, {"(d - b) Di", "-b Di", "(a + b - c - d) Di", "(a + b) Di"});
  for (int k = 0; k < 4; ++k) CHECK(ideal_member(gl.antipode->images[k].to_poly() - S[k], G).member);
}

TEST_CASE("verification grid") {
  std::vector<std::pair<std::string, Matrix>> Es = {
      {"D2(2)", D2("2")},
      {"D2(-1)", D2("-1")},
      {"J2", jordan_block(2)},
      {"J3", jordan_block(3)},
      {"J1+D2(2)", direct_sum({jordan_block(1), D2("2")})},
      {"D4(2)", double_quantum_block(2, Scalar(2))}};
  for (const auto& [name, E] : Es)
    for (Named w : {Named::SL, Named::OcGL, Named::GLS2}) {
      auto rep = grid_report(E, w, 4);
      for (const auto& c : rep.checks)
        CHECK_MESSAGE(c.status == CertStatus::Certified, name, " ", named_name(w), " ", c.name, ": ", c.detail);
    }
}

TEST_CASE("comodule over the Gaussian quantum plane") {
  Matrix E = parse_matrix("[[0,1],[i,0]]", FieldSpec::parse("Qi"));
  for (Named w : {Named::SL, Named::OcGL, Named::GLS2}) {
    auto H = build_named(E, w);
    CHECK(verify_comodule(E, H, 4).status == CertStatus::Certified);
  }
}

TEST_CASE("corrupted presentations do not certify") {
  for (const Matrix& E : {D2("2"), jordan_block(2), jordan_block(3)})
    for (Named w : {Named::SL, Named::OcGL, Named::GLS2}) {
      HopfPresentation H = build_named(E, w);
      // perturb one quadratic relation by a product of two generators
      NcPoly& r = H.relations[0];
      r += NcPoly::gen(H.alphabet, 1) * NcPoly::gen(H.alphabet, 1);
      GBasis G = groebner_to_degree(H.relations, 4, H.alphabet);
      VerificationReport rep = verify_hopf_axioms(H, G);
      rep.add(verify_comodule(E, H, G));
      CHECK_FALSE(rep.all_certified());
    }
  HopfPresentation H = build_named(D2("2"), Named::OcGL);
  H.antipode->images[0] = TensorPoly::from(H.gen("a") * H.gen("Di"));
  auto rep = verify_hopf_axioms(H, 4);
  REQUIRE(rep.checks.size() == 4);
  CHECK(rep.checks[3].name == "antipode-axiom");
  CHECK(rep.checks[3].status != CertStatus::Certified);

  HopfPresentation B = build_B(mat_inverse(jordan_block(2)));
  B.antipode->images[1] = TensorPoly::from(B.gen("b"));
  CHECK(verify_identity(B, Identity::S2Conjugation, 4).status != CertStatus::Certified);
}

TEST_CASE("S^2 conjugation for B(J2)") {
  HopfPresentation B = build_B(jordan_block(2));
  CHECK(*B.X == mat_inverse(jordan_block(2)) * jordan_block(2).transpose());
  CHECK(verify_identity(B, Identity::S2Conjugation, 4).status == CertStatus::Certified);
}

TEST_CASE("SL is Oc-GL with D = 1") {
  for (const Matrix& E : {D2("2"), jordan_block(2), jordan_block(3)}) {
    auto gl = build_named(E, Named::OcGL);
    auto sl = build_named(E, Named::SL);
    GenMorphism f{gl.alphabet, {sl.alphabet}, {}, false};
    for (int k = 0; k < gl.alphabet->size(); ++k)
      f.images.push_back(TensorPoly::from(k == gl.D || k == gl.Di ? NcPoly::constant(sl.alphabet, Scalar(1))
                                                                    : NcPoly::gen(sl.alphabet, k)));
    GBasis G = groebner_to_degree(sl.relations, 4, sl.alphabet);
    for (const auto& r : gl.relations) CHECK(ideal_member(f.apply_plain(r), G).member);
  }
}

namespace {

std::vector<NcPoly> jordan_listed(const HopfPresentation& Q, int n) {
  std::vector<NcPoly> out = central_D(Q);
  auto a = [&](int k) { return Q.gen("a" + std::to_string(k)); };
  out.push_back(a(0) * a(0) - Q.Dpoly());
  for (int i = 2; i <= n; ++i) {
    NcPoly s(Q.alphabet);
    for (int k = 0; k < i; ++k) s += Scalar(k % 2 ? -1 : 1) * (a(k) * a(i - 1 - k));
    out.push_back(s);
  }
  return out;
}

std::vector<NcPoly> double_quantum_listed(const HopfPresentation& Q, int r) {
  std::vector<NcPoly> out = central_D(Q);
  auto a = [&](int k) { return Q.gen("a" + std::to_string(k)); };
  auto b = [&](int k) { return Q.gen("b" + std::to_string(k)); };
  out.push_back(a(0) * b(0) - Q.Dpoly());
  out.push_back(b(0) * a(0) - Q.Dpoly());
  for (int i = 2; i <= r; ++i) {
    NcPoly s(Q.alphabet), t(Q.alphabet);
    for (int k = 0; k < i; ++k) {
      s += a(k) * b(i - 1 - k);
      t += b(k) * a(i - 1 - k);
    }
    out.push_back(s);
    out.push_back(t);
  }
  return out;
}

bool same_reduced(const HopfPresentation& x, const HopfPresentation& y) {
  if (x.alphabet->names() != y.alphabet->names() || x.relations != y.relations) return false;
  for (int g = 0; g < x.alphabet->size(); ++g)
    if (x.coproduct.images[g] != y.coproduct.images[g] || x.counit.images[g] != y.counit.images[g] ||
        x.antipode->images[g] != y.antipode->images[g])
      return false;
  return true;
}

}  // namespace

TEST_CASE("S^2m reduction for Jordan type") {
  for (int n : {2, 3, 4}) {
    auto H = build_named(jordan_block(n), Named::OcGL);
    auto Q = linear_reduce(s2m_quotient(H, 1));
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back("a" + std::to_string(k));
    names.push_back("D");
    names.push_back("Di");
    CHECK(Q.alphabet->names() == names);
    require_equal_ideals(Q.relations, jordan_listed(Q, n), 6);
    // S(a_i) = (-1)^i D^-1 a_i, Delta(a_i) = sum a_k (x) a_{i-k}
    GBasis G = groebner_to_degree(Q.relations, 4, Q.alphabet);
    for (int i = 0; i < n; ++i) {
      NcPoly ai = Q.gen("a" + std::to_string(i));
      NcPoly want = Scalar(i % 2 ? -1 : 1) * (Q.Dinv() * ai);
      CHECK(ideal_member(Q.antipode->images[i].to_poly() - want, G).member);
      TensorPoly d({Q.alphabet, Q.alphabet});
      for (int k = 0; k <= i; ++k)
        d = d + TensorPoly::pure({Q.gen("a" + std::to_string(k)), Q.gen("a" + std::to_string(i - k))});
      CHECK(Q.coproduct.images[i] == d);
    }
    CHECK(verify_hopf_axioms(Q, 4).all_certified());
    for (int m : {2, 3}) CHECK(same_reduced(Q, linear_reduce(s2m_quotient(H, m))));

    auto SLQ = linear_reduce(s2m_quotient(build_named(jordan_block(n), Named::SL), 1));
    CHECK(SLQ.relations[0] == parse_ncpoly("a0 a0 - 1", SLQ.alphabet));
  }
}

TEST_CASE("S^2m reduction for double quantum type") {
  auto H = build_named(double_quantum_block(2, Scalar(2)), Named::OcGL);
  auto Q = linear_reduce(s2m_quotient(H, 1));
  CHECK(Q.alphabet->names() == std::vector<std::string>{"a0", "a1", "b0", "b1", "D", "Di"});
  require_equal_ideals(Q.relations, double_quantum_listed(Q, 2), 6);
  GBasis G = groebner_to_degree(Q.relations, 4, Q.alphabet);
  for (int i = 0; i < 2; ++i) {
    NcPoly ai = Q.gen("a" + std::to_string(i)), bi = Q.gen("b" + std::to_string(i));
    CHECK(ideal_member(Q.antipode->images[i].to_poly() - Q.Dinv() * bi, G).member);
    CHECK(ideal_member(Q.antipode->images[2 + i].to_poly() - Q.Dinv() * ai, G).member);
  }
  CHECK(verify_hopf_axioms(Q, 4).all_certified());
  for (int m : {2, 3}) CHECK(same_reduced(Q, linear_reduce(s2m_quotient(H, m))));
}

TEST_CASE("S^2m quotient of the quantum plane") {
  // q generic: b = c = 0
  auto H = build_named(D2("q"), Named::OcGL);
  auto Q = linear_reduce(s2m_quotient(H, 1));
  CHECK(Q.alphabet->names() == std::vector<std::string>{"a0", "b0", "D", "Di"});
  require_equal_ideals(Q.relations, polys(Q.alphabet, {"a0 b0 - D", "b0 a0 - D", "D Di - 1", "Di D - 1"}), 4);

  // q = -1: q^2 = 1, nothing new
  auto H1 = build_named(D2("-1"), Named::OcGL);
  auto Q1 = s2m_quotient(H1, 1);
  CHECK(Q1.relations.size() == H1.relations.size());
  CHECK(linear_reduce(Q1).alphabet->names() == H1.alphabet->names());
}

TEST_CASE("presentation text") {
  auto H = build_named(jordan_block(1), Named::SL);
  CHECK(presentation_text(H) ==
        "SL\ngenerators: a\nrelations:\n  a a - 1\ncoproduct:\n  a -> a ⊗ a\ncounit:\n  a -> 1\nantipode:\n  a -> a\n");
}
