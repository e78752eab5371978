#include "asreg/hopf.hpp"

#include <algorithm>
#include <cctype>

#include "asreg/parse.hpp"

namespace asreg {

const char* construction_name(Construction c) {
  switch (c) {
    case Construction::M: return "M";
    case Construction::B: return "B";
    case Construction::G: return "G";
    case Construction::OcGL: return "Oc-GL";
    case Construction::GLS2: return "GL-S2";
    case Construction::SL: return "SL";
    case Construction::Quotient: return "quotient";
    case Construction::NSymm: return "NSymm";
    case Construction::Smash: return "smash";
    case Construction::FreeProduct: return "free-product";
    case Construction::Ore: return "Ore";
  }
  return "?";
}

static std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Construction parse_construction(const std::string& s) {
  std::string l = lower(s);
  for (Construction c : {Construction::M, Construction::B, Construction::G, Construction::OcGL, Construction::GLS2,
                         Construction::SL, Construction::Quotient, Construction::NSymm, Construction::Smash,
                         Construction::FreeProduct, Construction::Ore})
    if (lower(construction_name(c)) == l) return c;
  throw Error(ErrorKind::InvalidArgument, "unknown construction '" + s + "'");
}

Named parse_named(const std::string& s) {
  std::string l = lower(s);
  if (l == "oc-gl" || l == "ocgl") return Named::OcGL;
  if (l == "gl-s2" || l == "gls2") return Named::GLS2;
  if (l == "sl") return Named::SL;
  if (l == "m") return Named::M;
  throw Error(ErrorKind::InvalidArgument, "unknown construction '" + s + "' (expected oc-gl, gl-s2, sl or m)");
}

const char* named_name(Named w) {
  switch (w) {
    case Named::OcGL: return "Oc-GL";
    case Named::GLS2: return "GL-S2";
    case Named::SL: return "SL";
    case Named::M: return "M";
  }
  return "?";
}

Identity parse_identity(const std::string& s) {
  std::string l = lower(s);
  if (l == "d-central") return Identity::DCentral;
  if (l == "involutory") return Identity::Involutory;
  if (l == "s2-conjugation") return Identity::S2Conjugation;
  throw Error(ErrorKind::InvalidArgument, "unknown identity '" + s + "' (expected d-central, involutory or s2-conjugation)");
}

const char* identity_name(Identity w) {
  switch (w) {
    case Identity::DCentral: return "D-central";
    case Identity::Involutory: return "involutory";
    case Identity::S2Conjugation: return "S2-conjugation";
  }
  return "?";
}

// ---- polynomial matrices ----

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t{n, e};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = (*this)(j, i);
  return t;
}

static AlphabetPtr alpha_of(const PolyMatrix& m) {
  for (const auto& p : m.e)
    if (p.alphabet()) return p.alphabet();
  return nullptr;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r{a.n, std::vector<NcPoly>(a.e.size(), NcPoly(alpha_of(a)))};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

PolyMatrix operator*(const Matrix& a, const PolyMatrix& b) {
  PolyMatrix r{b.n, std::vector<NcPoly>(b.e.size(), NcPoly(alpha_of(b)))};
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int k = 0; k < b.n; ++k)
        if (!a(i, k).is_zero()) r(i, j) += a(i, k) * b(k, j);
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const Matrix& b) {
  PolyMatrix r{a.n, std::vector<NcPoly>(a.e.size(), NcPoly(alpha_of(a)))};
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < a.n; ++k)
        if (!b(k, j).is_zero()) r(i, j) += b(k, j) * a(i, k);
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r = a;
  for (size_t k = 0; k < r.e.size(); ++k) r.e[k] -= b.e[k];
  return r;
}

PolyMatrix scalar_poly_matrix(int n, const NcPoly& s) {
  PolyMatrix r{n, std::vector<NcPoly>(static_cast<size_t>(n) * n, NcPoly(s.alphabet()))};
  for (int i = 0; i < n; ++i) r(i, i) = s;
  return r;
}

// ---- presentations ----

NcPoly HopfPresentation::Dpoly() const {
  return D >= 0 ? NcPoly::gen(alphabet, D) : NcPoly::constant(alphabet, Scalar(1));
}

NcPoly HopfPresentation::Dinv() const {
  return Di >= 0 ? NcPoly::gen(alphabet, Di) : NcPoly::constant(alphabet, Scalar(1));
}

void HopfPresentation::check_structure() const {
  GenMorphism id = GenMorphism::identity(alphabet);
  for (const auto& r : relations) {
    Scalar e = counit.apply_scalar(r);
    if (!e.is_zero())
      throw Error(ErrorKind::InternalInconsistency, "counit of relation " + r.str() + " is " + e.str() + ", not 0");
  }
  for (int g = 0; g < alphabet->size(); ++g) {
    TensorPoly d = coproduct.apply(NcPoly::gen(alphabet, g));
    if (apply_factorwise({coproduct, id}, d) != apply_factorwise({id, coproduct}, d))
      throw Error(ErrorKind::InternalInconsistency, "coproduct is not coassociative on " + alphabet->name(g));
    NcPoly x = NcPoly::gen(alphabet, g);
    if (apply_factorwise({counit, id}, d).to_poly() != x || apply_factorwise({id, counit}, d).to_poly() != x)
      throw Error(ErrorKind::InternalInconsistency, "counit axiom fails on " + alphabet->name(g));
  }
}

std::vector<std::string> matrix_generator_names(int n) {
  if (n == 1) return {"a"};
  if (n == 2) return {"a", "b", "c", "d"};
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      out.push_back(n < 10 ? "a" + std::to_string(i) + std::to_string(j)
                           : "a" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

namespace {

TensorPoly scalar_tensor(const Scalar& c) {
  TensorPoly t(std::vector<AlphabetPtr>{});
  t.add_term({}, c);
  return t;
}

HopfPresentation matrix_base(int n, bool with_D, bool with_Di) {
  HopfPresentation H;
  auto names = matrix_generator_names(n);
  if (with_D) names.push_back("D");
  if (with_Di) names.push_back("Di");
  H.alphabet = make_alphabet(names);
  const auto& al = H.alphabet;
  H.A.n = n;
  for (int k = 0; k < n * n; ++k) H.A.e.push_back(NcPoly::gen(al, k));
  if (with_D) H.D = n * n;
  if (with_Di) H.Di = n * n + 1;
  H.coproduct = GenMorphism{al, {al, al}, {}, false};
  H.counit = GenMorphism{al, {}, {}, false};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TensorPoly d({al, al});
      for (int s = 0; s < n; ++s) d = d + TensorPoly::pure({H.A(i, s), H.A(s, j)});
      H.coproduct.images.push_back(d);
      H.counit.images.push_back(scalar_tensor(Scalar(i == j ? 1 : 0)));
    }
  for (int g : {H.D, H.Di}) {
    if (g < 0) continue;
    NcPoly x = NcPoly::gen(al, g);
    H.coproduct.images.push_back(TensorPoly::pure({x, x}));
    H.counit.images.push_back(scalar_tensor(Scalar(1)));
  }
  return H;
}

void add_relations(std::vector<NcPoly>& out, const PolyMatrix& m) {
  for (const auto& p : m.e) {
    if (p.is_zero()) continue;
    NcPoly mp = p.monic();
    bool dup = std::any_of(out.begin(), out.end(), [&](const NcPoly& q) { return q.monic() == mp; });
    if (!dup) out.push_back(p);
  }
}

Matrix checked_inverse(const Matrix& E, const char* what) {
  if (!E.square()) throw Error(ErrorKind::SizeMismatch, std::string(what) + " must be square");
  try {
    return mat_inverse(E);
  } catch (const Error&) {
    throw Error(ErrorKind::Singular, std::string(what) + " is singular");
  }
}

GenMorphism antipode_from(const HopfPresentation& H, const PolyMatrix& SA) {
  GenMorphism S{H.alphabet, {H.alphabet}, {}, true};
  for (const auto& p : SA.e) S.images.push_back(TensorPoly::from(p));
  if (H.D >= 0) S.images.push_back(TensorPoly::from(H.Dinv()));
  if (H.Di >= 0) S.images.push_back(TensorPoly::from(H.Dpoly()));
  return S;
}

}  // namespace

HopfPresentation build_B(const Matrix& E) {
  Matrix Ei = checked_inverse(E, "E");
  int n = E.rows();
  HopfPresentation H = matrix_base(n, false, false);
  H.tag = Construction::B;
  H.name = "B";
  NcPoly one = NcPoly::constant(H.alphabet, Scalar(1));
  PolyMatrix I = scalar_poly_matrix(n, one);
  PolyMatrix At = H.A.transpose();
  add_relations(H.relations, H.A * Ei * At * E - I);
  add_relations(H.relations, Ei * At * E * H.A - I);
  H.antipode = antipode_from(H, Ei * At * E);
  H.E = E;
  H.X = Ei * E.transpose();
  H.central_D = true;
  H.check_structure();
  return H;
}

HopfPresentation build_G(const Matrix& E, const Matrix& F) {
  Matrix Ei = checked_inverse(E, "E");
  Matrix Fi = checked_inverse(F, "F");
  if (E.rows() != F.rows()) throw Error(ErrorKind::SizeMismatch, "E and F have different sizes");
  int n = E.rows();
  HopfPresentation H = matrix_base(n, true, true);
  H.tag = Construction::G;
  H.name = "G";
  PolyMatrix DI = scalar_poly_matrix(n, H.Dpoly());
  PolyMatrix At = H.A.transpose();
  add_relations(H.relations, H.A * Ei * At * E - DI);
  add_relations(H.relations, F * At * Fi * H.A - DI);
  NcPoly one = NcPoly::constant(H.alphabet, Scalar(1));
  H.relations.push_back(H.Dpoly() * H.Dinv() - one);
  H.relations.push_back(H.Dinv() * H.Dpoly() - one);
  PolyMatrix SA = Ei * At * E;
  for (auto& p : SA.e) p = p * H.Dinv();
  H.antipode = antipode_from(H, SA);
  H.E = E;
  H.F = F;
  H.X = Ei * Fi.transpose();
  H.central_D = (E * F).scalar_multiple_of_identity().has_value();
  H.check_structure();
  return H;
}

HopfPresentation build_M(const Matrix& E) {
  Matrix Ei = checked_inverse(E, "E");
  int n = E.rows();
  HopfPresentation H = matrix_base(n, true, false);
  H.tag = Construction::M;
  H.name = "M";
  PolyMatrix DI = scalar_poly_matrix(n, H.Dpoly());
  add_relations(H.relations, H.A * Ei * H.A.transpose() * E - DI);
  H.E = E;
  H.check_structure();
  return H;
}

HopfPresentation build_named(const Matrix& E, Named which) {
  Matrix Ei = checked_inverse(E, "E");
  HopfPresentation H;
  switch (which) {
    case Named::OcGL:
      H = build_G(Ei, E);
      H.tag = Construction::OcGL;
      break;
    case Named::GLS2:
      H = build_G(Ei, E.transpose());
      H.tag = Construction::GLS2;
      break;
    case Named::SL:
      H = build_B(Ei);
      H.tag = Construction::SL;
      break;
    case Named::M:
      H = build_M(Ei);
      H.tag = Construction::M;
      break;
  }
  H.name = named_name(which);
  return H;
}

// ---- verification ----

bool VerificationReport::all_certified() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CertStatus::Certified; });
}

bool VerificationReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CertStatus::Failed; });
}

namespace {

int severity(CertStatus s) { return s == CertStatus::Certified ? 0 : s == CertStatus::NotReduced ? 1 : 2; }

struct Tally {
  Tally(std::string n, int deg) : name(std::move(n)), d(deg) {}
  std::string name;
  int d;
  CertStatus worst = CertStatus::Certified;
  std::string detail;
  int total = 0;

  void add(const std::string& label, CertStatus s, const std::string& nf) {
    ++total;
    if (severity(s) > severity(worst)) {
      worst = s;
      detail = label + " has normal form " + nf;
    }
  }
  Check done() const {
    std::string d0 = detail.empty() ? std::to_string(total) + " elements reduced to 0" : detail;
    return {name, worst, d, d0};
  }
};

std::vector<NcPoly> generators(const AlphabetPtr& a) {
  std::vector<NcPoly> g;
  for (int i = 0; i < a->size(); ++i) g.push_back(NcPoly::gen(a, i));
  return g;
}

}  // namespace

Check combine(const std::string& name, const std::vector<std::pair<std::string, MembershipCertificate>>& certs, int d) {
  Tally t{name, d};
  for (const auto& [label, c] : certs) t.add(label, c.status(), c.normal_form.str());
  return t.done();
}

Check verify_comodule(const Matrix& E, const HopfPresentation& H, const GBasis& G) {
  int n = E.rows();
  if (H.n() != n) throw Error(ErrorKind::SizeMismatch, "presentation and E have different sizes");
  std::vector<std::string> vn;
  for (int i = 1; i <= n; ++i) vn.push_back("v" + std::to_string(i));
  AlphabetPtr V = make_alphabet(vn);
  GenMorphism rho{V, {V, H.alphabet}, {}, false};
  for (int i = 0; i < n; ++i) {
    TensorPoly img({V, H.alphabet});
    for (int s = 0; s < n; ++s) img = img + TensorPoly::pure({NcPoly::gen(V, s), H.A(s, i)});
    rho.images.push_back(img);
  }
  NcPoly r(V);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r += E(i, j) * (NcPoly::gen(V, i) * NcPoly::gen(V, j));
  TensorPoly x = rho.apply(r) - TensorPoly::pure({r, H.Dpoly()});
  GBasis free_v = groebner_to_degree({}, G.degree_bound(), V);
  TensorCertificate c = tensor_member(x, {&free_v, &G});
  Tally t{"comodule", G.degree_bound()};
  t.add("rho(r) - r (x) D", c.status(), c.normal_form.str());
  return t.done();
}

Check verify_comodule(const Matrix& E, const HopfPresentation& H, int d) {
  return verify_comodule(E, H, groebner_to_degree(H.relations, d, H.alphabet));
}

VerificationReport verify_hopf_axioms(const HopfPresentation& H, const GBasis& G) {
  VerificationReport rep;
  int d = G.degree_bound();
  try {
    H.check_structure();
    rep.add({"coalgebra-structure", CertStatus::Certified, 0, "counit kills relations; coassociative and counital on generators"});
  } catch (const Error& e) {
    rep.add({"coalgebra-structure", CertStatus::Failed, 0, e.what()});
  }
  Tally bi{"bialgebra-compatibility", d};
  for (const auto& r : H.relations) {
    TensorCertificate c = tensor_member(H.coproduct.apply(r), {&G, &G});
    bi.add("Delta(" + r.str() + ")", c.status(), c.normal_form.str());
  }
  rep.add(bi.done());
  if (!H.antipode) return rep;
  const GenMorphism& S = *H.antipode;
  Tally wd{"antipode-well-defined", d};
  for (const auto& r : H.relations) {
    MembershipCertificate c = ideal_member(S.apply_plain(r), G);
    wd.add("S(" + r.str() + ")", c.status(), c.normal_form.str());
  }
  rep.add(wd.done());
  Tally ax{"antipode-axiom", d};
  GenMorphism id = GenMorphism::identity(H.alphabet);
  for (const auto& g : generators(H.alphabet)) {
    TensorPoly dg = H.coproduct.apply(g);
    NcPoly eps = NcPoly::constant(H.alphabet, H.counit.apply_scalar(g));
    NcPoly left = multiply_out(apply_factorwise({S, id}, dg)) - eps;
    NcPoly right = multiply_out(apply_factorwise({id, S}, dg)) - eps;
    MembershipCertificate cl = ideal_member(left, G), cr = ideal_member(right, G);
    ax.add("m(S(x)id)Delta(" + g.str() + ") - eps", cl.status(), cl.normal_form.str());
    ax.add("m(id(x)S)Delta(" + g.str() + ") - eps", cr.status(), cr.normal_form.str());
  }
  rep.add(ax.done());
  return rep;
}

VerificationReport verify_hopf_axioms(const HopfPresentation& H, int d) {
  return verify_hopf_axioms(H, groebner_to_degree(H.relations, d, H.alphabet));
}

Check verify_identity(const HopfPresentation& H, Identity which, const GBasis& G) {
  int d = G.degree_bound();
  Tally t{identity_name(which), d};
  switch (which) {
    case Identity::DCentral: {
      if (H.D < 0) throw Error(ErrorKind::HypothesisNotMet, "presentation has no generator D");
      if (H.E && H.F) {
        Matrix EF = *H.E * *H.F;
        if (!EF.scalar_multiple_of_identity())
          throw Error(ErrorKind::HypothesisNotMet, "EF = " + matrix_str(EF) + " is not a scalar matrix");
      } else if (!H.central_D) {
        throw Error(ErrorKind::HypothesisNotMet, "no EF = lambda I data for this presentation");
      }
      NcPoly D = H.Dpoly();
      for (int g = 0; g < H.alphabet->size(); ++g) {
        if (g == H.D || g == H.Di) continue;
        NcPoly x = NcPoly::gen(H.alphabet, g);
        MembershipCertificate c = ideal_member(commutator(D, x), G);
        t.add("[D, " + x.str() + "]", c.status(), c.normal_form.str());
      }
      break;
    }
    case Identity::Involutory: {
      if (!H.antipode) throw Error(ErrorKind::HypothesisNotMet, "presentation has no antipode");
      if (H.E) {
        Matrix F = H.F ? *H.F : mat_inverse(*H.E);
        Matrix FtE = F.transpose() * *H.E;
        if (!FtE.scalar_multiple_of_identity())
          throw Error(ErrorKind::HypothesisNotMet, "F^T E = " + matrix_str(FtE) + " is not a scalar matrix");
      }
      for (const auto& g : generators(H.alphabet)) {
        NcPoly s2 = H.antipode->apply_plain(H.antipode->apply_plain(g));
        MembershipCertificate c = ideal_member(s2 - g, G);
        t.add("S^2(" + g.str() + ") - " + g.str(), c.status(), c.normal_form.str());
      }
      break;
    }
    case Identity::S2Conjugation: {
      if (!H.antipode || !H.X || H.n() == 0)
        throw Error(ErrorKind::HypothesisNotMet, "presentation has no antipode or no conjugating matrix");
      Matrix Xi = mat_inverse(*H.X);
      PolyMatrix conj = *H.X * H.A * Xi;
      for (int i = 0; i < H.n(); ++i)
        for (int j = 0; j < H.n(); ++j) {
          NcPoly s2 = H.antipode->apply_plain(H.antipode->apply_plain(H.A(i, j)));
          MembershipCertificate c = ideal_member(s2 - conj(i, j), G);
          t.add("S^2(A)_" + std::to_string(i + 1) + std::to_string(j + 1), c.status(), c.normal_form.str());
        }
      break;
    }
  }
  return t.done();
}

Check verify_identity(const HopfPresentation& H, Identity which, int d) {
  return verify_identity(H, which, groebner_to_degree(H.relations, d, H.alphabet));
}

// ---- quotients ----

VerificationReport verify_named(const Matrix& E, Named which, int d) {
  HopfPresentation H = build_named(E, which);
  GBasis G = groebner_to_degree(H.relations, d, H.alphabet);
  VerificationReport rep = verify_hopf_axioms(H, G);
  rep.add(verify_comodule(E, H, G));
  if (which == Named::OcGL) rep.add(verify_identity(H, Identity::DCentral, G));
  if (which == Named::GLS2) rep.add(verify_identity(H, Identity::Involutory, G));
  if (which == Named::SL) rep.add(verify_identity(H, Identity::S2Conjugation, G));
  return rep;
}

HopfPresentation s2m_quotient(const HopfPresentation& H, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (!H.central_D)
    throw Error(ErrorKind::NonCentralCodeterminant,
                std::string(construction_name(H.tag)) + " does not have a provably central D");
  if (!H.X || H.n() == 0) throw Error(ErrorKind::InvalidArgument, "presentation has no matrix data");
  HopfPresentation Q = H;
  Matrix Xm = H.X->pow(static_cast<unsigned>(m));
  add_relations(Q.relations, Xm * H.A - H.A * Xm);
  Q.tag = Construction::Quotient;
  Q.name = H.name + "/S^" + std::to_string(2 * m);
  Q.m = m;
  return Q;
}

namespace {

bool is_linear_matrix_relation(const HopfPresentation& H, const NcPoly& r) {
  if (r.degree() != 1 || !r.is_homogeneous()) return false;
  for (const auto& [w, c] : r.terms()) {
    int g = letter_at(w, 0);
    if (g == H.D || g == H.Di) return false;
  }
  return true;
}

// Names a0, a1, ... per family of basis matrices; a family starts at each
// basis matrix with a nonzero diagonal.
std::vector<std::string> family_names(const std::vector<Matrix>& basis) {
  int n = basis.empty() ? 0 : basis[0].rows();
  std::vector<std::vector<bool>> rows_of_family;
  std::vector<int> count;
  std::vector<std::string> names;
  for (const auto& M : basis) {
    std::vector<bool> rows(n, false), diag_rows(n, false);
    bool diag = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!M(i, j).is_zero()) {
          rows[i] = true;
          if (i == j) diag = diag_rows[i] = true;
        }
    int fam = -1;
    if (!diag) {
      for (size_t f = 0; f < rows_of_family.size() && fam < 0; ++f) {
        bool inside = true;
        for (int i = 0; i < n; ++i)
          if (rows[i] && !rows_of_family[f][i]) inside = false;
        if (inside) fam = static_cast<int>(f);
      }
    }
    if (fam < 0) {
      fam = static_cast<int>(rows_of_family.size());
      rows_of_family.push_back(diag ? diag_rows : rows);
      count.push_back(0);
    }
    std::string prefix = fam < 26 ? std::string(1, static_cast<char>('a' + fam)) : "f" + std::to_string(fam) + "_";
    names.push_back(prefix + std::to_string(count[fam]++));
  }
  return names;
}

}  // namespace

HopfPresentation linear_reduce(const HopfPresentation& H) {
  int n = H.n();
  std::vector<NcPoly> linear, rest;
  for (const auto& r : H.relations) (is_linear_matrix_relation(H, r) ? linear : rest).push_back(r);
  if (linear.empty() || n == 0) return H;
  for (int k = 0; k < n * n; ++k)
    if (H.A.e[k] != NcPoly::gen(H.alphabet, k))
      throw Error(ErrorKind::InvalidArgument, "linear_reduce needs plain matrix generators");

  // coefficient system over vec index i*n+j
  Matrix sys(static_cast<int>(linear.size()), n * n, H.E ? H.E->field() : FieldSpec{});
  for (size_t r = 0; r < linear.size(); ++r)
    for (const auto& [w, c] : linear[r].terms()) sys(static_cast<int>(r), letter_at(w, 0)) = c;
  int dim = n * n - rank(sys);

  std::vector<Matrix> basis;
  if (H.m > 0 && H.X) {
    Matrix Xm = H.X->pow(static_cast<unsigned>(H.m));
    basis = sylvester_kernel(Xm, Xm);
  } else {
    Matrix stack(0, 0);
    auto ns = null_space(sys);
    if (!ns.empty()) {
      stack = Matrix(static_cast<int>(ns.size()), n * n, sys.field());
      for (size_t k = 0; k < ns.size(); ++k)
        for (int c = 0; c < n * n; ++c) stack(static_cast<int>(k), c) = ns[k][c];
      Matrix R = rref(stack);
      for (int k = 0; k < R.rows(); ++k) {
        Matrix M(n, n, sys.field());
        for (int c = 0; c < n * n; ++c) M(c / n, c % n) = R(k, c);
        basis.push_back(M);
      }
    }
  }
  if (static_cast<int>(basis.size()) != dim)
    throw Error(ErrorKind::InternalInconsistency, "solution space of the linear relations has dimension " +
                                                      std::to_string(dim) + ", kernel basis has " +
                                                      std::to_string(basis.size()));
  for (const auto& r : linear)
    for (const auto& M : basis) {
      Scalar v(0);
      for (const auto& [w, c] : r.terms()) v += c * M(letter_at(w, 0) / n, letter_at(w, 0) % n);
      if (!v.is_zero()) throw Error(ErrorKind::InternalInconsistency, "kernel basis violates " + r.str());
    }

  auto names = family_names(basis);
  int nb = static_cast<int>(basis.size());
  if (H.D >= 0) names.push_back(H.alphabet->name(H.D));
  if (H.Di >= 0) names.push_back(H.alphabet->name(H.Di));
  AlphabetPtr al = make_alphabet(names);

  GenMorphism sub{H.alphabet, {al}, {}, false};
  for (int k = 0; k < n * n; ++k) {
    NcPoly img(al);
    for (int m = 0; m < nb; ++m) img += basis[m](k / n, k % n) * NcPoly::gen(al, m);
    sub.images.push_back(TensorPoly::from(img));
  }
  HopfPresentation Q;
  Q.D = H.D >= 0 ? nb : -1;
  Q.Di = H.Di >= 0 ? nb + (H.D >= 0 ? 1 : 0) : -1;
  for (int g : {H.D, H.Di})
    if (g >= 0) sub.images.push_back(TensorPoly::from(NcPoly::gen(al, g == H.D ? Q.D : Q.Di)));

  for (const auto& r : linear)
    if (!sub.apply_plain(r).is_zero()) throw Error(ErrorKind::InternalInconsistency, "linear relation survives substitution");

  Q.tag = Construction::Quotient;
  Q.name = H.name + " reduced";
  Q.alphabet = al;
  Q.E = H.E;
  Q.F = H.F;
  Q.X = H.X;
  Q.central_D = H.central_D;
  Q.m = H.m;
  Q.A.n = n;
  for (const auto& p : H.A.e) Q.A.e.push_back(sub.apply_plain(p));

  std::vector<NcPoly> rels;
  int maxdeg = 0;
  for (const auto& r : rest) {
    NcPoly s = sub.apply_plain(r);
    if (!s.is_zero()) {
      rels.push_back(s);
      maxdeg = std::max(maxdeg, s.degree());
    }
  }
  Q.relations = rels.empty() ? rels : groebner_to_degree(rels, maxdeg, al).rules();

  Q.coproduct = GenMorphism{al, {al, al}, {}, false};
  Q.counit = GenMorphism{al, {}, {}, false};
  std::vector<TensorPoly> s_images;
  for (int m = 0; m < nb; ++m) {
    int piv = 0;
    while (basis[m](piv / n, piv % n).is_zero()) ++piv;
    int r = piv / n, c = piv % n;
    TensorPoly d({al, al});
    for (int s = 0; s < n; ++s) d = d + TensorPoly::pure({Q.A(r, s), Q.A(s, c)});
    Q.coproduct.images.push_back(d);
    Q.counit.images.push_back(scalar_tensor(H.counit.apply_scalar(H.A(r, c))));
    if (H.antipode) s_images.push_back(TensorPoly::from(sub.apply_plain(H.antipode->apply_plain(H.A(r, c)))));
  }
  for (int g : {H.D, H.Di}) {
    if (g < 0) continue;
    NcPoly x = NcPoly::gen(al, g == H.D ? Q.D : Q.Di);
    Q.coproduct.images.push_back(TensorPoly::pure({x, x}));
    Q.counit.images.push_back(scalar_tensor(Scalar(1)));
    if (H.antipode) s_images.push_back(TensorPoly::from(NcPoly::gen(al, g == H.D ? Q.Di : Q.D)));
  }
  if (H.antipode) Q.antipode = GenMorphism{al, {al}, s_images, true};
  Q.check_structure();
  return Q;
}

std::vector<NcPoly> interreduced_relations(const HopfPresentation& H) {
  int maxdeg = 0;
  for (const auto& r : H.relations) maxdeg = std::max(maxdeg, r.degree());
  return groebner_to_degree(H.relations, maxdeg, H.alphabet).rules();
}

IdealComparison compare_ideals(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b, int d) {
  AlphabetPtr al;
  for (const auto& p : a)
    if (!al) al = p.alphabet();
  for (const auto& p : b)
    if (!al) al = p.alphabet();
  GBasis Ga = groebner_to_degree(a, d, al), Gb = groebner_to_degree(b, d, al);
  IdealComparison out{true, {}, {}};
  for (const auto& p : a) {
    out.left_in_right.push_back({p.str(), ideal_member(p, Gb)});
    if (!out.left_in_right.back().second.member) out.equal = false;
  }
  for (const auto& p : b) {
    out.right_in_left.push_back({p.str(), ideal_member(p, Ga)});
    if (!out.right_in_left.back().second.member) out.equal = false;
  }
  return out;
}

std::string presentation_text(const HopfPresentation& H) {
  std::string out = H.name + "\ngenerators:";
  for (const auto& n : H.alphabet->names()) out += " " + n;
  out += "\nrelations:\n";
  for (const auto& r : H.relations) out += "  " + r.str() + "\n";
  out += "coproduct:\n";
  for (int g = 0; g < H.alphabet->size(); ++g) out += "  " + H.alphabet->name(g) + " -> " + H.coproduct.images[g].str() + "\n";
  out += "counit:\n";
  for (int g = 0; g < H.alphabet->size(); ++g) out += "  " + H.alphabet->name(g) + " -> " + H.counit.images[g].str() + "\n";
  if (H.antipode) {
    out += "antipode:\n";
    for (int g = 0; g < H.alphabet->size(); ++g)
      out += "  " + H.alphabet->name(g) + " -> " + H.antipode->images[g].str() + "\n";
  }
  return out;
}

}  // namespace asreg
