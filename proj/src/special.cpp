#include "asreg/special.hpp"

#include <algorithm>
#include <set>

#include "asreg/canonical.hpp"
#include "asreg/parse.hpp"

namespace asreg {

namespace {

TensorPoly scalar_tensor(const Scalar& c) {
  TensorPoly t(std::vector<AlphabetPtr>{});
  t.add_term({}, c);
  return t;
}

NcPoly power(const NcPoly& x, int k) {
  NcPoly r = NcPoly::constant(x.alphabet(), Scalar(1));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// Letters of p re-read in another alphabet with the same names.
NcPoly rename_into(const NcPoly& p, const AlphabetPtr& target) {
  NcPoly out(target);
  for (const auto& [w, c] : p.terms()) {
    Word v;
    for (size_t k = 0; k < w.size(); ++k) {
      int idx = target->index(p.alphabet()->name(letter_at(w, k)));
      if (idx < 0) throw Error(ErrorKind::AlphabetMismatch, "letter " + p.alphabet()->name(letter_at(w, k)) + " missing");
      v += letter(idx);
    }
    out.add_term(v, c);
  }
  return out;
}

// Shared recursion of S and phi: y_i = -sum_{k=1}^{i} x_k y_{i-k}, y_0 = 1.
std::vector<NcPoly> minus_recursion(const AlphabetPtr& X, int n) {
  std::vector<NcPoly> y{NcPoly::constant(X, Scalar(1))};
  for (int i = 1; i <= n; ++i) {
    NcPoly s(X);
    for (int k = 1; k <= i; ++k) s -= NcPoly::gen(X, k - 1) * y[i - k];
    y.push_back(s);
  }
  return y;
}

}  // namespace

NSymmData nsymm(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "NSymm needs n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  AlphabetPtr X = make_alphabet(names);
  HopfPresentation H;
  H.tag = Construction::NSymm;
  H.name = "NSymm(" + std::to_string(n) + ")";
  H.alphabet = X;
  H.coproduct = GenMorphism{X, {X, X}, {}, false};
  H.counit = GenMorphism{X, {}, {}, false};
  auto x = [&](int i) { return i == 0 ? NcPoly::constant(X, Scalar(1)) : NcPoly::gen(X, i - 1); };
  for (int i = 1; i <= n; ++i) {
    TensorPoly d({X, X});
    for (int j = 0; j <= i; ++j) d = d + TensorPoly::pure({x(j), x(i - j)});
    H.coproduct.images.push_back(d);
    H.counit.images.push_back(scalar_tensor(Scalar(0)));
  }
  auto s = minus_recursion(X, n);
  H.antipode = GenMorphism{X, {X}, {}, true};
  for (int i = 1; i <= n; ++i) H.antipode->images.push_back(TensorPoly::from(s[i]));
  H.check_structure();
  return {n, H};
}

std::vector<NcPoly> nsymm_power_sums(const NSymmData& N) {
  const AlphabetPtr& X = N.H.alphabet;
  std::vector<NcPoly> p;
  for (int i = 1; i <= N.n; ++i) {
    NcPoly v = Scalar(i) * NcPoly::gen(X, i - 1);
    for (int k = 1; k < i; ++k) v -= NcPoly::gen(X, i - k - 1) * p[k - 1];
    p.push_back(v);
  }
  return p;
}

GenMorphism phi_automorphism(const NSymmData& N) {
  const AlphabetPtr& X = N.H.alphabet;
  auto y = minus_recursion(X, N.n);
  GenMorphism f{X, {X}, {}, false};
  for (int i = 1; i <= N.n; ++i) f.images.push_back(TensorPoly::from(y[i]));
  return f;
}

HopfPresentation smash_with_group(const NSymmData& N, Group G) {
  auto names = N.H.alphabet->names();
  names.push_back("g");
  if (G == Group::Z) names.push_back("gi");
  AlphabetPtr al = make_alphabet(names);
  int n = N.n, g = n, gi = G == Group::Z ? n + 1 : n;
  auto x = [&](int i) { return i == 0 ? NcPoly::constant(al, Scalar(1)) : NcPoly::gen(al, i - 1); };

  // g(x_i) = sum_{j=1}^{i} (-1)^(j+1) x_j g(x_{i-j})
  std::vector<NcPoly> act{x(0)};
  for (int i = 1; i <= n; ++i) {
    NcPoly s(al);
    for (int j = 1; j <= i; ++j) s += Scalar(j % 2 ? 1 : -1) * (x(j) * act[i - j]);
    act.push_back(s);
  }
  HopfPresentation H;
  H.tag = Construction::Smash;
  H.name = N.H.name + (G == Group::Z ? "#kZ" : "#k[Z/2]");
  H.alphabet = al;
  NcPoly gp = NcPoly::gen(al, g), one = NcPoly::constant(al, Scalar(1));
  for (int i = 1; i <= n; ++i) H.relations.push_back(gp * x(i) - act[i] * gp);
  if (G == Group::Z) {
    NcPoly gip = NcPoly::gen(al, gi);
    H.relations.push_back(gp * gip - one);
    H.relations.push_back(gip * gp - one);
  } else {
    H.relations.push_back(gp * gp - one);
  }
  H.coproduct = GenMorphism{al, {al, al}, {}, false};
  H.counit = GenMorphism{al, {}, {}, false};
  H.antipode = GenMorphism{al, {al}, {}, true};
  GenMorphism into{N.H.alphabet, {al}, {}, false};
  for (int i = 1; i <= n; ++i) into.images.push_back(TensorPoly::from(x(i)));
  for (int i = 1; i <= n; ++i) {
    H.coproduct.images.push_back(apply_factorwise({into, into}, N.H.coproduct.images[i - 1]));
    H.counit.images.push_back(scalar_tensor(Scalar(0)));
    H.antipode->images.push_back(apply_factorwise({into}, N.H.antipode->images[i - 1]));
  }
  for (int k = g; k < al->size(); ++k) {
    NcPoly e = NcPoly::gen(al, k);
    H.coproduct.images.push_back(TensorPoly::pure({e, e}));
    H.counit.images.push_back(scalar_tensor(Scalar(1)));
    H.antipode->images.push_back(TensorPoly::from(NcPoly::gen(al, k == g ? gi : g)));
  }
  H.check_structure();
  return H;
}

GenMorphism smash_realization(const HopfPresentation& smash, const HopfPresentation& Q) {
  const AlphabetPtr& S = smash.alphabet;
  NcPoly a0 = Q.gen("a0");
  NcPoly a0inv = Q.Di >= 0 ? a0 * Q.Dinv() : a0;
  GenMorphism f{S, {Q.alphabet}, {}, false};
  for (int k = 0; k < S->size(); ++k) {
    const std::string& nm = S->name(k);
    NcPoly img(Q.alphabet);
    if (nm == "g")
      img = a0;
    else if (nm == "gi")
      img = a0inv;
    else
      img = Q.gen("a" + nm.substr(1)) * a0inv;
    f.images.push_back(TensorPoly::from(img));
  }
  return f;
}

HopfPresentation polynomial_hopf(const std::string& x) {
  HopfPresentation H;
  H.tag = Construction::FreeProduct;
  H.name = "k[" + x + "]";
  H.alphabet = make_alphabet({x});
  NcPoly p = NcPoly::gen(H.alphabet, 0), one = NcPoly::constant(H.alphabet, Scalar(1));
  H.coproduct = GenMorphism{H.alphabet, {H.alphabet, H.alphabet}, {TensorPoly::pure({p, one}) + TensorPoly::pure({one, p})}, false};
  H.counit = GenMorphism{H.alphabet, {}, {scalar_tensor(Scalar(0))}, false};
  H.antipode = GenMorphism{H.alphabet, {H.alphabet}, {TensorPoly::from(-p)}, true};
  return H;
}

HopfPresentation group_algebra_Z(const std::string& x) {
  HopfPresentation H;
  H.tag = Construction::FreeProduct;
  H.name = "kZ";
  H.alphabet = make_alphabet({x, x + "i"});
  NcPoly g = NcPoly::gen(H.alphabet, 0), gi = NcPoly::gen(H.alphabet, 1);
  NcPoly one = NcPoly::constant(H.alphabet, Scalar(1));
  H.relations = {g * gi - one, gi * g - one};
  H.coproduct = GenMorphism{H.alphabet, {H.alphabet, H.alphabet}, {TensorPoly::pure({g, g}), TensorPoly::pure({gi, gi})}, false};
  H.counit = GenMorphism{H.alphabet, {}, {scalar_tensor(Scalar(1)), scalar_tensor(Scalar(1))}, false};
  H.antipode = GenMorphism{H.alphabet, {H.alphabet}, {TensorPoly::from(gi), TensorPoly::from(g)}, true};
  return H;
}

HopfPresentation group_algebra_Z2(const std::string& x) {
  HopfPresentation H;
  H.tag = Construction::FreeProduct;
  H.name = "k[Z/2]";
  H.alphabet = make_alphabet({x});
  NcPoly g = NcPoly::gen(H.alphabet, 0);
  H.relations = {g * g - NcPoly::constant(H.alphabet, Scalar(1))};
  H.coproduct = GenMorphism{H.alphabet, {H.alphabet, H.alphabet}, {TensorPoly::pure({g, g})}, false};
  H.counit = GenMorphism{H.alphabet, {}, {scalar_tensor(Scalar(1))}, false};
  H.antipode = GenMorphism{H.alphabet, {H.alphabet}, {TensorPoly::from(g)}, true};
  return H;
}

HopfPresentation free_product(const std::vector<HopfPresentation>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "free product of nothing");
  if (parts.size() == 1) return parts[0];
  std::vector<std::string> names;
  std::set<std::string> used;
  std::vector<std::vector<int>> index(parts.size());
  for (size_t p = 0; p < parts.size(); ++p)
    for (const auto& nm : parts[p].alphabet->names()) {
      std::string v = nm;
      if (used.count(v)) v = nm + "_" + std::to_string(p + 1);
      while (used.count(v)) v += "'";
      used.insert(v);
      index[p].push_back(static_cast<int>(names.size()));
      names.push_back(v);
    }
  AlphabetPtr al = make_alphabet(names);
  HopfPresentation H;
  H.tag = Construction::FreeProduct;
  H.alphabet = al;
  H.coproduct = GenMorphism{al, {al, al}, {}, false};
  H.counit = GenMorphism{al, {}, {}, false};
  bool all_S = std::all_of(parts.begin(), parts.end(), [](const HopfPresentation& h) { return h.antipode.has_value(); });
  if (all_S) H.antipode = GenMorphism{al, {al}, {}, true};
  for (size_t p = 0; p < parts.size(); ++p) {
    const auto& P = parts[p];
    H.name += (p ? " * " : "") + P.name;
    GenMorphism emb{P.alphabet, {al}, {}, false};
    for (int k : index[p]) emb.images.push_back(TensorPoly::from(NcPoly::gen(al, k)));
    for (const auto& r : P.relations) H.relations.push_back(emb.apply_plain(r));
    for (int g = 0; g < P.alphabet->size(); ++g) {
      H.coproduct.images.push_back(apply_factorwise({emb, emb}, P.coproduct.images[g]));
      H.counit.images.push_back(P.counit.images[g]);
      if (all_S) H.antipode->images.push_back(apply_factorwise({emb}, P.antipode->images[g]));
    }
  }
  H.check_structure();
  return H;
}

// ---- ideal chains ----

ChainCase parse_chain_case(const std::string& s) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  for (int k = 0; k < 6; ++k)
    if (s == names[k]) return static_cast<ChainCase>(k);
  throw Error(ErrorKind::InvalidArgument, "unknown case '" + s + "' (expected i..vi)");
}

const char* chain_case_name(ChainCase c) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return names[static_cast<int>(c)];
}

HopfPresentation chain_algebra(ChainCase c) {
  switch (c) {
    case ChainCase::I: return free_product({group_algebra_Z("x"), group_algebra_Z("y")});
    case ChainCase::II: return free_product({group_algebra_Z("x"), group_algebra_Z2("y")});
    case ChainCase::III: return free_product({polynomial_hopf("x"), group_algebra_Z("y")});
    case ChainCase::IV: return free_product({polynomial_hopf("x"), group_algebra_Z2("y")});
    case ChainCase::V: return free_product({polynomial_hopf("x"), polynomial_hopf("y")});
    case ChainCase::VI: return free_product({group_algebra_Z2("x"), group_algebra_Z2("y"), group_algebra_Z2("z")});
  }
  throw Error(ErrorKind::InvalidArgument, "bad case");
}

NcPoly chain_generator(ChainCase c, const AlphabetPtr& a, int k) {
  NcPoly x = NcPoly::gen(a, "x"), y = NcPoly::gen(a, "y");
  switch (c) {
    case ChainCase::I:
    case ChainCase::II:
    case ChainCase::IV: return y * power(x, k) * y + power(x, k);
    case ChainCase::III:
    case ChainCase::V: return x * power(y, k) * x;
    case ChainCase::VI: {
      NcPoly yz = power(y * NcPoly::gen(a, "z"), k);
      return x * yz * x + yz;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "bad case");
}

CertStatus ChainWitness::status() const {
  if (normal_form.is_zero()) return CertStatus::Failed;
  return exact ? CertStatus::Certified : CertStatus::NotReduced;
}

ChainWitness chain_witness(ChainCase c, int j, int d) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "j must be at least 1");
  if (d < 2 * j + 4)
    throw Error(ErrorKind::DegreeBoundTooSmall,
                "degree bound " + std::to_string(d) + " below 2j+4 = " + std::to_string(2 * j + 4));
  HopfPresentation H = chain_algebra(c);
  std::vector<NcPoly> rels = H.relations;
  for (int k = 1; k <= j; ++k) rels.push_back(chain_generator(c, H.alphabet, k));
  GBasis G = groebner_to_degree(rels, d, H.alphabet);
  NcPoly w = chain_generator(c, H.alphabet, j + 1);
  MembershipCertificate m = ideal_member(w, G);
  return {c, j, d, w, m.normal_form, m.exact};
}

// ---- Ore towers ----

OreVariant parse_ore_variant(const std::string& s) {
  for (OreVariant v : {OreVariant::OcGLJ2, OreVariant::GLS2D2q, OreVariant::GLS2J2})
    if (s == ore_variant_name(v)) return v;
  throw Error(ErrorKind::InvalidArgument, "unknown tower '" + s + "' (expected Oc-GL-J2, GL-S2-D2q or GL-S2-J2)");
}

const char* ore_variant_name(OreVariant v) {
  switch (v) {
    case OreVariant::OcGLJ2: return "Oc-GL-J2";
    case OreVariant::GLS2D2q: return "GL-S2-D2q";
    case OreVariant::GLS2J2: return "GL-S2-J2";
  }
  return "?";
}

std::vector<NcPoly> OreTowerData::relations(int upto_steps) const {
  std::vector<NcPoly> out;
  for (int s = 0; s < upto_steps && s < static_cast<int>(steps.size()); ++s) {
    const OreStep& st = steps[s];
    NcPoly x = NcPoly::gen(alphabet, st.letter);
    for (int y = 0; y < st.letter; ++y) out.push_back(x * NcPoly::gen(alphabet, y) - st.sigma[y] * x - st.delta[y]);
  }
  return out;
}

OreTowerData ore_tower_j2(OreVariant v) {
  OreTowerData T;
  T.variant = v;
  T.alphabet = make_alphabet({"b", "a", "d", "c"});
  std::optional<FieldSpec> f;
  if (v == OreVariant::GLS2D2q) f = FieldSpec::parse("Qt");
  auto P = [&](const std::string& s) { return parse_ncpoly(s, T.alphabet, f); };
  auto step = [&](int letter, std::vector<std::string> sg, std::vector<std::string> dl) {
    OreStep st{letter, {}, {}};
    for (const auto& s : sg) st.sigma.push_back(P(s));
    for (const auto& s : dl) st.delta.push_back(P(s));
    T.steps.push_back(st);
  };
  switch (v) {
    case OreVariant::OcGLJ2:
      step(1, {"b"}, {"b b"});
      step(2, {"b", "a - b"}, {"b b", "a b + b b"});
      step(3, {"b", "a + b", "b + d"}, {"b a + d b", "a a + b a - d a", "b a - d a + d d"});
      T.D = P("-c b + d a + d b");
      break;
    case OreVariant::GLS2J2:
      step(1, {"b"}, {"b b"});
      step(2, {"b", "a - b"}, {"-b b", "-a b + b b"});
      step(3, {"b", "a - b", "b + d"}, {"d b - b a", "-a a + b a + d a", "-b a - d a + d d"});
      T.D = P("-c b + d a + d b");
      break;
    case OreVariant::GLS2D2q:
      step(1, {"-q b"}, {"0"});
      step(2, {"-q b", "a"}, {"0", "0"});
      step(3, {"q^2 b", "-q a", "-q d"}, {"0", "0", "0"});
      T.D = P("a d + q b c");
      break;
  }
  return T;
}

namespace {

GenMorphism sigma_morphism(const OreTowerData& T, const OreStep& st) {
  GenMorphism s = GenMorphism::identity(T.alphabet);
  for (int y = 0; y < st.letter; ++y) s.images[y] = TensorPoly::from(st.sigma[y]);
  return s;
}

// delta(w1...wk) = sum_t sigma(w1..w_{t-1}) delta(w_t) w_{t+1}..w_k
NcPoly delta_apply(const OreTowerData& T, const OreStep& st, const GenMorphism& sigma, const NcPoly& p) {
  NcPoly out(T.alphabet);
  for (const auto& [w, c] : p.terms()) {
    for (size_t t = 0; t < w.size(); ++t) {
      int y = letter_at(w, t);
      if (y >= st.letter) throw Error(ErrorKind::InvalidArgument, "derivation applied outside its stage");
      NcPoly left = sigma.apply_plain(NcPoly::monomial(T.alphabet, w.substr(0, t)));
      NcPoly right = NcPoly::monomial(T.alphabet, w.substr(t + 1));
      out += c * (left * st.delta[y] * right);
    }
  }
  return out;
}

struct StatusTally {
  StatusTally(std::string n, int deg) : name(std::move(n)), d(deg) {}
  std::string name;
  int d;
  CertStatus worst = CertStatus::Certified;
  std::string detail;
  int total = 0;
  void add(const std::string& label, const MembershipCertificate& c) {
    ++total;
    CertStatus s = c.status();
    auto sev = [](CertStatus x) { return x == CertStatus::Certified ? 0 : x == CertStatus::NotReduced ? 1 : 2; };
    if (sev(s) > sev(worst)) {
      worst = s;
      detail = label + " has normal form " + c.normal_form.str();
    }
  }
  Check done() const { return {name, worst, d, detail.empty() ? std::to_string(total) + " elements reduced to 0" : detail}; }
};

}  // namespace

VerificationReport verify_ore(const OreTowerData& T, int d) {
  VerificationReport rep;
  for (size_t s = 0; s < T.steps.size(); ++s) {
    const OreStep& st = T.steps[s];
    std::string x = T.alphabet->name(st.letter);
    GBasis prior = groebner_to_degree(T.relations(static_cast<int>(s)), d, T.alphabet);
    GenMorphism sigma = sigma_morphism(T, st);
    StatusTally sg{"sigma-endomorphism(" + x + ")", d};
    StatusTally dl{"twisted-derivation(" + x + ")", d};
    for (const auto& r : T.relations(static_cast<int>(s))) {
      sg.add("sigma(" + r.str() + ")", ideal_member(sigma.apply_plain(r), prior));
      dl.add("delta(" + r.str() + ")", ideal_member(delta_apply(T, st, sigma, r), prior));
    }
    // Leibniz rule on generator pairs, read through the normal form of uv
    for (int u = 0; u < st.letter; ++u)
      for (int v = 0; v < st.letter; ++v) {
        NcPoly U = NcPoly::gen(T.alphabet, u), V = NcPoly::gen(T.alphabet, v);
        NcPoly lhs = delta_apply(T, st, sigma, prior.normal_form(U * V));
        NcPoly rhs = st.sigma[u] * st.delta[v] + st.delta[u] * V;
        dl.add("delta(" + U.str() + " " + V.str() + ")", ideal_member(lhs - rhs, prior));
      }
    rep.add(sg.done());
    rep.add(dl.done());
  }

  std::vector<NcPoly> tower = T.relations();
  GBasis G = groebner_to_degree(tower, d, T.alphabet);
  std::vector<long> h = hilbert_counts(G, d);
  Check pbw{"pbw-hilbert", CertStatus::Certified, d, ""};
  for (int k = 0; k <= d; ++k) {
    long want = static_cast<long>(k + 3) * (k + 2) * (k + 1) / 6;
    if (h[k] != want) {
      pbw.status = CertStatus::Failed;
      pbw.detail = "degree " + std::to_string(k) + " has " + std::to_string(h[k]) + " normal words, expected " + std::to_string(want);
      break;
    }
  }
  if (pbw.detail.empty()) pbw.detail = "normal word counts are C(k+3,3) for k <= " + std::to_string(d);
  rep.add(pbw);

  Matrix E = T.variant == OreVariant::GLS2D2q ? parse_matrix("[[0,1],[q,0]]", FieldSpec::parse("Qt")) : jordan_block(2);
  HopfPresentation H = build_named(E, T.variant == OreVariant::OcGLJ2 ? Named::OcGL : Named::GLS2);
  auto names = T.alphabet->names();
  names.push_back("D");
  AlphabetPtr ext = make_alphabet(names);
  std::vector<NcPoly> ours, theirs;
  for (const auto& r : tower) ours.push_back(rename_into(r, ext));
  ours.push_back(NcPoly::gen(ext, "D") - rename_into(T.D, ext));
  for (const auto& r : H.relations) {
    bool uses_Di = false;
    for (const auto& [w, c] : r.terms())
      for (size_t k = 0; k < w.size(); ++k)
        if (letter_at(w, k) == H.Di) uses_Di = true;
    if (!uses_Di) theirs.push_back(rename_into(r, ext));
  }
  IdealComparison cmp = compare_ideals(ours, theirs, d);
  StatusTally id{std::string("ideal-match(") + named_name(T.variant == OreVariant::OcGLJ2 ? Named::OcGL : Named::GLS2) + ")", d};
  for (const auto& [s, c] : cmp.left_in_right) id.add("tower relation " + s, c);
  for (const auto& [s, c] : cmp.right_in_left) id.add("named relation " + s, c);
  rep.add(id.done());
  return rep;
}

}  // namespace asreg
