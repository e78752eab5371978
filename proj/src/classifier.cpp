#include "asreg/classifier.hpp"

namespace asreg {

const char* cocom_hypothesis_name(CocomHypothesis h) {
  return h == CocomHypothesis::InvolutoryCentralD ? "involutory-central-D" : "power-of-D-central";
}

CocomHypothesis parse_cocom_hypothesis(const std::string& s) {
  if (s == "involutory-central-D" || s == "i") return CocomHypothesis::InvolutoryCentralD;
  if (s == "power-of-D-central" || s == "ii") return CocomHypothesis::PowerOfDCentral;
  throw Error(ErrorKind::InvalidArgument, "unknown hypothesis '" + s + "'");
}

NcPoly as_relation(const Matrix& E) {
  if (!E.square()) throw Error(ErrorKind::SizeMismatch, "E must be square");
  std::vector<std::string> names;
  for (int i = 1; i <= E.rows(); ++i) names.push_back("v" + std::to_string(i));
  AlphabetPtr V = make_alphabet(names);
  NcPoly r(V);
  for (int i = 0; i < E.rows(); ++i)
    for (int j = 0; j < E.cols(); ++j) r += E(i, j) * (NcPoly::gen(V, i) * NcPoly::gen(V, j));
  return r;
}

ClassificationReport classify(const Matrix& E) {
  if (!E.square()) throw Error(ErrorKind::SizeMismatch, "E must be square");
  if (E.rows() == 0 || determinant(E).is_zero()) throw Error(ErrorKind::NotASRegular, "E is singular");
  ClassificationReport r;
  r.n = E.rows();
  r.as_regular = r.n >= 2;
  r.decomposition = canonical_decomposition(E);
  r.nakayama = nakayama_matrix(E);
  const Matrix& N = r.nakayama;
  r.nakayama_charpoly = factor_irreducible(charpoly(N), N.field());
  r.r_nakayama = N.scalar_multiple_of_identity();
  r.calabi_yau = r.r_nakayama && r.r_nakayama->is_one();
  r.minus_one_nakayama = r.r_nakayama && (-*r.r_nakayama).is_one();
  r.central_nakayama = is_nonderogatory(N);

  bool ratio = false;
  const auto& F = r.nakayama_charpoly;
  for (size_t i = 0; i < F.size() && !ratio; ++i)
    for (size_t j = 0; j < F.size() && !ratio; ++j)
      ratio = has_root_of_unity_ratio(F[i].poly, F[j].poly, i == j);
  r.power_central_nakayama = r.central_nakayama && !ratio;
  r.noetherian_and_finite_gk = r.n == 2;
  for (CocomHypothesis h : {CocomHypothesis::InvolutoryCentralD, CocomHypothesis::PowerOfDCentral})
    r.cocommutativity.push_back(cocommutativity_note(r, h));
  return r;
}

CocomNote cocommutativity_note(const ClassificationReport& r, CocomHypothesis h) {
  bool ok = h == CocomHypothesis::InvolutoryCentralD ? r.central_nakayama : r.power_central_nakayama;
  std::string text = ok ? "conclusion applies: any inner-faithful coaction with finite-order antipode under this "
                          "hypothesis is cocommutative"
                        : "criteria not met: no conclusion";
  return {h, ok, text};
}

namespace {

// Roots of unity in Q, Q(i) and their rational function fields are the 4th roots.
bool root_of_unity(const Scalar& s) { return !s.is_zero() && s.pow(4).is_one(); }

}  // namespace

CrossCheck crosscheck_prop_cenNak(const Matrix& E) {
  ClassificationReport r = classify(E);
  int jordan = 0;
  std::vector<Scalar> qs;
  for (const auto& s : r.decomposition.summands) {
    if (s.type == Summand::Type::Jordan) {
      ++jordan;
      continue;
    }
    if (!s.q.is_exact())
      throw Error(ErrorKind::IrrationalParameter, "summand " + s.str() + " has a non-rational parameter");
    qs.push_back(*s.q.exact);
  }
  std::vector<Scalar> pm;
  for (const auto& q : qs) {
    pm.push_back(q);
    pm.push_back(q.inverse());
  }
  bool distinct = true;
  for (size_t i = 0; i < pm.size(); ++i)
    for (size_t j = i + 1; j < pm.size(); ++j)
      if (pm[i] == pm[j]) distinct = false;
  bool central = jordan <= 1 && distinct;

  // q_i^{+-e} distinct for all e: no q_i a root of unity, no ratio of two
  // different entries a root of unity
  bool power = central;
  for (const auto& q : qs)
    if (root_of_unity(q)) power = false;
  for (size_t i = 0; i < pm.size(); ++i)
    for (size_t j = i + 1; j < pm.size(); ++j)
      if (root_of_unity(pm[i] / pm[j])) power = false;

  CrossCheck c{r.central_nakayama, central, r.power_central_nakayama, power, false, ""};
  c.agrees = c.central_direct == c.central_criterion && c.power_direct == c.power_criterion;
  if (!c.agrees) {
    std::string eig;
    for (const auto& f : r.nakayama_charpoly) {
      if (!eig.empty()) eig += ", ";
      eig += "(" + poly_str(f.poly) + ")^" + std::to_string(f.multiplicity);
    }
    c.detail = "decomposition " + r.decomposition.str() + ": direct test gives central=" +
               (c.central_direct ? "true" : "false") + ", power-central=" + (c.power_direct ? "true" : "false") +
               "; summand criterion gives central=" + (c.central_criterion ? "true" : "false") +
               ", power-central=" + (c.power_criterion ? "true" : "false") + "; Nakayama charpoly " + eig;
  }
  return c;
}

}  // namespace asreg
