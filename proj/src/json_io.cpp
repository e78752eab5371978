#include "asreg/json_io.hpp"

#include <sstream>

#include "asreg/parse.hpp"

namespace asreg {

namespace {

std::string word_text(const Alphabet& a, const Word& w) {
  std::string s = a.word_str(w);
  return s.empty() ? "1" : s;
}

Word parse_word(const Alphabet& a, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int k = a.index(tok);
    if (k < 0) throw Error(ErrorKind::ParseError, "unknown generator '" + tok + "' in word '" + text + "'");
    w += letter(k);
  }
  return w;
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw Error(ErrorKind::ParseError, "expected a string, got " + j.dump());
}

Json status_json(CertStatus s) { return cert_status_name(s); }

}  // namespace

Json to_json(const Scalar& s, const FieldSpec& f) { return s.str(f.var); }

Json to_json(const Matrix& m) {
  Json j;
  j["field"] = m.field().name();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c), m.field()));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Matrix matrix_from_json(const Json& j) { return parse_matrix(j.dump()); }

Json to_json(const CanonicalDecomposition& d) {
  Json out = Json::array();
  for (const auto& s : d.summands) {
    Json e;
    if (s.type == Summand::Type::Jordan) {
      e["type"] = "jordan";
      e["n"] = s.size;
    } else {
      e["type"] = "dq";
      e["r"] = s.size;
      if (s.q.is_exact())
        e["q"] = s.q.exact->str();
      else
        e["q_minpoly"] = poly_str(s.q.minpoly);
    }
    out.push_back(e);
  }
  return out;
}

Json to_json(const HopfPresentation& H) {
  const Alphabet& a = *H.alphabet;
  Json j;
  j["construction"] = construction_name(H.tag);
  j["name"] = H.name;
  j["generators"] = a.names();
  Json rels = Json::array();
  for (const auto& r : H.relations) rels.push_back(r.str());
  j["relations"] = rels;
  Json co, eps, S;
  for (int g = 0; g < a.size(); ++g) {
    Json terms = Json::array();
    const auto& t = H.coproduct.images[g].terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      terms.push_back({it->second.str(), word_text(a, it->first[0]), word_text(a, it->first[1])});
    co[a.name(g)] = terms;
    eps[a.name(g)] = H.counit.images[g].to_scalar().str();
    if (H.antipode) S[a.name(g)] = H.antipode->images[g].to_poly().str();
  }
  j["coproduct"] = co;
  j["counit"] = eps;
  j["antipode"] = H.antipode ? S : Json(nullptr);
  j["grouplike_D"] = H.D >= 0 ? Json(a.name(H.D)) : Json(nullptr);
  j["grouplike_D_inverse"] = H.Di >= 0 ? Json(a.name(H.Di)) : Json(nullptr);
  j["central_D"] = H.central_D;
  j["s2m_order"] = H.m;
  if (H.E) j["E"] = to_json(*H.E);
  if (H.F) j["F"] = to_json(*H.F);
  return j;
}

HopfPresentation presentation_from_json(const Json& j) {
  HopfPresentation H;
  if (j.contains("construction")) H.tag = parse_construction(text_of(j["construction"]));
  if (j.contains("name")) H.name = text_of(j["name"]);
  std::vector<std::string> names;
  for (const auto& g : need(j, "generators")) names.push_back(text_of(g));
  H.alphabet = make_alphabet(names);
  const AlphabetPtr& al = H.alphabet;
  for (const auto& r : need(j, "relations")) H.relations.push_back(parse_ncpoly(text_of(r), al));

  H.coproduct = GenMorphism{al, {al, al}, {}, false};
  H.counit = GenMorphism{al, {}, {}, false};
  const Json& co = need(j, "coproduct");
  const Json& eps = need(j, "counit");
  const Json* S = j.contains("antipode") && !j["antipode"].is_null() ? &j["antipode"] : nullptr;
  std::vector<TensorPoly> s_images;
  for (const auto& name : names) {
    TensorPoly d({al, al});
    for (const auto& term : need(co, name.c_str())) {
      if (!term.is_array() || term.size() != 3) throw Error(ErrorKind::ParseError, "coproduct terms are [coefficient, left, right]");
      d.add_term({parse_word(*al, text_of(term[1])), parse_word(*al, text_of(term[2]))}, parse_scalar(text_of(term[0])));
    }
    H.coproduct.images.push_back(d);
    TensorPoly e(std::vector<AlphabetPtr>{});
    e.add_term({}, parse_scalar(text_of(need(eps, name.c_str()))));
    H.counit.images.push_back(e);
    if (S) s_images.push_back(TensorPoly::from(parse_ncpoly(text_of(need(*S, name.c_str())), al)));
  }
  if (S) H.antipode = GenMorphism{al, {al}, s_images, true};
  auto letter_of = [&](const char* key) {
    if (!j.contains(key) || j[key].is_null()) return -1;
    int k = al->index(text_of(j[key]));
    if (k < 0) throw Error(ErrorKind::ParseError, std::string(key) + " is not a generator");
    return k;
  };
  H.D = letter_of("grouplike_D");
  H.Di = letter_of("grouplike_D_inverse");
  if (j.contains("central_D")) H.central_D = j["central_D"].get<bool>();
  if (j.contains("s2m_order")) H.m = j["s2m_order"].get<int>();
  return H;
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = status_json(c.status);
  j["degree"] = c.degree;
  j["detail"] = c.detail;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return checks;
}

Json to_json(const MembershipCertificate& c) {
  Json j;
  j["status"] = status_json(c.status());
  j["member"] = c.member;
  j["normal_form"] = c.normal_form.str();
  j["degree_bound"] = c.degree_bound;
  j["exact"] = c.exact;
  return j;
}

Json to_json(const ClassificationReport& r) {
  const FieldSpec& f = r.nakayama.field();
  Json j;
  j["n"] = r.n;
  j["as_regular"] = r.as_regular;
  j["decomposition"] = to_json(r.decomposition);
  j["nakayama_matrix"] = to_json(r.nakayama);
  Json fac = Json::array();
  for (const auto& x : r.nakayama_charpoly) fac.push_back({{"factor", poly_str(x.poly, "x", f.var)}, {"multiplicity", x.multiplicity}});
  j["nakayama_charpoly"] = fac;
  j["r_nakayama"] = r.r_nakayama ? to_json(*r.r_nakayama, f) : Json(nullptr);
  j["calabi_yau"] = r.calabi_yau;
  j["minus_one_nakayama"] = r.minus_one_nakayama;
  j["central_nakayama"] = r.central_nakayama;
  j["power_central_nakayama"] = r.power_central_nakayama;
  j["noetherian_and_finite_gk"] = r.noetherian_and_finite_gk;
  Json notes = Json::array();
  for (const auto& c : r.cocommutativity)
    notes.push_back({{"hypothesis", cocom_hypothesis_name(c.hypothesis)}, {"applies", c.applies}, {"conclusion", c.conclusion}});
  j["cocommutativity"] = notes;
  return j;
}

Json to_json(const CrossCheck& c) {
  Json j;
  j["central_direct"] = c.central_direct;
  j["central_criterion"] = c.central_criterion;
  j["power_central_direct"] = c.power_direct;
  j["power_central_criterion"] = c.power_criterion;
  j["agrees"] = c.agrees;
  j["detail"] = c.detail;
  return j;
}

Json to_json(const ChainWitness& w) {
  Json j;
  j["case"] = chain_case_name(w.which);
  j["j"] = w.j;
  j["degree"] = w.d;
  j["generator"] = w.generator.str();
  j["witness_normal_form"] = w.normal_form.str();
  j["exact"] = w.exact;
  j["status"] = status_json(w.status());
  return j;
}

}  // namespace asreg
