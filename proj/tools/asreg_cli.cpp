#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "asreg/classifier.hpp"
#include "asreg/json_io.hpp"
#include "asreg/parse.hpp"
#include "asreg/special.hpp"

using namespace asreg;

namespace {

struct Common {
  std::string field;
  int degree = 0;  // 0: default for the presentation
  std::string output = "json";
  unsigned seed = 0;
};

std::optional<FieldSpec> field_of(const Common& c) {
  if (c.field.empty()) return std::nullopt;
  return FieldSpec::parse(c.field);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A matrix argument is bracket text, JSON, or @file.  Bracket text without
// --field is read over Q; JSON may declare its own field.
Matrix read_matrix(const std::string& arg, const Common& c) {
  std::string text = !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg;
  std::optional<FieldSpec> f = field_of(c);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (!f && (k == std::string::npos || text[k] != '{')) f = FieldSpec::parse("Q");
  return parse_matrix(text, f);
}

int degree_for(const Common& c, const std::vector<NcPoly>& rels) { return c.degree > 0 ? c.degree : default_degree(rels); }

HopfPresentation build(const std::string& construction, const Matrix& E, const std::string& second, const Common& c) {
  std::string l;
  for (char ch : construction) l += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (l == "b") return build_B(E);
  if (l == "g") {
    if (second.empty()) throw Error(ErrorKind::InvalidArgument, "construction g needs --second F");
    return build_G(E, read_matrix(second, c));
  }
  return build_named(E, parse_named(construction));
}

void collect_statuses(const Json& j, bool& failed, bool& open) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "status" && it->is_string()) {
        if (*it == cert_status_name(CertStatus::Failed)) failed = true;
        if (*it == cert_status_name(CertStatus::NotReduced)) open = true;
      }
      collect_statuses(*it, failed, open);
    }
  } else if (j.is_array()) {
    for (const auto& x : j) collect_statuses(x, failed, open);
  }
}

int exit_code(const Json& report) {
  bool failed = false, open = false;
  collect_statuses(report, failed, open);
  return failed ? 1 : open ? 2 : 0;
}

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + inline_text(j[k]);
  return out + "]";
}

// Arrays of scalars (or of such arrays) stay on one line.
bool flat(const Json& j) {
  if (!j.is_structured()) return true;
  if (j.is_object()) return j.empty();
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_object() && flat(x); });
}

void text_out(std::ostream& os, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = j.is_object() ? it.key() + ":" : "-";
    if (flat(*it))
      os << indent << key << " " << inline_text(*it) << "\n";
    else {
      os << indent << key << "\n";
      text_out(os, *it, indent + "  ");
    }
  }
}

void emit(const Json& report, const Common& c) {
  if (c.output == "text")
    text_out(std::cout, report, "");
  else
    std::cout << report.dump(2) << "\n";
}

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Matrix random_invertible(std::mt19937& rng, int n, const FieldSpec& f) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Scalar(d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Schelter regular algebras of dimension 2 and their quantum groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--field", c.field, "Q, Qi, Qt or Qit")->check(CLI::IsMember({"Q", "Qi", "Qt", "Qit"}));
  app.add_option("--degree", c.degree, "degree bound for rewriting (default 2 * max relation degree + 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", c.seed, "seed for --scramble");

  std::string matA, matB, construction = "oc-gl", second, identity, presentation, chain = "v", variant = "GL-S2-J2",
                          what, group;
  int m = 1, j = 1, n = 5;
  bool scramble = false, reduce = false, do_verify = false;

  auto* canon = app.add_subcommand("canonicalize", "congruence canonical form of E");
  canon->add_option("E", matA, "matrix")->required();
  canon->add_flag("--scramble", scramble, "apply a random congruence P^T E P first");

  auto* cls = app.add_subcommand("classify", "classification report for A(E)");
  cls->add_option("E", matA, "matrix")->required();

  auto* cong = app.add_subcommand("congruent", "decide whether two forms are congruent");
  cong->add_option("E", matA, "matrix")->required();
  cong->add_option("F", matB, "matrix")->required();

  auto* pres = app.add_subcommand("present", "Hopf algebra presentation built from E");
  pres->add_option("E", matA, "matrix")->required();
  pres->add_option("--construction", construction, "oc-gl, gl-s2, sl, m, b or g");
  pres->add_option("--second", second, "F for the construction g");

  auto* ver = app.add_subcommand("verify", "membership-certified Hopf identities");
  ver->add_option("what", what, "hopf or identity")->required()->check(CLI::IsMember({"hopf", "identity"}));
  ver->add_option("E", matA, "matrix");
  ver->add_option("--construction", construction, "oc-gl, gl-s2, sl, m, b or g");
  ver->add_option("--second", second, "F for the construction g");
  ver->add_option("--identity", identity, "d-central, involutory or s2-conjugation");
  ver->add_option("--presentation", presentation, "presentation JSON file instead of E");

  auto* quo = app.add_subcommand("quotient", "S^2m-trivial quotient of a central-D construction");
  quo->add_option("E", matA, "matrix")->required();
  quo->add_option("--construction", construction, "oc-gl or sl");
  quo->add_option("--m", m, "order m >= 1")->check(CLI::PositiveNumber);
  quo->add_flag("--reduce", reduce, "solve the linear relations");
  quo->add_flag("--verify", do_verify, "verify the Hopf axioms of the result");

  auto* hil = app.add_subcommand("hilbert", "normal-word counts up to the degree bound");
  hil->add_option("E", matA, "matrix for A(E)");
  hil->add_option("--ore", variant, "count the Ore tower of this variant instead");

  auto* cw = app.add_subcommand("chain-witness", "strictness of I_j inside I_{j+1}");
  cw->add_option("--case", chain, "i .. vi")->required();
  cw->add_option("--j", j, "j >= 1")->check(CLI::PositiveNumber);

  auto* ns = app.add_subcommand("nsymm", "noncommutative symmetric functions on x1..xn");
  ns->add_option("--n", n, "number of generators")->check(CLI::PositiveNumber);
  ns->add_option("--smash", group, "z or z2")->check(CLI::IsMember({"z", "z2"}));

  auto* ore = app.add_subcommand("ore", "iterated Ore extension of the 2x2 quantum groups");
  ore->add_option("--variant", variant, "Oc-GL-J2, GL-S2-D2q or GL-S2-J2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json r = header("");
    r["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    std::cout << r.dump(2) << "\n";
    return 3;
  }

  Json r;
  try {
    if (*canon) {
      r = header("canonicalize");
      Matrix E = read_matrix(matA, c);
      r["input"] = to_json(E);
      if (scramble) {
        std::mt19937 rng(c.seed);
        Matrix P = random_invertible(rng, E.rows(), E.field());
        E = P.transpose() * E * P;
        r["seed"] = c.seed;
        r["scrambled"] = to_json(E);
      }
      CanonicalDecomposition d = canonical_decomposition(E);
      r["decomposition"] = to_json(d);
      r["summary"] = d.str();
      bool all_exact = std::all_of(d.summands.begin(), d.summands.end(), [](const Summand& s) { return s.q.is_exact() || s.type == Summand::Type::Jordan; });
      r["canonical_matrix"] = all_exact ? to_json(canonical_matrix(d, E.field())) : Json(nullptr);
    } else if (*cls) {
      r = header("classify");
      Matrix E = read_matrix(matA, c);
      r["input"] = to_json(E);
      r["report"] = to_json(classify(E));
      try {
        r["crosscheck"] = to_json(crosscheck_prop_cenNak(E));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IrrationalParameter) throw;
        r["crosscheck"] = {{"unavailable", e.what()}};
      }
    } else if (*cong) {
      r = header("congruent");
      Matrix E = read_matrix(matA, c), F = read_matrix(matB, c);
      r["left"] = to_json(canonical_decomposition(E));
      r["right"] = to_json(canonical_decomposition(F));
      r["congruent"] = are_congruent(E, F);
    } else if (*pres) {
      r = header("present");
      HopfPresentation H = build(construction, read_matrix(matA, c), second, c);
      r["presentation"] = to_json(H);
    } else if (*ver) {
      r = header("verify");
      HopfPresentation H;
      std::optional<Matrix> E;
      if (!presentation.empty()) {
        H = presentation_from_json(Json::parse(slurp(presentation)));
      } else {
        if (matA.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs E or --presentation");
        E = read_matrix(matA, c);
        H = build(construction, *E, second, c);
      }
      int d = degree_for(c, H.relations);
      r["construction"] = H.name;
      r["degree"] = d;
      VerificationReport rep;
      if (what == "identity") {
        if (identity.empty()) throw Error(ErrorKind::InvalidArgument, "verify identity needs --identity");
        rep.add(verify_identity(H, parse_identity(identity), d));
      } else if (E && presentation.empty() && construction != "b" && construction != "g") {
        rep = verify_named(*E, parse_named(construction), d);
      } else {
        GBasis G = groebner_to_degree(H.relations, d, H.alphabet);
        rep = verify_hopf_axioms(H, G);
        if (E) rep.add(verify_comodule(*E, H, G));
      }
      r["checks"] = to_json(rep);
      r["all_certified"] = rep.all_certified();
    } else if (*quo) {
      r = header("quotient");
      HopfPresentation Q = s2m_quotient(build(construction, read_matrix(matA, c), second, c), m);
      if (reduce) Q = linear_reduce(Q);
      r["presentation"] = to_json(Q);
      if (do_verify) {
        int d = degree_for(c, Q.relations);
        r["degree"] = d;
        r["checks"] = to_json(verify_hopf_axioms(Q, d));
      }
    } else if (*hil) {
      r = header("hilbert");
      std::vector<NcPoly> rels;
      AlphabetPtr al;
      if (hil->count("--ore")) {
        OreTowerData T = ore_tower_j2(parse_ore_variant(variant));
        rels = T.relations();
        al = T.alphabet;
        r["algebra"] = ore_variant_name(T.variant);
      } else {
        if (matA.empty()) throw Error(ErrorKind::InvalidArgument, "hilbert needs E or --ore");
        NcPoly rel = as_relation(read_matrix(matA, c));
        rels = {rel};
        al = rel.alphabet();
        r["algebra"] = "A(E)";
        r["relation"] = rel.str();
      }
      int d = degree_for(c, rels);
      GBasis G = groebner_to_degree(rels, d, al);
      r["degree"] = d;
      r["counts"] = hilbert_counts(G, d);
      r["status"] = cert_status_name(G.exact_at(d) ? CertStatus::Certified : CertStatus::NotReduced);
    } else if (*cw) {
      r = header("chain-witness");
      ChainCase k = parse_chain_case(chain);
      int d = c.degree > 0 ? c.degree : 2 * j + 6;
      r["witness"] = to_json(chain_witness(k, j, d));
    } else if (*ns) {
      r = header("nsymm");
      NSymmData N = nsymm(n);
      HopfPresentation H = group.empty() ? N.H : smash_with_group(N, group == "z" ? Group::Z : Group::Z2);
      r["presentation"] = to_json(H);
      Json p = Json::array();
      for (const auto& x : nsymm_power_sums(N)) p.push_back(x.str());
      r["power_sums"] = p;
      int d = c.degree > 0 ? c.degree : std::max(4, std::min(n + 1, 6));
      r["degree"] = d;
      r["checks"] = to_json(verify_hopf_axioms(H, d));
    } else if (*ore) {
      r = header("ore");
      OreTowerData T = ore_tower_j2(parse_ore_variant(variant));
      r["variant"] = ore_variant_name(T.variant);
      r["generators"] = T.alphabet->names();
      Json steps = Json::array();
      for (const auto& s : T.steps) {
        Json st;
        st["adjoin"] = T.alphabet->name(s.letter);
        Json sg, dl;
        for (int y = 0; y < s.letter; ++y) {
          sg[T.alphabet->name(y)] = s.sigma[y].str();
          dl[T.alphabet->name(y)] = s.delta[y].str();
        }
        st["sigma"] = sg;
        st["delta"] = dl;
        steps.push_back(st);
      }
      r["steps"] = steps;
      r["D"] = T.D.str();
      int d = c.degree > 0 ? c.degree : 6;
      r["degree"] = d;
      r["checks"] = to_json(verify_ore(T, d));
    }
  } catch (const Error& e) {
    Json err = header(r.contains("command") ? r["command"].get<std::string>() : "");
    err["error"] = {{"kind", error_name(e.kind())}, {"message", e.what()}};
    emit(err, c);
    return 3;
  } catch (const Json::exception& e) {
    Json err = header(r.contains("command") ? r["command"].get<std::string>() : "");
    err["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    emit(err, c);
    return 3;
  }
  emit(r, c);
  return exit_code(r);
}
