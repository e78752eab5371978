#pragma once

// Hopf algebra presentations M(E), B(E), G(E,F), their named quantum groups
// and membership-certified verification of Hopf identities.

#include <optional>
#include <string>
#include <vector>

#include "asreg/groebner.hpp"
#include "asreg/matrix.hpp"

namespace asreg {

enum class Construction { M, B, G, OcGL, GLS2, SL, Quotient, NSymm, Smash, FreeProduct, Ore };
const char* construction_name(Construction c);
/// Accepts the names above in lower case as well ("oc-gl", "sl", ...).
Construction parse_construction(const std::string& s);

/// Square matrix of noncommutative polynomials, row-major.
struct PolyMatrix {
  int n = 0;
  std::vector<NcPoly> e;
  NcPoly& operator()(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const NcPoly& operator()(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
  PolyMatrix transpose() const;
};
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Matrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const Matrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
/// s * I with s a polynomial.
PolyMatrix scalar_poly_matrix(int n, const NcPoly& s);

struct HopfPresentation {
  Construction tag = Construction::B;
  std::string name;
  AlphabetPtr alphabet;
  std::vector<NcPoly> relations;
  GenMorphism coproduct;  // into the tensor square
  GenMorphism counit;     // into scalars
  std::optional<GenMorphism> antipode;

  // Matrix-coalgebra data; empty (n = 0) for presentations without it.
  PolyMatrix A;
  std::optional<Matrix> E;  // first argument of B(E) / G(E,F) / M(E)
  std::optional<Matrix> F;  // second argument of G(E,F)
  std::optional<Matrix> X;  // S^2(A) = X A X^-1
  int D = -1, Di = -1;      // letter indices, -1 if absent
  bool central_D = false;
  int m = 0;                // S^{2m} quotient order, 0 if none

  int n() const { return A.n; }
  NcPoly Dpoly() const;  // D, or 1 without D
  NcPoly Dinv() const;   // Di, or 1 without Di
  NcPoly gen(const std::string& name) const { return NcPoly::gen(alphabet, name); }

  /// Counit kills relations, coassociativity and counit axioms on generators,
  /// all exactly.  Raises InternalInconsistency otherwise.
  void check_structure() const;
};

/// Generator names: "a" (n = 1), a,b,c,d (n = 2), a11..ann otherwise.
std::vector<std::string> matrix_generator_names(int n);

HopfPresentation build_B(const Matrix& E);
HopfPresentation build_G(const Matrix& E, const Matrix& F);
/// Bialgebra M(E): A E^-1 A^T E = D I, D group-like without inverse.
HopfPresentation build_M(const Matrix& E);

enum class Named { OcGL, GLS2, SL, M };
Named parse_named(const std::string& s);
const char* named_name(Named w);
HopfPresentation build_named(const Matrix& E, Named which);

struct Check {
  std::string name;
  CertStatus status;
  int degree;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_certified() const;
  bool any_failed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void merge(const VerificationReport& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
};

/// Worst status over a batch of certificates; detail names the first offender.
Check combine(const std::string& name, const std::vector<std::pair<std::string, MembershipCertificate>>& certs, int d);

/// Entries of A E A^T - D E lie in the relation ideal (coaction on A(E)).
Check verify_comodule(const Matrix& E, const HopfPresentation& H, const GBasis& G);
Check verify_comodule(const Matrix& E, const HopfPresentation& H, int d);

/// Structure checks plus bialgebra compatibility, antipode well-definedness
/// and the antipode axiom on generators.
VerificationReport verify_hopf_axioms(const HopfPresentation& H, const GBasis& G);
VerificationReport verify_hopf_axioms(const HopfPresentation& H, int d);

enum class Identity { DCentral, Involutory, S2Conjugation };
Identity parse_identity(const std::string& s);
const char* identity_name(Identity w);
/// HypothesisNotMet when the construction does not fit the identity.
Check verify_identity(const HopfPresentation& H, Identity which, const GBasis& G);
Check verify_identity(const HopfPresentation& H, Identity which, int d);

/// Hopf axioms, the coaction on A(E) and the identity characteristic of the
/// construction (D-central, involutory, S2-conjugation; none for M).
VerificationReport verify_named(const Matrix& E, Named which, int d);

/// Appends the entries of X^m A - A X^m.  NonCentralCodeterminant unless D is
/// central (Oc-GL, SL).
HopfPresentation s2m_quotient(const HopfPresentation& H, int m);

/// Solves the degree-one relations among matrix generators, renames the
/// surviving coordinates a0, a1, ..., b0, ... and substitutes everywhere.
HopfPresentation linear_reduce(const HopfPresentation& H);

/// Interreduced relations of a presentation at their own degree.
std::vector<NcPoly> interreduced_relations(const HopfPresentation& H);

/// Each side's relations lie in the other's ideal.
struct IdealComparison {
  bool equal;
  std::vector<std::pair<std::string, MembershipCertificate>> left_in_right, right_in_left;
};
IdealComparison compare_ideals(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b, int d);

std::string presentation_text(const HopfPresentation& H);

}  // namespace asreg
