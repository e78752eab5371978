#pragma once

// One-call structural report for the algebra A(E).

#include <optional>
#include <string>
#include <vector>

#include "asreg/canonical.hpp"
#include "asreg/factor.hpp"
#include "asreg/matrix.hpp"
#include "asreg/ncpoly.hpp"

namespace asreg {

enum class CocomHypothesis { InvolutoryCentralD, PowerOfDCentral };
const char* cocom_hypothesis_name(CocomHypothesis h);
CocomHypothesis parse_cocom_hypothesis(const std::string& s);

struct CocomNote {
  CocomHypothesis hypothesis;
  bool applies;
  std::string conclusion;
};

struct ClassificationReport {
  int n = 0;
  bool as_regular = false;
  CanonicalDecomposition decomposition;
  Matrix nakayama;
  std::vector<Factor> nakayama_charpoly;  // irreducible factors
  std::optional<Scalar> r_nakayama;       // set iff the Nakayama matrix is scalar
  bool calabi_yau = false;
  bool minus_one_nakayama = false;
  bool central_nakayama = false;
  bool power_central_nakayama = false;
  bool noetherian_and_finite_gk = false;
  std::vector<CocomNote> cocommutativity;
};

/// sum e_ij v_i v_j over v1..vn, the defining relation of A(E).
NcPoly as_relation(const Matrix& E);

/// NotASRegular if E is singular.  n = 1 is reported with as_regular = false.
ClassificationReport classify(const Matrix& E);

CocomNote cocommutativity_note(const ClassificationReport& r, CocomHypothesis h);

/// Summand-level criterion (at most one Jordan summand, distinct q^{+-1};
/// for powers: no q ratio or q itself a root of unity) against classify.
struct CrossCheck {
  bool central_direct, central_criterion;
  bool power_direct, power_criterion;
  bool agrees;
  std::string detail;
};
/// IrrationalParameter when a summand parameter is not an exact scalar.
CrossCheck crosscheck_prop_cenNak(const Matrix& E);

}  // namespace asreg
