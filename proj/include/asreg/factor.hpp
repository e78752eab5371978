#pragma once

#include <optional>
#include <vector>

#include "asreg/scalar.hpp"

namespace asreg {

struct Factor {
  UniPoly poly;      // monic irreducible
  int multiplicity;  // >= 1
};

/// Irreducible factorization over `field`.  Factors come sorted by degree
/// and then by text form.  Over rational functions only polynomials that
/// split into linear pieces, quadratics, or whose leftover after removing
/// linear factors has degree <= 3 are handled (UnsupportedField otherwise).
std::vector<Factor> factor_irreducible(const UniPoly& p, const FieldSpec& field);
std::vector<Factor> factor_irreducible(const UniPoly& p);

/// Nth cyclotomic polynomial.
UniPoly cyclotomic(int n);

/// N with p = Phi_N, if any.
std::optional<int> cyclotomic_index(const UniPoly& p);

/// Res_y(p(y), p2(x y)), made monic: its roots are the ratios b/a over
/// roots a of p and b of p2.
UniPoly ratio_resultant(const UniPoly& p, const UniPoly& p2);

bool has_root_of_unity_ratio(const UniPoly& p, const UniPoly& p2, bool exclude_trivial);

/// Resultant over a field by the Euclidean algorithm.
Scalar resultant(const UniPoly& a, const UniPoly& b);

/// Euler's totient.
long totient(long n);

}  // namespace asreg
