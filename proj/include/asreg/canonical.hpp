#pragma once

#include <string>
#include <vector>

#include "asreg/matrix.hpp"

namespace asreg {

/// An exact scalar, or an irreducible minimal polynomial standing for any
/// of its roots.
struct AlgebraicScalar {
  std::optional<Scalar> exact;
  UniPoly minpoly;  // used when !exact

  static AlgebraicScalar of(const Scalar& s) { return {s, {}}; }
  static AlgebraicScalar root_of(const UniPoly& p) { return {std::nullopt, p.monic()}; }
  bool is_exact() const { return exact.has_value(); }
  std::string str() const;
  friend bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b);
};

struct Summand {
  enum class Type { Jordan, DoubleQuantum };
  Type type = Type::Jordan;
  int size = 1;  // n for Jordan(n), r for DoubleQuantum(r, q)
  AlgebraicScalar q;

  static Summand jordan(int n) { return {Type::Jordan, n, {}}; }
  /// q is replaced by its canonical representative among q and 1/q.
  static Summand double_quantum(int r, const AlgebraicScalar& q);
  int dimension() const { return type == Type::Jordan ? size : 2 * size; }
  std::string str() const;
  friend bool operator==(const Summand& a, const Summand& b);
};

struct CanonicalDecomposition {
  std::vector<Summand> summands;  // sorted
  int n = 0;

  /// Sorts summands (Jordan descending, then DoubleQuantum descending by
  /// (r, representative)) and recomputes n.
  void normalize();
  std::string str() const;
  friend bool operator==(const CanonicalDecomposition& a, const CanonicalDecomposition& b) {
    return a.n == b.n && a.summands == b.summands;
  }
};

Matrix jordan_block(int n, FieldSpec field = {});
Matrix b_block(int r, const Scalar& q, FieldSpec field = {});
Matrix double_quantum_block(int r, const Scalar& q, FieldSpec field = {});

/// Block diagonal of the summands in sorted order.
Matrix canonical_matrix(const CanonicalDecomposition& d, FieldSpec field = {});

CanonicalDecomposition canonical_decomposition(const Matrix& E);
bool are_congruent(const Matrix& E, const Matrix& E2);

/// Monic x^deg p(1/x) / p(0).
UniPoly reciprocal(const UniPoly& p);

/// Smaller text form among q and 1/q.
Scalar canonical_q(const Scalar& q);

}  // namespace asreg
