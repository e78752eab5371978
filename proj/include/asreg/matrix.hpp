#pragma once

#include <vector>

#include "asreg/factor.hpp"
#include "asreg/scalar.hpp"

namespace asreg {

/// Dense row-major matrix over the field `field`.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, FieldSpec field = {});
  static Matrix identity(int n, FieldSpec field = {});
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field = {});
  /// Same as from_rows with the field inferred from the entries.
  static Matrix of(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FieldSpec& field() const { return field_; }
  void set_field(const FieldSpec& f) { field_ = f; }

  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  bool is_identity() const;
  /// s with M = s * I, if any.
  std::optional<Scalar> scalar_multiple_of_identity() const;
  Matrix pow(unsigned e) const;

 private:
  int rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

/// Block diagonal sum.
Matrix direct_sum(const std::vector<Matrix>& blocks);

/// p(M) for square M.
Matrix eval_poly(const UniPoly& p, const Matrix& M);

Matrix mat_inverse(const Matrix& M);
Scalar determinant(const Matrix& M);
int rank(const Matrix& M);
/// Reduced row echelon form; pivots receives pivot columns.
Matrix rref(const Matrix& M, std::vector<int>* pivots = nullptr);
/// Basis of the right null space {v : M v = 0}, one vector per free column,
/// in reduced form (free coordinate 1, other free coordinates 0).
std::vector<std::vector<Scalar>> null_space(const Matrix& M);

UniPoly charpoly(const Matrix& M);
UniPoly minpoly(const Matrix& M);

struct SegreEntry {
  UniPoly factor;          // irreducible factor of the characteristic polynomial
  std::vector<int> sizes;  // Jordan block sizes at each root, descending
};
using SegreData = std::vector<SegreEntry>;

SegreData segre_data(const Matrix& M);

/// -E^{-1} E^T, the Nakayama matrix in row convention.
Matrix nakayama_matrix(const Matrix& E);

/// Basis of {M : P M = M Q}, linearized on row-major coordinates and
/// returned in reduced echelon form.
std::vector<Matrix> sylvester_kernel(const Matrix& P, const Matrix& Q);

std::vector<Matrix> centralizer_basis(const Matrix& X);
bool is_nonderogatory(const Matrix& X);
bool is_commutative_span(const std::vector<Matrix>& basis);

/// P^T E P.
Matrix congruence_transform(const Matrix& E, const Matrix& P);

/// Nilpotent shift matrices: L has ones on the subdiagonal, U on the superdiagonal.
Matrix lower_shift(int n);
Matrix upper_shift(int n);

}  // namespace asreg
