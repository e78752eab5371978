#include "asreg/matrix.hpp"

#include <algorithm>

namespace asreg {

Matrix::Matrix(int rows, int cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(std::move(field)), a_(static_cast<size_t>(rows) * cols, Scalar(0)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix dimension");
}

Matrix Matrix::identity(int n, FieldSpec field) {
  Matrix m(n, n, std::move(field));
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, FieldSpec field) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, field);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorKind::SizeMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      if (!rows[i][j].belongs_to(field))
        throw Error(ErrorKind::FieldMismatch, "entry " + rows[i][j].str() + " is not in " + field.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::of(const std::vector<std::vector<Scalar>>& rows) {
  FieldSpec f;
  for (const auto& r : rows)
    for (const auto& x : r) f = f.join(x.minimal_field());
  return from_rows(rows, f);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::SizeMismatch, "matrix sum size mismatch");
  Matrix r(a.rows_, a.cols_, a.field_.join(b.field_));
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "matrix product size mismatch");
  Matrix r(a.rows_, b.cols_, a.field_.join(b.field_));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  r.field_ = a.field_.join(s.minimal_field());
  for (auto& x : r.a_) x = s * x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
  auto s = scalar_multiple_of_identity();
  return s && s->is_one();
}

std::optional<Scalar> Matrix::scalar_multiple_of_identity() const {
  if (!square() || rows_ == 0) return std::nullopt;
  Scalar s = (*this)(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? s : Scalar(0))) return std::nullopt;
  return s;
}

Matrix Matrix::pow(unsigned e) const {
  Matrix r = identity(rows_, field_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  int n = 0, m = 0;
  FieldSpec f;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
    f = f.join(b.field());
  }
  Matrix r(n, m, f);
  int oi = 0, oj = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) r(oi + i, oj + j) = b(i, j);
    oi += b.rows();
    oj += b.cols();
  }
  return r;
}

Matrix eval_poly(const UniPoly& p, const Matrix& M) {
  Matrix r(M.rows(), M.cols(), M.field());
  const auto& c = p.coeffs();
  Matrix I = Matrix::identity(M.rows(), M.field());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * M + *it * I;
  return r;
}

Matrix rref(const Matrix& M, std::vector<int>* pivots) {
  Matrix A = M;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int p = -1;
    for (int i = r; i < A.rows(); ++i)
      if (!A(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < A.cols(); ++j) std::swap(A(p, j), A(r, j));
    Scalar inv = A(r, c).inverse();
    for (int j = c; j < A.cols(); ++j) A(r, j) = A(r, j) * inv;
    for (int i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c).is_zero()) continue;
      Scalar f = A(i, c);
      for (int j = c; j < A.cols(); ++j)
        if (!A(r, j).is_zero()) A(i, j) -= f * A(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return A;
}

int rank(const Matrix& M) {
  std::vector<int> piv;
  rref(M, &piv);
  return static_cast<int>(piv.size());
}

Scalar determinant(const Matrix& M) {
  if (!M.square()) throw Error(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
  Matrix A = M;
  int n = A.rows();
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!A(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      det = -det;
    }
    det *= A(c, c);
    Scalar inv = A(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (A(i, c).is_zero()) continue;
      Scalar f = A(i, c) * inv;
      for (int j = c; j < n; ++j) A(i, j) -= f * A(c, j);
    }
  }
  return det;
}

Matrix mat_inverse(const Matrix& M) {
  if (!M.square()) throw Error(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  int n = M.rows();
  Matrix aug(n, 2 * n, M.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = M(i, j);
    aug(i, n + i) = Scalar(1);
  }
  std::vector<int> piv;
  Matrix R = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
  Matrix inv(n, n, M.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = R(i, n + j);
  return inv;
}

std::vector<std::vector<Scalar>> null_space(const Matrix& M) {
  std::vector<int> piv;
  Matrix R = rref(M, &piv);
  std::vector<bool> is_pivot(M.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(M.cols(), Scalar(0));
    v[f] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

UniPoly charpoly(const Matrix& M) {
  if (!M.square()) throw Error(ErrorKind::SizeMismatch, "characteristic polynomial of a non-square matrix");
  int n = M.rows();
  Matrix H = M;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (!H(i, j).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(p, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, p), H(r, j + 1));
    }
    Scalar inv = H(j + 1, j).inverse();
    for (int k = j + 2; k < n; ++k) {
      if (H(k, j).is_zero()) continue;
      Scalar u = H(k, j) * inv;
      for (int c = 0; c < n; ++c) H(k, c) -= u * H(j + 1, c);
      for (int r = 0; r < n; ++r) H(r, j + 1) += u * H(r, k);
    }
  }
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(Scalar(1));
  for (int m = 1; m <= n; ++m) {
    p[m] = UniPoly({-H(m - 1, m - 1), Scalar(1)}) * p[m - 1];
    Scalar prod(1);
    for (int i = m - 1; i >= 1; --i) {
      prod *= H(i, i - 1);
      if (prod.is_zero()) break;
      p[m] = p[m] - (H(i - 1, m - 1) * prod) * p[i - 1];
    }
  }
  return p[n];
}

UniPoly minpoly(const Matrix& M) {
  if (!M.square()) throw Error(ErrorKind::SizeMismatch, "minimal polynomial of a non-square matrix");
  int n = M.rows();
  UniPoly result = UniPoly::constant(Scalar(1));
  for (int j = 0; j < n; ++j) {
    // Krylov sequence of e_j with incremental elimination.
    std::vector<std::vector<Scalar>> basis, combos;
    std::vector<int> pivots;
    std::vector<Scalar> v(n, Scalar(0));
    v[j] = Scalar(1);
    for (int k = 0;; ++k) {
      std::vector<Scalar> w = v, c(k + 1, Scalar(0));
      c[k] = Scalar(1);
      for (size_t b = 0; b < basis.size(); ++b) {
        const Scalar& f = w[pivots[b]];
        if (f.is_zero()) continue;
        Scalar s = f / basis[b][pivots[b]];
        for (int i = 0; i < n; ++i)
          if (!basis[b][i].is_zero()) w[i] -= s * basis[b][i];
        for (size_t i = 0; i < combos[b].size(); ++i) c[i] -= s * combos[b][i];
      }
      int piv = -1;
      for (int i = 0; i < n; ++i)
        if (!w[i].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) {
        UniPoly local(std::move(c));
        result = exact_quotient(result * local, poly_gcd(result, local));
        break;
      }
      basis.push_back(std::move(w));
      combos.push_back(std::move(c));
      pivots.push_back(piv);
      std::vector<Scalar> nv(n, Scalar(0));
      for (int r = 0; r < n; ++r)
        for (int i = 0; i < n; ++i)
          if (!v[i].is_zero() && !M(r, i).is_zero()) nv[r] += M(r, i) * v[i];
      v = std::move(nv);
    }
  }
  result = result.monic();
  if (!eval_poly(result, M).is_zero())
    throw Error(ErrorKind::InternalInconsistency, "minimal polynomial fails to annihilate the matrix");
  return result;
}

SegreData segre_data(const Matrix& M) {
  int n = M.rows();
  SegreData out;
  for (const auto& f : factor_irreducible(charpoly(M), M.field())) {
    int deg = f.poly.degree();
    Matrix N = eval_poly(f.poly, M), Nk = Matrix::identity(n, M.field());
    std::vector<int> counts;  // blocks of size >= k, per root
    int prev = 0, total = 0;
    while (total < f.multiplicity) {
      Nk = Nk * N;
      int dk = n - rank(Nk);
      int inc = dk - prev;
      if (inc <= 0 || inc % deg)
        throw Error(ErrorKind::InternalInconsistency, "kernel growth of " + poly_str(f.poly) + " is inconsistent");
      counts.push_back(inc / deg);
      total += inc / deg;
      prev = dk;
    }
    if (total != f.multiplicity)
      throw Error(ErrorKind::InternalInconsistency, "Segre data does not match the multiplicity");
    SegreEntry e{f.poly, {}};
    for (size_t k = 0; k < counts.size(); ++k) {
      int exact = counts[k] - (k + 1 < counts.size() ? counts[k + 1] : 0);
      if (exact < 0) throw Error(ErrorKind::InternalInconsistency, "kernel dimensions are not concave");
      for (int r = 0; r < exact; ++r) e.sizes.push_back(static_cast<int>(k + 1));
    }
    std::sort(e.sizes.rbegin(), e.sizes.rend());
    out.push_back(std::move(e));
  }
  return out;
}

Matrix nakayama_matrix(const Matrix& E) { return -(mat_inverse(E) * E.transpose()); }

std::vector<Matrix> sylvester_kernel(const Matrix& P, const Matrix& Q) {
  if (!P.square() || !Q.square() || P.rows() != Q.rows())
    throw Error(ErrorKind::SizeMismatch, "Sylvester operator needs square matrices of equal size");
  int n = P.rows(), N = n * n;
  FieldSpec f = P.field().join(Q.field());
  Matrix A(N, N, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        A(i * n + j, k * n + j) += P(i, k);
        A(i * n + j, i * n + k) -= Q(k, j);
      }
  auto ns = null_space(A);
  if (ns.empty()) return {};
  Matrix B(static_cast<int>(ns.size()), N, f);
  for (size_t r = 0; r < ns.size(); ++r)
    for (int c = 0; c < N; ++c) B(static_cast<int>(r), c) = ns[r][c];
  Matrix R = rref(B);
  std::vector<Matrix> out;
  for (int r = 0; r < R.rows(); ++r) {
    Matrix m(n, n, f);
    for (int c = 0; c < N; ++c) m(c / n, c % n) = R(r, c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> centralizer_basis(const Matrix& X) { return sylvester_kernel(X, X); }

bool is_nonderogatory(const Matrix& X) { return minpoly(X).degree() == X.rows(); }

bool is_commutative_span(const std::vector<Matrix>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
  return true;
}

Matrix congruence_transform(const Matrix& E, const Matrix& P) {
  if (determinant(P).is_zero()) throw Error(ErrorKind::Singular, "congruence by a singular matrix");
  return P.transpose() * E * P;
}

Matrix lower_shift(int n) {
  Matrix m(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = Scalar(1);
  return m;
}

Matrix upper_shift(int n) {
  Matrix m(n, n);
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = Scalar(1);
  return m;
}

}  // namespace asreg
