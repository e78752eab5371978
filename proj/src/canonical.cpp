#include "asreg/canonical.hpp"

#include <algorithm>
#include <map>

namespace asreg {

std::string AlgebraicScalar::str() const { return exact ? exact->str() : poly_str(minpoly); }

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  return a.is_exact() ? *a.exact == *b.exact : a.minpoly == b.minpoly;
}

UniPoly reciprocal(const UniPoly& p) {
  if (p.coeff(0).is_zero()) throw Error(ErrorKind::ZeroRoot, "reciprocal of a polynomial with root 0");
  return p.reversed().monic();
}

Scalar canonical_q(const Scalar& q) {
  Scalar inv = q.inverse();
  return inv.str() < q.str() ? inv : q;
}

Summand Summand::double_quantum(int r, const AlgebraicScalar& q) {
  Summand s{Type::DoubleQuantum, r, q};
  if (q.is_exact()) {
    s.q = AlgebraicScalar::of(canonical_q(*q.exact));
  } else {
    UniPoly rec = reciprocal(q.minpoly);
    if (poly_str(rec) < poly_str(q.minpoly)) s.q = AlgebraicScalar::root_of(rec);
  }
  return s;
}

std::string Summand::str() const {
  if (type == Type::Jordan) return "J" + std::to_string(size);
  return "D" + std::to_string(2 * size) + "(" + (q.is_exact() ? q.str() : "root of " + q.str()) + ")";
}

bool operator==(const Summand& a, const Summand& b) {
  if (a.type != b.type || a.size != b.size) return false;
  return a.type == Summand::Type::Jordan || a.q == b.q;
}

void CanonicalDecomposition::normalize() {
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    if (a.type != b.type) return a.type == Summand::Type::Jordan;
    if (a.size != b.size) return a.size > b.size;
    if (a.type == Summand::Type::Jordan) return false;
    if (a.q.is_exact() != b.q.is_exact()) return a.q.is_exact();
    return a.q.str() > b.q.str();
  });
  n = 0;
  for (const auto& s : summands) n += s.dimension();
}

std::string CanonicalDecomposition::str() const {
  std::string out;
  for (const auto& s : summands) {
    if (!out.empty()) out += " + ";
    out += s.str();
  }
  return out;
}

Matrix jordan_block(int n, FieldSpec field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) {
    Scalar v((n - 1 - i) % 2 ? -1 : 1);
    m(i, n - 1 - i) = v;
    if (i > 0) m(i, n - i) = v;
  }
  return m;
}

Matrix b_block(int r, const Scalar& q, FieldSpec field) {
  Matrix m(r, r, field.join(q.minimal_field()));
  for (int i = 0; i < r; ++i) {
    m(i, i) = q;
    if (i + 1 < r) m(i, i + 1) = Scalar(1);
  }
  return m;
}

Matrix double_quantum_block(int r, const Scalar& q, FieldSpec field) {
  Matrix m(2 * r, 2 * r, field.join(q.minimal_field()));
  Matrix B = b_block(r, q, field);
  for (int i = 0; i < r; ++i) {
    m(i, r + i) = Scalar(1);
    for (int j = 0; j < r; ++j) m(r + i, j) = B(i, j);
  }
  return m;
}

Matrix canonical_matrix(const CanonicalDecomposition& d0, FieldSpec field) {
  CanonicalDecomposition d = d0;
  d.normalize();
  std::vector<Matrix> blocks;
  for (const auto& s : d.summands) {
    if (s.size < 1) throw Error(ErrorKind::InvalidArgument, "summand size must be positive");
    if (s.type == Summand::Type::Jordan) {
      blocks.push_back(jordan_block(s.size, field));
      continue;
    }
    if (!s.q.is_exact())
      throw Error(ErrorKind::IrrationalParameter, "cannot synthesize D" + std::to_string(2 * s.size) +
                                                      " for q given only by its minimal polynomial " + s.q.str());
    const Scalar& q = *s.q.exact;
    if (q.is_zero() || q == Scalar(s.size % 2 ? 1 : -1))
      throw Error(ErrorKind::InvalidArgument, "excluded parameter q = " + q.str() + " for r = " + std::to_string(s.size));
    blocks.push_back(double_quantum_block(s.size, q, field));
  }
  Matrix m = direct_sum(blocks);
  m.set_field(m.field().join(field));
  return m;
}

namespace {

std::map<int, int> size_counts(const std::vector<int>& sizes) {
  std::map<int, int> c;
  for (int s : sizes) ++c[s];
  return c;
}

bool same_segre(const SegreData& a, const SegreData& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].factor != b[i].factor || a[i].sizes != b[i].sizes) return false;
  return true;
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const Matrix& E) {
  if (!E.square()) throw Error(ErrorKind::SizeMismatch, "bilinear form matrix must be square");
  if (determinant(E).is_zero()) throw Error(ErrorKind::NotASRegular, "E is singular, so A(n,E) is not AS regular");
  Matrix N = nakayama_matrix(E);
  SegreData S = segre_data(N);
  CanonicalDecomposition d;
  std::vector<bool> done(S.size(), false);
  const Scalar one(1), minus_one(-1);
  for (size_t idx = 0; idx < S.size(); ++idx) {
    if (done[idx]) continue;
    done[idx] = true;
    const UniPoly& p = S[idx].factor;
    int deg = p.degree();
    auto counts = size_counts(S[idx].sizes);
    if (deg == 1) {
      Scalar lambda = -p.coeff(0);
      if (lambda == one || lambda == minus_one) {
        for (auto [k, c] : counts) {
          Scalar jordan_root = k % 2 ? minus_one : one;
          if (lambda == jordan_root) {
            for (int i = 0; i < c; ++i) d.summands.push_back(Summand::jordan(k));
          } else {
            if (c % 2)
              throw Error(ErrorKind::InternalInconsistency, "odd number of size-" + std::to_string(k) +
                                                                " blocks at eigenvalue " + lambda.str());
            for (int i = 0; i < c / 2; ++i)
              d.summands.push_back(Summand::double_quantum(k, AlgebraicScalar::of(-lambda)));
          }
        }
        continue;
      }
    }
    UniPoly pstar = reciprocal(p);
    int per_block;
    if (pstar == p) {
      if (deg % 2) throw Error(ErrorKind::InternalInconsistency, "self-reciprocal factor of odd degree " + poly_str(p));
      per_block = deg / 2;
    } else {
      size_t j = idx + 1;
      while (j < S.size() && S[j].factor != pstar) ++j;
      if (j == S.size())
        throw Error(ErrorKind::InternalInconsistency, "eigenvalue factor " + poly_str(p) + " has no reciprocal partner");
      if (S[j].sizes != S[idx].sizes)
        throw Error(ErrorKind::InternalInconsistency, "block sizes of " + poly_str(p) + " and its reciprocal differ");
      done[j] = true;
      per_block = deg;
    }
    AlgebraicScalar q = deg == 1 ? AlgebraicScalar::of(p.coeff(0)) : AlgebraicScalar::root_of(p.negate_var());
    for (auto [k, c] : counts)
      for (int i = 0; i < c * per_block; ++i) d.summands.push_back(Summand::double_quantum(k, q));
  }
  d.normalize();
  if (d.n != E.rows()) throw Error(ErrorKind::InternalInconsistency, "decomposition dimension mismatch");

  bool exact = std::all_of(d.summands.begin(), d.summands.end(), [](const Summand& s) {
    return s.type == Summand::Type::Jordan || s.q.is_exact();
  });
  if (exact) {
    Matrix C = canonical_matrix(d, E.field());
    if (!same_segre(segre_data(nakayama_matrix(C)), S))
      throw Error(ErrorKind::InternalInconsistency, "re-synthesized canonical form " + d.str() + " has different Segre data");
  }
  return d;
}

bool are_congruent(const Matrix& E, const Matrix& E2) {
  if (E.rows() != E2.rows() || E.cols() != E2.cols()) return false;
  return canonical_decomposition(E) == canonical_decomposition(E2);
}

}  // namespace asreg
