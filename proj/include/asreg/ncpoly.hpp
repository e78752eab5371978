#pragma once

// Free associative algebras: words, polynomials, tensor powers and
// generator-defined (anti)homomorphisms.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "asreg/scalar.hpp"

namespace asreg {

/// A word is a string of letter indices.  Comparison is degree-lexicographic.
using Word = std::string;

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Word letter(int i) { return Word(1, static_cast<char>(static_cast<unsigned char>(i))); }
inline int letter_at(const Word& w, size_t k) { return static_cast<unsigned char>(w[k]); }

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;  // -1 if absent
  std::string word_str(const Word& w) const;
  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
AlphabetPtr make_alphabet(std::vector<std::string> names);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NcPoly() = default;
  explicit NcPoly(AlphabetPtr a) : alpha_(std::move(a)) {}
  static NcPoly constant(AlphabetPtr a, const Scalar& c);
  static NcPoly gen(AlphabetPtr a, int i);
  static NcPoly gen(AlphabetPtr a, const std::string& name);
  static NcPoly monomial(AlphabetPtr a, const Word& w, const Scalar& c = Scalar(1));

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
  const Word& lead_word() const { return t_.rbegin()->first; }
  const Scalar& lead_coeff() const { return t_.rbegin()->second; }
  bool is_homogeneous() const;
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  NcPoly monic() const;

  friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
  NcPoly operator-() const;
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& s, const NcPoly& a);
  NcPoly& operator+=(const NcPoly& b);
  NcPoly& operator-=(const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  /// Terms "coeff * w1 w2" joined by + and -, leading word first.
  std::string str() const;

 private:
  AlphabetPtr alpha_;
  Terms t_;
};

NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
/// Commutator ab - ba.
NcPoly commutator(const NcPoly& a, const NcPoly& b);

/// Element of a k-fold tensor product of free algebras (k = 0 gives scalars).
class TensorPoly {
 public:
  using Key = std::vector<Word>;
  using Terms = std::map<Key, Scalar>;

  TensorPoly() = default;
  explicit TensorPoly(std::vector<AlphabetPtr> factors) : alphas_(std::move(factors)) {}
  static TensorPoly one(std::vector<AlphabetPtr> factors);
  static TensorPoly pure(const std::vector<NcPoly>& parts);  // p1 ⊗ p2 ⊗ ...
  static TensorPoly from(const NcPoly& p);                   // arity 1

  int arity() const { return static_cast<int>(alphas_.size()); }
  const std::vector<AlphabetPtr>& alphabets() const { return alphas_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Key& k, const Scalar& c);
  NcPoly to_poly() const;  // arity 1
  Scalar to_scalar() const;  // arity 0

  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const Scalar& s, const TensorPoly& a);
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  std::vector<AlphabetPtr> alphas_;
  Terms t_;
};

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);

/// Algebra map (or anti-map) from the free algebra on `source` into a
/// tensor power, fixed by generator images.
struct GenMorphism {
  AlphabetPtr source;
  std::vector<AlphabetPtr> target;  // factors of the target tensor power
  std::vector<TensorPoly> images;   // one per source letter
  bool anti = false;

  static GenMorphism identity(const AlphabetPtr& a);
  TensorPoly apply(const NcPoly& p) const;
  TensorPoly apply(const TensorPoly& p) const;  // arity-1 input
  NcPoly apply_plain(const NcPoly& p) const;    // arity-1 target
  Scalar apply_scalar(const NcPoly& p) const;   // arity-0 target
};

TensorPoly apply_morphism(const GenMorphism& f, const NcPoly& p);

/// f1 ⊗ f2 ⊗ ... applied factorwise; the result arity is the sum of the
/// target arities.
TensorPoly apply_factorwise(const std::vector<GenMorphism>& fs, const TensorPoly& x);

/// Multiplication map A ⊗ A -> A.
NcPoly multiply_out(const TensorPoly& x);

}  // namespace asreg
