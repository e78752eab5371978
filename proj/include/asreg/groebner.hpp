#pragma once

// Degree-truncated two-sided Groebner bases in free algebras (deglex order).

#include <algorithm>
#include <string>
#include <vector>

#include "asreg/ncpoly.hpp"

namespace asreg {

/// Prefix tree over rule leading words; terminal = rule index or -1.
class LeadTrie {
 public:
  explicit LeadTrie(int alphabet_size = 0) : width_(alphabet_size), child_(alphabet_size, -1), term_(1, -1) {}
  void insert(const Word& w, int rule);
  void erase(const Word& w);
  /// Rule whose lead occurs in w starting at `pos`, shortest first; -1 if none.
  int match_at(const Word& w, size_t pos) const;
  /// Leftmost occurrence of any lead in w: (position, rule) or (-1, -1).
  std::pair<int, int> find(const Word& w) const;
  /// Rule whose lead is a suffix of w, or -1.
  int suffix_match(const Word& w) const;

 private:
  int width_;
  std::vector<int> child_;  // node * width + letter
  std::vector<int> term_;
};

class GBasis {
 public:
  GBasis() = default;

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<NcPoly>& relations() const { return relations_; }
  /// Monic rules sorted by leading word; rule p means lead(p) -> lead(p) - p.
  const std::vector<NcPoly>& rules() const { return rules_; }
  int degree_bound() const { return d_; }
  /// No overlap was skipped for exceeding the bound.
  bool complete() const { return complete_; }
  bool unit_ideal() const { return unit_; }
  bool homogeneous() const { return homogeneous_; }

  NcPoly normal_form(const NcPoly& p) const;
  bool is_reducible(const Word& w) const { return unit_ || trie_.find(w).first >= 0; }
  /// Negative membership answers are exact up to this degree.
  bool exact_at(int degree) const { return complete_ || (homogeneous_ && degree <= d_); }

  /// One rule per line, "lead -> tail".
  std::string str() const;

  friend GBasis groebner_to_degree(const std::vector<NcPoly>& relations, int d, AlphabetPtr alphabet);

 private:
  AlphabetPtr alpha_;
  std::vector<NcPoly> relations_;
  std::vector<NcPoly> rules_;
  LeadTrie trie_;
  int d_ = 0;
  bool complete_ = true;
  bool unit_ = false;
  bool homogeneous_ = true;
};

/// Raises DegreeBoundTooSmall if d is below the largest relation degree.
GBasis groebner_to_degree(const std::vector<NcPoly>& relations, int d, AlphabetPtr alphabet = nullptr);

inline int default_degree(const std::vector<NcPoly>& relations) {
  int m = 0;
  for (const auto& r : relations) m = std::max(m, r.degree());
  return 2 * m + 2;
}

enum class CertStatus { Certified, NotReduced, Failed };
const char* cert_status_name(CertStatus s);

/// A zero normal form is a proof of membership.  A nonzero one is only
/// "not reduced at degree d" unless the basis is exact at that degree.
struct MembershipCertificate {
  bool member;
  NcPoly normal_form;
  int degree_bound;
  bool exact;
  /// Certified, Failed (exact nonmember) or NotReduced.
  CertStatus status() const {
    return member ? CertStatus::Certified : exact ? CertStatus::Failed : CertStatus::NotReduced;
  }
};

MembershipCertificate ideal_member(const NcPoly& p, const GBasis& G);
MembershipCertificate ideal_member_to_degree(const NcPoly& p, const std::vector<NcPoly>& relations, int d);

/// Reduce every tensor factor by its basis; zero means x lies in
/// sum of F ⊗ ... ⊗ I ⊗ ... ⊗ F.
TensorPoly tensor_normal_form(const TensorPoly& x, const std::vector<const GBasis*>& bases);

struct TensorCertificate {
  bool member;
  TensorPoly normal_form;
  int degree_bound;
  bool exact;
  CertStatus status() const {
    return member ? CertStatus::Certified : exact ? CertStatus::Failed : CertStatus::NotReduced;
  }
};
TensorCertificate tensor_member(const TensorPoly& x, const std::vector<const GBasis*>& bases);

/// Number of irreducible words in each degree 0..d.  NotGraded if any
/// relation is inhomogeneous.
std::vector<long> hilbert_counts(const GBasis& G, int d);

}  // namespace asreg
