#include "asreg/ncpoly.hpp"

namespace asreg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > 255) throw Error(ErrorKind::InvalidArgument, "alphabet too large");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate generator name '" + names_[i] + "'");
  }
}

int Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::string Alphabet::word_str(const Word& w) const {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += names_[letter_at(w, k)];
  }
  return out;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b || !a || !b) return true;
  return *a == *b;
}

static const AlphabetPtr& pick(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw Error(ErrorKind::AlphabetMismatch, "polynomials over different alphabets");
  return a ? a : b;
}

NcPoly NcPoly::constant(AlphabetPtr a, const Scalar& c) { return monomial(std::move(a), Word(), c); }

NcPoly NcPoly::gen(AlphabetPtr a, int i) {
  if (i < 0 || i >= a->size()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return monomial(std::move(a), letter(i));
}

NcPoly NcPoly::gen(AlphabetPtr a, const std::string& name) {
  int i = a->index(name);
  if (i < 0) throw Error(ErrorKind::AlphabetMismatch, "unknown generator '" + name + "'");
  return monomial(std::move(a), letter(i));
}

NcPoly NcPoly::monomial(AlphabetPtr a, const Word& w, const Scalar& c) {
  NcPoly p(std::move(a));
  p.add_term(w, c);
  return p;
}

bool NcPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  return t_.begin()->first.size() == t_.rbegin()->first.size();
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NcPoly NcPoly::monic() const {
  if (t_.empty()) return *this;
  Scalar inv = lead_coeff().inverse();
  return inv * *this;
}

NcPoly& NcPoly::operator+=(const NcPoly& b) {
  alpha_ = pick(alpha_, b.alpha_);
  for (const auto& [w, c] : b.t_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b) {
  alpha_ = pick(alpha_, b.alpha_);
  for (const auto& [w, c] : b.t_) add_term(w, -c);
  return *this;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  r += b;
  return r;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  r -= b;
  return r;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(alpha_);
  for (const auto& [w, c] : t_) r.t_.emplace_hint(r.t_.end(), w, -c);
  return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly r(pick(a.alpha_, b.alpha_));
  for (const auto& [u, c] : a.t_)
    for (const auto& [v, d] : b.t_) r.add_term(u + v, c * d);
  return r;
}

NcPoly operator*(const Scalar& s, const NcPoly& a) {
  NcPoly r(a.alpha_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.t_) r.t_.emplace_hint(r.t_.end(), w, s * c);
  return r;
}

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

// Sign-aware rendering of one term; `first` suppresses a leading " + ".
static std::string term_str(const Scalar& c, const std::string& word, bool first) {
  std::string s = c.str();
  bool neg = false;
  std::string mag = s;
  bool simple = s.find_first_of("+-()", 1) == std::string::npos && s.find(' ') == std::string::npos;
  if (simple && s[0] == '-') {
    neg = true;
    mag = s.substr(1);
  }
  if (!simple) mag = "(" + s + ")";
  std::string body;
  if (word.empty())
    body = mag;
  else if (mag == "1")
    body = word;
  else
    body = mag + " * " + word;
  if (first) return (neg ? "-" : "") + body;
  return (neg ? " - " : " + ") + body;
}

std::string NcPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string w = alpha_ ? alpha_->word_str(it->first) : std::string();
    out += term_str(it->second, w, first);
    first = false;
  }
  return out;
}

// ---- tensors ----

TensorPoly TensorPoly::one(std::vector<AlphabetPtr> factors) {
  TensorPoly r(factors);
  r.add_term(Key(factors.size()), Scalar(1));
  return r;
}

TensorPoly TensorPoly::pure(const std::vector<NcPoly>& parts) {
  std::vector<AlphabetPtr> al;
  for (const auto& p : parts) al.push_back(p.alphabet());
  TensorPoly r = one(al);
  for (size_t i = 0; i < parts.size(); ++i) {
    TensorPoly next(al);
    for (const auto& [k, c] : r.t_)
      for (const auto& [w, d] : parts[i].terms()) {
        Key nk = k;
        nk[i] = w;
        next.add_term(nk, c * d);
      }
    r = std::move(next);
  }
  return r;
}

TensorPoly TensorPoly::from(const NcPoly& p) { return pure({p}); }

void TensorPoly::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(k.size()) != arity()) throw Error(ErrorKind::SizeMismatch, "tensor arity mismatch");
  auto [it, inserted] = t_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

NcPoly TensorPoly::to_poly() const {
  if (arity() != 1) throw Error(ErrorKind::SizeMismatch, "tensor is not of arity 1");
  NcPoly p(alphas_[0]);
  for (const auto& [k, c] : t_) p.add_term(k[0], c);
  return p;
}

Scalar TensorPoly::to_scalar() const {
  if (arity() != 0) throw Error(ErrorKind::SizeMismatch, "tensor is not of arity 0");
  return t_.empty() ? Scalar(0) : t_.begin()->second;
}

static std::vector<AlphabetPtr> pick_all(const std::vector<AlphabetPtr>& a, const std::vector<AlphabetPtr>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "tensor arity mismatch");
  std::vector<AlphabetPtr> r;
  for (size_t i = 0; i < a.size(); ++i) r.push_back(pick(a[i], b[i]));
  return r;
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r = a;
  r.alphas_ = pick_all(a.alphas_, b.alphas_);
  for (const auto& [k, c] : b.t_) r.add_term(k, c);
  return r;
}

TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r = a;
  r.alphas_ = pick_all(a.alphas_, b.alphas_);
  for (const auto& [k, c] : b.t_) r.add_term(k, -c);
  return r;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly r(pick_all(a.alphas_, b.alphas_));
  for (const auto& [u, c] : a.t_)
    for (const auto& [v, d] : b.t_) {
      TensorPoly::Key k(u.size());
      for (size_t i = 0; i < u.size(); ++i) k[i] = u[i] + v[i];
      r.add_term(k, c * d);
    }
  return r;
}

TensorPoly operator*(const Scalar& s, const TensorPoly& a) {
  TensorPoly r(a.alphas_);
  for (const auto& [k, c] : a.t_) r.add_term(k, s * c);
  return r;
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) { return a * b; }

std::string TensorPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string w;
    for (size_t i = 0; i < it->first.size(); ++i) {
      if (i) w += " ⊗ ";
      std::string f = alphas_[i] ? alphas_[i]->word_str(it->first[i]) : std::string();
      w += f.empty() ? "1" : f;
    }
    out += term_str(it->second, w, first);
    first = false;
  }
  return out;
}

// ---- morphisms ----

GenMorphism GenMorphism::identity(const AlphabetPtr& a) {
  GenMorphism f{a, {a}, {}, false};
  for (int i = 0; i < a->size(); ++i) f.images.push_back(TensorPoly::from(NcPoly::gen(a, i)));
  return f;
}

TensorPoly GenMorphism::apply(const NcPoly& p) const {
  if (!same_alphabet(source, p.alphabet())) throw Error(ErrorKind::AlphabetMismatch, "morphism applied off its source");
  if (static_cast<int>(images.size()) != source->size())
    throw Error(ErrorKind::InternalInconsistency, "morphism is missing generator images");
  TensorPoly r(target);
  for (const auto& [w, c] : p.terms()) {
    TensorPoly m = TensorPoly::one(target);
    for (size_t k = 0; k < w.size(); ++k) {
      size_t pos = anti ? w.size() - 1 - k : k;
      m = m * images[letter_at(w, pos)];
      if (m.is_zero()) break;
    }
    r = r + c * m;
  }
  return r;
}

TensorPoly GenMorphism::apply(const TensorPoly& p) const { return apply(p.to_poly()); }

NcPoly GenMorphism::apply_plain(const NcPoly& p) const { return apply(p).to_poly(); }

Scalar GenMorphism::apply_scalar(const NcPoly& p) const { return apply(p).to_scalar(); }

TensorPoly apply_morphism(const GenMorphism& f, const NcPoly& p) { return f.apply(p); }

TensorPoly apply_factorwise(const std::vector<GenMorphism>& fs, const TensorPoly& x) {
  if (static_cast<int>(fs.size()) != x.arity()) throw Error(ErrorKind::SizeMismatch, "one morphism per tensor factor");
  std::vector<AlphabetPtr> target;
  for (const auto& f : fs) target.insert(target.end(), f.target.begin(), f.target.end());
  TensorPoly r(target);
  for (const auto& [k, c] : x.terms()) {
    // Outer product of the factor images.
    std::map<TensorPoly::Key, Scalar> acc{{TensorPoly::Key(), c}};
    for (size_t i = 0; i < fs.size(); ++i) {
      TensorPoly img = fs[i].apply(NcPoly::monomial(x.alphabets()[i], k[i]));
      std::map<TensorPoly::Key, Scalar> next;
      for (const auto& [a, ca] : acc)
        for (const auto& [b, cb] : img.terms()) {
          TensorPoly::Key nk = a;
          nk.insert(nk.end(), b.begin(), b.end());
          next[nk] += ca * cb;
        }
      acc = std::move(next);
    }
    for (const auto& [nk, v] : acc) r.add_term(nk, v);
  }
  return r;
}

NcPoly multiply_out(const TensorPoly& x) {
  if (x.arity() != 2) throw Error(ErrorKind::SizeMismatch, "multiplication needs an arity-2 tensor");
  NcPoly r(pick(x.alphabets()[0], x.alphabets()[1]));
  for (const auto& [k, c] : x.terms()) r.add_term(k[0] + k[1], c);
  return r;
}

}  // namespace asreg
