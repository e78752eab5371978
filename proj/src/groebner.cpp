#include "asreg/groebner.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace asreg {

void LeadTrie::insert(const Word& w, int rule) {
  int node = 0;
  for (size_t k = 0; k < w.size(); ++k) {
    int& next = child_[node * width_ + letter_at(w, k)];
    if (next < 0) {
      next = static_cast<int>(term_.size());
      term_.push_back(-1);
      child_.resize(child_.size() + width_, -1);
    }
    node = child_[node * width_ + letter_at(w, k)];
  }
  term_[node] = rule;
}

void LeadTrie::erase(const Word& w) {
  int node = 0;
  for (size_t k = 0; k < w.size() && node >= 0; ++k) node = child_[node * width_ + letter_at(w, k)];
  if (node >= 0) term_[node] = -1;
}

int LeadTrie::match_at(const Word& w, size_t pos) const {
  int node = 0;
  for (size_t k = pos; k < w.size(); ++k) {
    node = child_[node * width_ + letter_at(w, k)];
    if (node < 0) return -1;
    if (term_[node] >= 0) return term_[node];
  }
  return -1;
}

std::pair<int, int> LeadTrie::find(const Word& w) const {
  if (width_ == 0) return {-1, -1};
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int r = match_at(w, pos);
    if (r >= 0) return {static_cast<int>(pos), r};
  }
  return {-1, -1};
}

int LeadTrie::suffix_match(const Word& w) const {
  if (width_ == 0) return -1;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int node = 0;
    for (size_t k = pos; k < w.size() && node >= 0; ++k) node = child_[node * width_ + letter_at(w, k)];
    if (node >= 0 && term_[node] >= 0) return term_[node];
  }
  return -1;
}

namespace {

using WorkMap = std::map<Word, Scalar, WordLess>;

void accumulate(WorkMap& m, Word w, const Scalar& c) {
  auto [it, inserted] = m.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

NcPoly reduce(const NcPoly& p, const LeadTrie& trie, const std::vector<NcPoly>& rules, const AlphabetPtr& alpha) {
  NcPoly out(alpha ? alpha : p.alphabet());
  WorkMap work(p.terms().begin(), p.terms().end());
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    auto [pos, r] = trie.find(w);
    if (pos < 0) {
      out.add_term(w, c);
      continue;
    }
    const NcPoly& rule = rules[r];
    const Word& lead = rule.lead_word();
    Word u = w.substr(0, pos), v = w.substr(pos + lead.size());
    for (const auto& [t, s] : rule.terms()) {
      if (t.size() == lead.size() && t == lead) continue;
      accumulate(work, u + t + v, -(c * s));
    }
  }
  return out;
}

}  // namespace

NcPoly GBasis::normal_form(const NcPoly& p) const {
  if (!same_alphabet(alpha_, p.alphabet())) throw Error(ErrorKind::AlphabetMismatch, "polynomial is not over the basis alphabet");
  if (unit_) return NcPoly(alpha_);
  return reduce(p, trie_, rules_, alpha_);
}

std::string GBasis::str() const {
  std::string out;
  for (const auto& r : rules_) {
    NcPoly lead = NcPoly::monomial(alpha_, r.lead_word());
    out += lead.str() + " -> " + (lead - r).str() + "\n";
  }
  return out;
}

GBasis groebner_to_degree(const std::vector<NcPoly>& relations, int d, AlphabetPtr alphabet) {
  for (const auto& r : relations)
    if (!alphabet) alphabet = r.alphabet();
  if (!alphabet) throw Error(ErrorKind::InvalidArgument, "no alphabet for the relations");
  GBasis G;
  G.alpha_ = alphabet;
  G.d_ = d;
  int maxdeg = 0;
  for (const auto& r : relations) {
    if (!same_alphabet(alphabet, r.alphabet())) throw Error(ErrorKind::AlphabetMismatch, "relation over a different alphabet");
    maxdeg = std::max(maxdeg, r.degree());
    if (!r.is_homogeneous()) G.homogeneous_ = false;
    G.relations_.push_back(NcPoly(alphabet) + r);
  }
  if (d < maxdeg)
    throw Error(ErrorKind::DegreeBoundTooSmall, "degree bound " + std::to_string(d) + " is below relation degree " +
                                                    std::to_string(maxdeg));

  std::vector<NcPoly> polys;
  std::vector<bool> alive;
  LeadTrie trie(alphabet->size());
  using Pair = std::tuple<size_t, Word, int, int, int>;
  auto pair_less = [](const Pair& a, const Pair& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return WordLess()(std::get<1>(a), std::get<1>(b));
    return std::tie(std::get<2>(a), std::get<3>(a), std::get<4>(a)) < std::tie(std::get<2>(b), std::get<3>(b), std::get<4>(b));
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::deque<NcPoly> pending(G.relations_.begin(), G.relations_.end());

  auto add_overlaps = [&](int i, int j) {
    const Word& a = polys[i].lead_word();
    const Word& b = polys[j].lead_word();
    size_t m = std::min(a.size(), b.size());
    for (size_t k = 1; k < m; ++k) {
      if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
      size_t len = a.size() + b.size() - k;
      if (static_cast<int>(len) > d) {
        G.complete_ = false;
        continue;
      }
      queue.insert({len, a + b.substr(k), i, j, static_cast<int>(k)});
    }
  };

  while (!G.unit_) {
    while (!pending.empty() && !G.unit_) {
      NcPoly r = reduce(pending.front(), trie, polys, alphabet);
      pending.pop_front();
      if (r.is_zero()) continue;
      r = r.monic();
      if (r.degree() == 0) {
        G.unit_ = true;
        break;
      }
      int idx = static_cast<int>(polys.size());
      const Word lead = r.lead_word();
      for (int j = 0; j < idx; ++j) {
        if (!alive[j]) continue;
        const Word& lj = polys[j].lead_word();
        if (lj.size() >= lead.size() && lj.find(lead) != Word::npos) {
          alive[j] = false;
          trie.erase(lj);
          pending.push_back(polys[j]);
        }
      }
      polys.push_back(std::move(r));
      alive.push_back(true);
      trie.insert(lead, idx);
      for (int j = 0; j <= idx; ++j) {
        if (!alive[j]) continue;
        add_overlaps(idx, j);
        if (j != idx) add_overlaps(j, idx);
      }
    }
    if (G.unit_ || queue.empty()) break;
    auto [len, w, i, j, k] = *queue.begin();
    queue.erase(queue.begin());
    if (!alive[i] || !alive[j]) continue;
    const Word& a = polys[i].lead_word();
    const Word& b = polys[j].lead_word();
    NcPoly s = polys[i] * NcPoly::monomial(alphabet, b.substr(k)) -
               NcPoly::monomial(alphabet, a.substr(0, a.size() - k)) * polys[j];
    pending.push_back(std::move(s));
  }

  if (G.unit_) {
    G.rules_ = {NcPoly::constant(alphabet, Scalar(1))};
    G.trie_ = LeadTrie(alphabet->size());
    return G;
  }
  // Interreduce tails and sort.
  std::vector<NcPoly> kept;
  for (size_t i = 0; i < polys.size(); ++i)
    if (alive[i]) kept.push_back(polys[i]);
  LeadTrie full(alphabet->size());
  for (auto& r : kept) {
    NcPoly lead = NcPoly::monomial(alphabet, r.lead_word());
    r = lead - reduce(lead - r, trie, polys, alphabet);
  }
  std::sort(kept.begin(), kept.end(), [](const NcPoly& a, const NcPoly& b) { return WordLess()(a.lead_word(), b.lead_word()); });
  for (size_t i = 0; i < kept.size(); ++i) full.insert(kept[i].lead_word(), static_cast<int>(i));
  G.rules_ = std::move(kept);
  G.trie_ = std::move(full);
  return G;
}

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::NotReduced: return "not-reduced-at-degree-d";
    case CertStatus::Failed: return "failed";
  }
  return "?";
}

MembershipCertificate ideal_member(const NcPoly& p, const GBasis& G) {
  NcPoly nf = G.normal_form(p);
  return {nf.is_zero(), nf, G.degree_bound(), G.exact_at(p.degree())};
}

MembershipCertificate ideal_member_to_degree(const NcPoly& p, const std::vector<NcPoly>& relations, int d) {
  if (p.degree() > d)
    throw Error(ErrorKind::DegreeBoundTooSmall, "element of degree " + std::to_string(p.degree()) + " exceeds bound " +
                                                    std::to_string(d));
  AlphabetPtr a = p.alphabet();
  return ideal_member(p, groebner_to_degree(relations, d, a));
}

TensorPoly tensor_normal_form(const TensorPoly& x, const std::vector<const GBasis*>& bases) {
  if (static_cast<int>(bases.size()) != x.arity()) throw Error(ErrorKind::SizeMismatch, "one basis per tensor factor");
  std::vector<AlphabetPtr> al;
  for (const auto* g : bases) al.push_back(g->alphabet());
  std::vector<std::map<Word, NcPoly>> memo(bases.size());
  TensorPoly out(al);
  for (const auto& [k, c] : x.terms()) {
    std::map<TensorPoly::Key, Scalar> acc{{TensorPoly::Key(), c}};
    for (size_t i = 0; i < bases.size() && !acc.empty(); ++i) {
      auto it = memo[i].find(k[i]);
      if (it == memo[i].end())
        it = memo[i].emplace(k[i], bases[i]->normal_form(NcPoly::monomial(al[i], k[i]))).first;
      std::map<TensorPoly::Key, Scalar> next;
      for (const auto& [key, v] : acc)
        for (const auto& [w, s] : it->second.terms()) {
          TensorPoly::Key nk = key;
          nk.push_back(w);
          next[nk] += v * s;
        }
      acc = std::move(next);
    }
    for (const auto& [nk, v] : acc) out.add_term(nk, v);
  }
  return out;
}

TensorCertificate tensor_member(const TensorPoly& x, const std::vector<const GBasis*>& bases) {
  TensorPoly nf = tensor_normal_form(x, bases);
  int dmin = bases.empty() ? 0 : bases[0]->degree_bound();
  for (const auto* g : bases) dmin = std::min(dmin, g->degree_bound());
  bool exact = true;
  for (const auto& [k, c] : x.terms())
    for (size_t i = 0; i < k.size(); ++i)
      if (!bases[i]->exact_at(static_cast<int>(k[i].size()))) exact = false;
  return {nf.is_zero(), nf, dmin, exact};
}

std::vector<long> hilbert_counts(const GBasis& G, int d) {
  if (!G.homogeneous()) throw Error(ErrorKind::NotGraded, "relations are not homogeneous");
  if (d > G.degree_bound() && !G.complete())
    throw Error(ErrorKind::DegreeBoundTooSmall, "basis was truncated at degree " + std::to_string(G.degree_bound()));
  int A = G.alphabet()->size();
  LeadTrie trie(A);
  for (size_t i = 0; i < G.rules().size(); ++i) trie.insert(G.rules()[i].lead_word(), static_cast<int>(i));
  std::vector<long> counts{1};
  std::vector<Word> level{Word()};
  for (int k = 1; k <= d; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (int x = 0; x < A; ++x) {
        Word wx = w + letter(x);
        if (trie.suffix_match(wx) < 0) next.push_back(std::move(wx));
      }
    counts.push_back(static_cast<long>(next.size()));
    level = std::move(next);
  }
  return counts;
}

}  // namespace asreg
