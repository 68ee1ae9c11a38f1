// Two-sided ideals in the free algebra: presentations, normal forms against a
// rewriting basis, degree-truncated overlap completion, per-degree ideal
// dimensions, and essential generating sets extracted by leading-word echelon.
//
// Completion processes ambiguities in ascending deglex order of the ambient
// word.  Reduction always picks the lowest-index basis element whose leading
// word occurs leftmost.  Every leading word stays <= the truncation bound, so
// per-degree statements below the bound are exact for homogeneous input; an
// ambiguity skipped above the bound is recorded, and for homogeneous input it
// is discharged when no normal word of its ambient degree exists.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "k2ws/automaton.hpp"
#include "k2ws/linalg.hpp"
#include "k2ws/poly.hpp"

namespace k2ws {

template <ExactField F>
int default_bound(const std::vector<Polynomial<F>>& rels) {
  std::size_t md = 2;
  for (const auto& r : rels)
    if (!r.is_zero()) md = std::max(md, r.degree());
  return std::max(8, int(2 * md));
}

template <ExactField F>
struct Presentation {
  VariableSet vars;
  std::vector<Polynomial<F>> relations;
  int bound;
  bool homogeneous;

  static Presentation make(const F& f, VariableSet vars,
                           std::vector<Polynomial<F>> relations,
                           int bound = -1) {
    (void)f;
    if (bound < 0) bound = default_bound<F>(relations);
    bool homog = true;
    for (const auto& r : relations) {
      if (r.is_zero()) throw Error("zero relation in presentation");
      for (const auto& t : r.terms()) {
        if (t.word.is_one()) throw Error("relation has a constant term");
        for (Letter c : t.word.letters)
          if (c >= vars.size()) throw Error("relation uses an unknown variable");
      }
      if (!r.is_homogeneous()) homog = false;
      if (int(r.degree()) > bound)
        throw Error("truncation bound below a relation degree");
    }
    if (homog)
      for (const auto& r : relations)
        if (r.degree() < 2)
          throw Error("homogeneous relation of degree < 2");
    return {std::move(vars), std::move(relations), bound, homog};
  }
};

template <ExactField F>
struct GroebnerBasis {
  VariableSet vars;
  std::vector<Polynomial<F>> elements;  // monic, tails reduced, ascending leading word
  int bound = 0;
  int complete_below = 0;
  std::vector<int> pending_degrees;  // ambient degrees of unresolved ambiguities past the bound
  std::vector<std::string> notices;

  bool has_pending() const { return !pending_degrees.empty(); }

  std::vector<Word> leading_words() const {
    std::vector<Word> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.leading().word);
    return out;
  }
};

struct Overlap {
  enum class Kind { Overlap, Containment };
  Kind kind;
  Word ambient;
  std::size_t pos_u;  // start of u inside ambient
  std::size_t pos_w;  // start of w inside ambient
};

// Suffix-prefix overlaps of u against w (a nonempty proper suffix of u equals
// a nonempty proper prefix of w) plus containments of u strictly inside w.
inline std::vector<Overlap> overlaps(const Word& u, const Word& w) {
  std::vector<Overlap> out;
  for (std::size_t ell = 1; ell < u.degree() && ell < w.degree(); ++ell) {
    bool hit = true;
    for (std::size_t k = 0; k < ell; ++k)
      if (u.letters[u.degree() - ell + k] != w.letters[k]) {
        hit = false;
        break;
      }
    if (!hit) continue;
    Word ambient = u * subword(w, ell, w.degree() - ell);
    out.push_back({Overlap::Kind::Overlap, std::move(ambient),
                   0, u.degree() - ell});
  }
  if (u.degree() < w.degree())
    for (std::size_t p = 0; p + u.degree() <= w.degree(); ++p) {
      bool hit = true;
      for (std::size_t k = 0; k < u.degree(); ++k)
        if (w.letters[p + k] != u.letters[k]) {
          hit = false;
          break;
        }
      if (hit) out.push_back({Overlap::Kind::Containment, w, p, 0});
    }
  return out;
}

// Normal form of p against a list of rewriting rules.  At each step the
// deglex-largest reducible term is rewritten using the lowest-index rule
// whose leading word occurs leftmost in it.
template <ExactField F>
Polynomial<F> normal_form(const F& f, Polynomial<F> p,
                          const std::vector<Polynomial<F>>& basis) {
  std::vector<Term<F>> done;  // irreducible, collected in descending order
  while (!p.is_zero()) {
    const Term<F> t = p.leading();
    std::optional<std::pair<std::size_t, std::size_t>> hit;  // (pos, rule)
    for (std::size_t pos = 0; pos < t.word.degree() && !hit; ++pos)
      for (std::size_t gi = 0; gi < basis.size(); ++gi) {
        const Word& lw = basis[gi].leading().word;
        if (lw.degree() == 0 || pos + lw.degree() > t.word.degree()) continue;
        bool match = true;
        for (std::size_t k = 0; k < lw.degree(); ++k)
          if (t.word.letters[pos + k] != lw.letters[k]) {
            match = false;
            break;
          }
        if (match) {
          hit = {pos, gi};
          break;
        }
      }
    if (!hit) {
      done.push_back(t);
      p = Polynomial<F>::from_presorted(
          {p.terms().begin() + 1, p.terms().end()});
      continue;
    }
    auto [pos, gi] = *hit;
    const auto& g = basis[gi];
    const Word& lw = g.leading().word;
    Word u = subword(t.word, 0, pos);
    Word w = subword(t.word, pos + lw.degree(),
                     t.word.degree() - pos - lw.degree());
    auto c = f.div(t.coef, g.leading().coef);
    p = sub(f, p, scale(f, c, mul_word(f, u, g, w)));
  }
  return Polynomial<F>::from_presorted(std::move(done));
}

namespace detail {

template <ExactField F>
struct Completion {
  const F& f;
  const VariableSet& vars;
  int bound;

  struct Elem {
    Polynomial<F> poly;
    bool alive = true;
  };
  std::vector<Elem> elems;          // by id; dead entries keep their slot
  std::vector<std::uint32_t> alive; // ids in insertion order

  struct Amb {
    Word ambient;
    std::uint32_t id1, id2;
    std::uint8_t kind;  // 0 overlap, 1 containment
    std::uint32_t pos;  // pos_w for overlaps, pos_u for containments
  };
  struct AmbLess {
    bool operator()(const Amb& a, const Amb& b) const {
      auto c = deglex_cmp(a.ambient, b.ambient);
      if (c != 0) return c < 0;
      return std::tie(a.id1, a.id2, a.kind, a.pos) <
             std::tie(b.id1, b.id2, b.kind, b.pos);
    }
  };
  std::set<Amb, AmbLess> queue;
  std::vector<std::tuple<int, std::uint32_t, std::uint32_t>> skipped;
  std::vector<std::string> notices;

  std::vector<Polynomial<F>> alive_polys() const {
    std::vector<Polynomial<F>> out;
    for (auto id : alive) out.push_back(elems[id].poly);
    return out;
  }

  void queue_pair(std::uint32_t i, std::uint32_t j) {
    for (const auto& ov : overlaps(elems[i].poly.leading().word,
                                   elems[j].poly.leading().word)) {
      std::uint32_t pos =
          std::uint32_t(ov.kind == Overlap::Kind::Overlap ? ov.pos_w : ov.pos_u);
      if (int(ov.ambient.degree()) > bound)
        skipped.push_back({int(ov.ambient.degree()), i, j});
      else
        queue.insert({ov.ambient, i, j, ov.kind == Overlap::Kind::Overlap
                                            ? std::uint8_t(0)
                                            : std::uint8_t(1),
                      pos});
    }
  }

  void insert(Polynomial<F> r, bool from_input) {
    r = normal_form(f, std::move(r), alive_polys());
    if (r.is_zero()) {
      if (from_input)
        notices.push_back("a relation reduced to zero and was dropped");
      return;
    }
    r = monic(f, r);
    const Word lw = r.leading().word;
    // retire elements whose leading word became reducible
    std::vector<Polynomial<F>> requeue;
    for (std::size_t k = 0; k < alive.size();) {
      auto id = alive[k];
      const Word& other = elems[id].poly.leading().word;
      if (other != lw && is_factor(lw, other)) {
        elems[id].alive = false;
        requeue.push_back(std::move(elems[id].poly));
        alive.erase(alive.begin() + k);
        continue;
      }
      ++k;
    }
    auto nid = std::uint32_t(elems.size());
    elems.push_back({std::move(r), true});
    alive.push_back(nid);
    for (auto id : alive) {
      queue_pair(nid, id);
      if (id != nid) queue_pair(id, nid);
    }
    for (auto& q : requeue) insert(std::move(q), false);
  }

  void run(const std::vector<Polynomial<F>>& relations) {
    for (const auto& rel : relations) insert(rel, true);
    while (!queue.empty()) {
      Amb a = *queue.begin();
      queue.erase(queue.begin());
      if (!elems[a.id1].alive || !elems[a.id2].alive) continue;
      const auto& g1 = elems[a.id1].poly;
      const auto& g2 = elems[a.id2].poly;
      Polynomial<F> s;
      if (a.kind == 0) {
        const Word& u = g1.leading().word;
        const Word& w = g2.leading().word;
        Word left = subword(u, 0, a.pos);  // pos_w = |u| - ell
        Word right = subword(w, u.degree() - a.pos,
                             w.degree() - (u.degree() - a.pos));
        s = sub(f, mul_word(f, Word::one(), g1, right),
                mul_word(f, left, g2, Word::one()));
      } else {
        const Word& w = g2.leading().word;
        const Word& u = g1.leading().word;
        Word left = subword(w, 0, a.pos);
        Word right =
            subword(w, a.pos + u.degree(), w.degree() - a.pos - u.degree());
        s = sub(f, mul_word(f, left, g1, right),
                mul_word(f, Word::one(), g2, Word::one()));
      }
      insert(std::move(s), false);
    }
  }
};

}  // namespace detail

template <ExactField F>
GroebnerBasis<F> complete(const F& f, const Presentation<F>& P) {
  detail::Completion<F> c{f, P.vars, P.bound, {}, {}, {}, {}, {}};
  c.run(P.relations);

  GroebnerBasis<F> gb;
  gb.vars = P.vars;
  gb.bound = P.bound;
  gb.complete_below = P.bound;
  gb.notices = c.notices;

  auto basis = c.alive_polys();
  // canonical form: reduce every tail against the final basis
  std::vector<Polynomial<F>> reduced;
  for (const auto& e : basis) {
    Polynomial<F> tail = Polynomial<F>::from_presorted(
        {e.terms().begin() + 1, e.terms().end()});
    Polynomial<F> head = Polynomial<F>::term(f, e.leading().word, f.one());
    reduced.push_back(add(f, head, normal_form(f, std::move(tail), basis)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial<F>& a, const Polynomial<F>& b) {
              return deglex_less(a.leading().word, b.leading().word);
            });
  gb.elements = std::move(reduced);

  // ambiguities past the bound: for homogeneous input an S-polynomial of
  // ambient degree m is supported on normal words of degree m, so it dies
  // whenever no normal word of that degree exists
  std::set<int> pend;
  if (!c.skipped.empty()) {
    FactorAutomaton aut(P.vars.size(), gb.leading_words());
    for (auto& [deg, i, j] : c.skipped) {
      if (!c.elems[i].alive || !c.elems[j].alive) continue;
      if (P.homogeneous && normal_words_vanish(aut, P.vars.size(), deg))
        continue;
      pend.insert(deg);
    }
  }
  gb.pending_degrees.assign(pend.begin(), pend.end());
  return gb;
}

// --- per-degree ideal dimensions and essential generating sets -------------

struct DegreeDims {
  int degree;
  std::size_t dim_ideal;    // dim I_m
  std::size_t dim_product;  // dim (V I + I V)_m
};

namespace detail {

// Echelon over the words of one fixed degree, pivoting on the deglex-largest
// word first.  Columns are the words declared up front, in descending deglex,
// so a row's pivot column is its leading word.
template <ExactField F>
class DegreeSpan {
 public:
  explicit DegreeSpan(const F& f) : f_(f) {}

  void declare(const Polynomial<F>& p) {
    for (const auto& t : p.terms())
      if (col_.emplace(t.word, 0).second) words_.push_back(t.word);
  }

  void freeze() {
    std::sort(words_.begin(), words_.end(),
              [](const Word& a, const Word& b) { return deglex_less(b, a); });
    for (ColIdx i = 0; i < words_.size(); ++i) col_[words_[i]] = i;
    ech_.emplace(f_, ColIdx(words_.size()));
  }

  // Returns true when p enlarges the span; the reduced row is basis().back().
  bool add(const Polynomial<F>& p) {
    SparseRow<F> row;
    row.ents.reserve(p.terms().size());
    for (const auto& t : p.terms())
      row.ents.push_back({col_.at(t.word), t.coef});
    std::sort(row.ents.begin(), row.ents.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!ech_->add(std::move(row))) return false;
    const auto& r = ech_->rows().back();
    std::vector<Term<F>> ts;
    ts.reserve(r.ents.size());
    for (const auto& e : r.ents) ts.push_back({words_[e.first], e.second});
    basis_.push_back(Polynomial<F>::from_terms(f_, std::move(ts)));
    return true;
  }

  std::size_t rank() const { return ech_->rank(); }
  const std::vector<Polynomial<F>>& basis() const { return basis_; }

 private:
  const F& f_;
  std::unordered_map<Word, ColIdx, WordHash> col_;
  std::vector<Word> words_;
  std::optional<Echelon<F>> ech_;
  std::vector<Polynomial<F>> basis_;
};

}  // namespace detail

template <ExactField F>
struct EssentialSet {
  std::vector<Polynomial<F>> elements;  // ascending (degree, leading word)
  std::vector<DegreeDims> dims;         // degrees 2..bound
};

// Per degree m: span (V I + I V)_m from a basis of I_{m-1}, then extend by
// the bare degree-m relations.  The extension rows that enlarge the span are
// the degree-m essential elements; each is reduced until its leading word
// avoids every leading word realized by the product span and by previously
// chosen elements, which gives the leading monomial property by construction.
template <ExactField F>
EssentialSet<F> essential_generating_set(const F& f, const Presentation<F>& P,
                                         int through = -1) {
  if (!P.homogeneous)
    throw Error("essential generating sets need a homogeneous presentation");
  int top = through < 0 ? P.bound : through;
  EssentialSet<F> out;
  std::vector<Polynomial<F>> prev_basis;  // basis of I_{m-1}
  for (int m = 2; m <= top; ++m) {
    std::vector<Polynomial<F>> rows;
    for (const auto& h : prev_basis)
      for (std::size_t v = 0; v < P.vars.size(); ++v) {
        Word letter{{Letter(v)}};
        rows.push_back(mul_word(f, letter, h, Word::one()));
        rows.push_back(mul_word(f, Word::one(), h, letter));
      }
    std::vector<const Polynomial<F>*> bare;
    for (const auto& r : P.relations)
      if (int(r.degree()) == m) bare.push_back(&r);

    detail::DegreeSpan<F> span(f);
    for (const auto& p : rows) span.declare(p);
    for (const auto* p : bare) span.declare(*p);
    span.freeze();
    for (const auto& p : rows) span.add(p);
    std::size_t dim_prod = span.rank();
    std::vector<Polynomial<F>> essentials;
    for (const auto* p : bare)
      if (span.add(*p)) essentials.push_back(span.basis().back());
    out.dims.push_back({m, span.rank(), dim_prod});

    std::sort(essentials.begin(), essentials.end(),
              [](const Polynomial<F>& a, const Polynomial<F>& b) {
                return deglex_less(a.leading().word, b.leading().word);
              });
    for (auto& e : essentials) out.elements.push_back(std::move(e));
    prev_basis = span.basis();
  }
  return out;
}

template <ExactField F>
std::vector<DegreeDims> ideal_dims(const F& f, const Presentation<F>& P,
                                   int through = -1) {
  return essential_generating_set(f, P, through).dims;
}

struct LmpResult {
  bool ok = true;
  std::optional<std::pair<Word, Word>> witness;  // (inner leading word, outer)
};

// Fails iff some leading word contains another element's leading word as a
// factor (equal leading words included).
template <ExactField F>
LmpResult leading_monomial_property(const std::vector<Polynomial<F>>& rels) {
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (i == j) continue;
      const Word& inner = rels[j].leading().word;
      const Word& outer = rels[i].leading().word;
      if (is_factor(inner, outer)) return {false, {{inner, outer}}};
    }
  return {};
}

enum class Verdict { Yes, No, InconclusiveAtBound };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "inconclusive at bound";
  }
}

template <ExactField F>
struct EssentialGbResult {
  Verdict verdict = Verdict::Yes;
  int first_mismatch = -1;
  // degree, essential count dim(I/I')_m, monomial minimal generator count
  std::vector<std::tuple<int, std::size_t, std::size_t>> table;
  GroebnerBasis<F> gb;
};

// Compares per-degree essential counts with the minimal generator counts of
// the leading word ideal.  Counts at degrees with no minimal generators are
// zero by the degreewise bound dim(I/I')_m <= dim(J/J')_m, so the span
// computation only runs through the top minimal generator degree.
template <ExactField F>
EssentialGbResult<F> essential_groebner_test(const F& f,
                                             const Presentation<F>& P) {
  if (!P.homogeneous)
    throw Error("essential Groebner test needs a homogeneous presentation");
  EssentialGbResult<F> res;
  res.gb = complete(f, P);
  std::map<int, std::size_t> mu;
  for (const auto& e : res.gb.elements) mu[int(e.degree())]++;
  int mmax = mu.empty() ? 1 : mu.rbegin()->first;

  auto ess = essential_generating_set(f, P, mmax);
  std::map<int, std::size_t> ecount;
  for (const auto& d : ess.dims)
    if (d.dim_ideal > d.dim_product)
      ecount[d.degree] = d.dim_ideal - d.dim_product;

  std::set<int> degrees;
  for (auto& [m, c] : mu) degrees.insert(m);
  for (auto& [m, c] : ecount) degrees.insert(m);
  for (int m : degrees) {
    std::size_t e = ecount.count(m) ? ecount[m] : 0;
    std::size_t g = mu.count(m) ? mu[m] : 0;
    res.table.push_back({m, e, g});
    if (e != g && res.first_mismatch < 0) res.first_mismatch = m;
  }
  if (res.first_mismatch >= 0)
    res.verdict = Verdict::No;
  else if (res.gb.has_pending())
    res.verdict = Verdict::InconclusiveAtBound;
  else
    res.verdict = Verdict::Yes;
  return res;
}

}  // namespace k2ws
