// Cobar-style cohomology of a connected graded (or filtered) algebra from a
// normal word basis.  Chains at level n and internal degree j are n-tuples of
// nonempty normal words with degrees summing to j; the differential merges
// adjacent entries with alternating signs, the first merge carrying sign -1.
// Cohomology dimensions come from exact ranks; cocycle representatives are
// rows against the chain basis.  The K2 test spans products of level 1 and 2
// classes; a deficient bidegree certifies failure, while a clean sweep is
// evidence up to the stated bounds only.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "k2ws/groebner.hpp"
#include "k2ws/linalg.hpp"
#include "k2ws/monomial.hpp"

namespace k2ws {

using WId = std::uint32_t;

// Normal words of degree 1..D with products expanded over the basis.
template <ExactField F>
class AlgebraBasis {
 public:
  using Elt = typename F::Elt;
  using Expansion = std::vector<std::pair<WId, Elt>>;

  static AlgebraBasis from_monomial(const F& f, const MonomialAlgebra& m) {
    AlgebraBasis b(f, m.vars(), m.bound());
    b.monomial_ = m;
    b.homogeneous_ = true;
    b.fill_words(m);
    return b;
  }

  // Products are normal forms against the completed basis; mixed degree
  // expansions appear when the presentation is inhomogeneous.
  static AlgebraBasis from_presentation(const F& f,
                                        const GroebnerBasis<F>& gb) {
    AlgebraBasis b(f, gb.vars, gb.bound);
    b.monomial_ = associated_graded(gb);
    b.rules_ = gb.elements;
    b.homogeneous_ = true;
    for (const auto& e : gb.elements)
      if (!e.is_homogeneous()) b.homogeneous_ = false;
    b.fill_words(*b.monomial_);
    return b;
  }

  const F& field() const { return *f_; }
  const VariableSet& vars() const { return vars_; }
  int bound() const { return bound_; }
  bool homogeneous() const { return homogeneous_; }
  const MonomialAlgebra& monomial() const { return *monomial_; }

  std::size_t dim(int degree) const {
    return degree < 1 || degree > bound_
               ? 0
               : offsets_[std::size_t(degree)] - offsets_[std::size_t(degree) - 1];
  }
  WId first_id(int degree) const { return offsets_[std::size_t(degree) - 1]; }
  const Word& word(WId id) const { return words_[id]; }
  int degree(WId id) const { return int(words_[id].degree()); }
  WId id_of(const Word& w) const { return index_.at(w); }

  const Expansion& product(WId u, WId v) const {
    std::uint64_t key = (std::uint64_t(u) << 32) | v;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Expansion e;
    Word concat = words_[u] * words_[v];
    if (int(concat.degree()) > bound_)
      throw TruncationError("product past the truncation bound");
    if (rules_.empty()) {
      if (monomial_->is_normal(concat)) e.push_back({index_.at(concat), f_->one()});
    } else {
      auto nf = normal_form(*f_, Polynomial<F>::term(*f_, concat, f_->one()),
                            rules_);
      for (const auto& t : nf.terms()) e.push_back({index_.at(t.word), t.coef});
    }
    return cache_.emplace(key, std::move(e)).first->second;
  }

 private:
  AlgebraBasis(const F& f, VariableSet vars, int bound)
      : f_(&f), vars_(std::move(vars)), bound_(bound) {}

  void fill_words(const MonomialAlgebra& m) {
    offsets_.assign(1, 0);
    for (int d = 1; d <= bound_; ++d) {
      for (auto& w : normal_words(m, d)) {
        index_.emplace(w, WId(words_.size()));
        words_.push_back(std::move(w));
      }
      offsets_.push_back(WId(words_.size()));
    }
  }

  const F* f_;
  VariableSet vars_;
  int bound_;
  bool homogeneous_ = true;
  std::optional<MonomialAlgebra> monomial_;
  std::vector<Polynomial<F>> rules_;
  std::vector<Word> words_;
  std::unordered_map<Word, WId, WordHash> index_;
  std::vector<WId> offsets_;  // offsets_[d] = first id of degree d+1
  mutable std::unordered_map<std::uint64_t, Expansion> cache_;
};

using Tuple = std::vector<WId>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 1469598103934665603ull;
    for (WId x : t) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <ExactField F>
class CobarComplex {
 public:
  using Elt = typename F::Elt;

  struct Space {
    std::vector<Tuple> tuples;   // ascending concatenated word, then input order
    std::vector<Word> concat;    // concatenated word per tuple
    std::unordered_map<Tuple, std::uint32_t, TupleHash> index;
    std::size_t dim() const { return tuples.size(); }
  };

  CobarComplex(const F& f, AlgebraBasis<F> basis)
      : f_(&f), basis_(std::move(basis)) {}

  const F& field() const { return *f_; }
  const AlgebraBasis<F>& basis() const { return basis_; }
  int bound() const { return basis_.bound(); }

  const Space& space(int n, int j) {
    auto key = std::make_pair(n, j);
    auto it = spaces_.find(key);
    if (it != spaces_.end()) return it->second;
    Space s;
    if (n == 0) {
      if (j == 0) {
        s.tuples.push_back({});
        s.concat.push_back(Word::one());
      }
    } else if (j >= n) {
      Tuple t;
      enumerate(n, j, t, s);
    }
    std::vector<std::uint32_t> order(s.tuples.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return deglex_less(s.concat[a], s.concat[b]);
                     });
    Space sorted;
    sorted.tuples.reserve(s.tuples.size());
    for (auto i : order) {
      sorted.index.emplace(s.tuples[i], std::uint32_t(sorted.tuples.size()));
      sorted.tuples.push_back(std::move(s.tuples[i]));
      sorted.concat.push_back(std::move(s.concat[i]));
    }
    return spaces_.emplace(key, std::move(sorted)).first->second;
  }

  // Matrix of d: C(n,j) -> C(n-1,j); requires a degreewise product.
  const SparseMat<F>& diff(int n, int j) {
    if (!basis_.homogeneous())
      throw Error("graded differential of an inhomogeneous presentation");
    auto key = std::make_pair(n, j);
    auto it = diffs_.find(key);
    if (it != diffs_.end()) return it->second;
    const Space& src = space(n, j);
    const Space& dst = space(n - 1, j);
    std::vector<std::map<ColIdx, Elt>> rows(dst.dim());
    for (std::uint32_t c = 0; c < src.dim(); ++c) {
      const Tuple& t = src.tuples[c];
      for (int i = 0; i + 1 < n; ++i) {
        bool negative = (i % 2) == 0;  // sign (-1)^(i+1), i zero-based
        for (const auto& [wid, coef] : basis_.product(t[i], t[i + 1])) {
          Tuple merged;
          merged.reserve(t.size() - 1);
          merged.insert(merged.end(), t.begin(), t.begin() + i);
          merged.push_back(wid);
          merged.insert(merged.end(), t.begin() + i + 2, t.end());
          auto r = dst.index.at(merged);
          auto v = negative ? f_->neg(coef) : coef;
          auto [slot, fresh] = rows[r].try_emplace(c, v);
          if (!fresh) {
            slot->second = f_->add(slot->second, v);
            if (f_->is_zero(slot->second)) rows[r].erase(slot);
          }
        }
      }
    }
    SparseMat<F> m;
    m.nrows = ColIdx(dst.dim());
    m.ncols = ColIdx(src.dim());
    m.rows.resize(dst.dim());
    for (std::uint32_t r = 0; r < dst.dim(); ++r)
      for (auto& [c, v] : rows[r]) m.rows[r].ents.push_back({c, v});
    return diffs_.emplace(key, std::move(m)).first->second;
  }

  std::size_t rank_diff(int n, int j) {
    auto key = std::make_pair(n, j);
    auto it = ranks_.find(key);
    if (it != ranks_.end()) return it->second;
    std::size_t r = 0;
    if (n >= 1 && space(n, j).dim() > 0 && space(n - 1, j).dim() > 0)
      r = rank(*f_, diff(n, j));
    return ranks_.emplace(key, r).first->second;
  }

  std::size_t ext_dim(int n, int j) {
    if (n == 0) return j == 0 ? 1 : 0;
    std::size_t d = space(n, j).dim();
    if (d == 0) return 0;
    return d - rank_diff(n, j) - rank_diff(n + 1, j);
  }

  // Cocycle representatives at (n, j): rows against the chain basis spanning
  // a complement of the coboundaries inside the cocycles.
  std::vector<std::vector<Elt>> cocycle_reps(int n, int j) {
    const Space& here = space(n, j);
    std::vector<std::vector<Elt>> reps;
    if (here.dim() == 0) return reps;
    auto kernel = nullspace(*f_, diff(n + 1, j).transpose());
    Echelon<F> ech(*f_, ColIdx(here.dim()));
    if (n >= 1 && space(n - 1, j).dim() > 0)
      for (const auto& row : diff(n, j).rows) ech.add(row);
    for (const auto& v : kernel) {
      if (!ech.add(v)) continue;
      std::vector<Elt> dense(here.dim(), f_->zero());
      for (const auto& e : v.ents) dense[e.first] = e.second;
      reps.push_back(std::move(dense));
    }
    if (reps.size() != ext_dim(n, j))
      throw Error("internal: representative count mismatch");
    return reps;
  }

  bool is_cocycle(int n, int j, const std::vector<Elt>& row) {
    const auto& m = diff(n + 1, j);
    std::vector<Elt> out(m.ncols, f_->zero());
    for (std::uint32_t r = 0; r < m.nrows; ++r) {
      if (f_->is_zero(row[r])) continue;
      for (const auto& e : m.rows[r].ents)
        out[e.first] = f_->add(out[e.first], f_->mul(row[r], e.second));
    }
    for (const auto& v : out)
      if (!f_->is_zero(v)) return false;
    return true;
  }

 private:
  void enumerate(int remaining, int degree_left, Tuple& t, Space& s) {
    if (remaining == 0) {
      if (degree_left == 0) {
        Word w;
        for (WId id : t) w = w * basis_.word(id);
        s.tuples.push_back(t);
        s.concat.push_back(std::move(w));
      }
      return;
    }
    int max_d = degree_left - (remaining - 1);
    for (int d = 1; d <= max_d; ++d) {
      if (basis_.dim(d) == 0) continue;
      WId lo = basis_.first_id(d);
      for (WId id = lo; id < lo + basis_.dim(d); ++id) {
        t.push_back(id);
        enumerate(remaining - 1, degree_left - d, t, s);
        t.pop_back();
      }
    }
  }

  const F* f_;
  AlgebraBasis<F> basis_;
  std::map<std::pair<int, int>, Space> spaces_;
  std::map<std::pair<int, int>, SparseMat<F>> diffs_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

struct ExtTable {
  int nmax = 0;
  int bound = 0;
  std::vector<std::vector<std::size_t>> dims;  // dims[n][j]

  std::size_t at(int n, int j) const {
    if (n < 0 || n > nmax || j < 0 || j > bound) return 0;
    return dims[std::size_t(n)][std::size_t(j)];
  }
  std::map<std::pair<int, int>, std::size_t> nonzero() const {
    std::map<std::pair<int, int>, std::size_t> out;
    for (int n = 0; n <= nmax; ++n)
      for (int j = 0; j <= bound; ++j)
        if (dims[std::size_t(n)][std::size_t(j)] != 0)
          out[{n, j}] = dims[std::size_t(n)][std::size_t(j)];
    return out;
  }
  bool operator==(const ExtTable&) const = default;
};

template <ExactField F>
ExtTable ext_dims(CobarComplex<F>& C, int nmax, int bound) {
  ExtTable t;
  t.nmax = nmax;
  t.bound = bound;
  t.dims.assign(std::size_t(nmax) + 1,
                std::vector<std::size_t>(std::size_t(bound) + 1, 0));
  for (int n = 0; n <= nmax; ++n)
    for (int j = 0; j <= bound; ++j) t.dims[n][j] = C.ext_dim(n, j);
  return t;
}

template <ExactField F>
ExtTable ext_dims(const F& f, const MonomialAlgebra& m, int nmax, int bound) {
  if (bound > m.bound())
    throw TruncationError("ext table past the algebra bound");
  CobarComplex<F> C(f, AlgebraBasis<F>::from_monomial(f, m));
  return ext_dims(C, nmax, bound);
}

template <ExactField F>
ExtTable ext_dims(const F& f, const Presentation<F>& P, int nmax, int bound) {
  if (!P.homogeneous)
    throw Error(
        "graded cohomology needs a homogeneous presentation; use the "
        "associated monomial algebra and lifting evidence instead");
  Presentation<F> P2 = P;
  P2.bound = std::max(P.bound, bound);
  CobarComplex<F> C(f, AlgebraBasis<F>::from_presentation(f, complete(f, P2)));
  return ext_dims(C, nmax, bound);
}

// Chain-level cup product: (fg)(a_1..a_{n+m}) = f(a_1..a_n) g(a_{n+1}..a_{n+m}).
// Inputs must be cocycles; the level 0 class acts as the unit.
template <ExactField F>
std::vector<typename F::Elt> cup_product(CobarComplex<F>& C, int n1, int j1,
                                         const std::vector<typename F::Elt>& f1,
                                         int n2, int j2,
                                         const std::vector<typename F::Elt>& f2) {
  const F& f = C.field();
  if (n1 == 0 && j1 == 0) {
    auto out = f2;
    for (auto& v : out) v = f.mul(f1.at(0), v);
    return out;
  }
  if (n2 == 0 && j2 == 0) {
    auto out = f1;
    for (auto& v : out) v = f.mul(f2.at(0), v);
    return out;
  }
  if (!C.is_cocycle(n1, j1, f1) || !C.is_cocycle(n2, j2, f2))
    throw Error("cup product of a non-cocycle");
  const auto& left = C.space(n1, j1);
  const auto& right = C.space(n2, j2);
  const auto& target = C.space(n1 + n2, j1 + j2);
  std::vector<typename F::Elt> out(target.dim(), f.zero());
  for (std::uint32_t c = 0; c < target.dim(); ++c) {
    const Tuple& t = target.tuples[c];
    int d = 0;
    for (int k = 0; k < n1; ++k) d += C.basis().degree(t[std::size_t(k)]);
    if (d != j1) continue;
    Tuple a(t.begin(), t.begin() + n1);
    Tuple b(t.begin() + n1, t.end());
    auto ia = left.index.find(a);
    auto ib = right.index.find(b);
    if (ia == left.index.end() || ib == right.index.end())
      throw Error("internal: cup product split missing");
    auto v = f.mul(f1[ia->second], f2[ib->second]);
    out[c] = v;
  }
  return out;
}

}  // namespace k2ws
