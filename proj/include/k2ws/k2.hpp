// The K2 span test and the comparison maps between the cohomology of a
// filtered algebra and of its associated monomial algebra.
//
// k2_test checks whether level 1 and level 2 classes generate under cup
// products, degree by degree up to the window (nmax, bound).  A bidegree
// where the spanned classes fall short is an exact certificate of failure;
// covering every bidegree in the window is evidence only.
//
// lambda_surjectivity_evidence works one filtration word at a time: each
// cohomology class of the associated monomial algebra concentrated on a
// word alpha is a symbol that a class of the original algebra may restrict
// to.  Lifting a symbol is a linear system over chains supported above
// alpha, with the symbol itself free to move by coboundaries of the block.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "k2ws/cobar.hpp"

namespace k2ws {

struct K2Verdict {
  bool certified_not = false;  // true: witness bidegree is exact
  int nmax = 0;
  int bound = 0;
  std::optional<std::pair<int, int>> witness;  // first deficient (n, j)
  std::size_t expected = 0;  // cohomology dimension at the witness
  std::size_t spanned = 0;   // dimension reached by products there
  ExtTable table;
  std::vector<std::string> caveats;

  std::string summary() const {
    std::ostringstream os;
    if (certified_not) {
      os << "not K2: products of level 1 and 2 classes span " << spanned
         << " of " << expected << " at level " << witness->first
         << ", degree " << witness->second;
    } else {
      os << "K2 evidence: products generate everything through level " << nmax
         << ", degree " << bound;
    }
    return os.str();
  }
};

template <ExactField F>
K2Verdict k2_test(CobarComplex<F>& C, int nmax, int bound) {
  const F& f = C.field();
  K2Verdict v;
  v.nmax = nmax;
  v.bound = bound;
  v.table = ext_dims(C, nmax, bound);

  // span[n][j]: rows spanning, together with the coboundaries, every class
  // reachable as a product of lower classes.  Levels 1 and 2 start it off.
  std::vector<std::vector<std::vector<std::vector<typename F::Elt>>>> span(
      std::size_t(nmax) + 1);
  for (auto& levels : span)
    levels.assign(std::size_t(bound) + 1, {});
  for (int m = 1; m <= 2 && m <= nmax; ++m)
    for (int j = m; j <= bound; ++j)
      if (v.table.at(m, j) > 0) span[m][j] = C.cocycle_reps(m, j);

  for (int n = 3; n <= nmax; ++n) {
    for (int j = n; j <= bound; ++j) {
      std::size_t h = v.table.at(n, j);
      const auto& here = C.space(n, j);
      Echelon<F> ech(f, ColIdx(here.dim()));
      if (here.dim() > 0)
        for (const auto& row : C.diff(n, j).rows) ech.add(row);
      std::size_t base = ech.rank();
      std::vector<std::vector<typename F::Elt>> kept;
      for (int m = 1; m <= 2; ++m) {
        int nl = n - m;
        if (nl < 1) continue;
        for (int k = m; k <= j - nl; ++k) {
          const auto& rights = span[m][k];
          const auto& lefts = span[nl][j - k];
          for (const auto& a : lefts) {
            for (const auto& b : rights) {
              auto prod = cup_product(C, nl, j - k, a, m, k, b);
              SparseRow<F> row;
              for (std::uint32_t c = 0; c < prod.size(); ++c)
                if (!f.is_zero(prod[c])) row.ents.push_back({c, prod[c]});
              if (ech.add(row)) kept.push_back(std::move(prod));
            }
          }
        }
      }
      std::size_t got = ech.rank() - base;
      if (got > h) throw Error("internal: span exceeded the cohomology");
      if (got < h) {
        v.certified_not = true;
        v.witness = {n, j};
        v.expected = h;
        v.spanned = got;
        return v;
      }
      span[n][j] = std::move(kept);
    }
  }
  return v;
}

template <ExactField F>
K2Verdict k2_test(const F& f, const MonomialAlgebra& m, int nmax, int bound) {
  if (bound > m.bound())
    throw TruncationError("k2 window past the algebra bound");
  CobarComplex<F> C(f, AlgebraBasis<F>::from_monomial(f, m));
  auto v = k2_test(C, nmax, bound);
  for (const auto& c : m.caveats()) v.caveats.push_back(c);
  return v;
}

template <ExactField F>
K2Verdict k2_test(const F& f, const Presentation<F>& P, int nmax, int bound) {
  if (!P.homogeneous)
    throw Error(
        "the K2 span test needs a homogeneous presentation; inhomogeneous "
        "input goes through the associated monomial algebra");
  Presentation<F> P2 = P;
  P2.bound = std::max(P.bound, bound);
  auto gb = complete(f, P2);
  CobarComplex<F> C(f, AlgebraBasis<F>::from_presentation(f, gb));
  auto v = k2_test(C, nmax, bound);
  if (gb.has_pending())
    v.caveats.push_back(
        "completion left ambiguities past the bound; dimensions within the "
        "window are exact, the basis beyond it is not");
  return v;
}

// Degreewise comparison of cohomology dimensions with the associated
// monomial algebra.  The filtered side can only be smaller or equal.
struct LambdaDimReport {
  ExtTable algebra;
  ExtTable associated;
  bool dominated = true;  // algebra <= associated everywhere in the window
  std::vector<std::pair<int, int>> strict;  // bidegrees with a strict drop
};

template <ExactField F>
LambdaDimReport lambda_dim_check(const F& f, const Presentation<F>& P,
                                 int nmax, int bound) {
  if (!P.homogeneous)
    throw Error("dimension comparison needs a homogeneous presentation");
  Presentation<F> P2 = P;
  P2.bound = std::max(P.bound, bound);
  auto gb = complete(f, P2);
  LambdaDimReport r;
  {
    CobarComplex<F> C(f, AlgebraBasis<F>::from_presentation(f, gb));
    r.algebra = ext_dims(C, nmax, bound);
  }
  {
    CobarComplex<F> C(f, AlgebraBasis<F>::from_monomial(f, associated_graded(gb)));
    r.associated = ext_dims(C, nmax, bound);
  }
  for (int n = 0; n <= nmax; ++n)
    for (int j = 0; j <= bound; ++j) {
      auto a = r.algebra.at(n, j);
      auto g = r.associated.at(n, j);
      if (a > g) r.dominated = false;
      if (a < g) r.strict.push_back({n, j});
    }
  return r;
}

struct LiftClass {
  int level = 0;
  Word alpha;                  // filtration word carrying the class
  std::size_t class_index = 0; // position within the block at alpha
  bool lifted = false;
};

struct LiftReport {
  int nmax = 0;
  int bound = 0;
  bool enumeration_complete = false;  // no further classes exist at this level
  bool failures_exact = false;        // a failed lift is a certificate
  std::vector<LiftClass> classes;
  std::vector<std::string> caveats;

  bool all_lifted() const {
    for (const auto& c : classes)
      if (!c.lifted) return false;
    return true;
  }
};

namespace detail {

// Chain tuples at one level whose concatenated word equals alpha.  Such a
// tuple has total degree |alpha|, so one internal degree suffices.
struct WordBlock {
  std::vector<Tuple> tuples;
  std::unordered_map<Tuple, std::uint32_t, TupleHash> pos;
};

template <ExactField F>
WordBlock block_at(CobarComplex<F>& C, int n, const Word& alpha) {
  WordBlock b;
  int j = int(alpha.degree());
  if (n < 0 || (n == 0 && j != 0) || (n > 0 && j < n)) return b;
  const auto& s = C.space(n, j);
  for (std::uint32_t i = 0; i < s.dim(); ++i) {
    if (s.concat[i] == alpha) {
      b.pos.emplace(s.tuples[i], std::uint32_t(b.tuples.size()));
      b.tuples.push_back(s.tuples[i]);
    }
  }
  return b;
}

// Differential of the associated monomial algebra restricted to the block at
// alpha: merges are concatenations, kept when the result is still normal.
template <ExactField F>
SparseMat<F> block_diff(CobarComplex<F>& C, const WordBlock& src,
                        const WordBlock& dst) {
  const F& f = C.field();
  const auto& basis = C.basis();
  const auto& mono = basis.monomial();
  SparseMat<F> m;
  m.nrows = ColIdx(dst.tuples.size());
  m.ncols = ColIdx(src.tuples.size());
  m.rows.resize(m.nrows);
  for (std::uint32_t c = 0; c < src.tuples.size(); ++c) {
    const Tuple& t = src.tuples[c];
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      Word w = basis.word(t[i]) * basis.word(t[i + 1]);
      if (!mono.is_normal(w)) continue;
      Tuple merged;
      merged.reserve(t.size() - 1);
      merged.insert(merged.end(), t.begin(), t.begin() + std::ptrdiff_t(i));
      merged.push_back(basis.id_of(w));
      merged.insert(merged.end(), t.begin() + std::ptrdiff_t(i) + 2, t.end());
      auto r = dst.pos.at(merged);
      auto v = (i % 2) == 0 ? f.neg(f.one()) : f.one();
      m.rows[r].ents.push_back({c, v});
    }
  }
  for (auto& row : m.rows)
    std::sort(row.ents.begin(), row.ents.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

// Cohomology of the block complex at alpha, as dense rows over the block.
template <ExactField F>
std::vector<std::vector<typename F::Elt>> block_classes(
    const F& f, const SparseMat<F>& m_in, const SparseMat<F>& m_out,
    std::size_t dim) {
  std::vector<std::vector<typename F::Elt>> reps;
  auto kernel = nullspace(f, m_out.transpose());
  Echelon<F> ech(f, ColIdx(dim));
  for (const auto& row : m_in.rows) ech.add(row);
  for (const auto& v : kernel) {
    if (!ech.add(v)) continue;
    std::vector<typename F::Elt> dense(dim, f.zero());
    for (const auto& e : v.ents) dense[e.first] = e.second;
    reps.push_back(std::move(dense));
  }
  return reps;
}

}  // namespace detail

// For each cohomology class of the associated monomial algebra at level
// 1..nmax, decide whether some class of the presented algebra restricts to
// it.  Exact for homogeneous input; otherwise evidence within the bound.
template <ExactField F>
LiftReport lambda_surjectivity_evidence(const F& f, const Presentation<F>& P,
                                        int nmax, int bound) {
  Presentation<F> P2 = P;
  P2.bound = std::max(P.bound, bound);
  auto gb = complete(f, P2);
  int D = gb.bound;
  auto basis = AlgebraBasis<F>::from_presentation(f, gb);
  bool homog = basis.homogeneous();
  const MonomialAlgebra mono = basis.monomial();
  CobarComplex<F> C(f, std::move(basis));

  LiftReport rep;
  rep.nmax = nmax;
  rep.bound = D;
  rep.failures_exact = homog;

  auto hilb = hilbert_coeffs(mono);
  int dmax = 0;
  bool finite = false;
  for (int d = 1; d <= D; ++d) {
    if (hilb[std::size_t(d)] > 0)
      dmax = d;
    else
      finite = true;
  }

  rep.enumeration_complete = true;
  for (int n = 1; n <= nmax; ++n) {
    bool done = n == 1 || (!gb.has_pending() &&
                           (n == 2 || (finite && n * dmax <= D)));
    if (!done) rep.enumeration_complete = false;
  }
  if (!rep.enumeration_complete)
    rep.caveats.push_back(
        "classes of the associated monomial algebra past the bound are not "
        "enumerated");
  if (!homog)
    rep.caveats.push_back(
        "inhomogeneous input: lift outcomes are within the truncation "
        "window only");
  if (gb.has_pending())
    rep.caveats.push_back(
        "completion left ambiguities past the bound; the associated "
        "monomial algebra is certified only below it");

  for (int n = 1; n <= nmax; ++n) {
    // Candidate filtration words: concatenations of level n tuples.
    std::vector<Word> alphas;
    for (int j = n; j <= D; ++j) {
      const auto& s = C.space(n, j);
      for (const auto& w : s.concat)
        if (alphas.empty() || !(alphas.back() == w)) alphas.push_back(w);
    }
    std::sort(alphas.begin(), alphas.end(), deglex_less);
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

    for (const auto& alpha : alphas) {
      auto below = detail::block_at(C, n - 1, alpha);
      auto block = detail::block_at(C, n, alpha);
      auto above = detail::block_at(C, n + 1, alpha);
      auto m_in = detail::block_diff(C, block, below);    // rows: below
      auto m_out = detail::block_diff(C, above, block);   // rows: block
      auto reps =
          detail::block_classes(f, m_in, m_out, block.tuples.size());
      if (reps.empty()) continue;

      // Shared column layout for every class at this alpha: unknown values
      // on tuples above alpha, then the coboundary freedom of the block,
      // then the right hand side.
      std::unordered_map<Tuple, ColIdx, TupleHash> ucol;
      int jlo = homog ? int(alpha.degree()) : n;
      int jhi = homog ? int(alpha.degree()) : D;
      for (int j = std::max(jlo, n); j <= jhi; ++j) {
        const auto& s = C.space(n, j);
        for (std::uint32_t i = 0; i < s.dim(); ++i)
          if (deglex_less(alpha, s.concat[i]))
            ucol.emplace(s.tuples[i], ColIdx(ucol.size()));
      }
      ColIdx gbase = ColIdx(ucol.size());
      ColIdx rhs_col = gbase + ColIdx(below.tuples.size());
      auto m_in_t = m_in.transpose();  // column access into the block rows

      for (std::size_t ci = 0; ci < reps.size(); ++ci) {
        const auto& phi = reps[ci];
        Echelon<F> ech(f, rhs_col + 1);
        bool consistent = true;
        for (int j = std::max(n + 1, jlo); j <= jhi; ++j) {
          const auto& s = C.space(n + 1, j);
          for (std::uint32_t x = 0; x < s.dim(); ++x) {
            if (!deglex_less(alpha, s.concat[x])) continue;
            const Tuple& t = s.tuples[x];
            std::map<ColIdx, typename F::Elt> row;
            auto put = [&](ColIdx col, const typename F::Elt& val) {
              auto [it, fresh] = row.try_emplace(col, val);
              if (!fresh) {
                it->second = f.add(it->second, val);
                if (f.is_zero(it->second)) row.erase(it);
              }
            };
            for (std::size_t i = 0; i + 1 < t.size(); ++i) {
              bool negative = (i % 2) == 0;
              for (const auto& [wid, coef] : C.basis().product(t[i], t[i + 1])) {
                Tuple merged;
                merged.reserve(t.size() - 1);
                merged.insert(merged.end(), t.begin(),
                              t.begin() + std::ptrdiff_t(i));
                merged.push_back(wid);
                merged.insert(merged.end(), t.begin() + std::ptrdiff_t(i) + 2,
                              t.end());
                Word w;
                for (WId id : merged) w = w * C.basis().word(id);
                auto v = negative ? f.neg(coef) : coef;
                auto cmp = deglex_cmp(w, alpha);
                if (cmp == std::strong_ordering::greater) {
                  put(ucol.at(merged), v);
                } else if (cmp == std::strong_ordering::equal) {
                  auto p = block.pos.at(merged);
                  // value on the block: phi + g . m_in
                  if (!f.is_zero(phi[p]))
                    put(rhs_col, f.neg(f.mul(v, phi[p])));
                  for (const auto& e : m_in_t.rows[p].ents)
                    put(gbase + e.first, f.mul(v, e.second));
                }
              }
            }
            if (row.empty()) continue;
            SparseRow<F> srow;
            for (auto& [c2, v2] : row) srow.ents.push_back({c2, v2});
            ech.add(srow);
          }
        }
        if (ech.pivot_row_of(rhs_col) >= 0) consistent = false;
        LiftClass lc;
        lc.level = n;
        lc.alpha = alpha;
        lc.class_index = ci;
        lc.lifted = consistent;
        rep.classes.push_back(std::move(lc));
      }
    }
  }
  return rep;
}

}  // namespace k2ws
