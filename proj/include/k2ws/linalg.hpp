// Sparse exact linear algebra: incremental row echelon over an exact field,
// rank, and right nullspace.  Rows are sorted (column, coefficient) vectors.
// The echelon is left-looking: an incoming row is reduced against existing
// pivots and either dies or becomes a new monic pivot row.  Pivot rows are
// not inter-reduced afterwards, which keeps fill-in down; back-substitution
// walks pivots in descending column order instead.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "k2ws/field.hpp"

namespace k2ws {

using ColIdx = std::uint32_t;

template <ExactField F>
struct SparseRow {
  using Elt = typename F::Elt;
  std::vector<std::pair<ColIdx, Elt>> ents;  // sorted by column, nonzero

  bool empty() const { return ents.empty(); }
  ColIdx lead() const { return ents.front().first; }
};

// r + c*s
template <ExactField F>
SparseRow<F> axpy(const F& f, const SparseRow<F>& r, typename F::Elt c,
                  const SparseRow<F>& s) {
  SparseRow<F> out;
  out.ents.reserve(r.ents.size() + s.ents.size());
  std::size_t i = 0, j = 0;
  while (i < r.ents.size() || j < s.ents.size()) {
    if (j == s.ents.size() ||
        (i < r.ents.size() && r.ents[i].first < s.ents[j].first)) {
      out.ents.push_back(r.ents[i++]);
    } else if (i == r.ents.size() || s.ents[j].first < r.ents[i].first) {
      out.ents.push_back({s.ents[j].first, f.mul(c, s.ents[j].second)});
      ++j;
    } else {
      auto v = f.add(r.ents[i].second, f.mul(c, s.ents[j].second));
      if (!f.is_zero(v)) out.ents.push_back({r.ents[i].first, v});
      ++i, ++j;
    }
  }
  return out;
}

template <ExactField F>
SparseRow<F> scale_row(const F& f, typename F::Elt c, const SparseRow<F>& r) {
  SparseRow<F> out = r;
  for (auto& e : out.ents) e.second = f.mul(c, e.second);
  return out;
}

template <ExactField F>
class Echelon {
 public:
  Echelon(const F& f, ColIdx ncols)
      : f_(&f), pivot_of_col_(ncols, -1) {}

  ColIdx ncols() const { return ColIdx(pivot_of_col_.size()); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<F>>& rows() const { return rows_; }

  std::int64_t pivot_row_of(ColIdx c) const { return pivot_of_col_[c]; }

  void reduce(SparseRow<F>& row) const {
    while (!row.empty()) {
      auto pr = pivot_of_col_[row.lead()];
      if (pr < 0) {
        // leading column has no pivot; reduce the tail instead
        reduce_tail(row);
        return;
      }
      row = axpy(*f_, row, f_->neg(row.ents.front().second), rows_[pr]);
    }
  }

  // Returns true if the row extended the span (a new pivot was created).
  bool add(SparseRow<F> row) {
    while (!row.empty()) {
      auto pr = pivot_of_col_[row.lead()];
      if (pr < 0) {
        row = scale_row(*f_, f_->inv(row.ents.front().second), row);
        pivot_of_col_[row.lead()] = std::int64_t(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      row = axpy(*f_, row, f_->neg(row.ents.front().second), rows_[pr]);
    }
    return false;
  }

  std::vector<ColIdx> pivot_cols_sorted() const {
    std::vector<ColIdx> out;
    out.reserve(rows_.size());
    for (ColIdx c = 0; c < pivot_of_col_.size(); ++c)
      if (pivot_of_col_[c] >= 0) out.push_back(c);
    return out;
  }

 private:
  void reduce_tail(SparseRow<F>& row) const {
    // eliminate pivot columns occurring after the (pivot-free) lead
    for (std::size_t k = 1; k < row.ents.size();) {
      auto pr = pivot_of_col_[row.ents[k].first];
      if (pr < 0) {
        ++k;
        continue;
      }
      row = axpy(*f_, row, f_->neg(row.ents[k].second), rows_[pr]);
    }
  }

  const F* f_;
  std::vector<SparseRow<F>> rows_;
  std::vector<std::int64_t> pivot_of_col_;
};

template <ExactField F>
struct SparseMat {
  ColIdx nrows = 0;
  ColIdx ncols = 0;
  std::vector<SparseRow<F>> rows;

  SparseMat transpose() const {
    SparseMat t;
    t.nrows = ncols;
    t.ncols = nrows;
    t.rows.resize(ncols);
    for (ColIdx r = 0; r < nrows; ++r)
      for (const auto& e : rows[r].ents)
        t.rows[e.first].ents.push_back({r, e.second});
    return t;  // per-row column order follows r, already sorted
  }
};

template <ExactField F>
std::size_t rank(const F& f, const SparseMat<F>& m) {
  Echelon<F> e(f, m.ncols);
  for (const auto& r : m.rows) e.add(r);
  return e.rank();
}

// Basis of { v : M v = 0 }, one vector per free column of M.
template <ExactField F>
std::vector<SparseRow<F>> nullspace(const F& f, const SparseMat<F>& m) {
  Echelon<F> e(f, m.ncols);
  for (const auto& r : m.rows) e.add(r);

  std::vector<bool> is_pivot(m.ncols, false);
  for (ColIdx c : e.pivot_cols_sorted()) is_pivot[c] = true;

  // pivot rows in descending pivot column order for back-substitution
  std::vector<std::pair<ColIdx, const SparseRow<F>*>> prows;
  for (ColIdx c : e.pivot_cols_sorted())
    prows.push_back({c, &e.rows()[e.pivot_row_of(c)]});
  std::reverse(prows.begin(), prows.end());

  std::vector<SparseRow<F>> basis;
  for (ColIdx free = 0; free < m.ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elt> v(m.ncols, f.zero());
    v[free] = f.one();
    for (auto& [pc, prow] : prows) {
      auto s = f.zero();
      for (const auto& en : prow->ents)
        if (en.first != pc) s = f.add(s, f.mul(en.second, v[en.first]));
      v[pc] = f.neg(s);  // pivot entry is monic
    }
    SparseRow<F> out;
    for (ColIdx c = 0; c < m.ncols; ++c)
      if (!f.is_zero(v[c])) out.ents.push_back({c, v[c]});
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace k2ws
