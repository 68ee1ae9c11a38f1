#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "k2ws/cobar.hpp"

using namespace k2ws;

namespace {

Word w(std::initializer_list<int> ls) {
  Word out;
  for (int l : ls) out.letters.push_back(Letter(l));
  return out;
}

template <ExactField F>
Polynomial<F> poly(const F& f,
                   std::vector<std::pair<long long, std::vector<int>>> spec) {
  std::vector<Term<F>> ts;
  for (auto& [c, ls] : spec) {
    Word wd;
    for (int l : ls) wd.letters.push_back(Letter(l));
    ts.push_back({std::move(wd), f.from_int(c)});
  }
  return Polynomial<F>::from_terms(f, std::move(ts));
}

const VariableSet xy({"x", "y"});
const VariableSet xyz({"x", "y", "z"});

std::size_t dense_rank(const Fp& f, std::vector<std::vector<Fp::Elt>> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && f.is_zero(rows[piv][col])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    auto inv = f.inv(rows[rank][col]);
    for (std::size_t c = col; c < ncols; ++c)
      rows[rank][c] = f.mul(rows[rank][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || f.is_zero(rows[r][col])) continue;
      auto c0 = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(c0, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Fp::Elt>> to_dense(const Fp& f,
                                           const SparseMat<Fp>& m) {
  std::vector<std::vector<Fp::Elt>> out(
      m.nrows, std::vector<Fp::Elt>(m.ncols, f.zero()));
  for (std::uint32_t r = 0; r < m.nrows; ++r)
    for (const auto& e : m.rows[r].ents) out[r][e.first] = e.second;
  return out;
}

// Straight-line reimplementation of the chain spaces and differential on a
// monomial algebra: plain word lists, dense matrices, a direct factor check
// for normality.  Shares nothing with the library construction except the
// sign rule, which is part of the definition.
struct DenseCobar {
  const Fp& f;
  const MonomialAlgebra& m;
  std::map<std::pair<int, int>, std::vector<std::vector<Word>>> cache;

  const std::vector<std::vector<Word>>& space(int n, int j) {
    auto key = std::make_pair(n, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Word>> out;
    if (n == 0) {
      if (j == 0) out.push_back({});
    } else if (j >= n) {
      std::vector<Word> t;
      build(n, j, t, out);
    }
    return cache.emplace(key, std::move(out)).first->second;
  }

  void build(int remaining, int left, std::vector<Word>& t,
             std::vector<std::vector<Word>>& out) {
    if (remaining == 0) {
      if (left == 0) out.push_back(t);
      return;
    }
    for (int d = 1; d <= left - (remaining - 1); ++d)
      for (const auto& wd : normal_words(m, d)) {
        t.push_back(wd);
        build(remaining - 1, left - d, t, out);
        t.pop_back();
      }
  }

  static std::vector<std::vector<Letter>> key(const std::vector<Word>& t) {
    std::vector<std::vector<Letter>> k;
    for (const auto& wd : t) k.push_back(wd.letters);
    return k;
  }

  std::size_t rank_of(int n, int j) {
    const auto& src = space(n, j);
    const auto& dst = space(n - 1, j);
    if (src.empty() || dst.empty()) return 0;
    std::map<std::vector<std::vector<Letter>>, std::size_t> idx;
    for (std::size_t i = 0; i < dst.size(); ++i) idx[key(dst[i])] = i;
    std::vector<std::vector<Fp::Elt>> rows(
        src.size(), std::vector<Fp::Elt>(dst.size(), f.zero()));
    for (std::size_t r = 0; r < src.size(); ++r) {
      const auto& t = src[r];
      for (int i = 0; i + 1 < n; ++i) {
        Word merged = t[std::size_t(i)] * t[std::size_t(i) + 1];
        if (!m.is_normal(merged)) continue;
        std::vector<Word> mt;
        mt.insert(mt.end(), t.begin(), t.begin() + i);
        mt.push_back(merged);
        mt.insert(mt.end(), t.begin() + i + 2, t.end());
        auto c = idx.at(key(mt));
        auto v = (i % 2) == 0 ? f.neg(f.one()) : f.one();
        rows[r][c] = f.add(rows[r][c], v);
      }
    }
    return dense_rank(f, std::move(rows));
  }

  std::size_t ext(int n, int j) {
    if (n == 0) return j == 0 ? 1 : 0;
    std::size_t d = space(n, j).size();
    if (d == 0) return 0;
    return d - rank_of(n, j) - rank_of(n + 1, j);
  }
};

}  // namespace

TEST_CASE("free algebra has cohomology only at the generators") {
  Fp f(32003);
  auto free2 = MonomialAlgebra::make(xy, {}, 5);
  auto t = ext_dims(f, free2, 3, 4);
  std::map<std::pair<int, int>, std::size_t> want = {{{0, 0}, 1}, {{1, 1}, 2}};
  CHECK(t.nonzero() == want);
}

TEST_CASE("chain spaces sort by concatenated word") {
  Fp f(32003);
  auto free2 = MonomialAlgebra::make(xy, {}, 5);
  CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_monomial(f, free2));
  const auto& s = C.space(2, 3);
  CHECK(s.dim() == 16);  // two compositions of 3, eight words each
  for (std::size_t i = 0; i + 1 < s.concat.size(); ++i)
    CHECK(!deglex_less(s.concat[i + 1], s.concat[i]));
  for (std::uint32_t i = 0; i < s.dim(); ++i)
    CHECK(s.index.at(s.tuples[i]) == i);
  CHECK(C.space(2, 1).dim() == 0);
  CHECK(C.space(0, 0).dim() == 1);
  CHECK(C.space(0, 2).dim() == 0);
}

TEST_CASE("commutative plane has a Koszul-dual exterior table") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(
      f, xy, {poly(f, {{1, {1, 0}}, {-1, {0, 1}}})}, 6);
  auto t = ext_dims(f, P, 3, 5);
  std::map<std::pair<int, int>, std::size_t> want = {
      {{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  CHECK(t.nonzero() == want);
  CHECK(t.at(1, 1) == 2);
  CHECK(t.at(9, 9) == 0);
}

TEST_CASE("exterior square has a polynomial-ring table") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(f, xy,
                                  {poly(f, {{1, {0, 0}}}),
                                   poly(f, {{1, {1, 1}}}),
                                   poly(f, {{1, {0, 1}}, {1, {1, 0}}})},
                                  6);
  auto t = ext_dims(f, P, 4, 6);
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= 6; ++j)
      CHECK(t.at(n, j) == (n == j ? std::size_t(n) + 1 : 0));
}

TEST_CASE("two-letter cycle algebra stays on the diagonal") {
  Fp f(32003);
  auto m = MonomialAlgebra::make(xy, {w({0, 1}), w({1, 0})}, 6);
  CHECK(hilbert_coeffs(m) ==
        std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
  auto t = ext_dims(f, m, 4, 6);
  std::map<std::pair<int, int>, std::size_t> want = {
      {{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 2}, {{3, 3}, 2}, {{4, 4}, 2}};
  CHECK(t.nonzero() == want);
}

TEST_CASE("three-generator monomial algebra table") {
  Fp f(32003);
  auto b = MonomialAlgebra::make(
      xyz, {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})}, 6);
  auto t = ext_dims(f, b, 4, 6);
  std::map<std::pair<int, int>, std::size_t> want = {
      {{0, 0}, 1}, {{1, 1}, 3}, {{2, 3}, 2}, {{2, 4}, 1}, {{3, 5}, 1}};
  CHECK(t.nonzero() == want);

  // level 2 counts the minimal forbidden words by degree
  CHECK(t.at(2, 3) == 2);
  CHECK(t.at(2, 4) == 1);
  CHECK(t.at(2, 2) == 0);
}

TEST_CASE("deformation keeps the monomial table") {
  Fp f(32003);
  std::vector<Polynomial<Fp>> deformed = {
      poly(f, {{1, {0, 0, 1}}, {-1, {0, 0, 0}}}),
      poly(f, {{1, {1, 2, 2}}, {-1, {1, 0, 0}}}),
      poly(f, {{1, {0, 0, 0, 2}}, {-1, {0, 0, 0, 0}}})};
  auto P = Presentation<Fp>::make(f, xyz, deformed, 8);
  auto ta = ext_dims(f, P, 4, 6);
  auto b = MonomialAlgebra::make(
      xyz, {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})}, 6);
  auto tb = ext_dims(f, b, 4, 6);
  CHECK(ta == tb);
}

TEST_CASE("inhomogeneous input is rejected with guidance") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(f, xy,
                                  {poly(f, {{1, {1, 0}}, {-1, {0, 1}}}),
                                   poly(f, {{1, {0, 0, 0}}, {-1, {1, 1}}})},
                                  8);
  CHECK_THROWS_WITH_AS(
      ext_dims(f, P, 2, 4),
      "graded cohomology needs a homogeneous presentation; use the "
      "associated monomial algebra and lifting evidence instead",
      Error);
  auto gb = complete(f, P);
  CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_presentation(f, gb));
  CHECK(C.space(2, 3).dim() > 0);
  CHECK_THROWS_AS(C.diff(2, 3), Error);
}

TEST_CASE("table window past the algebra bound is refused") {
  Fp f(32003);
  auto m = MonomialAlgebra::make(xy, {w({0, 1})}, 4);
  CHECK_THROWS_AS(ext_dims(f, m, 2, 5), TruncationError);
  CHECK_NOTHROW(ext_dims(f, m, 2, 4));
}

TEST_CASE("differential squares to zero") {
  Fp f(32003);
  auto b = MonomialAlgebra::make(
      xyz, {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})}, 5);
  CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_monomial(f, b));
  for (int n = 2; n <= 4; ++n)
    for (int j = n; j <= 5; ++j) {
      auto outer = to_dense(f, C.diff(n, j));       // C(n) -> C(n-1)
      auto inner = to_dense(f, C.diff(n + 1, j));   // C(n+1) -> C(n)
      if (outer.empty() || inner.empty()) continue;
      for (std::size_t r = 0; r < outer.size(); ++r)
        for (std::size_t c = 0; c < (inner.empty() ? 0 : inner[0].size());
             ++c) {
          Fp::Elt acc = f.zero();
          for (std::size_t k = 0; k < inner.size(); ++k)
            acc = f.add(acc, f.mul(outer[r][k], inner[k][c]));
          CHECK(f.is_zero(acc));
        }
    }
}

TEST_CASE("random monomial algebras match a dense reimplementation") {
  Fp f(32003);
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    int k = 2 + int(rng() % 2);
    int bound = k == 2 ? 5 : 4;
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back(std::string(1, char('x' + i)));
    VariableSet vars(names);
    std::vector<Word> pats;
    int want = 1 + int(rng() % 3);
    while (int(pats.size()) < want) {
      Word cand;
      std::size_t len = 2 + rng() % 2;
      for (std::size_t i = 0; i < len; ++i)
        cand.letters.push_back(Letter(rng() % std::size_t(k)));
      bool keep = true;
      for (const auto& p : pats)
        if (is_factor(p, cand) || is_factor(cand, p)) keep = false;
      if (keep) pats.push_back(std::move(cand));
    }
    auto m = MonomialAlgebra::make(vars, pats, bound);
    CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_monomial(f, m));
    DenseCobar D{f, m, {}};
    for (int n = 0; n <= 3; ++n)
      for (int j = 0; j <= bound; ++j) {
        CHECK(C.space(n, j).dim() == D.space(n, j).size());
        CHECK(C.ext_dim(n, j) == D.ext(n, j));
      }
  }
}

TEST_CASE("Euler characteristic inverts the Hilbert series") {
  Fp f(32003);
  std::mt19937 rng(60601);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Word> pats;
    int want = 1 + int(rng() % 2);
    while (int(pats.size()) < want) {
      Word cand;
      std::size_t len = 2 + rng() % 2;
      for (std::size_t i = 0; i < len; ++i)
        cand.letters.push_back(Letter(rng() % 2));
      bool keep = true;
      for (const auto& p : pats)
        if (is_factor(p, cand) || is_factor(cand, p)) keep = false;
      if (keep) pats.push_back(std::move(cand));
    }
    int bound = 4;
    auto m = MonomialAlgebra::make(xy, pats, bound);
    auto h = hilbert_coeffs(m);
    auto t = ext_dims(f, m, bound, bound);
    for (int j = 0; j <= bound; ++j) {
      long long conv = 0;
      for (int i = 0; i <= j; ++i) {
        long long chi = 0;
        for (int n = 0; n <= j - i; ++n) {
          long long d = (long long)t.at(n, j - i);
          chi += (n % 2 == 0) ? d : -d;
        }
        conv += (long long)h[std::size_t(i)] * chi;
      }
      CHECK(conv == (j == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("cocycle representatives span the cohomology") {
  Fp f(32003);
  auto b = MonomialAlgebra::make(
      xyz, {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})}, 6);
  CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_monomial(f, b));
  for (auto [n, j] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 3}, {2, 4}, {3, 5}, {2, 2}, {3, 4}}) {
    auto reps = C.cocycle_reps(n, j);
    CHECK(reps.size() == C.ext_dim(n, j));
    std::vector<std::vector<Fp::Elt>> stack;
    for (const auto& row : C.diff(n, j).rows) {
      std::vector<Fp::Elt> dense(C.space(n, j).dim(), f.zero());
      for (const auto& e : row.ents) dense[e.first] = e.second;
      stack.push_back(std::move(dense));
    }
    std::size_t base = dense_rank(f, stack);
    CHECK(base == C.rank_diff(n, j));
    for (const auto& r : reps) {
      CHECK(C.is_cocycle(n, j, r));
      stack.push_back(r);
    }
    CHECK(dense_rank(f, stack) == base + reps.size());
  }
}

TEST_CASE("cup product unit, associativity, and cocycle guard") {
  Fp f(32003);
  auto m = MonomialAlgebra::make(xy, {w({0, 1}), w({1, 0})}, 6);
  CobarComplex<Fp> C(f, AlgebraBasis<Fp>::from_monomial(f, m));

  auto unit = C.cocycle_reps(0, 0);
  REQUIRE(unit.size() == 1);
  auto ones = C.cocycle_reps(1, 1);
  REQUIRE(ones.size() == 2);

  auto scaled = cup_product(C, 0, 0, unit[0], 1, 1, ones[0]);
  for (std::size_t i = 0; i < scaled.size(); ++i)
    CHECK(scaled[i] == f.mul(unit[0][0], ones[0][i]));
  auto scaled2 = cup_product(C, 1, 1, ones[1], 0, 0, unit[0]);
  for (std::size_t i = 0; i < scaled2.size(); ++i)
    CHECK(scaled2[i] == f.mul(unit[0][0], ones[1][i]));

  for (int a = 0; a < 2; ++a)
    for (int b2 = 0; b2 < 2; ++b2) {
      auto ab = cup_product(C, 1, 1, ones[a], 1, 1, ones[b2]);
      CHECK(C.is_cocycle(2, 2, ab));
      for (int c = 0; c < 2; ++c) {
        auto bc = cup_product(C, 1, 1, ones[b2], 1, 1, ones[c]);
        auto left = cup_product(C, 2, 2, ab, 1, 1, ones[c]);
        auto right = cup_product(C, 1, 1, ones[a], 2, 2, bc);
        CHECK(left == right);
        CHECK(C.is_cocycle(3, 3, left));
      }
    }

  // x^2 generates no class in the commutative plane: its dual fails the
  // cocycle condition there
  auto P = Presentation<Fp>::make(
      f, xy, {poly(f, {{1, {1, 0}}, {-1, {0, 1}}})}, 6);
  CobarComplex<Fp> D(f,
                     AlgebraBasis<Fp>::from_presentation(f, complete(f, P)));
  std::vector<Fp::Elt> bad(D.space(1, 2).dim(), f.zero());
  REQUIRE(bad.size() == 3);
  bad[0] = f.one();
  CHECK_FALSE(D.is_cocycle(1, 2, bad));
  auto good = D.cocycle_reps(1, 1);
  CHECK_THROWS_WITH_AS(cup_product(D, 1, 2, bad, 1, 1, good[0]),
                       "cup product of a non-cocycle", Error);
}

TEST_CASE("presentation products agree with monomial products on a monomial "
          "ideal") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(
      f, xy, {poly(f, {{1, {0, 1}}}), poly(f, {{1, {1, 0}}})}, 6);
  auto ta = ext_dims(f, P, 3, 5);
  auto m = MonomialAlgebra::make(xy, {w({0, 1}), w({1, 0})}, 5);
  auto tb = ext_dims(f, m, 3, 5);
  CHECK(ta.nonzero() == tb.nonzero());
}
