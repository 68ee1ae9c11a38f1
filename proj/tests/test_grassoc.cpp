#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "k2ws/groebner.hpp"
#include "k2ws/monomial.hpp"

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

std::vector<Word> all_words(int k, int len) {
  std::vector<Word> out;
  std::size_t total = 1;
  for (int i = 0; i < len; ++i) total *= std::size_t(k);
  for (std::size_t code = 0; code < total; ++code) {
    Word wd;
    std::size_t c = code;
    for (int i = 0; i < len; ++i) {
      wd.letters.push_back(Letter(c % std::size_t(k)));
      c /= std::size_t(k);
    }
    std::reverse(wd.letters.begin(), wd.letters.end());
    out.push_back(std::move(wd));
  }
  return out;
}

bool has_pattern_factor(const Word& wd, const std::vector<Word>& pats) {
  for (const auto& p : pats)
    if (is_factor(p, wd)) return true;
  return false;
}

}  // namespace

TEST_CASE("monomial algebra construction validates input") {
  CHECK_THROWS_AS(MonomialAlgebra::make(xy, {w({0})}, 4), Error);
  CHECK_THROWS_AS(MonomialAlgebra::make(xy, {w({0, 2})}, 4), Error);
  CHECK_THROWS_AS(MonomialAlgebra::make(xy, {w({0, 1}), w({0, 1, 0})}, 4),
                  Error);
  CHECK_THROWS_AS(MonomialAlgebra::make(xy, {w({0, 1}), w({0, 1})}, 4), Error);

  auto m = MonomialAlgebra::make(xy, {w({1, 1, 1}), w({0, 1})}, 5);
  CHECK(m.mingens() == std::vector<Word>{w({0, 1}), w({1, 1, 1})});
  CHECK(m.bound() == 5);
  CHECK(m.caveats().empty());
}

TEST_CASE("normal word enumeration") {
  auto m = MonomialAlgebra::make(xy, {w({1, 0}), w({0, 0, 0})}, 6);
  CHECK(normal_words(m, 0) == std::vector<Word>{Word::one()});
  CHECK(normal_words(m, 1) == std::vector<Word>{w({0}), w({1})});
  CHECK(normal_words(m, 3) ==
        std::vector<Word>{w({0, 0, 1}), w({0, 1, 1}), w({1, 1, 1})});
  CHECK(m.is_normal(w({0, 0, 1, 1})));
  CHECK_FALSE(m.is_normal(w({0, 1, 0})));
  CHECK_THROWS_AS(normal_words(m, 7), TruncationError);
  CHECK_THROWS_AS(normal_words(m, -1), TruncationError);
}

TEST_CASE("three-generator monomial algebra dimensions") {
  auto b = MonomialAlgebra::make(
      xyz, {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})}, 6);
  auto h = hilbert_coeffs(b);
  REQUIRE(h.size() == 7);
  CHECK(h[0] == 1);
  CHECK(h[1] == 3);
  CHECK(h[2] == 9);
  CHECK(h[3] == 25);
  CHECK(h[4] == 68);

  // independent count: scan every word of each degree for a forbidden factor
  std::vector<Word> pats = {w({0, 0, 1}), w({1, 2, 2}), w({0, 0, 0, 2})};
  for (int d = 0; d <= 6; ++d) {
    std::size_t free = 0;
    for (const auto& wd : all_words(3, d))
      if (!has_pattern_factor(wd, pats)) ++free;
    CHECK(h[std::size_t(d)] == free);
  }
}

TEST_CASE("associated graded of a completed basis") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(f, xy,
                                  {poly(f, {{1, {0, 1}}, {-1, {0, 0}}}),
                                   poly(f, {{1, {1, 0}}}),
                                   poly(f, {{1, {1, 1, 1}}})},
                                  6);
  auto gr = associated_graded(complete(f, P));
  CHECK(gr.mingens() ==
        std::vector<Word>{w({0, 1}), w({1, 0}), w({0, 0, 0}), w({1, 1, 1})});
  CHECK(gr.caveats().empty());
  CHECK(hilbert_coeffs(gr) ==
        std::vector<std::size_t>{1, 2, 2, 0, 0, 0, 0});
}

TEST_CASE("graded of an inhomogeneous pair counts staircase words") {
  Rationals q;
  auto P = Presentation<Rationals>::make(
      q, xy,
      {poly(q, {{1, {1, 0}}, {-1, {0, 1}}}),
       poly(q, {{1, {0, 0, 0}}, {-1, {1, 1}}})},
      8);
  auto gr = associated_graded(complete(q, P));
  CHECK(gr.mingens() == std::vector<Word>{w({1, 0}), w({0, 0, 0})});
  CHECK(hilbert_coeffs(gr) ==
        std::vector<std::size_t>{1, 2, 3, 3, 3, 3, 3, 3, 3});
  // normal words are x^a y^b with a <= 2
  CHECK(normal_words(gr, 2) ==
        std::vector<Word>{w({0, 0}), w({0, 1}), w({1, 1})});
}

TEST_CASE("pending completion surfaces as a caveat") {
  Fp f(32003);
  auto P = Presentation<Fp>::make(
      f, xy, {poly(f, {{1, {1, 1}}}), poly(f, {{1, {0, 0, 0}}})}, 3);
  auto gb = complete(f, P);
  REQUIRE(gb.has_pending());
  auto gr = associated_graded(gb);
  REQUIRE(gr.caveats().size() == 1);
  CHECK(gr.caveats()[0].find("unresolved ambiguities") != std::string::npos);
  CHECK(gr.bound() == 3);
  CHECK(hilbert_coeffs(gr) == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("random pattern sets match a direct factor scan") {
  std::mt19937 rng(80808);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + int(rng() % 2);
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

    auto m = MonomialAlgebra::make(vars, pats, 5);
    for (int d = 0; d <= 5; ++d) {
      auto nws = normal_words(m, d);
      CHECK(std::is_sorted(nws.begin(), nws.end(), deglex_less));
      std::size_t free = 0;
      for (const auto& wd : all_words(k, d)) {
        bool direct = !has_pattern_factor(wd, pats);
        CHECK(m.is_normal(wd) == direct);
        if (direct) ++free;
      }
      CHECK(nws.size() == free);
      for (const auto& wd : nws) CHECK(!has_pattern_factor(wd, pats));
    }
  }
}
