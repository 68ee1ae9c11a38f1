// Polynomials in the free associative algebra.  Terms are kept sorted by
// strictly descending deglex, with no zero coefficients, so the leading term
// is terms().front().
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "k2ws/field.hpp"
#include "k2ws/word.hpp"

namespace k2ws {

template <ExactField F>
struct Term {
  Word word;
  typename F::Elt coef;
  bool operator==(const Term&) const = default;
};

template <ExactField F>
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return {}; }

  static Polynomial term(const F& f, Word w, typename F::Elt c) {
    Polynomial p;
    if (!f.is_zero(c)) p.terms_.push_back({std::move(w), c});
    return p;
  }

  // Sorts, merges equal words, drops zeros.
  static Polynomial from_terms(const F& f, std::vector<Term<F>> ts) {
    std::sort(ts.begin(), ts.end(), [](const Term<F>& a, const Term<F>& b) {
      return deglex_less(b.word, a.word);
    });
    Polynomial p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().word == t.word)
        p.terms_.back().coef = f.add(p.terms_.back().coef, t.coef);
      else
        p.terms_.push_back(std::move(t));
      if (!p.terms_.empty() && f.is_zero(p.terms_.back().coef))
        p.terms_.pop_back();
    }
    return p;
  }

  // Trusted: terms already strictly descending with nonzero coefficients.
  static Polynomial from_presorted(std::vector<Term<F>> ts) {
    Polynomial p;
    p.terms_ = std::move(ts);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term<F>>& terms() const { return terms_; }

  const Term<F>& leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
  }

  std::size_t degree() const { return leading().word.degree(); }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.word.degree() != terms_.front().word.degree()) return false;
    return true;
  }

 private:
  std::vector<Term<F>> terms_;
};

template <ExactField F>
bool operator==(const Polynomial<F>& a, const Polynomial<F>& b) {
  return a.terms() == b.terms();
}

template <ExactField F>
std::pair<Word, typename F::Elt> leading_term(const Polynomial<F>& p) {
  const auto& t = p.leading();
  return {t.word, t.coef};
}

// Merge two descending term lists.
template <ExactField F>
Polynomial<F> add(const F& f, const Polynomial<F>& a, const Polynomial<F>& b) {
  std::vector<Term<F>> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() ||
        (i < ta.size() && deglex_less(tb[j].word, ta[i].word))) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || deglex_less(ta[i].word, tb[j].word)) {
      out.push_back(tb[j++]);
    } else {
      auto c = f.add(ta[i].coef, tb[j].coef);
      if (!f.is_zero(c)) out.push_back({ta[i].word, c});
      ++i, ++j;
    }
  }
  return Polynomial<F>::from_presorted(std::move(out));
}

template <ExactField F>
Polynomial<F> scale(const F& f, typename F::Elt c, const Polynomial<F>& p) {
  if (f.is_zero(c)) return Polynomial<F>::zero();
  std::vector<Term<F>> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({t.word, f.mul(c, t.coef)});
  return Polynomial<F>::from_presorted(std::move(out));
}

template <ExactField F>
Polynomial<F> negate(const F& f, const Polynomial<F>& p) {
  return scale(f, f.neg(f.one()), p);
}

template <ExactField F>
Polynomial<F> sub(const F& f, const Polynomial<F>& a, const Polynomial<F>& b) {
  return add(f, a, negate(f, b));
}

// u * p * w for words u, w.  Deglex is compatible with concatenation, so the
// term order is preserved and no re-sort is needed.
template <ExactField F>
Polynomial<F> mul_word(const F& f, const Word& u, const Polynomial<F>& p,
                       const Word& w) {
  (void)f;
  std::vector<Term<F>> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({u * t.word * w, t.coef});
  return Polynomial<F>::from_presorted(std::move(out));
}

template <ExactField F>
Polynomial<F> mul(const F& f, const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> acc;
  for (const auto& t : a.terms())
    acc = add(f, acc, scale(f, t.coef, mul_word(f, t.word, b, Word::one())));
  return acc;
}

template <ExactField F>
Polynomial<F> monic(const F& f, const Polynomial<F>& p) {
  return scale(f, f.inv(p.leading().coef), p);
}

template <ExactField F>
std::string to_string(const F& f, const Polynomial<F>& p,
                      const VariableSet& vars) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    std::string c = f.str(t.coef);
    bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (t.word.is_one())
      s += c;
    else if (c == "1")
      s += to_string(t.word, vars);
    else
      s += c + "*" + to_string(t.word, vars);
  }
  return s;
}

}  // namespace k2ws
