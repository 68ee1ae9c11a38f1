// Monomial algebras presented by minimal forbidden factors, normal word
// enumeration, and Hilbert coefficients.  The associated monomial algebra of
// a filtered algebra is built from the leading words of a completed basis;
// its dimension data is faithful through the completion bound.
#pragma once

#include <memory>
#include <vector>

#include "k2ws/automaton.hpp"
#include "k2ws/groebner.hpp"

namespace k2ws {

class MonomialAlgebra {
 public:
  static MonomialAlgebra make(VariableSet vars, std::vector<Word> mingens,
                              int bound,
                              std::vector<std::string> caveats = {}) {
    for (const auto& g : mingens) {
      if (g.degree() < 2) throw Error("monomial generator of degree < 2");
      for (Letter c : g.letters)
        if (c >= vars.size())
          throw Error("monomial generator uses an unknown variable");
    }
    for (std::size_t i = 0; i < mingens.size(); ++i)
      for (std::size_t j = 0; j < mingens.size(); ++j)
        if (i != j && is_factor(mingens[i], mingens[j]))
          throw Error("monomial generators are not factor-free");
    std::sort(mingens.begin(), mingens.end(), deglex_less);
    MonomialAlgebra m;
    m.vars_ = std::move(vars);
    m.mingens_ = std::move(mingens);
    m.bound_ = bound;
    m.caveats_ = std::move(caveats);
    m.aut_ = std::make_shared<FactorAutomaton>(m.vars_.size(), m.mingens_);
    return m;
  }

  const VariableSet& vars() const { return vars_; }
  const std::vector<Word>& mingens() const { return mingens_; }
  int bound() const { return bound_; }
  const std::vector<std::string>& caveats() const { return caveats_; }
  const FactorAutomaton& automaton() const { return *aut_; }

  bool is_normal(const Word& w) const { return aut_->is_normal(w); }

 private:
  VariableSet vars_{std::vector<std::string>{"x"}};
  std::vector<Word> mingens_;
  int bound_ = 0;
  std::vector<std::string> caveats_;
  std::shared_ptr<FactorAutomaton> aut_;
};

// gr of the filtration by deglex leading words: the monomial algebra on the
// leading words of the completed basis.
template <ExactField F>
MonomialAlgebra associated_graded(const GroebnerBasis<F>& gb) {
  std::vector<std::string> caveats;
  if (gb.has_pending())
    caveats.push_back(
        "completion has unresolved ambiguities past degree " +
        std::to_string(gb.bound) +
        "; dimension data is certified only through that bound");
  return MonomialAlgebra::make(gb.vars, gb.leading_words(), gb.complete_below,
                               std::move(caveats));
}

// Normal words of the exact degree, ascending deglex.
inline std::vector<Word> normal_words(const MonomialAlgebra& m, int degree) {
  if (degree < 0 || degree > m.bound())
    throw TruncationError("normal word query past the faithfulness bound");
  return enumerate_normal_words(m.automaton(), m.vars().size(),
                                std::size_t(degree));
}

// Dimensions of the graded pieces, degrees 0 through the bound.
inline std::vector<std::size_t> hilbert_coeffs(const MonomialAlgebra& m) {
  std::vector<std::size_t> h;
  h.reserve(std::size_t(m.bound()) + 1);
  for (int d = 0; d <= m.bound(); ++d)
    h.push_back(normal_words(m, d).size());
  return h;
}

}  // namespace k2ws
