// Aho-Corasick style factor automaton for a fixed pattern set.  A state is
// dead when some suffix of the scanned text equals a pattern; walking a word
// through live states decides factor-freeness in linear time and drives the
// normal word enumeration.
#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "k2ws/word.hpp"

namespace k2ws {

class FactorAutomaton {
 public:
  FactorAutomaton(std::size_t alphabet, const std::vector<Word>& patterns)
      : alphabet_(alphabet) {
    next_.push_back(std::vector<std::uint32_t>(alphabet_, 0));
    dead_.push_back(false);
    for (const Word& p : patterns) {
      std::uint32_t s = 0;
      for (Letter c : p.letters) {
        if (next_[s][c] == 0) {
          next_[s][c] = std::uint32_t(next_.size());
          next_.push_back(std::vector<std::uint32_t>(alphabet_, 0));
          dead_.push_back(false);
        }
        s = next_[s][c];
      }
      if (!p.is_one()) dead_[s] = true;
    }
    build_links();
  }

  std::uint32_t root() const { return 0; }
  std::uint32_t step(std::uint32_t state, Letter c) const {
    return goto_[state][c];
  }
  bool dead(std::uint32_t state) const { return dead_[state]; }

  bool is_normal(const Word& w) const {
    std::uint32_t s = 0;
    for (Letter c : w.letters) {
      s = goto_[s][c];
      if (dead_[s]) return false;
    }
    return true;
  }

 private:
  void build_links() {
    const auto n = std::uint32_t(next_.size());
    fail_.assign(n, 0);
    goto_ = next_;
    std::queue<std::uint32_t> q;
    for (Letter c = 0; c < alphabet_; ++c)
      if (next_[0][c] != 0) q.push(next_[0][c]);
    while (!q.empty()) {
      std::uint32_t s = q.front();
      q.pop();
      if (dead_[fail_[s]]) dead_[s] = true;
      for (Letter c = 0; c < alphabet_; ++c) {
        std::uint32_t t = next_[s][c];
        if (t != 0) {
          fail_[t] = goto_[fail_[s]][c];
          q.push(t);
        } else {
          goto_[s][c] = goto_[fail_[s]][c];
        }
      }
    }
  }

  std::size_t alphabet_;
  std::vector<std::vector<std::uint32_t>> next_;
  std::vector<std::vector<std::uint32_t>> goto_;
  std::vector<std::uint32_t> fail_;
  std::vector<bool> dead_;
};

// All factor-free words of the exact degree, ascending deglex.
inline std::vector<Word> enumerate_normal_words(const FactorAutomaton& aut,
                                                std::size_t alphabet,
                                                std::size_t degree) {
  std::vector<Word> out;
  Word w;
  std::vector<std::uint32_t> states{aut.root()};
  auto dfs = [&](auto&& self) -> void {
    if (w.degree() == degree) {
      out.push_back(w);
      return;
    }
    for (Letter c = 0; c < alphabet; ++c) {
      std::uint32_t s = aut.step(states.back(), c);
      if (aut.dead(s)) continue;
      states.push_back(s);
      w.letters.push_back(c);
      self(self);
      w.letters.pop_back();
      states.pop_back();
    }
  };
  if (!aut.dead(aut.root())) dfs(dfs);
  return out;
}

// True when no factor-free word of the given degree exists; by prefix
// closure none exists in any higher degree either.
inline bool normal_words_vanish(const FactorAutomaton& aut,
                                std::size_t alphabet, std::size_t degree) {
  Word w;
  std::vector<std::uint32_t> states{aut.root()};
  auto dfs = [&](auto&& self) -> bool {
    if (w.degree() == degree) return true;
    for (Letter c = 0; c < alphabet; ++c) {
      std::uint32_t s = aut.step(states.back(), c);
      if (aut.dead(s)) continue;
      states.push_back(s);
      w.letters.push_back(c);
      bool hit = self(self);
      w.letters.pop_back();
      states.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return aut.dead(aut.root()) || !dfs(dfs);
}

}  // namespace k2ws
