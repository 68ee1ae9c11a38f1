// Words in the free monoid on a finite ordered alphabet, and the degree
// lexicographic order.  Shorter words come first; words of equal length are
// compared letter by letter, the variable with the smaller index being
// smaller.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k2ws/field.hpp"

namespace k2ws {

using Letter = std::uint8_t;

class VariableSet {
 public:
  VariableSet() = default;  // placeholder until a result is filled in

  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw Error("variable set is empty");
    if (names_.size() > 255) throw Error("too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw Error("empty variable name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw Error("duplicate variable name: " + names_[i]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view s) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == s) return i;
    return std::nullopt;
  }

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Word {
  std::vector<Letter> letters;

  static Word one() { return {}; }

  std::size_t degree() const { return letters.size(); }
  bool is_one() const { return letters.empty(); }

  Word operator*(const Word& w) const {
    Word r = *this;
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
  }

  bool operator==(const Word&) const = default;
};

inline std::strong_ordering deglex_cmp(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() <=> b.letters.size();
  for (std::size_t i = 0; i < a.letters.size(); ++i)
    if (a.letters[i] != b.letters[i]) return a.letters[i] <=> b.letters[i];
  return std::strong_ordering::equal;
}

inline bool deglex_less(const Word& a, const Word& b) {
  return deglex_cmp(a, b) == std::strong_ordering::less;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  Word r;
  r.letters.assign(w.letters.begin() + pos, w.letters.begin() + pos + len);
  return r;
}

// First position at which u occurs as a contiguous factor of w.
inline std::optional<std::size_t> find_factor(const Word& u, const Word& w) {
  if (u.degree() > w.degree()) return std::nullopt;
  for (std::size_t p = 0; p + u.degree() <= w.degree(); ++p) {
    bool hit = true;
    for (std::size_t k = 0; k < u.degree(); ++k)
      if (w.letters[p + k] != u.letters[k]) {
        hit = false;
        break;
      }
    if (hit) return p;
  }
  return std::nullopt;
}

inline bool is_factor(const Word& u, const Word& w) {
  return find_factor(u, w).has_value();
}

// Step r places (r may be negative) along the deglex enumeration of all
// words over an alphabet of the given size.  Degree d words are followed by
// degree d+1 words; within a degree the order is lexicographic.
inline Word word_successor(const Word& a, long long r, std::size_t alphabet) {
  if (alphabet == 0) throw Error("word_successor on empty alphabet");
  Word w = a;
  const Letter top = Letter(alphabet - 1);
  for (; r > 0; --r) {
    std::size_t i = w.letters.size();
    while (i > 0 && w.letters[i - 1] == top) --i;
    if (i == 0) {
      w.letters.assign(w.letters.size() + 1, 0);
    } else {
      ++w.letters[i - 1];
      std::fill(w.letters.begin() + i, w.letters.end(), Letter(0));
    }
  }
  for (; r < 0; ++r) {
    std::size_t i = w.letters.size();
    while (i > 0 && w.letters[i - 1] == 0) --i;
    if (i == 0) {
      if (w.letters.empty())
        throw Error("word_successor stepped below the empty word");
      w.letters.assign(w.letters.size() - 1, top);
    } else {
      --w.letters[i - 1];
      std::fill(w.letters.begin() + i, w.letters.end(), top);
    }
  }
  return w;
}

inline std::string to_string(const Word& w, const VariableSet& vars) {
  if (w.is_one()) return "1";
  std::string s;
  std::size_t i = 0;
  while (i < w.degree()) {
    std::size_t run = 1;
    while (i + run < w.degree() && w.letters[i + run] == w.letters[i]) ++run;
    if (!s.empty()) s += "*";
    s += vars.name(w.letters[i]);
    if (run > 1) s += "^" + std::to_string(run);
    i += run;
  }
  return s;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter c : w.letters) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace k2ws
