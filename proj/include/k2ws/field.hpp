// Exact coefficient fields: GF(p) for an odd-size prime p, and 64-bit
// rationals that refuse to overflow silently.  Field objects are small
// immutable contexts passed by const reference into every arithmetic routine.
#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace k2ws {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a query reaches past the degree bound a structure was built for.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Prime field GF(p).  Elements are canonical representatives in [0, p).
// p is capped below 2^31 so products fit in int64 without tricks.
class Fp {
 public:
  using Elt = std::int64_t;

  explicit Fp(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
      throw Error("field characteristic out of range: " + std::to_string(p));
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw Error("field characteristic must be prime: " + std::to_string(p));
  }

  std::int64_t modulus() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p_; }

  Elt from_int(std::int64_t n) const {
    Elt r = n % p_;
    return r < 0 ? r + p_ : r;
  }
  Elt from_fraction(std::int64_t num, std::int64_t den) const {
    return mul(from_int(num), inv(from_int(den)));
  }

  bool is_zero(Elt a) const { return a == 0; }
  bool is_one(Elt a) const { return a == one(); }

  Elt add(Elt a, Elt b) const {
    Elt r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Elt sub(Elt a, Elt b) const {
    Elt r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt mul(Elt a, Elt b) const { return a * b % p_; }

  Elt inv(Elt a) const {
    if (a == 0) throw Error("division by zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return t < 0 ? t + p_ : t;
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  // Balanced representative, so -1 prints as "-1" rather than p-1.
  std::string str(Elt a) const {
    std::int64_t v = a <= p_ / 2 ? a : a - p_;
    return std::to_string(v);
  }

  bool operator==(const Fp&) const = default;

 private:
  std::int64_t p_;
};

// Rational numbers with 64-bit numerator and denominator, always reduced,
// denominator positive.  Any intermediate that leaves the representable
// range throws; results are never silently wrong.
class Rationals {
 public:
  struct Elt {
    std::int64_t num;
    std::int64_t den;
    bool operator==(const Elt&) const = default;
  };

  Elt zero() const { return {0, 1}; }
  Elt one() const { return {1, 1}; }

  Elt from_int(std::int64_t n) const { return {n, 1}; }
  Elt from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw Error("rational with zero denominator");
    return make(num, den);
  }

  bool is_zero(Elt a) const { return a.num == 0; }
  bool is_one(Elt a) const { return a.num == 1 && a.den == 1; }

  Elt add(Elt a, Elt b) const {
    I128 n = I128(a.num) * b.den + I128(b.num) * a.den;
    return make(n, I128(a.den) * b.den);
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const { return {-a.num, a.den}; }
  Elt mul(Elt a, Elt b) const {
    return make(I128(a.num) * b.num, I128(a.den) * b.den);
  }
  Elt inv(Elt a) const {
    if (a.num == 0) throw Error("division by zero in QQ");
    return make(a.den, a.num);
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  std::string str(Elt a) const {
    std::string s = std::to_string(a.num);
    if (a.den != 1) s += "/" + std::to_string(a.den);
    return s;
  }

  bool operator==(const Rationals&) const = default;

 private:
  using I128 = __int128;

  static I128 gcd128(I128 a, I128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Elt make(I128 num, I128 den) {
    if (num == 0) return {0, 1};
    if (den < 0) {
      num = -num;
      den = -den;
    }
    I128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr I128 lo = -I128(std::uint64_t(1) << 63);
    constexpr I128 hi = I128((std::uint64_t(1) << 63) - 1);
    if (num < lo || num > hi || den > hi)
      throw Error("rational coefficient overflow; rerun over a prime field");
    return {std::int64_t(num), std::int64_t(den)};
  }
};

template <class F>
concept ExactField = requires(const F f, typename F::Elt a) {
  { f.zero() } -> std::same_as<typename F::Elt>;
  { f.one() } -> std::same_as<typename F::Elt>;
  { f.from_int(std::int64_t(1)) } -> std::same_as<typename F::Elt>;
  { f.from_fraction(std::int64_t(1), std::int64_t(2)) } -> std::same_as<typename F::Elt>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::same_as<typename F::Elt>;
  { f.sub(a, a) } -> std::same_as<typename F::Elt>;
  { f.neg(a) } -> std::same_as<typename F::Elt>;
  { f.mul(a, a) } -> std::same_as<typename F::Elt>;
  { f.inv(a) } -> std::same_as<typename F::Elt>;
  { f.str(a) } -> std::same_as<std::string>;
};

}  // namespace k2ws
