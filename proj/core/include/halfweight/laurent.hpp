#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "halfweight/cyclotomic.hpp"

namespace halfweight {

// Variable universe for the Satake / Euler-factor layer.
enum class Var : int { x1 = 0, x2 = 1, x3 = 2, t = 3, u = 4, T = 5 };
constexpr int kNumVars = 6;
const char* var_name(Var v);

using ExpVec = std::array<int16_t, kNumVars>;

// Multivariate Laurent polynomial with exact cyclotomic coefficients.
// No zero terms are stored.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Cyclotomic& c) { add_term(ExpVec{}, c); }
  explicit Laurent(const Rat& r) : Laurent(Cyclotomic(r)) {}
  explicit Laurent(long n) : Laurent(Cyclotomic(n)) {}

  static Laurent variable(Var v, int exponent = 1);
  static Laurent monomial(const ExpVec& e, const Cyclotomic& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_value() const;
  const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Cyclotomic& c);

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  Laurent& operator*=(const Cyclotomic& c);
  friend Laurent operator*(Laurent a, const Cyclotomic& c) { return a *= c; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(long e) const;  // e >= 0

  // Move all powers of `from` onto `to` (the substitution x_n -> u).
  Laurent rename_var(Var from, Var to) const;
  // x -> x^{-1} on one variable.
  Laurent invert_var(Var v) const;
  // Evaluate one variable at an exact scalar (negative powers invert it).
  Laurent evaluate(Var v, const Cyclotomic& value) const;

  std::string str() const;

 private:
  std::map<ExpVec, Cyclotomic> terms_;
};

}  // namespace halfweight
