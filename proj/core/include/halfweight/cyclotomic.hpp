#pragma once

#include <complex>
#include <string>
#include <vector>

#include "halfweight/rational.hpp"

namespace halfweight {

// Exact element of Q(zeta_N), stored on the tensor basis of the prime-power
// factors: coordinates on zeta_N^j for the j whose residue mod p^a lies below
// p^(a-1)(p-1) for every p^a || N.  Reduction to that basis is canonical, so
// two equal values at the same level have identical coordinates.
class Cyclotomic {
 public:
  Cyclotomic() : level_(1), coords_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& r) : level_(1), coords_(1, canonical(r)) {}
  explicit Cyclotomic(long n) : level_(1), coords_(1, Rat(n)) {}

  static Cyclotomic zeta(long level, long power = 1);
  // e(q) = exp(2*pi*i*q) for rational q, as an exact root of unity.
  static Cyclotomic root_of_unity(const Rat& q);

  long level() const { return level_; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // error when not rational

  // Representation of the same value in Q(zeta_M), N | M.
  Cyclotomic lifted_to(long new_level) const;
  // Smallest cyclotomic field containing the value.
  Cyclotomic descended() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic& operator*=(const Rat& r);
  friend Cyclotomic operator*(Cyclotomic a, const Rat& r) { return a *= r; }
  friend Cyclotomic operator*(const Rat& r, Cyclotomic a) { return a *= r; }

  Cyclotomic inverse() const;  // error on zero
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Galois action zeta_N -> zeta_N^t, gcd(t, N) = 1.
  Cyclotomic galois(long t) const;
  Cyclotomic conj() const { return galois(-1); }

  std::complex<double> embed() const;

  std::string str() const;

 private:
  long level_;
  std::vector<Rat> coords_;

  void reduce();
  friend class CycBuilder;
};

// Accumulates monomial contributions at a fixed level, reducing once.
class CycBuilder {
 public:
  explicit CycBuilder(long level) : level_(level), coords_(level, Rat(0)) {}
  void add(long exponent, const Rat& c) {
    long e = exponent % level_;
    if (e < 0) e += level_;
    coords_[e] += canonical(c);
  }
  Cyclotomic build() const;

 private:
  long level_;
  std::vector<Rat> coords_;
};

}  // namespace halfweight
