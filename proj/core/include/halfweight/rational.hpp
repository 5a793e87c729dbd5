#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "halfweight/checks.hpp"

namespace halfweight {

// Arbitrary-precision integers and rationals.  mpq_class keeps values in
// lowest terms with positive denominator, which is exactly the canonical
// form required of the exact substrate.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  HW_DOMAIN_CHECK(den != 0, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat canonical(Rat q) {
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// q = u/2 with u odd, i.e. a strict half-integer.
inline bool is_half_odd(const Rat& q) { return q.get_den() == 2; }

// q in (1/2)Z.
inline bool is_half_integral(const Rat& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

inline Int floor_int(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  HW_DOMAIN_CHECK(base != 0 || e > 0, "0^negative");
  Rat acc(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  long n = e > 0 ? e : -e;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= b;
    b *= b;
  }
  return acc;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline long to_long(const Int& z) {
  HW_DOMAIN_CHECK(z.fits_slong_p(), "integer out of machine range");
  return z.get_si();
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat q;
  HW_DOMAIN_CHECK(q.set_str(s, 10) == 0, "bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// p-adic valuation of a nonzero rational.
inline long valuation(const Rat& q, long p) {
  HW_DOMAIN_CHECK(q != 0, "valuation of zero");
  long v = 0;
  Int num = q.get_num(), den = q.get_den();
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    --v;
  }
  return v;
}

}  // namespace halfweight
