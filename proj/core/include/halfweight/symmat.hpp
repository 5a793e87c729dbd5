#pragma once

#include <string>
#include <vector>

#include "halfweight/rational.hpp"

namespace halfweight {

enum class PsdClass { positive_definite, positive_semidefinite, indefinite };

// Symmetric n x n matrix with integer diagonal and half-integer off-diagonal
// entries, stored doubled: T = 2*tau is integral with even diagonal.  Only the
// upper triangle is kept (row-major).
class HalfIntSymMat {
 public:
  HalfIntSymMat() : n_(0) {}
  // Doubled upper triangle, row-major: T_00, T_01, ..., T_0(n-1), T_11, ...
  HalfIntSymMat(int n, std::vector<long> doubled_upper);

  static HalfIntSymMat zero(int n);
  static HalfIntSymMat diag(const std::vector<long>& tau_diag);

  int degree() const { return n_; }
  long doubled(int i, int j) const;  // T_ij = 2*tau_ij
  const std::vector<long>& doubled_upper() const { return d_; }
  Rat entry(int i, int j) const { return rat(doubled(i, j), 2); }

  long trace() const;  // tr(tau), an integer
  Rat det() const;          // det(tau)
  Int doubled_det() const;  // det(2*tau), an integer

  // tau' with the last row/column of tau appended as given (doubled data).
  HalfIntSymMat extend_diag_zero() const;  // diag[tau, 0]
  HalfIntSymMat leading_block(int m) const;

  bool operator==(const HalfIntSymMat& o) const {
    return n_ == o.n_ && d_ == o.d_;
  }
  bool operator!=(const HalfIntSymMat& o) const { return !(*this == o); }
  // Orders by (trace, lexicographic doubled entries); the enumeration order.
  bool operator<(const HalfIntSymMat& o) const;

  std::string str() const;

 private:
  int n_;
  std::vector<long> d_;
};

PsdClass is_psd(const HalfIntSymMat& tau);

// Classification of an arbitrary symmetric matrix given as doubled upper
// triangle (no evenness constraint on the diagonal).
PsdClass is_psd_doubled(int n, const std::vector<long>& doubled_upper);

// All tau in the half-integral PSD cone with tr(tau) <= bound, ordered by
// (trace, lexicographic doubled matrix), each exactly once.  Supported for
// degree <= 3.
std::vector<HalfIntSymMat> enumerate_psd(int degree, long trace_bound);

// Largest N such that h^T (2 tau) h lies in (4/N) Z for every integer vector
// h; equals 4 / gcd of the values over a spanning set.  tau must be positive
// definite.  The result is a positive rational.
Rat level_ideal(const HalfIntSymMat& tau);

}  // namespace halfweight
