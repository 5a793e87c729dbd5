#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfweight/characters.hpp"
#include "halfweight/cyclotomic.hpp"
#include "halfweight/symmat.hpp"

namespace halfweight {

// Positive definite even integral Gram matrix (even lattice).
class GramMatrix {
 public:
  GramMatrix(int rank, std::vector<long> entries);  // row-major, full matrix
  static GramMatrix by_name(const std::string& name);  // rank1 diag22 e8 e8e8

  int rank() const { return rank_; }
  long entry(int i, int j) const { return e_[i * rank_ + j]; }

 private:
  int rank_;
  std::vector<long> e_;
};

// Truncated Fourier expansion: tau -> coefficient for tr(tau) <= trunc, every
// key positive semidefinite.  The truncation bound always travels with the
// data; binary operations cut to the smaller bound.
class FourierExpansion {
 public:
  FourierExpansion(int degree, int weight2, long trunc)
      : degree_(degree), weight2_(weight2), trunc_(trunc),
        level_b_(1), level_c_(1) {}

  int degree() const { return degree_; }
  int weight2() const { return weight2_; }
  long trunc() const { return trunc_; }
  Rat level_b() const { return level_b_; }
  Rat level_c() const { return level_c_; }
  void set_level(const Rat& b, const Rat& c) { level_b_ = b; level_c_ = c; }

  const std::map<HalfIntSymMat, Cyclotomic>& coeffs() const { return c_; }
  Cyclotomic coeff(const HalfIntSymMat& tau) const;
  void set_coeff(const HalfIntSymMat& tau, const Cyclotomic& v);
  void add_coeff(const HalfIntSymMat& tau, const Cyclotomic& v);

  bool operator==(const FourierExpansion& o) const;

  // Restriction to a smaller trace bound.
  FourierExpansion truncated(long bound) const;

  std::string str() const;

 private:
  int degree_;
  int weight2_;
  long trunc_;
  Rat level_b_, level_c_;
  std::map<HalfIntSymMat, Cyclotomic> c_;
};

// Theta series of an even lattice: coefficient at tau counts integral
// matrices x with x^T Q x = 2 tau.  Weight is rank(Q)/2, so weight2 = rank.
FourierExpansion theta_lattice(const GramMatrix& q, int degree, long bound);

// Twisted degree-n theta series: coefficient at tau is the sum over integer
// matrices x with x^T tau0 x = tau of chi^{-1}(det x) (det x)^mu.
FourierExpansion theta_chi(int degree, const HalfIntSymMat& tau0, int mu,
                           const DirichletCharacter& chi, long bound);

// Convolution product; weights add, truncation drops to the smaller bound.
FourierExpansion mul(const FourierExpansion& f, const FourierExpansion& g);

// Degree-lowering operator: coefficient at tau' is the coefficient of f at
// diag[tau', 0].
FourierExpansion siegel_phi(const FourierExpansion& f);

FourierExpansion galois_on_form(const FourierExpansion& f, long t);

struct EvalResult {
  std::complex<double> value;
  double tail_bound;
};

// Evaluate at z = x + iy (symmetric complex, row-major full matrix) with
// positive definite imaginary part.
EvalResult eval_at(const FourierExpansion& f,
                   const std::vector<std::complex<double>>& z);

// All lattice vectors v with v^T Q v <= norm_bound, one representative per
// +-pair not included -- both signs are listed; includes 0.
std::vector<std::vector<long>> lattice_points(const GramMatrix& q,
                                              long norm_bound);

// Versioned text serialization; bit-exact round trip.
void write_expansion(std::ostream& os, const FourierExpansion& f);
FourierExpansion read_expansion(std::istream& is);
std::string expansion_to_string(const FourierExpansion& f);
FourierExpansion expansion_from_string(const std::string& s);

}  // namespace halfweight
