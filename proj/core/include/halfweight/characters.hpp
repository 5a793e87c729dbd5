#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "halfweight/cyclotomic.hpp"

namespace halfweight {

struct CyclicComponent {
  long prime;        // prime this component belongs to
  long prime_power;  // p^a
  long generator;    // generator of the component, as a residue mod p^a
  long order;        // order of the generator
};

// Structure of (Z/N)^x with discrete-log tables; built once per modulus and
// shared read-only between characters.
struct ModulusData {
  long modulus;
  std::vector<CyclicComponent> comps;
  // per component: residue mod p^a -> dlog, or -1 for non-units
  std::vector<std::vector<long>> dlog;
};

const ModulusData& modulus_data(long n);

// Dirichlet character: exponents on the canonical generators of (Z/N)^x.
// Values are exact roots of unity; chi(a) = 0 when gcd(a, N) > 1.
class DirichletCharacter {
 public:
  DirichletCharacter() : DirichletCharacter(1, {}) {}
  DirichletCharacter(long modulus, std::vector<long> exponents);

  static DirichletCharacter trivial(long modulus) {
    const ModulusData& md = modulus_data(modulus);
    return DirichletCharacter(modulus,
                              std::vector<long>(md.comps.size(), 0));
  }
  // "N:e1,e2,..." on the canonical generators.
  static DirichletCharacter parse(const std::string& spec);
  std::string spec_string() const;

  long modulus() const { return md_->modulus; }
  const std::vector<long>& exponents() const { return exps_; }

  Cyclotomic operator()(long a) const;
  // (level, exponent) of the root-of-unity value, or nullopt when chi(a)=0.
  std::optional<std::pair<long, long>> value_exponent(long a) const;
  std::complex<double> value_cx(long a) const;

  long order() const;
  bool is_trivial() const;
  int parity() const;  // chi(-1), +1 or -1

  DirichletCharacter power(long m) const;
  DirichletCharacter inverse() const { return power(-1); }
  // Pointwise product; moduli are lifted to the lcm first.
  DirichletCharacter operator*(const DirichletCharacter& o) const;

  DirichletCharacter lift_to(long new_modulus) const;
  long conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }
  // The primitive character inducing this one.
  DirichletCharacter primitive_part() const;

  bool operator==(const DirichletCharacter& o) const;

  static std::vector<DirichletCharacter> all_mod(long modulus);

 private:
  const ModulusData* md_;
  std::vector<long> exps_;
};

struct GaussSumResult {
  Cyclotomic value;
  bool primitive_input;
};

// G(chi) = sum_{a=1..N} chi(a) e(a/N).  In the source conventions the
// summand is written on the inverse of the finite part of a Hecke character;
// that inverse is exactly the ideal character this class models.
GaussSumResult gauss_sum(const DirichletCharacter& chi);

// J(chi1, chi2) = sum_{a mod c} chi1(a) chi2(1-a), common modulus c.
Cyclotomic jacobi_sum(const DirichletCharacter& chi1,
                      const DirichletCharacter& chi2);

long kronecker_symbol(const Int& a, const Int& n);

// Quadratic character of Q(i^[n/2] sqrt(det(2 tau))): the Kronecker symbol of
// the fundamental discriminant of the field, trivial when the discriminant is
// a square.
class HalfIntSymMat;
DirichletCharacter rho_tau(int degree, const HalfIntSymMat& tau);

struct ParityData {
  int n;
  int k2;
  int epsilon;
  int mu;
  int delta;
  bool char2_ok;  // psi(-1)^n == (-1)^(n[k])
};

ParityData parity_bundle(int n, int k2, const DirichletCharacter& psi,
                         const DirichletCharacter& chi);

// Exact Bernoulli numbers / polynomials (B1 = -1/2 convention).
Rat bernoulli_number(int n);
Rat bernoulli_poly(int n, const Rat& x);
Cyclotomic generalized_bernoulli(int n, const DirichletCharacter& chi);

// Exact L(s0, chi) at integers s0 <= 0 via generalized Bernoulli numbers.
Cyclotomic dirichlet_L_exact(long s0, const DirichletCharacter& chi);

struct NumericValue {
  std::complex<double> value;
  double tail_bound;
};

// Euler product over p <= prime_bound; requires Re(s) > 1.
NumericValue dirichlet_L_numeric(double s, const DirichletCharacter& chi,
                                 long prime_bound);

// Normalising product of Dirichlet L-values: the half-integral branch is
// prod_{i=1..[(n+1)/2]} L(4s-2i+1, phi^2), the integral branch
// L(2s, phi) prod_{i=1..[n/2]} L(4s-2i, phi^2).  Euler factors at the primes
// in `removed` are deleted.  Arguments in (-inf,0] integers use the exact
// value; arguments > 1 the Euler product; anything else is an error naming
// the factor.
NumericValue lambda_norm(int n, int kappa2, const Rat& s,
                         const DirichletCharacter& phi,
                         const std::set<long>& removed, long prime_bound);

// Both sides of the Gauss/Jacobi period-comparison identity
//   G(eta) G(eta^(n-1)) * [J(rho,rho)^(n-1) J(psibar,rho) J(psibar^(n-1),rho^(n-1))]
//   == G(psibar) G(psibar^(n-1)) * G(rho)^n,   eta = psibar * rho.
// Exact for n = 2 with rho odd; for odd n the two sides differ by a rational
// factor that the surrounding algebraicity statements absorb.
struct PeriodComparison {
  Cyclotomic lhs;
  Cyclotomic rhs;
};
PeriodComparison period_comparison(const DirichletCharacter& psi,
                                   const DirichletCharacter& rho, int n);

std::vector<long> primes_up_to(long bound);

}  // namespace halfweight
