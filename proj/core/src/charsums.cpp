#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "halfweight/characters.hpp"
#include "halfweight/symmat.hpp"

namespace halfweight {

GaussSumResult gauss_sum(const DirichletCharacter& chi) {
  long n = chi.modulus();
  long vlev = 1;
  for (long a = 1; a <= n; ++a) {
    auto ve = chi.value_exponent(a);
    if (ve) {
      vlev = ve->first;
      break;
    }
  }
  long lev = std::lcm(vlev, n);
  CycBuilder b(lev);
  for (long a = 1; a <= n; ++a) {
    auto ve = chi.value_exponent(a);
    if (!ve) continue;
    long e = ve->second * (lev / ve->first) % lev + a % n * (lev / n) % lev;
    b.add(e, Rat(1));
  }
  return {b.build(), chi.is_primitive()};
}

Cyclotomic jacobi_sum(const DirichletCharacter& chi1,
                      const DirichletCharacter& chi2) {
  HW_DOMAIN_CHECK(chi1.modulus() == chi2.modulus(),
                  "jacobi sum needs a common modulus");
  long c = chi1.modulus();
  long l1 = 1, l2 = 1;
  for (long a = 1; a <= c; ++a) {
    auto v = chi1.value_exponent(a);
    if (v) {
      l1 = v->first;
      break;
    }
  }
  for (long a = 1; a <= c; ++a) {
    auto v = chi2.value_exponent(a);
    if (v) {
      l2 = v->first;
      break;
    }
  }
  long lev = std::lcm(l1, l2);
  CycBuilder b(lev);
  for (long a = 0; a < c; ++a) {
    auto v1 = chi1.value_exponent(a);
    if (!v1) continue;
    auto v2 = chi2.value_exponent(1 - a);
    if (!v2) continue;
    long e = (v1->second * (lev / v1->first) + v2->second * (lev / v2->first)) %
             lev;
    b.add(e, Rat(1));
  }
  return b.build();
}

long kronecker_symbol(const Int& a_in, const Int& n_in) {
  Int a = a_in, n = n_in;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  long result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // strip twos from n: (a|2) = 0,1,-1 per a mod 8
  while (n % 2 == 0) {
    n /= 2;
    long am8 = to_long(Int(((a % 8) + 8) % 8));
    if (am8 == 1 || am8 == 7)
      ;
    else if (am8 == 3 || am8 == 5)
      result = -result;
    else
      return 0;
  }
  a %= n;
  if (a < 0) a += n;
  // now Jacobi symbol (a|n), n odd positive
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long nm8 = to_long(Int(n % 8));
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

DirichletCharacter rho_tau(int degree, const HalfIntSymMat& tau) {
  HW_DOMAIN_CHECK(is_psd(tau) == PsdClass::positive_definite,
                  "rho_tau needs a positive definite matrix");
  Int m = tau.doubled_det();
  HW_LOGIC_CHECK(m > 0, "positive determinant expected");
  Int d0 = (degree / 2) % 2 == 1 ? Int(-m) : m;
  // squarefree kernel by trial division
  Int s(1), rest = abs(d0);
  for (Int p(2); p * p <= rest; ++p) {
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e % 2 == 1) s *= p;
  }
  s *= rest;  // the remaining part is prime (or 1)
  if (d0 < 0) s = -s;
  if (s == 1) return DirichletCharacter::trivial(1);
  Int D = ((s % 4) + 4) % 4 == 1 ? s : 4 * s;
  long modulus = to_long(Int(abs(D)));
  // express the Kronecker character of D on the canonical generators
  const ModulusData& md = modulus_data(modulus);
  std::vector<long> exps(md.comps.size(), 0);
  DirichletCharacter chi = DirichletCharacter::trivial(modulus);
  // solve exponents componentwise from the generator values
  for (size_t i = 0; i < md.comps.size(); ++i) {
    // global generator residue: equals comps[i].generator mod its prime power
    // and 1 mod the complement; reconstruct with the same CRT as lift_to by
    // probing: find g with the right dlogs.
    // Simpler: search a residue g that is the generator in component i and
    // trivial in the others.
    long g = -1;
    for (long x = 1; x < modulus; ++x) {
      if (std::gcd(x, modulus) != 1) continue;
      bool match = true;
      for (size_t j = 0; j < md.comps.size(); ++j) {
        long want = (j == i) ? 1 : 0;
        long dl = md.dlog[j][x % md.comps[j].prime_power];
        if (dl != want) {
          match = false;
          break;
        }
      }
      if (match) {
        g = x;
        break;
      }
    }
    HW_LOGIC_CHECK(g > 0, "component generator residue not found");
    long val = kronecker_symbol(D, Int(g));
    HW_LOGIC_CHECK(val == 1 || val == -1, "Kronecker value must be a unit");
    if (val == -1) {
      HW_LOGIC_CHECK(md.comps[i].order % 2 == 0, "odd component with -1 value");
      exps[i] = md.comps[i].order / 2;
    }
  }
  DirichletCharacter out(modulus, std::move(exps));
  // cross-check on all units
  for (long x = 1; x < modulus; ++x) {
    if (std::gcd(x, modulus) != 1) continue;
    long kv = kronecker_symbol(D, Int(x));
    Cyclotomic cv = out(x);
    HW_LOGIC_CHECK(cv.is_rational() && cv.rational_value() == kv,
                   "Kronecker character mismatch");
  }
  return out;
}

ParityData parity_bundle(int n, int k2, const DirichletCharacter& psi,
                         const DirichletCharacter& chi) {
  ParityData pd{};
  pd.n = n;
  pd.k2 = k2;
  pd.delta = ((n % 2) + 2) % 2;
  // [k] for k = k2/2: equals k when k is integral, k - 1/2 when half-odd.
  long kfloor = k2 >= 0 ? k2 / 2 : (k2 - 1) / 2;
  int spsi = psi.parity() == 1 ? 0 : 1;
  pd.epsilon = static_cast<int>((spsi + kfloor) % 2 + 2) % 2;
  int spc = (psi * chi).parity() == 1 ? 0 : 1;
  pd.mu = static_cast<int>((spc + kfloor) % 2 + 2) % 2;
  // psi(-1)^n == (-1)^(n [k])
  int lhs = (spsi * n) % 2;
  int rhs = static_cast<int>((kfloor * n) % 2);
  pd.char2_ok = (lhs == rhs);
  return pd;
}

Rat bernoulli_number(int n) {
  static std::vector<Rat> cache{Rat(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  ->  B_m
    Rat acc(0);
    Int binom(1);  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rat(binom) * cache[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    // binom is now C(m+1, m) = m+1
    cache.push_back(-acc / Rat(binom));
  }
  Rat b = cache[n];
  // convention B1 = -1/2 (matches B_n(x) below with B_n = B_n(0))
  return b;
}

Rat bernoulli_poly(int n, const Rat& x) {
  Rat acc(0);
  Int binom(1);
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  std::vector<Rat> xpow(n + 1);
  xpow[0] = Rat(1);
  for (int k = 1; k <= n; ++k) xpow[k] = xpow[k - 1] * x;
  for (int k = 0; k <= n; ++k) {
    acc += Rat(binom) * bernoulli_number(n - k) * xpow[k];
    binom = binom * (n - k) / (k + 1);
  }
  return acc;
}

Cyclotomic generalized_bernoulli(int n, const DirichletCharacter& chi) {
  long N = chi.modulus();
  Rat scale = pow_rat(Rat(N), n - 1);
  Cyclotomic acc;
  for (long a = 1; a <= N; ++a) {
    Cyclotomic v = chi(a);
    if (v.is_zero()) continue;
    acc += v * bernoulli_poly(n, rat(a, N));
  }
  return acc * scale;
}

Cyclotomic dirichlet_L_exact(long s0, const DirichletCharacter& chi) {
  HW_DOMAIN_CHECK(s0 <= 0, "exact mode needs a non-positive integer argument");
  int n = static_cast<int>(1 - s0);
  Cyclotomic b = generalized_bernoulli(n, chi);
  return b * rat(-1, n);
}

NumericValue dirichlet_L_numeric(double s, const DirichletCharacter& chi,
                                 long prime_bound) {
  HW_DOMAIN_CHECK(s > 1.0, "Euler product needs Re(s) > 1");
  std::complex<double> acc(1.0, 0.0);
  for (long p : primes_up_to(prime_bound)) {
    std::complex<double> lp = 1.0 - chi.value_cx(p) * std::pow(double(p), -s);
    acc /= lp;
  }
  // |log tail| <= sum_{m > P} m^{-s} roughly P^{1-s}/(s-1)
  double tail = std::pow(double(prime_bound), 1.0 - s) / (s - 1.0) * 2.0;
  return {acc, std::abs(acc) * tail};
}

namespace {

// L_a-style value with explicit removed Euler factors, mixing exact values at
// non-positive integers and the Euler product elsewhere.
std::complex<double> l_value_removed(const Rat& arg,
                                     const DirichletCharacter& chi,
                                     const std::set<long>& removed,
                                     long prime_bound, const char* label) {
  double sd = to_double(arg);
  std::complex<double> v;
  if (is_integer(arg) && arg <= 0) {
    v = dirichlet_L_exact(to_long(Int(arg.get_num())), chi).embed();
  } else if (sd > 1.0) {
    v = dirichlet_L_numeric(sd, chi, prime_bound).value;
  } else {
    HW_DOMAIN_CHECK(false, std::string("L-factor not evaluable: ") + label +
                               " at s = " + rat_str(arg));
  }
  for (long p : removed)
    v *= (1.0 - chi.value_cx(p) * std::pow(double(p), -sd));
  return v;
}

}  // namespace

NumericValue lambda_norm(int n, int kappa2, const Rat& s,
                         const DirichletCharacter& phi,
                         const std::set<long>& removed, long prime_bound) {
  std::complex<double> acc(1.0, 0.0);
  DirichletCharacter phi2 = phi.power(2);
  if (kappa2 % 2 == 0) {
    acc *= l_value_removed(2 * s, phi, removed, prime_bound, "L(2s, phi)");
    for (int i = 1; i <= n / 2; ++i)
      acc *= l_value_removed(4 * s - 2 * i, phi2, removed, prime_bound,
                             "L(4s-2i, phi^2)");
  } else {
    for (int i = 1; i <= (n + 1) / 2; ++i)
      acc *= l_value_removed(4 * s - 2 * i + 1, phi2, removed, prime_bound,
                             "L(4s-2i+1, phi^2)");
  }
  double tail = 4.0 * std::pow(double(prime_bound), 1.0 - 2.0 * to_double(s));
  return {acc, std::abs(acc) * std::abs(tail)};
}

PeriodComparison period_comparison(const DirichletCharacter& psi,
                                   const DirichletCharacter& rho, int n) {
  long c = std::lcm(psi.modulus(), rho.modulus());
  DirichletCharacter psibar = psi.inverse().lift_to(c);
  DirichletCharacter rh = rho.lift_to(c);
  DirichletCharacter eta = psibar * rh;
  DirichletCharacter etam = eta.power(n - 1);
  DirichletCharacter psibm = psibar.power(n - 1);
  DirichletCharacter rhom = rh.power(n - 1);
  Cyclotomic jrr = jacobi_sum(rh, rh);
  Cyclotomic jr_pow(Rat(1));
  for (int i = 0; i < n - 1; ++i) jr_pow *= jrr;
  Cyclotomic lhs = gauss_sum(eta).value * gauss_sum(etam).value * jr_pow *
                   jacobi_sum(psibar, rh) * jacobi_sum(psibm, rhom);
  Cyclotomic grho = gauss_sum(rh).value;
  Cyclotomic gr_pow(Rat(1));
  for (int i = 0; i < n; ++i) gr_pow *= grho;
  Cyclotomic rhs = gauss_sum(psibar).value * gauss_sum(psibm).value * gr_pow;
  return {lhs, rhs};
}

}  // namespace halfweight
