#include <doctest.h>

#include <cmath>
#include <numeric>

#include "halfweight/characters.hpp"
#include "halfweight/symmat.hpp"

using namespace halfweight;

static DirichletCharacter odd_char_mod4() {
  // (Z/4)^x has one component of order 2; exponent 1 is the odd character
  return DirichletCharacter(4, {1});
}

static DirichletCharacter quadratic_mod(long p) {
  // single component of order p-1; exponent (p-1)/2
  return DirichletCharacter(p, {(p - 1) / 2});
}

TEST_CASE("character evaluation and structure") {
  auto chi = odd_char_mod4();
  CHECK(chi(1) == Cyclotomic(1L));
  CHECK(chi(3) == Cyclotomic(-1L));
  CHECK(chi(2).is_zero());
  CHECK(chi.parity() == -1);
  CHECK(chi.order() == 2);
  CHECK(chi.conductor() == 4);

  auto q5 = quadratic_mod(5);
  CHECK(q5(2) == Cyclotomic(-1L));
  CHECK(q5(4) == Cyclotomic(1L));
  // multiplicativity on a sweep
  for (long a = 1; a < 20; ++a)
    for (long b = 1; b < 20; ++b)
      CHECK(q5(a * b) == q5(a) * q5(b));
}

TEST_CASE("spec string round trip") {
  auto chi = DirichletCharacter::parse("20:1,2");
  CHECK(chi.spec_string() == "20:1,2");
  CHECK(chi.modulus() == 20);
}

TEST_CASE("lift and conductor") {
  auto q5 = quadratic_mod(5);
  auto lifted = q5.lift_to(20);
  for (long a = 1; a < 20; ++a) {
    if (std::gcd(a, 20L) != 1) continue;
    CHECK(lifted(a) == q5(a));
  }
  CHECK(lifted.conductor() == 5);
  CHECK(lifted.primitive_part() == q5);
  CHECK(!lifted.is_primitive());
  CHECK(q5.is_primitive());
}

TEST_CASE("gauss sums") {
  // trivial character mod 1
  CHECK(gauss_sum(DirichletCharacter::trivial(1)).value == Cyclotomic(1L));
  // odd character mod 4: 2 zeta_4
  auto g = gauss_sum(odd_char_mod4());
  CHECK(g.primitive_input);
  CHECK(g.value == Cyclotomic::zeta(4) * Rat(2));
  // |G(chi)|^2 = N for all primitive chi, N <= 30 here (N <= 50 in acceptance)
  for (long n = 1; n <= 30; ++n) {
    for (const auto& chi : DirichletCharacter::all_mod(n)) {
      if (!chi.is_primitive()) continue;
      auto gs = gauss_sum(chi).value;
      CHECK(gs * gs.conj() == Cyclotomic(Rat(n)));
    }
  }
  // non-primitive input: flagged
  CHECK(!gauss_sum(quadratic_mod(5).lift_to(15)).primitive_input);
}

TEST_CASE("jacobi sums") {
  auto q5 = quadratic_mod(5);
  // J(chi, trivial): count of a with a, 1-a units
  auto triv5 = DirichletCharacter::trivial(5);
  Cyclotomic jt = jacobi_sum(triv5, triv5);
  CHECK(jt == Cyclotomic(3L));  // p - 2
  // quadratic mod 5: J(chi, chi) = -1
  CHECK(jacobi_sum(q5, q5) == Cyclotomic(-1L));
  // Gauss-Jacobi relation G(c1) G(c2) = J(c1,c2) G(c1 c2) on a prime modulus
  for (long p : {5L, 7L, 11L, 13L}) {
    for (const auto& c1 : DirichletCharacter::all_mod(p)) {
      if (c1.is_trivial()) continue;
      for (const auto& c2 : DirichletCharacter::all_mod(p)) {
        if (c2.is_trivial()) continue;
        auto c12 = c1 * c2;
        if (c12.is_trivial()) continue;  // product must stay primitive
        CHECK(gauss_sum(c1).value * gauss_sum(c2).value ==
              jacobi_sum(c1, c2) * gauss_sum(c12).value);
      }
    }
  }
  // Galois equivariance J(c1,c2)^sigma = J(c1^sigma, c2^sigma), termwise
  auto c1 = DirichletCharacter(13, {1});
  auto c2 = DirichletCharacter(13, {5});
  Cyclotomic j = jacobi_sum(c1, c2);
  CHECK(j.galois(5) == jacobi_sum(c1.power(5), c2.power(5)));
  CHECK_THROWS_AS(jacobi_sum(c1, quadratic_mod(5)), std::domain_error);
}

TEST_CASE("rho_tau") {
  // n=1, tau=(1): det(2 tau) = 2, field Q(sqrt 2), Kronecker(8|.)
  auto r1 = rho_tau(1, HalfIntSymMat::diag({1}));
  CHECK(r1(3) == Cyclotomic(-1L));
  CHECK(r1.modulus() == 8);
  // n=2, tau=I: det(2 tau) = 4, i^[1] makes d = -4 -> character mod 4
  auto r2 = rho_tau(2, HalfIntSymMat::diag({1, 1}));
  CHECK(r2.modulus() == 4);
  CHECK(r2(3) == Cyclotomic(-1L));
  // square discriminant: trivial
  auto r3 = rho_tau(1, HalfIntSymMat::diag({2}));  // det(2 tau) = 4
  CHECK(r3.modulus() == 1);
  CHECK(r3.is_trivial());
  // quadratic values and QR cross-check: rho values lie in {0, +-1} and match
  // squares mod the discriminant for prime arguments
  auto rho = rho_tau(1, HalfIntSymMat::diag({3}));  // disc of Q(sqrt 6)
  for (long a = 1; a < 24; ++a) {
    Cyclotomic v = rho(a);
    CHECK(v.is_rational());
    Rat rv = v.rational_value();
    CHECK((rv == 0 || rv == 1 || rv == -1));
  }
  // oracle: for odd primes q not dividing the discriminant, the value is +1
  // iff the (stripped) discriminant is a square mod q
  long D = 24;  // disc of Q(sqrt 6)
  for (long q : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
    bool is_sq = false;
    for (long x = 0; x < q; ++x)
      if ((x * x - D) % q == 0) is_sq = true;
    CHECK(rho(q).rational_value() == (is_sq ? 1 : -1));
  }
}

TEST_CASE("parity bundle") {
  auto triv1 = DirichletCharacter::trivial(1);
  // psi trivial, [k] even -> epsilon = 0 (k2 = 25: k = 25/2, [k] = 12)
  auto pd = parity_bundle(2, 25, triv1, triv1);
  CHECK(pd.epsilon == 0);
  CHECK(pd.delta == 0);
  // psi the odd character mod 4, [k] even -> epsilon = 1
  auto pd2 = parity_bundle(2, 25, odd_char_mod4(), triv1);
  CHECK(pd2.epsilon == 1);
  // delta = n mod 2
  CHECK(parity_bundle(3, 25, triv1, triv1).delta == 1);
  // mu tracks the parity of psi*chi
  auto pd3 = parity_bundle(1, 25, triv1, odd_char_mod4());
  CHECK(pd3.mu == 1);
}

TEST_CASE("bernoulli and exact L values") {
  CHECK(bernoulli_number(0) == Rat(1));
  CHECK(bernoulli_number(1) == rat(-1, 2));
  CHECK(bernoulli_number(2) == rat(1, 6));
  CHECK(bernoulli_number(12) == rat(-691, 2730));
  auto triv = DirichletCharacter::trivial(1);
  // zeta(-1) = -1/12, via B_2 = 1/6
  CHECK(dirichlet_L_exact(-1, triv) == Cyclotomic(rat(-1, 12)));
  // zeta(0) = -1/2
  CHECK(dirichlet_L_exact(0, triv) == Cyclotomic(rat(-1, 2)));
  // L(0, odd chi mod 4) = 1/2 via B_{1,chi} = -1/2
  CHECK(generalized_bernoulli(1, odd_char_mod4()) == Cyclotomic(rat(-1, 2)));
  CHECK(dirichlet_L_exact(0, odd_char_mod4()) == Cyclotomic(rat(1, 2)));
}

TEST_CASE("numeric L values") {
  auto triv = DirichletCharacter::trivial(1);
  auto z2 = dirichlet_L_numeric(2.0, triv, 2000000);
  double pi = 3.14159265358979323846;
  CHECK(std::abs(z2.value.real() - pi * pi / 6) < 1e-6);
  CHECK_THROWS_AS(dirichlet_L_numeric(0.5, triv, 100), std::domain_error);
}

TEST_CASE("lambda_norm") {
  auto triv = DirichletCharacter::trivial(1);
  // n=1 half-integral: single factor L(4s-1, phi^2)
  auto v1 = lambda_norm(1, 13, Rat(1), triv, {}, 400000);
  auto d1 = dirichlet_L_numeric(3.0, triv, 400000);
  CHECK(std::abs(v1.value - d1.value) < 1e-9);
  // n=2 integral, phi trivial, s=2: zeta(4) * zeta(6)
  auto v2 = lambda_norm(2, 8, Rat(2), triv, {}, 400000);
  double pi = 3.14159265358979323846;
  double z4 = std::pow(pi, 4) / 90.0, z6 = std::pow(pi, 6) / 945.0;
  CHECK(std::abs(v2.value.real() - z4 * z6) < 1e-5);
  // removing p=2 multiplies by the local factors exactly
  auto v2r = lambda_norm(2, 8, Rat(2), triv, {2L}, 400000);
  double fac = (1 - std::pow(2.0, -4.0)) * (1 - std::pow(2.0, -6.0));
  CHECK(std::abs(v2r.value.real() - v2.value.real() * fac) < 1e-6);
}

TEST_CASE("period comparison identity, exact cases") {
  // n = 2 with rho the odd quadratic character mod p = 3 mod 4; all
  // constituents primitive at a prime modulus
  for (auto [p, e] : std::vector<std::pair<long, long>>{{7, 2}, {11, 2}, {19, 3}}) {
    auto rho = quadratic_mod(p);
    auto psi = DirichletCharacter(p, {e});
    auto pc = period_comparison(psi, rho, 2);
    CHECK(pc.lhs == pc.rhs);
  }
  // for odd n the two sides differ by the rational factor rho(-1) p ...; the
  // surrounding algebraicity statements absorb rationals, so only document it
  {
    long p = 7;
    auto rho = quadratic_mod(p);
    auto psi = DirichletCharacter(p, {1});
    auto pc = period_comparison(psi, rho, 3);
    CHECK(pc.lhs != pc.rhs);
    // lhs * (-rho(-1) p) = rhs; here rho(-1) = -1 since p = 3 mod 4
    CHECK(pc.lhs * Cyclotomic(Rat(p)) == pc.rhs);
  }
}
