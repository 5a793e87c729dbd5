#include <doctest.h>

#include <random>
#include <set>

#include "halfweight/symmat.hpp"

using namespace halfweight;

TEST_CASE("psd classification") {
  CHECK(is_psd(HalfIntSymMat::diag({1, 1})) == PsdClass::positive_definite);
  CHECK(is_psd(HalfIntSymMat::zero(2)) == PsdClass::positive_semidefinite);
  // tau = [[1, 1], [1, 1/2]]: doubled [[2,2],[2,1]], det tau = -1/2.
  // The half-integral diagonal puts it outside the Fourier index type, so it
  // goes through the raw classifier.
  CHECK(is_psd_doubled(2, {2, 2, 1}) == PsdClass::indefinite);
  // singular PSD
  CHECK(is_psd(HalfIntSymMat(2, {2, 2, 2})) == PsdClass::positive_semidefinite);
}

TEST_CASE("psd agrees with floating-point eigenvalues away from margin") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    long a = rng() % 9 - 4, b = rng() % 9 - 4, c = rng() % 9 - 4;
    HalfIntSymMat m(2, {2 * a, c, 2 * b});
    double t11 = a, t22 = b, t12 = c / 2.0;
    double tr = t11 + t22, det = t11 * t22 - t12 * t12;
    double disc = std::sqrt(tr * tr / 4 - det);
    double l1 = tr / 2 - disc, l2 = tr / 2 + disc;
    if (std::abs(l1) < 1e-9 || std::abs(l2) < 1e-9) continue;  // margin
    ++checked;
    PsdClass cls = is_psd(m);
    if (l1 > 0 && l2 > 0) CHECK(cls == PsdClass::positive_definite);
    else if (l1 < 0 || l2 < 0) CHECK((cls == PsdClass::indefinite));
  }
  CHECK(checked > 500);
}

TEST_CASE("enumerate_psd degree 1") {
  auto v = enumerate_psd(1, 2);
  REQUIRE(v.size() == 3);
  for (long m = 0; m <= 2; ++m) CHECK(v[m] == HalfIntSymMat::diag({m}));
}

// independent oracle: scan every doubled symmetric matrix in a window
static std::set<std::vector<long>> brute_psd_deg2(long bound) {
  std::set<std::vector<long>> out;
  for (long a = 0; 2 * a <= 2 * bound; ++a)
    for (long b = 0; a + b <= bound; ++b)
      for (long c = -2 * bound; c <= 2 * bound; ++c) {
        HalfIntSymMat m(2, {2 * a, c, 2 * b});
        if (m.trace() > bound) continue;
        if (is_psd(m) == PsdClass::indefinite) continue;
        out.insert({2 * a, c, 2 * b});
      }
  return out;
}

TEST_CASE("enumerate_psd degree 2 matches exhaustive filter") {
  for (long bound : {1L, 2L, 3L}) {
    auto v = enumerate_psd(2, bound);
    auto oracle = brute_psd_deg2(bound);
    CHECK(v.size() == oracle.size());
    std::set<std::vector<long>> got;
    for (const auto& m : v) got.insert(m.doubled_upper());
    CHECK(got == oracle);
    // duplicate-free and ordered
    for (size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] < v[i]);
    // PSD necessary bound on the off-diagonal entry
    for (const auto& m : v)
      CHECK(m.doubled(0, 1) * m.doubled(0, 1) <=
            m.doubled(0, 0) * m.doubled(1, 1));
  }
}

TEST_CASE("level ideal") {
  // values 2 h^2 -> gcd 2 -> N = 2
  CHECK(level_ideal(HalfIntSymMat::diag({1})) == Rat(2));
  // values 4 h^2 -> N = 1
  CHECK(level_ideal(HalfIntSymMat::diag({2})) == Rat(1));
  // identity in degree 2: gcd over basis and sums is 2
  CHECK(level_ideal(HalfIntSymMat::diag({1, 1})) == Rat(2));
  // direct gcd oracle over a box of vectors h
  HalfIntSymMat tau(2, {2, 1, 4});
  long g = 0;
  for (long h1 = -3; h1 <= 3; ++h1)
    for (long h2 = -3; h2 <= 3; ++h2) {
      long q = h1 * h1 * tau.doubled(0, 0) + 2 * h1 * h2 * tau.doubled(0, 1) +
               h2 * h2 * tau.doubled(1, 1);
      g = std::gcd(g, q);
    }
  CHECK(level_ideal(tau) == Rat(4) / Rat(g));
  CHECK_THROWS_AS(level_ideal(HalfIntSymMat::zero(2)), std::domain_error);
}
