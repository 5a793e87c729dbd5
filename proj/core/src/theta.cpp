#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "halfweight/fourier.hpp"
#include "halfweight/parallel.hpp"

namespace halfweight {

namespace {

// Unit-upper-triangular U and positive diagonal D with Q = U^T D U.
struct Ldl {
  int n;
  std::vector<Rat> d;  // diagonal
  std::vector<Rat> u;  // row-major, unit upper triangular
};

Ldl decompose(const GramMatrix& q) {
  int n = q.rank();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(q.entry(i, j));
  Ldl r{n, std::vector<Rat>(n), std::vector<Rat>(n * n, Rat(0))};
  for (int i = 0; i < n; ++i) r.u[i * n + i] = 1;
  for (int k = 0; k < n; ++k) {
    r.d[k] = a[k][k];
    HW_LOGIC_CHECK(r.d[k] > 0, "Gram matrix not positive definite");
    for (int j = k + 1; j < n; ++j) r.u[k * n + j] = a[k][j] / r.d[k];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] -= a[k][i] * a[k][j] / r.d[k];
  }
  return r;
}

// max integer k with d (k + c)^2 <= t, i.e. k <= sqrt(t/d) - c (exact).
long floor_shifted_root(const Rat& t, const Rat& d, const Rat& c) {
  double est = std::sqrt(std::max(0.0, to_double(t / d))) - to_double(c);
  long k = static_cast<long>(std::floor(est));
  auto fits = [&](long x) {
    Rat v = (Rat(x) + c);
    return d * v * v <= t;
  };
  while (!fits(k)) --k;
  while (fits(k + 1)) ++k;
  return k;
}

void enum_rec(const Ldl& dec, int i, const Rat& budget, std::vector<long>& v,
              std::vector<std::vector<long>>& out) {
  if (i < 0) {
    out.push_back(v);
    return;
  }
  int n = dec.n;
  Rat c(0);
  for (int j = i + 1; j < n; ++j) c += dec.u[i * n + j] * v[j];
  long hi = floor_shifted_root(budget, dec.d[i], c);
  long lo = -floor_shifted_root(budget, dec.d[i], -c);
  for (long x = lo; x <= hi; ++x) {
    v[i] = x;
    Rat w = Rat(x) + c;
    enum_rec(dec, i - 1, budget - dec.d[i] * w * w, v, out);
  }
  v[i] = 0;
}

long dot_q(const GramMatrix& q, const std::vector<long>& a,
           const std::vector<long>& b) {
  long acc = 0;
  int n = q.rank();
  for (int i = 0; i < n; ++i) {
    long row = 0;
    for (int j = 0; j < n; ++j) row += q.entry(i, j) * b[j];
    acc += a[i] * row;
  }
  return acc;
}

}  // namespace

std::vector<std::vector<long>> lattice_points(const GramMatrix& q,
                                              long norm_bound) {
  HW_DOMAIN_CHECK(norm_bound >= 0, "negative norm bound");
  Ldl dec = decompose(q);
  std::vector<long> v(q.rank(), 0);
  std::vector<std::vector<long>> out;
  enum_rec(dec, q.rank() - 1, Rat(norm_bound), v, out);
  return out;
}

FourierExpansion theta_lattice(const GramMatrix& q, int degree, long bound) {
  HW_DOMAIN_CHECK(degree >= 0, "negative degree");
  HW_DOMAIN_CHECK(bound >= 0, "negative trace bound");
  FourierExpansion out(degree, q.rank(), bound);
  if (degree == 0) {
    out.set_coeff(HalfIntSymMat::zero(0), Cyclotomic(1L));
    return out;
  }
  HW_DOMAIN_CHECK(degree <= 2, "theta expansion supported for degree <= 2");
  auto pts = lattice_points(q, 2 * bound);
  if (degree == 1) {
    std::map<long, long> counts;  // norm -> count
    for (const auto& v : pts) ++counts[dot_q(q, v, v)];
    for (const auto& [norm, cnt] : counts) {
      HW_LOGIC_CHECK(norm % 2 == 0, "even lattice norm expected");
      out.set_coeff(HalfIntSymMat::diag({norm / 2}), Cyclotomic(Rat(cnt)));
    }
    return out;
  }
  // degree 2: bucket vectors by norm, histogram pair inner products
  std::map<long, std::vector<std::vector<long>>> shells;
  for (const auto& v : pts) shells[dot_q(q, v, v)].push_back(v);
  // (T11, T12, T22) -> count, accumulated per thread then merged
  using Key = std::array<long, 3>;
  std::map<Key, long> counts;
  std::mutex merge_mu;
  for (const auto& [na, va] : shells) {
    for (const auto& [nb, vb] : shells) {
      if (na + nb > 2 * bound) continue;
      parallel_for(0, va.size(), [&](std::size_t lo, std::size_t hi) {
        std::map<Key, long> local;
        for (std::size_t ia = lo; ia < hi; ++ia) {
          const auto& v = va[ia];
          for (const auto& w : vb) ++local[{na, dot_q(q, v, w), nb}];
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        for (const auto& [k, c] : local) counts[k] += c;
      });
    }
  }
  for (const auto& [k, cnt] : counts) {
    out.set_coeff(HalfIntSymMat(2, {k[0], k[1], k[2]}), Cyclotomic(Rat(cnt)));
  }
  return out;
}

FourierExpansion theta_chi(int degree, const HalfIntSymMat& tau0, int mu,
                           const DirichletCharacter& chi, long bound) {
  HW_DOMAIN_CHECK(mu == 0 || mu == 1, "mu must be 0 or 1");
  HW_DOMAIN_CHECK(is_psd(tau0) == PsdClass::positive_definite,
                  "tau0 must be positive definite");
  HW_DOMAIN_CHECK(tau0.degree() == degree, "tau0 must be degree x degree");
  // archimedean parity: chi(-1) = (-1)^(n mu)
  int want = (degree * mu) % 2 == 0 ? 1 : -1;
  HW_DOMAIN_CHECK(chi.parity() == want,
                  "character parity violates chi(-1) = (-1)^(n mu)");
  HW_DOMAIN_CHECK(degree <= 2, "twisted theta supported for degree <= 2");

  // columns live in the even lattice with Gram 2*tau0
  int n = degree;
  std::vector<long> g(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i * n + j] = tau0.doubled(i, j);
  GramMatrix q(n, std::move(g));

  FourierExpansion out(degree, degree + 2 * mu, bound);
  DirichletCharacter chi_inv = chi.inverse();
  auto weight = [&](long det) {
    Cyclotomic w = chi_inv(det);
    if (mu == 1) w *= Rat(det);
    return w;
  };
  auto pts = lattice_points(q, 2 * bound);
  if (degree == 1) {
    for (const auto& v : pts) {
      long norm = dot_q(q, v, v);
      out.add_coeff(HalfIntSymMat::diag({norm / 2}), weight(v[0]));
    }
    return out;
  }
  for (const auto& v : pts) {
    long na = dot_q(q, v, v);
    if (na > 2 * bound) continue;
    for (const auto& w : pts) {
      long nb = dot_q(q, w, w);
      if (na + nb > 2 * bound) continue;
      long det = v[0] * w[1] - v[1] * w[0];
      Cyclotomic c = weight(det);
      if (c.is_zero()) continue;
      out.add_coeff(HalfIntSymMat(2, {na, dot_q(q, v, w), nb}), c);
    }
  }
  return out;
}

}  // namespace halfweight
