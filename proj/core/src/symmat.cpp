#include "halfweight/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace halfweight {

HalfIntSymMat::HalfIntSymMat(int n, std::vector<long> doubled_upper)
    : n_(n), d_(std::move(doubled_upper)) {
  HW_DOMAIN_CHECK(static_cast<int>(d_.size()) == n * (n + 1) / 2,
                  "wrong upper-triangle length");
  for (int i = 0; i < n; ++i)
    HW_DOMAIN_CHECK(doubled(i, i) % 2 == 0, "doubled diagonal must be even");
}

HalfIntSymMat HalfIntSymMat::zero(int n) {
  return HalfIntSymMat(n, std::vector<long>(n * (n + 1) / 2, 0));
}

HalfIntSymMat HalfIntSymMat::diag(const std::vector<long>& tau_diag) {
  int n = static_cast<int>(tau_diag.size());
  std::vector<long> d(n * (n + 1) / 2, 0);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    d[idx] = 2 * tau_diag[i];
    idx += n - i;
  }
  return HalfIntSymMat(n, std::move(d));
}

long HalfIntSymMat::doubled(int i, int j) const {
  if (i > j) std::swap(i, j);
  HW_DOMAIN_CHECK(0 <= i && j < n_, "index out of range");
  // row-major upper triangle offset
  int off = i * n_ - i * (i - 1) / 2 + (j - i);
  return d_[off];
}

long HalfIntSymMat::trace() const {
  long t = 0;
  for (int i = 0; i < n_; ++i) t += doubled(i, i) / 2;
  return t;
}

Int HalfIntSymMat::doubled_det() const {
  // Exact determinant of the integer matrix T via fraction-free elimination.
  int n = n_;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(doubled(i, j));
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int pr = c;
    while (pr < n && m[pr][c] == 0) ++pr;
    if (pr == n) return Int(0);
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int c2 = c; c2 < n; ++c2) m[r][c2] -= f * m[c][c2];
    }
  }
  HW_LOGIC_CHECK(is_integer(det), "integer determinant expected");
  return det.get_num();
}

Rat HalfIntSymMat::det() const {
  Rat d(doubled_det());
  return d / pow_rat(Rat(2), n_);
}

HalfIntSymMat HalfIntSymMat::extend_diag_zero() const {
  int n = n_ + 1;
  std::vector<long> v(n * (n + 1) / 2, 0);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++idx)
      v[idx] = (i < n_ && j < n_) ? doubled(i, j) : 0;
  return HalfIntSymMat(n, std::move(v));
}

HalfIntSymMat HalfIntSymMat::leading_block(int m) const {
  HW_DOMAIN_CHECK(0 <= m && m <= n_, "bad block size");
  std::vector<long> v(m * (m + 1) / 2);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j, ++idx) v[idx] = doubled(i, j);
  return HalfIntSymMat(m, std::move(v));
}

bool HalfIntSymMat::operator<(const HalfIntSymMat& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  long ta = trace(), tb = o.trace();
  if (ta != tb) return ta < tb;
  return d_ < o.d_;
}

std::string HalfIntSymMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) {
      if (j) os << " ";
      long t = doubled(i, j);
      if (t % 2 == 0)
        os << t / 2;
      else
        os << t << "/2";
    }
  }
  os << "]";
  return os.str();
}

PsdClass is_psd_doubled(int n, const std::vector<long>& doubled_upper) {
  auto ent = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    int off = i * n - i * (i - 1) / 2 + (j - i);
    return rat(doubled_upper[off], 2);
  };
  // Positive definiteness: all leading principal minors positive.
  // Semidefiniteness needs all principal minors nonnegative; n is small.
  auto minor_det = [&](const std::vector<int>& rows) {
    int m = static_cast<int>(rows.size());
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a[i][j] = ent(rows[i], rows[j]);
    Rat det(1);
    for (int c = 0; c < m; ++c) {
      int pr = c;
      while (pr < m && a[pr][c] == 0) ++pr;
      if (pr == m) return Rat(0);
      if (pr != c) {
        std::swap(a[pr], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (int r = c + 1; r < m; ++r) {
        if (a[r][c] == 0) continue;
        Rat f = a[r][c] / a[c][c];
        for (int c2 = c; c2 < m; ++c2) a[r][c2] -= f * a[c][c2];
      }
    }
    return det;
  };

  bool pd = true;
  for (int m = 1; m <= n && pd; ++m) {
    std::vector<int> rows(m);
    std::iota(rows.begin(), rows.end(), 0);
    if (minor_det(rows) <= 0) pd = false;
  }
  if (pd) return PsdClass::positive_definite;

  // All principal minors (every subset) must be >= 0 for PSD.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) rows.push_back(i);
    if (minor_det(rows) < 0) return PsdClass::indefinite;
  }
  return PsdClass::positive_semidefinite;
}

PsdClass is_psd(const HalfIntSymMat& tau) {
  return is_psd_doubled(tau.degree(), tau.doubled_upper());
}

namespace {

void enumerate_rec(int degree, long bound, std::vector<long>& diag,
                   std::vector<HalfIntSymMat>& out) {
  if (static_cast<int>(diag.size()) == degree) {
    // Fill off-diagonal doubled entries within the PSD-necessary window
    // |T_ij| <= sqrt(T_ii T_jj) and keep exactly the PSD ones.
    int n = degree;
    int noff = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> offpos;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) offpos.emplace_back(i, j);
    std::vector<long> off(noff, 0);
    std::vector<long> lim(noff);
    for (int k = 0; k < noff; ++k) {
      auto [i, j] = offpos[k];
      long prod = 4 * diag[i] * diag[j];
      lim[k] = static_cast<long>(std::sqrt(static_cast<double>(prod)));
      while (lim[k] * lim[k] > prod) --lim[k];
      while ((lim[k] + 1) * (lim[k] + 1) <= prod) ++lim[k];
    }
    std::vector<long> cur(noff, 0);
    auto emit = [&]() {
      std::vector<long> d(n * (n + 1) / 2);
      int idx = 0, offi = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++idx)
          d[idx] = (i == j) ? 2 * diag[i] : cur[offi++];
      HalfIntSymMat m(n, std::move(d));
      if (is_psd(m) != PsdClass::indefinite) out.push_back(m);
    };
    // iterate the off-diagonal box
    std::vector<long> v(noff);
    for (int k = 0; k < noff; ++k) v[k] = -lim[k];
    if (noff == 0) {
      emit();
      return;
    }
    while (true) {
      for (int k = 0; k < noff; ++k) cur[k] = v[k];
      emit();
      int k = noff - 1;
      while (k >= 0 && v[k] == lim[k]) {
        v[k] = -lim[k];
        --k;
      }
      if (k < 0) break;
      ++v[k];
    }
    return;
  }
  long used = 0;
  for (long x : diag) used += x;
  for (long x = 0; used + x <= bound; ++x) {
    diag.push_back(x);
    enumerate_rec(degree, bound, diag, out);
    diag.pop_back();
  }
}

}  // namespace

std::vector<HalfIntSymMat> enumerate_psd(int degree, long trace_bound) {
  HW_DOMAIN_CHECK(trace_bound >= 0, "negative trace bound");
  HW_DOMAIN_CHECK(degree >= 0 && degree <= 3, "degree must be <= 3");
  std::vector<HalfIntSymMat> out;
  if (degree == 0) {
    out.push_back(HalfIntSymMat::zero(0));
    return out;
  }
  std::vector<long> diag;
  enumerate_rec(degree, trace_bound, diag, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat level_ideal(const HalfIntSymMat& tau) {
  HW_DOMAIN_CHECK(is_psd(tau) == PsdClass::positive_definite,
                  "level ideal needs a positive definite matrix");
  int n = tau.degree();
  // Values h^T (2 tau) h over h = e_i and e_i + e_j generate the full value
  // ideal of the quadratic form.
  Int g(0);
  auto q = [&](const std::vector<long>& h) {
    long acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += h[i] * tau.doubled(i, j) * h[j];
    return acc;
  };
  for (int i = 0; i < n; ++i) {
    std::vector<long> h(n, 0);
    h[i] = 1;
    g = gcd(g, Int(q(h)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long> h(n, 0);
      h[i] = 1;
      h[j] = 1;
      g = gcd(g, Int(q(h)));
    }
  HW_LOGIC_CHECK(g > 0, "value gcd must be positive for definite forms");
  return Rat(4) / Rat(g);
}

}  // namespace halfweight
