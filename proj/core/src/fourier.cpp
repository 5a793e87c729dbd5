#include "halfweight/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace halfweight {

GramMatrix::GramMatrix(int rank, std::vector<long> entries)
    : rank_(rank), e_(std::move(entries)) {
  HW_DOMAIN_CHECK(static_cast<int>(e_.size()) == rank * rank,
                  "wrong Gram matrix size");
  for (int i = 0; i < rank; ++i) {
    HW_DOMAIN_CHECK(entry(i, i) % 2 == 0, "even lattice needs even diagonal");
    for (int j = 0; j < rank; ++j)
      HW_DOMAIN_CHECK(entry(i, j) == entry(j, i), "Gram matrix must be symmetric");
  }
  // positive definiteness via leading minors (exact)
  std::vector<long> up;
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) up.push_back(2 * entry(i, j));
  HW_DOMAIN_CHECK(is_psd_doubled(rank, up) == PsdClass::positive_definite,
                  "Gram matrix must be positive definite");
}

GramMatrix GramMatrix::by_name(const std::string& name) {
  if (name == "rank1") return GramMatrix(1, {2});
  if (name == "diag22") return GramMatrix(2, {2, 0, 0, 2});
  if (name == "e8") {
    // even unimodular rank-8 Gram matrix (Dynkin chain with the eighth node
    // attached to the fifth)
    return GramMatrix(8, {
        2, -1, 0, 0, 0, 0, 0, 0,
        -1, 2, -1, 0, 0, 0, 0, 0,
        0, -1, 2, -1, 0, 0, 0, 0,
        0, 0, -1, 2, -1, 0, 0, 0,
        0, 0, 0, -1, 2, -1, 0, -1,
        0, 0, 0, 0, -1, 2, -1, 0,
        0, 0, 0, 0, 0, -1, 2, 0,
        0, 0, 0, 0, -1, 0, 0, 2});
  }
  if (name == "e8e8") {
    GramMatrix e8 = by_name("e8");
    std::vector<long> g(16 * 16, 0);
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          g[(8 * b + i) * 16 + (8 * b + j)] = e8.entry(i, j);
    return GramMatrix(16, std::move(g));
  }
  HW_DOMAIN_CHECK(false, "unknown Gram matrix name: " + name);
  return GramMatrix(1, {2});
}

Cyclotomic FourierExpansion::coeff(const HalfIntSymMat& tau) const {
  auto it = c_.find(tau);
  return it == c_.end() ? Cyclotomic() : it->second;
}

void FourierExpansion::set_coeff(const HalfIntSymMat& tau, const Cyclotomic& v) {
  HW_DOMAIN_CHECK(tau.degree() == degree_, "key degree mismatch");
  HW_DOMAIN_CHECK(tau.trace() <= trunc_, "key beyond the truncation bound");
  HW_DOMAIN_CHECK(is_psd(tau) != PsdClass::indefinite,
                  "Fourier support must be positive semidefinite");
  if (v.is_zero())
    c_.erase(tau);
  else
    c_[tau] = v;
}

void FourierExpansion::add_coeff(const HalfIntSymMat& tau, const Cyclotomic& v) {
  if (v.is_zero()) return;
  set_coeff(tau, coeff(tau) + v);
}

bool FourierExpansion::operator==(const FourierExpansion& o) const {
  return degree_ == o.degree_ && weight2_ == o.weight2_ && trunc_ == o.trunc_ &&
         c_ == o.c_;
}

FourierExpansion FourierExpansion::truncated(long bound) const {
  HW_DOMAIN_CHECK(bound <= trunc_, "cannot extend a truncation");
  FourierExpansion out(degree_, weight2_, bound);
  out.level_b_ = level_b_;
  out.level_c_ = level_c_;
  for (const auto& [tau, v] : c_)
    if (tau.trace() <= bound) out.c_.emplace(tau, v);
  return out;
}

std::string FourierExpansion::str() const {
  std::ostringstream os;
  os << "deg " << degree_ << " wt2 " << weight2_ << " trunc " << trunc_ << " {";
  bool first = true;
  for (const auto& [tau, v] : c_) {
    if (!first) os << ", ";
    first = false;
    os << tau.str() << " -> " << v.str();
  }
  os << "}";
  return os.str();
}

FourierExpansion mul(const FourierExpansion& f, const FourierExpansion& g) {
  HW_DOMAIN_CHECK(f.degree() == g.degree(), "degree mismatch in product");
  long bound = std::min(f.trunc(), g.trunc());
  FourierExpansion out(f.degree(), f.weight2() + g.weight2(), bound);
  for (const auto& [t1, c1] : f.coeffs()) {
    if (t1.trace() > bound) continue;
    for (const auto& [t2, c2] : g.coeffs()) {
      if (t1.trace() + t2.trace() > bound) continue;
      // tau = t1 + t2
      std::vector<long> d(t1.doubled_upper());
      const auto& d2 = t2.doubled_upper();
      for (size_t i = 0; i < d.size(); ++i) d[i] += d2[i];
      out.add_coeff(HalfIntSymMat(f.degree(), std::move(d)), c1 * c2);
    }
  }
  return out;
}

FourierExpansion siegel_phi(const FourierExpansion& f) {
  HW_DOMAIN_CHECK(f.degree() >= 1, "degree-0 expansion has no lower degree");
  int n = f.degree() - 1;
  FourierExpansion out(n, f.weight2(), f.trunc());
  out.set_level(f.level_b(), f.level_c());
  for (const auto& [tau, v] : f.coeffs()) {
    // keep keys of the form diag[tau', 0]
    bool last_zero = true;
    for (int i = 0; i <= n; ++i)
      if (tau.doubled(i, n) != 0) last_zero = false;
    if (!last_zero) continue;
    out.set_coeff(tau.leading_block(n), v);
  }
  return out;
}

FourierExpansion galois_on_form(const FourierExpansion& f, long t) {
  FourierExpansion out(f.degree(), f.weight2(), f.trunc());
  out.set_level(f.level_b(), f.level_c());
  for (const auto& [tau, v] : f.coeffs()) out.set_coeff(tau, v.galois(t));
  return out;
}

EvalResult eval_at(const FourierExpansion& f,
                   const std::vector<std::complex<double>>& z) {
  int n = f.degree();
  HW_DOMAIN_CHECK(static_cast<int>(z.size()) == n * n, "wrong matrix size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      HW_DOMAIN_CHECK(std::abs(z[i * n + j] - z[j * n + i]) < 1e-14,
                      "z must be symmetric");
  // imaginary part must be positive definite; smallest eigenvalue feeds the
  // tail bound (Jacobi iteration, n is tiny)
  std::vector<double> y(n * n);
  for (int i = 0; i < n * n; ++i) y[i] = z[i].imag();
  std::vector<double> a = y;
  for (int sweep = 0; sweep < 60; ++sweep) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-15) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = 0.5 * std::atan2(2 * apq, aqq - app);
        double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
  }
  double lam_min = a[0];
  for (int i = 0; i < n; ++i) lam_min = std::min(lam_min, a[i * n + i]);
  HW_DOMAIN_CHECK(lam_min > 0, "imaginary part must be positive definite");

  std::complex<double> acc(0, 0);
  double maxc = 0;
  const double tau2pi = 2.0 * 3.14159265358979323846;
  for (const auto& [tau, v] : f.coeffs()) {
    // tr(tau z)
    std::complex<double> tr(0, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        tr += 0.5 * static_cast<double>(tau.doubled(i, j)) * z[j * n + i];
    std::complex<double> c = v.embed();
    maxc = std::max(maxc, std::abs(c));
    acc += c * std::exp(std::complex<double>(0, tau2pi) * tr);
  }
  double tail = maxc * std::exp(-tau2pi * lam_min * static_cast<double>(f.trunc()));
  return {acc, tail};
}

}  // namespace halfweight
