#include "halfweight/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace halfweight {

namespace {

struct LevelData {
  std::vector<long> primes;           // distinct primes dividing N
  std::vector<long> prime_powers;     // p^a for p^a || N
  std::vector<char> in_basis;         // size N
};

const LevelData& level_data(long n) {
  static std::map<long, LevelData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  LevelData d;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      long pa = 1;
      while (m % p == 0) m /= p, pa *= p;
      d.primes.push_back(p);
      d.prime_powers.push_back(pa);
    }
  }
  if (m > 1) {
    d.primes.push_back(m);
    d.prime_powers.push_back(m);
  }
  d.in_basis.assign(n, 1);
  for (size_t i = 0; i < d.primes.size(); ++i) {
    long p = d.primes[i], pa = d.prime_powers[i];
    long cut = (pa / p) * (p - 1);
    for (long j = 0; j < n; ++j)
      if (j % pa >= cut) d.in_basis[j] = 0;
  }
  return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

void Cyclotomic::reduce() {
  const LevelData& d = level_data(level_);
  // One sweep per prime: rewriting a bad exponent at p produces exponents
  // good at p whose components at other primes are unchanged.
  for (size_t pi = 0; pi < d.primes.size(); ++pi) {
    long p = d.primes[pi], pa = d.prime_powers[pi];
    long cut = (pa / p) * (p - 1);
    long shift = level_ / p;
    for (long j = 0; j < level_; ++j) {
      if (coords_[j] == 0 || j % pa < cut) continue;
      Rat v = coords_[j];
      coords_[j] = 0;
      for (long i = 1; i < p; ++i) coords_[(j + i * shift) % level_] -= v;
    }
  }
}

Cyclotomic Cyclotomic::zeta(long level, long power) {
  HW_DOMAIN_CHECK(level >= 1, "level must be positive");
  Cyclotomic z;
  z.level_ = level;
  z.coords_.assign(level, Rat(0));
  long e = power % level;
  if (e < 0) e += level;
  z.coords_[e] = 1;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(const Rat& q) {
  long den = to_long(Int(q.get_den()));
  Int numz = q.get_num() % den;
  return zeta(den, to_long(numz));
}

Cyclotomic CycBuilder::build() const {
  Cyclotomic z;
  z.level_ = level_;
  z.coords_ = coords_;
  z.reduce();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (long j = 1; j < level_; ++j)
    if (coords_[j] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  HW_DOMAIN_CHECK(is_rational(), "value is not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::lifted_to(long new_level) const {
  HW_DOMAIN_CHECK(new_level % level_ == 0, "lift level must be a multiple");
  if (new_level == level_) return *this;
  Cyclotomic z;
  z.level_ = new_level;
  z.coords_.assign(new_level, Rat(0));
  long f = new_level / level_;
  for (long j = 0; j < level_; ++j)
    if (coords_[j] != 0) z.coords_[j * f] = coords_[j];
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::descended() const {
  // Try proper divisors M of the level in increasing order; the value lies in
  // Q(zeta_M) iff it is fixed by every Galois element with t = 1 mod M.
  for (long m = 1; m < level_; ++m) {
    if (level_ % m != 0) continue;
    bool fixed = true;
    for (long t = 1; t < level_ && fixed; ++t) {
      if (std::gcd(t, level_) != 1 || t % m != 1) continue;
      if (galois(t) != *this) fixed = false;
    }
    if (!fixed) continue;
    // Express in Q(zeta_m) by matching monomial lifts: solve via lift of all
    // zeta_m^j.  Cheap at desk scale.
    Cyclotomic target = *this;
    Cyclotomic res;
    res.level_ = m;
    res.coords_.assign(m, Rat(0));
    // Coordinates in the level-m basis are recovered by linear algebra over
    // the lifted basis vectors.
    const LevelData& dm = level_data(m);
    std::vector<long> basis_idx;
    for (long j = 0; j < m; ++j)
      if (dm.in_basis[j]) basis_idx.push_back(j);
    size_t k = basis_idx.size();
    // Build lifted basis matrix restricted to the level-N basis support.
    const LevelData& dn = level_data(level_);
    std::vector<long> nbasis;
    for (long j = 0; j < level_; ++j)
      if (dn.in_basis[j]) nbasis.push_back(j);
    std::vector<std::vector<Rat>> mat(nbasis.size(), std::vector<Rat>(k + 1, Rat(0)));
    for (size_t c = 0; c < k; ++c) {
      Cyclotomic b = zeta(m, basis_idx[c]).lifted_to(level_);
      for (size_t r = 0; r < nbasis.size(); ++r) mat[r][c] = b.coords_[nbasis[r]];
    }
    for (size_t r = 0; r < nbasis.size(); ++r) mat[r][k] = target.coords_[nbasis[r]];
    // Gaussian elimination (overdetermined consistent system).
    size_t row = 0;
    std::vector<long> pivot_of_col(k, -1);
    for (size_t c = 0; c < k && row < mat.size(); ++c) {
      size_t pr = row;
      while (pr < mat.size() && mat[pr][c] == 0) ++pr;
      if (pr == mat.size()) continue;
      std::swap(mat[pr], mat[row]);
      for (size_t r2 = 0; r2 < mat.size(); ++r2) {
        if (r2 == row || mat[r2][c] == 0) continue;
        Rat f = mat[r2][c] / mat[row][c];
        for (size_t c2 = c; c2 <= k; ++c2) mat[r2][c2] -= f * mat[row][c2];
      }
      pivot_of_col[c] = static_cast<long>(row);
      ++row;
    }
    bool ok = true;
    for (size_t r = row; r < mat.size(); ++r)
      if (mat[r][k] != 0) ok = false;
    if (!ok) continue;
    for (size_t c = 0; c < k; ++c) {
      if (pivot_of_col[c] >= 0) {
        size_t r = static_cast<size_t>(pivot_of_col[c]);
        res.coords_[basis_idx[c]] = mat[r][k] / mat[r][c];
      }
    }
    if (res.lifted_to(level_) == *this) return res;
  }
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (Rat& c : z.coords_) c = -c;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long l = std::lcm(level_, o.level_);
  if (level_ != l) *this = lifted_to(l);
  if (o.level_ != l) {
    Cyclotomic t = o.lifted_to(l);
    for (long j = 0; j < l; ++j) coords_[j] += t.coords_[j];
  } else {
    for (long j = 0; j < l; ++j) coords_[j] += o.coords_[j];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long l = std::lcm(level_, o.level_);
  Cyclotomic a = level_ == l ? *this : lifted_to(l);
  Cyclotomic b = o.level_ == l ? o : o.lifted_to(l);
  Cyclotomic z;
  z.level_ = l;
  z.coords_.assign(l, Rat(0));
  for (long i = 0; i < l; ++i) {
    if (a.coords_[i] == 0) continue;
    for (long j = 0; j < l; ++j) {
      if (b.coords_[j] == 0) continue;
      long k = i + j;
      if (k >= l) k -= l;
      z.coords_[k] += a.coords_[i] * b.coords_[j];
    }
  }
  z.reduce();
  *this = std::move(z);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rat& r) {
  Rat rc = canonical(r);
  for (Rat& c : coords_) c *= rc;
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (level_ == o.level_) return coords_ == o.coords_;
  long l = std::lcm(level_, o.level_);
  return lifted_to(l).coords_ == o.lifted_to(l).coords_;
}

Cyclotomic Cyclotomic::inverse() const {
  HW_DOMAIN_CHECK(!is_zero(), "inversion of zero");
  if (is_rational()) return Cyclotomic(Rat(1) / coords_[0]);
  const LevelData& d = level_data(level_);
  std::vector<long> basis_idx;
  for (long j = 0; j < level_; ++j)
    if (d.in_basis[j]) basis_idx.push_back(j);
  size_t k = basis_idx.size();
  // Solve (this * x) = 1 in the basis: columns are this * zeta^{b_c}.
  std::vector<std::vector<Rat>> mat(k, std::vector<Rat>(k + 1, Rat(0)));
  for (size_t c = 0; c < k; ++c) {
    Cyclotomic col = *this * zeta(level_, basis_idx[c]);
    for (size_t r = 0; r < k; ++r) mat[r][c] = col.coords_[basis_idx[r]];
  }
  mat[0][k] = 1;  // basis_idx[0] == 0 always holds (exponent 0 is basic)
  HW_LOGIC_CHECK(basis_idx[0] == 0, "exponent 0 missing from basis");
  for (size_t c = 0; c < k; ++c) {
    size_t pr = c;
    while (pr < k && mat[pr][c] == 0) ++pr;
    HW_LOGIC_CHECK(pr < k, "singular multiplication matrix");
    std::swap(mat[pr], mat[c]);
    Rat inv = Rat(1) / mat[c][c];
    for (size_t c2 = c; c2 <= k; ++c2) mat[c][c2] *= inv;
    for (size_t r = 0; r < k; ++r) {
      if (r == c || mat[r][c] == 0) continue;
      Rat f = mat[r][c];
      for (size_t c2 = c; c2 <= k; ++c2) mat[r][c2] -= f * mat[c][c2];
    }
  }
  Cyclotomic x;
  x.level_ = level_;
  x.coords_.assign(level_, Rat(0));
  for (size_t c = 0; c < k; ++c) x.coords_[basis_idx[c]] = mat[c][k];
  x.reduce();
  HW_LOGIC_CHECK((*this * x).is_rational(), "inverse failed");
  return x;
}

Cyclotomic Cyclotomic::galois(long t) const {
  long tm = t % level_;
  if (tm < 0) tm += level_;
  HW_DOMAIN_CHECK(std::gcd(tm, level_) == 1,
                  "galois exponent not coprime to level");
  if (tm == 1) return *this;
  Cyclotomic z;
  z.level_ = level_;
  z.coords_.assign(level_, Rat(0));
  for (long j = 0; j < level_; ++j)
    if (coords_[j] != 0) z.coords_[(j * tm) % level_] += coords_[j];
  z.reduce();
  return z;
}

std::complex<double> Cyclotomic::embed() const {
  long double re = 0, im = 0;
  const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
  for (long j = 0; j < level_; ++j) {
    if (coords_[j] == 0) continue;
    long double c = coords_[j].get_d();
    long double ang = tau * j / level_;
    re += c * std::cos(ang);
    im += c * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coords_[0].get_str();
  std::ostringstream os;
  os << "cyc(" << level_ << ")[";
  bool first = true;
  for (long j = 0; j < level_; ++j) {
    if (coords_[j] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << j << ":" << coords_[j].get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace halfweight
