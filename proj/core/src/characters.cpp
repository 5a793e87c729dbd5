#include "halfweight/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace halfweight {

namespace {

long mod_pow(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((__int128)r * b % m);
    b = static_cast<long>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

long primitive_root(long pa, long p) {
  // generator of (Z/p^a)^x for odd p
  long phi = pa / p * (p - 1);
  std::vector<long> qs;
  long m = phi;
  for (long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      qs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) qs.push_back(m);
  for (long g = 2; g < pa; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (long q : qs)
      if (mod_pow(g, phi / q, pa) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  HW_LOGIC_CHECK(false, "no primitive root found");
  return 0;
}

}  // namespace

const ModulusData& modulus_data(long n) {
  HW_DOMAIN_CHECK(n >= 1, "modulus must be positive");
  static std::map<long, std::unique_ptr<ModulusData>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto md = std::make_unique<ModulusData>();
  md->modulus = n;
  long m = n;
  long two_part = 1;
  while (m % 2 == 0) m /= 2, two_part *= 2;
  if (two_part == 4) {
    md->comps.push_back({2, 4, 3, 2});
  } else if (two_part >= 8) {
    md->comps.push_back({2, two_part, two_part - 1, 2});  // the sign part
    md->comps.push_back({2, two_part, 5, two_part / 4});
  }
  for (long p = 3; p * p <= m; p += 2) {
    if (m % p == 0) {
      long pa = 1;
      while (m % p == 0) m /= p, pa *= p;
      md->comps.push_back({p, pa, primitive_root(pa, p), pa / p * (p - 1)});
    }
  }
  if (m > 1) md->comps.push_back({m, m, primitive_root(m, m), m - 1});

  // discrete logs; for the two-component 2-part solve x = (-1)^s 5^k
  md->dlog.resize(md->comps.size());
  for (size_t ci = 0; ci < md->comps.size(); ++ci) {
    const CyclicComponent& c = md->comps[ci];
    md->dlog[ci].assign(c.prime_power, -1);
  }
  if (two_part >= 8) {
    long pa = two_part;
    std::vector<long>& dsign = md->dlog[0];
    std::vector<long>& dfive = md->dlog[1];
    long x = 1;
    for (long k = 0; k < pa / 4; ++k) {
      dsign[x] = 0;
      dfive[x] = k;
      long y = (pa - x) % pa;
      dsign[y] = 1;
      dfive[y] = k;
      x = static_cast<long>((__int128)x * 5 % pa);
    }
  }
  for (size_t ci = (two_part >= 8 ? 2 : 0); ci < md->comps.size(); ++ci) {
    const CyclicComponent& c = md->comps[ci];
    std::vector<long>& d = md->dlog[ci];
    long x = 1;
    for (long k = 0; k < c.order; ++k) {
      d[x] = k;
      x = static_cast<long>((__int128)x * c.generator % c.prime_power);
    }
  }
  const ModulusData& ref = *md;
  cache.emplace(n, std::move(md));
  return ref;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exps)
    : md_(&modulus_data(modulus)), exps_(std::move(exps)) {
  HW_DOMAIN_CHECK(exps_.size() == md_->comps.size(),
                  "wrong number of character exponents");
  for (size_t i = 0; i < exps_.size(); ++i) {
    long d = md_->comps[i].order;
    exps_[i] %= d;
    if (exps_[i] < 0) exps_[i] += d;
  }
}

DirichletCharacter DirichletCharacter::parse(const std::string& spec) {
  auto colon = spec.find(':');
  long n = std::stol(spec.substr(0, colon));
  std::vector<long> exps;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) exps.push_back(std::stol(item));
  }
  const ModulusData& md = modulus_data(n);
  HW_DOMAIN_CHECK(exps.size() == md.comps.size(),
                  "character spec needs one exponent per component of (Z/" +
                      std::to_string(n) + ")^x (" +
                      std::to_string(md.comps.size()) + " components)");
  return DirichletCharacter(n, std::move(exps));
}

std::string DirichletCharacter::spec_string() const {
  std::ostringstream os;
  os << modulus() << ":";
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ",";
    os << exps_[i];
  }
  return os.str();
}

std::optional<std::pair<long, long>> DirichletCharacter::value_exponent(
    long a) const {
  long n = modulus();
  a %= n;
  if (a < 0) a += n;
  if (n == 1) return std::make_pair(1L, 0L);
  if (std::gcd(a, n) != 1) return std::nullopt;
  long lev = 1;
  for (size_t i = 0; i < exps_.size(); ++i) lev = std::lcm(lev, md_->comps[i].order);
  long e = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    const CyclicComponent& c = md_->comps[i];
    long k = md_->dlog[i][a % c.prime_power];
    HW_LOGIC_CHECK(k >= 0, "dlog table miss");
    e = (e + (__int128)exps_[i] * k % lev * (lev / c.order)) % lev;
  }
  return std::make_pair(lev, e);
}

Cyclotomic DirichletCharacter::operator()(long a) const {
  auto ve = value_exponent(a);
  if (!ve) return Cyclotomic();
  return Cyclotomic::zeta(ve->first, ve->second);
}

std::complex<double> DirichletCharacter::value_cx(long a) const {
  auto ve = value_exponent(a);
  if (!ve) return {0.0, 0.0};
  double ang = 2.0 * 3.141592653589793238462643 * ve->second / ve->first;
  return {std::cos(ang), std::sin(ang)};
}

long DirichletCharacter::order() const {
  long o = 1;
  for (size_t i = 0; i < exps_.size(); ++i) {
    long d = md_->comps[i].order;
    o = std::lcm(o, d / std::gcd(d, exps_[i]));
  }
  return o;
}

bool DirichletCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e == 0; });
}

int DirichletCharacter::parity() const {
  auto ve = value_exponent(modulus() - 1);
  if (modulus() <= 2) return 1;
  HW_LOGIC_CHECK(ve.has_value(), "chi(-1) must be a unit value");
  auto [lev, e] = *ve;
  HW_LOGIC_CHECK(e == 0 || 2 * e == lev, "chi(-1) must be +-1");
  return e == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::power(long m) const {
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) {
    long d = md_->comps[i].order;
    long mm = m % d;
    e[i] = (__int128)exps_[i] * (mm < 0 ? mm + d : mm) % d;
  }
  return DirichletCharacter(modulus(), std::move(e));
}

DirichletCharacter DirichletCharacter::operator*(
    const DirichletCharacter& o) const {
  long l = std::lcm(modulus(), o.modulus());
  DirichletCharacter a = lift_to(l), b = o.lift_to(l);
  std::vector<long> e(a.exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return DirichletCharacter(l, std::move(e));
}

DirichletCharacter DirichletCharacter::lift_to(long new_modulus) const {
  HW_DOMAIN_CHECK(new_modulus % modulus() == 0,
                  "lift modulus must be a multiple");
  if (new_modulus == modulus()) return *this;
  const ModulusData& md = modulus_data(new_modulus);
  std::vector<long> e(md.comps.size(), 0);
  for (size_t i = 0; i < md.comps.size(); ++i) {
    const CyclicComponent& c = md.comps[i];
    // CRT: the residue that equals the generator mod p^a and 1 mod the rest.
    long pa = c.prime_power;
    long rest = new_modulus / pa;
    long g;
    if (rest == 1) {
      g = c.generator % new_modulus;
    } else {
      Int inv_pa;
      HW_LOGIC_CHECK(mpz_invert(inv_pa.get_mpz_t(), Int(pa).get_mpz_t(),
                                Int(rest).get_mpz_t()) != 0,
                     "prime power not invertible mod complement");
      long t = static_cast<long>(
          (__int128)((((1 - c.generator) % rest) + rest) % rest) *
          to_long(inv_pa) % rest);
      g = static_cast<long>((c.generator + (__int128)pa * t) % new_modulus);
      if (g < 0) g += new_modulus;
    }
    auto ve = value_exponent(g % modulus());
    HW_LOGIC_CHECK(ve.has_value(), "generator must be a unit");
    auto [lev, ex] = *ve;
    // chi(g) = zeta_lev^ex must be a c.order-th root of unity
    HW_LOGIC_CHECK(((__int128)ex * c.order) % lev == 0,
                   "lifted value has wrong order");
    e[i] = static_cast<long>((__int128)ex * c.order / lev);
  }
  DirichletCharacter lifted(new_modulus, std::move(e));
  return lifted;
}

long DirichletCharacter::conductor() const {
  long n = modulus();
  for (long f = 1; f <= n; ++f) {
    if (n % f != 0) continue;
    bool ok = true;
    for (long a = 1; a < n && ok; ++a) {
      if (std::gcd(a, n) != 1 || a % f != 1 % f) continue;
      auto ve = value_exponent(a);
      if (!ve || ve->second != 0) ok = false;
    }
    if (ok) return f;
  }
  return n;
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  long f = conductor();
  if (f == modulus()) return *this;
  // brute force over all characters mod f (desk moduli are small)
  for (const DirichletCharacter& c : all_mod(f)) {
    bool ok = true;
    for (long a = 1; a < modulus() && ok; ++a) {
      if (std::gcd(a, modulus()) != 1) continue;
      auto v1 = value_exponent(a);
      auto v2 = c.value_exponent(a % f);
      if (!v1 || !v2) {
        ok = false;
        break;
      }
      long l = std::lcm(v1->first, v2->first);
      if (v1->second * (l / v1->first) % l != v2->second * (l / v2->first) % l)
        ok = false;
    }
    if (ok) return c;
  }
  HW_LOGIC_CHECK(false, "no primitive part found");
  return trivial(1);
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return modulus() == o.modulus() && exps_ == o.exps_;
}

std::vector<DirichletCharacter> DirichletCharacter::all_mod(long modulus) {
  const ModulusData& md = modulus_data(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<long> e(md.comps.size(), 0);
  while (true) {
    out.emplace_back(modulus, e);
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0 && e[i] == md.comps[i].order - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<char> sieve(bound + 1, 1);
  std::vector<long> out;
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[j] = 0;
  }
  return out;
}

}  // namespace halfweight
