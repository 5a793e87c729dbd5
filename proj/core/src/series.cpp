#include "halfweight/series.hpp"

namespace halfweight {

TruncSeries TruncSeries::from_poly(const Laurent& p, int order, Var var) {
  TruncSeries s(order, var);
  int vi = static_cast<int>(var);
  for (const auto& [e, c] : p.terms()) {
    HW_DOMAIN_CHECK(e[vi] >= 0, "negative power of the series variable");
    if (e[vi] > order) continue;
    ExpVec e2 = e;
    e2[vi] = 0;
    s.coeff_[e[vi]].add_term(e2, c);
  }
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int m = common_order(*this, o);
  TruncSeries r(m, var_);
  for (int k = 0; k <= m; ++k) r.coeff_[k] = coeff_[k] + o.coeff_[k];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  int m = common_order(*this, o);
  TruncSeries r(m, var_);
  for (int k = 0; k <= m; ++k) r.coeff_[k] = coeff_[k] - o.coeff_[k];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int m = common_order(*this, o);
  TruncSeries r(m, var_);
  for (int i = 0; i <= m; ++i) {
    if (coeff_[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j) r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
  }
  return r;
}

TruncSeries TruncSeries::operator/(const TruncSeries& o) const {
  int m = common_order(*this, o);
  // Invert the constant term; it must be a unit (a single monomial).
  const Laurent& c0 = o.coeff_[0];
  HW_DOMAIN_CHECK(!c0.is_zero(), "division by series with zero constant term");
  HW_DOMAIN_CHECK(c0.terms().size() == 1,
                  "series constant term is not invertible");
  const auto& [e0, v0] = *c0.terms().begin();
  ExpVec einv = e0;
  for (auto& x : einv) x = static_cast<int16_t>(-x);
  Laurent c0inv = Laurent::monomial(einv, v0.inverse());
  TruncSeries q(m, var_);
  for (int k = 0; k <= m; ++k) {
    Laurent acc = coeff_[k];
    for (int j = 1; j <= k; ++j) acc -= o.coeff_[j] * q.coeff_[k - j];
    q.coeff_[k] = acc * c0inv;
  }
  return q;
}

}  // namespace halfweight
