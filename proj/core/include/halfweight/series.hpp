#pragma once

#include <vector>

#include "halfweight/laurent.hpp"

namespace halfweight {

// Power series in one distinguished variable, truncated at a fixed order,
// with Laurent-polynomial coefficients in the remaining variables.
class TruncSeries {
 public:
  TruncSeries(int order, Var var = Var::t)
      : order_(order), var_(var), coeff_(order + 1) {
    HW_DOMAIN_CHECK(order >= 0, "negative truncation order");
  }

  static TruncSeries one(int order, Var var = Var::t) {
    TruncSeries s(order, var);
    s.coeff_[0] = Laurent(Rat(1));
    return s;
  }
  // Truncated expansion of a Laurent polynomial in the series variable.
  static TruncSeries from_poly(const Laurent& p, int order, Var var = Var::t);

  int order() const { return order_; }
  Var var() const { return var_; }
  const Laurent& operator[](int k) const { return coeff_[k]; }
  Laurent& operator[](int k) { return coeff_[k]; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  // Division; the divisor needs an invertible constant term.
  TruncSeries operator/(const TruncSeries& o) const;

  bool operator==(const TruncSeries& o) const {
    return order_ == o.order_ && var_ == o.var_ && coeff_ == o.coeff_;
  }

 private:
  int order_;
  Var var_;
  std::vector<Laurent> coeff_;

  static int common_order(const TruncSeries& a, const TruncSeries& b) {
    HW_DOMAIN_CHECK(a.var_ == b.var_, "series variable mismatch");
    return a.order_ < b.order_ ? a.order_ : b.order_;
  }
};

}  // namespace halfweight
