#include "halfweight/laurent.hpp"

#include <sstream>

namespace halfweight {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"x1", "x2", "x3", "t", "u", "T"};
  return names[static_cast<int>(v)];
}

Laurent Laurent::variable(Var v, int exponent) {
  ExpVec e{};
  e[static_cast<int>(v)] = static_cast<int16_t>(exponent);
  return monomial(e, Cyclotomic(1L));
}

Laurent Laurent::monomial(const ExpVec& e, const Cyclotomic& c) {
  Laurent l;
  l.add_term(e, c);
  return l;
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Cyclotomic Laurent::constant_value() const {
  HW_DOMAIN_CHECK(is_constant(), "Laurent value is not constant");
  return terms_.empty() ? Cyclotomic() : terms_.begin()->second;
}

Cyclotomic Laurent::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void Laurent::add_term(const ExpVec& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (int i = 0; i < kNumVars; ++i) e[i] = static_cast<int16_t>(e[i] + e2[i]);
      r.add_term(e, c1 * c2);
    }
  }
  *this = std::move(r);
  return *this;
}

Laurent& Laurent::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Laurent Laurent::pow(long n) const {
  HW_DOMAIN_CHECK(n >= 0, "negative power of a general Laurent polynomial");
  Laurent acc(Rat(1));
  Laurent b = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) acc *= b;
    if (n > 1) b *= b;
  }
  return acc;
}

Laurent Laurent::rename_var(Var from, Var to) const {
  HW_DOMAIN_CHECK(from != to, "rename onto itself");
  int f = static_cast<int>(from), t = static_cast<int>(to);
  Laurent r;
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[t] = static_cast<int16_t>(e2[t] + e2[f]);
    e2[f] = 0;
    r.add_term(e2, c);
  }
  return r;
}

Laurent Laurent::invert_var(Var v) const {
  int i = static_cast<int>(v);
  Laurent r;
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[i] = static_cast<int16_t>(-e2[i]);
    r.add_term(e2, c);
  }
  return r;
}

Laurent Laurent::evaluate(Var v, const Cyclotomic& value) const {
  int i = static_cast<int>(v);
  Laurent r;
  Cyclotomic inv;
  bool have_inv = false;
  for (const auto& [e, c] : terms_) {
    Cyclotomic scale(Rat(1));
    int k = e[i];
    if (k > 0) {
      for (int j = 0; j < k; ++j) scale *= value;
    } else if (k < 0) {
      if (!have_inv) {
        inv = value.inverse();
        have_inv = true;
      }
      for (int j = 0; j < -k; ++j) scale *= inv;
    }
    ExpVec e2 = e;
    e2[i] = 0;
    r.add_term(e2, c * scale);
  }
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) os << "*" << var_name(static_cast<Var>(i)) << "^" << e[i];
  }
  return os.str();
}

}  // namespace halfweight
