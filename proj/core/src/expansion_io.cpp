#include <istream>
#include <ostream>
#include <sstream>

#include "halfweight/fourier.hpp"

namespace halfweight {

// Format (line based, whitespace separated):
//   halfweight-expansion v1
//   degree N weight2 W trunc B level B_NUM/B_DEN C_NUM/C_DEN
//   coeffs K
//   c T_00 T_01 ... | L  i:num/den  i:num/den ...
// with T the doubled upper triangle and the coefficient given by its
// cyclotomic level L and the nonzero coordinates.

void write_expansion(std::ostream& os, const FourierExpansion& f) {
  os << "halfweight-expansion v1\n";
  os << "degree " << f.degree() << " weight2 " << f.weight2() << " trunc "
     << f.trunc() << " level " << rat_str(f.level_b()) << " "
     << rat_str(f.level_c()) << "\n";
  os << "coeffs " << f.coeffs().size() << "\n";
  for (const auto& [tau, v] : f.coeffs()) {
    os << "c";
    for (long x : tau.doubled_upper()) os << " " << x;
    os << " | " << v.level();
    for (long j = 0; j < v.level(); ++j)
      if (v.coords()[j] != 0) os << " " << j << ":" << v.coords()[j].get_str();
    os << "\n";
  }
}

FourierExpansion read_expansion(std::istream& is) {
  std::string word, version;
  is >> word >> version;
  HW_DOMAIN_CHECK(word == "halfweight-expansion" && version == "v1",
                  "unrecognized expansion header");
  int degree = 0, weight2 = 0;
  long trunc = 0;
  std::string blev, clev;
  is >> word;
  HW_DOMAIN_CHECK(word == "degree", "expected 'degree'");
  is >> degree >> word >> weight2 >> word >> trunc >> word >> blev >> clev;
  FourierExpansion f(degree, weight2, trunc);
  f.set_level(parse_rat(blev), parse_rat(clev));
  std::size_t count = 0;
  is >> word >> count;
  HW_DOMAIN_CHECK(word == "coeffs", "expected 'coeffs'");
  int tri = degree * (degree + 1) / 2;
  for (std::size_t r = 0; r < count; ++r) {
    is >> word;
    HW_DOMAIN_CHECK(word == "c", "expected coefficient record");
    std::vector<long> d(tri);
    for (int i = 0; i < tri; ++i) is >> d[i];
    is >> word;
    HW_DOMAIN_CHECK(word == "|", "expected '|'");
    long level;
    is >> level;
    CycBuilder b(level);
    // coordinates until the line ends
    while (is.peek() != '\n' && is.peek() != EOF) {
      if (std::isspace(is.peek()) && is.peek() != '\n') {
        is.get();
        continue;
      }
      if (is.peek() == '\n') break;
      std::string tok;
      is >> tok;
      auto colon = tok.find(':');
      HW_DOMAIN_CHECK(colon != std::string::npos, "bad coordinate token");
      long idx = std::stol(tok.substr(0, colon));
      b.add(idx, parse_rat(tok.substr(colon + 1)));
    }
    f.set_coeff(HalfIntSymMat(degree, std::move(d)), b.build());
  }
  return f;
}

std::string expansion_to_string(const FourierExpansion& f) {
  std::ostringstream os;
  write_expansion(os, f);
  return os.str();
}

FourierExpansion expansion_from_string(const std::string& s) {
  std::istringstream is(s);
  return read_expansion(is);
}

}  // namespace halfweight
