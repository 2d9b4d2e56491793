#include "cyclic/rational.hpp"

#include <cctype>

#include "cyclic/error.hpp"

namespace cyclic {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    if (part.empty()) throw ParseError("empty integer", offset);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("sign without digits", offset);
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw ParseError("unexpected character in integer", offset + j);
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return Integer(digits, 10);
  };

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  Integer num = parse_int(text.substr(0, slash), 0);
  Integer den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer round_nearest(const Rational& r) {
  // floor((2a + b) / 2b) for r = a/b with b > 0
  Integer num = 2 * r.get_num() + r.get_den();
  Integer den = 2 * r.get_den();
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Rational frac(const Rational& r) {
  Integer floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(floor_part);
  return out;
}

}  // namespace cyclic
