#include "skm/rational.hpp"

#include <stdexcept>

namespace skm {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    const bool neg = !str.empty() && str.front() == '-';
    const std::string digits = neg ? str.substr(1) : str;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed rational '" + str + "'");
    return mpz_class(str, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (is_zero()) return {};
  return Rational(mpq_class(1 / v_));
}

std::string Rational::to_string() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace skm
