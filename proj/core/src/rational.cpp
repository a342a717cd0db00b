#include "vybe/rational.hpp"

#include <cctype>
#include <ostream>

namespace vybe {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto check_part = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("Rational: malformed '" + s + "'");
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw std::invalid_argument("Rational: malformed '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("Rational: malformed '" + s + "'");
  };
  auto slash = s.find('/');
  mpq_class v;
  if (slash == std::string::npos) {
    check_part(s, true);
    v = mpq_class(s);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_part(num, true);
    check_part(den, false);
    v = mpq_class(num + "/" + den);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("Rational: not a machine integer: " + str());
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

Rational binomial(long p, long i) {
  if (i < 0) return Rational(0);
  Rational r(1);
  for (long j = 0; j < i; ++j) r *= Rational(p - j);
  return r / factorial(static_cast<int>(i));
}

}  // namespace vybe
