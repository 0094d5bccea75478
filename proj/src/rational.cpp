#include "lck/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lck {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw std::invalid_argument("Rational: empty string");
  std::string s = text.substr(begin, end - begin + 1);

  // strict shape check: [-]digits[/digits]
  std::size_t pos = 0;
  if (s[pos] == '-' || s[pos] == '+') ++pos;
  std::size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++digits; }
  if (digits == 0) throw std::invalid_argument("Rational: malformed number '" + text + "'");
  if (pos < s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("Rational: malformed number '" + text + "'");
    ++pos;
    digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) { ++pos; ++digits; }
    if (digits == 0 || pos != s.size())
      throw std::invalid_argument("Rational: malformed number '" + text + "'");
  }

  Rational out;
  out.v_ = mpq_class(s);
  if (out.v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  out.v_.canonicalize();
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace lck
