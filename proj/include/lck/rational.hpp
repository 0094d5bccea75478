#ifndef LCK_RATIONAL_HPP
#define LCK_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace lck {

/// Arbitrary-precision rational number in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator > 0.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den);

  /// Parses "p" or "p/q" with optional leading '-'. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const;

  std::string to_string() const { return v_.get_str(); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace lck

#endif
