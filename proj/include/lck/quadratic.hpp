#ifndef LCK_QUADRATIC_HPP
#define LCK_QUADRATIC_HPP

#include <iosfwd>
#include <string>

#include "lck/rational.hpp"

namespace lck {

/// Element a + b*sqrt(d) of a real quadratic extension of the rationals.
///
/// d is a positive integer carried per value; values with b = 0 are plain
/// rationals and combine with any d. When d is a perfect square the radical
/// part collapses into the rational part at construction, so the type is a
/// field for every d and nonzero elements are always invertible.
class Quadratic {
public:
  Quadratic() = default;
  Quadratic(const Rational& a) : a_(a) {}
  Quadratic(long n) : a_(n) {}
  Quadratic(int n) : a_(n) {}
  Quadratic(Rational a, Rational b, unsigned long d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  unsigned long radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o);

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  Quadratic operator-() const;

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }

  Quadratic inverse() const;

  std::string to_string() const;

private:
  // shared radicand of two operands; throws on genuine mismatch
  static unsigned long unify(const Quadratic& x, const Quadratic& y);

  Rational a_;
  Rational b_;
  unsigned long d_ = 0;  // 0 whenever b_ == 0
};

std::ostream& operator<<(std::ostream& os, const Quadratic& q);

inline bool is_zero(const Quadratic& q) { return q.is_zero(); }

}  // namespace lck

#endif
