#include "lck/quadratic.hpp"

#include <ostream>
#include <stdexcept>

namespace lck {

namespace {

// integer square root; returns 0 if d is not a perfect square (d >= 1)
unsigned long exact_sqrt(unsigned long d) {
  unsigned long lo = 0, hi = d;
  if (d < 2) return d;
  while (lo < hi) {
    unsigned long mid = lo + (hi - lo + 1) / 2;
    if (mid <= d / mid)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo * lo == d ? lo : 0;
}

}  // namespace

Quadratic::Quadratic(Rational a, Rational b, unsigned long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ == 0) throw std::invalid_argument("Quadratic: radicand must be positive");
  if (unsigned long r = exact_sqrt(d_)) {
    a_ += b_ * Rational(static_cast<long>(r));
    b_ = Rational(0);
    d_ = 0;
  }
}

unsigned long Quadratic::unify(const Quadratic& x, const Quadratic& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_) throw std::invalid_argument("Quadratic: mixed radicands");
  return x.d_;
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  d_ = unify(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  d_ = unify(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) d_ = 0;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  unsigned long d = unify(*this, o);
  Rational rad(static_cast<long>(d));
  Rational na = a_ * o.a_ + b_ * o.b_ * rad;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  d_ = nb.is_zero() ? 0 : d;
  return *this;
}

Quadratic Quadratic::inverse() const {
  if (is_zero()) throw std::domain_error("Quadratic: division by zero");
  if (b_.is_zero()) {
    Quadratic r;
    r.a_ = Rational(1) / a_;
    return r;
  }
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm cannot vanish
  // because d is never a perfect square here.
  Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_));
  Quadratic r;
  r.a_ = a_ / norm;
  r.b_ = -(b_ / norm);
  r.d_ = d_;
  return r;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) { return *this *= o.inverse(); }

Quadratic Quadratic::operator-() const {
  Quadratic r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

std::string Quadratic::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string rad = "sqrt(" + std::to_string(d_) + ")";
  std::string tail;
  if (b_.is_one())
    tail = rad;
  else if (b_ == Rational(-1))
    tail = "-" + rad;
  else
    tail = b_.to_string() + "*" + rad;
  if (a_.is_zero()) return tail;
  if (b_.sign() < 0) return a_.to_string() + " - " + (b_ == Rational(-1) ? rad : (-b_).to_string() + "*" + rad);
  return a_.to_string() + " + " + tail;
}

std::ostream& operator<<(std::ostream& os, const Quadratic& q) { return os << q.to_string(); }

}  // namespace lck
