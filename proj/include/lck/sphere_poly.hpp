#ifndef LCK_SPHERE_POLY_HPP
#define LCK_SPHERE_POLY_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lck/quadratic.hpp"
#include "lck/rational.hpp"

namespace lck {

/// Exponent vector of a monomial; its length equals the variable count of the
/// owning polynomial.
using Monomial = std::vector<unsigned>;

/// Graded order with the last variable most significant. Any fixed admissible
/// order would do; this one is fixed so that canonical forms are comparable
/// and printing is deterministic.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Polynomial in x_1..x_m with rational coefficients, kept reduced modulo the
/// relation x_m^2 = 1 - x_1^2 - ... - x_{m-1}^2 (the unit-sphere relation).
///
/// Canonical form: every stored monomial has degree <= 1 in x_m; two
/// polynomials are equal iff their stored terms coincide. Variable count 0
/// marks a plain constant, which unifies with any variable count on
/// arithmetic. All variable indices in this interface are 0-based; printing
/// and parsing use the 1-based names x1..xm.
class SpherePoly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  SpherePoly() = default;
  SpherePoly(const Rational& c);
  SpherePoly(long n) : SpherePoly(Rational(n)) {}
  SpherePoly(int n) : SpherePoly(Rational(n)) {}

  static SpherePoly constant(const Rational& c) { return SpherePoly(c); }
  static SpherePoly variable(std::size_t var, std::size_t m);
  static SpherePoly monomial(Monomial mono, const Rational& c, std::size_t m);

  /// Canonical form of a raw term list; the only entry point that accepts
  /// unreduced input.
  static SpherePoly reduce(std::size_t m, const TermMap& raw);

  std::size_t vars() const { return m_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; throws std::domain_error for non-constant polynomials.
  Rational constant_value() const;

  SpherePoly& operator+=(const SpherePoly& o);
  SpherePoly& operator-=(const SpherePoly& o);
  SpherePoly& operator*=(const SpherePoly& o);
  SpherePoly& operator*=(const Rational& c);

  friend SpherePoly operator+(SpherePoly x, const SpherePoly& y) { return x += y; }
  friend SpherePoly operator-(SpherePoly x, const SpherePoly& y) { return x -= y; }
  friend SpherePoly operator*(SpherePoly x, const SpherePoly& y) { return x *= y; }
  friend SpherePoly operator*(SpherePoly x, const Rational& c) { return x *= c; }
  friend SpherePoly operator*(const Rational& c, SpherePoly x) { return x *= c; }
  SpherePoly operator-() const;

  friend bool operator==(const SpherePoly& x, const SpherePoly& y) {
    if (x.m_ == y.m_) return x.terms_ == y.terms_;  // canonical forms compare directly
    SpherePoly diff = x;
    diff -= y;  // unifies the variable counts (constants embed)
    return diff.is_zero();
  }
  friend bool operator!=(const SpherePoly& x, const SpherePoly& y) { return !(x == y); }

  std::string to_string() const;

private:
  static std::size_t unify(const SpherePoly& x, const SpherePoly& y);
  void lift_to(std::size_t m);
  void add_term(const Monomial& mono, const Rational& c);

  std::size_t m_ = 0;
  TermMap terms_;

  friend SpherePoly frame_derivation(std::size_t i, const SpherePoly& p, std::size_t m);
};

/// The derivation determined by d_i(x_j) = delta_ij - x_i x_j, extended by
/// linearity and the Leibniz rule; result in canonical form. m is the frame
/// size (= variable count); i is 0-based and must satisfy i < m.
SpherePoly frame_derivation(std::size_t i, const SpherePoly& p, std::size_t m);

/// Exact value of p at the uniform point x_j = 1/sqrt(m) for all j, as an
/// element of Q(sqrt(m)).
Quadratic evaluate_uniform(const SpherePoly& p, std::size_t m);

std::ostream& operator<<(std::ostream& os, const SpherePoly& p);

inline bool is_zero(const SpherePoly& p) { return p.is_zero(); }

}  // namespace lck

#endif
