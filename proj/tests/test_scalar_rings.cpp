#include <random>

#include "doctest.h"
#include "lck/quadratic.hpp"
#include "lck/rational.hpp"
#include "lck/sphere_poly.hpp"

using namespace lck;

namespace {

// deterministic generator for the randomized ring laws
std::mt19937& rng() {
  static std::mt19937 gen(20240811u);
  return gen;
}

Rational random_rational() {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng()), den(rng()));
}

SpherePoly random_poly(std::size_t m, std::size_t terms = 4, unsigned max_deg = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, m - 1);
  SpherePoly::TermMap raw;
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial mono(m, 0u);
    unsigned d = deg(rng());
    for (unsigned u = 0; u < d; ++u) mono[var(rng())] += 1;
    Rational c = random_rational();
    auto it = raw.find(mono);
    if (it == raw.end())
      raw.emplace(std::move(mono), c);
    else
      it->second += c;
  }
  return SpherePoly::reduce(m, raw);
}

SpherePoly sphere_relation_sum(std::size_t m) {
  SpherePoly acc;
  for (std::size_t j = 0; j < m; ++j)
    acc += SpherePoly::variable(j, m) * SpherePoly::variable(j, m);
  return acc;
}

}  // namespace

TEST_CASE("rational arithmetic is exact on integer cross-products") {
  for (int iter = 0; iter < 200; ++iter) {
    long a = std::uniform_int_distribution<long>(-50, 50)(rng());
    long b = std::uniform_int_distribution<long>(1, 40)(rng());
    long c = std::uniform_int_distribution<long>(-50, 50)(rng());
    long d = std::uniform_int_distribution<long>(1, 40)(rng());
    Rational sum = Rational(a, b) + Rational(c, d);
    CHECK(sum == Rational(a * d + c * b, b * d));
    Rational prod = Rational(a, b) * Rational(c, d);
    CHECK(prod == Rational(a * c, b * d));
  }
}

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(4, 2).den() == 1);
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("quadratic field arithmetic") {
  Quadratic a(Rational(1, 2), Rational(1, 3), 5);  // 1/2 + (1/3) sqrt 5
  Quadratic b(Rational(2), Rational(-1), 5);
  CHECK((a + b) == Quadratic(Rational(5, 2), Rational(-2, 3), 5));
  // (1/2 + s/3)(2 - s) with s^2 = 5: 1 - 5/3 + s(2/3 - 1/2) = -2/3 + s/6
  CHECK((a * b) == Quadratic(Rational(-2, 3), Rational(1, 6), 5));
  CHECK((a / a) == Quadratic(Rational(1)));
  CHECK((b * b.inverse()) == Quadratic(Rational(1)));
  CHECK_THROWS_AS(Quadratic(Rational(0)).inverse(), std::domain_error);

  SUBCASE("values with zero radical part behave as rationals across radicands") {
    Quadratic plain(Rational(3));
    Quadratic mixed = plain + Quadratic(Rational(0), Rational(1), 7);
    CHECK(mixed == Quadratic(Rational(3), Rational(1), 7));
    CHECK_THROWS_AS(Quadratic(Rational(0), Rational(1), 5) + Quadratic(Rational(0), Rational(1), 7),
                    std::invalid_argument);
  }

  SUBCASE("perfect-square radicands collapse") {
    CHECK(Quadratic(Rational(0), Rational(1), 4) == Quadratic(Rational(2)));
    CHECK(Quadratic(Rational(1), Rational(1, 2), 9) == Quadratic(Rational(5, 2)));
    // the collapse keeps division well-defined: 2 - sqrt(4) = 0 exactly
    Quadratic z = Quadratic(Rational(2)) - Quadratic(Rational(0), Rational(1), 4);
    CHECK(z.is_zero());
  }
}

TEST_CASE("sphere relation reduces to 1") {
  CHECK(sphere_relation_sum(4) == SpherePoly(Rational(1)));
  CHECK(sphere_relation_sum(6) == SpherePoly(Rational(1)));
}

TEST_CASE("reduction substitutes the last variable's square") {
  // x4^2 * x1 -> x1 - x1^3 - x1 x2^2 - x1 x3^2
  std::size_t m = 4;
  SpherePoly::TermMap raw;
  raw.emplace(Monomial{1, 0, 0, 2}, Rational(1));
  SpherePoly reduced = SpherePoly::reduce(m, raw);

  SpherePoly x1 = SpherePoly::variable(0, m), x2 = SpherePoly::variable(1, m),
             x3 = SpherePoly::variable(2, m);
  SpherePoly expect = x1 - x1 * x1 * x1 - x1 * x2 * x2 - x1 * x3 * x3;
  CHECK(reduced == expect);
  // every canonical monomial has degree <= 1 in the last variable
  for (const auto& [mono, c] : reduced.terms()) CHECK(mono[m - 1] <= 1);
}

TEST_CASE("multiplying by the sphere relation is the identity") {
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t m = 3 + static_cast<std::size_t>(iter % 4);
    SpherePoly q = random_poly(m);
    SpherePoly lhs = sphere_relation_sum(m) * q - q;
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t m = 4;
    SpherePoly p = random_poly(m), q = random_poly(m);
    CHECK((p + q) == (q + p));
    CHECK((p * q) == (q * p));
    SpherePoly r = random_poly(m, 2, 2);
    CHECK(((p * q) * r) == (p * (q * r)));
    CHECK((p * (q + r)) == (p * q + p * r));
  }
}

TEST_CASE("frame derivation on generators") {
  std::size_t m = 4;
  SpherePoly x1 = SpherePoly::variable(0, m);
  // d_1(x_1) = 1 - x_1^2
  CHECK(frame_derivation(0, x1, m) == SpherePoly(Rational(1)) - x1 * x1);
  CHECK(frame_derivation(0, SpherePoly(Rational(1)), m).is_zero());
  CHECK_THROWS_AS(frame_derivation(7, x1, m), std::out_of_range);
}

TEST_CASE("frame derivation satisfies the Leibniz expansion") {
  std::size_t m = 4;
  SpherePoly x1 = SpherePoly::variable(0, m), x2 = SpherePoly::variable(1, m);
  // d_2(x1 x2) = d_2(x1) x2 + x1 d_2(x2) = (-x2 x1) x2 + x1 (1 - x2^2)
  SpherePoly expect = (-(x2 * x1)) * x2 + x1 * (SpherePoly(Rational(1)) - x2 * x2);
  CHECK(frame_derivation(1, x1 * x2, m) == expect);
  CHECK(expect == x1 - Rational(2) * (x1 * x2 * x2));

  for (int iter = 0; iter < 200; ++iter) {
    std::size_t mm = 3 + static_cast<std::size_t>(iter % 3);
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, mm - 1)(rng());
    SpherePoly p = random_poly(mm), q = random_poly(mm);
    SpherePoly lhs = frame_derivation(i, p * q, mm);
    SpherePoly rhs = frame_derivation(i, p, mm) * q + p * frame_derivation(i, q, mm);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("frame derivation respects the sphere relation") {
  for (std::size_t m = 3; m <= 6; ++m)
    for (std::size_t i = 0; i < m; ++i)
      CHECK(frame_derivation(i, sphere_relation_sum(m), m).is_zero());
}

TEST_CASE("uniform-point evaluation") {
  std::size_t m = 4;
  SpherePoly x1 = SpherePoly::variable(0, m), x2 = SpherePoly::variable(1, m);
  CHECK(evaluate_uniform(x1 * x2, 4) == Quadratic(Rational(1, 4)));

  SpherePoly y1 = SpherePoly::variable(0, 6);
  CHECK(evaluate_uniform(y1, 6) == Quadratic(Rational(0), Rational(1, 6), 6));

  SpherePoly p(Rational(1));
  for (std::size_t j = 0; j < 4; ++j)
    p -= SpherePoly::variable(j, 6) * SpherePoly::variable(j, 6);
  CHECK(evaluate_uniform(p, 6) == Quadratic(Rational(1, 3)));

  SUBCASE("evaluation commutes with reduction") {
    for (int iter = 0; iter < 100; ++iter) {
      std::size_t mm = 4 + static_cast<std::size_t>(iter % 3);
      SpherePoly::TermMap raw;
      for (int t = 0; t < 4; ++t) {
        Monomial mono(mm, 0u);
        for (int u = 0; u < 4; ++u)
          mono[std::uniform_int_distribution<std::size_t>(0, mm - 1)(rng())] += 1;
        raw[mono] = random_rational();
      }
      SpherePoly reduced = SpherePoly::reduce(mm, raw);
      Quadratic direct;
      for (const auto& [mono, c] : raw) {
        unsigned deg = 0;
        for (unsigned e : mono) deg += e;
        Quadratic inv(Rational(0), Rational(1, static_cast<long>(mm)), mm);
        Quadratic pw(Rational(1));
        for (unsigned u = 0; u < deg; ++u) pw *= inv;
        direct += Quadratic(c) * pw;
      }
      CHECK(evaluate_uniform(reduced, mm) == direct);
    }
  }
}

TEST_CASE("polynomial printing is canonical") {
  std::size_t m = 3;
  SpherePoly x1 = SpherePoly::variable(0, m), x2 = SpherePoly::variable(1, m);
  SpherePoly p = x1 * x2 - SpherePoly(Rational(1, 2));
  CHECK(p.to_string() == "x1*x2 - 1/2");
  CHECK(SpherePoly().to_string() == "0");
  CHECK((-(x1 * x1)).to_string() == "-x1^2");
}

namespace {

// independent oracle for the quotient semantics: rational points on the unit
// sphere via the stereographic parametrization
std::vector<Rational> stereographic_point(std::size_t m) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::vector<Rational> v(m - 1);
  Rational norm_sq(0);
  for (auto& c : v) {
    c = Rational(num(rng()), 1 + std::uniform_int_distribution<long>(0, 3)(rng()));
    norm_sq += c * c;
  }
  Rational den = norm_sq + Rational(1);
  std::vector<Rational> p(m);
  for (std::size_t j = 0; j + 1 < m; ++j) p[j] = Rational(2) * v[j] / den;
  p[m - 1] = (norm_sq - Rational(1)) / den;
  return p;
}

Rational evaluate_at(const SpherePoly& poly, const std::vector<Rational>& point) {
  Rational acc(0);
  for (const auto& [mono, c] : poly.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < mono.size(); ++j)
      for (unsigned u = 0; u < mono[j]; ++u) term *= point[j];
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("reduction preserves values on the sphere") {
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t m = 3 + static_cast<std::size_t>(iter % 3);
    std::vector<Rational> p = stereographic_point(m);
    // the parametrized point really lies on the sphere
    Rational check(0);
    for (const auto& c : p) check += c * c;
    REQUIRE(check == Rational(1));

    SpherePoly::TermMap raw;
    for (int t = 0; t < 5; ++t) {
      Monomial mono(m, 0u);
      for (int u = 0; u < 4; ++u)
        mono[std::uniform_int_distribution<std::size_t>(0, m - 1)(rng())] += 1;
      raw[mono] = random_rational();
    }
    SpherePoly reduced = SpherePoly::reduce(m, raw);

    Rational direct(0);
    for (const auto& [mono, c] : raw) {
      Rational term = c;
      for (std::size_t j = 0; j < m; ++j)
        for (unsigned u = 0; u < mono[j]; ++u) term *= p[j];
      direct += term;
    }
    CHECK(evaluate_at(reduced, p) == direct);
  }
}
