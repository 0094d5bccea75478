#include "doctest.h"
#include "lck/catalog.hpp"
#include "lck/suites.hpp"

using namespace lck;

TEST_CASE("catalog entries satisfy their declared structure") {
  auto check_structure = [](auto entry) {
    auto reports = run_suites(entry, "structure");
    REQUIRE(reports.size() == 1);
    CHECK(reports.front().pass());
  };
  check_structure(make_heisenberg(2, {Rational(0)}));
  check_structure(make_heisenberg(4, {Rational(1), Rational(2), Rational(1, 2)}));
  check_structure(make_inoue(Rational(1), Rational(1)));
  check_structure(make_ot(3, {Rational(1), Rational(0), Rational(2)}));
  check_structure(make_hopf(3));
  check_structure(make_abelian(3));
}

TEST_CASE("declared flags match the computed classification") {
  auto classify_entry = [](auto entry) {
    auto lc = levi_civita(entry.algebra, entry.herm.g);
    auto fam = build_connection_family(entry.algebra, entry.herm, lc);
    auto bis = bismut_connection(fam);
    bool lck = entry.kahler
                   ? exterior_derivative(entry.algebra, fundamental_form<decltype(entry.lee.norm_sq)> (entry.herm)).is_zero_form()
                   : verify_lck(entry.algebra, entry.herm, entry.lee.theta);
    bool vaisman = entry.kahler || is_vaisman(entry.algebra, lc, bis, entry.lee);
    CHECK(lck == entry.lck);
    CHECK(vaisman == entry.vaisman);
  };
  classify_entry(make_heisenberg(2, {Rational(1)}));
  classify_entry(make_inoue(Rational(1), Rational(1)));
  classify_entry(make_ot(2, {Rational(1), Rational(1, 2)}));
  classify_entry(make_hopf(2));
  classify_entry(make_abelian(2));
}

TEST_CASE("nilpotent family details") {
  SUBCASE("theta(A) = 1 with the orthonormal metric") {
    auto e = make_heisenberg(2, {Rational(1)});
    CHECK(e.lee.norm_sq == Rational(1));
    CHECK(e.lee.A == unit_field<Rational>(0, 4));
    CHECK(e.lee.JA == unit_field<Rational>(1, 4));
  }

  SUBCASE("a = 0 gives the product with the three-dim nilpotent factor") {
    auto e = make_heisenberg(2, {Rational(0)});
    // A brackets trivially with everything
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(field_is_zero(e.algebra.bracket_of(0, j)));
    // ker theta = span{B, e1, e2} with [e1, e2] = B
    CHECK(e.algebra.bracket_of(2, 3) == unit_field<Rational>(1, 4));
    CHECK(field_is_zero(e.algebra.bracket_of(1, 2)));
    CHECK(field_is_zero(e.algebra.bracket_of(1, 3)));
  }

  CHECK_THROWS_AS(make_heisenberg(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_heisenberg(3, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("four-dim solvable example rejects mu = 0") {
  CHECK_THROWS_AS(make_inoue(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("solvable 2s+2 family details") {
  SUBCASE("lee data from the Gram matrix") {
    for (std::size_t s : {1u, 2u, 3u, 4u}) {
      CAPTURE(s);
      std::vector<Rational> r(s, Rational(1));
      auto e = make_ot(s, r);
      // theta(A_k) = g(A, A_k) = 1 for every generator
      for (std::size_t k = 0; k < s; ++k) {
        Rational pair = metric_pairing(e.herm.g, e.lee.A, unit_field<Rational>(k, 2 * s + 2));
        CHECK(pair == Rational(1));
      }
      // |A|^2 = s/(s+1)
      CHECK(e.lee.norm_sq == Rational(static_cast<long>(s), static_cast<long>(s) + 1));
      // A = (A_1 + ... + A_s)/(s+1)
      for (std::size_t k = 0; k < s; ++k)
        CHECK(e.lee.A[k] == Rational(1, static_cast<long>(s) + 1));
    }
  }

  SUBCASE("s = 1 brackets agree with the four-dim example at mu = 1, y = r1") {
    Rational r1(2, 3);
    auto ot = make_ot(1, {r1});
    auto in = make_inoue(Rational(1), r1);
    // basis correspondence A_1, B_1, C_1, C_2 <-> e_1, e_2, e_3, e_4
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(ot.algebra.bracket_of(i, j) == in.algebra.bracket_of(i, j));
  }
}

TEST_CASE("sphere frame details") {
  auto e = make_hopf(2);
  std::size_t m = 4;

  SUBCASE("alpha(H) = 1 via the sphere relation") {
    KForm<SpherePoly> alpha = hopf_alpha_form(m);
    SpherePoly val = alpha.eval({hopf_radial_field(m)});
    CHECK(val == SpherePoly(Rational(1)));
  }

  SUBCASE("H = -A/2 and |A|^2 = 4") {
    VectorField<SpherePoly> rel = e.lee.A;
    for (std::size_t k = 0; k < m; ++k) rel[k] += Rational(2) * hopf_radial_field(m)[k];
    CHECK(field_is_zero(rel));
    CHECK(e.lee.norm_sq == SpherePoly(Rational(4)));
  }

  SUBCASE("unit-Lee rescaling") {
    auto unit = normalized_unit_lee(e);
    CHECK(unit.lee.norm_sq == SpherePoly(Rational(1)));
    CHECK(unit.herm.g(0, 0) == Rational(4));
    // theta unchanged, A rescaled
    CHECK(unit.lee.theta == e.lee.theta);
  }

  CHECK_THROWS_AS(make_hopf(1), std::invalid_argument);
}

TEST_CASE("abelian frame is the degenerate kahler case") {
  auto e = make_abelian(2);
  CHECK(e.kahler);
  CHECK(e.lee.theta.is_zero_form());
  CHECK_THROWS_AS(normalized_unit_lee(e), std::domain_error);
}

TEST_CASE("full suite runs green on a catalog cross-section") {
  auto expect_all_pass = [](auto entry) {
    auto reports = run_suites(entry, "all");
    for (const auto& rep : reports) {
      CAPTURE(rep.suite);
      CHECK(rep.pass());
    }
  };
  expect_all_pass(make_heisenberg(2, {Rational(2)}));
  expect_all_pass(make_heisenberg(3, {Rational(-1), Rational(3, 2)}));
  expect_all_pass(make_inoue(Rational(1), Rational(1)));
  expect_all_pass(make_inoue(Rational(2), Rational(-3)));
  expect_all_pass(make_ot(1, {Rational(1)}));
  expect_all_pass(make_ot(2, {Rational(-1, 2), Rational(4)}));
  expect_all_pass(make_hopf(2));
  expect_all_pass(make_abelian(2));
}
