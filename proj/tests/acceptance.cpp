// Acceptance harness: runs the full verification matrix and prints one
// PASS/FAIL line per criterion. Every comparison is exact (identically zero
// residual in canonical ring form); there are no tolerances anywhere.

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "lck/hopf_systems.hpp"
#include "lck/suites.hpp"

using namespace lck;

namespace {

int failures = 0;

struct Criterion {
  std::string label;
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }

  template <typename Entry>
  void require_suites(const Entry& entry, const std::vector<std::string>& suites) {
    for (const auto& name : suites) {
      auto reports = run_suites(entry, name);
      for (const auto& rep : reports) {
        if (rep.pass()) continue;
        ok = false;
        for (const auto& c : rep.checks)
          if (c.status == CheckStatus::Fail)
            notes.push_back(entry.name + " " + rep.suite + "/" + c.name +
                            (c.detail.empty() ? "" : " (" + c.detail + ")"));
      }
    }
  }

  void finish() const {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << label << "\n";
    for (const auto& n : notes) std::cout << "      - " << n << "\n";
    if (!ok) ++failures;
  }
};

void criterion_1_heisenberg() {
  Criterion c{"criterion 1: nilpotent solvmanifold family (n = 2,3,4)"};
  std::vector<std::pair<std::size_t, std::vector<Rational>>> grid = {
      {2, {Rational(0)}},
      {2, {Rational(1)}},
      {2, {Rational(2)}},
      {2, {Rational(1, 2)}},
      {3, {Rational(1), Rational(2)}},
      {3, {Rational(0), Rational(1, 2)}},
      {4, {Rational(1), Rational(2), Rational(1, 2)}},
      {4, {Rational(0), Rational(0), Rational(2)}},
  };
  for (const auto& [n, a] : grid) {
    auto entry = make_heisenberg(n, a);
    c.require_suites(entry,
                     {"structure", "lck", "vaisman-identities", "curvature-tables", "ricci",
                      "holonomy"});
  }
  c.finish();
}

void criterion_2_inoue() {
  Criterion c{"criterion 2: four-dimensional solvable example (mu = 1, y = 1)"};
  auto entry = make_inoue(Rational(1), Rational(1));
  c.require_suites(entry, {"structure", "lck", "bismut-tables", "curvature-tables", "holonomy"});
  c.finish();
}

void criterion_3_ot() {
  Criterion c{"criterion 3: solvable 2s+2 family (s = 1..4)"};
  std::vector<std::vector<Rational>> rs = {
      {Rational(1)},
      {Rational(1), Rational(1, 2)},
      {Rational(1), Rational(0), Rational(2)},
      {Rational(1), Rational(0), Rational(2), Rational(1, 3)},
  };
  for (std::size_t s = 1; s <= 4; ++s) {
    auto entry = make_ot(s, rs[s - 1]);
    c.require_suites(entry,
                     {"structure", "lck", "bismut-tables", "curvature-tables", "ot-operators",
                      "holonomy"});
  }
  c.finish();
}

void criterion_4_hopf() {
  Criterion c{"criterion 4: sphere-frame family (n = 2..5, dependence systems to n = 6)"};
  for (std::size_t n = 2; n <= 5; ++n) {
    auto entry = make_hopf(n);
    c.require_suites(entry, {"structure", "lck", "hopf-symbolic", "ricci", "holonomy"});
  }
  HopfIndependenceReport six = hopf_independence_systems(6);
  c.require(six.mixed_inverse_ok && six.odd_inverse_ok, "closed-form inverses at n = 6");
  c.finish();
}

void criterion_5_vaisman_identities() {
  Criterion c{"criterion 5: parallel-torsion identity suite (dims 4 and >= 6)"};
  c.require_suites(make_heisenberg(2, {Rational(1)}), {"vaisman-identities"});
  c.require_suites(make_heisenberg(3, {Rational(1), Rational(2)}), {"vaisman-identities"});
  c.require_suites(make_heisenberg(4, {Rational(1), Rational(0), Rational(1, 2)}),
                   {"vaisman-identities"});
  c.require_suites(make_hopf(2), {"vaisman-identities"});
  c.require_suites(make_hopf(3), {"vaisman-identities"});
  c.require_suites(make_hopf(4), {"vaisman-identities"});
  c.require_suites(make_hopf(5), {"vaisman-identities"});
  c.finish();
}

void criterion_6_gauduchon() {
  Criterion c{"criterion 6: connection-parameter scans"};
  c.require_suites(make_heisenberg(2, {Rational(1)}), {"gauduchon-scan"});
  c.require_suites(make_heisenberg(3, {Rational(1), Rational(2)}), {"gauduchon-scan"});
  c.require_suites(make_hopf(2), {"gauduchon-scan"});
  c.require_suites(make_hopf(3), {"gauduchon-scan"});
  c.require_suites(make_inoue(Rational(1), Rational(1)), {"gauduchon-scan"});
  c.require_suites(make_ot(2, {Rational(1), Rational(1, 2)}), {"gauduchon-scan"});
  c.require_suites(make_ot(3, {Rational(1), Rational(0), Rational(2)}), {"gauduchon-scan"});
  c.require_suites(make_abelian(2), {"gauduchon-scan"});
  c.finish();
}

void criterion_7_properties() {
  Criterion c{"criterion 7: property suites"};

  // d o d = 0 on randomized forms over two frames
  {
    std::mt19937 gen(424243u);
    std::uniform_int_distribution<long> coeff(-6, 6);
    auto hopf = make_hopf(3);
    auto heis = make_heisenberg(3, {Rational(1), Rational(1, 2)});
    bool ok = true;
    for (int iter = 0; iter < 20; ++iter) {
      KForm<SpherePoly> eta(6, 1);
      for (std::size_t j = 0; j < 6; ++j) {
        std::size_t idx = j;
        eta.at_sorted(&idx) =
            SpherePoly::variable((j + iter) % 6, 6) * Rational(coeff(gen));
      }
      if (!exterior_derivative(hopf.algebra, exterior_derivative(hopf.algebra, eta)).is_zero_form())
        ok = false;
      KForm<Rational> two(6, 2);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) two.set_at({i, j}, Rational(coeff(gen)));
      if (!exterior_derivative(heis.algebra, exterior_derivative(heis.algebra, two)).is_zero_form())
        ok = false;
    }
    c.require(ok, "d o d = 0 on randomized forms");
  }

  // Koszul output is torsion-free and metric on every family
  {
    bool ok = true;
    auto check = [&ok](const auto& entry) {
      auto lc = levi_civita(entry.algebra, entry.herm.g);
      if (!torsion_free(lc, entry.algebra)) ok = false;
      if (!metric_compatible(lc, entry.herm.g)) ok = false;
    };
    check(make_heisenberg(3, {Rational(1), Rational(2)}));
    check(make_inoue(Rational(1), Rational(1)));
    check(make_ot(2, {Rational(1), Rational(1, 2)}));
    check(make_hopf(3));
    check(make_abelian(2));
    c.require(ok, "Koszul output torsion-free and metric");
  }

  // closure idempotence and order-independence
  {
    auto entry = make_ot(2, {Rational(1), Rational(1, 2)});
    auto lc = levi_civita(entry.algebra, entry.herm.g);
    auto fam = build_connection_family(entry.algebra, entry.herm, lc);
    auto bis = bismut_connection(fam);
    auto rb = curvature(bis, entry.algebra);
    MatrixSubspace<Rational> first = ambrose_singer_closure(bis, rb);

    std::size_t m = entry.algebra.dim();
    CurvatureTable<Rational> from_basis(m);
    auto basis = first.basis();
    std::size_t t = 0;
    for (std::size_t i = 0; i < m && t < basis.size(); ++i)
      for (std::size_t j = i + 1; j < m && t < basis.size(); ++j)
        from_basis.at_pair(i, j) = basis[t++];
    bool idem = ambrose_singer_closure(bis, from_basis).same_span(first);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::mt19937 gen(99u);
    bool order_independent = true;
    for (int shuffle_round = 0; shuffle_round < 3; ++shuffle_round) {
      std::shuffle(pairs.begin(), pairs.end(), gen);
      CurvatureTable<Rational> shuffled(m);
      std::size_t dst = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          shuffled.at_pair(i, j) = rb.at_pair(pairs[dst].first, pairs[dst].second);
          ++dst;
        }
      if (!ambrose_singer_closure(bis, shuffled).same_span(first)) order_independent = false;
    }
    c.require(idem, "closure idempotence");
    c.require(order_independent, "closure order-independence");
  }

  // 200 randomized reduction / derivation laws
  {
    std::mt19937 gen(31337u);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::uniform_int_distribution<unsigned> deg(0, 3);
    bool ok = true;
    for (int iter = 0; iter < 200; ++iter) {
      std::size_t m = 3 + static_cast<std::size_t>(iter % 4);
      std::uniform_int_distribution<std::size_t> var(0, m - 1);
      auto random_poly = [&]() {
        SpherePoly::TermMap raw;
        for (int t = 0; t < 4; ++t) {
          Monomial mono(m, 0u);
          unsigned d = deg(gen);
          for (unsigned u = 0; u < d; ++u) mono[var(gen)] += 1;
          Rational cc(num(gen), den(gen));
          auto it = raw.find(mono);
          if (it == raw.end())
            raw.emplace(std::move(mono), cc);
          else
            it->second += cc;
        }
        return SpherePoly::reduce(m, raw);
      };
      SpherePoly p = random_poly(), q = random_poly();
      std::size_t i = var(gen);
      SpherePoly leib = frame_derivation(i, p * q, m) -
                        (frame_derivation(i, p, m) * q + p * frame_derivation(i, q, m));
      if (!leib.is_zero()) ok = false;
      SpherePoly relation;
      for (std::size_t j = 0; j < m; ++j)
        relation += SpherePoly::variable(j, m) * SpherePoly::variable(j, m);
      if (!(relation * q - q).is_zero()) ok = false;
      if (!frame_derivation(i, relation, m).is_zero()) ok = false;
      if (evaluate_uniform(p * q, m) != evaluate_uniform(p, m) * evaluate_uniform(q, m)) ok = false;
    }
    c.require(ok, "randomized reduction and derivation laws (200 draws)");
  }

  // export / import round-trips
  {
    bool ok = true;
    auto roundtrip = [&ok](auto entry) {
      std::string text = serialize_frame_description(describe(entry));
      FrameDescription reparsed = parse_frame_description(text);
      if (serialize_frame_description(reparsed) != text) ok = false;
      LoadedEntry loaded = instantiate(reparsed);
      for (const std::string suite : {"structure", "lck", "gauduchon-scan"}) {
        auto direct = run_suites(entry, suite);
        auto via_file = run_custom(loaded, suite);
        if (direct.size() != 1 || via_file.empty()) {
          ok = false;
          continue;
        }
        if (render_json(direct.front()) != render_json(via_file.back())) ok = false;
      }
      // a second custom run is byte-identical
      auto once = run_custom(loaded, "all");
      auto twice = run_custom(loaded, "all");
      if (once.size() != twice.size()) ok = false;
      for (std::size_t t = 0; t < std::min(once.size(), twice.size()); ++t)
        if (render_json(once[t]) != render_json(twice[t])) ok = false;
    };
    roundtrip(make_inoue(Rational(1), Rational(1)));
    roundtrip(make_heisenberg(2, {Rational(1)}));
    roundtrip(make_ot(2, {Rational(1), Rational(1, 2)}));
    roundtrip(make_hopf(2));
    roundtrip(make_abelian(2));
    c.require(ok, "description files round-trip to identical reports");
  }

  c.finish();
}

}  // namespace

int main() {
  criterion_1_heisenberg();
  criterion_2_inoue();
  criterion_3_ot();
  criterion_4_hopf();
  criterion_5_vaisman_identities();
  criterion_6_gauduchon();
  criterion_7_properties();
  if (failures == 0) {
    std::cout << "all acceptance criteria hold\n";
    return 0;
  }
  std::cout << failures << " criterion(s) failed\n";
  return 1;
}
