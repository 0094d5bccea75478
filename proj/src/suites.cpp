#include "lck/suites.hpp"

#include <algorithm>
#include <sstream>

#include "lck/hopf_systems.hpp"

namespace lck {

namespace {

/// Lazily computed tensors shared by the suites of one run.
template <typename R>
struct Workspace {
  const CatalogEntry<R>& e;
  std::optional<ConnectionTable<R>> lc_;
  std::optional<ConnectionFamily<R>> fam_;
  std::optional<ConnectionTable<R>> bis_;
  std::optional<CurvatureTable<R>> rb_;
  std::optional<CurvatureTable<R>> rg_;

  explicit Workspace(const CatalogEntry<R>& entry) : e(entry) {}

  const ConnectionTable<R>& lc() {
    if (!lc_) lc_ = levi_civita(e.algebra, e.herm.g);
    return *lc_;
  }
  const ConnectionFamily<R>& fam() {
    if (!fam_) fam_ = build_connection_family(e.algebra, e.herm, lc());
    return *fam_;
  }
  const ConnectionTable<R>& bis() {
    if (!bis_) bis_ = bismut_connection(fam());
    return *bis_;
  }
  const CurvatureTable<R>& rb() {
    if (!rb_) rb_ = curvature(bis(), e.algebra);
    return *rb_;
  }
  const CurvatureTable<R>& rg() {
    if (!rg_) rg_ = curvature(lc(), e.algebra);
    return *rg_;
  }
};

template <typename R>
bool curvature_tables_equal(const CurvatureTable<R>& a, const CurvatureTable<R>& b) {
  if (a.m != b.m) return false;
  for (std::size_t t = 0; t < a.pair_mats.size(); ++t) {
    Mat<R> diff = a.pair_mats[t] - b.pair_mats[t];
    if (!diff.all_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// structure

template <typename R>
void structure_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  rep.add("bracket-antisymmetry", "frame-algebra-axioms", e.algebra.is_antisymmetric());
  JacobiReport jac = e.algebra.jacobi_defect();
  rep.add("jacobi-identity", "frame-algebra-axioms", jac.zero,
          jac.zero ? "" : "nonzero cyclic sum at " + jac.worst);
  bool herm_ok = true;
  std::string herm_detail;
  try {
    e.herm.check();
  } catch (const std::exception& ex) {
    herm_ok = false;
    herm_detail = ex.what();
  }
  rep.add("hermitian-axioms", "hermitian-structure", herm_ok, herm_detail);
  if (!herm_ok) return;
  NijenhuisReport nij = nijenhuis(e.algebra, e.herm.J);
  rep.add("nijenhuis-integrability", "complex-structure-integrability", nij.zero,
          nij.zero ? "" : "nonzero tensor at " + nij.worst);
  if constexpr (!std::is_same_v<R, SpherePoly>) {
    std::vector<Rational> traces = e.algebra.adjoint_traces();
    bool unimodular = true;
    for (const auto& t : traces)
      if (!t.is_zero()) unimodular = false;
    rep.add("unimodularity", "unimodular-frame", unimodular);
  } else {
    rep.skip("unimodularity", "unimodular-frame", "function-coefficient frame");
  }
}

// ---------------------------------------------------------------------------
// lck

template <typename R>
void lck_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  std::size_t m = e.algebra.dim();
  if (m < 4) {
    rep.skip("lck-defining-equation", "lck-defining-equation",
             "conformally Kahler analysis needs dimension >= 4");
    return;
  }

  if constexpr (std::is_same_v<R, SpherePoly>) {
    // automatic Lee solving is constants-only; a sphere-ring entry without a
    // declared theta can only be classified when d omega = 0
    if (!e.kahler && e.lee.theta.is_zero_form()) {
      KForm<R> domega = exterior_derivative(e.algebra, fundamental_form<R>(e.herm));
      if (domega.is_zero_form()) {
        rep.add("kahler-closed-form", "lck-defining-equation", true);
      } else {
        rep.skip("lck-defining-equation", "lck-defining-equation",
                 "no declared Lee form; solving needs the constants ring");
      }
      return;
    }
  }

  // declared Lee data is internally consistent
  {
    std::vector<R> theta = oneform_coefficients(e.lee.theta);
    bool dual_ok = true;
    for (std::size_t j = 0; j < m && dual_ok; ++j) {
      R acc(0);
      for (std::size_t i = 0; i < m; ++i)
        if (!e.herm.g(i, j).is_zero()) acc += e.lee.A[i] * R(e.herm.g(i, j));
      acc -= theta[j];
      if (!is_zero(acc)) dual_ok = false;
    }
    VectorField<R> ja = apply_endo(e.herm.J, e.lee.A);
    for (std::size_t j = 0; j < m; ++j) {
      R d = ja[j] - e.lee.JA[j];
      if (!is_zero(d)) dual_ok = false;
    }
    R norm(0);
    for (std::size_t j = 0; j < m; ++j) norm += theta[j] * e.lee.A[j];
    norm -= e.lee.norm_sq;
    if (!is_zero(norm)) dual_ok = false;
    rep.add("lee-dual-data", "lee-form-duality", dual_ok);
  }

  if (e.kahler) {
    KForm<R> domega = exterior_derivative(e.algebra, fundamental_form<R>(e.herm));
    rep.add("kahler-closed-form", "lck-defining-equation", domega.is_zero_form());
  } else {
    rep.add("lck-defining-equation", "lck-defining-equation",
            verify_lck(e.algebra, e.herm, e.lee.theta));
  }

  if constexpr (!std::is_same_v<R, SpherePoly>) {
    auto solved = solve_lee_form(e.algebra, e.herm);
    bool consistent = false;
    if (e.kahler)
      consistent = solved.status == LeeStatus::Kahler;
    else if (solved.status == LeeStatus::Lck)
      consistent = solved.lee->theta == e.lee.theta;
    rep.add("lee-solver-agrees", "lee-form-uniqueness", consistent);
  }

  // wedging with omega is injective on 1-forms (so the Lee form is unique)
  if (m >= 4) {
    KForm<Rational> omega = fundamental_form<Rational>(e.herm);
    auto triples = detail::combinations(m, 3);
    RatMat w(triples.size(), m);
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const auto& tr = triples[t];
      w(t, tr[0]) += omega.at({tr[1], tr[2]});
      w(t, tr[1]) -= omega.at({tr[0], tr[2]});
      w(t, tr[2]) += omega.at({tr[0], tr[1]});
    }
    rep.add("lee-form-uniqueness", "lee-form-uniqueness", rank(w) == m);
  }

  // theta from the codifferential of omega
  {
    KForm<R> omega = fundamental_form<R>(e.herm);
    KForm<R> delta_omega = codifferential(e.algebra, e.herm.g, ws.lc(), omega);
    std::vector<R> dv = oneform_coefficients(delta_omega);
    long n = static_cast<long>(m / 2);
    bool ok = true;
    std::vector<R> theta = oneform_coefficients(e.lee.theta);
    for (std::size_t j = 0; j < m && ok; ++j) {
      R acc(0);
      for (std::size_t a = 0; a < m; ++a)
        if (!e.herm.J(a, j).is_zero()) acc += dv[a] * R(e.herm.J(a, j));
      acc *= Rational(-1, n - 1);
      acc -= theta[j];
      if (!is_zero(acc)) ok = false;
    }
    rep.add("lee-codifferential-formula", "lee-codifferential-formula", ok);
  }

  // d o d = 0 on theta and omega over this frame
  {
    KForm<R> omega = fundamental_form<R>(e.herm);
    bool ok = exterior_derivative(e.algebra, exterior_derivative(e.algebra, omega)).is_zero_form() &&
              exterior_derivative(e.algebra, exterior_derivative(e.algebra, e.lee.theta)).is_zero_form();
    rep.add("exterior-derivative-squares-to-zero", "frame-differential", ok);
  }
}

// ---------------------------------------------------------------------------
// bismut / curvature / ricci tables

template <typename R>
void bismut_tables_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  rep.add("levi-civita-torsion-free", "koszul-formula", torsion_free(ws.lc(), e.algebra));
  rep.add("levi-civita-metric", "koszul-formula", metric_compatible(ws.lc(), e.herm.g));
  if (e.expected_levi_civita)
    rep.add("levi-civita-table", "reference-connection-tables",
            ws.lc().same_table(*e.expected_levi_civita));
  else
    rep.skip("levi-civita-table", "reference-connection-tables", "no reference table");

  rep.add("bismut-metric", "bismut-connection", metric_compatible(ws.bis(), e.herm.g));
  {
    Mat<R> jl = Mat<R>::template lift<Rational>(e.herm.J);
    rep.add("bismut-complex-structure-parallel", "bismut-connection",
            covd_endo_vanishes(ws.bis(), e.algebra, jl));
  }
  bool skew_ok = true;
  std::string skew_detail;
  try {
    KForm<R> c = torsion_three_form(ws.bis(), e.algebra, e.herm.g);
    KForm<R> domega = exterior_derivative(e.algebra, fundamental_form<R>(e.herm));
    KForm<R> via_j = pull_through(domega, e.herm.J);
    if (!(c - via_j).is_zero_form()) {
      skew_ok = false;
      skew_detail = "torsion form differs from the J-twisted d-omega";
    }
  } catch (const std::exception& ex) {
    skew_ok = false;
    skew_detail = ex.what();
  }
  rep.add("bismut-torsion-totally-skew", "bismut-torsion-form", skew_ok, skew_detail);

  if (e.expected_bismut)
    rep.add("bismut-table", "reference-connection-tables", ws.bis().same_table(*e.expected_bismut));
  else
    rep.skip("bismut-table", "reference-connection-tables", "no reference table");

  if constexpr (!std::is_same_v<R, SpherePoly>) {
    rep.add("riemannian-first-bianchi", "koszul-formula", first_bianchi_holds(ws.rg()));
  }
}

template <typename R>
void curvature_tables_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  if (e.expected_curvature)
    rep.add("bismut-curvature-table", "reference-curvature-tables",
            curvature_tables_equal(ws.rb(), *e.expected_curvature));
  else
    rep.skip("bismut-curvature-table", "reference-curvature-tables", "no reference table");
  if (e.family == Family::Hopf && e.algebra.dim() == 4)
    rep.add("bismut-flat-dim4", "hopf-flat-dim4", ws.rb().all_zero());
  if (e.family == Family::Abelian)
    rep.add("flat-frame", "reference-curvature-tables", ws.rb().all_zero() && ws.rg().all_zero());
}

template <typename R>
void ricci_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  Mat<R> ricb = ricci(ws.rb());
  if (e.expected_bismut_ricci) {
    Mat<R> diff = ricb - *e.expected_bismut_ricci;
    rep.add("bismut-ricci-closed-form", "reference-ricci", diff.all_zero());
  } else {
    rep.skip("bismut-ricci-closed-form", "reference-ricci", "no reference table");
  }
  if (e.expected_riemannian_ricci) {
    Mat<R> ricg = ricci(ws.rg());
    Mat<R> diff = ricg - *e.expected_riemannian_ricci;
    rep.add("riemannian-ricci-closed-form", "reference-ricci", diff.all_zero());
  } else {
    rep.skip("riemannian-ricci-closed-form", "reference-ricci", "no reference table");
  }
  if (e.family == Family::Hopf) {
    bool zero = ricci(ws.rb()).all_zero();
    bool expect_zero = e.algebra.dim() == 4;
    rep.add("bismut-ricci-vanishes-iff-dim4", "hopf-ricci", zero == expect_zero,
            "dimension " + std::to_string(e.algebra.dim()));
  }
}

// ---------------------------------------------------------------------------
// vaisman identities (on the unit-Lee normalization)

template <typename R>
void vaisman_suite(Workspace<R>& outer, SuiteReport& rep) {
  const auto& base = outer.e;
  if (!base.vaisman || base.kahler) {
    rep.skip("vaisman-identities", "lee-parallel-equivalence",
             base.kahler ? "degenerate Lee form (Kahler)" : "entry is not Vaisman");
    return;
  }
  CatalogEntry<R> unit{};
  try {
    unit = normalized_unit_lee(base);
  } catch (const std::exception& ex) {
    rep.skip("vaisman-identities", "lee-parallel-equivalence",
             std::string("cannot rescale to |A| = 1: ") + ex.what());
    return;
  }
  Workspace<R> ws(unit);
  const auto& e = ws.e;
  const FrameAlgebra<R>& fa = e.algebra;
  std::size_t m = fa.dim();

  bool lc_parallel = covd_form_vanishes(ws.lc(), fa, e.lee.theta);
  bool b_parallel = covd_form_vanishes(ws.bis(), fa, e.lee.theta);
  rep.add("lee-parallel-equivalence", "lee-parallel-equivalence", lc_parallel && b_parallel,
          lc_parallel == b_parallel ? "" : "parallelism disagrees between the two connections");

  KForm<R> omega = fundamental_form<R>(e.herm);
  KForm<R> domega = exterior_derivative(fa, omega);
  KForm<R> jtheta = j_twist(e.lee.theta, e.herm.J);
  KForm<R> c = torsion_three_form(ws.bis(), fa, e.herm.g);
  {
    KForm<R> via_j = pull_through(domega, e.herm.J);
    KForm<R> via_wedge = -wedge(jtheta, omega);
    rep.add("bismut-torsion-form", "bismut-torsion-form",
            (c - via_j).is_zero_form() && (c - via_wedge).is_zero_form());
  }
  rep.add("lee-torsion-contraction", "lee-torsion-contraction", c.contract(e.lee.A).is_zero_form());
  rep.add("bismut-parallel-torsion", "bismut-parallel-torsion", covd_form_vanishes(ws.bis(), fa, c));

  Mat<R> phi = phi_matrix(e.herm, e.lee);
  rep.add("f-structure-parallel", "f-structure-parallel", covd_endo_vanishes(ws.bis(), fa, phi));
  {
    Mat<R> p3 = phi * phi * phi;
    bool fstr = (p3 + phi).all_zero();
    bool kills = field_is_zero(mat_vec(phi, e.lee.A)) && field_is_zero(mat_vec(phi, e.lee.JA));
    Mat<R> gl = Mat<R>::template lift<Rational>(e.herm.g);
    bool skew = (phi.transpose() * gl + gl * phi).all_zero();
    rep.add("f-structure-axioms", "f-structure-axioms", fstr && kills && skew);
  }

  {
    KForm<R> djt = exterior_derivative(fa, jtheta);
    KForm<R> via_c = c.contract(e.lee.JA);
    Mat<R> gl = Mat<R>::template lift<Rational>(e.herm.g);
    Mat<R> gphi = gl * phi;
    KForm<R> via_phi(m, 2);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) via_phi.set_at({i, j}, -gphi(j, i));
    bool ok = (djt - via_c).is_zero_form() && (djt - via_phi).is_zero_form();
    bool jinv = (pull_through(djt, e.herm.J) - djt).is_zero_form();
    bool contractions =
        djt.contract(e.lee.A).is_zero_form() && djt.contract(e.lee.JA).is_zero_form();
    rep.add("antilee-torsion-contraction", "antilee-torsion-contraction", ok);
    rep.add("antilee-two-form-invariance", "antilee-two-form", jinv && contractions);
  }

  {
    bool a_par = true, ja_par = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!field_is_zero(covd_vector(ws.bis(), fa, i, e.lee.A))) a_par = false;
      if (!field_is_zero(covd_vector(ws.bis(), fa, i, e.lee.JA))) ja_par = false;
    }
    bool along_a = true, along_ja = true;
    for (std::size_t j = 0; j < m; ++j) {
      VectorField<R> lhs = ws.bis().directional(e.lee.A, j);
      VectorField<R> rhs = fa.bracket(e.lee.A, unit_field<R>(j, m));
      if (!field_is_zero(field_sub(std::move(lhs), rhs))) along_a = false;
      VectorField<R> lhs2 = ws.bis().directional(e.lee.JA, j);
      VectorField<R> rhs2 = fa.bracket(e.lee.JA, unit_field<R>(j, m));
      for (std::size_t k = 0; k < m; ++k) rhs2[k] -= phi(k, j);
      if (!field_is_zero(field_sub(std::move(lhs2), rhs2))) along_ja = false;
    }
    rep.add("bismut-connection-structure", "bismut-connection-structure",
            a_par && ja_par && along_a && along_ja);
  }

  if constexpr (!std::is_same_v<R, SpherePoly>) {
    // the complement D of span{A, JA}: brackets with A and JA stay in D,
    // Bismut derivatives inside D drop the omega(X,Y) JA correction
    auto dbasis = distribution_basis(e.herm, e.lee);
    std::vector<Rational> theta = oneform_coefficients(e.lee.theta);
    std::vector<Rational> jtv = oneform_coefficients(jtheta);
    auto in_d = [&](const VectorField<Rational>& v) {
      Rational t(0), jt(0);
      for (std::size_t k = 0; k < m; ++k) {
        t += theta[k] * v[k];
        jt += jtv[k] * v[k];
      }
      return t.is_zero() && jt.is_zero();
    };
    bool brackets_in_d = true;
    for (const auto& x : dbasis) {
      if (!in_d(fa.bracket(e.lee.A, x))) brackets_in_d = false;
      if (!in_d(fa.bracket(e.lee.JA, x))) brackets_in_d = false;
    }
    rep.add("lee-bracket-reduction", "lee-bracket-reduction", brackets_in_d);

    bool structure_ok = true, antilee_pairing_ok = true;
    for (const auto& x : dbasis)
      for (const auto& y : dbasis) {
        VectorField<Rational> bxy = zero_field<Rational>(m);
        VectorField<Rational> gxy = zero_field<Rational>(m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            if (x[i].is_zero() || y[j].is_zero()) continue;
            Rational cc = x[i] * y[j];
            field_add_scaled(bxy, cc, ws.bis().gamma[i][j]);
            field_add_scaled(gxy, cc, ws.lc().gamma[i][j]);
          }
        Rational w = omega.eval({x, y});
        for (std::size_t k = 0; k < m; ++k) gxy[k] -= w * Rational(1, 2) * e.lee.JA[k];
        if (!field_is_zero(field_sub(bxy, gxy))) structure_ok = false;
        if (!in_d(bxy)) structure_ok = false;
        // g(JA, [x, y]) = omega(x, y)
        VectorField<Rational> br = fa.bracket(x, y);
        Rational pair = metric_pairing(e.herm.g, e.lee.JA, br);
        if (pair != w) antilee_pairing_ok = false;
      }
    rep.add("distribution-bismut-structure", "bismut-connection-structure", structure_ok);
    rep.add("antilee-bracket-pairing", "distribution-pairing", antilee_pairing_ok);
  }

  {
    bool rj = true, pair_sym = true, jj = true, lee_zero = true;
    Mat<R> jl = Mat<R>::template lift<Rational>(e.herm.J);
    Mat<R> gl = Mat<R>::template lift<Rational>(e.herm.g);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Mat<R>& r = ws.rb().at_pair(i, j);
        if (!(r * jl - jl * r).all_zero()) rj = false;
      }
    // (0,4)-tensor pair symmetry
    std::vector<Mat<R>> r4(ws.rb().pair_mats.size());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        r4[CurvatureTable<R>::pair_rank(i, j)] = gl.transpose() * ws.rb().at_pair(i, j);
    auto r4_entry = [&](std::size_t a, std::size_t b, std::size_t cc, std::size_t d) -> R {
      if (a == b) return R(0);
      const Mat<R>& mat = r4[CurvatureTable<R>::pair_rank(std::min(a, b), std::max(a, b))];
      R val = mat(d, cc);
      return a < b ? val : -val;
    };
    for (std::size_t a = 0; a < m && pair_sym; ++a)
      for (std::size_t b = a + 1; b < m && pair_sym; ++b)
        for (std::size_t cc = 0; cc < m && pair_sym; ++cc)
          for (std::size_t d = cc + 1; d < m; ++d) {
            R diff = r4_entry(a, b, cc, d) - r4_entry(cc, d, a, b);
            if (!is_zero(diff)) {
              pair_sym = false;
              break;
            }
          }
    for (std::size_t i = 0; i < m && jj; ++i)
      for (std::size_t j = i + 1; j < m && jj; ++j) {
        // R(J e_i, J e_j) as a bilinear combination
        Mat<R> acc(m, m);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) {
            if (e.herm.J(a, i).is_zero() || e.herm.J(b, j).is_zero() || a == b) continue;
            Rational cc = e.herm.J(a, i) * e.herm.J(b, j);
            Mat<R> r = ws.rb().at(a, b);
            r.scale(R(cc));
            acc += r;
          }
        if (!(acc - ws.rb().at_pair(i, j)).all_zero()) jj = false;
      }
    for (std::size_t j = 0; j < m && lee_zero; ++j) {
      if (!ws.rb().of_fields(e.lee.A, unit_field<R>(j, m)).all_zero()) lee_zero = false;
      if (!ws.rb().of_fields(e.lee.JA, unit_field<R>(j, m)).all_zero()) lee_zero = false;
    }
    rep.add("curvature-pair-symmetries", "curvature-pair-symmetries",
            rj && pair_sym && jj && lee_zero);
  }

  {
    Mat<R> ricb = ricci(ws.rb());
    Mat<R> jl = Mat<R>::template lift<Rational>(e.herm.J);
    bool sym = ricb == ricb.transpose();
    bool jinv = (jl.transpose() * ricb * jl - ricb).all_zero();
    rep.add("bismut-ricci-symmetry", "bismut-ricci-symmetry", sym && jinv);
  }

  {
    CurvatureTable<R> rebuilt = rb_from_rg(ws.rg(), fa, e.herm, e.lee);
    rep.add("curvature-transfer-formula", "curvature-transfer-formula",
            curvature_tables_equal(rebuilt, ws.rb()));
    Mat<R> ric_rebuilt = ricb_from_ricg(ricci(ws.rg()), e.herm, e.lee);
    Mat<R> diff = ric_rebuilt - ricci(ws.rb());
    rep.add("ricci-transfer-formula", "ricci-transfer-formula", diff.all_zero());
    rep.add("antilee-riemannian-curvature", "antilee-riemannian-curvature",
            riemannian_ja_curvature_identity(ws.rg(), fa, e.herm, e.lee));
  }

  rep.add("torsion-coclosed", "torsion-coclosed",
          codifferential(fa, e.herm.g, ws.lc(), c).is_zero_form());

  {
    KForm<R> dc = exterior_derivative(fa, c);
    if (m >= 6) {
      KForm<R> eta = exterior_derivative(fa, jtheta) - wedge(jtheta, e.lee.theta);
      R witness = eta.eval({e.lee.A, e.lee.JA});
      witness -= R(1);
      rep.add("torsion-not-closed", "torsion-not-closed",
              !dc.is_zero_form() && is_zero(witness));
    } else {
      rep.add("torsion-closed-dim4", "pluriclosed-dim4", dc.is_zero_form());
    }
  }

  {
    bool commuting = field_is_zero(fa.bracket(e.lee.A, e.lee.JA));
    auto killing = [&](const VectorField<R>& x) {
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) {
          R acc = metric_pairing(e.herm.g, fa.bracket(x, unit_field<R>(j, m)), unit_field<R>(k, m));
          acc += metric_pairing(e.herm.g, unit_field<R>(j, m), fa.bracket(x, unit_field<R>(k, m)));
          R lhs = fa.apply(x, R(e.herm.g(j, k)));
          acc -= lhs;
          if (!is_zero(acc)) return false;
        }
      return true;
    };
    auto holomorphic = [&](const VectorField<R>& x) {
      for (std::size_t j = 0; j < m; ++j) {
        VectorField<R> lhs = fa.bracket(x, apply_endo(e.herm.J, unit_field<R>(j, m)));
        VectorField<R> rhs = apply_endo(e.herm.J, fa.bracket(x, unit_field<R>(j, m)));
        if (!field_is_zero(field_sub(std::move(lhs), rhs))) return false;
      }
      return true;
    };
    rep.add("vaisman-killing-fields", "vaisman-standard-properties",
            commuting && killing(e.lee.A) && killing(e.lee.JA) && holomorphic(e.lee.A) &&
                holomorphic(e.lee.JA));
  }

  if constexpr (!std::is_same_v<R, SpherePoly>) {
    std::vector<Rational> traces = fa.adjoint_traces();
    bool unimodular = true;
    for (const auto& t : traces)
      if (!t.is_zero()) unimodular = false;
    if (unimodular) {
      bool central = true;
      for (std::size_t j = 0; j < m; ++j)
        if (!field_is_zero(fa.bracket(e.lee.JA, unit_field<Rational>(j, m)))) central = false;
      rep.add("antilee-central", "antilee-central", central);
    }
    if (e.family == Family::Heisenberg) {
      auto dbasis = distribution_basis(e.herm, e.lee);
      bool reduced = true;
      for (const auto& x : dbasis)
        for (const auto& y : dbasis) {
          VectorField<Rational> br = fa.bracket(x, y);
          Rational w = omega.eval({x, y});
          for (std::size_t k = 0; k < m; ++k) br[k] -= w * e.lee.JA[k];
          if (!field_is_zero(br)) reduced = false;
        }
      rep.add("kaehler-factor-bracket", "central-extension-bracket", reduced,
              "abelian complement");
    }
    if (e.family == Family::Heisenberg || e.family == Family::Abelian) {
      rep.add("bismut-curvature-parallel", "curvature-endomorphism-parallel",
              covd_curvature_vanishes(ws.bis(), fa, ws.rb()));
    }
  }
}

// ---------------------------------------------------------------------------
// holonomy

void holonomy_suite(Workspace<Rational>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  std::size_t m = e.algebra.dim();
  MatrixSubspace<Rational> span = ambrose_singer_closure(ws.bis(), ws.rb());

  std::optional<RatMat> phi;
  if (e.vaisman && !e.kahler) phi = phi_matrix(e.herm, normalized_unit_lee(e).lee);
  ClosureReport cls = classify(span, e.herm.g, e.herm.J, e.lee.A, e.lee.JA,
                               phi ? &*phi : nullptr);

  rep.add("holonomy-unitary", "holonomy-in-unitary-group",
          cls.skew_wrt_metric && cls.commutes_with_complex_structure);

  std::ostringstream dim_detail;
  dim_detail << "dim " << cls.dimension;
  switch (e.family) {
    case Family::Heisenberg: {
      bool ok = cls.dimension == 1 && cls.contains_phi;
      // trace(J phi) = -(2n - 2) != 0, so the span escapes the trace-free part
      RatMat jphi = e.herm.J * *phi;
      Rational tr(0);
      for (std::size_t t = 0; t < m; ++t) tr += jphi(t, t);
      rep.add("holonomy-dimension", "solv-holonomy-dimension", ok,
              dim_detail.str() + (cls.contains_phi ? ", contains phi" : ", phi missing"));
      rep.add("holonomy-not-special", "solv-holonomy-not-special",
              !cls.inside_special_unitary && tr == Rational(-(static_cast<long>(m) - 2)),
              "trace(J phi) = " + tr.to_string());
      break;
    }
    case Family::Inoue:
      rep.add("holonomy-dimension", "solv-holonomy-full", cls.dimension == 4, dim_detail.str());
      break;
    case Family::OT: {
      std::size_t s = (m - 2) / 2;
      rep.add("holonomy-dimension", "ot-holonomy-full", cls.dimension == (s + 1) * (s + 1),
              dim_detail.str());
      break;
    }
    case Family::Abelian:
      rep.add("holonomy-dimension", "flat-holonomy", cls.dimension == 0, dim_detail.str());
      break;
    default:
      rep.add("holonomy-dimension", "ambrose-singer-closure", true, dim_detail.str());
      break;
  }
}

void holonomy_suite(Workspace<SpherePoly>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  std::size_t m = e.algebra.dim();
  std::size_t n = m / 2;
  MatrixSubspace<Quadratic> span = curvature_span_at_point(ws.rb());
  std::vector<Quadratic> a_p = evaluate_field_uniform(e.lee.A, m);
  std::vector<Quadratic> ja_p = evaluate_field_uniform(e.lee.JA, m);
  ClosureReport cls = classify(span, e.herm.g, e.herm.J, a_p, ja_p);

  std::ostringstream dim_detail;
  dim_detail << "dim " << cls.dimension;
  if (e.family == Family::Hopf) {
    // flat at n = 2; the unitary upper bound is attained from n = 3 on
    std::size_t expected = n == 2 ? 0 : (n - 1) * (n - 1);
    rep.add("curvature-span-dimension", "hopf-holonomy-span", cls.dimension == expected,
            dim_detail.str() + ", expected " + std::to_string(expected));
    rep.add("curvature-span-in-unitary-block", "holonomy-upper-bound",
            cls.skew_wrt_metric && cls.commutes_with_complex_structure &&
                cls.annihilates_lee_vector && cls.annihilates_antilee_vector,
            "lower bound meets the unitary upper bound");
    return;
  }
  rep.add("curvature-span-dimension", "holonomy-lower-bound", true, dim_detail.str());
  rep.add("curvature-span-unitary", "holonomy-in-unitary-group",
          cls.skew_wrt_metric && cls.commutes_with_complex_structure);
  if (e.vaisman && !e.kahler)
    rep.add("curvature-span-annihilates-lee-pair", "holonomy-upper-bound",
            cls.annihilates_lee_vector && cls.annihilates_antilee_vector);
}

// ---------------------------------------------------------------------------
// gauduchon scan

template <typename R>
void gauduchon_suite(Workspace<R>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  GauduchonScan scan = gauduchon_theta_scan(ws.fam(), e.algebra, e.lee);

  std::string t_detail, er_detail;
  bool t_ok = false, er_ok = false;
  if (e.kahler) {
    t_ok = scan.t_set.kind == LineScan::Kind::All;
    er_ok = scan.er_set.kind == PlaneScan::Kind::All;
    t_detail = "expected: every t";
    er_detail = "expected: every (eps, rho)";
  } else if (e.vaisman) {
    t_ok = scan.t_set.kind == LineScan::Kind::Single && scan.t_set.value == Rational(-1);
    er_ok = scan.er_set.kind == PlaneScan::Kind::Line && scan.er_set.ca.is_zero() &&
            scan.er_set.cb.is_one() && scan.er_set.cc.is_zero();
    t_detail = "expected: t = -1 only";
    er_detail = "expected: the line rho = 0";
  } else {
    t_ok = scan.t_set.kind == LineScan::Kind::Empty;
    er_ok = scan.er_set.kind == PlaneScan::Kind::Empty;
    t_detail = "expected: empty";
    er_detail = "expected: empty";
  }
  rep.add("lee-parallel-parameter-line", "gauduchon-line-scan", t_ok, t_detail);
  rep.add("lee-parallel-parameter-plane", "metric-family-scan", er_ok, er_detail);

  rep.add("complex-structure-proportionality", "complex-structure-proportionality",
          eps_rho_j_proportionality(ws.fam(), e.algebra, e.herm.J));

  if (e.lck && !e.kahler)
    rep.add("lee-residual-identity", "gauduchon-line-residual",
            gauduchon_lee_residual_identity(ws.fam(), e.algebra, e.herm, e.lee));

  {
    bool ok = eps_rho_connection(ws.fam(), Rational(0), Rational(0)).same_table(ws.lc());
    ok = ok && gauduchon_connection(ws.fam(), Rational(-1)).same_table(ws.bis());
    ConnectionTable<R> chern = gauduchon_connection(ws.fam(), Rational(1));
    Mat<R> jl = Mat<R>::template lift<Rational>(e.herm.J);
    ok = ok && covd_endo_vanishes(chern, e.algebra, jl);
    ok = ok && metric_compatible(chern, e.herm.g);
    ok = ok && metric_compatible(eps_rho_connection(ws.fam(), Rational(1), Rational(2)), e.herm.g);
    // sampled proportionality: nabla J scales by (1 - 2 eps - 2 rho)
    for (auto [eps, rho] : {std::pair{Rational(1, 2), Rational(1, 2)},
                            std::pair{Rational(1), Rational(2)}}) {
      ConnectionTable<R> t = eps_rho_connection(ws.fam(), eps, rho);
      Rational factor = Rational(1) - (eps + rho) * Rational(2);
      for (std::size_t i = 0; i < e.algebra.dim(); ++i) {
        Mat<R> lhs = covd_endo(t, e.algebra, i, jl);
        Mat<R> rhs = covd_endo(ws.lc(), e.algebra, i, jl);
        rhs.scale(R(factor));
        if (!(lhs - rhs).all_zero()) ok = false;
      }
    }
    rep.add("parameter-family-consistency", "metric-connection-family", ok);
  }
}

// ---------------------------------------------------------------------------
// hopf symbolic checks

void hopf_symbolic_suite(Workspace<SpherePoly>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  const FrameAlgebra<SpherePoly>& fa = e.algebra;
  std::size_t m = fa.dim();
  std::size_t n = m / 2;

  {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j) {
        SpherePoly expect = (i == j ? SpherePoly(Rational(1)) : SpherePoly())
                            - SpherePoly::variable(i, m) * SpherePoly::variable(j, m);
        if (fa.derive(i, SpherePoly::variable(j, m)) != expect) ok = false;
      }
    rep.add("frame-coordinate-derivations", "hopf-frame-relations", ok);
  }

  KForm<SpherePoly> alpha = hopf_alpha_form(m);
  VectorField<SpherePoly> h = hopf_radial_field(m);
  {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      KForm<SpherePoly> eta(m, 1);
      std::size_t idx = i;
      eta.at_sorted(&idx) = SpherePoly(Rational(1));
      KForm<SpherePoly> lhs = exterior_derivative(fa, eta);
      KForm<SpherePoly> rhs = wedge(eta, alpha);
      if (!(lhs - rhs).is_zero_form()) ok = false;
    }
    ok = ok && exterior_derivative(fa, alpha).is_zero_form();
    rep.add("dual-frame-derivative", "hopf-dual-frame-derivative", ok);
  }

  {
    KForm<SpherePoly> omega = fundamental_form<SpherePoly>(e.herm);
    KForm<SpherePoly> lhs = exterior_derivative(fa, omega);
    KForm<SpherePoly> rhs = wedge(alpha, omega);
    rhs.scale(Rational(-2));
    rep.add("fundamental-form-derivative", "hopf-lck-structure", (lhs - rhs).is_zero_form());

    SpherePoly pairing = alpha.eval({h});
    pairing -= SpherePoly(Rational(1));
    bool radial_ok = is_zero(pairing);
    VectorField<SpherePoly> rel = e.lee.A;
    for (std::size_t k = 0; k < m; ++k) rel[k] += Rational(2) * h[k];
    radial_ok = radial_ok && field_is_zero(rel);
    rep.add("radial-field-normalization", "hopf-radial-field", radial_ok);
  }

  {
    bool lc_ok = e.expected_levi_civita && ws.lc().same_table(*e.expected_levi_civita);
    bool h_parallel = true;
    for (std::size_t i = 0; i < m; ++i)
      if (!field_is_zero(covd_vector(ws.lc(), fa, i, h))) h_parallel = false;
    rep.add("levi-civita-table", "hopf-levi-civita", lc_ok);
    rep.add("radial-field-parallel", "hopf-radial-parallel", h_parallel);
  }

  rep.add("bismut-table", "hopf-bismut-table",
          e.expected_bismut && ws.bis().same_table(*e.expected_bismut));

  {
    bool ok = e.expected_curvature && curvature_tables_equal(ws.rb(), *e.expected_curvature);
    rep.add("bismut-curvature-table", "hopf-curvature-tables", ok);
    if (n == 2) rep.add("bismut-flat-dim4", "hopf-flat-dim4", ws.rb().all_zero());
    bool even_pairs = true;
    for (std::size_t i = 1; i <= n && even_pairs; ++i)
      for (std::size_t j = i + 1; j <= n && even_pairs; ++j) {
        Mat<SpherePoly> diff =
            ws.rb().at_pair(2 * i - 1, 2 * j - 1) - ws.rb().at_pair(2 * i - 2, 2 * j - 2);
        if (!diff.all_zero()) even_pairs = false;
      }
    rep.add("curvature-even-pair-identity", "curvature-pair-symmetries", even_pairs);
  }

  {
    Mat<SpherePoly> ricb = ricci(ws.rb());
    bool ok = e.expected_bismut_ricci && (ricb - *e.expected_bismut_ricci).all_zero();
    rep.add("bismut-ricci-closed-form", "hopf-ricci", ok);
  }

  if (n >= 3) {
    HopfIndependenceReport ind = hopf_independence_systems(n, &ws.rb());
    rep.add("dependence-system-inverse", "hopf-dependence-systems",
            ind.mixed_inverse_ok && ind.odd_inverse_ok && ind.mixed_symmetric &&
                ind.mixed_row_sums_ok);
    std::size_t c2 = n * (n - 1) / 2, c2m = (n - 1) * (n - 2) / 2;
    std::ostringstream os;
    os << "ranks " << ind.rank_mixed << "/" << ind.rank_odd << "/" << ind.rank_union;
    rep.add("curvature-family-ranks", "hopf-family-ranks",
            ind.rank_mixed == c2 && ind.rank_odd == c2m && ind.rank_union == (n - 1) * (n - 1),
            os.str());
  }
}

// ---------------------------------------------------------------------------
// ot operators

void ot_operators_suite(Workspace<Rational>& ws, SuiteReport& rep) {
  const auto& e = ws.e;
  std::size_t m = e.algebra.dim();
  std::size_t s = (m - 2) / 2;
  std::size_t c1 = 2 * s, c2 = 2 * s + 1;
  auto ai = [](std::size_t i) { return i - 1; };
  auto bi = [s](std::size_t i) { return s + i - 1; };
  const CurvatureTable<Rational>& rb = ws.rb();
  const RatMat& J = e.herm.J;

  // defining table of the S_i operators
  auto expected_s = [&](std::size_t i) {
    RatMat mat(m, m);
    for (std::size_t j = 1; j <= s; ++j) {
      if (j == i) {
        VectorField<Rational> col = zero_field<Rational>(m);
        for (std::size_t k = 1; k <= s; ++k)
          col[bi(k)] = k == j ? Rational(-(static_cast<long>(s))) : Rational(1);
        for (std::size_t t = 0; t < m; ++t) mat(t, ai(j)) = col[t];
        VectorField<Rational> jcol = apply_endo(J, col);
        for (std::size_t t = 0; t < m; ++t) mat(t, bi(j)) = jcol[t];
      }
    }
    mat(c2, c1) = Rational(-1, 2);
    mat(c1, c2) = Rational(1, 2);  // J-image of the C_1 column
    return mat;
  };

  std::vector<RatMat> s_ops;
  bool s_ok = true;
  for (std::size_t i = 1; i <= s; ++i) {
    RatMat acc = rb.at_pair(ai(i), bi(i));
    acc.scale(Rational(-(static_cast<long>(s))));
    for (std::size_t k = 1; k <= s; ++k)
      if (k != i) acc += rb.at_pair(ai(k), bi(k));
    if (!(acc - expected_s(i)).all_zero()) s_ok = false;
    s_ops.push_back(std::move(acc));
  }
  rep.add("defining-operators", "ot-defining-operators", s_ok);

  {
    bool rel_ok = true;
    Rational inv(-1, static_cast<long>(s) + 1);
    for (std::size_t i = 1; i <= s; ++i) {
      RatMat acc = s_ops[i - 1];
      acc += s_ops[i - 1];
      for (std::size_t k = 1; k <= s; ++k)
        if (k != i) acc += s_ops[k - 1];
      acc.scale(inv);
      if (!(acc - rb.at_pair(ai(i), bi(i))).all_zero()) rel_ok = false;
    }
    MatrixSubspace<Rational> span_s(m), span_r(m);
    for (std::size_t i = 1; i <= s; ++i) {
      span_s.insert(s_ops[i - 1]);
      span_r.insert(rb.at_pair(ai(i), bi(i)));
    }
    rel_ok = rel_ok && span_s.same_span(span_r) && span_s.dim() == s;
    rep.add("operator-span-identities", "ot-defining-operators", rel_ok);
  }

  if (s >= 2) {
    bool t_ok = true;
    for (std::size_t i = 1; i <= s && t_ok; ++i)
      for (std::size_t j = 1; j <= s && t_ok; ++j) {
        if (i == j) continue;
        RatMat rbb = i < j ? rb.at_pair(bi(i), bi(j)) : -rb.at_pair(bi(j), bi(i));
        RatMat t = s_ops[i - 1] * rbb - rbb * s_ops[i - 1];
        RatMat expect(m, m);
        Rational inv(1, static_cast<long>(s) + 1);
        for (std::size_t l = 1; l <= s; ++l) {
          VectorField<Rational> col = zero_field<Rational>(m);
          if (l == i) {
            for (std::size_t k = 1; k <= s; ++k)
              col[bi(k)] = (k == i || k == j) ? Rational(-(static_cast<long>(s))) : Rational(1);
          } else if (l == j) {
            for (std::size_t k = 1; k <= s; ++k)
              col[bi(k)] = k == i ? Rational(-2 * static_cast<long>(s)) : Rational(2);
          } else {
            for (std::size_t k = 1; k <= s; ++k)
              col[bi(k)] = k == i ? Rational(-(static_cast<long>(s))) : Rational(1);
          }
          for (auto& v : col) v *= inv;
          for (std::size_t tt = 0; tt < m; ++tt) expect(tt, ai(l)) = col[tt];
          VectorField<Rational> jcol = apply_endo(J, col);
          for (std::size_t tt = 0; tt < m; ++tt) expect(tt, bi(l)) = jcol[tt];
        }
        // T_ij kills C_1 and C_2
        if (!(t - expect).all_zero()) t_ok = false;
      }
    rep.add("commutator-operators", "ot-commutator-operators", t_ok);
  } else {
    rep.skip("commutator-operators", "ot-commutator-operators", "needs s >= 2");
  }

  {
    bool indep_ok = true;
    RatMat ac1 = rb.at_pair(ai(1), c1);
    RatMat ac2 = rb.at_pair(ai(1), c2);
    for (std::size_t i = 2; i <= s; ++i) {
      if (!(rb.at_pair(ai(i), c1) - ac1).all_zero()) indep_ok = false;
      if (!(rb.at_pair(ai(i), c2) - ac2).all_zero()) indep_ok = false;
    }
    if (s != 2) {
      RatMat sum1(m, m), sum2(m, m);
      for (std::size_t i = 1; i <= s; ++i) {
        sum2 += rb.at_pair(bi(i), c2);
        sum1 += rb.at_pair(bi(i), c1);
      }
      Rational f(1, static_cast<long>(s) - 2);
      sum2.scale(f);
      sum1.scale(-f);
      if (!(sum2 - ac1).all_zero()) indep_ok = false;
      if (!(sum1 - ac2).all_zero()) indep_ok = false;
    }
    rep.add("mixed-curvature-relations", "ot-curvature-relations", indep_ok);
  }

  {
    MatrixSubspace<Rational> fam_u(m), fam_v(m), both(m);
    for (std::size_t i = 1; i <= s; ++i) {
      fam_u.insert(rb.at_pair(bi(i), c1));
      fam_u.insert(rb.at_pair(bi(i), c2));
      both.insert(rb.at_pair(bi(i), c1));
      both.insert(rb.at_pair(bi(i), c2));
    }
    for (std::size_t i = 1; i <= s; ++i)
      for (std::size_t j = i + 1; j <= s; ++j) {
        fam_u.insert(rb.at_pair(bi(i), bi(j)));
        both.insert(rb.at_pair(bi(i), bi(j)));
      }
    for (std::size_t i = 1; i <= s; ++i) {
      fam_v.insert(s_ops[i - 1]);
      both.insert(s_ops[i - 1]);
    }
    fam_v.insert(rb.at_pair(c1, c2));
    both.insert(rb.at_pair(c1, c2));
    for (std::size_t i = 1; i <= s; ++i)
      for (std::size_t j = i + 1; j <= s; ++j) {
        RatMat rbb = rb.at_pair(bi(i), bi(j));
        RatMat t = s_ops[i - 1] * rbb - rbb * s_ops[i - 1];
        fam_v.insert(t);
        both.insert(t);
      }
    std::ostringstream os;
    os << "ranks " << fam_u.dim() << "/" << fam_v.dim() << "/" << both.dim();
    if (s >= 3) {
      bool ok = fam_u.dim() == s * (s + 3) / 2 && fam_v.dim() == (s * s + s + 2) / 2 &&
                both.dim() == (s + 1) * (s + 1);
      rep.add("operator-family-ranks", "ot-family-ranks", ok, os.str());
    } else {
      rep.skip("operator-family-ranks", "ot-family-ranks", os.str() + " (asserted for s >= 3)");
    }
  }
}

// ---------------------------------------------------------------------------
// dispatch

template <typename R>
void dispatch_suite(Workspace<R>& ws, const std::string& suite, SuiteReport& rep) {
  if (suite == "structure") {
    structure_suite(ws, rep);
  } else if (suite == "lck") {
    lck_suite(ws, rep);
  } else if (suite == "vaisman-identities") {
    vaisman_suite(ws, rep);
  } else if (suite == "bismut-tables") {
    bismut_tables_suite(ws, rep);
  } else if (suite == "curvature-tables") {
    curvature_tables_suite(ws, rep);
  } else if (suite == "ricci") {
    ricci_suite(ws, rep);
  } else if (suite == "holonomy") {
    holonomy_suite(ws, rep);
  } else if (suite == "gauduchon-scan") {
    gauduchon_suite(ws, rep);
  } else if (suite == "hopf-symbolic") {
    if constexpr (std::is_same_v<R, SpherePoly>) {
      if (ws.e.family == Family::Hopf) {
        hopf_symbolic_suite(ws, rep);
        return;
      }
    }
    rep.skip("hopf-symbolic", "hopf-frame-relations", "not a sphere-frame entry");
  } else if (suite == "ot-operators") {
    if constexpr (std::is_same_v<R, Rational>) {
      if (ws.e.family == Family::OT) {
        ot_operators_suite(ws, rep);
        return;
      }
    }
    rep.skip("ot-operators", "ot-defining-operators", "only defined for the ot family");
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
}

template <typename R>
std::vector<SuiteReport> run_suites_impl(const CatalogEntry<R>& entry, const std::string& suite) {
  Workspace<R> ws(entry);
  std::vector<std::string> selected;
  if (suite == "all")
    selected = applicable_suites(entry.family, std::is_same_v<R, SpherePoly>, entry.vaisman);
  else
    selected.push_back(suite);
  std::vector<SuiteReport> out;
  for (const auto& name : selected) {
    SuiteReport rep;
    rep.example = entry.name;
    rep.suite = name;
    dispatch_suite(ws, name, rep);
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "structure",      "lck",            "vaisman-identities", "bismut-tables",
      "curvature-tables", "ricci",        "holonomy",           "gauduchon-scan",
      "hopf-symbolic",  "ot-operators",   "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> applicable_suites(Family family, bool sphere_ring, bool vaisman) {
  std::vector<std::string> out = {"structure", "lck"};
  if (vaisman) out.push_back("vaisman-identities");
  out.push_back("bismut-tables");
  if (family != Family::Custom) {
    out.push_back("curvature-tables");
    out.push_back("ricci");
  }
  out.push_back("holonomy");
  out.push_back("gauduchon-scan");
  if (family == Family::Hopf && sphere_ring) out.push_back("hopf-symbolic");
  if (family == Family::OT) out.push_back("ot-operators");
  return out;
}

std::vector<SuiteReport> run_suites(const CatalogEntry<Rational>& entry, const std::string& suite) {
  return run_suites_impl(entry, suite);
}

std::vector<SuiteReport> run_suites(const CatalogEntry<SpherePoly>& entry,
                                    const std::string& suite) {
  return run_suites_impl(entry, suite);
}

std::vector<SuiteReport> run_custom(LoadedEntry entry, const std::string& suite) {
  return std::visit(
      [&suite](auto& e) -> std::vector<SuiteReport> {
        using Ring = typename std::decay_t<decltype(e.lee.norm_sq)>;
        std::vector<SuiteReport> out;
        Workspace<Ring> gate_ws(e);
        SuiteReport gate;
        gate.example = e.name;
        gate.suite = "structure";
        structure_suite(gate_ws, gate);
        out.push_back(gate);
        if (!gate.pass()) return out;

        // resolve Lee data and flags before the remaining suites
        bool theta_declared = !e.lee.theta.is_zero_form();
        if constexpr (std::is_same_v<Ring, Rational>) {
          if (!theta_declared) {
            auto solved = solve_lee_form(e.algebra, e.herm);
            if (solved.status == LeeStatus::Lck || solved.status == LeeStatus::Kahler) {
              e.lck = true;
              e.kahler = solved.status == LeeStatus::Kahler;
              if (solved.lee) e.lee = *solved.lee;
            }
          } else {
            e.lck = verify_lck(e.algebra, e.herm, e.lee.theta);
          }
        } else {
          if (theta_declared) e.lck = verify_lck(e.algebra, e.herm, e.lee.theta);
        }
        if (e.lck && !e.kahler) {
          Workspace<Ring> ws(e);
          e.vaisman = is_vaisman(e.algebra, ws.lc(), ws.bis(), e.lee);
        } else if (e.kahler) {
          e.vaisman = true;
        }

        if (suite == "structure") return out;
        auto rest = run_suites(e, suite);
        for (auto& r : rest) {
          if (r.suite == "structure") continue;  // already ran as the gate
          out.push_back(std::move(r));
        }
        return out;
      },
      entry);
}

SuiteReport merge_reports(const std::string& example, const std::string& suite,
                          const std::vector<SuiteReport>& reports) {
  if (reports.size() == 1 && suite != "all") return reports.front();
  SuiteReport merged;
  merged.example = example;
  merged.suite = suite;
  for (const auto& rep : reports)
    for (const auto& c : rep.checks) {
      CheckRecord rc = c;
      rc.name = rep.suite + "/" + c.name;
      merged.checks.push_back(std::move(rc));
    }
  return merged;
}

}  // namespace lck
