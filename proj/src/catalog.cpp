#include "lck/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace lck {

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << ",";
    os << v[t];
  }
  return os.str();
}

RatMat standard_pairing_j(std::size_t m) {
  RatMat j(m, m);
  for (std::size_t k = 0; k + 1 < m; k += 2) {
    j(k + 1, k) = Rational(1);
    j(k, k + 1) = Rational(-1);
  }
  return j;
}

KForm<Rational> oneform_from(const std::vector<Rational>& coeffs, std::size_t m) {
  KForm<Rational> theta(m, 1);
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t idx = t;
    theta.at_sorted(&idx) = coeffs[t];
  }
  return theta;
}

}  // namespace

CatalogEntry<Rational> make_heisenberg(std::size_t n, const std::vector<Rational>& a) {
  if (n < 2) throw std::invalid_argument("make_heisenberg: n must be >= 2");
  if (a.size() != n - 1) throw std::invalid_argument("make_heisenberg: need n-1 coefficients");
  std::size_t m = 2 * n;
  CatalogEntry<Rational> e;
  e.name = "heisenberg(n=" + std::to_string(n) + ",a=[" + join_rationals(a) + "])";
  e.family = Family::Heisenberg;
  e.algebra = FrameAlgebra<Rational>(m);
  // frame: A = 0, B = 1, e_{2i-1} = 2i, e_{2i} = 2i+1 for i = 1..n-1
  for (std::size_t i = 1; i < n; ++i) {
    e.algebra.set_bracket(0, 2 * i, 2 * i + 1, a[i - 1]);
    e.algebra.set_bracket(0, 2 * i + 1, 2 * i, -a[i - 1]);
    e.algebra.set_bracket(2 * i, 2 * i + 1, 1, Rational(1));
  }
  e.herm.g = RatMat::identity(m);
  RatMat j(m, m);
  j(1, 0) = Rational(1);
  j(0, 1) = Rational(-1);
  for (std::size_t i = 1; i < n; ++i) {
    j(2 * i + 1, 2 * i) = Rational(1);
    j(2 * i, 2 * i + 1) = Rational(-1);
  }
  e.herm.J = j;

  std::vector<Rational> theta(m, Rational(0));
  theta[0] = Rational(1);
  e.lee = lee_data_from_theta(e.herm, oneform_from(theta, m));
  e.lck = true;
  e.vaisman = true;

  // reference Bismut table: nabla_A x = [A, x], nabla_{JA} x = -phi(x),
  // everything tangent to the flat factor is parallel
  RatMat phi = phi_matrix(e.herm, e.lee);
  ConnectionTable<Rational> bis("bismut", m);
  for (std::size_t jj = 0; jj < m; ++jj) {
    bis.gamma[0][jj] = e.algebra.bracket_of(0, jj);
    for (std::size_t k = 0; k < m; ++k) bis.gamma[1][jj][k] = -phi(k, jj);
  }
  e.expected_bismut = std::move(bis);

  // reference curvature: R(e_i, e_j) = <phi e_i, e_j> phi
  CurvatureTable<Rational> curv(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = i + 1; jj < m; ++jj) {
      Rational c = phi(jj, i);  // <phi e_i, e_j> with the orthonormal metric
      Mat<Rational> mat(m, m);
      if (!c.is_zero()) {
        mat = phi;
        mat.scale(c);
      }
      curv.at_pair(i, jj) = std::move(mat);
    }
  e.expected_curvature = std::move(curv);

  // closed-form Ricci tensors: theta = e^0, J theta = e^1
  Mat<Rational> ricb(m, m), ricg(m, m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Rational del = u == v ? Rational(1) : Rational(0);
      Rational tu = u == 0 ? Rational(1) : Rational(0);
      Rational tv = v == 0 ? Rational(1) : Rational(0);
      Rational ju = u == 1 ? Rational(1) : Rational(0);
      Rational jv = v == 1 ? Rational(1) : Rational(0);
      ricb(u, v) = -del + tu * tv + ju * jv;
      ricg(u, v) = del * Rational(-1, 2) + tu * tv * Rational(1, 2) +
                   ju * jv * Rational(static_cast<long>(n)) * Rational(1, 2);
    }
  e.expected_bismut_ricci = std::move(ricb);
  e.expected_riemannian_ricci = std::move(ricg);
  return e;
}

CatalogEntry<Rational> make_inoue(const Rational& mu, const Rational& y) {
  if (mu.is_zero()) throw std::invalid_argument("make_inoue: mu = 0 gives d omega = 0, not LCK");
  std::size_t m = 4;
  CatalogEntry<Rational> e;
  e.name = "inoue(mu=" + mu.to_string() + ",y=" + y.to_string() + ")";
  e.family = Family::Inoue;
  e.algebra = FrameAlgebra<Rational>(m);
  Rational half_mu = mu * Rational(1, 2);
  e.algebra.set_bracket(0, 1, 1, mu);
  e.algebra.set_bracket(0, 2, 2, -half_mu);
  e.algebra.set_bracket(0, 2, 3, y);
  e.algebra.set_bracket(0, 3, 2, -y);
  e.algebra.set_bracket(0, 3, 3, -half_mu);
  e.herm.g = RatMat::identity(m);
  e.herm.J = standard_pairing_j(m);

  std::vector<Rational> theta(m, Rational(0));
  theta[0] = mu;
  e.lee = lee_data_from_theta(e.herm, oneform_from(theta, m));
  e.lck = true;
  e.vaisman = false;

  Rational mu2 = mu * mu;
  Rational q2 = mu2 * Rational(1, 2);
  Rational q4 = mu2 * Rational(1, 4);

  ConnectionTable<Rational> bis("bismut", m);
  bis.gamma[0][2][3] = y;
  bis.gamma[0][3][2] = -y;
  bis.gamma[1][0][1] = -mu;
  bis.gamma[1][1][0] = mu;
  bis.gamma[1][2][3] = -half_mu;
  bis.gamma[1][3][2] = half_mu;
  bis.gamma[2][0][2] = half_mu;
  bis.gamma[2][1][3] = half_mu;
  bis.gamma[2][2][0] = -half_mu;
  bis.gamma[2][3][1] = -half_mu;
  bis.gamma[3][0][3] = half_mu;
  bis.gamma[3][1][2] = -half_mu;
  bis.gamma[3][2][1] = half_mu;
  bis.gamma[3][3][0] = -half_mu;
  e.expected_bismut = std::move(bis);

  CurvatureTable<Rational> curv(m);
  {
    Mat<Rational> r01(m, m);
    r01(1, 0) = mu2;
    r01(0, 1) = -mu2;
    r01(3, 2) = q2;
    r01(2, 3) = -q2;
    Mat<Rational> r02(m, m);
    r02(2, 0) = q4;
    r02(3, 1) = q4;
    r02(0, 2) = -q4;
    r02(1, 3) = -q4;
    Mat<Rational> r03(m, m);
    r03(3, 0) = q4;
    r03(2, 1) = -q4;
    r03(1, 2) = q4;
    r03(0, 3) = -q4;
    Mat<Rational> r23(m, m);
    r23(1, 0) = -q2;
    r23(0, 1) = q2;
    r23(3, 2) = q2;
    r23(2, 3) = -q2;
    curv.at_pair(0, 1) = r01;
    curv.at_pair(0, 2) = r02;
    curv.at_pair(0, 3) = r03;
    curv.at_pair(1, 2) = r03;   // R(e2, e3) = R(e1, e4)
    curv.at_pair(1, 3) = -r02;  // R(e2, e4) = -R(e1, e3)
    curv.at_pair(2, 3) = r23;
  }
  e.expected_curvature = std::move(curv);
  return e;
}

CatalogEntry<Rational> make_ot(std::size_t s, const std::vector<Rational>& r) {
  if (s < 1) throw std::invalid_argument("make_ot: s must be >= 1");
  if (r.size() != s) throw std::invalid_argument("make_ot: need s coefficients");
  std::size_t m = 2 * s + 2;
  std::size_t c1 = 2 * s, c2 = 2 * s + 1;
  auto ai = [](std::size_t i) { return i - 1; };       // A_i, i = 1..s
  auto bi = [s](std::size_t i) { return s + i - 1; };  // B_i

  CatalogEntry<Rational> e;
  e.name = "ot(s=" + std::to_string(s) + ",r=[" + join_rationals(r) + "])";
  e.family = Family::OT;
  e.algebra = FrameAlgebra<Rational>(m);
  Rational half(1, 2);
  for (std::size_t i = 1; i <= s; ++i) {
    e.algebra.set_bracket(ai(i), bi(i), bi(i), Rational(1));
    e.algebra.set_bracket(ai(i), c1, c1, -half);
    e.algebra.set_bracket(ai(i), c1, c2, r[i - 1]);
    e.algebra.set_bracket(ai(i), c2, c1, -r[i - 1]);
    e.algebra.set_bracket(ai(i), c2, c2, -half);
  }
  RatMat g(m, m);
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t jj = 1; jj <= s; ++jj) {
      Rational v = i == jj ? Rational(2) : Rational(1);
      g(ai(i), ai(jj)) = v;
      g(bi(i), bi(jj)) = v;
    }
  g(c1, c1) = Rational(1);
  g(c2, c2) = Rational(1);
  e.herm.g = g;
  RatMat j(m, m);
  for (std::size_t i = 1; i <= s; ++i) {
    j(bi(i), ai(i)) = Rational(1);
    j(ai(i), bi(i)) = Rational(-1);
  }
  j(c2, c1) = Rational(1);
  j(c1, c2) = Rational(-1);
  e.herm.J = j;

  std::vector<Rational> theta(m, Rational(0));
  for (std::size_t i = 1; i <= s; ++i) theta[ai(i)] = Rational(1);
  e.lee = lee_data_from_theta(e.herm, oneform_from(theta, m));
  e.lck = true;
  e.vaisman = false;

  // A = (A_1 + ... + A_s)/(s+1), JA = (B_1 + ... + B_s)/(s+1)
  Rational inv_s1(1, static_cast<long>(s) + 1);
  VectorField<Rational> avec = zero_field<Rational>(m), javec = zero_field<Rational>(m);
  for (std::size_t i = 1; i <= s; ++i) {
    avec[ai(i)] = inv_s1;
    javec[bi(i)] = inv_s1;
  }

  auto unit = [m](std::size_t k) { return unit_field<Rational>(k, m); };
  auto add = [](VectorField<Rational> x, const VectorField<Rational>& yv) {
    for (std::size_t t = 0; t < x.size(); ++t) x[t] += yv[t];
    return x;
  };
  auto scale = [](VectorField<Rational> x, const Rational& c) {
    for (auto& t : x) t *= c;
    return x;
  };

  // Levi-Civita reference table
  ConnectionTable<Rational> lc("levi-civita", m);
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t jj = 1; jj <= s; ++jj) {
      Rational dij = i == jj ? Rational(1) : Rational(0);
      // nabla_{A_i} B_j = -B_i/2 + (1+d)/2 JA
      lc.gamma[ai(i)][bi(jj)] =
          add(scale(unit(bi(i)), -half), scale(javec, (Rational(1) + dij) * half));
      // nabla_{B_i} A_j = -(1/2+d) B_j + (1+d)/2 JA
      lc.gamma[bi(i)][ai(jj)] =
          add(scale(unit(bi(jj)), -(half + dij)), scale(javec, (Rational(1) + dij) * half));
      // nabla_{B_i} B_j = (1+d) [ (A_i+A_j)/2 - A ]
      VectorField<Rational> v = add(scale(unit(ai(i)), half), scale(unit(ai(jj)), half));
      v = add(std::move(v), scale(avec, Rational(-1)));
      lc.gamma[bi(i)][bi(jj)] = scale(std::move(v), Rational(1) + dij);
    }
  for (std::size_t i = 1; i <= s; ++i) {
    lc.gamma[ai(i)][c1] = scale(unit(c2), r[i - 1]);
    lc.gamma[ai(i)][c2] = scale(unit(c1), -r[i - 1]);
    lc.gamma[c1][ai(i)] = scale(unit(c1), half);
    lc.gamma[c2][ai(i)] = scale(unit(c2), half);
  }
  lc.gamma[c1][c1] = scale(avec, -half);
  lc.gamma[c2][c2] = scale(avec, -half);
  e.expected_levi_civita = std::move(lc);

  // Bismut reference table; within each direction the J-image columns follow
  // from nabla J = 0
  ConnectionTable<Rational> bis("bismut", m);
  for (std::size_t i = 1; i <= s; ++i) {
    bis.gamma[ai(i)][c1] = scale(unit(c2), r[i - 1]);
    bis.gamma[ai(i)][c2] = scale(unit(c1), -r[i - 1]);
    for (std::size_t jj = 1; jj <= s; ++jj) {
      Rational f = Rational(1) + (i == jj ? Rational(1) : Rational(0));
      // nabla_{B_i} A_j = (1+d)(-B_j + JA), nabla_{B_i} B_j = (1+d)(A_j - A)
      bis.gamma[bi(i)][ai(jj)] = scale(add(scale(unit(bi(jj)), Rational(-1)), javec), f);
      bis.gamma[bi(i)][bi(jj)] = scale(add(unit(ai(jj)), scale(avec, Rational(-1))), f);
    }
    bis.gamma[bi(i)][c1] = scale(unit(c2), -half);
    bis.gamma[bi(i)][c2] = scale(unit(c1), half);
  }
  for (std::size_t i = 1; i <= s; ++i) {
    bis.gamma[c1][ai(i)] = scale(unit(c1), half);
    bis.gamma[c1][bi(i)] = scale(unit(c2), half);
    bis.gamma[c2][ai(i)] = scale(unit(c2), half);
    bis.gamma[c2][bi(i)] = scale(unit(c1), -half);
  }
  bis.gamma[c1][c1] = scale(avec, -half);
  bis.gamma[c1][c2] = scale(javec, -half);
  bis.gamma[c2][c1] = scale(javec, half);
  bis.gamma[c2][c2] = scale(avec, -half);
  e.expected_bismut = std::move(bis);

  // Bismut curvature reference table
  CurvatureTable<Rational> curv(m);
  Rational quarter(1, 4);
  auto set_col = [m](Mat<Rational>& mat, std::size_t col, const VectorField<Rational>& v) {
    for (std::size_t t = 0; t < m; ++t) mat(t, col) = v[t];
  };
  for (std::size_t i = 1; i <= s; ++i) {
    // R(A_i, B_i)
    Mat<Rational> mat(m, m);
    for (std::size_t jj = 1; jj <= s; ++jj) {
      Rational f = Rational(1) + (i == jj ? Rational(1) : Rational(0));
      set_col(mat, ai(jj), scale(add(unit(bi(jj)), scale(javec, Rational(-1))), f));
      set_col(mat, bi(jj), scale(add(scale(unit(ai(jj)), Rational(-1)), avec), f));
    }
    set_col(mat, c1, scale(unit(c2), half));
    set_col(mat, c2, scale(unit(c1), -half));
    curv.at_pair(ai(i), bi(i)) = std::move(mat);
  }
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t jj = i + 1; jj <= s; ++jj) {
      // R(B_i, B_j)
      Mat<Rational> mat(m, m);
      for (std::size_t k = 1; k <= s; ++k) {
        Rational fj = Rational(1) + (jj == k ? Rational(1) : Rational(0));
        Rational fi = Rational(1) + (i == k ? Rational(1) : Rational(0));
        VectorField<Rational> va =
            add(scale(unit(ai(i)), fj * inv_s1), scale(unit(ai(jj)), -(fi * inv_s1)));
        VectorField<Rational> vb =
            add(scale(unit(bi(i)), fj * inv_s1), scale(unit(bi(jj)), -(fi * inv_s1)));
        set_col(mat, ai(k), va);
        set_col(mat, bi(k), vb);
      }
      curv.at_pair(bi(i), bi(jj)) = std::move(mat);
    }
  for (std::size_t i = 1; i <= s; ++i) {
    // R(A_i, C_1) and R(A_i, C_2)
    Mat<Rational> mc1(m, m), mc2(m, m);
    for (std::size_t jj = 1; jj <= s; ++jj) {
      set_col(mc1, ai(jj), scale(unit(c1), quarter));
      set_col(mc1, bi(jj), scale(unit(c2), quarter));
      set_col(mc2, ai(jj), scale(unit(c2), quarter));
      set_col(mc2, bi(jj), scale(unit(c1), -quarter));
    }
    set_col(mc1, c1, scale(avec, -quarter));
    set_col(mc1, c2, scale(javec, -quarter));
    set_col(mc2, c1, scale(javec, quarter));
    set_col(mc2, c2, scale(avec, -quarter));
    curv.at_pair(ai(i), c1) = std::move(mc1);
    curv.at_pair(ai(i), c2) = std::move(mc2);
  }
  Rational inv_4s1 = Rational(1, 4) * inv_s1;
  Rational inv_2s1 = Rational(1, 2) * inv_s1;
  for (std::size_t i = 1; i <= s; ++i) {
    // R(B_i, C_1) and R(B_i, C_2)
    Mat<Rational> mc1(m, m), mc2(m, m);
    for (std::size_t jj = 1; jj <= s; ++jj) {
      Rational dij = i == jj ? Rational(1) : Rational(0);
      Rational coeff1 = (Rational(1) - Rational(static_cast<long>(s)) + dij * Rational(2)) * inv_4s1;
      Rational coeff2 = (Rational(static_cast<long>(s)) - Rational(1) - dij * Rational(2)) * inv_4s1;
      set_col(mc1, ai(jj), scale(unit(c2), coeff1));
      set_col(mc1, bi(jj), scale(unit(c1), -coeff1));
      set_col(mc2, ai(jj), scale(unit(c1), coeff2));
      set_col(mc2, bi(jj), scale(unit(c2), coeff2));
    }
    set_col(mc1, c1, add(scale(unit(bi(i)), inv_2s1), scale(javec, -quarter)));
    set_col(mc1, c2, add(scale(unit(ai(i)), -inv_2s1), scale(avec, quarter)));
    set_col(mc2, c1, add(scale(unit(ai(i)), inv_2s1), scale(avec, -quarter)));
    set_col(mc2, c2, add(scale(unit(bi(i)), inv_2s1), scale(javec, -quarter)));
    curv.at_pair(bi(i), c1) = std::move(mc1);
    curv.at_pair(bi(i), c2) = std::move(mc2);
  }
  {
    // R(C_1, C_2)
    Mat<Rational> mat(m, m);
    Rational cs = Rational(static_cast<long>(s)) * inv_2s1;
    for (std::size_t i = 1; i <= s; ++i) {
      set_col(mat, ai(i), scale(javec, -half));
      set_col(mat, bi(i), scale(avec, half));
    }
    set_col(mat, c1, scale(unit(c2), cs));
    set_col(mat, c2, scale(unit(c1), -cs));
    curv.at_pair(c1, c2) = std::move(mat);
  }
  e.expected_curvature = std::move(curv);
  return e;
}

VectorField<SpherePoly> hopf_radial_field(std::size_t m) {
  VectorField<SpherePoly> h(m);
  for (std::size_t k = 0; k < m; ++k) h[k] = SpherePoly::variable(k, m);
  return h;
}

KForm<SpherePoly> hopf_alpha_form(std::size_t m) {
  KForm<SpherePoly> alpha(m, 1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t idx = k;
    alpha.at_sorted(&idx) = SpherePoly::variable(k, m);
  }
  return alpha;
}

namespace {

// Columns of the three Hopf curvature endomorphism families. All indices are
// the 1-based block labels; the produced matrices are 0-based.
struct HopfData {
  std::size_t n, m;
  std::vector<SpherePoly> x;  // x[k] = variable k (0-based)
  RatMat j;

  explicit HopfData(std::size_t n_) : n(n_), m(2 * n_), x(m), j(standard_pairing_j(2 * n_)) {
    for (std::size_t k = 0; k < m; ++k) x[k] = SpherePoly::variable(k, m);
  }

  std::size_t odd(std::size_t i) const { return 2 * i - 2; }   // U_{2i-1}
  std::size_t even(std::size_t i) const { return 2 * i - 1; }  // U_{2i}

  SpherePoly one_minus_blocks(std::size_t i, std::size_t jj) const {
    SpherePoly q(Rational(1));
    q -= x[odd(i)] * x[odd(i)];
    q -= x[even(i)] * x[even(i)];
    q -= x[odd(jj)] * x[odd(jj)];
    q -= x[even(jj)] * x[even(jj)];
    return q;
  }

  void fill_even_columns(Mat<SpherePoly>& mat) const {
    // column of U_{2r} is the J-image of the column of U_{2r-1}
    for (std::size_t r = 1; r <= n; ++r) {
      VectorField<SpherePoly> col(m);
      for (std::size_t t = 0; t < m; ++t) col[t] = mat(t, odd(r));
      VectorField<SpherePoly> jcol = apply_endo(j, col);
      for (std::size_t t = 0; t < m; ++t) mat(t, even(r)) = jcol[t];
    }
  }

  // R(U_{2i-1}, U_{2i})
  Mat<SpherePoly> paired(std::size_t i) const {
    Mat<SpherePoly> mat(m, m);
    for (std::size_t jj = 1; jj <= n; ++jj) {
      if (jj == i) continue;
      SpherePoly q = one_minus_blocks(i, jj);
      mat(even(jj), odd(jj)) = Rational(2) * q;
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i || k == jj) continue;
        mat(odd(k), odd(jj)) =
            Rational(2) * (x[odd(jj)] * x[even(k)] - x[even(jj)] * x[odd(k)]);
        mat(even(k), odd(jj)) =
            Rational(-2) * (x[odd(jj)] * x[odd(k)] + x[even(jj)] * x[even(k)]);
      }
    }
    fill_even_columns(mat);
    return mat;
  }

  // R(U_{2i-1}, U_{2j}) for i != j
  Mat<SpherePoly> mixed(std::size_t i, std::size_t jj) const {
    Mat<SpherePoly> mat(m, m);
    SpherePoly q = one_minus_blocks(i, jj);
    mat(even(jj), odd(i)) = -q;
    mat(even(i), odd(jj)) = -q;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k == i || k == jj) continue;
      mat(odd(k), odd(i)) = x[even(jj)] * x[odd(k)] - x[odd(jj)] * x[even(k)];
      mat(even(k), odd(i)) = x[odd(jj)] * x[odd(k)] + x[even(jj)] * x[even(k)];
      mat(odd(k), odd(jj)) = x[even(i)] * x[odd(k)] - x[odd(i)] * x[even(k)];
      mat(even(k), odd(jj)) = x[odd(i)] * x[odd(k)] + x[even(i)] * x[even(k)];
      mat(odd(i), odd(k)) = x[odd(jj)] * x[even(k)] - x[even(jj)] * x[odd(k)];
      mat(even(i), odd(k)) = x[odd(jj)] * x[odd(k)] + x[even(jj)] * x[even(k)];
      mat(odd(jj), odd(k)) = x[odd(i)] * x[even(k)] - x[even(i)] * x[odd(k)];
      mat(even(jj), odd(k)) = x[odd(i)] * x[odd(k)] + x[even(i)] * x[even(k)];
      mat(even(k), odd(k)) = Rational(-2) * (x[odd(i)] * x[odd(jj)] + x[even(i)] * x[even(jj)]);
    }
    fill_even_columns(mat);
    return mat;
  }

  // R(U_{2i-1}, U_{2j-1}) for i != j
  Mat<SpherePoly> odd_odd(std::size_t i, std::size_t jj) const {
    Mat<SpherePoly> mat(m, m);
    SpherePoly q = one_minus_blocks(i, jj);
    mat(odd(jj), odd(i)) = -q;
    mat(odd(i), odd(jj)) = q;
    for (std::size_t k = 1; k <= n; ++k) {
      if (k == i || k == jj) continue;
      mat(odd(k), odd(i)) = x[odd(jj)] * x[odd(k)] + x[even(jj)] * x[even(k)];
      mat(even(k), odd(i)) = x[odd(jj)] * x[even(k)] - x[even(jj)] * x[odd(k)];
      mat(odd(k), odd(jj)) = -(x[odd(i)] * x[odd(k)] + x[even(i)] * x[even(k)]);
      mat(even(k), odd(jj)) = x[even(i)] * x[odd(k)] - x[odd(i)] * x[even(k)];
      mat(odd(i), odd(k)) = -(x[odd(jj)] * x[odd(k)] + x[even(jj)] * x[even(k)]);
      mat(even(i), odd(k)) = x[odd(jj)] * x[even(k)] - x[even(jj)] * x[odd(k)];
      mat(odd(jj), odd(k)) = x[odd(i)] * x[odd(k)] + x[even(i)] * x[even(k)];
      mat(even(jj), odd(k)) = x[even(i)] * x[odd(k)] - x[odd(i)] * x[even(k)];
      mat(even(k), odd(k)) = Rational(2) * (x[odd(i)] * x[even(jj)] - x[even(i)] * x[odd(jj)]);
    }
    fill_even_columns(mat);
    return mat;
  }
};

}  // namespace

CatalogEntry<SpherePoly> make_hopf(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_hopf: n must be >= 2");
  std::size_t m = 2 * n;
  HopfData data(n);
  CatalogEntry<SpherePoly> e;
  e.name = "hopf(n=" + std::to_string(n) + ")";
  e.family = Family::Hopf;
  e.algebra = FrameAlgebra<SpherePoly>(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = i + 1; jj < m; ++jj) {
      e.algebra.set_bracket(i, jj, jj, data.x[i]);
      e.algebra.set_bracket(i, jj, i, -data.x[jj]);
    }
  e.herm.g = RatMat::identity(m);
  e.herm.J = data.j;

  KForm<SpherePoly> theta(m, 1);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t idx = k;
    theta.at_sorted(&idx) = Rational(-2) * data.x[k];
  }
  e.lee = lee_data_from_theta(e.herm, theta);
  e.lck = true;
  e.vaisman = true;

  VectorField<SpherePoly> h = hopf_radial_field(m);
  VectorField<SpherePoly> jh = apply_endo(data.j, h);

  // Levi-Civita reference: nabla_{U_i} U_j = -x_j U_i (i != j),
  // nabla_{U_i} U_i = H - x_i U_i
  ConnectionTable<SpherePoly> lc("levi-civita", m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t jj = 0; jj < m; ++jj) {
      if (i != jj) {
        lc.gamma[i][jj][i] = -data.x[jj];
      } else {
        for (std::size_t k = 0; k < m; ++k)
          if (k != i) lc.gamma[i][i][k] = data.x[k];
      }
    }
  e.expected_levi_civita = std::move(lc);

  // Bismut reference table
  ConnectionTable<SpherePoly> bis("bismut", m);
  auto x = [&data](std::size_t label) { return data.x[label - 1]; };  // 1-based x
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t oi = data.odd(i), ei = data.even(i);
    for (std::size_t jj = 1; jj <= n; ++jj) {
      std::size_t oj = data.odd(jj), ej = data.even(jj);
      if (i != jj) {
        // odd -> odd
        bis.gamma[oi][oj][oi] = -x(2 * jj - 1);
        bis.gamma[oi][oj][ei] = x(2 * jj);
        bis.gamma[oi][oj][ej] = -x(2 * i);
        // odd -> even
        bis.gamma[oi][ej][oi] = -x(2 * jj);
        bis.gamma[oi][ej][oj] = x(2 * i);
        bis.gamma[oi][ej][ei] = -x(2 * jj - 1);
        // even -> odd
        bis.gamma[ei][oj][oi] = -x(2 * jj);
        bis.gamma[ei][oj][ei] = -x(2 * jj - 1);
        bis.gamma[ei][oj][ej] = x(2 * i - 1);
        // even -> even
        bis.gamma[ei][ej][oj] = -x(2 * i - 1);
        bis.gamma[ei][ej][oi] = x(2 * jj - 1);
        bis.gamma[ei][ej][ei] = -x(2 * jj);
      }
    }
    // diagonal blocks
    for (std::size_t k = 0; k < m; ++k) {
      if (k != oi) bis.gamma[oi][oi][k] = h[k];
      if (k != ei) bis.gamma[ei][ei][k] = h[k];
    }
    for (std::size_t k = 0; k < m; ++k) {
      bis.gamma[oi][ei][k] = jh[k];
      bis.gamma[ei][oi][k] = -jh[k];
    }
    bis.gamma[oi][ei][ei] -= x(2 * i - 1);
    bis.gamma[ei][oi][oi] -= x(2 * i);
  }
  e.expected_bismut = std::move(bis);

  // Bismut curvature reference tables
  CurvatureTable<SpherePoly> curv(m);
  for (std::size_t i = 1; i <= n; ++i) curv.at_pair(data.odd(i), data.even(i)) = data.paired(i);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t jj = 1; jj <= n; ++jj) {
      if (i == jj) continue;
      if (data.odd(i) < data.even(jj)) curv.at_pair(data.odd(i), data.even(jj)) = data.mixed(i, jj);
      // pairs (even_i, odd_j) with 2i-1 < 2j-2, i.e. i < j: R(U_{2i}, U_{2j-1}) = -R(U_{2j-1}, U_{2i})
      if (i < jj) curv.at_pair(data.even(i), data.odd(jj)) = -data.mixed(jj, i);
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t jj = i + 1; jj <= n; ++jj) {
      Mat<SpherePoly> oo = data.odd_odd(i, jj);
      curv.at_pair(data.odd(i), data.odd(jj)) = oo;
      curv.at_pair(data.even(i), data.even(jj)) = std::move(oo);
    }
  e.expected_curvature = std::move(curv);

  // closed-form Bismut Ricci
  Mat<SpherePoly> ricb(m, m);
  Rational factor = Rational(-2) * Rational(static_cast<long>(n) - 2);
  for (std::size_t rr = 1; rr <= n; ++rr)
    for (std::size_t ss = 1; ss <= n; ++ss) {
      SpherePoly sym = x(2 * rr - 1) * x(2 * ss - 1) + x(2 * rr) * x(2 * ss);
      if (rr == ss) sym -= SpherePoly(Rational(1));
      SpherePoly skew = x(2 * rr - 1) * x(2 * ss) - x(2 * rr) * x(2 * ss - 1);
      ricb(data.odd(rr), data.odd(ss)) = factor * sym;
      ricb(data.even(rr), data.even(ss)) = factor * sym;
      ricb(data.odd(rr), data.even(ss)) = factor * skew;
      ricb(data.even(rr), data.odd(ss)) = factor * (x(2 * ss - 1) * x(2 * rr) - x(2 * ss) * x(2 * rr - 1));
    }
  e.expected_bismut_ricci = std::move(ricb);
  return e;
}

CatalogEntry<Rational> make_abelian(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_abelian: n must be >= 2");
  std::size_t m = 2 * n;
  CatalogEntry<Rational> e;
  e.name = "abelian(n=" + std::to_string(n) + ")";
  e.family = Family::Abelian;
  e.algebra = FrameAlgebra<Rational>(m);
  e.herm.g = RatMat::identity(m);
  e.herm.J = standard_pairing_j(m);
  e.lee = lee_data_from_theta(e.herm, KForm<Rational>(m, 1));
  e.lck = true;
  e.vaisman = true;  // degenerate: theta = 0
  e.kahler = true;

  ConnectionTable<Rational> flat("levi-civita", m);
  e.expected_levi_civita = flat;
  flat.label = "bismut";
  e.expected_bismut = std::move(flat);
  e.expected_curvature = CurvatureTable<Rational>(m);
  e.expected_bismut_ricci = Mat<Rational>(m, m);
  e.expected_riemannian_ricci = Mat<Rational>(m, m);
  return e;
}

}  // namespace lck
