#ifndef LCK_VAISMAN_HPP
#define LCK_VAISMAN_HPP

#include <array>

#include "lck/connection.hpp"

namespace lck {

/// phi = J - theta (x) JA + (J theta) (x) A over the ring; vanishes on
/// span{A, JA} and agrees with J on the orthogonal complement once |A| = 1.
template <typename R>
Mat<R> phi_matrix(const HermitianStructure& h, const LeeData<R>& lee) {
  std::size_t m = h.dim();
  Mat<R> phi = Mat<R>::template lift<Rational>(h.J);
  std::vector<R> theta = oneform_coefficients(lee.theta);
  std::vector<R> jtheta = oneform_coefficients(j_twist(lee.theta, h.J));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (!is_zero(theta[c])) phi(r, c) -= lee.JA[r] * theta[c];
      if (!is_zero(jtheta[c])) phi(r, c) += lee.A[r] * jtheta[c];
    }
  return phi;
}

/// Constants-ring phi with its defining identities checked on demand.
struct PhiTensor {
  RatMat matrix;

  bool f_structure() const {  // phi^3 + phi = 0
    RatMat p3 = matrix * matrix * matrix;
    return (p3 + matrix).all_zero();
  }
  bool skew_wrt(const RatMat& g) const {
    return (matrix.transpose() * g + g * matrix).all_zero();
  }
};

PhiTensor phi_tensor(const HermitianStructure& h, const LeeData<Rational>& lee);

/// nabla^g theta = 0 test, cross-checked against nabla^b theta = 0.
template <typename R>
bool is_vaisman(const FrameAlgebra<R>& fa, const ConnectionTable<R>& lc,
                const ConnectionTable<R>& bismut, const LeeData<R>& lee) {
  bool lc_parallel = covd_form_vanishes(lc, fa, lee.theta);
  bool b_parallel = covd_form_vanishes(bismut, fa, lee.theta);
  if (lc_parallel != b_parallel)
    throw std::logic_error("is_vaisman: Levi-Civita and Bismut parallelism disagree");
  return lc_parallel;
}

/// Curvature of the Bismut connection rebuilt from the Riemannian curvature;
/// valid under the unit-Lee normalization |A| = 1 with parallel torsion.
template <typename R>
CurvatureTable<R> rb_from_rg(const CurvatureTable<R>& rg, const FrameAlgebra<R>& fa,
                             const HermitianStructure& h, const LeeData<R>& lee) {
  std::size_t m = fa.dim();
  KForm<R> omega = fundamental_form<R>(h);
  KForm<R> jtheta = j_twist(lee.theta, h.J);
  KForm<R> jt_w = wedge(jtheta, omega);
  KForm<R> t_w = wedge(lee.theta, omega);
  Mat<R> phi = phi_matrix(h, lee);
  Mat<R> gphi = Mat<R>::template lift<Rational>(h.g) * phi;  // (g phi)_{rc} = g(phi e_c, e_r)... see below
  // g(phi X, Y) with X = e_c, Y = e_r is (g^T phi)_{rc}; g is symmetric.
  std::vector<R> jt = oneform_coefficients(jtheta);  // jt[c] = -theta(J e_c)

  CurvatureTable<R> rb(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mat<R> mat = rg.at_pair(i, j);
      R om_ij = omega.at({i, j});
      R gphi_ij = gphi(j, i);  // g(phi e_i, e_j)
      for (std::size_t k = 0; k < m; ++k) {
        // -(1/4) theta(J e_j) theta(J e_k) e_i + (1/4) theta(J e_i) theta(J e_k) e_j
        R tj = -jt[j], ti = -jt[i], tk = -jt[k];
        Rational quarter(1, 4), half(1, 2);
        mat(i, k) -= tj * tk * R(quarter);
        mat(j, k) += ti * tk * R(quarter);
        // +(1/4) g(phi e_j, e_k) J e_i - (1/4) g(phi e_i, e_k) J e_j + (1/2) g(phi e_i, e_j) J e_k
        for (std::size_t r = 0; r < m; ++r) {
          if (!h.J(r, i).is_zero()) mat(r, k) += gphi(k, j) * R(h.J(r, i) * quarter);
          if (!h.J(r, j).is_zero()) mat(r, k) -= gphi(k, i) * R(h.J(r, j) * quarter);
          if (!h.J(r, k).is_zero()) mat(r, k) += gphi_ij * R(h.J(r, k) * half);
        }
        // +(1/4)(-omega(e_i,e_j) theta(J e_k) + (Jtheta ^ omega)(e_i,e_j,e_k)) A
        R coeff_a = (-(om_ij * tk) + jt_w.at({i, j, k})) * R(quarter);
        // -(1/4)((Jtheta ^ omega)(e_i,e_j,J e_k) + (theta ^ omega)(e_i,e_j,e_k)) JA
        R jt_w_jk(0);
        for (std::size_t c = 0; c < m; ++c)
          if (!h.J(c, k).is_zero()) jt_w_jk += jt_w.at({i, j, c}) * R(h.J(c, k));
        R coeff_ja = (jt_w_jk + t_w.at({i, j, k})) * R(-quarter);
        for (std::size_t r = 0; r < m; ++r) {
          if (!is_zero(lee.A[r])) mat(r, k) += coeff_a * lee.A[r];
          if (!is_zero(lee.JA[r])) mat(r, k) += coeff_ja * lee.JA[r];
        }
      }
      rb.at_pair(i, j) = std::move(mat);
    }
  return rb;
}

/// Bismut Ricci from the Riemannian Ricci on unit-Lee geometries:
/// Ric_b = Ric_g - (1/2) g + (1/2) theta theta^T - ((n-2)/2) (J theta)(J theta)^T.
template <typename R>
Mat<R> ricb_from_ricg(const Mat<R>& ricg, const HermitianStructure& h, const LeeData<R>& lee) {
  std::size_t m = h.dim();
  long n = static_cast<long>(m / 2);
  Mat<R> out = ricg;
  std::vector<R> theta = oneform_coefficients(lee.theta);
  std::vector<R> jt = oneform_coefficients(j_twist(lee.theta, h.J));
  Rational half(1, 2);
  Rational nm2_half = Rational(n - 2) * half;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      out(r, c) -= R(h.g(r, c) * half);
      // theta(J e_r) = -jt[r]
      out(r, c) += theta[r] * theta[c] * R(half);
      out(r, c) -= jt[r] * jt[c] * R(nm2_half);
    }
  return out;
}

/// R^g(JA, Y)Z written in Lee data, a consequence of R^b(JA, .) = 0 on
/// unit-Lee geometries; returns true when the identity holds entrywise.
template <typename R>
bool riemannian_ja_curvature_identity(const CurvatureTable<R>& rg, const FrameAlgebra<R>& fa,
                                      const HermitianStructure& h, const LeeData<R>& lee) {
  std::size_t m = fa.dim();
  Mat<R> phi = phi_matrix(h, lee);
  Mat<R> gl = Mat<R>::template lift<Rational>(h.g);
  std::vector<R> theta = oneform_coefficients(lee.theta);
  std::vector<R> jt = oneform_coefficients(j_twist(lee.theta, h.J));
  Rational quarter(1, 4);
  for (std::size_t y = 0; y < m; ++y) {
    Mat<R> lhs(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      if (is_zero(lee.JA[i])) continue;
      Mat<R> r = rg.at(i, y);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (!is_zero(r(a, b))) lhs(a, b) += lee.JA[i] * r(a, b);
    }
    for (std::size_t z = 0; z < m; ++z) {
      // theta(J e_z) = -jt[z]
      R tjz = -jt[z];
      VectorField<R> rhs = zero_field<R>(m);
      rhs[y] += tjz * R(quarter);
      for (std::size_t r = 0; r < m; ++r) {
        if (!is_zero(lee.A[r])) rhs[r] -= theta[y] * tjz * lee.A[r] * R(quarter);
      }
      // g(phi e_y, J e_z)
      R gphiyjz(0);
      for (std::size_t c = 0; c < m; ++c) {
        if (h.J(c, z).is_zero()) continue;
        R inner(0);
        for (std::size_t a = 0; a < m; ++a)
          if (!is_zero(phi(a, y)) && !h.g(a, c).is_zero()) inner += phi(a, y) * R(h.g(a, c));
        gphiyjz += inner * R(h.J(c, z));
      }
      R tjy = -jt[y];
      R coeff_ja = (tjy * tjz + gphiyjz) * R(quarter);
      for (std::size_t r = 0; r < m; ++r)
        if (!is_zero(lee.JA[r])) rhs[r] += coeff_ja * lee.JA[r];
      for (std::size_t r = 0; r < m; ++r) {
        R diff = lhs(r, z) - rhs[r];
        if (!is_zero(diff)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parameter scans: solution sets of nabla-parameter theta = 0.

struct LineScan {
  enum class Kind { Empty, Single, All } kind = Kind::All;
  Rational value;
};

struct PlaneScan {
  enum class Kind { Empty, Point, Line, All } kind = Kind::All;
  Rational eps, rho;            // Point
  Rational ca, cb, cc;          // Line: ca*eps + cb*rho = cc, leading coeff 1
};

struct GauduchonScan {
  LineScan t_set;
  PlaneScan er_set;
};

namespace detail {

/// Monomial-wise rational rows (a, b, c) of a + eps b + rho c = 0.
inline void coefficient_rows(const Rational& a, const Rational& b, const Rational& c,
                             std::vector<std::array<Rational, 3>>& out) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) return;
  out.push_back({a, b, c});
}

inline void coefficient_rows(const SpherePoly& a, const SpherePoly& b, const SpherePoly& c,
                             std::vector<std::array<Rational, 3>>& out) {
  std::size_t width = std::max({a.vars(), b.vars(), c.vars()});
  std::map<Monomial, std::array<Rational, 3>, MonomialOrder> rows;
  auto scatter = [&rows, width](const SpherePoly& p, std::size_t slot) {
    for (const auto& [mono, coeff] : p.terms()) {
      Monomial key = mono;
      key.resize(width, 0u);  // constants carry empty exponent vectors
      rows[key][slot] = coeff;
    }
  };
  scatter(a, 0);
  scatter(b, 1);
  scatter(c, 2);
  for (auto& [mono, row] : rows) out.push_back(row);
}

}  // namespace detail

/// Affine rows of (nabla^{eps,rho} theta) = 0 over all frame index pairs.
template <typename R>
std::vector<std::array<Rational, 3>> lee_parallelism_rows(const ConnectionFamily<R>& fam,
                                                          const FrameAlgebra<R>& fa,
                                                          const LeeData<R>& lee) {
  std::size_t m = fa.dim();
  std::vector<R> theta = oneform_coefficients(lee.theta);
  auto pair_with_theta = [&](const VectorField<R>& v) {
    R acc(0);
    for (std::size_t k = 0; k < m; ++k)
      if (!is_zero(v[k])) acc += theta[k] * v[k];
    return acc;
  };
  std::vector<std::array<Rational, 3>> rows;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      R a = fa.derive(i, theta[j]) - pair_with_theta(fam.base.gamma[i][j]);
      R b = -pair_with_theta(fam.eps_term.gamma[i][j]);
      R c = -pair_with_theta(fam.rho_term.gamma[i][j]);
      detail::coefficient_rows(a, b, c, rows);
    }
  return rows;
}

/// Solution sets {t : nabla^t theta = 0} and {(eps, rho) : nabla^{eps,rho} theta = 0}
/// by exact linear algebra in the parameters.
template <typename R>
GauduchonScan gauduchon_theta_scan(const ConnectionFamily<R>& fam, const FrameAlgebra<R>& fa,
                                   const LeeData<R>& lee) {
  auto rows = lee_parallelism_rows(fam, fa, lee);
  GauduchonScan scan;

  // Gauduchon line: eps = (1-t)/4, rho = (1+t)/4 gives p + t q = 0 with
  // p = a + (b+c)/4 and q = (c-b)/4.
  Rational quarter(1, 4);
  bool any_q = false, empty = false;
  Rational t_candidate;
  bool have_candidate = false;
  for (const auto& [a, b, c] : rows) {
    Rational p = a + (b + c) * quarter;
    Rational q = (c - b) * quarter;
    if (q.is_zero()) {
      if (!p.is_zero()) empty = true;
      continue;
    }
    any_q = true;
    Rational t = -(p / q);
    if (!have_candidate) {
      t_candidate = t;
      have_candidate = true;
    } else if (t != t_candidate) {
      empty = true;
    }
  }
  if (empty)
    scan.t_set.kind = LineScan::Kind::Empty;
  else if (!any_q)
    scan.t_set.kind = LineScan::Kind::All;
  else {
    scan.t_set.kind = LineScan::Kind::Single;
    scan.t_set.value = t_candidate;
  }

  // Full (eps, rho) plane: RREF of rows b*eps + c*rho = -a.
  RatMat sys(rows.size() == 0 ? 1 : rows.size(), 3);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    sys(r, 0) = rows[r][1];
    sys(r, 1) = rows[r][2];
    sys(r, 2) = -rows[r][0];
  }
  // eliminate over the two unknown columns
  std::size_t pivot_rows = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < 2 && pivot_rows < sys.rows(); ++c) {
    std::size_t p = pivot_rows;
    while (p < sys.rows() && sys(p, c).is_zero()) ++p;
    if (p == sys.rows()) continue;
    for (std::size_t j = 0; j < 3; ++j) std::swap(sys(p, j), sys(pivot_rows, j));
    Rational inv = Rational(1) / sys(pivot_rows, c);
    for (std::size_t j = 0; j < 3; ++j) sys(pivot_rows, j) *= inv;
    for (std::size_t r = 0; r < sys.rows(); ++r) {
      if (r == pivot_rows || sys(r, c).is_zero()) continue;
      Rational f = sys(r, c);
      for (std::size_t j = 0; j < 3; ++j) sys(r, j) -= f * sys(pivot_rows, j);
    }
    pivot_cols.push_back(c);
    ++pivot_rows;
  }
  bool inconsistent = false;
  for (std::size_t r = pivot_rows; r < sys.rows(); ++r)
    if (!sys(r, 2).is_zero()) inconsistent = true;
  if (inconsistent) {
    scan.er_set.kind = PlaneScan::Kind::Empty;
  } else if (pivot_rows == 0) {
    scan.er_set.kind = PlaneScan::Kind::All;
  } else if (pivot_rows == 2) {
    scan.er_set.kind = PlaneScan::Kind::Point;
    scan.er_set.eps = sys(0, 2);
    scan.er_set.rho = sys(1, 2);
  } else {
    scan.er_set.kind = PlaneScan::Kind::Line;
    scan.er_set.ca = sys(0, 0);
    scan.er_set.cb = sys(0, 1);
    scan.er_set.cc = sys(0, 2);
  }
  return scan;
}

/// The Gauduchon-line residual: on any LCK geometry,
/// (nabla^t_X theta)(Y) = g(nabla^g_X A - ((t+1)/4)(|A|^2 X - theta(X) A +
/// theta(JX) JA), Y), identically in t. Verified by comparing the constant
/// and t-linear coefficient tables of both sides over the ring.
template <typename R>
bool gauduchon_lee_residual_identity(const ConnectionFamily<R>& fam, const FrameAlgebra<R>& fa,
                                     const HermitianStructure& h, const LeeData<R>& lee) {
  std::size_t m = fa.dim();
  std::vector<R> theta = oneform_coefficients(lee.theta);
  std::vector<R> jt = oneform_coefficients(j_twist(lee.theta, h.J));
  Rational quarter(1, 4);
  for (std::size_t i = 0; i < m; ++i) {
    VectorField<R> dga = covd_vector(fam.base, fa, i, lee.A);
    // S_i = |A|^2 e_i - theta(e_i) A + theta(J e_i) JA; theta(J e_i) = -jt[i]
    VectorField<R> s = zero_field<R>(m);
    s[i] += lee.norm_sq;
    for (std::size_t k = 0; k < m; ++k) {
      s[k] -= theta[i] * lee.A[k];
      s[k] -= jt[i] * lee.JA[k];
    }
    for (std::size_t j = 0; j < m; ++j) {
      // left side as p + t q from the parameter family
      R a = fa.derive(i, theta[j]);
      R b(0), cc(0);
      for (std::size_t k = 0; k < m; ++k) {
        if (!is_zero(fam.base.gamma[i][j][k])) a -= theta[k] * fam.base.gamma[i][j][k];
        if (!is_zero(fam.eps_term.gamma[i][j][k])) b -= theta[k] * fam.eps_term.gamma[i][j][k];
        if (!is_zero(fam.rho_term.gamma[i][j][k])) cc -= theta[k] * fam.rho_term.gamma[i][j][k];
      }
      R p = a + (b + cc) * R(quarter);
      R q = (cc - b) * R(quarter);
      // right side: g(dga, e_j) - ((t+1)/4) g(s, e_j)
      R pairing_dga = metric_pairing(h.g, dga, unit_field<R>(j, m));
      R pairing_s = metric_pairing(h.g, s, unit_field<R>(j, m));
      R rhs_const = pairing_dga - pairing_s * R(quarter);
      R rhs_linear = -(pairing_s * R(quarter));
      R d1 = p - rhs_const;
      R d2 = q - rhs_linear;
      if (!is_zero(d1) || !is_zero(d2)) return false;
    }
  }
  return true;
}

/// Symbolic check of nabla^{eps,rho} J = -2 (eps + rho - 1/2) nabla^g J:
/// both parameter coefficients of nabla J must equal -2 nabla^g J.
template <typename R>
bool eps_rho_j_proportionality(const ConnectionFamily<R>& fam, const FrameAlgebra<R>& fa,
                               const RatMat& J) {
  std::size_t m = fa.dim();
  Mat<R> jl = Mat<R>::template lift<Rational>(J);
  auto table_commutator = [&](const ConnectionTable<R>& t, std::size_t i) {
    // Gamma-only part of nabla_i J for a derivative-free correction table:
    // col_j = sum_k J_kj t_i(e_k) - J(t_i(e_j))
    Mat<R> out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      VectorField<R> v = zero_field<R>(m);
      for (std::size_t k = 0; k < m; ++k)
        if (!J(k, j).is_zero()) field_add_scaled(v, R(J(k, j)), t.gamma[i][k]);
      VectorField<R> jw = apply_endo(J, t.gamma[i][j]);
      for (std::size_t r = 0; r < m; ++r) out(r, j) = v[r] - jw[r];
    }
    return out;
  };
  for (std::size_t i = 0; i < m; ++i) {
    Mat<R> base = covd_endo(fam.base, fa, i, jl);
    Mat<R> target = -(base + base);
    if (table_commutator(fam.eps_term, i) != target) return false;
    if (table_commutator(fam.rho_term, i) != target) return false;
  }
  return true;
}

}  // namespace lck

#endif
