#ifndef LCK_CONNECTION_HPP
#define LCK_CONNECTION_HPP

#include <string>

#include "lck/hermitian.hpp"
#include "lck/kform.hpp"

namespace lck {

/// Christoffel table of a frame connection: gamma[i][j] = nabla_{e_i} e_j.
/// Extension rules are implied, not stored: tensorial in the lower slot and
/// Leibniz in the argument.
template <typename R>
struct ConnectionTable {
  std::string label;
  std::size_t m = 0;
  std::vector<std::vector<VectorField<R>>> gamma;

  ConnectionTable() = default;
  ConnectionTable(std::string lbl, std::size_t dim)
      : label(std::move(lbl)), m(dim), gamma(dim, std::vector<VectorField<R>>(dim, zero_field<R>(dim))) {}

  /// Left multiplication operator nabla_{e_i} as a matrix (columns = images).
  Mat<R> op_matrix(std::size_t i) const {
    Mat<R> L(m, m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) L(k, j) = gamma[i][j][k];
    return L;
  }

  /// nabla_X e_j for a ring-coefficient direction X (tensorial slot).
  VectorField<R> directional(const VectorField<R>& x, std::size_t j) const {
    VectorField<R> out = zero_field<R>(m);
    for (std::size_t i = 0; i < m; ++i)
      if (!is_zero(x[i])) field_add_scaled(out, x[i], gamma[i][j]);
    return out;
  }

  bool same_table(const ConnectionTable& o) const {
    if (m != o.m) return false;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          R diff = gamma[i][j][k] - o.gamma[i][j][k];
          if (!is_zero(diff)) return false;
        }
    return true;
  }
};

/// Koszul formula on frame fields with a constant metric:
/// 2 g(nabla_i e_j, e_k) = g([e_i,e_j], e_k) - g([e_i,e_k], e_j) - g([e_j,e_k], e_i).
/// The metric-derivative terms vanish because g has rational entries.
template <typename R>
ConnectionTable<R> levi_civita(const FrameAlgebra<R>& fa, const RatMat& g) {
  std::size_t m = fa.dim();
  RatMat ginv = inverse(g);
  ConnectionTable<R> nabla("levi-civita", m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<R> rhs(m, R(0));
      for (std::size_t k = 0; k < m; ++k) {
        R acc(0);
        const VectorField<R>& fij = fa.bracket_of(i, j);
        const VectorField<R>& fik = fa.bracket_of(i, k);
        const VectorField<R>& fjk = fa.bracket_of(j, k);
        for (std::size_t a = 0; a < m; ++a) {
          if (!is_zero(fij[a]) && !g(a, k).is_zero()) acc += fij[a] * R(g(a, k));
          if (!is_zero(fik[a]) && !g(a, j).is_zero()) acc -= fik[a] * R(g(a, j));
          if (!is_zero(fjk[a]) && !g(a, i).is_zero()) acc -= fjk[a] * R(g(a, i));
        }
        rhs[k] = acc * Rational(1, 2);
      }
      for (std::size_t k = 0; k < m; ++k) {
        R acc(0);
        for (std::size_t l = 0; l < m; ++l)
          if (!ginv(k, l).is_zero()) acc += rhs[l] * R(ginv(k, l));
        nabla.gamma[i][j][k] = std::move(acc);
      }
    }
  return nabla;
}

/// Metric connections nabla(eps, rho) = nabla_g + eps * E + rho * P where
/// g(E_X Y, Z) = d omega(JX, JY, JZ) and g(P_X Y, Z) = -d omega(JX, Y, Z).
/// eps = 1/2, rho = 0 is the Bismut connection; eps + rho = 1/2 is the line
/// of Hermitian connections with parameter t = 1 - 4 eps.
template <typename R>
struct ConnectionFamily {
  ConnectionTable<R> base;      // the Levi-Civita table
  ConnectionTable<R> eps_term;  // coefficient of eps
  ConnectionTable<R> rho_term;  // coefficient of rho
};

template <typename R>
ConnectionFamily<R> build_connection_family(const FrameAlgebra<R>& fa, const HermitianStructure& h,
                                            const ConnectionTable<R>& lc) {
  std::size_t m = fa.dim();
  RatMat ginv = inverse(h.g);
  KForm<R> domega = exterior_derivative(fa, fundamental_form<R>(h));
  KForm<R> dwJJJ = pull_through(domega, h.J);  // d omega(J., J., J.)

  ConnectionFamily<R> fam;
  fam.base = lc;
  fam.base.label = "levi-civita";
  fam.eps_term = ConnectionTable<R>("eps-term", m);
  fam.rho_term = ConnectionTable<R>("rho-term", m);
  for (std::size_t i = 0; i < m; ++i) {
    // first slot of the rho term carries JX: precompute the J-image of e_i
    std::vector<std::pair<std::size_t, Rational>> ji;
    for (std::size_t a = 0; a < m; ++a)
      if (!h.J(a, i).is_zero()) ji.emplace_back(a, h.J(a, i));
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<R> eps_rhs(m, R(0)), rho_rhs(m, R(0));
      for (std::size_t k = 0; k < m; ++k) {
        eps_rhs[k] = dwJJJ.at({i, j, k});
        R acc(0);
        for (const auto& [a, c] : ji) acc += domega.at({a, j, k}) * R(c);
        rho_rhs[k] = -acc;
      }
      for (std::size_t k = 0; k < m; ++k) {
        R e_acc(0), r_acc(0);
        for (std::size_t l = 0; l < m; ++l) {
          if (ginv(k, l).is_zero()) continue;
          e_acc += eps_rhs[l] * R(ginv(k, l));
          r_acc += rho_rhs[l] * R(ginv(k, l));
        }
        fam.eps_term.gamma[i][j][k] = std::move(e_acc);
        fam.rho_term.gamma[i][j][k] = std::move(r_acc);
      }
    }
  }
  return fam;
}

template <typename R>
ConnectionTable<R> eps_rho_connection(const ConnectionFamily<R>& fam, const Rational& eps,
                                      const Rational& rho) {
  ConnectionTable<R> out = fam.base;
  out.label = "eps-rho(" + eps.to_string() + "," + rho.to_string() + ")";
  for (std::size_t i = 0; i < out.m; ++i)
    for (std::size_t j = 0; j < out.m; ++j)
      for (std::size_t k = 0; k < out.m; ++k) {
        if (!eps.is_zero()) out.gamma[i][j][k] += fam.eps_term.gamma[i][j][k] * R(eps);
        if (!rho.is_zero()) out.gamma[i][j][k] += fam.rho_term.gamma[i][j][k] * R(rho);
      }
  return out;
}

/// Gauduchon line: eps = (1 - t)/4, rho = (1 + t)/4.
template <typename R>
ConnectionTable<R> gauduchon_connection(const ConnectionFamily<R>& fam, const Rational& t) {
  ConnectionTable<R> out =
      eps_rho_connection(fam, (Rational(1) - t) * Rational(1, 4), (Rational(1) + t) * Rational(1, 4));
  out.label = "gauduchon(" + t.to_string() + ")";
  return out;
}

template <typename R>
ConnectionTable<R> bismut_connection(const ConnectionFamily<R>& fam) {
  ConnectionTable<R> out = eps_rho_connection(fam, Rational(1, 2), Rational(0));
  out.label = "bismut";
  return out;
}

/// T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j].
template <typename R>
std::vector<std::vector<VectorField<R>>> torsion(const ConnectionTable<R>& nabla,
                                                 const FrameAlgebra<R>& fa) {
  std::size_t m = fa.dim();
  std::vector<std::vector<VectorField<R>>> t(m, std::vector<VectorField<R>>(m, zero_field<R>(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      VectorField<R> v = field_sub(nabla.gamma[i][j], nabla.gamma[j][i]);
      t[i][j] = field_sub(std::move(v), fa.bracket_of(i, j));
    }
  return t;
}

template <typename R>
bool torsion_free(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa) {
  auto t = torsion(nabla, fa);
  for (const auto& row : t)
    for (const auto& v : row)
      if (!field_is_zero(v)) return false;
  return true;
}

/// Metric compatibility on frame fields: the constant metric makes the
/// left-hand derivative vanish, so g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k) = 0
/// must hold identically.
template <typename R>
bool metric_compatible(const ConnectionTable<R>& nabla, const RatMat& g) {
  std::size_t m = nabla.m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        R acc(0);
        for (std::size_t a = 0; a < m; ++a) {
          if (!g(a, k).is_zero()) acc += nabla.gamma[i][j][a] * R(g(a, k));
          if (!g(j, a).is_zero()) acc += nabla.gamma[i][k][a] * R(g(j, a));
        }
        if (!is_zero(acc)) return false;
      }
  return true;
}

/// c(X, Y, Z) = g(X, T(Y, Z)); throws std::domain_error unless the result is
/// totally antisymmetric.
template <typename R>
KForm<R> torsion_three_form(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa,
                            const RatMat& g) {
  std::size_t m = fa.dim();
  auto t = torsion(nabla, fa);
  auto pairing = [&](std::size_t i, std::size_t j, std::size_t k) {
    R acc(0);
    for (std::size_t a = 0; a < m; ++a)
      if (!g(i, a).is_zero()) acc += t[j][k][a] * R(g(i, a));
    return acc;
  };
  KForm<R> c(m, 3);
  for (const auto& tr : detail::combinations(m, 3))
    c.at_sorted(tr.data()) = pairing(tr[0], tr[1], tr[2]);
  // total skewness: diagonal slots and the i<->j exchange must both vanish
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        R expected = c.at({i, j, k});
        R actual = pairing(i, j, k);
        R diff = expected - actual;
        if (!is_zero(diff)) throw std::domain_error("torsion_three_form: torsion is not totally skew");
      }
  return c;
}

/// nabla_i of a vector field: derivation of coefficients plus Gamma action.
template <typename R>
VectorField<R> covd_vector(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa,
                           std::size_t i, const VectorField<R>& x) {
  VectorField<R> out(fa.dim(), R(0));
  for (std::size_t k = 0; k < fa.dim(); ++k) out[k] = fa.derive(i, x[k]);
  for (std::size_t j = 0; j < fa.dim(); ++j)
    if (!is_zero(x[j])) field_add_scaled(out, x[j], nabla.gamma[i][j]);
  return out;
}

/// (nabla_i eta)(tuple) = e_i(eta(tuple)) - sum_slots eta(.., nabla_i e_slot, ..).
template <typename R>
KForm<R> covd_form(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa, std::size_t i,
                   const KForm<R>& eta) {
  std::size_t m = fa.dim(), k = eta.degree();
  KForm<R> out(m, k);
  for (const auto& tuple : detail::combinations(m, k)) {
    R acc = fa.derive(i, eta.at_sorted(tuple.data()));
    for (std::size_t slot = 0; slot < k; ++slot) {
      const VectorField<R>& gij = nabla.gamma[i][tuple[slot]];
      for (std::size_t c = 0; c < m; ++c) {
        if (is_zero(gij[c])) continue;
        std::array<std::size_t, 4> idx{};
        for (std::size_t t = 0; t < k; ++t) idx[t] = tuple[t];
        idx[slot] = c;
        int sign = detail::sort_sign(idx.data(), k);
        if (sign == 0) continue;
        const R& coeff = eta.at_sorted(idx.data());
        if (is_zero(coeff)) continue;
        acc -= gij[c] * (sign > 0 ? coeff : -coeff);
      }
    }
    out.at_sorted(tuple.data()) = std::move(acc);
  }
  return out;
}

template <typename R>
bool covd_form_vanishes(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa,
                        const KForm<R>& eta) {
  for (std::size_t i = 0; i < fa.dim(); ++i)
    if (!covd_form(nabla, fa, i, eta).is_zero_form()) return false;
  return true;
}

/// (nabla_i S)(e_j) = nabla_i(S e_j) - S(nabla_i e_j) for a (1,1)-tensor.
template <typename R>
Mat<R> covd_endo(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa, std::size_t i,
                 const Mat<R>& s) {
  std::size_t m = fa.dim();
  Mat<R> out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    VectorField<R> sj = s.col(j);
    VectorField<R> v = covd_vector(nabla, fa, i, sj);
    // subtract S(nabla_i e_j)
    const VectorField<R>& gij = nabla.gamma[i][j];
    for (std::size_t a = 0; a < m; ++a) {
      if (is_zero(gij[a])) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(s(k, a))) v[k] -= gij[a] * s(k, a);
    }
    for (std::size_t k = 0; k < m; ++k) out(k, j) = std::move(v[k]);
  }
  return out;
}

template <typename R>
bool covd_endo_vanishes(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa,
                        const Mat<R>& s) {
  for (std::size_t i = 0; i < fa.dim(); ++i)
    if (!covd_endo(nabla, fa, i, s).all_zero()) return false;
  return true;
}

/// Curvature endomorphisms R(e_i, e_j) for i < j; the other pairs follow by
/// antisymmetry.
template <typename R>
struct CurvatureTable {
  std::size_t m = 0;
  std::vector<Mat<R>> pair_mats;  // colex-ranked over i < j

  CurvatureTable() = default;
  explicit CurvatureTable(std::size_t dim)
      : m(dim), pair_mats(detail::binom(dim, 2), Mat<R>(dim, dim)) {}

  static std::size_t pair_rank(std::size_t i, std::size_t j) {
    std::size_t idx[2] = {i, j};
    return detail::comb_rank(idx, 2);
  }

  Mat<R>& at_pair(std::size_t i, std::size_t j) { return pair_mats[pair_rank(i, j)]; }
  const Mat<R>& at_pair(std::size_t i, std::size_t j) const { return pair_mats[pair_rank(i, j)]; }

  /// Signed access for any index order; zero matrix on the diagonal.
  Mat<R> at(std::size_t i, std::size_t j) const {
    if (i == j) return Mat<R>(m, m);
    if (i < j) return at_pair(i, j);
    return -at_pair(j, i);
  }

  /// R(X, Y) for ring-coefficient fields (tensorial in both slots).
  Mat<R> of_fields(const VectorField<R>& x, const VectorField<R>& y) const {
    Mat<R> acc(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || is_zero(x[i]) || is_zero(y[j])) continue;
        R c = x[i] * y[j];
        const Mat<R>& base = i < j ? at_pair(i, j) : at_pair(j, i);
        Rational sgn = i < j ? Rational(1) : Rational(-1);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < m; ++s)
            if (!is_zero(base(r, s))) acc(r, s) += c * base(r, s) * R(sgn);
      }
    return acc;
  }

  bool all_zero() const {
    for (const auto& mat : pair_mats)
      if (!mat.all_zero()) return false;
    return true;
  }
};

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on frame
/// fields, with derivation terms for function-coefficient brackets.
template <typename R>
CurvatureTable<R> curvature(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa) {
  std::size_t m = fa.dim();
  CurvatureTable<R> table(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mat<R>& rij = table.at_pair(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        VectorField<R> v = covd_vector(nabla, fa, i, nabla.gamma[j][k]);
        VectorField<R> w = covd_vector(nabla, fa, j, nabla.gamma[i][k]);
        const VectorField<R>& br = fa.bracket_of(i, j);
        for (std::size_t l = 0; l < m; ++l)
          if (!is_zero(br[l])) {
            for (std::size_t c = 0; c < m; ++c) v[c] -= br[l] * nabla.gamma[l][k][c];
          }
        for (std::size_t c = 0; c < m; ++c) rij(c, k) = v[c] - w[c];
      }
    }
  return table;
}

/// Ric(e_j, e_k) = sum_i (e_i-component of R(e_i, e_j) e_k).
template <typename R>
Mat<R> ricci(const CurvatureTable<R>& table) {
  std::size_t m = table.m;
  Mat<R> ric(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      R acc(0);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        const Mat<R>& base = i < j ? table.at_pair(i, j) : table.at_pair(j, i);
        const R& entry = base(i, k);
        if (is_zero(entry)) continue;
        if (i < j)
          acc += entry;
        else
          acc -= entry;
      }
      ric(j, k) = std::move(acc);
    }
  return ric;
}

/// First Bianchi sum over a frame triple (torsion-free connections).
template <typename R>
bool first_bianchi_holds(const CurvatureTable<R>& table) {
  std::size_t m = table.m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t c = 0; c < m; ++c) {
          R acc(0);
          acc += table.at_pair(i, j)(c, k);
          acc += table.at_pair(j, k)(c, i);
          acc -= table.at_pair(i, k)(c, j);
          if (!is_zero(acc)) return false;
        }
  return true;
}

/// (nabla_x R)(y, z) w = nabla_x(R(y,z)w) - R(nabla_x y, z)w - R(y, nabla_x z)w
/// - R(y,z)(nabla_x w) on frame fields; all-zero test.
template <typename R>
bool covd_curvature_vanishes(const ConnectionTable<R>& nabla, const FrameAlgebra<R>& fa,
                             const CurvatureTable<R>& table) {
  std::size_t m = fa.dim();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = y + 1; z < m; ++z) {
        const Mat<R>& ryz = table.at_pair(y, z);
        for (std::size_t w = 0; w < m; ++w) {
          VectorField<R> val = covd_vector(nabla, fa, x, ryz.col(w));
          // - R(nabla_x e_y, e_z) w
          const VectorField<R>& gy = nabla.gamma[x][y];
          const VectorField<R>& gz = nabla.gamma[x][z];
          for (std::size_t a = 0; a < m; ++a) {
            if (!is_zero(gy[a]) && a != z) {
              Mat<R> r = table.at(a, z);
              for (std::size_t c = 0; c < m; ++c)
                if (!is_zero(r(c, w))) val[c] -= gy[a] * r(c, w);
            }
            if (!is_zero(gz[a]) && y != a) {
              Mat<R> r = table.at(y, a);
              for (std::size_t c = 0; c < m; ++c)
                if (!is_zero(r(c, w))) val[c] -= gz[a] * r(c, w);
            }
          }
          // - R(y,z)(nabla_x e_w)
          const VectorField<R>& gw = nabla.gamma[x][w];
          for (std::size_t a = 0; a < m; ++a)
            if (!is_zero(gw[a])) {
              for (std::size_t c = 0; c < m; ++c)
                if (!is_zero(ryz(c, a))) val[c] -= gw[a] * ryz(c, a);
            }
          if (!field_is_zero(val)) return false;
        }
      }
  return true;
}

/// Invariant codifferential with the sign fixed so that on LCK geometries
/// theta = -(1/(n-1)) (codifferential of omega) composed with J:
/// (delta eta)(Y...) = - sum_{i,j} g^{ij} (nabla^g_{e_i} eta)(e_j, Y...).
template <typename R>
KForm<R> codifferential(const FrameAlgebra<R>& fa, const RatMat& g,
                        const ConnectionTable<R>& lc, const KForm<R>& eta) {
  if (eta.degree() == 0) throw std::invalid_argument("codifferential: degree must be >= 1");
  std::size_t m = fa.dim(), k = eta.degree();
  RatMat ginv = inverse(g);
  KForm<R> out(m, k - 1);
  for (std::size_t i = 0; i < m; ++i) {
    KForm<R> di = covd_form(lc, fa, i, eta);
    for (std::size_t j = 0; j < m; ++j) {
      if (ginv(i, j).is_zero()) continue;
      KForm<R> slice = di.contract(unit_field<R>(j, m));
      slice.scale(R(-ginv(i, j)));
      out += slice;
    }
  }
  return out;
}

}  // namespace lck

#endif
