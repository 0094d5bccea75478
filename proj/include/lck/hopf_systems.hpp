#ifndef LCK_HOPF_SYSTEMS_HPP
#define LCK_HOPF_SYSTEMS_HPP

#include "lck/holonomy.hpp"

namespace lck {

/// Independence certificates for the two families of Hopf curvature
/// endomorphisms at the uniform base point: the closed-form inverse pairs
/// (M, Mtilde) for the mixed-parity and odd-odd linear systems, plus direct
/// echelon ranks of the evaluated families when a curvature table is given.
struct HopfIndependenceReport {
  std::size_t n = 0;
  bool mixed_inverse_ok = false;      // system on pairs (2i-1, 2j), i < j <= n
  bool odd_inverse_ok = false;        // system on pairs (2i-1, 2j-1), i < j <= n-1
  bool mixed_symmetric = false;
  bool mixed_row_sums_ok = false;     // every row sums to n-2
  std::size_t rank_mixed = 0;         // expected C(n,2)
  std::size_t rank_odd = 0;           // expected C(n-1,2)
  std::size_t rank_union = 0;         // expected (n-1)^2
  bool ranks_checked = false;
};

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t bound) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 1; r <= bound; ++r)
    for (std::size_t s = r + 1; s <= bound; ++s) out.emplace_back(r, s);
  return out;
}

}  // namespace detail

/// Coefficient matrix of the mixed-parity dependence system: row (r,s) reads
/// -(n-2) c_rs + sum_{r<j!=s} c_rj + sum_{i<r} c_ir + sum_{s<j} c_sj
/// + sum_{r!=i<s} c_is = 0.
inline RatMat hopf_mixed_system_matrix(std::size_t n) {
  auto pairs = detail::index_pairs(n);
  std::size_t dim = pairs.size();
  auto rank_of = [&pairs](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (pairs[t].first == i && pairs[t].second == j) return t;
    throw std::logic_error("hopf systems: bad pair");
  };
  RatMat m(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    auto [r, s] = pairs[row];
    m(row, row) += Rational(-(static_cast<long>(n) - 2));
    for (std::size_t j = r + 1; j <= n; ++j)
      if (j != s) m(row, rank_of(r, j)) += Rational(1);
    for (std::size_t i = 1; i < r; ++i) m(row, rank_of(i, r)) += Rational(1);
    for (std::size_t j = s + 1; j <= n; ++j) m(row, rank_of(s, j)) += Rational(1);
    for (std::size_t i = 1; i < s; ++i)
      if (i != r) m(row, rank_of(i, s)) += Rational(1);
  }
  return m;
}

/// Closed-form inverse of the mixed-parity system matrix. With pairs as
/// vertices of the Johnson graph J(n,2), the inverse is
/// -(2n-6)/(n(n-2)) I - (n-6)/(2n(n-2)) A_shared + 2/(n(n-2)) A_disjoint;
/// the disjoint-pair coefficient is positive (a scheme computation shows
/// (M Mtilde)_AB = (n-6)c + 4b = 0 exactly for c = +2/(n(n-2))), and pairs
/// of disjoint index pairs first appear at n = 4.
inline RatMat hopf_mixed_system_inverse(std::size_t n) {
  RatMat m = hopf_mixed_system_matrix(n);
  long ln = static_cast<long>(n);
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j)
        out(i, j) = Rational(-(2 * ln - 6)) / Rational(ln * (ln - 2));
      else if (m(i, j).is_one())
        out(i, j) = Rational(-(ln - 6)) / Rational(2 * ln * (ln - 2));
      else
        out(i, j) = Rational(2) / Rational(ln * (ln - 2));
    }
  return out;
}

/// Coefficient matrix of the odd-odd dependence system over pairs with
/// indices up to n-1: row (r,s) reads
/// -(n-2) c_rs + sum_{r<j!=s} c_rj - sum_{i<r} c_ir - sum_{s<j} c_sj
/// + sum_{r!=i<s} c_is = 0.
inline RatMat hopf_odd_system_matrix(std::size_t n) {
  std::size_t bound = n - 1;
  auto pairs = detail::index_pairs(bound);
  std::size_t dim = pairs.size();
  auto rank_of = [&pairs](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if (pairs[t].first == i && pairs[t].second == j) return t;
    throw std::logic_error("hopf systems: bad pair");
  };
  RatMat m(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    auto [r, s] = pairs[row];
    m(row, row) += Rational(-(static_cast<long>(n) - 2));
    for (std::size_t j = r + 1; j <= bound; ++j)
      if (j != s) m(row, rank_of(r, j)) += Rational(1);
    for (std::size_t i = 1; i < r; ++i) m(row, rank_of(i, r)) -= Rational(1);
    for (std::size_t j = s + 1; j <= bound; ++j) m(row, rank_of(s, j)) -= Rational(1);
    for (std::size_t i = 1; i < s; ++i)
      if (i != r) m(row, rank_of(i, s)) += Rational(1);
  }
  return m;
}

/// Closed-form inverse of the odd-odd system matrix: -3/n on the diagonal and
/// -sign(M_ij)/n off it.
inline RatMat hopf_odd_system_inverse(std::size_t n) {
  RatMat m = hopf_odd_system_matrix(n);
  long ln = static_cast<long>(n);
  RatMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j)
        out(i, j) = Rational(-3) / Rational(ln);
      else if (m(i, j).is_zero())
        out(i, j) = Rational(0);
      else
        out(i, j) = -(m(i, j) / Rational(ln));
    }
  return out;
}

/// Verifies M * Mtilde = I for both systems (n >= 3) and, when a Bismut
/// curvature table over the sphere ring is supplied, the direct echelon
/// ranks of the two evaluated curvature families and of their union.
inline HopfIndependenceReport hopf_independence_systems(std::size_t n,
                                                        const CurvatureTable<SpherePoly>* rb = nullptr) {
  if (n < 3) throw std::invalid_argument("hopf_independence_systems: n must be >= 3");
  HopfIndependenceReport rep;
  rep.n = n;

  RatMat m1 = hopf_mixed_system_matrix(n);
  rep.mixed_inverse_ok = m1 * hopf_mixed_system_inverse(n) == RatMat::identity(m1.rows());
  rep.mixed_symmetric = m1 == m1.transpose();
  rep.mixed_row_sums_ok = true;
  for (std::size_t r = 0; r < m1.rows(); ++r) {
    Rational sum(0);
    for (std::size_t c = 0; c < m1.cols(); ++c) sum += m1(r, c);
    if (sum != Rational(static_cast<long>(n) - 2)) rep.mixed_row_sums_ok = false;
  }

  RatMat m2 = hopf_odd_system_matrix(n);
  rep.odd_inverse_ok = m2 * hopf_odd_system_inverse(n) == RatMat::identity(m2.rows());

  if (rb != nullptr) {
    std::size_t m = rb->m;
    MatrixSubspace<Quadratic> mixed(m), odd(m), both(m);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        // pair (U_{2i-1}, U_{2j}) -> 0-based frame indices (2i-2, 2j-1)
        Mat<Quadratic> e = evaluate_matrix_uniform(rb->at_pair(2 * i - 2, 2 * j - 1), m);
        mixed.insert(e);
        both.insert(e);
      }
    for (std::size_t i = 1; i + 1 <= n - 1; ++i)
      for (std::size_t j = i + 1; j <= n - 1; ++j) {
        Mat<Quadratic> e = evaluate_matrix_uniform(rb->at_pair(2 * i - 2, 2 * j - 2), m);
        odd.insert(e);
        both.insert(e);
      }
    rep.rank_mixed = mixed.dim();
    rep.rank_odd = odd.dim();
    rep.rank_union = both.dim();
    rep.ranks_checked = true;
  }
  return rep;
}

}  // namespace lck

#endif
