#ifndef LCK_HERMITIAN_HPP
#define LCK_HERMITIAN_HPP

#include <optional>
#include <sstream>
#include <string>

#include "lck/kform.hpp"

namespace lck {

/// Metric and complex structure on a framed geometry. Both matrices have
/// rational entries even over the sphere-polynomial ring; this keeps metric
/// inversion exact over the base field.
struct HermitianStructure {
  RatMat g;
  RatMat J;

  std::size_t dim() const { return g.rows(); }

  bool metric_symmetric() const { return g == g.transpose(); }
  bool metric_positive_definite() const { return is_positive_definite(g); }
  bool complex_structure_squares_to_minus_one() const {
    return J * J == RatMat::identity(dim()).scale(Rational(-1));
  }
  bool complex_structure_orthogonal() const { return J.transpose() * g * J == g; }

  /// Throws std::invalid_argument naming the violated axiom.
  void check() const;
};

/// omega(e_i, e_j) = g(J e_i, e_j) as a 2-form over the requested ring.
template <typename R>
KForm<R> fundamental_form(const HermitianStructure& h) {
  std::size_t m = h.dim();
  RatMat w = h.J.transpose() * h.g;
  KForm<R> omega(m, 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (w(i, j).is_zero()) continue;
      omega.set_at({i, j}, R(w(i, j)));
    }
  return omega;
}

/// Lee form together with its metric-dual data.
template <typename R>
struct LeeData {
  KForm<R> theta;      // degree 1
  VectorField<R> A;    // g-dual of theta
  VectorField<R> JA;   // J applied to A
  R norm_sq;           // |A|^2 = theta(A)
};

template <typename R>
std::vector<R> oneform_coefficients(const KForm<R>& theta) {
  std::vector<R> v(theta.frame_dim());
  for (std::size_t j = 0; j < v.size(); ++j) {
    std::size_t idx = j;
    v[j] = theta.at_sorted(&idx);
  }
  return v;
}

/// (J theta)(X) = -theta(J X); coefficients of the twisted 1-form.
template <typename R>
KForm<R> j_twist(const KForm<R>& theta, const RatMat& J) {
  std::size_t m = theta.frame_dim();
  KForm<R> out(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    R acc(0);
    for (std::size_t a = 0; a < m; ++a) {
      if (J(a, j).is_zero()) continue;
      std::size_t idx = a;
      acc += theta.at_sorted(&idx) * R(J(a, j));
    }
    std::size_t idx = j;
    out.at_sorted(&idx) = -acc;
  }
  return out;
}

/// Lee data assembled from theta: A = g^{-1} theta, JA = J A, |A|^2 = theta(A).
template <typename R>
LeeData<R> lee_data_from_theta(const HermitianStructure& h, const KForm<R>& theta) {
  LeeData<R> lee;
  lee.theta = theta;
  RatMat ginv = inverse(h.g);
  std::vector<R> tv = oneform_coefficients(theta);
  lee.A = zero_field<R>(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (!ginv(i, j).is_zero()) lee.A[i] += tv[j] * R(ginv(i, j));
  lee.JA = apply_endo(h.J, lee.A);
  lee.norm_sq = R(0);
  for (std::size_t j = 0; j < h.dim(); ++j) lee.norm_sq += tv[j] * lee.A[j];
  return lee;
}

enum class LeeStatus { Lck, Kahler, NotLck, NotClosed };

template <typename R>
struct LeeSolveResult {
  LeeStatus status = LeeStatus::NotLck;
  std::optional<LeeData<R>> lee;
};

/// Solves d omega = theta ^ omega for a constant-coefficient theta. Only
/// meaningful over the constants ring; uniqueness holds because wedging with
/// omega is injective on 1-forms in dimension >= 4.
LeeSolveResult<Rational> solve_lee_form(const FrameAlgebra<Rational>& fa,
                                        const HermitianStructure& h);

/// Checks d omega = theta ^ omega and d theta = 0 identically over the ring.
template <typename R>
bool verify_lck(const FrameAlgebra<R>& fa, const HermitianStructure& h, const KForm<R>& theta) {
  KForm<R> omega = fundamental_form<R>(h);
  KForm<R> domega = exterior_derivative(fa, omega);
  if (!(domega - wedge(theta, omega)).is_zero_form()) return false;
  return exterior_derivative(fa, theta).is_zero_form();
}

struct NijenhuisReport {
  bool zero = true;
  std::string worst;
};

/// Nijenhuis tensor N(X,Y) = [JX,JY] - [X,Y] - J([JX,Y] + [X,JY]) on all
/// frame pairs; zero iff J is integrable.
template <typename R>
NijenhuisReport nijenhuis(const FrameAlgebra<R>& fa, const RatMat& J) {
  NijenhuisReport rep;
  std::size_t m = fa.dim();
  for (std::size_t i = 0; i < m && rep.zero; ++i)
    for (std::size_t j = i + 1; j < m && rep.zero; ++j) {
      VectorField<R> ei = unit_field<R>(i, m), ej = unit_field<R>(j, m);
      VectorField<R> ji = apply_endo(J, ei), jj = apply_endo(J, ej);
      VectorField<R> n = fa.bracket(ji, jj);
      n = field_sub(std::move(n), fa.bracket(ei, ej));
      VectorField<R> mixed = fa.bracket(ji, ej);
      VectorField<R> mixed2 = fa.bracket(ei, jj);
      for (std::size_t c = 0; c < m; ++c) mixed[c] += mixed2[c];
      n = field_sub(std::move(n), apply_endo(J, mixed));
      if (!field_is_zero(n)) {
        rep.zero = false;
        std::ostringstream os;
        os << "pair (" << i + 1 << "," << j + 1 << ")";
        rep.worst = os.str();
      }
    }
  return rep;
}

/// Exact basis of the g-orthogonal complement of span{A, JA}; constants ring
/// only. Throws std::domain_error for degenerate Lee data.
std::vector<VectorField<Rational>> distribution_basis(const HermitianStructure& h,
                                                      const LeeData<Rational>& lee);

}  // namespace lck

#endif
