#include "lck/hermitian.hpp"

#include <stdexcept>

namespace lck {

void HermitianStructure::check() const {
  if (g.rows() != g.cols() || J.rows() != J.cols() || g.rows() != J.rows())
    throw std::invalid_argument("HermitianStructure: shape mismatch");
  if (!metric_symmetric()) throw std::invalid_argument("HermitianStructure: metric not symmetric");
  if (!metric_positive_definite())
    throw std::invalid_argument("HermitianStructure: metric not positive definite");
  if (!complex_structure_squares_to_minus_one())
    throw std::invalid_argument("HermitianStructure: J^2 != -I");
  if (!complex_structure_orthogonal())
    throw std::invalid_argument("HermitianStructure: J not g-orthogonal");
}

LeeSolveResult<Rational> solve_lee_form(const FrameAlgebra<Rational>& fa,
                                        const HermitianStructure& h) {
  std::size_t m = fa.dim();
  if (m < 4) throw std::invalid_argument("solve_lee_form: frame dimension must be >= 4");
  KForm<Rational> omega = fundamental_form<Rational>(h);
  KForm<Rational> domega = exterior_derivative(fa, omega);

  // theta ^ omega (e_i, e_j, e_k) = theta_i w_jk - theta_j w_ik + theta_k w_ij
  auto triples = detail::combinations(m, 3);
  RatMat w(triples.size(), m);
  std::vector<Rational> rhs(triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& tr = triples[t];
    w(t, tr[0]) += omega.at({tr[1], tr[2]});
    w(t, tr[1]) -= omega.at({tr[0], tr[2]});
    w(t, tr[2]) += omega.at({tr[0], tr[1]});
    rhs[t] = domega.at_sorted(tr.data());
  }

  LeeSolveResult<Rational> res;
  std::vector<Rational> theta_coeffs;
  bool unique = false;
  if (!solve_linear(w, rhs, theta_coeffs, unique)) {
    res.status = LeeStatus::NotLck;
    return res;
  }
  if (!unique) throw std::logic_error("solve_lee_form: wedge with omega is degenerate");

  KForm<Rational> theta(m, 1);
  bool zero = true;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t idx = j;
    theta.at_sorted(&idx) = theta_coeffs[j];
    if (!theta_coeffs[j].is_zero()) zero = false;
  }
  if (!exterior_derivative(fa, theta).is_zero_form()) {
    res.status = LeeStatus::NotClosed;
    return res;
  }
  res.status = zero ? LeeStatus::Kahler : LeeStatus::Lck;
  res.lee = lee_data_from_theta(h, theta);
  return res;
}

std::vector<VectorField<Rational>> distribution_basis(const HermitianStructure& h,
                                                      const LeeData<Rational>& lee) {
  if (lee.norm_sq.is_zero()) throw std::domain_error("distribution_basis: degenerate Lee data");
  std::size_t m = h.dim();
  // X in D iff theta(X) = 0 and (J theta)(X) = 0
  RatMat rows(2, m);
  std::vector<Rational> theta = oneform_coefficients(lee.theta);
  KForm<Rational> jt = j_twist(lee.theta, h.J);
  std::vector<Rational> jtheta = oneform_coefficients(jt);
  for (std::size_t j = 0; j < m; ++j) {
    rows(0, j) = theta[j];
    rows(1, j) = jtheta[j];
  }
  auto basis = kernel_basis(rows);
  if (basis.size() != m - 2)
    throw std::logic_error("distribution_basis: unexpected complement dimension");
  return basis;
}

}  // namespace lck
