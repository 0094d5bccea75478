#include "lck/matrix.hpp"

namespace lck {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMat inverse(RatMat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Rational(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(RatMat a) { return rref(a).size(); }

std::vector<std::vector<Rational>> kernel_basis(const RatMat& a) {
  RatMat w = a;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t freec = 0; freec < a.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[freec] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(RatMat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: square matrix required");
  std::size_t n = a.rows();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Rational inv = Rational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

bool is_positive_definite(const RatMat& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    RatMat lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
    if (det(lead).sign() <= 0) return false;
  }
  return true;
}

bool solve_linear(const RatMat& a, const std::vector<Rational>& b, std::vector<Rational>& x,
                  bool& unique) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return false;  // inconsistent
  unique = pivots.size() == a.cols();
  x.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return true;
}

}  // namespace lck
