#ifndef LCK_MATRIX_HPP
#define LCK_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lck/rational.hpp"

namespace lck {

/// Dense matrix over an exact scalar ring.
template <typename T>
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
    return I;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  template <typename S>
  Mat& scale(const S& s) {
    for (auto& x : e_) x = x * s;
    return *this;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  bool all_zero() const {
    for (const auto& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Entrywise conversion from another scalar type.
  template <typename U>
  static Mat lift(const Mat<U>& src) {
    Mat r(src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
      for (std::size_t j = 0; j < src.cols(); ++j) r(i, j) = T(src(i, j));
    return r;
  }

private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RatMat = Mat<Rational>;

/// Matrix-vector product.
template <typename T, typename S>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<S>& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out[i] += m(i, j) * v[j];
  return out;
}

/// Exact inverse; throws std::domain_error when singular.
RatMat inverse(RatMat a);

/// Row rank over the rationals.
std::size_t rank(RatMat a);

/// Basis of the right kernel {v : a v = 0}.
std::vector<std::vector<Rational>> kernel_basis(const RatMat& a);

Rational det(RatMat a);

/// Leading principal minors all positive.
bool is_positive_definite(const RatMat& a);

/// Gaussian solve of a x = b. Returns false when inconsistent; when the
/// system is consistent and has a unique solution, fills x and sets unique.
bool solve_linear(const RatMat& a, const std::vector<Rational>& b, std::vector<Rational>& x,
                  bool& unique);

}  // namespace lck

#endif
