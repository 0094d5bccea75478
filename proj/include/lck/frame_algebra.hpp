#ifndef LCK_FRAME_ALGEBRA_HPP
#define LCK_FRAME_ALGEBRA_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "lck/matrix.hpp"
#include "lck/rational.hpp"
#include "lck/sphere_poly.hpp"

namespace lck {

/// Coefficient column of a vector field over a global frame.
template <typename R>
using VectorField = std::vector<R>;

template <typename R>
bool field_is_zero(const VectorField<R>& x) {
  for (const auto& c : x)
    if (!is_zero(c)) return false;
  return true;
}

template <typename R>
VectorField<R> zero_field(std::size_t m) {
  return VectorField<R>(m, R(0));
}

template <typename R>
VectorField<R> unit_field(std::size_t i, std::size_t m) {
  VectorField<R> v(m, R(0));
  v[i] = R(1);
  return v;
}

template <typename R>
void field_add_scaled(VectorField<R>& dst, const R& c, const VectorField<R>& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += c * src[k];
}

template <typename R>
VectorField<R> field_sub(VectorField<R> a, const VectorField<R>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <typename R>
VectorField<R> field_scaled(VectorField<R> a, const R& c) {
  for (auto& x : a) x = x * c;
  return a;
}

/// g(X, Y) over the ring with a rational metric.
template <typename R>
R metric_pairing(const RatMat& g, const VectorField<R>& x, const VectorField<R>& y) {
  R acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (g(i, j).is_zero() || is_zero(y[j])) continue;
      acc += x[i] * (y[j] * R(g(i, j)));
    }
  }
  return acc;
}

/// Image of a vector field under a rational endomorphism (columns = images).
template <typename R>
VectorField<R> apply_endo(const RatMat& a, const VectorField<R>& x) {
  VectorField<R> out(a.rows(), R(0));
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (is_zero(x[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) out[i] += x[j] * R(a(i, j));
  }
  return out;
}

struct JacobiReport {
  bool zero = true;
  std::string worst;  // description of a nonzero cyclic sum, if any
};

/// A global frame e_1..e_m with bracket coefficients over an exact scalar
/// ring, together with the ring's frame derivation rule. For the constants
/// ring every coordinate function is constant and the derivation vanishes;
/// for the sphere-polynomial ring the frame acts by
/// e_i(x_j) = delta_ij - x_i x_j.
template <typename R>
class FrameAlgebra {
public:
  explicit FrameAlgebra(std::size_t m)
      : m_(m), f_(m, std::vector<VectorField<R>>(m, zero_field<R>(m))) {}

  std::size_t dim() const { return m_; }

  /// Sets [e_i, e_j] component k and mirrors the antisymmetric entry.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, R coeff) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) throw std::invalid_argument("FrameAlgebra: [e_i, e_i] must stay zero");
    f_[j][i][k] = -coeff;
    f_[i][j][k] = std::move(coeff);
  }

  /// Raw assignment without mirroring; used when loading untrusted tables
  /// whose antisymmetry still has to be checked.
  void set_bracket_raw(std::size_t i, std::size_t j, std::size_t k, R coeff) {
    check_index(i);
    check_index(j);
    check_index(k);
    f_[i][j][k] = std::move(coeff);
  }

  const VectorField<R>& bracket_of(std::size_t i, std::size_t j) const { return f_[i][j]; }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t k = 0; k < m_; ++k) {
          R sum = f_[i][j][k] + f_[j][i][k];
          if (!is_zero(sum)) return false;
        }
    return true;
  }

  /// Derivation of a coordinate function along frame field e_i.
  R derive(std::size_t i, const R& fn) const {
    check_index(i);
    if constexpr (std::is_same_v<R, SpherePoly>) {
      return frame_derivation(i, fn, m_);
    } else {
      (void)fn;
      return R(0);
    }
  }

  /// X(f) for a vector field X with ring coefficients.
  R apply(const VectorField<R>& x, const R& fn) const {
    R acc(0);
    if constexpr (std::is_same_v<R, SpherePoly>) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (is_zero(x[i])) continue;
        acc += x[i] * derive(i, fn);
      }
    } else {
      (void)x;
      (void)fn;
    }
    return acc;
  }

  /// Lie bracket of vector fields with ring coefficients:
  /// [X, Y]_k = sum_ij X_i Y_j f_ij^k + X(Y_k) - Y(X_k).
  VectorField<R> bracket(const VectorField<R>& x, const VectorField<R>& y) const {
    if (x.size() != m_ || y.size() != m_) throw std::invalid_argument("bracket: wrong frame size");
    VectorField<R> out = zero_field<R>(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < m_; ++j) {
        if (i == j || is_zero(y[j])) continue;
        R c = x[i] * y[j];
        field_add_scaled(out, c, f_[i][j]);
      }
    }
    if constexpr (std::is_same_v<R, SpherePoly>) {
      for (std::size_t k = 0; k < m_; ++k) {
        out[k] += apply(x, y[k]);
        out[k] -= apply(y, x[k]);
      }
    }
    return out;
  }

  /// Cyclic Jacobi sum over all frame triples, derivation terms included.
  JacobiReport jacobi_defect() const {
    JacobiReport rep;
    for (std::size_t i = 0; i < m_ && rep.zero; ++i)
      for (std::size_t j = i + 1; j < m_ && rep.zero; ++j)
        for (std::size_t k = j + 1; k < m_ && rep.zero; ++k) {
          VectorField<R> sum = bracket(f_[i][j], unit_field<R>(k, m_));
          VectorField<R> t2 = bracket(f_[j][k], unit_field<R>(i, m_));
          VectorField<R> t3 = bracket(f_[k][i], unit_field<R>(j, m_));
          for (std::size_t c = 0; c < m_; ++c) sum[c] += t2[c] + t3[c];
          if (!field_is_zero(sum)) {
            rep.zero = false;
            std::ostringstream os;
            os << "triple (" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
            rep.worst = os.str();
          }
        }
    return rep;
  }

  /// trace(ad_x) for every frame field; all zero iff unimodular.
  std::vector<R> adjoint_traces() const {
    std::vector<R> tr(m_, R(0));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) tr[i] += f_[i][k][k];
    return tr;
  }

private:
  void check_index(std::size_t i) const {
    if (i >= m_) throw std::out_of_range("FrameAlgebra: index out of range");
  }

  std::size_t m_;
  std::vector<std::vector<VectorField<R>>> f_;  // f_[i][j] = [e_i, e_j]
};

}  // namespace lck

#endif
