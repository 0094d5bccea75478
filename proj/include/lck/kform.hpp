#ifndef LCK_KFORM_HPP
#define LCK_KFORM_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "lck/frame_algebra.hpp"

namespace lck {

namespace detail {

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

/// Colex rank of a strictly increasing tuple.
inline std::size_t comb_rank(const std::size_t* idx, std::size_t k) {
  std::size_t r = 0;
  for (std::size_t t = 0; t < k; ++t) r += binom(idx[t], t + 1);
  return r;
}

/// Sorts idx in place, returns the permutation sign, or 0 on repeats.
inline int sort_sign(std::size_t* idx, std::size_t k) {
  int sign = 1;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) {
        std::swap(idx[a], idx[b]);
        sign = -sign;
      }
    }
  return sign;
}

/// All strictly increasing k-tuples from {0..m-1}.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (std::size_t t = 0; t < k; ++t) cur[t] = t;
  while (true) {
    out.push_back(cur);
    std::size_t t = k;
    while (t-- > 0) {
      if (cur[t] + (k - t) < m) {
        ++cur[t];
        for (std::size_t s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
        break;
      }
      if (t == 0) return out;
    }
  }
}

}  // namespace detail

/// Fully antisymmetric k-linear form on the frame, 0 <= k <= 4. Coefficients
/// are stored on strictly increasing index tuples; access with arbitrary
/// index order resolves the permutation sign.
template <typename R>
class KForm {
public:
  KForm() = default;
  KForm(std::size_t m, std::size_t k) : m_(m), k_(k) {
    if (k > 4) throw std::invalid_argument("KForm: degree above 4 is unsupported");
    v_.assign(detail::binom(m, k), R(0));
  }

  std::size_t frame_dim() const { return m_; }
  std::size_t degree() const { return k_; }
  std::size_t coefficient_count() const { return v_.size(); }

  const R& at_sorted(const std::size_t* idx) const { return v_[detail::comb_rank(idx, k_)]; }
  R& at_sorted(const std::size_t* idx) { return v_[detail::comb_rank(idx, k_)]; }

  /// Value on arbitrary frame indices (signed; zero on repeated indices).
  R at(std::initializer_list<std::size_t> idx) const {
    if (idx.size() != k_) throw std::invalid_argument("KForm: wrong index count");
    std::array<std::size_t, 4> buf{};
    std::size_t t = 0;
    for (std::size_t i : idx) buf[t++] = i;
    int sign = detail::sort_sign(buf.data(), k_);
    if (sign == 0) return R(0);
    const R& base = at_sorted(buf.data());
    return sign > 0 ? base : -base;
  }

  /// Adds c to the coefficient of the (signed) tuple.
  void add_at(std::initializer_list<std::size_t> idx, const R& c) {
    if (idx.size() != k_) throw std::invalid_argument("KForm: wrong index count");
    std::array<std::size_t, 4> buf{};
    std::size_t t = 0;
    for (std::size_t i : idx) buf[t++] = i;
    int sign = detail::sort_sign(buf.data(), k_);
    if (sign == 0) throw std::invalid_argument("KForm: repeated index in assignment");
    R& slot = at_sorted(buf.data());
    slot += (sign > 0 ? c : -c);
  }

  void set_at(std::initializer_list<std::size_t> idx, const R& c) {
    if (idx.size() != k_) throw std::invalid_argument("KForm: wrong index count");
    std::array<std::size_t, 4> buf{};
    std::size_t t = 0;
    for (std::size_t i : idx) buf[t++] = i;
    int sign = detail::sort_sign(buf.data(), k_);
    if (sign == 0) throw std::invalid_argument("KForm: repeated index in assignment");
    at_sorted(buf.data()) = (sign > 0 ? c : -c);
  }

  /// Multilinear evaluation on vector fields (k arguments).
  R eval(const std::vector<VectorField<R>>& args) const {
    if (args.size() != k_) throw std::invalid_argument("KForm: wrong argument count");
    R acc(0);
    for (const auto& tuple : detail::combinations(m_, k_)) {
      const R& coeff = v_[detail::comb_rank(tuple.data(), k_)];
      if (is_zero(coeff)) continue;
      // alternating sum over argument permutations restricted to this tuple
      acc += coeff * alternating_minor(args, tuple);
    }
    return acc;
  }

  /// Contraction in the first slot with a ring vector field.
  KForm contract(const VectorField<R>& x) const {
    if (k_ == 0) throw std::invalid_argument("KForm: cannot contract a 0-form");
    KForm out(m_, k_ - 1);
    for (const auto& tuple : detail::combinations(m_, k_ - 1)) {
      R acc(0);
      for (std::size_t a = 0; a < m_; ++a) {
        if (is_zero(x[a])) continue;
        std::array<std::size_t, 4> buf{};
        buf[0] = a;
        for (std::size_t t = 0; t + 1 < k_; ++t) buf[t + 1] = tuple[t];
        int sign = detail::sort_sign(buf.data(), k_);
        if (sign == 0) continue;
        const R& c = at_sorted(buf.data());
        if (is_zero(c)) continue;
        acc += x[a] * (sign > 0 ? c : -c);
      }
      out.v_[detail::comb_rank(tuple.data(), k_ - 1)] = std::move(acc);
    }
    return out;
  }

  KForm& operator+=(const KForm& o) {
    check_shape(o);
    for (std::size_t t = 0; t < v_.size(); ++t) v_[t] += o.v_[t];
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    check_shape(o);
    for (std::size_t t = 0; t < v_.size(); ++t) v_[t] -= o.v_[t];
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  KForm operator-() const {
    KForm r = *this;
    for (auto& c : r.v_) c = -c;
    return r;
  }
  template <typename S>
  KForm& scale(const S& s) {
    for (auto& c : v_) c = c * s;
    return *this;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.m_ == b.m_ && a.k_ == b.k_ && a.v_ == b.v_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  bool is_zero_form() const {
    for (const auto& c : v_)
      if (!is_zero(c)) return false;
    return true;
  }

private:
  void check_shape(const KForm& o) const {
    if (m_ != o.m_ || k_ != o.k_) throw std::invalid_argument("KForm: shape mismatch");
  }

  R alternating_minor(const std::vector<VectorField<R>>& args,
                      const std::vector<std::size_t>& tuple) const {
    // det of the k x k matrix (args[a])_{tuple[b]} by direct expansion
    std::array<std::size_t, 4> perm{};
    for (std::size_t t = 0; t < k_; ++t) perm[t] = t;
    R acc(0);
    // iterate permutations of 0..k-1 (k <= 4: at most 24)
    std::vector<std::size_t> p(perm.begin(), perm.begin() + k_);
    do {
      int sign = 1;
      for (std::size_t a = 0; a < k_; ++a)
        for (std::size_t b = a + 1; b < k_; ++b)
          if (p[a] > p[b]) sign = -sign;
      R prod(1);
      bool zero = false;
      for (std::size_t t = 0; t < k_; ++t) {
        const R& entry = args[t][tuple[p[t]]];
        if (is_zero(entry)) {
          zero = true;
          break;
        }
        prod *= entry;
      }
      if (!zero) acc += (sign > 0 ? prod : -prod);
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
  }

  std::size_t m_ = 0, k_ = 0;
  std::vector<R> v_;
};

/// Wedge product with the shuffle convention and no factorial weights:
/// (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X) for 1-forms, and for a 1-form t and
/// a 2-form w, (t ^ w)(X, Y, Z) = t(X) w(Y,Z) + t(Y) w(Z,X) + t(Z) w(X,Y).
template <typename R>
KForm<R> wedge(const KForm<R>& a, const KForm<R>& b) {
  std::size_t p = a.degree(), q = b.degree(), m = a.frame_dim();
  if (m != b.frame_dim()) throw std::invalid_argument("wedge: frame size mismatch");
  if (p + q > 4) throw std::invalid_argument("wedge: resulting degree above 4");
  KForm<R> out(m, p + q);
  auto splits = detail::combinations(p + q, p);
  for (const auto& tuple : detail::combinations(m, p + q)) {
    R acc(0);
    for (const auto& sel : splits) {
      std::array<std::size_t, 4> left{}, right{};
      std::array<bool, 4> used{};
      int sign = 1;
      for (std::size_t t = 0; t < p; ++t) {
        left[t] = tuple[sel[t]];
        used[sel[t]] = true;
        // inversions contributed by moving this slot to the front block
        sign = (sel[t] - t) % 2 == 0 ? sign : -sign;
      }
      std::size_t r = 0;
      for (std::size_t t = 0; t < p + q; ++t)
        if (!used[t]) right[r++] = tuple[t];
      const R& va = a.at_sorted(left.data());
      if (is_zero(va)) continue;
      const R& vb = b.at_sorted(right.data());
      if (is_zero(vb)) continue;
      R prod = va * vb;
      acc += (sign > 0 ? prod : -prod);
    }
    out.at_sorted(tuple.data()) = std::move(acc);
  }
  return out;
}

/// Frame exterior derivative:
/// (d eta)(e_i0, .., e_ik) = sum_a (-1)^a e_ia(eta(..)) +
///                           sum_{a<b} (-1)^{a+b} eta([e_ia, e_ib], ..).
template <typename R>
KForm<R> exterior_derivative(const FrameAlgebra<R>& fa, const KForm<R>& eta) {
  if (eta.degree() > 3) throw std::invalid_argument("exterior_derivative: degree above 3");
  std::size_t m = fa.dim(), k = eta.degree();
  KForm<R> out(m, k + 1);
  for (const auto& tuple : detail::combinations(m, k + 1)) {
    R acc(0);
    // term 1: derivations of the omitted-slot coefficients
    for (std::size_t a = 0; a <= k; ++a) {
      std::array<std::size_t, 4> rest{};
      std::size_t r = 0;
      for (std::size_t t = 0; t <= k; ++t)
        if (t != a) rest[r++] = tuple[t];
      R val = fa.derive(tuple[a], eta.at_sorted(rest.data()));
      if (!is_zero(val)) acc += (a % 2 == 0 ? val : -val);
    }
    // term 2: brackets inserted in the first slot
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = a + 1; b <= k; ++b) {
        const VectorField<R>& br = fa.bracket_of(tuple[a], tuple[b]);
        std::array<std::size_t, 4> rest{};
        std::size_t r = 1;
        for (std::size_t t = 0; t <= k; ++t)
          if (t != a && t != b) rest[r++] = tuple[t];
        R inner(0);
        for (std::size_t c = 0; c < m; ++c) {
          if (is_zero(br[c])) continue;
          std::array<std::size_t, 4> idx = rest;
          idx[0] = c;
          int sign = detail::sort_sign(idx.data(), k);
          if (sign == 0) continue;
          const R& coeff = eta.at_sorted(idx.data());
          if (is_zero(coeff)) continue;
          inner += br[c] * (sign > 0 ? coeff : -coeff);
        }
        if (!is_zero(inner)) acc += ((a + b) % 2 == 0 ? inner : -inner);
      }
    out.at_sorted(tuple.data()) = std::move(acc);
  }
  return out;
}

/// eta(P., P., ...) for a rational endomorphism P; used for J-twists such as
/// the Bismut torsion form d-omega(J., J., J.).
template <typename R>
KForm<R> pull_through(const KForm<R>& eta, const RatMat& p) {
  std::size_t m = eta.frame_dim(), k = eta.degree();
  KForm<R> out(m, k);
  auto tuples = detail::combinations(m, k);
  for (const auto& target : tuples) {
    R acc(0);
    for (const auto& source : tuples) {
      const R& coeff = eta.at_sorted(source.data());
      if (is_zero(coeff)) continue;
      // minor determinant det(P[source, target]) over the rationals
      Rational minor(0);
      std::vector<std::size_t> perm(k);
      for (std::size_t t = 0; t < k; ++t) perm[t] = t;
      do {
        int sign = 1;
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b)
            if (perm[a] > perm[b]) sign = -sign;
        Rational prod(1);
        bool zero = false;
        for (std::size_t t = 0; t < k; ++t) {
          const Rational& entry = p(source[t], target[perm[t]]);
          if (entry.is_zero()) {
            zero = true;
            break;
          }
          prod *= entry;
        }
        if (!zero) minor += (sign > 0 ? prod : -prod);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!minor.is_zero()) acc += coeff * R(minor);
    }
    out.at_sorted(target.data()) = std::move(acc);
  }
  return out;
}

}  // namespace lck

#endif
