#ifndef LCK_HOLONOMY_HPP
#define LCK_HOLONOMY_HPP

#include <cstdlib>
#include <deque>
#include <optional>

#include "lck/connection.hpp"
#include "lck/quadratic.hpp"

namespace lck {

/// Subspace of m x m matrices over an exact field, maintained as a reduced
/// row echelon basis of flattened matrices. The echelon form is canonical,
/// so spans compare independently of the insertion order of generators.
template <typename F>
class MatrixSubspace {
public:
  explicit MatrixSubspace(std::size_t m) : m_(m) {}

  std::size_t matrix_size() const { return m_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds the span of the matrix; returns true when the dimension grew.
  bool insert(const Mat<F>& mat) {
    std::vector<F> v = flatten(mat);
    reduce_against_basis(v);
    std::size_t p = leading_index(v);
    if (p == v.size()) return false;
    F inv = F(1) / v[p];
    for (auto& x : v) x = x * inv;
    // keep full reduction: clear column p from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F& f = rows_[r][p];
      if (is_zero(f)) continue;
      F c = f;
      for (std::size_t t = p; t < v.size(); ++t) rows_[r][t] -= c * v[t];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  bool contains(const Mat<F>& mat) const {
    std::vector<F> v = flatten(mat);
    reduce_against_basis(v);
    return leading_index(v) == v.size();
  }

  bool same_span(const MatrixSubspace& o) const {
    return m_ == o.m_ && pivots_ == o.pivots_ && rows_ == o.rows_;
  }

  std::vector<Mat<F>> basis() const {
    std::vector<Mat<F>> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
      Mat<F> mat(m_, m_);
      for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < m_; ++j) mat(i, j) = row[i * m_ + j];
      out.push_back(std::move(mat));
    }
    return out;
  }

private:
  std::vector<F> flatten(const Mat<F>& mat) const {
    if (mat.rows() != m_ || mat.cols() != m_)
      throw std::invalid_argument("MatrixSubspace: wrong matrix size");
    std::vector<F> v(m_ * m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) v[i * m_ + j] = mat(i, j);
    return v;
  }

  static std::size_t leading_index(const std::vector<F>& v) {
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!is_zero(v[t])) return t;
    return v.size();
  }

  void reduce_against_basis(std::vector<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F& f = v[pivots_[r]];
      if (is_zero(f)) continue;
      F c = f;
      for (std::size_t t = pivots_[r]; t < v.size(); ++t) v[t] -= c * rows_[r][t];
    }
  }

  std::size_t m_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

struct ClosureOptions {
  /// Maximum number of independent generators processed; 0 means unlimited.
  /// The LCK_CLOSURE_LIMIT environment variable, when set, provides the
  /// default.
  std::size_t max_generators = 0;

  static ClosureOptions from_environment() {
    ClosureOptions opt;
    if (const char* env = std::getenv("LCK_CLOSURE_LIMIT")) opt.max_generators = std::strtoul(env, nullptr, 10);
    return opt;
  }
};

/// Smallest subspace containing all curvature endomorphisms and closed under
/// commutators with every left-multiplication operator nabla_{e_i}, plus
/// internal commutators (conservative: redundant but never wrong for the
/// smallest such subalgebra). Fixed-point worklist; terminates because the
/// dimension is bounded by m^2.
inline MatrixSubspace<Rational> ambrose_singer_closure(const ConnectionTable<Rational>& nabla,
                                                       const CurvatureTable<Rational>& rb,
                                                       ClosureOptions opt = ClosureOptions::from_environment()) {
  std::size_t m = nabla.m;
  MatrixSubspace<Rational> span(m);
  std::vector<RatMat> left_ops;
  left_ops.reserve(m);
  for (std::size_t i = 0; i < m; ++i) left_ops.push_back(nabla.op_matrix(i));

  std::vector<RatMat> gens;
  std::deque<RatMat> work;
  auto offer = [&](const RatMat& cand) {
    if (cand.all_zero()) return;
    if (span.insert(cand)) {
      gens.push_back(cand);
      work.push_back(cand);
    }
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) offer(rb.at_pair(i, j));

  std::size_t processed = 0;
  while (!work.empty()) {
    if (opt.max_generators != 0 && processed >= opt.max_generators)
      throw std::runtime_error("ambrose_singer_closure: generator limit exceeded");
    RatMat g = std::move(work.front());
    work.pop_front();
    ++processed;
    for (const auto& L : left_ops) offer(L * g - g * L);
    // internal commutators against every generator seen so far
    std::size_t count = gens.size();
    for (std::size_t t = 0; t < count; ++t) offer(gens[t] * g - g * gens[t]);
  }
  return span;
}

/// Span over Q(sqrt(m)) of the curvature endomorphisms evaluated at the
/// uniform base point x_j = 1/sqrt(m). This realizes the curvature lower
/// bound for the holonomy algebra; combined with an upper bound a dimension
/// match certifies equality.
inline MatrixSubspace<Quadratic> curvature_span_at_point(const CurvatureTable<SpherePoly>& rb) {
  std::size_t m = rb.m;
  MatrixSubspace<Quadratic> span(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mat<Quadratic> mat(m, m);
      const Mat<SpherePoly>& src = rb.at_pair(i, j);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) mat(r, c) = evaluate_uniform(src(r, c), m);
      if (!mat.all_zero()) span.insert(mat);
    }
  return span;
}

/// Evaluation of a ring matrix or vector at the uniform point.
inline Mat<Quadratic> evaluate_matrix_uniform(const Mat<SpherePoly>& src, std::size_t m) {
  Mat<Quadratic> out(src.rows(), src.cols());
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) out(r, c) = evaluate_uniform(src(r, c), m);
  return out;
}

inline std::vector<Quadratic> evaluate_field_uniform(const VectorField<SpherePoly>& src,
                                                     std::size_t m) {
  std::vector<Quadratic> out(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) out[k] = evaluate_uniform(src[k], m);
  return out;
}

/// Structural flags of a computed holonomy span; recomputed from the basis
/// on every call, never cached.
struct ClosureReport {
  std::size_t dimension = 0;
  bool skew_wrt_metric = true;
  bool commutes_with_complex_structure = true;
  bool annihilates_lee_vector = true;
  bool annihilates_antilee_vector = true;
  bool inside_special_unitary = true;  // trace(J b) = 0 for every basis element
  bool contains_phi = false;
};

template <typename F>
ClosureReport classify(const MatrixSubspace<F>& span, const RatMat& g, const RatMat& j,
                       const std::vector<F>& lee_vec, const std::vector<F>& antilee_vec,
                       const Mat<F>* phi = nullptr) {
  ClosureReport rep;
  rep.dimension = span.dim();
  Mat<F> gl = Mat<F>::template lift<Rational>(g);
  Mat<F> jl = Mat<F>::template lift<Rational>(j);
  for (const auto& b : span.basis()) {
    if (!(b.transpose() * gl + gl * b).all_zero()) rep.skew_wrt_metric = false;
    if (!(b * jl - jl * b).all_zero()) rep.commutes_with_complex_structure = false;
    if (!field_is_zero(mat_vec(b, lee_vec))) rep.annihilates_lee_vector = false;
    if (!field_is_zero(mat_vec(b, antilee_vec))) rep.annihilates_antilee_vector = false;
    Mat<F> jb = jl * b;
    F tr(0);
    for (std::size_t t = 0; t < jb.rows(); ++t) tr += jb(t, t);
    if (!is_zero(tr)) rep.inside_special_unitary = false;
  }
  if (phi != nullptr) rep.contains_phi = span.contains(*phi);
  return rep;
}

}  // namespace lck

#endif
