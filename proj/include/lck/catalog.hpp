#ifndef LCK_CATALOG_HPP
#define LCK_CATALOG_HPP

#include <optional>
#include <string>

#include "lck/connection.hpp"
#include "lck/vaisman.hpp"

namespace lck {

enum class Family { Heisenberg, Inoue, OT, Hopf, Abelian, Custom };

/// A framed Hermitian geometry from the built-in catalog, together with its
/// declared Lee data, classification flags and, where available, transcribed
/// reference tables for the Levi-Civita and Bismut connections, the Bismut
/// curvature and the Ricci tensors.
template <typename R>
struct CatalogEntry {
  std::string name;
  Family family = Family::Custom;
  FrameAlgebra<R> algebra{0};
  HermitianStructure herm;
  LeeData<R> lee;
  bool lck = true;
  bool vaisman = false;
  bool kahler = false;

  std::optional<ConnectionTable<R>> expected_levi_civita;
  std::optional<ConnectionTable<R>> expected_bismut;
  std::optional<CurvatureTable<R>> expected_curvature;
  std::optional<Mat<R>> expected_bismut_ricci;
  std::optional<Mat<R>> expected_riemannian_ricci;
};

/// Nilpotent-extension family on frame {A, B, e_1..e_{2n-2}} (indices 0, 1,
/// 2..2n-1): [A, e_{2i-1}] = a_i e_{2i}, [A, e_{2i}] = -a_i e_{2i-1},
/// [e_{2i-1}, e_{2i}] = B, orthonormal metric, J A = B, J e_{2i-1} = e_{2i}.
/// Vaisman with theta dual to A.
CatalogEntry<Rational> make_heisenberg(std::size_t n, const std::vector<Rational>& a);

/// Four-dimensional solvable example: [e1,e2] = mu e2,
/// [e1,e3] = -(mu/2) e3 + y e4, [e1,e4] = -y e3 - (mu/2) e4; orthonormal
/// metric, J e1 = e2, J e3 = e4. LCK with theta = mu e^1, never Vaisman.
/// Throws std::invalid_argument when mu = 0 (the structure is not LCK).
CatalogEntry<Rational> make_inoue(const Rational& mu, const Rational& y);

/// Solvable family on {A_1..A_s, B_1..B_s, C_1, C_2} (indices 0..s-1,
/// s..2s-1, 2s, 2s+1): [A_i,B_i] = B_i, [A_i,C_1] = -C_1/2 + r_i C_2,
/// [A_i,C_2] = -r_i C_1 - C_2/2; metric 1 + delta on the A and B blocks and
/// orthonormal on {C_1, C_2}; J A_i = B_i, J C_1 = C_2. LCK, not Vaisman,
/// theta = alpha_1 + ... + alpha_s.
CatalogEntry<Rational> make_ot(std::size_t s, const std::vector<Rational>& r);

/// Global frame of S^1 x S^{2n-1} over the sphere-polynomial ring:
/// [U_i, U_j] = x_i U_j - x_j U_i with U_i(x_j) = delta_ij - x_i x_j,
/// identity metric, J U_{2i-1} = U_{2i}. Vaisman with theta = -2 alpha where
/// alpha = sum x_j eta_j; the radial field H = sum x_i U_i satisfies H = -A/2.
CatalogEntry<SpherePoly> make_hopf(std::size_t n);

/// Flat torus frame: zero brackets, orthonormal metric, standard J. The
/// degenerate theta = 0 case (Kahler).
CatalogEntry<Rational> make_abelian(std::size_t n);

/// Copy of the entry with the metric rescaled so that |A| = 1 (the standing
/// normalization for the Vaisman identities). Connection, curvature and
/// Ricci reference tables are scale-invariant and are kept. Requires a
/// constant |A|^2.
template <typename R>
CatalogEntry<R> normalized_unit_lee(const CatalogEntry<R>& entry);

/// H = sum x_i U_i for the sphere frame.
VectorField<SpherePoly> hopf_radial_field(std::size_t m);

/// alpha = sum x_j eta_j, the 1-form dual to H.
KForm<SpherePoly> hopf_alpha_form(std::size_t m);

template <typename R>
CatalogEntry<R> normalized_unit_lee(const CatalogEntry<R>& entry) {
  R norm = entry.lee.norm_sq;
  Rational scale;
  if constexpr (std::is_same_v<R, SpherePoly>) {
    scale = norm.constant_value();
  } else {
    scale = norm;
  }
  if (scale.is_zero()) throw std::domain_error("normalized_unit_lee: degenerate Lee data");
  CatalogEntry<R> out = entry;
  out.name = entry.name + ":unit-lee";
  RatMat g = entry.herm.g;
  g.scale(scale);
  out.herm.g = std::move(g);
  out.lee = lee_data_from_theta(out.herm, entry.lee.theta);
  return out;
}

}  // namespace lck

#endif
