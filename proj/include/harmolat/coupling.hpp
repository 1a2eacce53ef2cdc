#pragma once

#include <cstdint>
#include <optional>

#include "harmolat/lattice.hpp"
#include "harmolat/spectral.hpp"
#include "harmolat/types.hpp"

namespace harmolat {

/// Harmonic coupling C = (G, Vx, Vp) for H = p^T Vp p + x^T Vx x.
///
/// Vx and Vp are symmetric positive definite. range() is the smallest even m
/// with (Vx)_ij = (Vp)_ij = 0 whenever dist(i, j) > m / 2, or empty when the
/// coupling is non-local.
class Coupling {
 public:
  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const Matrix& vx() const { return vx_; }
  const Matrix& vp() const { return vp_; }
  std::optional<int> range() const { return range_; }
  int size() const { return static_cast<int>(vx_.rows()); }

  /// Vp equals the identity to 1e-12.
  bool momentum_is_identity() const;
  /// max |[Vx, Vp]_ij| <= tol.
  bool commuting(double tol = 1e-12) const;

 private:
  friend Coupling make_coupling(LatticePtr, Matrix, Matrix, bool);
  LatticePtr lattice_;
  Matrix vx_;
  Matrix vp_;
  std::optional<int> range_;
};

/// Validates and wraps a coupling. Throws std::invalid_argument on a dimension
/// mismatch, asymmetry above 1e-12, or lambda_min <= 1e-10 ||V||.
/// The range is detected from the exact sparsity pattern unless `non_local`
/// is set (used for couplings defined through a decaying kernel).
Coupling make_coupling(LatticePtr lattice, Matrix vx, Matrix vp, bool non_local = false);

std::optional<int> interaction_range(const Coupling& c);

/// Gershgorin enclosure: lower = min_i (V_ii - sum_{j != i} |V_ij|), upper = max_i sum_j |V_ij|.
struct SpectralBoundsEstimate {
  double lower = 0.0;
  double upper = 0.0;
};

SpectralBoundsEstimate gershgorin_bounds(const Matrix& v);

/// Dense adjacency matrix E of the lattice.
Matrix adjacency_matrix(const Lattice& lat);

/// Ring with V_ii = 3 and bond (i, i+1) weighted by r_i ~ U[0, 1) from UnitRng(seed);
/// the seam bond (n-1, 0) takes r_{n-1}. Vp = I.
Coupling build_disordered_chain(int n, std::uint64_t seed);

/// Ring with Vx = Vp = I - c E, 0 < c < 1/2.
Coupling build_rotating_wave(int n, double c);

/// Vp = I and Vx = W^-2 with W_ij = dist(i,j)^-eta off the diagonal and
/// W_ii = 1 + sum_{j != i} dist(i,j)^-eta, so that the ground-state position
/// correlations are exactly W. Requires eta above the fitted lattice dimension.
Coupling build_algebraic(LatticePtr lattice, double eta);

/// Ring coupling with Vp = I whose ground state has <x_i x_j> (block xx) or
/// <p_i p_j> (block pp) equal to K (1-q^2)/(1+q^2) (I - cE)^-1 with
/// q = exp(-1/xi), c = q / (1 + q^2): exactly K q^dist in the infinite-ring limit.
Coupling build_exponential_decay(int n, double k, double xi, Block block);

/// Nearest-neighbour coupling Vx = diagonal * I + hopping * E, Vp = I.
Coupling build_nearest_neighbor(LatticePtr lattice, double diagonal, double hopping);

/// True iff (V^n)_ij = 0 for all dist(i, j) > n m / 2, with V^n formed by
/// repeated multiplication. Throws std::invalid_argument if V itself is not of range m.
bool verify_range_of_power(const Matrix& v, const Lattice& lat, int power, int m);

/// Whether V_ij = 0 for all dist(i, j) > m / 2.
bool has_range(const Matrix& v, const Lattice& lat, int m);

/// 2 max{dist(i, j) : V_ij != 0}, or empty when a nonzero entry joins two components.
std::optional<int> matrix_range(const Matrix& v, const Lattice& lat);

}  // namespace harmolat
