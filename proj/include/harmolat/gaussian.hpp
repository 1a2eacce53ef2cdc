#pragma once

#include <cstdint>
#include <string>

#include "harmolat/coupling.hpp"
#include "harmolat/lattice.hpp"
#include "harmolat/types.hpp"

namespace harmolat {

/// Zero-mean Gaussian state with block-diagonal covariance gamma_x (+) gamma_p,
/// gamma_ij = <{r_i, r_j}>, normalized so that the vacuum is the identity.
struct GaussianState {
  Matrix gamma_x;
  Matrix gamma_p;
  double temperature = 0.0;
  std::string provenance;

  int size() const { return static_cast<int>(gamma_x.rows()); }
};

/// gamma_x = Vx^-1/2 M^1/2 Vx^-1/2, gamma_p = Vx^1/2 M^-1/2 Vx^1/2 with M = Vx^1/2 Vp Vx^1/2.
GaussianState ground_state(const Coupling& c);

/// The same position block through Vp^1/2 (Vp^1/2 Vx Vp^1/2)^-1/2 Vp^1/2.
Matrix ground_position_block_dual_route(const Coupling& c);

/// Gibbs state at temperature T > 0. Uses the commuting-case expression when
/// max|[Vx, Vp]| <= 1e-12 and the general one otherwise.
GaussianState thermal_state(const Coupling& c, double temperature);
/// gamma(0) + (Vx^-1/2 M^1/2 G Vx^-1/2) (+) (Vx^1/2 M^-1/2 G Vx^1/2), G = g(M).
GaussianState thermal_state_general(const Coupling& c, double temperature);
/// gamma(0) + (Vx^-1/2 Vp^1/2 G) (+) (Vx^1/2 Vp^-1/2 G), G = g(Vx Vp).
/// Throws std::invalid_argument when Vx and Vp do not commute.
GaussianState thermal_state_commuting(const Coupling& c, double temperature);

/// gamma_x(i, j) and gamma_p(i, j); std::out_of_range on bad indices.
double corr_xx(const GaussianState& s, Vertex i, Vertex j);
double corr_pp(const GaussianState& s, Vertex i, Vertex j);
double corr(const GaussianState& s, Block block, Vertex i, Vertex j);
const Matrix& block_of(const GaussianState& s, Block block);

/// Principal submatrices on I.
GaussianState reduced_state(const GaussianState& s, const Region& region);

/// sqrt of the eigenvalues of gamma_x^1/2 gamma_p gamma_x^1/2, ascending.
Vector symplectic_eigenvalues(const Matrix& gamma_x, const Matrix& gamma_p);
Vector symplectic_eigenvalues(const GaussianState& s);

struct EntropyReport {
  Region region;
  Vector symplectic_eigenvalues;
  double entropy_bits = 0.0;
};

/// Entropy in bits contributed by one mode with symplectic eigenvalue mu >= 1.
double entropy_of_mode(double mu);

/// Von Neumann entropy of the reduced state on I. Symplectic eigenvalues in
/// [1 - 1e-8, 1) are clipped to 1; anything lower throws std::domain_error.
EntropyReport entropy(const GaussianState& s, const Region& region);

/// log|corr| ~ log K - dist / xi, least squares over off-diagonal pairs.
struct DecayFit {
  double K = 0.0;
  double xi = 0.0;  // +inf when the fitted slope is not negative
  double residual = 0.0;  // root-mean-square residual in log|corr|
  std::int64_t points = 0;
};

/// log|corr| ~ log K - eta log dist.
struct PowerLawFit {
  double K = 0.0;
  double eta = 0.0;
  double residual = 0.0;
  std::int64_t points = 0;
};

/// Both fits use pairs i < j on connected vertices with |corr| above
/// max(1e-14, 1e-12 max|gamma|). Throws std::invalid_argument when fewer than
/// three distinct distances survive.
DecayFit fit_decay(const GaussianState& s, Block block, const Lattice& lat);
PowerLawFit fit_power_law(const GaussianState& s, Block block, const Lattice& lat);

}  // namespace harmolat
