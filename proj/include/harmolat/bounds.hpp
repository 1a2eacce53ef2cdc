#pragma once

#include <cstdint>
#include <utility>

#include "harmolat/coupling.hpp"
#include "harmolat/gaussian.hpp"
#include "harmolat/lattice.hpp"
#include "harmolat/spectral.hpp"
#include "harmolat/types.hpp"

namespace harmolat {

/// Envelope K exp(-r / xi), valid for r >= min_dist. xi == 0 is the degenerate
/// envelope that vanishes for every r > 0.
struct DecayBound {
  double K = 0.0;
  double xi = 0.0;
  Distance min_dist = 0;

  double value(Distance r) const;
};

/// Bounds on the xx and pp blocks together with the quantities they were built from.
struct CorrelationBounds {
  DecayBound xx;
  DecayBound pp;
  double a = 0.0;       // (Delta E / 2)^2
  double b = 0.0;       // ||Vx Vp||
  int m = 0;            // interaction range
  double volume = 0.0;  // v_{d, m/2}
  double K = 0.0;       // prefactor before the ||Vp|| / ||Vx|| factors
};

struct GapBound {
  double value = 0.0;
};

struct BoundCheckReport {
  std::int64_t pairs_checked = 0;
  double max_ratio = 0.0;
  std::pair<Vertex, Vertex> worst_pair{-1, -1};
  bool satisfied = true;
};

/// Zero-temperature exponential decay from the spectral gap.
/// Throws std::invalid_argument for non-local couplings.
CorrelationBounds theorem1_bound(const Coupling& c);

/// max |corr| / envelope over all pairs at dist >= min_dist. Against a
/// degenerate envelope, correlations up to 1e-12 max(1, max|gamma|) count as
/// zero. satisfied iff max_ratio <= 1 + 1e-9.
BoundCheckReport check_decay_bound(const GaussianState& s, const DecayBound& bound, Block block, const Lattice& lat);

/// 2 / (K0 + c K zeta(1 + eta - d)).
GapBound theorem2_gap_bound(double k0, double k, double eta, double d, double c);
/// 2 / (K (1 + c Li_{1-d}(exp(-1/xi)))).
GapBound theorem3_gap_bound(double k, double xi, double d, double c);

/// mu = log(b / (b - a)) / m, the decay rate entering the lattice assumption.
/// Throws std::domain_error when the coupling is degenerate (b == a or m == 0).
double assumption1_mu(const Coupling& c);
/// Lattice certificate at assumption1_mu(c) with nu = mu / 2.
Assumption1Certificate theorem4_certificate(const Coupling& c);

/// Finite-temperature decay. Requires [Vx, Vp] = 0 within 1e-12, finite
/// range, and a certificate computed at assumption1_mu(c).
CorrelationBounds theorem4_bound(const Coupling& c, double temperature, const Assumption1Certificate& cert);

/// Area law 4 ||V|| c^2 Li_{1-2d}(e^{-1/xi}) s(I) / (ln 2 (Delta E/2)^2),
/// xi = m / log(||V|| / (||V|| - (Delta E/2)^2)). Requires Vp = I and finite range.
double theorem5_area_bound(const Coupling& c, const Region& region, const DimensionEstimate& dims);

/// 4 ||V||^1/2 / ln 2 * sum_{i in I, j not in I} |gamma_x(i, j)|. Requires Vp = I.
double entropy_correlation_bound(const GaussianState& s, const Coupling& c, const Region& region);

/// |(V^-1/2)_ij| <= sqrt(b)/a (1 - a/b)^{2 dist / M} for V of range M with
/// spectrum in [a, b]. Throws std::invalid_argument for matrices that are not
/// positive or whose support joins different components.
DecayBound inv_sqrt_decay_bound(const Matrix& v, const Lattice& lat);

/// |f(V)_ij| <= K q^dist for any V of range m with spectrum in [a, b].
struct BenziBound {
  double K = 0.0;
  double q = 0.0;
  double chi = 0.0;
  double ellipse_max = 0.0;  // max |f o psi| on the ellipse
  double norm_f = 0.0;       // max |f| on [a, b]

  double value(Distance r) const;
};

/// Samples 4096 points of the ellipse with foci +-1 and semi-axis sum chi;
/// for the thermal function the maximum is taken at z = -alpha. Throws
/// std::domain_error when f o psi is not analytic inside the ellipse.
BenziBound benzi_bound(double a, double b, int m, const ScalarFunction& f, double chi);

/// Entrywise check of |F_ij| <= K q^dist; same reporting as check_decay_bound.
BoundCheckReport check_benzi_bound(const Matrix& f_of_v, const BenziBound& bound, const Lattice& lat);

/// max_{i,j} |gamma_ij| e^{dist / xi}: the smallest K for which the block obeys K e^{-dist/xi}.
double measured_exponential_prefactor(const Matrix& gamma, const Lattice& lat, double xi);

/// K0 = max_i gamma_ii and K = max_{i != j} |gamma_ij| dist^eta.
struct AlgebraicPrefactors {
  double k0 = 0.0;
  double k = 0.0;
};
AlgebraicPrefactors measured_algebraic_prefactors(const Matrix& gamma, const Lattice& lat, double eta);

}  // namespace harmolat
