#include "harmolat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "harmolat/kernels.hpp"
#include "harmolat/special.hpp"

namespace harmolat {

namespace {

constexpr double kRatioSlack = 1e-9;
constexpr int kEllipseSamples = 4096;

// b - a below this fraction of b is treated as a vanishing gap-to-norm margin.
bool degenerate(double a, double b) { return b - a <= 1e-12 * b; }

int require_range(const Coupling& c, const char* what) {
  if (!c.range()) throw std::invalid_argument(std::string(what) + " needs a finite-range coupling");
  return *c.range();
}

BoundCheckReport to_report(const kernels::PairMax& pm) {
  BoundCheckReport r;
  r.pairs_checked = pm.count;
  r.max_ratio = pm.i < 0 ? 0.0 : pm.value;
  r.worst_pair = {pm.i, pm.j};
  r.satisfied = r.max_ratio <= 1.0 + kRatioSlack;
  return r;
}

double zero_tolerance(const Matrix& m) { return 1e-12 * std::max(1.0, max_abs(m)); }

}  // namespace

double DecayBound::value(Distance r) const {
  if (xi == 0.0) return r > 0 ? 0.0 : K;
  return K * std::exp(-static_cast<double>(r) / xi);
}

double BenziBound::value(Distance r) const {
  if (q == 0.0) return r > 0 ? 0.0 : K;
  return K * std::pow(q, static_cast<double>(r));
}

CorrelationBounds theorem1_bound(const Coupling& c) {
  const int m = require_range(c, "theorem 1");
  const auto spec = mode_spectrum(c);
  CorrelationBounds out;
  out.m = m;
  out.a = spec.d.minCoeff();
  out.b = operator_norm(c.vx() * c.vp());
  out.volume = static_cast<double>(ball_volume(c.lattice(), m / 2));
  out.K = std::sqrt(out.b) * out.volume / out.a;
  const double xi = (m == 0 || degenerate(out.a, out.b)) ? 0.0 : 2.0 * m / std::log(out.b / (out.b - out.a));
  out.xx = {out.K * operator_norm(c.vp()), xi, m};
  out.pp = {out.K * operator_norm(c.vx()), xi, m};
  return out;
}

BoundCheckReport check_decay_bound(const GaussianState& s, const DecayBound& bound, Block block, const Lattice& lat) {
  const Matrix& g = block_of(s, block);
  if (g.rows() != lat.size()) throw std::invalid_argument("state and lattice sizes differ");
  const kernels::Envelope env{bound.K, bound.xi, bound.min_dist, zero_tolerance(g)};
  return to_report(kernels::envelope_ratio(g, lat.distances(), env));
}

GapBound theorem2_gap_bound(double k0, double k, double eta, double d, double c) {
  if (!(eta > d)) throw std::invalid_argument("theorem 2 needs eta > d");
  if (!(k0 >= 0.0) || !(k >= 0.0) || !(c > 0.0) || !(k0 + c * k > 0.0)) {
    throw std::invalid_argument("theorem 2 needs K0, K >= 0, c > 0 and K0 + cK > 0");
  }
  return {2.0 / (k0 + c * k * riemann_zeta(1.0 + eta - d))};
}

GapBound theorem3_gap_bound(double k, double xi, double d, double c) {
  if (!(k > 0.0) || !(xi > 0.0)) throw std::invalid_argument("theorem 3 needs K > 0 and xi > 0");
  return {2.0 / (k * (1.0 + c * polylog(1.0 - d, std::exp(-1.0 / xi))))};
}

double assumption1_mu(const Coupling& c) {
  const int m = require_range(c, "the lattice assumption");
  const double a = mode_spectrum(c).d.minCoeff();
  const double b = operator_norm(c.vx() * c.vp());
  if (m == 0 || degenerate(a, b)) throw std::domain_error("decay rate is unbounded for this coupling (uncoupled modes)");
  return std::log(b / (b - a)) / m;
}

Assumption1Certificate theorem4_certificate(const Coupling& c) {
  const double mu = assumption1_mu(c);
  return verify_assumption1(c.lattice(), mu, 0.5 * mu);
}

CorrelationBounds theorem4_bound(const Coupling& c, double temperature, const Assumption1Certificate& cert) {
  if (!(temperature > 0.0)) throw std::domain_error("theorem 4 needs T > 0");
  if (!c.commuting()) throw std::invalid_argument("theorem 4 needs [Vx, Vp] = 0");
  const double mu = assumption1_mu(c);
  if (!cert.holds || std::abs(cert.mu - mu) > 1e-12 * mu || !(cert.nu > 0.0)) {
    throw std::invalid_argument("certificate was not computed at mu = " + std::to_string(mu));
  }
  CorrelationBounds out = theorem1_bound(c);
  const double gap = 2.0 * std::sqrt(out.a);
  const double x = gap / temperature * std::sqrt(1.0 - out.a / (4.0 * out.b));
  const double thermal = x > 700.0 ? 0.0 : 4.0 * cert.l0 * (out.b / out.a) / std::expm1(x);
  out.K *= 1.0 + thermal;
  const double xi = std::max(2.0 / cert.nu, 2.0 * out.m / std::log(out.b / (out.b - out.a)));
  out.xx = {out.K * operator_norm(c.vp()), xi, out.m};
  out.pp = {out.K * operator_norm(c.vx()), xi, out.m};
  return out;
}

double theorem5_area_bound(const Coupling& c, const Region& region, const DimensionEstimate& dims) {
  if (!c.momentum_is_identity()) throw std::invalid_argument("theorem 5 needs Vp = I");
  const int m = require_range(c, "theorem 5");
  const std::int64_t area = surface_area(c.lattice(), region);
  const auto eig = eigh(c.vx()).eigenvalues;
  const double a = eig.minCoeff();
  const double norm = eig.maxCoeff();
  if (m == 0 || degenerate(a, norm)) {
    const Matrix gx = ground_state(c).gamma_x;
    const Matrix off = gx - Matrix(gx.diagonal().asDiagonal());
    if (max_abs(off) > zero_tolerance(gx)) {
      throw std::domain_error("degenerate area-law bound but the ground state is correlated");
    }
    return 0.0;
  }
  const double xi = m / std::log(norm / (norm - a));
  const double li = polylog(1.0 - 2.0 * dims.d, std::exp(-1.0 / xi));
  return 4.0 * norm * dims.c * dims.c * li / (std::numbers::ln2 * a) * static_cast<double>(area);
}

double entropy_correlation_bound(const GaussianState& s, const Coupling& c, const Region& region) {
  if (!c.momentum_is_identity()) throw std::invalid_argument("the correlation-sum bound needs Vp = I");
  if (s.size() != c.size() || region.lattice_size() != c.size()) throw std::invalid_argument("size mismatch");
  const double norm = eigh(c.vx()).eigenvalues.maxCoeff();
  const auto inside = region.mask();
  double sum = 0.0;
  for (Vertex i : region.members()) {
    for (Vertex j = 0; j < s.size(); ++j) {
      if (!inside[j]) sum += std::abs(s.gamma_x(i, j));
    }
  }
  return 4.0 * std::sqrt(norm) / std::numbers::ln2 * sum;
}

DecayBound inv_sqrt_decay_bound(const Matrix& v, const Lattice& lat) {
  const auto range = matrix_range(v, lat);
  if (!range) throw std::invalid_argument("matrix couples different components");
  const auto eig = eigh(v).eigenvalues;
  const double a = eig.minCoeff();
  const double b = eig.maxCoeff();
  if (!(a > 0.0)) throw std::invalid_argument("inv_sqrt_decay_bound needs a positive matrix");
  DecayBound out;
  out.K = std::sqrt(b) / a;
  out.xi = (*range == 0 || degenerate(a, b)) ? 0.0 : *range / (2.0 * std::log(b / (b - a)));
  out.min_dist = 0;
  return out;
}

BenziBound benzi_bound(double a, double b, int m, const ScalarFunction& f, double chi) {
  if (!(a > 0.0) || !(b >= a)) throw std::invalid_argument("benzi_bound needs 0 < a <= b");
  if (m < 0) throw std::invalid_argument("benzi_bound needs m >= 0");
  if (!(chi > 1.0)) throw std::domain_error("benzi_bound needs chi > 1");
  BenziBound out;
  out.chi = chi;
  out.norm_f = std::max(std::abs(f(a)), std::abs(f(b)));
  if (a == b) {
    // V = a I: f(V) is diagonal.
    out.K = out.norm_f;
    out.q = 0.0;
    return out;
  }
  const double alpha = 0.5 * (chi + 1.0 / chi);
  const double beta = 0.5 * (chi - 1.0 / chi);
  if (f.has_branch_cut() && !(alpha < (a + b) / (b - a))) {
    throw std::domain_error("ellipse with chi = " + std::to_string(chi) + " reaches the branch cut of " + f.name());
  }
  const auto psi = [&](std::complex<double> z) { return 0.5 * ((b - a) * z + a + b); };
  if (f.kind() == ScalarFunction::Kind::thermal) {
    out.ellipse_max = std::abs(f(psi({-alpha, 0.0})));
  } else {
    for (int k = 0; k < kEllipseSamples; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kEllipseSamples;
      const std::complex<double> z(alpha * std::cos(theta), beta * std::sin(theta));
      out.ellipse_max = std::max(out.ellipse_max, std::abs(f(psi(z))));
    }
  }
  out.K = std::max(out.norm_f, 2.0 * chi / (chi - 1.0) * out.ellipse_max);
  out.q = m == 0 ? 0.0 : std::pow(chi, -2.0 / m);
  return out;
}

BoundCheckReport check_benzi_bound(const Matrix& f_of_v, const BenziBound& bound, const Lattice& lat) {
  if (f_of_v.rows() != lat.size()) throw std::invalid_argument("matrix and lattice sizes differ");
  const double xi = bound.q == 0.0 ? 0.0 : -1.0 / std::log(bound.q);
  const kernels::Envelope env{bound.K, xi, 0, zero_tolerance(f_of_v)};
  return to_report(kernels::envelope_ratio(f_of_v, lat.distances(), env));
}

double measured_exponential_prefactor(const Matrix& gamma, const Lattice& lat, double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("measured prefactor needs xi > 0");
  if (gamma.rows() != lat.size()) throw std::invalid_argument("matrix and lattice sizes differ");
  const kernels::Envelope env{1.0, xi, 0, 0.0};
  return kernels::envelope_ratio(gamma, lat.distances(), env).value;
}

AlgebraicPrefactors measured_algebraic_prefactors(const Matrix& gamma, const Lattice& lat, double eta) {
  if (gamma.rows() != lat.size()) throw std::invalid_argument("matrix and lattice sizes differ");
  AlgebraicPrefactors out;
  for (Vertex i = 0; i < lat.size(); ++i) {
    out.k0 = std::max(out.k0, gamma(i, i));
    for (Vertex j = 0; j < lat.size(); ++j) {
      const Distance d = lat.dist(i, j);
      if (i == j || d == kUnreachable) continue;
      out.k = std::max(out.k, std::abs(gamma(i, j)) * std::pow(static_cast<double>(d), eta));
    }
  }
  return out;
}

}  // namespace harmolat
