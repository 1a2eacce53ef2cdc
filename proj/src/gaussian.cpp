#include "harmolat/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "harmolat/spectral.hpp"

namespace harmolat {

namespace {

Matrix sym(const Matrix& a) { return 0.5 * (a + a.transpose()); }

// O diag(w) O^T
Matrix spectral_sum(const EigenDecomposition& eig, const Vector& w) {
  return sym(eig.basis * w.asDiagonal() * eig.basis.transpose());
}

struct ModeBasis {
  Matrix vx_half;
  Matrix vx_inv_half;
  EigenDecomposition m;  // of Vx^1/2 Vp Vx^1/2
};

ModeBasis mode_basis(const Coupling& c) {
  const auto vx_eig = eigh(c.vx());
  ModeBasis b;
  b.vx_half = matrix_function(vx_eig, ScalarFunction::sqrt());
  b.vx_inv_half = matrix_function(vx_eig, ScalarFunction::inv_sqrt());
  b.m = eigh(sym(b.vx_half * c.vp() * b.vx_half));
  if (!(b.m.eigenvalues.minCoeff() > 0.0)) throw std::domain_error("mode frequencies must be positive");
  return b;
}

GaussianState ground_from(const ModeBasis& b, const std::string& provenance) {
  const Vector root = b.m.eigenvalues.cwiseSqrt();
  GaussianState s;
  s.gamma_x = sym(b.vx_inv_half * spectral_sum(b.m, root) * b.vx_inv_half);
  s.gamma_p = sym(b.vx_half * spectral_sum(b.m, root.cwiseInverse()) * b.vx_half);
  s.temperature = 0.0;
  s.provenance = provenance;
  return s;
}

std::string describe(const Coupling& c) {
  std::string out = std::string(kind_name(c.lattice().descriptor().kind)) + "(" + std::to_string(c.size()) + ")";
  if (c.range()) {
    out += ", range " + std::to_string(*c.range());
  } else {
    out += ", non-local";
  }
  return out;
}

void check_index(const GaussianState& s, Vertex i, Vertex j) {
  if (i < 0 || j < 0 || i >= s.size() || j >= s.size()) {
    throw std::out_of_range("vertex pair (" + std::to_string(i) + ", " + std::to_string(j) + ") outside state of size " +
                            std::to_string(s.size()));
  }
}

struct FitPoint {
  double x;
  double y;
  Distance dist;
};

std::vector<FitPoint> fit_points(const GaussianState& s, Block block, const Lattice& lat, bool log_x) {
  const Matrix& g = block_of(s, block);
  if (g.rows() != lat.size()) throw std::invalid_argument("state and lattice sizes differ");
  const double floor = std::max(1e-14, 1e-12 * max_abs(g));
  std::vector<FitPoint> pts;
  std::set<Distance> distinct;
  for (Vertex i = 0; i < lat.size(); ++i) {
    for (Vertex j = i + 1; j < lat.size(); ++j) {
      const Distance d = lat.dist(i, j);
      const double v = std::abs(g(i, j));
      if (d == kUnreachable || !(v > floor)) continue;
      pts.push_back({log_x ? std::log(static_cast<double>(d)) : static_cast<double>(d), std::log(v), d});
      distinct.insert(d);
    }
  }
  if (distinct.size() < 3) {
    throw std::invalid_argument("insufficient data for a decay fit: " + std::to_string(distinct.size()) +
                                " distinct distances with nonzero correlations");
  }
  return pts;
}

// y ~ intercept + slope x
struct LineFit {
  double intercept;
  double slope;
  double rms;
};

LineFit least_squares(const std::vector<FitPoint>& pts) {
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : pts) {
    sxx += (p.x - mx) * (p.x - mx);
    sxy += (p.x - mx) * (p.y - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (const auto& p : pts) {
    const double r = p.y - (f.intercept + f.slope * p.x);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

GaussianState ground_state(const Coupling& c) { return ground_from(mode_basis(c), "ground state of " + describe(c)); }

Matrix ground_position_block_dual_route(const Coupling& c) {
  const auto vp_eig = eigh(c.vp());
  const Matrix vp_half = matrix_function(vp_eig, ScalarFunction::sqrt());
  const Matrix inner = matrix_function(sym(vp_half * c.vx() * vp_half), ScalarFunction::inv_sqrt());
  return sym(vp_half * inner * vp_half);
}

GaussianState thermal_state(const Coupling& c, double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("thermal state needs T > 0");
  return c.commuting() ? thermal_state_commuting(c, temperature) : thermal_state_general(c, temperature);
}

GaussianState thermal_state_general(const Coupling& c, double temperature) {
  const auto g = ScalarFunction::thermal(temperature);
  const auto b = mode_basis(c);
  GaussianState s = ground_from(b, "");
  const Vector& d = b.m.eigenvalues;
  Vector wx(d.size()), wp(d.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    const double occ = g(d[k]);
    wx[k] = std::sqrt(d[k]) * occ;
    wp[k] = occ / std::sqrt(d[k]);
  }
  s.gamma_x += sym(b.vx_inv_half * spectral_sum(b.m, wx) * b.vx_inv_half);
  s.gamma_p += sym(b.vx_half * spectral_sum(b.m, wp) * b.vx_half);
  s.temperature = temperature;
  s.provenance = "thermal state (general) of " + describe(c);
  return s;
}

GaussianState thermal_state_commuting(const Coupling& c, double temperature) {
  const auto g = ScalarFunction::thermal(temperature);
  if (!c.commuting()) throw std::invalid_argument("commuting-case thermal state needs [Vx, Vp] = 0");
  GaussianState s = ground_state(c);
  const Matrix gm = matrix_function(sym(c.vx() * c.vp()), g);
  const auto vx_eig = eigh(c.vx());
  const auto vp_eig = eigh(c.vp());
  const Matrix vx_half = matrix_function(vx_eig, ScalarFunction::sqrt());
  const Matrix vx_inv_half = matrix_function(vx_eig, ScalarFunction::inv_sqrt());
  const Matrix vp_half = matrix_function(vp_eig, ScalarFunction::sqrt());
  const Matrix vp_inv_half = matrix_function(vp_eig, ScalarFunction::inv_sqrt());
  s.gamma_x += sym(vx_inv_half * vp_half * gm);
  s.gamma_p += sym(vx_half * vp_inv_half * gm);
  s.temperature = temperature;
  s.provenance = "thermal state (commuting) of " + describe(c);
  return s;
}

const Matrix& block_of(const GaussianState& s, Block block) { return block == Block::xx ? s.gamma_x : s.gamma_p; }

double corr_xx(const GaussianState& s, Vertex i, Vertex j) {
  check_index(s, i, j);
  return s.gamma_x(i, j);
}

double corr_pp(const GaussianState& s, Vertex i, Vertex j) {
  check_index(s, i, j);
  return s.gamma_p(i, j);
}

double corr(const GaussianState& s, Block block, Vertex i, Vertex j) {
  return block == Block::xx ? corr_xx(s, i, j) : corr_pp(s, i, j);
}

GaussianState reduced_state(const GaussianState& s, const Region& region) {
  if (region.empty()) throw std::invalid_argument("reduced_state needs a non-empty region");
  if (region.lattice_size() != s.size()) throw std::invalid_argument("region and state sizes differ");
  const auto& idx = region.members();
  GaussianState r;
  r.gamma_x = s.gamma_x(idx, idx);
  r.gamma_p = s.gamma_p(idx, idx);
  r.temperature = s.temperature;
  r.provenance = s.provenance + ", reduced to " + std::to_string(idx.size()) + " sites";
  return r;
}

Vector symplectic_eigenvalues(const Matrix& gamma_x, const Matrix& gamma_p) {
  const Matrix root = matrix_function(gamma_x, ScalarFunction::sqrt());
  const Vector ev = eigh(sym(root * gamma_p * root)).eigenvalues;
  return ev.cwiseMax(0.0).cwiseSqrt();
}

Vector symplectic_eigenvalues(const GaussianState& s) { return symplectic_eigenvalues(s.gamma_x, s.gamma_p); }

double entropy_of_mode(double mu) {
  if (mu < 1.0) throw std::domain_error("symplectic eigenvalue below 1: " + std::to_string(mu));
  const double plus = 0.5 * (mu + 1.0);
  const double minus = 0.5 * (mu - 1.0);
  double h = plus * std::log2(plus);
  if (minus > 0.0) h -= minus * std::log2(minus);
  return h;
}

EntropyReport entropy(const GaussianState& s, const Region& region) {
  const GaussianState r = reduced_state(s, region);
  EntropyReport report;
  report.region = region;
  report.symplectic_eigenvalues = symplectic_eigenvalues(r);
  for (double& mu : report.symplectic_eigenvalues) {
    if (mu < 1.0 - 1e-8) {
      throw std::domain_error("symplectic eigenvalue " + std::to_string(mu) + " violates the uncertainty relation");
    }
    mu = std::max(mu, 1.0);
    report.entropy_bits += entropy_of_mode(mu);
  }
  return report;
}

DecayFit fit_decay(const GaussianState& s, Block block, const Lattice& lat) {
  const auto pts = fit_points(s, block, lat, false);
  const auto line = least_squares(pts);
  DecayFit f;
  f.K = std::exp(line.intercept);
  f.xi = line.slope < 0.0 ? -1.0 / line.slope : std::numeric_limits<double>::infinity();
  f.residual = line.rms;
  f.points = static_cast<std::int64_t>(pts.size());
  return f;
}

PowerLawFit fit_power_law(const GaussianState& s, Block block, const Lattice& lat) {
  const auto pts = fit_points(s, block, lat, true);
  const auto line = least_squares(pts);
  PowerLawFit f;
  f.K = std::exp(line.intercept);
  f.eta = -line.slope;
  f.residual = line.rms;
  f.points = static_cast<std::int64_t>(pts.size());
  return f;
}

}  // namespace harmolat
