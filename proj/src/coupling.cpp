#include "harmolat/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "harmolat/rng.hpp"

namespace harmolat {

namespace {

void check_positive(const Matrix& v, const char* name) {
  const auto ev = eigh(v).eigenvalues;
  const double norm = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  if (!(ev.minCoeff() > 1e-10 * norm)) {
    throw std::invalid_argument(std::string(name) + " is not positive definite (lambda_min = " +
                                std::to_string(ev.minCoeff()) + ")");
  }
}

// 2 * max dist over nonzero entries, or empty if a nonzero entry joins two components
std::optional<int> detect_range(const Matrix& vx, const Matrix& vp, const Lattice& lat) {
  Distance reach = 0;
  for (Vertex i = 0; i < lat.size(); ++i) {
    for (Vertex j = 0; j < lat.size(); ++j) {
      if (vx(i, j) == 0.0 && vp(i, j) == 0.0) continue;
      const Distance d = lat.dist(i, j);
      if (d == kUnreachable) return std::nullopt;
      reach = std::max(reach, d);
    }
  }
  return 2 * reach;
}

}  // namespace

bool Coupling::momentum_is_identity() const {
  return max_abs(vp_ - Matrix::Identity(vp_.rows(), vp_.cols())) <= 1e-12;
}

bool Coupling::commuting(double tol) const { return commutator_max(vx_, vp_) <= tol; }

Coupling make_coupling(LatticePtr lattice, Matrix vx, Matrix vp, bool non_local) {
  if (!lattice) throw std::invalid_argument("coupling needs a lattice");
  const Eigen::Index n = lattice->size();
  if (vx.rows() != n || vx.cols() != n || vp.rows() != n || vp.cols() != n) {
    throw std::invalid_argument("coupling matrices must be " + std::to_string(n) + " x " + std::to_string(n));
  }
  if (symmetry_defect(vx) > 1e-12) throw std::invalid_argument("Vx is not symmetric");
  if (symmetry_defect(vp) > 1e-12) throw std::invalid_argument("Vp is not symmetric");
  vx = 0.5 * (vx + vx.transpose()).eval();
  vp = 0.5 * (vp + vp.transpose()).eval();
  check_positive(vx, "Vx");
  check_positive(vp, "Vp");

  Coupling c;
  c.range_ = non_local ? std::nullopt : detect_range(vx, vp, *lattice);
  c.lattice_ = std::move(lattice);
  c.vx_ = std::move(vx);
  c.vp_ = std::move(vp);
  return c;
}

std::optional<int> interaction_range(const Coupling& c) { return c.range(); }

SpectralBoundsEstimate gershgorin_bounds(const Matrix& v) {
  SpectralBoundsEstimate est{std::numeric_limits<double>::infinity(), 0.0};
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double row = v.row(i).cwiseAbs().sum();
    const double off = row - std::abs(v(i, i));
    est.lower = std::min(est.lower, v(i, i) - off);
    est.upper = std::max(est.upper, row);
  }
  return est;
}

Matrix adjacency_matrix(const Lattice& lat) {
  Matrix e = Matrix::Zero(lat.size(), lat.size());
  for (Vertex i = 0; i < lat.size(); ++i) {
    for (Vertex j : lat.neighbors(i)) e(i, j) = 1.0;
  }
  return e;
}

Coupling build_disordered_chain(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("disordered chain needs n >= 3");
  auto lat = build_lattice(LatticeDescriptor::ring(n));
  UnitRng rng(seed);
  Matrix v = 3.0 * Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    const double r = rng.uniform();
    const int j = (i + 1) % n;
    v(i, j) = r;
    v(j, i) = r;
  }
  return make_coupling(std::move(lat), std::move(v), Matrix::Identity(n, n));
}

Coupling build_rotating_wave(int n, double c) {
  if (!(c > 0.0 && c < 0.5)) throw std::invalid_argument("rotating wave needs 0 < c < 1/2");
  if (n < 3) throw std::invalid_argument("rotating wave needs n >= 3");
  auto lat = build_lattice(LatticeDescriptor::ring(n));
  Matrix v = Matrix::Identity(n, n) - c * adjacency_matrix(*lat);
  return make_coupling(std::move(lat), v, v);
}

Coupling build_algebraic(LatticePtr lattice, double eta) {
  if (!lattice) throw std::invalid_argument("algebraic coupling needs a lattice");
  const auto dims = fit_dimension(*lattice);
  if (!(eta > dims.d)) {
    throw std::invalid_argument("algebraic coupling needs eta > lattice dimension " + std::to_string(dims.d));
  }
  const int n = lattice->size();
  Matrix w = Matrix::Zero(n, n);
  for (Vertex i = 0; i < n; ++i) {
    double diag = 1.0;
    for (Vertex j = 0; j < n; ++j) {
      if (i == j) continue;
      w(i, j) = std::pow(static_cast<double>(lattice->dist(i, j)), -eta);
      diag += w(i, j);
    }
    w(i, i) = diag;
  }
  const auto eig = eigh(w);
  const Vector inv_sq = eig.eigenvalues.array().square().inverse();
  Matrix vx = eig.basis * inv_sq.asDiagonal() * eig.basis.transpose();
  return make_coupling(std::move(lattice), std::move(vx), Matrix::Identity(n, n), /*non_local=*/true);
}

Coupling build_exponential_decay(int n, double k, double xi, Block block) {
  if (n < 3) throw std::invalid_argument("exponential-decay construction needs n >= 3");
  if (!(k > 0.0) || !(xi > 0.0)) throw std::invalid_argument("exponential-decay construction needs K, xi > 0");
  const double q = std::exp(-1.0 / xi);
  const double c = q / (1.0 + q * q);
  const double kappa = k * (1.0 - q * q) / (1.0 + q * q);
  auto lat = build_lattice(LatticeDescriptor::ring(n));
  const Matrix a = Matrix::Identity(n, n) - c * adjacency_matrix(*lat);
  if (block == Block::xx) {
    // <xx> = Vx^{-1/2} = kappa A^{-1}  =>  Vx = A^2 / kappa^2, range 4
    Matrix vx = a * a / (kappa * kappa);
    return make_coupling(std::move(lat), std::move(vx), Matrix::Identity(n, n));
  }
  // <pp> = Vx^{1/2} = kappa A^{-1}  =>  Vx = kappa^2 A^{-2}
  const auto eig = eigh(a);
  const Vector inv_sq = eig.eigenvalues.array().square().inverse();
  Matrix vx = kappa * kappa * (eig.basis * inv_sq.asDiagonal() * eig.basis.transpose());
  return make_coupling(std::move(lat), std::move(vx), Matrix::Identity(n, n), /*non_local=*/true);
}

Coupling build_nearest_neighbor(LatticePtr lattice, double diagonal, double hopping) {
  if (!lattice) throw std::invalid_argument("nearest-neighbour coupling needs a lattice");
  const int n = lattice->size();
  Matrix vx = diagonal * Matrix::Identity(n, n) + hopping * adjacency_matrix(*lattice);
  return make_coupling(std::move(lattice), std::move(vx), Matrix::Identity(n, n));
}

bool has_range(const Matrix& v, const Lattice& lat, int m) {
  for (Vertex i = 0; i < lat.size(); ++i) {
    for (Vertex j = 0; j < lat.size(); ++j) {
      if (v(i, j) == 0.0) continue;
      const Distance d = lat.dist(i, j);
      if (d == kUnreachable || 2 * static_cast<std::int64_t>(d) > m) return false;
    }
  }
  return true;
}

std::optional<int> matrix_range(const Matrix& v, const Lattice& lat) {
  if (v.rows() != lat.size() || v.cols() != lat.size()) throw std::invalid_argument("matrix/lattice size mismatch");
  return detect_range(v, v, lat);
}

bool verify_range_of_power(const Matrix& v, const Lattice& lat, int power, int m) {
  if (power < 1) throw std::invalid_argument("verify_range_of_power needs n >= 1");
  if (v.rows() != lat.size() || v.cols() != lat.size()) throw std::invalid_argument("matrix/lattice size mismatch");
  if (!has_range(v, lat, m)) throw std::invalid_argument("matrix is not of range " + std::to_string(m));
  Matrix p = v;
  for (int k = 1; k < power; ++k) p = (p * v).eval();
  return has_range(p, lat, power * m);
}

}  // namespace harmolat
