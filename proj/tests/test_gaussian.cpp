#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "harmolat/bounds.hpp"
#include "harmolat/coupling.hpp"
#include "harmolat/gaussian.hpp"
#include "harmolat/rng.hpp"
#include "harmolat/spectral.hpp"
#include "oracles.hpp"

using namespace harmolat;

namespace {

Coupling ring_coupling(int n, double c) {
  auto lat = build_lattice(LatticeDescriptor::ring(n));
  return make_coupling(lat, Matrix::Identity(n, n) - c * adjacency_matrix(*lat), Matrix::Identity(n, n));
}

// Ring coupling with independent random nearest-neighbour entries in both blocks.
Coupling random_coupling(int n, std::uint64_t seed) {
  auto lat = build_lattice(LatticeDescriptor::ring(n));
  UnitRng rng(seed);
  Matrix vx = Matrix::Zero(n, n), vp = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    vx(i, j) = vx(j, i) = rng.uniform(-0.4, 0.4);
    vp(i, j) = vp(j, i) = rng.uniform(-0.4, 0.4);
  }
  vx.diagonal().setConstant(1.0);
  vp.diagonal().setConstant(1.5);
  return make_coupling(lat, vx, vp);
}

Region range_region(int first, int count, int n) {
  std::vector<Vertex> v;
  for (int k = 0; k < count; ++k) v.push_back((first + k) % n);
  return Region(v, n);
}

}  // namespace

TEST_CASE("identity coupling has the vacuum as ground state") {
  auto lat = build_lattice(LatticeDescriptor::ring(6));
  const auto c = make_coupling(lat, Matrix::Identity(6, 6), Matrix::Identity(6, 6));
  const auto s = ground_state(c);
  CHECK(max_abs(s.gamma_x - Matrix::Identity(6, 6)) <= 1e-14);
  CHECK(max_abs(s.gamma_p - Matrix::Identity(6, 6)) <= 1e-14);
  CHECK(s.temperature == 0.0);
  CHECK(corr_xx(s, 0, 3) == 0.0);
  CHECK(corr_pp(s, 1, 2) == 0.0);
}

TEST_CASE("rotating wave ground state is the vacuum") {
  for (double c : {0.1, 0.3, 0.45}) {
    const auto s = ground_state(build_rotating_wave(21, c));
    CHECK(max_abs(s.gamma_x - Matrix::Identity(21, 21)) <= 1e-10);
    CHECK(max_abs(s.gamma_p - Matrix::Identity(21, 21)) <= 1e-10);
  }
}

TEST_CASE("ring(3) position block matches the binomial series for (I - 0.3E)^(-1/2)") {
  const auto c = ring_coupling(3, 0.3);
  const auto s = ground_state(c);
  // ||0.3E|| = 0.6 on ring(3); 200 terms leave a tail far below 1e-12
  const Matrix expected = oracle::inv_sqrt_series(c.vx(), 1.0, 200);
  CHECK(max_abs(s.gamma_x - expected) <= 1e-12);
  // Vp = I: gamma_p = Vx^{1/2} = Vx * Vx^{-1/2}
  CHECK(max_abs(s.gamma_p - c.vx() * expected) <= 1e-12);
}

TEST_CASE("dual route reproduces the position block") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto c = random_coupling(12, seed);
    CHECK(max_abs(ground_state(c).gamma_x - ground_position_block_dual_route(c)) <= 1e-10);
  }
}

TEST_CASE("thermal vacuum follows the scalar mode formula") {
  auto lat = build_lattice(LatticeDescriptor::path(4));
  const auto c = make_coupling(lat, Matrix::Identity(4, 4), Matrix::Identity(4, 4));
  for (double t : {0.05, 0.5, 1.0, 3.0, 20.0}) {
    const double scale = 1.0 + 2.0 / (std::exp(2.0 / t) - 1.0);
    const auto s = thermal_state(c, t);
    CHECK(max_abs(s.gamma_x - scale * Matrix::Identity(4, 4)) <= 1e-12 * scale);
    CHECK(max_abs(s.gamma_p - scale * Matrix::Identity(4, 4)) <= 1e-12 * scale);
    CHECK(s.temperature == t);
  }
  CHECK_THROWS_AS(thermal_state(c, 0.0), std::domain_error);
  CHECK_THROWS_AS(thermal_state(c, -1.0), std::domain_error);
}

TEST_CASE("commuting and general thermal formulas agree") {
  for (double t : {0.2, 1.0, 5.0}) {
    const auto c = ring_coupling(16, 0.3);
    const auto a = thermal_state_commuting(c, t);
    const auto b = thermal_state_general(c, t);
    CHECK(max_abs(a.gamma_x - b.gamma_x) <= 1e-10);
    CHECK(max_abs(a.gamma_p - b.gamma_p) <= 1e-10);
  }
  // Vx, Vp both polynomials in E commute
  const auto rw = build_rotating_wave(15, 0.2);
  CHECK(max_abs(thermal_state_commuting(rw, 2.0).gamma_x - thermal_state_general(rw, 2.0).gamma_x) <= 1e-10);
  CHECK_THROWS_AS(thermal_state_commuting(random_coupling(10, 3), 1.0), std::invalid_argument);
}

TEST_CASE("thermal diagonals are nondecreasing in temperature") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto c = random_coupling(10, seed);
    GaussianState prev = ground_state(c);
    for (double t : {0.05, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0}) {
      const auto s = thermal_state(c, t);
      for (int i = 0; i < c.size(); ++i) {
        CHECK(s.gamma_x(i, i) >= prev.gamma_x(i, i) - 1e-12);
        CHECK(s.gamma_p(i, i) >= prev.gamma_p(i, i) - 1e-12);
      }
      prev = s;
    }
  }
}

TEST_CASE("thermal state approaches the ground state at low temperature") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto c = random_coupling(10, seed);
    const auto ms = mode_spectrum(c);
    const auto g0 = ground_state(c);
    const Matrix vx_half = matrix_function(c.vx(), ScalarFunction::sqrt());
    const Matrix vx_inv_half = matrix_function(c.vx(), ScalarFunction::inv_sqrt());
    const double sq_max = std::sqrt(ms.d.maxCoeff());
    const double sq_min = std::sqrt(ms.d.minCoeff());
    const double scale_x = operator_norm(vx_inv_half) * operator_norm(vx_inv_half) * sq_max;
    const double scale_p = operator_norm(vx_half) * operator_norm(vx_half) / sq_min;
    const double t = ms.gap / 40.0;
    const auto gt = thermal_state(c, t);
    const double occupation = 2.0 / std::expm1(ms.gap / t);
    CHECK(max_abs(gt.gamma_x - g0.gamma_x) <= scale_x * occupation);
    CHECK(max_abs(gt.gamma_p - g0.gamma_p) <= scale_p * occupation);
  }
}

TEST_CASE("ground states are pure and thermal states obey the uncertainty relation") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto c = random_coupling(14, seed);
    const Vector mu0 = symplectic_eigenvalues(ground_state(c));
    CHECK((mu0.array() - 1.0).abs().maxCoeff() <= 1e-8);
    for (double t : {0.1, 1.0, 10.0}) {
      const Vector mu = symplectic_eigenvalues(thermal_state(c, t));
      CHECK(mu.minCoeff() >= 1.0 - 1e-8);
      CHECK(mu.maxCoeff() > 1.0);
    }
  }
}

TEST_CASE("symplectic eigenvalues match the Jacobi oracle") {
  const auto s = thermal_state(random_coupling(8, 11), 0.7);
  const Matrix prod = s.gamma_x * s.gamma_p;
  // gamma_x gamma_p is similar to the symmetric gamma_x^{1/2} gamma_p gamma_x^{1/2}; reuse gamma_p^{1/2}
  Eigen::SelfAdjointEigenSolver<Matrix> es(s.gamma_p);
  const Matrix gp_half = es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  const auto ev = oracle::jacobi_eigenvalues(gp_half * s.gamma_x * gp_half);
  const Vector mu = symplectic_eigenvalues(s);
  REQUIRE(mu.size() == 8);
  for (int k = 0; k < 8; ++k) CHECK(mu(k) == doctest::Approx(std::sqrt(ev[k])).epsilon(1e-10));
  CHECK(prod.trace() == doctest::Approx(mu.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("entropy of modes") {
  CHECK(entropy_of_mode(1.0) == 0.0);
  for (double mu : {1.0 + 1e-9, 1.5, 3.0, 10.0, 1e4}) {
    CHECK(entropy_of_mode(mu) == doctest::Approx(oracle::mode_entropy(mu)).epsilon(1e-12));
  }
  // mu = 3: occupation 1, entropy 2 log2 2 - 0 = 2 bits
  CHECK(entropy_of_mode(3.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("entropy of pure states") {
  const auto c = ring_coupling(20, 0.3);
  const auto s = ground_state(c);
  const auto lat = c.lattice_ptr();
  SUBCASE("whole lattice carries no entropy") {
    std::vector<Vertex> all(20);
    for (int i = 0; i < 20; ++i) all[i] = i;
    CHECK(std::abs(entropy(s, Region(all, 20)).entropy_bits) <= 1e-8);
  }
  SUBCASE("complementary regions agree") {
    const Region half = range_region(0, 10, 20);
    const auto a = entropy(s, half);
    const auto b = entropy(s, half.complement());
    CHECK(a.entropy_bits > 1e-3);
    CHECK(std::abs(a.entropy_bits - b.entropy_bits) <= 1e-8);
    double sum = 0.0;
    for (double mu : a.symplectic_eigenvalues) sum += oracle::mode_entropy(mu);
    CHECK(a.entropy_bits == doctest::Approx(sum).epsilon(1e-12));
    CHECK(a.region == half);
  }
  SUBCASE("scattered region") {
    const Region r({0, 3, 4, 9, 15}, 20);
    CHECK(std::abs(entropy(s, r).entropy_bits - entropy(s, r.complement()).entropy_bits) <= 1e-8);
  }
  SUBCASE("product state") {
    const auto rw = ground_state(build_rotating_wave(20, 0.3));
    CHECK(std::abs(entropy(rw, range_region(3, 7, 20)).entropy_bits) <= 1e-8);
  }
}

TEST_CASE("entropy rejects covariances that violate the uncertainty relation") {
  GaussianState bad;
  bad.gamma_x = 0.5 * Matrix::Identity(2, 2);
  bad.gamma_p = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(entropy(bad, Region({0}, 2)), std::domain_error);
  // within the clipping window the mode counts as pure
  bad.gamma_x = (1.0 - 1e-9) * Matrix::Identity(2, 2);
  CHECK(entropy(bad, Region({0, 1}, 2)).entropy_bits == 0.0);
}

TEST_CASE("correlators and reduced states") {
  const auto c = ring_coupling(12, 0.3);
  const auto s = ground_state(c);
  SUBCASE("translation invariance on a circulant ring") {
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) {
        CHECK(corr_xx(s, i, j) == doctest::Approx(corr_xx(s, 0, (j - i + 12) % 12)).epsilon(1e-10));
        CHECK(corr_pp(s, i, j) == doctest::Approx(corr_pp(s, 0, (j - i + 12) % 12)).epsilon(1e-10));
      }
    }
  }
  SUBCASE("block accessors") {
    CHECK(corr(s, Block::xx, 2, 5) == corr_xx(s, 2, 5));
    CHECK(corr(s, Block::pp, 2, 5) == corr_pp(s, 2, 5));
    CHECK(&block_of(s, Block::xx) == &s.gamma_x);
    CHECK_THROWS_AS(corr_xx(s, 12, 0), std::out_of_range);
    CHECK_THROWS_AS(corr_pp(s, 0, -1), std::out_of_range);
  }
  SUBCASE("reduction takes principal submatrices") {
    const Region r({1, 4, 7}, 12);
    const auto red = reduced_state(s, r);
    REQUIRE(red.size() == 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        CHECK(red.gamma_x(a, b) == s.gamma_x(r.members()[a], r.members()[b]));
        CHECK(red.gamma_p(a, b) == s.gamma_p(r.members()[a], r.members()[b]));
      }
    std::vector<Vertex> all(12);
    for (int i = 0; i < 12; ++i) all[i] = i;
    const auto whole = reduced_state(s, Region(all, 12));
    CHECK(whole.gamma_x == s.gamma_x);
    CHECK_THROWS_AS(reduced_state(s, Region({}, 12)), std::invalid_argument);
    CHECK_THROWS_AS(reduced_state(s, Region({0}, 13)), std::invalid_argument);
  }
  SUBCASE("single site of the vacuum") {
    auto lat = build_lattice(LatticeDescriptor::ring(5));
    const auto vac = ground_state(make_coupling(lat, Matrix::Identity(5, 5), Matrix::Identity(5, 5)));
    const auto one = reduced_state(vac, Region({2}, 5));
    CHECK(one.gamma_x(0, 0) == doctest::Approx(1.0));
    CHECK(one.gamma_p(0, 0) == doctest::Approx(1.0));
  }
}

TEST_CASE("decay fits") {
  SUBCASE("exponential construction") {
    // on the finite ring the entries are K (q^r + q^{n-r}) / (1 - q^n), the infinite-ring K q^r plus its image
    const int n = 60;
    const double k = 1.5, xi = 2.0, q = std::exp(-1.0 / xi);
    for (Block block : {Block::xx, Block::pp}) {
      const auto c = build_exponential_decay(n, k, xi, block);
      const auto s = ground_state(c);
      double err = 0.0;
      for (int j = 0; j < n; ++j) {
        const double expected = k * (std::pow(q, j) + std::pow(q, n - j)) / (1.0 - std::pow(q, n));
        err = std::max(err, std::abs(corr(s, block, 0, j) - expected));
      }
      CHECK(err <= 1e-10);
      // the images bend the far tail upwards, so the fit is only close
      const auto fit = fit_decay(s, block, c.lattice());
      CHECK(fit.xi == doctest::Approx(xi).epsilon(0.02));
      CHECK(fit.points > 0);
    }
  }
  SUBCASE("gapped chain fit is no longer than the Theorem 1 length") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto c = build_disordered_chain(30, seed);
      const auto s = ground_state(c);
      const auto bound = theorem1_bound(c);
      CHECK(fit_decay(s, Block::xx, c.lattice()).xi <= bound.xx.xi);
      CHECK(fit_decay(s, Block::pp, c.lattice()).xi <= bound.pp.xi);
    }
  }
  SUBCASE("product state has no data") {
    const auto s = ground_state(build_rotating_wave(20, 0.3));
    auto lat = build_lattice(LatticeDescriptor::ring(20));
    CHECK_THROWS_AS(fit_decay(s, Block::xx, *lat), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(s, Block::pp, *lat), std::invalid_argument);
  }
  SUBCASE("algebraic correlations favour the power law") {
    auto lat = build_lattice(LatticeDescriptor::ring(40));
    const auto c = build_algebraic(lat, 3.0);
    const auto s = ground_state(c);
    const auto pw = fit_power_law(s, Block::xx, *lat);
    CHECK(pw.eta == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(pw.K == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(pw.residual < fit_decay(s, Block::xx, *lat).residual);
  }
}
