#include "harmolat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "harmolat/coupling.hpp"

namespace harmolat {

namespace {

constexpr double kThermalCutoff = 700.0;

}  // namespace

ScalarFunction ScalarFunction::thermal(double temperature) {
  if (!(temperature > 0.0)) throw std::domain_error("thermal function needs T > 0");
  return ScalarFunction(Kind::thermal, temperature);
}

std::string ScalarFunction::name() const {
  switch (kind_) {
    case Kind::identity: return "identity";
    case Kind::sqrt: return "sqrt";
    case Kind::inv_sqrt: return "inv_sqrt";
    case Kind::inverse: return "inverse";
    case Kind::thermal: return "thermal";
  }
  return "?";
}

bool ScalarFunction::defined_at(double z) const {
  switch (kind_) {
    case Kind::identity: return std::isfinite(z);
    case Kind::sqrt: return z >= 0.0;
    default: return z > 0.0;
  }
}

double ScalarFunction::operator()(double z) const {
  switch (kind_) {
    case Kind::identity: return z;
    case Kind::sqrt: return std::sqrt(z);
    case Kind::inv_sqrt: return 1.0 / std::sqrt(z);
    case Kind::inverse: return 1.0 / z;
    case Kind::thermal: {
      const double x = 2.0 * std::sqrt(z) / temperature_;
      return x > kThermalCutoff ? 0.0 : 2.0 / std::expm1(x);
    }
  }
  return 0.0;
}

std::complex<double> ScalarFunction::operator()(std::complex<double> z) const {
  switch (kind_) {
    case Kind::identity: return z;
    case Kind::sqrt: return std::sqrt(z);
    case Kind::inv_sqrt: return 1.0 / std::sqrt(z);
    case Kind::inverse: return 1.0 / z;
    case Kind::thermal: {
      const std::complex<double> x = 2.0 * std::sqrt(z) / temperature_;
      if (x.real() > kThermalCutoff) return 0.0;
      return 2.0 / (std::exp(x) - 1.0);
    }
  }
  return 0.0;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double symmetry_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return max_abs(a - a.transpose()) / std::max(1.0, max_abs(a));
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.transpose() * a, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double commutator_max(const Matrix& a, const Matrix& b) { return max_abs(a * b - b * a); }

EigenDecomposition eigh(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigh: matrix is not square");
  if (symmetry_defect(a) > 1e-12) throw std::invalid_argument("eigh: matrix is not symmetric");
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix matrix_function(const EigenDecomposition& eig, const ScalarFunction& f) {
  Vector fv(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < fv.size(); ++k) {
    const double z = eig.eigenvalues(k);
    if (!f.defined_at(z)) {
      throw std::domain_error("matrix_function: " + f.name() + " undefined at eigenvalue " + std::to_string(z));
    }
    fv(k) = f(z);
  }
  Matrix out = eig.basis * fv.asDiagonal() * eig.basis.transpose();
  return 0.5 * (out + out.transpose());
}

Matrix matrix_function(const Matrix& a, const ScalarFunction& f) { return matrix_function(eigh(a), f); }

namespace {

// Vx^{1/2}, Vx^{-1/2} and M = Vx^{1/2} Vp Vx^{1/2}
struct Symmetrized {
  Matrix vx_half;
  Matrix vx_inv_half;
  EigenDecomposition m;
};

Symmetrized symmetrize(const Coupling& c) {
  const auto vx = eigh(c.vx());
  Symmetrized out;
  out.vx_half = matrix_function(vx, ScalarFunction::sqrt());
  out.vx_inv_half = matrix_function(vx, ScalarFunction::inv_sqrt());
  Matrix m = out.vx_half * c.vp() * out.vx_half;
  out.m = eigh(0.5 * (m + m.transpose()));
  return out;
}

}  // namespace

ModeSpectrum mode_spectrum(const Coupling& c) {
  const auto sym = symmetrize(c);
  ModeSpectrum ms;
  ms.d = sym.m.eigenvalues;
  if (ms.d.size() == 0 || ms.d.minCoeff() <= 0.0) {
    throw std::domain_error("mode_spectrum: non-positive squared mode frequency");
  }
  ms.e0 = ms.d.cwiseSqrt().sum();
  ms.gap = 2.0 * std::sqrt(ms.d.minCoeff());
  return ms;
}

SymplecticTransform symplectic_transform(const Coupling& c) {
  const auto sym = symmetrize(c);
  const Eigen::Index n = c.vx().rows();
  SymplecticTransform st;
  st.s = Matrix::Zero(2 * n, 2 * n);
  st.s.topLeftCorner(n, n) = sym.vx_inv_half * sym.m.basis;
  st.s.bottomRightCorner(n, n) = sym.vx_half * sym.m.basis;
  st.d = sym.m.eigenvalues;
  return st;
}

Matrix symplectic_form(int n) {
  Matrix sigma = Matrix::Zero(2 * n, 2 * n);
  sigma.topRightCorner(n, n) = Matrix::Identity(n, n);
  sigma.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return sigma;
}

Vector chebyshev_coefficients(const ScalarFunction& f, double a, double b, int degree) {
  if (degree < 1) throw std::invalid_argument("Chebyshev degree must be >= 1");
  const int k = degree;
  Vector values(k + 1);
  for (int j = 0; j <= k; ++j) {
    const double x = std::cos(std::numbers::pi * j / k);
    const double z = 0.5 * ((b - a) * x + a + b);
    if (!f.defined_at(z)) throw std::domain_error("chebyshev: " + f.name() + " not finite on the interval");
    values(j) = f(z);
  }
  Vector coeffs(k + 1);
  for (int m = 0; m <= k; ++m) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
      const double w = (j == 0 || j == k) ? 0.5 : 1.0;
      s += w * values(j) * std::cos(std::numbers::pi * m * j / k);
    }
    coeffs(m) = 2.0 * s / k;
  }
  coeffs(0) *= 0.5;
  coeffs(k) *= 0.5;
  return coeffs;
}

double chebyshev_evaluate(const Vector& coefficients, double x) {
  // Clenshaw
  double b1 = 0.0;
  double b2 = 0.0;
  for (Eigen::Index m = coefficients.size() - 1; m >= 1; --m) {
    const double b0 = 2.0 * x * b1 - b2 + coefficients(m);
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + coefficients(0);
}

ChebyshevApproximation chebyshev_matrix_function(const Matrix& a, const ScalarFunction& f, int degree,
                                                 std::optional<std::pair<double, double>> interval) {
  if (a.rows() != a.cols()) throw std::invalid_argument("chebyshev: matrix is not square");
  double lo = 0.0;
  double hi = 0.0;
  if (interval) {
    std::tie(lo, hi) = *interval;
  } else {
    const auto ev = eigh(a).eigenvalues;
    lo = ev.minCoeff();
    hi = ev.maxCoeff();
  }
  if (hi < lo) throw std::invalid_argument("chebyshev: empty spectral interval");
  if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) {
    // scalar spectrum: widen so the affine map stays invertible
    const double pad = 1e-8 * std::max(1.0, std::abs(hi));
    lo -= pad;
    hi += pad;
  }

  ChebyshevApproximation out;
  out.lower = lo;
  out.upper = hi;
  out.degree = degree;
  out.coefficients = chebyshev_coefficients(f, lo, hi, degree);

  constexpr int kGrid = 10000;
  for (int g = 0; g < kGrid; ++g) {
    const double x = -1.0 + 2.0 * g / (kGrid - 1);
    const double z = 0.5 * ((hi - lo) * x + lo + hi);
    const double fz = f(z);
    if (!f.defined_at(z) || !std::isfinite(fz)) throw std::domain_error("chebyshev: f not finite on interval");
    out.sup_error = std::max(out.sup_error, std::abs(chebyshev_evaluate(out.coefficients, x) - fz));
  }

  // B = psi^{-1}(A); T_{m+1} = 2 B T_m - T_{m-1} keeps exact zeros outside the range of B^m
  const Eigen::Index n = a.rows();
  const Matrix eye = Matrix::Identity(n, n);
  const Matrix mapped = (2.0 * a - (lo + hi) * eye) / (hi - lo);
  Matrix t_prev = eye;
  Matrix t_cur = mapped;
  out.approx = out.coefficients(0) * t_prev + out.coefficients(1) * t_cur;
  for (int m = 2; m <= degree; ++m) {
    Matrix t_next = 2.0 * mapped * t_cur - t_prev;
    out.approx += out.coefficients(m) * t_next;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return out;
}

}  // namespace harmolat
