#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "harmolat/types.hpp"

namespace harmolat {

class Coupling;

/// A = basis * diag(eigenvalues) * basis^T, eigenvalues ascending.
struct EigenDecomposition {
  Vector eigenvalues;
  Matrix basis;
};

/// Scalar functions applied to symmetric positive matrices through their spectrum.
class ScalarFunction {
 public:
  enum class Kind { identity, sqrt, inv_sqrt, inverse, thermal };

  static ScalarFunction identity() { return ScalarFunction(Kind::identity, 0.0); }
  static ScalarFunction sqrt() { return ScalarFunction(Kind::sqrt, 0.0); }
  static ScalarFunction inv_sqrt() { return ScalarFunction(Kind::inv_sqrt, 0.0); }
  static ScalarFunction inverse() { return ScalarFunction(Kind::inverse, 0.0); }
  /// z -> 2 / (exp(2 sqrt(z) / T) - 1), the Bose factor of a mode with squared frequency z.
  /// Returns 0 once 2 sqrt(z) / T exceeds 700.
  static ScalarFunction thermal(double temperature);

  Kind kind() const { return kind_; }
  double temperature() const { return temperature_; }
  std::string name() const;

  double operator()(double z) const;
  std::complex<double> operator()(std::complex<double> z) const;

  /// Whether f is defined at the real point z.
  bool defined_at(double z) const;
  /// Whether f is analytic off the ray (-inf, 0]; false only for identity (entire).
  bool has_branch_cut() const { return kind_ != Kind::identity; }

 private:
  ScalarFunction(Kind kind, double temperature) : kind_(kind), temperature_(temperature) {}
  Kind kind_;
  double temperature_;
};

/// Largest |A_ij - A_ji|, scaled by max(1, max|A_ij|).
double symmetry_defect(const Matrix& a);
double max_abs(const Matrix& a);
/// Spectral norm (largest singular value); works for non-symmetric input.
double operator_norm(const Matrix& a);
/// max_ij |(AB - BA)_ij|.
double commutator_max(const Matrix& a, const Matrix& b);

/// Symmetric eigendecomposition. Throws std::invalid_argument when the
/// symmetry defect exceeds 1e-12 and std::runtime_error on non-convergence.
EigenDecomposition eigh(const Matrix& a);

/// basis * f(diag) * basis^T, symmetrized. Throws std::domain_error when f is
/// undefined on some eigenvalue (e.g. inv_sqrt of a non-positive one).
Matrix matrix_function(const EigenDecomposition& eig, const ScalarFunction& f);
Matrix matrix_function(const Matrix& a, const ScalarFunction& f);

/// Squared mode frequencies d_i (eigenvalues of Vx^1/2 Vp Vx^1/2), ground
/// energy E0 = sum sqrt(d_i), gap = 2 sqrt(min d_i).
struct ModeSpectrum {
  Vector d;
  double e0 = 0.0;
  double gap = 0.0;
};

ModeSpectrum mode_spectrum(const Coupling& c);

/// S = (Vx^-1/2 O) (+) (Vx^1/2 O), where O diagonalizes Vx^1/2 Vp Vx^1/2.
struct SymplecticTransform {
  Matrix s;
  Vector d;  // the diagonalized squared frequencies, in the column order of O
};

SymplecticTransform symplectic_transform(const Coupling& c);
/// [[0, I], [-I, 0]] of size 2n.
Matrix symplectic_form(int n);

/// Degree-k Chebyshev interpolant p of f on [lower, upper], evaluated at A.
struct ChebyshevApproximation {
  Matrix approx;
  /// max |p - f| on a 10^4-point grid of the interval.
  double sup_error = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int degree = 0;
  Vector coefficients;  // in the Chebyshev basis T_0..T_k of the mapped variable
};

/// Coefficients of the interpolant through the k+1 Chebyshev points of the
/// second kind, for f composed with psi(z) = ((b - a) z + a + b) / 2.
Vector chebyshev_coefficients(const ScalarFunction& f, double a, double b, int degree);
double chebyshev_evaluate(const Vector& coefficients, double x);

/// When `interval` is empty, [lower, upper] is the exact spectral interval of A.
ChebyshevApproximation chebyshev_matrix_function(const Matrix& a, const ScalarFunction& f, int degree,
                                                 std::optional<std::pair<double, double>> interval = {});

}  // namespace harmolat
