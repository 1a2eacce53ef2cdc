#pragma once

namespace harmolat {

/// Riemann zeta for real s > 1, absolute error below 1e-12 times max(1, zeta(s)).
/// Throws std::domain_error for s <= 1.
double riemann_zeta(double s);

/// Li_s(x) = sum_{k>=1} x^k / k^s for real s and 0 <= x < 1.
/// Summation stops once a rigorous bound on the remaining tail drops below
/// 1e-13 max(1, |partial sum|). Throws std::domain_error outside [0, 1).
double polylog(double s, double x);

}  // namespace harmolat
