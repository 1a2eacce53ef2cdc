#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's numerical code; they are deliberately naive.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Floyd-Warshall on an edge list.
inline std::vector<std::vector<int>> floyd(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// L1 distance on a torus or open box of extents dims.
inline int box_distance(const std::vector<int>& dims, const std::vector<int>& a, const std::vector<int>& b,
                        bool periodic) {
  int total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int diff = std::abs(a[k] - b[k]);
    if (periodic) diff = std::min(diff, dims[k] - diff);
    total += diff;
  }
  return total;
}

/// Row-major coordinates, last axis fastest.
inline std::vector<int> coords(const std::vector<int>& dims, int v) {
  std::vector<int> c(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    c[k] = v % dims[k];
    v /= dims[k];
  }
  return c;
}

inline Matrix ring_adjacency(int n) {
  Matrix e = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    e(i, (i + 1) % n) = 1.0;
    e((i + 1) % n, i) = 1.0;
  }
  return e;
}

/// (1 - x)^{-1/2} = sum_k a_k x^k, a_k = (2k)! / (4^k (k!)^2).
inline double series_coefficient(int k) {
  double a = 1.0;
  for (int j = 1; j <= k; ++j) a *= (2.0 * j - 1.0) / (2.0 * j);
  return a;
}

/// V^{-1/2} for V = s (I - X) with ||X|| < 1, by the truncated binomial series.
inline Matrix inv_sqrt_series(const Matrix& v, double s, int terms) {
  const Matrix x = Matrix::Identity(v.rows(), v.cols()) - v / s;
  Matrix power = Matrix::Identity(v.rows(), v.cols());
  Matrix sum = Matrix::Zero(v.rows(), v.cols());
  for (int k = 0; k < terms; ++k) {
    sum += series_coefficient(k) * power;
    power = power * x;
  }
  return sum / std::sqrt(s);
}

/// sum_{k=1}^{n} k^{-s} added smallest-first, plus the integral/midpoint tail
/// n^{1-s}/(s-1) - n^{-s}/2 + s n^{-s-1}/12.
inline double zeta_bruteforce(double s, long n) {
  long double sum = 0.0L;
  for (long k = n; k >= 1; --k) sum += std::pow(static_cast<long double>(k), static_cast<long double>(-s));
  const double nn = static_cast<double>(n);
  return static_cast<double>(sum) + std::pow(nn, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(nn, -s) + s * std::pow(nn, -s - 1.0) / 12.0;
}

/// sum_{k=1}^{n} x^k / k^s, smallest terms first.
inline double polylog_bruteforce(double s, double x, long n) {
  long double sum = 0.0L;
  for (long k = n; k >= 1; --k) {
    sum += std::pow(static_cast<long double>(x), static_cast<long double>(k)) *
           std::pow(static_cast<long double>(k), static_cast<long double>(-s));
  }
  return static_cast<double>(sum);
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const int n = static_cast<int>(a.rows());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Von Neumann entropy (bits) of one bosonic mode with symplectic eigenvalue mu,
/// written through the thermal occupation N = (mu - 1)/2: (N+1)log2(N+1) - N log2 N.
inline double mode_entropy(double mu) {
  const double occ = 0.5 * (mu - 1.0);
  if (occ <= 0.0) return 0.0;
  return (occ + 1.0) * std::log2(occ + 1.0) - occ * std::log2(occ);
}

}  // namespace oracle
