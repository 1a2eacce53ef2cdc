#include "harmolat/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace harmolat {

namespace {

// Compensated running sum.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double riemann_zeta(double s) {
  if (!(s > 1.0)) throw std::domain_error("riemann_zeta needs s > 1, got " + std::to_string(s));
  // Direct sum up to N-1, then Euler-Maclaurin for the tail starting at N:
  // N^{1-s}/(s-1) + N^{-s}/2 + sum_j B_2j/(2j)! s(s+1)..(s+2j-2) N^{-s-2j+1}.
  // With N = 64 the first omitted correction is far below 1e-16 for s <= 60.
  constexpr int n = 64;
  KahanSum acc;
  for (int k = n - 1; k >= 1; --k) acc.add(std::pow(static_cast<double>(k), -s));
  const double nn = n;
  acc.add(std::pow(nn, 1.0 - s) / (s - 1.0));
  acc.add(0.5 * std::pow(nn, -s));
  // B_2j / (2j)!
  constexpr std::array<double, 6> b2j = {1.0 / 12.0,        -1.0 / 720.0,           1.0 / 30240.0,
                                         -1.0 / 1209600.0, 1.0 / 47900160.0, -691.0 / 1307674368000.0};
  double rising = s;                // s (s+1) ... (s+2j-2)
  double power = std::pow(nn, -s - 1.0);  // N^{-s-2j+1}
  for (std::size_t j = 0; j < b2j.size(); ++j) {
    acc.add(b2j[j] * rising * power);
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= nn * nn;
  }
  return acc.sum;
}

double polylog(double s, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("polylog needs 0 <= x < 1, got " + std::to_string(x));
  if (x == 0.0) return 0.0;
  constexpr long kMaxTerms = 200'000'000;
  const double log_x = std::log(x);
  KahanSum acc;
  for (long k = 1; k <= kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    const double term = std::exp(kd * log_x - s * std::log(kd));
    acc.add(term);
    // t_{k+1}/t_k = x (k/(k+1))^s. For s >= 0 this is below x; for s < 0 it
    // is x (1 + 1/k)^{|s|}, which decreases in k. Either way, once the ratio
    // r at k is below 1 every later ratio is too, and the tail is <= t_k r/(1-r).
    const double ratio = s >= 0.0 ? x : x * std::pow(1.0 + 1.0 / kd, -s);
    if (ratio < 1.0) {
      const double tail = term * ratio / (1.0 - ratio);
      if (tail < 1e-13 * std::max(1.0, std::abs(acc.sum))) return acc.sum;
    }
  }
  throw std::runtime_error("polylog did not converge for s = " + std::to_string(s) + ", x = " + std::to_string(x));
}

}  // namespace harmolat
