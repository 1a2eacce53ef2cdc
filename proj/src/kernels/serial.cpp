#include <cmath>
#include <limits>
#include <queue>

#include "harmolat/kernels.hpp"

namespace harmolat::kernels {

namespace detail {

double envelope_pair_ratio(double corr, Distance d, const Envelope& env) {
  const double c = std::abs(corr);
  const bool zero_envelope = env.prefactor <= 0.0 || (env.xi == 0.0 && d > 0);
  if (zero_envelope) return c <= env.zero_tol ? 0.0 : std::numeric_limits<double>::infinity();
  if (c == 0.0) return 0.0;
  const double decay = env.xi == 0.0 ? 0.0 : static_cast<double>(d) / env.xi;
  // log-space so that large d / xi cannot overflow
  return std::exp(std::log(c) - std::log(env.prefactor) + decay);
}

double convolution_pair_ratio(std::span<const Distance> dist, int n, Vertex i, Vertex j, double mu,
                              double nu) {
  const Distance dij = dist[static_cast<std::size_t>(i) * n + j];
  if (dij == kUnreachable) return 0.0;
  const Distance* row_i = dist.data() + static_cast<std::size_t>(i) * n;
  const Distance* row_j = dist.data() + static_cast<std::size_t>(j) * n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    if (row_i[k] == kUnreachable || row_j[k] == kUnreachable) continue;
    sum += std::exp(-mu * (static_cast<double>(row_i[k]) + row_j[k]) + nu * dij);
  }
  return sum;
}

}  // namespace detail

namespace serial {

std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj) {
  const int n = adj.size();
  std::vector<Distance> dist(static_cast<std::size_t>(n) * n, kUnreachable);
  std::vector<Vertex> frontier;
  frontier.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    Distance* row = dist.data() + static_cast<std::size_t>(s) * n;
    frontier.clear();
    frontier.push_back(s);
    row[s] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Vertex u = frontier[head];
      for (auto e = adj.offsets[u]; e < adj.offsets[u + 1]; ++e) {
        const Vertex v = adj.targets[e];
        if (row[v] == kUnreachable) {
          row[v] = row[u] + 1;
          frontier.push_back(v);
        }
      }
    }
  }
  return dist;
}

std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r) {
  const std::size_t width = static_cast<std::size_t>(max_r) + 1;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * width, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Distance d = dist[static_cast<std::size_t>(i) * n + j];
      if (d <= max_r) ++counts[i * width + d];
    }
  }
  return counts;
}

PairMax convolution_ratio(std::span<const Distance> dist, int n, double mu, double nu) {
  PairMax best;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i; j < n; ++j) {
      const double r = detail::convolution_pair_ratio(dist, n, i, j, mu, nu);
      ++best.count;
      if (detail::better(r, i, j, best)) {
        best.value = r;
        best.i = i;
        best.j = j;
      }
    }
  }
  return best;
}

PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env) {
  const int n = static_cast<int>(corr.rows());
  PairMax best;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const Distance d = dist[static_cast<std::size_t>(i) * n + j];
      if (d == kUnreachable || d < env.min_dist) continue;
      const double r = detail::envelope_pair_ratio(corr(i, j), d, env);
      ++best.count;
      if (detail::better(r, i, j, best)) {
        best.value = r;
        best.i = i;
        best.j = j;
      }
    }
  }
  return best;
}

std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r) {
  std::int64_t total = 0;
  for (int j = 0; j < n; ++j) {
    if (inside[j]) continue;
    const Distance* row = dist.data() + static_cast<std::size_t>(j) * n;
    for (int i = 0; i < n; ++i) {
      if (inside[i] && row[i] == r) ++total;
    }
  }
  return total;
}

}  // namespace serial
}  // namespace harmolat::kernels
