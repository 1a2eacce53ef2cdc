#include <omp.h>

#include "harmolat/kernels.hpp"

namespace harmolat::kernels::openmp {

std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj) {
  const int n = adj.size();
  std::vector<Distance> dist(static_cast<std::size_t>(n) * n, kUnreachable);
#pragma omp parallel num_threads(thread_count())
  {
    std::vector<Vertex> frontier;
    frontier.reserve(n);
#pragma omp for schedule(dynamic, 16)
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
  }
  return dist;
}

std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r) {
  const std::size_t width = static_cast<std::size_t>(max_r) + 1;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * width, 0);
#pragma omp parallel for schedule(static) num_threads(thread_count())
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
#pragma omp parallel num_threads(thread_count())
  {
    PairMax local;
    // rows shrink with i (upper triangle), so hand them out dynamically
#pragma omp for schedule(dynamic, 4) nowait
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i; j < n; ++j) {
        const double r = detail::convolution_pair_ratio(dist, n, i, j, mu, nu);
        ++local.count;
        if (detail::better(r, i, j, local)) {
          local.value = r;
          local.i = i;
          local.j = j;
        }
      }
    }
#pragma omp critical(harmolat_convolution_merge)
    detail::merge(best, local);
  }
  return best;
}

PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env) {
  const int n = static_cast<int>(corr.rows());
  PairMax best;
#pragma omp parallel num_threads(thread_count())
  {
    PairMax local;
#pragma omp for schedule(static) nowait
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        const Distance d = dist[static_cast<std::size_t>(i) * n + j];
        if (d == kUnreachable || d < env.min_dist) continue;
        const double r = detail::envelope_pair_ratio(corr(i, j), d, env);
        ++local.count;
        if (detail::better(r, i, j, local)) {
          local.value = r;
          local.i = i;
          local.j = j;
        }
      }
    }
#pragma omp critical(harmolat_envelope_merge)
    detail::merge(best, local);
  }
  return best;
}

std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r) {
  std::int64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(thread_count())
  for (int j = 0; j < n; ++j) {
    if (inside[j]) continue;
    const Distance* row = dist.data() + static_cast<std::size_t>(j) * n;
    for (int i = 0; i < n; ++i) {
      if (inside[i] && row[i] == r) ++total;
    }
  }
  return total;
}

}  // namespace harmolat::kernels::openmp
