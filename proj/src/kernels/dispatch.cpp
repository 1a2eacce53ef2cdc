#include <cstdlib>
#include <string>

#include <omp.h>

#include "harmolat/kernels.hpp"

namespace harmolat::kernels {

int thread_count() {
  if (const char* env = std::getenv("HARMOLAT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // unparsable value: fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
}

bool parallel_enabled() { return thread_count() > 1; }

std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj) {
  return parallel_enabled() ? openmp::all_pairs_bfs(adj) : serial::all_pairs_bfs(adj);
}

std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r) {
  return parallel_enabled() ? openmp::sphere_counts(dist, n, max_r) : serial::sphere_counts(dist, n, max_r);
}

PairMax convolution_ratio(std::span<const Distance> dist, int n, double mu, double nu) {
  return parallel_enabled() ? openmp::convolution_ratio(dist, n, mu, nu)
                            : serial::convolution_ratio(dist, n, mu, nu);
}

PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env) {
  return parallel_enabled() ? openmp::envelope_ratio(corr, dist, env) : serial::envelope_ratio(corr, dist, env);
}

std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r) {
  return parallel_enabled() ? openmp::boundary_pairs(dist, n, inside, r)
                            : serial::boundary_pairs(dist, n, inside, r);
}

}  // namespace harmolat::kernels
