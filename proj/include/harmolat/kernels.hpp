#pragma once

// Data-parallel inner loops of the library. Every kernel exists twice: a plain
// serial reference in `serial::` and an OpenMP version in `openmp::`. The two
// must produce bitwise-identical results; tests/test_kernels.cpp enforces it and
// bench/ compares their timings. Library code calls the unqualified dispatchers
// at the bottom of this header.

#include <cstdint>
#include <span>
#include <vector>

#include "harmolat/types.hpp"

namespace harmolat::kernels {

/// Result of an arg-max sweep over vertex pairs. Ties are broken towards the
/// lexicographically smallest (i, j) so the answer does not depend on how the
/// sweep was partitioned.
struct PairMax {
  double value = 0.0;
  Vertex i = -1;
  Vertex j = -1;
  std::int64_t count = 0;  // pairs visited
};

/// Envelope K * exp(-dist / xi) applied from `min_dist` on. xi == 0 is the
/// degenerate envelope: K at dist 0, zero beyond. Correlations whose magnitude
/// is at most `zero_tol` count as exact zeros against a zero envelope.
struct Envelope {
  double prefactor = 0.0;
  double xi = 0.0;
  Distance min_dist = 0;
  double zero_tol = 0.0;
};

/// Compressed adjacency: neighbors of v are targets[offsets[v] .. offsets[v+1]).
struct AdjacencyView {
  std::span<const std::int32_t> offsets;
  std::span<const Vertex> targets;
  int size() const { return static_cast<int>(offsets.size()) - 1; }
};

namespace serial {
std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj);
std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r);
PairMax convolution_ratio(std::span<const Distance> dist, int n, double mu, double nu);
PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env);
std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r);
}  // namespace serial

namespace openmp {
std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj);
std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r);
PairMax convolution_ratio(std::span<const Distance> dist, int n, double mu, double nu);
PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env);
std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r);
}  // namespace openmp

/// Worker threads for the OpenMP kernels: HARMOLAT_THREADS when set to a
/// positive integer, otherwise the OpenMP default.
int thread_count();

/// True when the dispatchers below route to the OpenMP kernels.
bool parallel_enabled();

std::vector<Distance> all_pairs_bfs(const AdjacencyView& adj);
std::vector<std::int64_t> sphere_counts(std::span<const Distance> dist, int n, Distance max_r);
PairMax convolution_ratio(std::span<const Distance> dist, int n, double mu, double nu);
PairMax envelope_ratio(const Matrix& corr, std::span<const Distance> dist, const Envelope& env);
std::int64_t boundary_pairs(std::span<const Distance> dist, int n, std::span<const std::uint8_t> inside,
                            Distance r);

// Shared by both implementations.
namespace detail {

inline bool better(double value, Vertex i, Vertex j, const PairMax& cur) {
  if (cur.i < 0) return true;
  if (value != cur.value) return value > cur.value;
  return i < cur.i || (i == cur.i && j < cur.j);
}

inline void merge(PairMax& into, const PairMax& other) {
  into.count += other.count;
  if (other.i >= 0 && better(other.value, other.i, other.j, into)) {
    into.value = other.value;
    into.i = other.i;
    into.j = other.j;
  }
}

double envelope_pair_ratio(double corr, Distance d, const Envelope& env);
double convolution_pair_ratio(std::span<const Distance> dist, int n, Vertex i, Vertex j, double mu,
                              double nu);

}  // namespace detail

}  // namespace harmolat::kernels
