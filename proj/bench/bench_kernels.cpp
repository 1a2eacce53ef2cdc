// Serial reference vs OpenMP kernels on lattices of growing size.
// The OpenMP variants use HARMOLAT_THREADS (or the OpenMP default) threads.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "harmolat/kernels.hpp"
#include "harmolat/lattice.hpp"
#include "harmolat/rng.hpp"

using namespace harmolat;
namespace k = harmolat::kernels;

namespace {

LatticePtr square(int side) { return build_lattice(LatticeDescriptor::cubic({side, side}, true)); }

struct Csr {
  std::vector<std::int32_t> offsets;
  std::vector<Vertex> targets;
};

Csr adjacency(const Lattice& lat) {
  Csr c;
  c.offsets.push_back(0);
  for (Vertex v = 0; v < lat.size(); ++v) {
    for (Vertex w : lat.neighbors(v)) c.targets.push_back(w);
    c.offsets.push_back(static_cast<std::int32_t>(c.targets.size()));
  }
  return c;
}

Matrix decaying(const Lattice& lat) {
  UnitRng rng(3);
  Matrix m(lat.size(), lat.size());
  for (Vertex i = 0; i < lat.size(); ++i)
    for (Vertex j = 0; j < lat.size(); ++j) m(i, j) = rng.uniform(-1.0, 1.0) * std::exp(-0.4 * lat.dist(i, j));
  return m;
}

template <bool Parallel>
void bfs(benchmark::State& state) {
  const auto lat = square(static_cast<int>(state.range(0)));
  const auto csr = adjacency(*lat);
  const k::AdjacencyView view{csr.offsets, csr.targets};
  for (auto _ : state) {
    auto d = Parallel ? k::openmp::all_pairs_bfs(view) : k::serial::all_pairs_bfs(view);
    benchmark::DoNotOptimize(d.data());
  }
  state.counters["sites"] = lat->size();
}

template <bool Parallel>
void convolution(benchmark::State& state) {
  const auto lat = square(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? k::openmp::convolution_ratio(lat->distances(), lat->size(), 1.0, 0.5)
                      : k::serial::convolution_ratio(lat->distances(), lat->size(), 1.0, 0.5);
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["sites"] = lat->size();
}

template <bool Parallel>
void envelope(benchmark::State& state) {
  const auto lat = square(static_cast<int>(state.range(0)));
  const Matrix corr = decaying(*lat);
  const k::Envelope env{1.0, 2.5, 0, 0.0};
  for (auto _ : state) {
    auto r = Parallel ? k::openmp::envelope_ratio(corr, lat->distances(), env)
                      : k::serial::envelope_ratio(corr, lat->distances(), env);
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["sites"] = lat->size();
}

template <bool Parallel>
void spheres(benchmark::State& state) {
  const auto lat = square(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto c = Parallel ? k::openmp::sphere_counts(lat->distances(), lat->size(), lat->diameter())
                      : k::serial::sphere_counts(lat->distances(), lat->size(), lat->diameter());
    benchmark::DoNotOptimize(c.data());
  }
  state.counters["sites"] = lat->size();
}

}  // namespace

BENCHMARK(bfs<false>)->Name("all_pairs_bfs/serial")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(bfs<true>)->Name("all_pairs_bfs/openmp")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(convolution<false>)->Name("convolution_ratio/serial")->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(convolution<true>)->Name("convolution_ratio/openmp")->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(envelope<false>)->Name("envelope_ratio/serial")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(envelope<true>)->Name("envelope_ratio/openmp")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(spheres<false>)->Name("sphere_counts/serial")->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(spheres<true>)->Name("sphere_counts/openmp")->Arg(16)->Arg(32)->Arg(48);

BENCHMARK_MAIN();
