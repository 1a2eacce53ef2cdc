#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "harmolat/types.hpp"

namespace harmolat {

/// How to build a lattice. Mirrors the JSON lattice descriptor
/// {"kind", "n", "dims", "periodic", "edges"}.
struct LatticeDescriptor {
  enum class Kind { ring, path, cubic, explicit_edges };

  Kind kind = Kind::ring;
  int n = 0;               // ring/path length, or vertex count for explicit graphs
  std::vector<int> dims;   // cubic extents, vertex index is row-major in dims
  bool periodic = false;   // cubic only
  std::vector<std::pair<int, int>> edges;  // explicit only

  static LatticeDescriptor ring(int n);
  static LatticeDescriptor path(int n);
  static LatticeDescriptor cubic(std::vector<int> dims, bool periodic);
  static LatticeDescriptor explicit_graph(int n, std::vector<std::pair<int, int>> edges);
};

const char* kind_name(LatticeDescriptor::Kind kind);

/// Finite simple graph with all-pairs graph distances. Immutable once built.
class Lattice {
 public:
  Lattice(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges, LatticeDescriptor descriptor);

  int size() const { return n_; }
  Distance dist(Vertex i, Vertex j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  bool adjacent(Vertex i, Vertex j) const { return dist(i, j) == 1; }
  std::span<const Vertex> neighbors(Vertex i) const;
  int degree(Vertex i) const { return offsets_[i + 1] - offsets_[i]; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(targets_.size()) / 2; }

  /// Row-major |L| x |L| distance table.
  std::span<const Distance> distances() const { return dist_; }
  bool connected() const { return connected_; }
  /// Largest finite distance.
  Distance diameter() const { return diameter_; }
  const LatticeDescriptor& descriptor() const { return descriptor_; }

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

 private:
  int n_;
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Distance> dist_;
  bool connected_ = true;
  Distance diameter_ = 0;
  LatticeDescriptor descriptor_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Sorted, duplicate-free vertex subset of a lattice.
class Region {
 public:
  Region() = default;
  /// Sorts and de-duplicates; throws std::out_of_range for vertices outside [0, lattice_size).
  Region(std::vector<Vertex> members, int lattice_size);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  int lattice_size() const { return lattice_size_; }
  Region complement() const;
  /// 0/1 membership mask of length lattice_size().
  std::vector<std::uint8_t> mask() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Vertex> members_;
  int lattice_size_ = 0;
};

/// Sphere-growth constants: |S_r(i)| <= c * r^(d-1) for every vertex i and 1 <= r <= diameter.
struct DimensionEstimate {
  double d = 1.0;
  double c = 1.0;
};

struct Assumption1Certificate {
  double mu = 0.0;
  double nu = 0.0;
  double l0 = 0.0;
  bool holds = false;
  std::pair<Vertex, Vertex> worst_pair{-1, -1};
};

LatticePtr build_lattice(const LatticeDescriptor& spec);

/// Vertex index of a cubic-lattice coordinate (row-major, last axis fastest).
Vertex cubic_index(std::span<const int> dims, std::span<const int> coords);
std::vector<int> cubic_coords(std::span<const int> dims, Vertex v);

std::int64_t sphere_size(const Lattice& lat, Vertex i, Distance r);
/// max_i |B_r(i)|, the exact finite-graph value of v_{d,r}.
std::int64_t ball_volume(const Lattice& lat, Distance r);
/// counts[i * (diameter+1) + r] = |S_r(i)|.
std::vector<std::int64_t> sphere_profile(const Lattice& lat);

/// Finite-size surrogate for the lattice dimension.
///
/// c(d) = max_{i, 1<=r<=diam} |S_r(i)| / r^(d-1) is non-increasing in d and
/// levels off at the maximal degree once the r = 1 shell dominates. We return
/// the smallest d >= 1 (bisection, precision 1e-3) at which c(d) has reached
/// that plateau, together with c = c(d). The sphere inequality is re-verified
/// exactly before returning. Throws std::invalid_argument on disconnected graphs.
DimensionEstimate fit_dimension(const Lattice& lat);

/// True iff |S_r(i)| <= c r^(d-1) for every i and 1 <= r <= diameter.
bool satisfies_sphere_bound(const Lattice& lat, const DimensionEstimate& dims);

/// s(I): ordered boundary pairs (outside, inside) at distance one.
std::int64_t surface_area(const Lattice& lat, const Region& region);
/// Vertices outside I adjacent to I.
Region outer_boundary(const Lattice& lat, const Region& region);
/// N_r: pairs (j outside, i inside) with dist(i, j) = r.
std::int64_t boundary_pair_count(const Lattice& lat, const Region& region, Distance r);

/// l0 = max_{i,j} sum_k e^{-mu dist(i,k)} e^{-mu dist(k,j)} / e^{-nu dist(i,j)}.
/// Pairs in different components contribute nothing.
Assumption1Certificate verify_assumption1(const Lattice& lat, double mu, double nu);

/// Closed-form l0 bound for an open d-dimensional cubic lattice with nu = mu / 2.
double cubic_assumption1_bound(double mu, int dimension);

}  // namespace harmolat
