#include "harmolat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "harmolat/kernels.hpp"

namespace harmolat {

LatticeDescriptor LatticeDescriptor::ring(int n) {
  LatticeDescriptor d;
  d.kind = Kind::ring;
  d.n = n;
  return d;
}

LatticeDescriptor LatticeDescriptor::path(int n) {
  LatticeDescriptor d;
  d.kind = Kind::path;
  d.n = n;
  return d;
}

LatticeDescriptor LatticeDescriptor::cubic(std::vector<int> dims, bool periodic) {
  LatticeDescriptor d;
  d.kind = Kind::cubic;
  d.dims = std::move(dims);
  d.periodic = periodic;
  return d;
}

LatticeDescriptor LatticeDescriptor::explicit_graph(int n, std::vector<std::pair<int, int>> edges) {
  LatticeDescriptor d;
  d.kind = Kind::explicit_edges;
  d.n = n;
  d.edges = std::move(edges);
  return d;
}

const char* kind_name(LatticeDescriptor::Kind kind) {
  switch (kind) {
    case LatticeDescriptor::Kind::ring: return "ring";
    case LatticeDescriptor::Kind::path: return "path";
    case LatticeDescriptor::Kind::cubic: return "cubic";
    case LatticeDescriptor::Kind::explicit_edges: return "explicit";
  }
  return "?";
}

Lattice::Lattice(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                 LatticeDescriptor descriptor)
    : n_(vertex_count), descriptor_(std::move(descriptor)) {
  if (n_ < 1) throw std::invalid_argument("lattice needs at least one vertex");

  std::vector<std::vector<Vertex>> adj(n_);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") references a vertex outside [0, " + std::to_string(n_) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    offsets_[v + 1] = offsets_[v] + static_cast<std::int32_t>(list.size());
  }
  targets_.reserve(offsets_.back());
  for (const auto& list : adj) targets_.insert(targets_.end(), list.begin(), list.end());

  dist_ = kernels::all_pairs_bfs({offsets_, targets_});
  for (Distance d : dist_) {
    if (d == kUnreachable) {
      connected_ = false;
    } else {
      diameter_ = std::max(diameter_, d);
    }
  }
}

std::span<const Vertex> Lattice::neighbors(Vertex i) const {
  return std::span<const Vertex>(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

Region::Region(std::vector<Vertex> members, int lattice_size)
    : members_(std::move(members)), lattice_size_(lattice_size) {
  for (Vertex v : members_) {
    if (v < 0 || v >= lattice_size) {
      throw std::out_of_range("region member " + std::to_string(v) + " outside lattice of size " +
                              std::to_string(lattice_size));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Region::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Region Region::complement() const {
  std::vector<Vertex> out;
  out.reserve(lattice_size_ - members_.size());
  auto it = members_.begin();
  for (Vertex v = 0; v < lattice_size_; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      out.push_back(v);
    }
  }
  return Region(std::move(out), lattice_size_);
}

std::vector<std::uint8_t> Region::mask() const {
  std::vector<std::uint8_t> m(lattice_size_, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

Vertex cubic_index(std::span<const int> dims, std::span<const int> coords) {
  if (dims.size() != coords.size()) throw std::invalid_argument("coordinate rank mismatch");
  Vertex idx = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    if (coords[a] < 0 || coords[a] >= dims[a]) throw std::out_of_range("cubic coordinate out of range");
    idx = idx * dims[a] + coords[a];
  }
  return idx;
}

std::vector<int> cubic_coords(std::span<const int> dims, Vertex v) {
  std::vector<int> coords(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    coords[a] = v % dims[a];
    v /= dims[a];
  }
  return coords;
}

LatticePtr build_lattice(const LatticeDescriptor& spec) {
  using Kind = LatticeDescriptor::Kind;
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = 0;
  switch (spec.kind) {
    case Kind::ring:
    case Kind::path: {
      n = spec.n;
      if (n < 2) throw std::invalid_argument(std::string(kind_name(spec.kind)) + " needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (spec.kind == Kind::ring && n > 2) edges.emplace_back(n - 1, 0);
      break;
    }
    case Kind::cubic: {
      if (spec.dims.empty()) throw std::invalid_argument("cubic lattice needs at least one extent");
      n = 1;
      for (int e : spec.dims) {
        if (e < 1) throw std::invalid_argument("cubic extents must be positive");
        n *= e;
      }
      if (n < 2) throw std::invalid_argument("cubic lattice needs at least two vertices");
      for (Vertex v = 0; v < n; ++v) {
        auto coords = cubic_coords(spec.dims, v);
        for (std::size_t a = 0; a < spec.dims.size(); ++a) {
          auto next = coords;
          if (coords[a] + 1 < spec.dims[a]) {
            next[a] = coords[a] + 1;
          } else if (spec.periodic && spec.dims[a] > 2) {
            next[a] = 0;
          } else {
            continue;
          }
          edges.emplace_back(v, cubic_index(spec.dims, next));
        }
      }
      break;
    }
    case Kind::explicit_edges: {
      n = spec.n;
      if (n < 1) throw std::invalid_argument("explicit graph needs n >= 1");
      for (auto [u, v] : spec.edges) edges.emplace_back(u, v);
      break;
    }
  }
  return std::make_shared<const Lattice>(n, edges, spec);
}

std::int64_t sphere_size(const Lattice& lat, Vertex i, Distance r) {
  if (!lat.contains(i)) throw std::out_of_range("vertex out of range");
  std::int64_t count = 0;
  for (Vertex l = 0; l < lat.size(); ++l) count += lat.dist(i, l) == r ? 1 : 0;
  return count;
}

std::vector<std::int64_t> sphere_profile(const Lattice& lat) {
  return kernels::sphere_counts(lat.distances(), lat.size(), lat.diameter());
}

std::int64_t ball_volume(const Lattice& lat, Distance r) {
  if (r < 0) throw std::invalid_argument("ball radius must be non-negative");
  const Distance diam = lat.diameter();
  const auto profile = sphere_profile(lat);
  const std::size_t width = static_cast<std::size_t>(diam) + 1;
  const Distance top = std::min(r, diam);
  std::int64_t best = 0;
  for (int i = 0; i < lat.size(); ++i) {
    std::int64_t vol = 0;
    for (Distance s = 0; s <= top; ++s) vol += profile[i * width + s];
    best = std::max(best, vol);
  }
  return best;
}

namespace {

// c(d) over the profile
double sphere_constant(const std::vector<std::int64_t>& profile, int n, Distance diam, double d) {
  const std::size_t width = static_cast<std::size_t>(diam) + 1;
  double c = 0.0;
  for (int i = 0; i < n; ++i) {
    for (Distance r = 1; r <= diam; ++r) {
      const auto s = profile[i * width + r];
      if (s > 0) c = std::max(c, static_cast<double>(s) / std::pow(static_cast<double>(r), d - 1.0));
    }
  }
  return c;
}

bool profile_bounded(const std::vector<std::int64_t>& profile, int n, Distance diam, double d, double c) {
  const std::size_t width = static_cast<std::size_t>(diam) + 1;
  for (int i = 0; i < n; ++i) {
    for (Distance r = 1; r <= diam; ++r) {
      if (static_cast<double>(profile[i * width + r]) > c * std::pow(static_cast<double>(r), d - 1.0)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool satisfies_sphere_bound(const Lattice& lat, const DimensionEstimate& dims) {
  return profile_bounded(sphere_profile(lat), lat.size(), lat.diameter(), dims.d, dims.c);
}

DimensionEstimate fit_dimension(const Lattice& lat) {
  if (!lat.connected()) throw std::invalid_argument("fit_dimension: lattice is disconnected");
  const int n = lat.size();
  const Distance diam = lat.diameter();
  if (diam == 0) return {1.0, 1.0};

  const auto profile = sphere_profile(lat);
  const std::size_t width = static_cast<std::size_t>(diam) + 1;
  double plateau = 0.0;  // lim_{d->inf} c(d): the largest first shell
  for (int i = 0; i < n; ++i) plateau = std::max(plateau, static_cast<double>(profile[i * width + 1]));

  auto reached = [&](double d) { return profile_bounded(profile, n, diam, d, plateau); };

  double d = 1.0;
  if (!reached(d)) {
    double lo = 1.0;
    double hi = 2.0;
    while (!reached(hi)) {
      lo = hi;
      hi *= 2.0;
    }
    while (hi - lo > 1e-3) {
      const double mid = 0.5 * (lo + hi);
      (reached(mid) ? hi : lo) = mid;
    }
    d = hi;
  }
  DimensionEstimate est{d, sphere_constant(profile, n, diam, d)};
  if (!profile_bounded(profile, n, diam, est.d, est.c)) {
    throw std::logic_error("fit_dimension: sphere bound failed re-verification");
  }
  return est;
}

namespace {

void check_proper_region(const Lattice& lat, const Region& region) {
  if (region.lattice_size() != lat.size()) throw std::invalid_argument("region belongs to a different lattice");
  if (region.empty()) throw std::invalid_argument("region is empty");
  if (static_cast<int>(region.size()) == lat.size()) throw std::invalid_argument("region covers the whole lattice");
}

}  // namespace

std::int64_t surface_area(const Lattice& lat, const Region& region) {
  check_proper_region(lat, region);
  std::int64_t s = 0;
  for (Vertex j : region.members()) {
    for (Vertex i : lat.neighbors(j)) s += region.contains(i) ? 0 : 1;
  }
  return s;
}

Region outer_boundary(const Lattice& lat, const Region& region) {
  check_proper_region(lat, region);
  std::vector<Vertex> out;
  for (Vertex j : region.members()) {
    for (Vertex i : lat.neighbors(j)) {
      if (!region.contains(i)) out.push_back(i);
    }
  }
  return Region(std::move(out), lat.size());
}

std::int64_t boundary_pair_count(const Lattice& lat, const Region& region, Distance r) {
  check_proper_region(lat, region);
  if (r < 1) throw std::invalid_argument("boundary_pair_count needs r >= 1");
  const auto inside = region.mask();
  return kernels::boundary_pairs(lat.distances(), lat.size(), inside, r);
}

Assumption1Certificate verify_assumption1(const Lattice& lat, double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0)) throw std::invalid_argument("verify_assumption1 needs mu > 0 and nu > 0");
  const auto best = kernels::convolution_ratio(lat.distances(), lat.size(), mu, nu);
  Assumption1Certificate cert;
  cert.mu = mu;
  cert.nu = nu;
  cert.l0 = best.value;
  cert.holds = true;
  cert.worst_pair = {best.i, best.j};
  return cert;
}

double cubic_assumption1_bound(double mu, int dimension) {
  const double e2 = std::exp(2.0 * mu);
  const double per_axis = 2.0 / (mu * std::exp(1.0)) + (e2 + 1.0) / (e2 - 1.0);
  return std::pow(per_axis, dimension);
}

}  // namespace harmolat
