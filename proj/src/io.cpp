#include "harmolat/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace harmolat::io {

namespace {

template <typename T>
T require(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": bad field \"" + key + "\": " + e.what());
  }
}

LatticePtr lattice_for(const Json& j, const std::optional<LatticeDescriptor>& external, const char* what) {
  if (external) return build_lattice(*external);
  if (j.contains("lattice")) return build_lattice(lattice_descriptor_from_json(j.at("lattice")));
  throw std::invalid_argument(std::string(what) + " needs a lattice (\"lattice\" field or --lattice)");
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

LatticeDescriptor lattice_descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("lattice descriptor must be a JSON object");
  const auto kind = require<std::string>(j, "kind", "lattice descriptor");
  if (kind == "ring") return LatticeDescriptor::ring(require<int>(j, "n", "ring"));
  if (kind == "path") return LatticeDescriptor::path(require<int>(j, "n", "path"));
  if (kind == "cubic") {
    return LatticeDescriptor::cubic(require<std::vector<int>>(j, "dims", "cubic"), j.value("periodic", false));
  }
  if (kind == "explicit") {
    const auto raw = require<std::vector<std::vector<int>>>(j, "edges", "explicit");
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    for (const auto& e : raw) {
      if (e.size() != 2) throw std::invalid_argument("explicit: every edge needs exactly two vertices");
      edges.emplace_back(e[0], e[1]);
      n = std::max({n, e[0] + 1, e[1] + 1});
    }
    if (j.contains("n")) n = require<int>(j, "n", "explicit");
    return LatticeDescriptor::explicit_graph(n, std::move(edges));
  }
  throw std::invalid_argument("unknown lattice kind \"" + kind + "\"");
}

Json to_json(const LatticeDescriptor& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  switch (d.kind) {
    case LatticeDescriptor::Kind::ring:
    case LatticeDescriptor::Kind::path: j["n"] = d.n; break;
    case LatticeDescriptor::Kind::cubic:
      j["dims"] = d.dims;
      j["periodic"] = d.periodic;
      break;
    case LatticeDescriptor::Kind::explicit_edges: {
      j["n"] = d.n;
      Json edges = Json::array();
      for (const auto& [a, b] : d.edges) edges.push_back({a, b});
      j["edges"] = edges;
      break;
    }
  }
  return j;
}

Region region_from_json(const Json& j, int lattice_size) {
  return Region(require<std::vector<Vertex>>(j, "members", "region"), lattice_size);
}

Json to_json(const Region& r) { return Json{{"members", r.members()}}; }

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw std::invalid_argument("matrix must be square; row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!row[static_cast<std::size_t>(k)].is_number()) throw std::invalid_argument("matrix entries must be numbers");
      m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return m;
}

Coupling coupling_from_json(const Json& j, const std::optional<LatticeDescriptor>& lattice,
                            std::optional<std::uint64_t> seed) {
  if (!j.is_object()) throw std::invalid_argument("coupling file must be a JSON object");
  if (j.contains("builder")) {
    const auto b = require<std::string>(j, "builder", "coupling");
    if (b == "identity") {
      auto lat = lattice_for(j, lattice, "identity coupling");
      const int n = lat->size();
      return make_coupling(std::move(lat), Matrix::Identity(n, n), Matrix::Identity(n, n));
    }
    if (b == "nearest_neighbor") {
      return build_nearest_neighbor(lattice_for(j, lattice, "nearest_neighbor"),
                                    require<double>(j, "diagonal", "nearest_neighbor"),
                                    require<double>(j, "hopping", "nearest_neighbor"));
    }
    if (b == "disordered_chain") {
      const std::uint64_t s = seed ? *seed : j.value<std::uint64_t>("seed", 1);
      return build_disordered_chain(require<int>(j, "n", "disordered_chain"), s);
    }
    if (b == "rotating_wave") {
      return build_rotating_wave(require<int>(j, "n", "rotating_wave"), require<double>(j, "c", "rotating_wave"));
    }
    if (b == "algebraic") {
      return build_algebraic(lattice_for(j, lattice, "algebraic"), require<double>(j, "eta", "algebraic"));
    }
    if (b == "exponential_decay") {
      const auto block = j.value<std::string>("block", "xx");
      if (block != "xx" && block != "pp") throw std::invalid_argument("exponential_decay: block must be xx or pp");
      return build_exponential_decay(require<int>(j, "n", "exponential_decay"),
                                     require<double>(j, "K", "exponential_decay"),
                                     require<double>(j, "xi", "exponential_decay"),
                                     block == "xx" ? Block::xx : Block::pp);
    }
    throw std::invalid_argument("unknown coupling builder \"" + b + "\"");
  }
  auto lat = lattice_for(j, lattice, "dense coupling");
  if (!j.contains("vx")) throw std::invalid_argument("dense coupling: missing field \"vx\"");
  Matrix vx = matrix_from_json(j.at("vx"));
  Matrix vp = j.contains("vp") ? matrix_from_json(j.at("vp")) : Matrix::Identity(vx.rows(), vx.cols());
  return make_coupling(std::move(lat), std::move(vx), std::move(vp), j.value("non_local", false));
}

Json to_json(const GaussianState& s) {
  return Json{{"temperature", s.temperature}, {"gamma_x", matrix_to_json(s.gamma_x)}, {"gamma_p", matrix_to_json(s.gamma_p)}};
}

GaussianState state_from_json(const Json& j) {
  GaussianState s;
  s.temperature = require<double>(j, "temperature", "state");
  if (!j.contains("gamma_x") || !j.contains("gamma_p")) throw std::invalid_argument("state: missing covariance block");
  s.gamma_x = matrix_from_json(j.at("gamma_x"));
  s.gamma_p = matrix_from_json(j.at("gamma_p"));
  if (s.gamma_x.rows() != s.gamma_p.rows()) throw std::invalid_argument("state: block sizes differ");
  return s;
}

Json bound_report(const std::string& theorem, const Json& params, double k, double xi, const BoundCheckReport& check) {
  return Json{{"theorem", theorem},
              {"params", params},
              {"K", k},
              {"xi", xi},
              {"satisfied", check.satisfied},
              {"max_ratio", check.max_ratio},
              {"worst_pair", {check.worst_pair.first, check.worst_pair.second}}};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_correlations_csv(std::ostream& out, const GaussianState& s, const Lattice& lat,
                            const std::optional<std::pair<DecayBound, DecayBound>>& envelopes) {
  if (s.size() != lat.size()) throw std::invalid_argument("state and lattice sizes differ");
  out << "i,j,dist,corr_xx,corr_pp";
  if (envelopes) out << ",env_xx,env_pp";
  out << '\n';
  for (Vertex i = 0; i < lat.size(); ++i) {
    for (Vertex j = i; j < lat.size(); ++j) {
      const Distance d = lat.dist(i, j);
      out << i << ',' << j << ',' << (d == kUnreachable ? std::string("inf") : std::to_string(d)) << ','
          << format_double(s.gamma_x(i, j)) << ',' << format_double(s.gamma_p(i, j));
      if (envelopes) {
        const auto env = [&](const DecayBound& b) {
          return d == kUnreachable || d < b.min_dist ? std::string("") : format_double(b.value(d));
        };
        out << ',' << env(envelopes->first) << ',' << env(envelopes->second);
      }
      out << '\n';
    }
  }
}

}  // namespace harmolat::io
