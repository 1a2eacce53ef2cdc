#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "harmolat/bounds.hpp"
#include "harmolat/coupling.hpp"
#include "harmolat/gaussian.hpp"
#include "harmolat/lattice.hpp"

namespace harmolat::io {

using Json = nlohmann::json;

/// Parse errors are reported as std::invalid_argument.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"kind": "ring"|"path"|"cubic"|"explicit", "n", "dims", "periodic", "edges"}
LatticeDescriptor lattice_descriptor_from_json(const Json& j);
Json to_json(const LatticeDescriptor& d);

/// {"members": [int]}
Region region_from_json(const Json& j, int lattice_size);
Json to_json(const Region& r);

/// Coupling file. Either dense,
///   {"lattice": {...}, "vx": [[...]], "vp": [[...]], "non_local": false}
/// with "vp" defaulting to the identity and "lattice" optional when a lattice
/// is supplied separately, or a builder,
///   {"builder": "identity" | "nearest_neighbor" | "disordered_chain" | "rotating_wave"
///               | "algebraic" | "exponential_decay", ...parameters}.
/// `seed` overrides the "seed" field of the disordered chain.
Coupling coupling_from_json(const Json& j, const std::optional<LatticeDescriptor>& lattice,
                            std::optional<std::uint64_t> seed = {});

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"temperature": T, "gamma_x": [[...]], "gamma_p": [[...]]}
Json to_json(const GaussianState& s);
GaussianState state_from_json(const Json& j);

/// {"theorem", "params", "K", "xi", "satisfied", "max_ratio", "worst_pair"}
Json bound_report(const std::string& theorem, const Json& params, double k, double xi, const BoundCheckReport& check);

/// %.17g, which round-trips every double.
std::string format_double(double v);

/// CSV with columns i,j,dist,corr_xx,corr_pp over pairs i <= j, plus env_xx
/// and env_pp when envelopes are given. Unreachable pairs print dist as "inf".
void write_correlations_csv(std::ostream& out, const GaussianState& s, const Lattice& lat,
                            const std::optional<std::pair<DecayBound, DecayBound>>& envelopes = {});

}  // namespace harmolat::io
