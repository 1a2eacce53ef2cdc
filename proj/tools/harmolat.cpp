// harmolat: command-line front end.
//
// Exit status: 0 when every assertion made by the command holds, 1 when one
// fails, 2 on invalid input.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "harmolat/bounds.hpp"
#include "harmolat/coupling.hpp"
#include "harmolat/gaussian.hpp"
#include "harmolat/io.hpp"
#include "harmolat/lattice.hpp"
#include "harmolat/reproductions.hpp"
#include "harmolat/spectral.hpp"

namespace {

using harmolat::io::Json;
namespace hl = harmolat;

struct Options {
  std::string coupling;
  std::string lattice;
  std::string region;
  std::optional<double> temperature;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "json";
  // subcommand specific
  int example = 0;
  int example_n = 0;
  int square_sweep = 0;
  std::optional<double> mu;
  std::optional<double> nu;
  std::string function = "inv_sqrt";
  std::optional<double> chi;
};

std::optional<hl::LatticeDescriptor> lattice_option(const Options& o) {
  if (o.lattice.empty()) return std::nullopt;
  return hl::io::lattice_descriptor_from_json(hl::io::read_json(o.lattice));
}

hl::Coupling load_coupling(const Options& o) {
  if (o.coupling.empty()) throw std::invalid_argument("--coupling is required");
  return hl::io::coupling_from_json(hl::io::read_json(o.coupling), lattice_option(o), o.seed);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    hl::io::write_text(o.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json vector_json(const hl::Vector& v) { return Json(std::vector<double>(v.data(), v.data() + v.size())); }

Json decay_json(const hl::DecayBound& b) { return Json{{"K", b.K}, {"xi", b.xi}, {"min_dist", b.min_dist}}; }

Json range_json(const hl::Coupling& c) { return c.range() ? Json(*c.range()) : Json("non-local"); }

int cmd_spectrum(const Options& o) {
  const auto c = load_coupling(o);
  const auto spec = hl::mode_spectrum(c);
  Json out{{"n", c.size()}, {"range", range_json(c)}, {"E0", spec.e0}, {"gap", spec.gap}, {"d", vector_json(spec.d)}};
  bool ok = spec.gap > 0.0;

  // Gap <-> exponential decay: Theorem-1 envelope from the gap, and the gap
  // bound recovered from the measured position correlations at that length.
  if (c.range() && c.momentum_is_identity()) {
    const auto t1 = hl::theorem1_bound(c);
    Json eq{{"envelope_xx", decay_json(t1.xx)}, {"envelope_pp", decay_json(t1.pp)}};
    if (t1.xx.xi > 0.0 && c.lattice().connected()) {
      const auto dims = hl::fit_dimension(c.lattice());
      const auto s = hl::ground_state(c);
      const double k = hl::measured_exponential_prefactor(s.gamma_x, c.lattice(), t1.xx.xi);
      const double bound = hl::theorem3_gap_bound(k, t1.xx.xi, dims.d, dims.c).value;
      eq["measured_K"] = k;
      eq["gap_bound_from_decay"] = bound;
      eq["consistent"] = bound <= spec.gap + 1e-10;
      ok = ok && bound <= spec.gap + 1e-10;
    }
    out["equivalence"] = eq;
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "k,d_k,frequency\n";
    for (Eigen::Index k = 0; k < spec.d.size(); ++k) {
      os << k << ',' << hl::io::format_double(spec.d[k]) << ',' << hl::io::format_double(std::sqrt(spec.d[k])) << '\n';
    }
    emit(o, os.str());
    std::cerr << "E0=" << hl::io::format_double(spec.e0) << " gap=" << hl::io::format_double(spec.gap) << '\n';
  } else {
    emit(o, dump(out));
  }
  return ok ? 0 : 1;
}

int cmd_correlations(const Options& o) {
  const auto c = load_coupling(o);
  const bool thermal = o.temperature.has_value();
  const auto s = thermal ? hl::thermal_state(c, *o.temperature) : hl::ground_state(c);

  Json summary{{"n", c.size()}, {"temperature", s.temperature}, {"range", range_json(c)}};
  std::optional<std::pair<hl::DecayBound, hl::DecayBound>> envelopes;
  bool ok = true;
  if (c.range()) {
    std::optional<hl::CorrelationBounds> b;
    std::string theorem;
    if (!thermal) {
      b = hl::theorem1_bound(c);
      theorem = "1";
    } else if (c.commuting()) {
      try {
        b = hl::theorem4_bound(c, *o.temperature, hl::theorem4_certificate(c));
        theorem = "4";
      } catch (const std::domain_error& e) {
        summary["envelope_skipped"] = e.what();
      }
    } else {
      summary["envelope_skipped"] = "finite-temperature envelope needs commuting Vx and Vp";
    }
    if (b) {
      envelopes = std::make_pair(b->xx, b->pp);
      Json reports = Json::array();
      for (auto block : {hl::Block::xx, hl::Block::pp}) {
        const auto& env = block == hl::Block::xx ? b->xx : b->pp;
        const auto r = hl::check_decay_bound(s, env, block, c.lattice());
        Json params{{"block", hl::block_name(block)}, {"m", b->m}, {"a", b->a}, {"b", b->b}, {"volume", b->volume}};
        if (thermal) params["temperature"] = *o.temperature;
        reports.push_back(hl::io::bound_report(theorem, params, env.K, env.xi, r));
        ok = ok && r.satisfied;
      }
      summary["bounds"] = reports;
    }
  }
  for (auto block : {hl::Block::xx, hl::Block::pp}) {
    const std::string key = std::string("fit_") + hl::block_name(block);
    try {
      const auto e = hl::fit_decay(s, block, c.lattice());
      const auto p = hl::fit_power_law(s, block, c.lattice());
      summary[key] = {{"K", e.K},
                      {"xi", e.xi},
                      {"residual", e.residual},
                      {"power_law_eta", p.eta},
                      {"power_law_residual", p.residual},
                      {"decay", p.residual < e.residual ? "algebraic" : "exponential"}};
    } catch (const std::invalid_argument& e) {
      summary[key] = {{"error", e.what()}};
    }
  }
  summary["satisfied"] = ok;

  if (o.format == "json") {
    Json pairs = Json::array();
    for (hl::Vertex i = 0; i < c.size(); ++i) {
      for (hl::Vertex j = i; j < c.size(); ++j) {
        const auto d = c.lattice().dist(i, j);
        pairs.push_back({{"i", i},
                         {"j", j},
                         {"dist", d == hl::kUnreachable ? Json(nullptr) : Json(d)},
                         {"corr_xx", s.gamma_x(i, j)},
                         {"corr_pp", s.gamma_p(i, j)}});
      }
    }
    summary["pairs"] = pairs;
    emit(o, dump(summary));
  } else {
    std::ostringstream os;
    hl::io::write_correlations_csv(os, s, c.lattice(), envelopes);
    emit(o, os.str());
    (o.out.empty() ? std::cerr : std::cout) << dump(summary);
  }
  return ok ? 0 : 1;
}

Json area_row(const hl::Coupling& c, const hl::GaussianState& s, const hl::Region& r, const hl::DimensionEstimate& dims,
              bool& ok) {
  const double ent = hl::entropy(s, r).entropy_bits;
  const double corr = hl::entropy_correlation_bound(s, c, r);
  Json row{{"size", r.size()}, {"s_I", hl::surface_area(c.lattice(), r)}, {"entropy", ent}, {"correlation_bound", corr}};
  bool sat = ent <= corr + 1e-9;
  if (c.range()) {
    const double t5 = hl::theorem5_area_bound(c, r, dims);
    row["theorem5_bound"] = t5;
    sat = sat && corr <= t5 + 1e-9;
  }
  row["satisfied"] = sat;
  ok = ok && sat;
  return row;
}

int cmd_area_law(const Options& o) {
  const auto c = load_coupling(o);
  if (!c.momentum_is_identity()) throw std::invalid_argument("area-law needs Vp = I");
  const auto s = hl::ground_state(c);
  const auto dims = hl::fit_dimension(c.lattice());
  bool ok = true;
  Json out{{"n", c.size()}, {"range", range_json(c)}, {"d", dims.d}, {"c", dims.c}};

  if (o.square_sweep > 0) {
    const auto& desc = c.lattice().descriptor();
    if (desc.kind != hl::LatticeDescriptor::Kind::cubic || desc.dims.size() != 2) {
      throw std::invalid_argument("--square-sweep needs a two-dimensional cubic lattice");
    }
    const int lo = (std::min(desc.dims[0], desc.dims[1]) - o.square_sweep) / 2;
    if (lo < 1) throw std::invalid_argument("lattice too small for the requested squares");
    Json rows = Json::array();
    for (int k = 1; k <= o.square_sweep; ++k) {
      std::vector<hl::Vertex> members;
      for (int x = lo; x < lo + k; ++x) {
        for (int y = lo; y < lo + k; ++y) {
          const int coords[2] = {x, y};
          members.push_back(hl::cubic_index(desc.dims, coords));
        }
      }
      Json row = area_row(c, s, hl::Region(members, c.size()), dims, ok);
      row["k"] = k;
      rows.push_back(row);
    }
    out["sweep"] = rows;
    if (o.format == "csv") {
      std::ostringstream os;
      os << "k,s_I,entropy,correlation_bound,theorem5_bound\n";
      for (const auto& r : rows) {
        os << r["k"].get<int>() << ',' << r["s_I"].get<std::int64_t>() << ','
           << hl::io::format_double(r["entropy"].get<double>()) << ','
           << hl::io::format_double(r["correlation_bound"].get<double>()) << ','
           << (r.contains("theorem5_bound") ? hl::io::format_double(r["theorem5_bound"].get<double>()) : "") << '\n';
      }
      emit(o, os.str());
      return ok ? 0 : 1;
    }
  } else {
    if (o.region.empty()) throw std::invalid_argument("area-law needs --region or --square-sweep");
    const auto r = hl::io::region_from_json(hl::io::read_json(o.region), c.size());
    out["result"] = area_row(c, s, r, dims, ok);
  }
  out["satisfied"] = ok;
  emit(o, dump(out));
  return ok ? 0 : 1;
}

int cmd_example(const Options& o) {
  hl::ExampleOptions eo;
  if (o.seed) eo.seed = *o.seed;
  eo.n = o.example_n;
  const auto rep = hl::run_example(o.example, eo);
  Json checks = Json::array();
  for (const auto& ch : rep.checks) {
    checks.push_back({{"name", ch.name},
                      {"passed", ch.passed},
                      {"measured", ch.measured},
                      {"reference", ch.reference},
                      {"detail", ch.detail},
                      {"informational", ch.informational}});
  }
  const Json out{{"example", rep.example}, {"title", rep.title}, {"passed", rep.passed()}, {"checks", checks}};
  if (o.format == "csv") {
    std::ostringstream os;
    os << "name,passed,measured,reference,informational\n";
    for (const auto& ch : rep.checks) {
      os << '"' << ch.name << "\"," << (ch.passed ? "true" : "false") << ',' << hl::io::format_double(ch.measured) << ','
         << hl::io::format_double(ch.reference) << ',' << (ch.informational ? "true" : "false") << '\n';
    }
    emit(o, os.str());
  } else {
    emit(o, dump(out));
  }
  return rep.passed() ? 0 : 1;
}

int cmd_assumption1(const Options& o) {
  hl::LatticePtr lat;
  double mu = 0.0;
  if (!o.coupling.empty()) {
    const auto c = load_coupling(o);
    lat = c.lattice_ptr();
    mu = o.mu.value_or(hl::assumption1_mu(c));
  } else {
    const auto desc = lattice_option(o);
    if (!desc) throw std::invalid_argument("assumption1 needs --lattice or --coupling");
    if (!o.mu) throw std::invalid_argument("assumption1 needs --mu when no coupling is given");
    lat = hl::build_lattice(*desc);
    mu = *o.mu;
  }
  const double nu = o.nu.value_or(0.5 * mu);
  const auto cert = hl::verify_assumption1(*lat, mu, nu);
  Json out{{"mu", cert.mu},
           {"nu", cert.nu},
           {"l0", cert.l0},
           {"holds", cert.holds},
           {"worst_pair", {cert.worst_pair.first, cert.worst_pair.second}}};
  bool ok = cert.holds;
  const auto& desc = lat->descriptor();
  if (desc.kind == hl::LatticeDescriptor::Kind::cubic && !desc.periodic && nu == 0.5 * mu) {
    const double closed = hl::cubic_assumption1_bound(mu, static_cast<int>(desc.dims.size()));
    out["cubic_bound"] = closed;
    out["within_cubic_bound"] = cert.l0 <= closed;
    ok = ok && cert.l0 <= closed;
  }
  emit(o, dump(out));
  return ok ? 0 : 1;
}

hl::ScalarFunction function_option(const Options& o) {
  if (o.function == "inv_sqrt") return hl::ScalarFunction::inv_sqrt();
  if (o.function == "sqrt") return hl::ScalarFunction::sqrt();
  if (o.function == "inverse") return hl::ScalarFunction::inverse();
  if (o.function == "identity") return hl::ScalarFunction::identity();
  if (o.function == "thermal") {
    if (!o.temperature) throw std::invalid_argument("--function thermal needs --temperature");
    return hl::ScalarFunction::thermal(*o.temperature);
  }
  throw std::invalid_argument("unknown function " + o.function);
}

int cmd_benzi(const Options& o) {
  const auto c = load_coupling(o);
  if (!c.commuting()) throw std::invalid_argument("benzi needs commuting Vx and Vp (applied to Vx Vp)");
  const hl::Matrix v = 0.5 * (c.vx() * c.vp() + (c.vx() * c.vp()).transpose());
  const auto range = hl::matrix_range(v, c.lattice());
  if (!range) throw std::invalid_argument("benzi needs Vx Vp of finite range");
  const auto eig = hl::eigh(v);
  const double a = eig.eigenvalues.minCoeff();
  const double b = eig.eigenvalues.maxCoeff();
  const auto f = function_option(o);
  const double chi = o.chi.value_or(b > a ? b / (b - a) : 2.0);
  const auto bound = hl::benzi_bound(a, b, *range, f, chi);
  const auto check = hl::check_benzi_bound(hl::matrix_function(eig, f), bound, c.lattice());
  const Json params{{"function", f.name()}, {"a", a}, {"b", b}, {"m", *range}, {"chi", chi}, {"q", bound.q}};
  const double xi = bound.q == 0.0 ? 0.0 : -1.0 / std::log(bound.q);
  emit(o, dump(hl::io::bound_report("benzi", params, bound.K, xi, check)));
  return check.satisfied ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic lattice systems: Gaussian states, correlation decay, gap and area-law bounds"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub, bool coupling, bool lattice) {
    if (coupling) sub->add_option("--coupling", o.coupling, "coupling JSON file")->check(CLI::ExistingFile);
    if (lattice) sub->add_option("--lattice", o.lattice, "lattice descriptor JSON file")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "seed for random couplings");
    sub->add_option("--out", o.out, "write the result here instead of stdout");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "mode frequencies, ground energy and gap");
  common(spectrum, true, true);

  auto* correlations = app.add_subcommand("correlations", "pair correlation sweep with decay envelopes");
  common(correlations, true, true);
  correlations->add_option("--temperature", o.temperature, "temperature (ground state when absent)")
      ->check(CLI::PositiveNumber);
  correlations->callback([&] {
    if (!correlations->count("--format")) o.format = "csv";
  });

  auto* area = app.add_subcommand("area-law", "entanglement entropy against the area-law bounds");
  common(area, true, true);
  area->add_option("--region", o.region, "region JSON file")->check(CLI::ExistingFile);
  area->add_option("--square-sweep", o.square_sweep, "k x k squares for k = 1..K on a 2D cubic lattice")
      ->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example", "reproduce one of the worked examples");
  common(example, false, false);
  example->add_option("number", o.example, "example number")->required()->check(CLI::Range(1, 4));
  example->add_option("--n", o.example_n, "ring length override")->check(CLI::PositiveNumber);

  auto* a1 = app.add_subcommand("assumption1", "convolution constant l0 of the lattice");
  common(a1, true, true);
  a1->add_option("--mu", o.mu, "decay rate (default from the coupling)")->check(CLI::PositiveNumber);
  a1->add_option("--nu", o.nu, "target rate (default mu / 2)")->check(CLI::PositiveNumber);

  auto* benzi = app.add_subcommand("benzi", "entrywise decay envelope of f(Vx Vp)");
  common(benzi, true, true);
  benzi->add_option("--function", o.function, "inv_sqrt | sqrt | inverse | identity | thermal");
  benzi->add_option("--temperature", o.temperature, "temperature for --function thermal")->check(CLI::PositiveNumber);
  benzi->add_option("--chi", o.chi, "ellipse parameter (default b / (b - a))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share the error exit code; --help still exits 0
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(o);
    if (*correlations) return cmd_correlations(o);
    if (*area) return cmd_area_law(o);
    if (*example) return cmd_example(o);
    if (*a1) return cmd_assumption1(o);
    if (*benzi) return cmd_benzi(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
