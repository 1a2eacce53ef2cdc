#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmolat/io.hpp"

using namespace harmolat;
using harmolat::io::Json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("lattice descriptors round-trip") {
  for (const auto& d : {LatticeDescriptor::ring(7), LatticeDescriptor::path(4), LatticeDescriptor::cubic({3, 5}, true),
                        LatticeDescriptor::explicit_graph(5, {{0, 1}, {1, 2}, {3, 4}})}) {
    const Json j = io::to_json(d);
    const auto back = io::lattice_descriptor_from_json(j);
    CHECK(io::to_json(back) == j);
    CHECK(build_lattice(back)->size() == build_lattice(d)->size());
  }
  // explicit graphs infer their size from the edges
  const auto inferred = io::lattice_descriptor_from_json(Json::parse(R"({"kind": "explicit", "edges": [[0, 3], [3, 1]]})"));
  CHECK(build_lattice(inferred)->size() == 4);

  CHECK_THROWS_AS(io::lattice_descriptor_from_json(Json::parse(R"({"kind": "hex"})")), std::invalid_argument);
  CHECK_THROWS_AS(io::lattice_descriptor_from_json(Json::parse(R"({"kind": "ring"})")), std::invalid_argument);
  CHECK_THROWS_AS(io::lattice_descriptor_from_json(Json::parse(R"({"kind": "ring", "n": "x"})")), std::invalid_argument);
}

TEST_CASE("regions round-trip and validate") {
  const Region r({4, 1, 1, 7}, 9);
  const Json j = io::to_json(r);
  CHECK(j.at("members") == Json::parse("[1, 4, 7]"));
  CHECK(io::region_from_json(j, 9) == r);
  CHECK_THROWS_AS(io::region_from_json(Json::parse(R"({"members": [9]})"), 9), std::out_of_range);
  CHECK_THROWS_AS(io::region_from_json(Json::parse(R"({})"), 9), std::invalid_argument);
}

TEST_CASE("matrices and states round-trip exactly") {
  Matrix m(3, 3);
  m << 1.0, 0.1, 1.0 / 3.0, 0.1, std::nextafter(2.0, 3.0), -1e-300, 1.0 / 3.0, -1e-300, 5.0;
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  // through text as well
  CHECK(io::matrix_from_json(Json::parse(io::matrix_to_json(m).dump())) == m);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1, 2], [3]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["a"]])")), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("3")), std::invalid_argument);

  GaussianState s{m, 2.0 * m, 0.25, "test"};
  const Json js = io::to_json(s);
  CHECK(js.at("temperature") == 0.25);
  const auto back = io::state_from_json(js);
  CHECK(back.gamma_x == s.gamma_x);
  CHECK(back.gamma_p == s.gamma_p);
  CHECK(back.temperature == 0.25);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"temperature": 0})")), std::invalid_argument);
}

TEST_CASE("couplings from builders") {
  const auto rw = io::coupling_from_json(Json::parse(R"({"builder": "rotating_wave", "n": 12, "c": 0.3})"), {});
  CHECK(rw.size() == 12);
  CHECK(rw.vx() == build_rotating_wave(12, 0.3).vx());

  const auto dc = io::coupling_from_json(Json::parse(R"({"builder": "disordered_chain", "n": 10, "seed": 3})"), {});
  CHECK(dc.vx() == build_disordered_chain(10, 3).vx());
  const auto dc7 = io::coupling_from_json(Json::parse(R"({"builder": "disordered_chain", "n": 10, "seed": 3})"), {}, 7);
  CHECK(dc7.vx() == build_disordered_chain(10, 7).vx());

  const auto nn = io::coupling_from_json(
      Json::parse(R"({"builder": "nearest_neighbor", "diagonal": 1.0, "hopping": -0.2,
                      "lattice": {"kind": "cubic", "dims": [4, 4], "periodic": false}})"),
      {});
  CHECK(nn.size() == 16);
  CHECK(nn.range() == 2);

  // a separately supplied lattice
  const auto id = io::coupling_from_json(Json::parse(R"({"builder": "identity"})"), LatticeDescriptor::ring(5));
  CHECK(id.vx() == Matrix::Identity(5, 5));

  const auto alg = io::coupling_from_json(Json::parse(R"({"builder": "algebraic", "eta": 3, "lattice": {"kind": "ring", "n": 16}})"), {});
  CHECK_FALSE(alg.range().has_value());

  const auto ex = io::coupling_from_json(
      Json::parse(R"({"builder": "exponential_decay", "n": 20, "K": 1.0, "xi": 2.0, "block": "pp"})"), {});
  CHECK(ex.vx() == build_exponential_decay(20, 1.0, 2.0, Block::pp).vx());

  CHECK_THROWS_AS(io::coupling_from_json(Json::parse(R"({"builder": "magic"})"), {}), std::invalid_argument);
  CHECK_THROWS_AS(io::coupling_from_json(Json::parse(R"({"builder": "identity"})"), {}), std::invalid_argument);
  CHECK_THROWS_AS(io::coupling_from_json(Json::parse(R"({"builder": "rotating_wave", "n": 12, "c": 0.7})"), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::coupling_from_json(Json::parse("[]"), {}), std::invalid_argument);
}

TEST_CASE("dense couplings") {
  const Json j = Json::parse(R"({"lattice": {"kind": "path", "n": 3},
                                 "vx": [[1, -0.2, 0], [-0.2, 1, -0.2], [0, -0.2, 1]]})");
  const auto c = io::coupling_from_json(j, {});
  CHECK(c.momentum_is_identity());
  CHECK(c.range() == 2);
  Json nl = j;
  nl["non_local"] = true;
  CHECK_FALSE(io::coupling_from_json(nl, {}).range().has_value());
  Json asym = j;
  asym["vx"][0][1] = 0.3;
  CHECK_THROWS_AS(io::coupling_from_json(asym, {}), std::invalid_argument);
  Json indefinite = j;
  indefinite["vx"][0][0] = -1.0;
  CHECK_THROWS_AS(io::coupling_from_json(indefinite, {}), std::invalid_argument);
  Json wrong_size = j;
  wrong_size["lattice"]["n"] = 4;
  CHECK_THROWS_AS(io::coupling_from_json(wrong_size, {}), std::invalid_argument);
  CHECK_THROWS_AS(io::coupling_from_json(Json::parse(R"({"lattice": {"kind": "path", "n": 3}})"), {}),
                  std::invalid_argument);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "harmolat_test_io";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json";
  io::write_text(good, R"({"a": [1, 2]})");
  CHECK(io::read_json(good).at("a").size() == 2);
  const auto bad = dir / "bad.json";
  io::write_text(bad, "{not json");
  CHECK_THROWS_AS(io::read_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(io::read_json(dir / "missing.json"), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, std::nextafter(1.0, 2.0), 0.0}) {
    CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(io::format_double(std::nan("")) == "nan");
}

TEST_CASE("correlation CSV") {
  const auto c = build_rotating_wave(6, 0.2);
  const GaussianState s = ground_state(c);
  std::ostringstream out;
  io::write_correlations_csv(out, s, c.lattice());
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1 + 6 * 7 / 2);
  CHECK(lines[0] == "i,j,dist,corr_xx,corr_pp");
  const auto row = split(lines[2]);  // pair (0, 1)
  REQUIRE(row.size() == 5);
  CHECK(row[0] == "0");
  CHECK(row[1] == "1");
  CHECK(row[2] == "1");
  CHECK(std::strtod(row[3].c_str(), nullptr) == s.gamma_x(0, 1));

  const DecayBound env{2.0, 1.5, 2};
  std::ostringstream with_env;
  io::write_correlations_csv(with_env, s, c.lattice(), std::make_pair(env, env));
  const auto elines = lines_of(with_env.str());
  CHECK(elines[0] == "i,j,dist,corr_xx,corr_pp,env_xx,env_pp");
  CHECK(split(elines[2]).at(5).empty());  // below min_dist
  const auto far = split(elines[4]);       // pair (0, 3), distance 3
  CHECK(far.at(2) == "3");
  CHECK(std::strtod(far.at(5).c_str(), nullptr) == env.value(3));

  auto two = build_lattice(LatticeDescriptor::explicit_graph(2, {}));
  GaussianState pair{Matrix::Identity(2, 2), Matrix::Identity(2, 2), 0.0, ""};
  std::ostringstream disc;
  io::write_correlations_csv(disc, pair, *two);
  CHECK(split(lines_of(disc.str()).at(2)).at(2) == "inf");
  CHECK_THROWS_AS(io::write_correlations_csv(disc, s, *two), std::invalid_argument);
}

TEST_CASE("bound report schema") {
  BoundCheckReport r;
  r.pairs_checked = 10;
  r.max_ratio = 0.5;
  r.worst_pair = {1, 4};
  r.satisfied = true;
  const Json j = io::bound_report("1", Json{{"m", 2}}, 3.0, 4.0, r);
  CHECK(j.at("theorem") == "1");
  CHECK(j.at("params").at("m") == 2);
  CHECK(j.at("K") == 3.0);
  CHECK(j.at("xi") == 4.0);
  CHECK(j.at("satisfied") == true);
  CHECK(j.at("max_ratio") == 0.5);
  CHECK(j.at("worst_pair") == Json::parse("[1, 4]"));
}
