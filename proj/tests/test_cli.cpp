#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fibrekit/cli.hpp"
#include "fibrekit/io.hpp"
#include "fibrekit/lm.hpp"
#include "fibrekit/report.hpp"
#include "fibrekit/sigma.hpp"

using namespace fibrekit;
using io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(FIBREKIT_DATA_DIR) + "/" + name; }

/// Writes `content` to a fresh file under the temporary directory.
std::string scratch(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "fibrekit_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

std::vector<std::string> labels(const Json& j) { return j.get<std::vector<std::string>>(); }

/// Re-derives a living-link certificate from the library.
void reverify_sigma_certificate(const Json& cert, const Character& phi) {
  const auto& l = phi.complex();
  REQUIRE(cert["kind"] == "living_link_not_acyclic");
  std::vector<VertexId> ids;
  for (const auto& name : labels(cert["dead_simplex"])) ids.push_back(l.id_of(name));
  Simplex sigma(ids);
  for (VertexId v : ids) CHECK(phi.value(v) == 0);
  CHECK(l.contains(sigma));
  std::vector<bool> living(l.universe_size(), false);
  for (VertexId v : l.vertices()) living[v] = phi.value(v) != 0;
  auto living_link = restrict_to(link(l, sigma), living);
  int degree = cert["degree"].get<int>();
  auto group = reduced_homology(living_link, degree);
  CHECK_FALSE(group.trivial());
  CHECK(homology_json(group) == cert["group"]);
  CHECK(degree <= cert["required_acyclicity"].get<int>());
}

}  // namespace

TEST_CASE("sigma check on C4") {
  auto r = run({"--format", "json", "sigma", "check", "--complex", data("c4.json"), "--character",
                data("c4_ones.json"), "--n", "1"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["fp"] == false);
  CHECK(j["result"]["k"] == 2);
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["degree"] == 1);
  CHECK(j["certificates"][0]["group"]["text"] == "Z");
  auto l = io::complex_from_json(io::load_json(data("c4.json")));
  reverify_sigma_certificate(j["certificates"][0], Character::ones(l));
  CHECK(r.err.find("elapsed_ms") != std::string::npos);

  auto text = run({"sigma", "check", "--complex", data("c4.json"), "--n", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("type FP_2): no") != std::string::npos);
  CHECK(text.out.find("source:") != std::string::npos);
}

TEST_CASE("sigma check certificates re-verify") {
  auto path = io::complex_from_json(io::load_json(data("path3.json")));
  auto r = run({"--format", "json", "sigma", "check", "--complex", data("path3.json"), "--character",
                data("path3_101.json"), "--n", "0"});
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["result"]["fp"] == false);
  CHECK(labels(j["result"]["dead_vertices"]) == std::vector<std::string>{"b"});
  REQUIRE(j["certificates"].size() == 1);
  CHECK(j["certificates"][0]["dead_simplex"].empty());
  reverify_sigma_certificate(j["certificates"][0], io::character_from_json(io::load_json(data("path3_101.json")), path));

  auto oct = run({"--format", "json", "kernel-type", "--complex", data("octahedron.json")});
  CHECK(oct.code == 0);
  auto k = oct.json();
  CHECK(k["result"]["stabilized"] == true);
  CHECK(k["result"]["rows"].size() == 3);
  CHECK(k["result"]["rows"][1]["fp"] == true);
  CHECK(k["result"]["rows"][2]["fp"] == false);
  CHECK(k["result"]["rows"][2]["stable"] == true);
  REQUIRE(k["certificates"].size() == 1);
  CHECK(k["certificates"][0]["k"] == 3);
  auto octahedron = io::complex_from_json(io::load_json(data("octahedron.json")));
  reverify_sigma_certificate(k["certificates"][0], Character::ones(octahedron));
  auto text = run({"kernel-type", "--complex", data("octahedron.json")});
  CHECK(text.out.find("stable") != std::string::npos);
}

TEST_CASE("gamma-kernel-type") {
  auto grid = run({"--format", "json", "gamma-kernel-type", "--complex", data("grid_disk.json"), "--u", "p0_0",
                   "--w", "p0_2"});
  CHECK(grid.code == 0);
  auto j = grid.json();
  CHECK(j["result"]["report"]["type_fp"] == true);
  CHECK(j["result"]["report"]["type_f"] == "yes");
  for (const auto& h : j["hypotheses"]) CHECK(h["holds"] == true);

  auto path = run({"gamma-kernel-type", "--complex", data("path3.json"), "--u", "a", "--w", "c"});
  CHECK(path.code == 2);
  CHECK(path.out.find("L is a non-trivial join") != std::string::npos);
  auto pj = run({"--format", "json", "gamma-kernel-type", "--complex", data("path3.json"), "--u", "a", "--w", "c"});
  CHECK(pj.json()["status"] == "hypothesis_failure");
  CHECK(pj.json()["result"]["report"].is_null());

  auto adjacent = run({"gamma-kernel-type", "--complex", data("c5.json"), "--u", "a", "--w", "b"});
  CHECK(adjacent.code == 2);
  CHECK(adjacent.out.find("u and w are not joined by an edge") != std::string::npos);
}

TEST_CASE("lm analyze") {
  auto r = run({"--format", "json", "lm", "analyze", "--matrix", data("rotation_3_5.json"), "--max-power", "10"});
  CHECK(r.code == 0);
  auto j = r.json()["result"];
  CHECK(j["verdict"]["code"] == "a");
  CHECK(j["verdict"]["text"].get<std::string>().find("does NOT virtually algebraically fibre") !=
        std::string::npos);
  CHECK(j["sublattice"]["index"] == "5");
  CHECK(j["abelianization"]["text"] == "Z + Z/2 + Z/2");
  CHECK(j["h1_check"]["status"] == "pass");
  CHECK(j["irreducibility"]["text"] == "Certified");
  // The reported HNF basis spans <(2,-1), (1,2)>.
  IntegerMatrix hnf = io::columns_from_json(Json{{"basis_columns", j["sublattice"]["hnf_basis_columns"]}}, 2);
  CHECK(LatticeSubgroup::from_columns(hnf) == LatticeSubgroup::from_column_list({{2, -1}, {1, 2}}));

  auto with_l = run({"--format", "json", "lm", "analyze", "--matrix", data("rotation_3_5.json"), "--sublattice",
                     data("lattice_2_1.json")});
  CHECK(with_l.json()["result"]["presentation"]["text"] ==
        "<a,b,t | a b a^-1 b^-1, t a^2 b^-1 t^-1 b^-1 a^-2, t a b^2 t^-1 b^-2 a>");

  auto rot = run({"--format", "json", "lm", "analyze", "--matrix", data("rotation90.json")});
  CHECK(rot.code == 0);
  auto rj = rot.json();
  CHECK(rj["result"]["verdict"]["code"] == "d");
  bool found = false;
  for (const auto& c : rj["certificates"]) {
    if (c["kind"] != "finite_order") continue;
    found = true;
    auto a = io::matrix_from_json(io::load_json(data("rotation90.json")));
    CHECK(a.power(c["order"].get<std::uint64_t>()) == RationalMatrix::identity(2));
  }
  CHECK(found);

  auto block = scratch("block.json",
                       R"({"n": 3, "rows": [["3/5", "-4/5", "0"], ["4/5", "3/5", "0"], ["0", "0", "1"]]})");
  auto b = run({"--format", "json", "lm", "analyze", "--matrix", block});
  CHECK(b.code == 0);
  auto bj = b.json();
  CHECK(bj["result"]["verdict"]["code"] == "b");
  found = false;
  for (const auto& c : bj["certificates"]) {
    if (c["kind"] != "reducible_power") continue;
    found = true;
    auto a = io::matrix_from_json(io::load_json(block));
    auto chi = a.power(c["power"].get<std::uint64_t>()).characteristic_polynomial();
    CHECK(chi.to_string() == c["characteristic_polynomial"]);
    auto factor = find_rational_factor(chi);
    REQUIRE(factor);
    CHECK((chi % *factor).is_zero());
  }
  CHECK(found);

  auto text = run({"lm", "analyze", "--matrix", data("rotation_3_5.json"), "--max-power", "10"});
  CHECK(text.out.find("does NOT virtually algebraically fibre") != std::string::npos);
}

TEST_CASE("complex commands") {
  auto v = run({"--format", "json", "complex", "validate", "--complex", data("hollow_triangle.json"),
                "--require-flag"});
  CHECK(v.code == 2);
  auto j = v.json();
  CHECK(j["status"] == "precondition_failure");
  auto witness = labels(j["certificates"][0]["clique"]);
  CHECK(witness == std::vector<std::string>{"a", "b", "c"});
  auto k = io::complex_from_json(io::load_json(data("hollow_triangle.json")));
  std::vector<VertexId> ids;
  for (const auto& s : witness) ids.push_back(k.id_of(s));
  CHECK_FALSE(k.contains(Simplex(ids)));
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) CHECK(k.adjacent(ids[a], ids[b]));
  }
  // Round trip of the canonical complex.
  CHECK(io::complex_from_json(j["result"]["complex"]).facets() == k.facets());

  CHECK(run({"complex", "validate", "--complex", data("hollow_triangle.json")}).code == 0);

  auto h = run({"--format", "json", "complex", "homology", "--complex", data("octahedron.json")});
  CHECK(h.code == 0);
  CHECK(h.json()["result"]["reduced_homology"][3]["free_rank"] == 1);

  auto g = run({"--format", "json", "complex", "girth", "--complex", data("path3.json")});
  CHECK(g.json()["result"]["infinite"] == true);

  auto join = run({"--format", "json", "complex", "join", "--complex", data("c4.json")});
  CHECK(join.json()["result"]["parts"] == Json::array({Json::array({"a", "c"}), Json::array({"b", "d"})}));
  CHECK(run({"complex", "join", "--complex", data("hollow_triangle.json")}).code == 2);
}

TEST_CASE("construct commands") {
  auto h = run({"--format", "json", "construct", "huang", "--graph", data("k4.json")});
  CHECK(h.code == 0);
  auto j = h.json()["result"];
  CHECK(j["vertices"] == 12);
  CHECK(j["edges"] == 24);
  CHECK(j["rank_pi1"] == 13);
  auto graph = io::graph_from_json(j["graph"]);
  CHECK(io::graph_to_json(graph) == j["graph"]);
  CHECK(rank_pi1(graph) == 13);

  auto s = run({"--format", "json", "construct", "salvetti", "--complex", data("edge.json")});
  CHECK(s.json()["result"]["cell_counts"] == Json::array({1, 2, 1}));

  auto ball = run({"--format", "json", "construct", "ball", "--complex", data("sphere0.json"), "--radius", "2"});
  CHECK(ball.json()["result"]["vertices"] == 17);

  auto cover = run({"--format", "json", "construct", "cover", "--complex", data("c5.json"), "--u", "a", "--w",
                    "c", "--radius", "1"});
  CHECK(cover.code == 0);
  CHECK(cover.json()["result"]["center_valence"] == 4 + 2 * 3);

  auto heights = run({"--format", "json", "construct", "heights", "--complex", data("edge.json"), "--radius", "1"});
  CHECK(heights.code == 0);
  CHECK(heights.json()["result"]["heights"].size() == 5);

  auto level = run({"--format", "json", "construct", "levelset", "--complex", data("edge.json"), "--lo", "0",
                    "--hi", "0"});
  CHECK(level.code == 0);
  auto lj = level.json()["result"];
  CHECK(lj["vertices"].size() == 3);
  CHECK(lj["reduced_h0"]["free_rank"] == 2);
  CHECK(lj["label"] == "finite-scale probe; boundary effects uncorrected");
}

TEST_CASE("exit codes") {
  CHECK(run({"sigma", "check", "--complex", data("missing.json"), "--n", "0"}).code == 1);
  CHECK(run({"sigma", "check", "--complex", data("c4.json"), "--n", "0", "--bogus"}).code == 1);
  CHECK(run({"sigma", "check", "--complex", data("c4.json")}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  auto float_char = scratch("float.json", R"({"values": {"a": 0.5, "b": 1, "c": 1, "d": 1}})");
  auto f = run({"--format", "json", "sigma", "check", "--complex", data("c4.json"), "--character", float_char,
                "--n", "0"});
  CHECK(f.code == 1);
  CHECK(f.json()["status"] == "input_error");
  auto zero = scratch("zero.json", R"({"values": {"a": "0", "b": "0", "c": "0", "d": "0"}})");
  CHECK(run({"sigma", "check", "--complex", data("c4.json"), "--character", zero, "--n", "0"}).code == 2);
  CHECK(run({"sigma", "check", "--complex", data("hollow_triangle.json"), "--n", "0"}).code == 2);
  CHECK(run({"construct", "huang", "--graph", data("c4.json")}).code == 1);
  auto ball = run({"--format", "json", "construct", "ball", "--complex", data("edge.json"), "--radius", "6"});
  CHECK(ball.code == 3);
  CHECK(ball.json()["status"] == "budget_exceeded");
  setenv("FIBREKIT_MAX_RADIUS", "1", 1);
  CHECK(run({"construct", "ball", "--complex", data("edge.json"), "--radius", "2"}).code == 3);
  setenv("FIBREKIT_MAX_RADIUS", "x", 1);
  CHECK(run({"construct", "ball", "--complex", data("edge.json"), "--radius", "2"}).code == 1);
  unsetenv("FIBREKIT_MAX_RADIUS");
  auto singular = scratch("singular.json", R"({"n": 2, "rows": [["1", "2"], ["2", "4"]]})");
  CHECK(run({"lm", "analyze", "--matrix", singular}).code == 2);
}

TEST_CASE("JSON reports are byte-identical across runs") {
  std::vector<std::vector<std::string>> commands = {
      {"--format", "json", "sigma", "check", "--complex", data("octahedron.json"), "--n", "1"},
      {"--format", "json", "kernel-type", "--complex", data("grid_disk.json")},
      {"--format", "json", "lm", "analyze", "--matrix", data("rotation_3_5.json")},
      {"--format", "json", "construct", "ball", "--complex", data("c5.json"), "--radius", "2"},
      {"--format", "json", "construct", "huang", "--graph", data("k4.json")},
      {"--format", "json", "complex", "homology", "--complex", data("c5.json")},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = a.json();
    CHECK(j["schema_version"] == 1);
    CHECK(j.dump(2) + "\n" == a.out);
  }
}
