#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fanpoly/cli.hpp"
#include "fanpoly/error.hpp"
#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto r = cli::run(args, out, err);
  return {r.exit_code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "fanpoly-tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

ErrorKind kind_of_parse(const std::string& text) {
  try {
    io::fan_from_json(json::parse(text));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("vector lists and the degree cap") {
  auto v = cli::parse_vector_list("1,0;0,1;-1,-1");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == V({-1, -1}));
  CHECK(cli::parse_vector_list(" 2 , 3 ") == std::vector<IntVector>{V({2, 3})});
  CHECK_THROWS_AS(cli::parse_vector_list("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_vector_list("1,,2"), std::invalid_argument);

  unsetenv("FANPOLY_MAX_DEGREE");
  CHECK(cli::default_max_degree() == 4);
  setenv("FANPOLY_MAX_DEGREE", "2", 1);
  CHECK(cli::default_max_degree() == 2);
  auto r = run_cli({"sr-hilbert", fixture("p2.fan.json"), "--json"});
  CHECK(json::parse(r.out)["results"]["degrees"].size() == 3);
  setenv("FANPOLY_MAX_DEGREE", "junk", 1);
  CHECK(cli::default_max_degree() == 4);
  unsetenv("FANPOLY_MAX_DEGREE");
}

TEST_CASE("numbers travel as decimal strings") {
  Integer big("123456789012345678901234567890");
  CHECK(io::integer_to_json(big) == json("123456789012345678901234567890"));
  CHECK(io::integer_from_json(io::integer_to_json(big)) == big);
  CHECK(io::integer_from_json(json(-7)) == -7);
  CHECK(io::rational_from_json(io::rational_to_json(Rational(-3, 4))) == Rational(-3, 4));
  CHECK_THROWS_AS(io::integer_from_json(json("12a")), Error);
  CHECK_THROWS_AS(io::integer_from_json(json(1.5)), Error);
}

TEST_CASE("round trips") {
  for (const char* name : {"p1", "p2", "p1xp1", "diamond", "blp2", "cube"}) {
    Fan f = fixture_fan(name);
    CHECK(io::fan_from_json(json::parse(io::fan_to_json(f).dump())) == f);
  }
  for (const char* name : {"doubled-cone", "hypertoric-3lines"}) {
    Multifan m = io::load_multifan(fixture(std::string(name) + ".multifan.json"));
    CHECK(io::multifan_from_json(io::multifan_to_json(m)).key() == m.key());
  }

  Polynomial p(2);
  p.add_term({2, 1}, Integer("-98765432109876543210"));
  p.add_term({0, 0}, 4);
  CHECK(io::polynomial_from_json(io::polynomial_to_json(p), 2) == p);
  RationalPolynomial q(2);
  q.add_term({1, 0}, Rational(1, 3));
  CHECK(io::rational_polynomial_from_json(io::rational_polynomial_to_json(q), 2) == q);
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"([[[1,0,0],"1"]])"), 2), Error);

  Fan p2 = fixture_fan("p2");
  BundleData b = io::bundle_from_json(p2, io::read_json_file(fixture("p2-tangent.bundle.json")));
  BundleData b2 = io::bundle_from_json(p2, io::bundle_to_json(b));
  CHECK(b2.representatives == b.representatives);

  for (const auto& e : pp_basis(p2, 2).elements) {
    auto [f, a] = io::pp_from_json(io::pp_to_json(e, p2));
    CHECK(f == p2);
    CHECK(a == e);
  }

  TorsionReport t = h3_torsion(fixture_fan("diamond"));
  TorsionReport t2 = io::torsion_from_json(io::torsion_to_json(t));
  CHECK(t2.elementary_divisors == t.elementary_divisors);
  CHECK(t2.torsion_summands == t.torsion_summands);
  CHECK(t2.free_rank == t.free_rank);
  CHECK(t2.parity_certificate == t.parity_certificate);
}

TEST_CASE("malformed input") {
  CHECK(kind_of_parse(R"({"maximal_cones": []})") == ErrorKind::ParseError);
  CHECK(kind_of_parse(R"({"rank": 2, "maximal_cones": [[[1, 0, 0]]]})") == ErrorKind::DimensionMismatch);
  CHECK(kind_of_parse(R"({"rank": 2, "maximal_cones": [[["a", 0]]]})") == ErrorKind::ParseError);
  CHECK(kind_of_parse(R"({"rank": 2, "maximal_cones": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]})") ==
        ErrorKind::NotAFan);
  fs::path bad = scratch("bad.json");
  write(bad, "{ not json");
  try {
    io::read_json_file(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  try {
    io::read_json_file(scratch("does-not-exist.json"));
    FAIL("expected FileError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FileError);
  }
}

TEST_CASE("documented command lines") {
  auto v = run_cli({"validate", fixture("p2.fan.json")});
  CHECK(v.code == 0);

  auto g = run_cli({"gkm-check", fixture("cube.fan.json"), "--max-degree", "2"});
  CHECK(g.code == 0);
  auto gj = json::parse(run_cli({"gkm-check", fixture("cube.fan.json"), "--max-degree", "2", "--json"}).out);
  REQUIRE(gj["results"]["degrees"].size() == 3);
  for (const auto& row : gj["results"]["degrees"]) {
    CHECK(row["equal"] == true);
    CHECK(row["pp_rank"] == row["gkm_rank"]);
  }
  CHECK(g.out.find("11") != std::string::npos);

  auto m = run_cli({"mv-h3", fixture("diamond.fan.json"), "--json"});
  CHECK(m.code == 0);
  json mj = json::parse(m.out);
  auto divisors = mj["results"]["elementary_divisors"];
  CHECK(std::find(divisors.begin(), divisors.end(), json("2")) != divisors.end());
  CHECK(mj["results"]["parity_certificate"] == true);
  CHECK(mj["exit_code"] == 0);
  CHECK(mj["verb"] == "mv-h3");
}

TEST_CASE("every verb emits parseable, deterministic JSON") {
  const std::string p2 = fixture("p2.fan.json");
  std::vector<std::vector<std::string>> commands = {
      {"validate", p2},
      {"validate", fixture("doubled-cone.multifan.json")},
      {"validate", fixture("p2-tangent.bundle.json")},
      {"validate", fixture("blp2-kink.pp.json")},
      {"pp-basis", p2, "--show-basis", "--max-degree", "2"},
      {"gkm-check", fixture("diamond.fan.json"), "--degree", "2"},
      {"chern", p2, fixture("p2-tangent.bundle.json")},
      {"chern", fixture("p2-tangent.bundle.json"), "--index", "1"},
      {"courant", fixture("diamond.fan.json")},
      {"sr-hilbert", p2},
      {"mv-h3", fixture("p1xp1.fan.json")},
      {"subdivide", p2, "--cone", "1,0;0,1"},
      {"hypertoric", "--rank", "2", "--vectors", "1,0;0,1;1,1"},
      {"mpp-basis", fixture("hypertoric-3lines.multifan.json"), "--max-degree", "3"},
  };
  for (auto args : commands) {
    INFO(args[0]);
    args.push_back("--json");
    auto a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["verb"] == args[0]);
    CHECK(j["exit_code"] == a.code);
    CHECK(j.contains("inputs"));
    CHECK(json::parse(j.dump()) == j);
  }
}

TEST_CASE("CLI output feeds back into the library") {
  // A subdivided fan written with -o is the blown-up plane.
  fs::path out = scratch("blp2-out.fan.json");
  auto s = run_cli({"subdivide", fixture("p2.fan.json"), "--cone", "1,0;0,1", "-o", out.string()});
  CHECK(s.code == 0);
  CHECK(io::load_fan(out) == fixture_fan("blp2"));

  // Basis elements printed by pp-basis re-parse to the library's basis.
  json j = json::parse(run_cli({"pp-basis", fixture("p2.fan.json"), "--degree", "2", "--show-basis", "--json"}).out);
  Fan p2 = fixture_fan("p2");
  GradedBasis b = pp_basis(p2, 2);
  auto listed = j["results"]["degrees"][0]["basis"];
  REQUIRE(listed.size() == b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    auto [f, a] = io::pp_from_json(json{{"fan", io::fan_to_json(p2)}, {"parts", listed[i]}});
    CHECK(a == b.elements[i]);
  }

  // Chern classes printed by the CLI are valid elements.
  json c = json::parse(run_cli({"chern", fixture("p2-tangent.bundle.json"), "--json"}).out);
  for (const auto& cls : c["results"]["classes"])
    CHECK_NOTHROW(io::pp_from_json(json{{"fan", io::fan_to_json(p2)}, {"parts", cls["parts"]}}));

  // The torsion report re-parses.
  json t = json::parse(run_cli({"mv-h3", fixture("diamond.fan.json"), "--json"}).out);
  CHECK(io::torsion_from_json(t["results"]).elementary_divisors == h3_torsion(fixture_fan("diamond")).elementary_divisors);
}

TEST_CASE("exit codes") {
  // Failed check: 1, with a structured report and no "pass".
  auto k = run_cli({"pullback-check", fixture("p2.fan.json"), fixture("blp2-kink.pp.json"), "--cone", "1,0;0,1", "--json"});
  CHECK(k.code == 1);
  json kj = json::parse(k.out);
  CHECK(kj["results"]["pullback"] == false);
  CHECK(kj["results"]["condition"] == "i");
  CHECK(kj["results"]["failing_cone"] == "[[0,1],[1,0]]");
  CHECK(k.out.find("pass") == std::string::npos);

  // Mathematical validation failure: 1.
  fs::path notfan = scratch("notfan.fan.json");
  write(notfan, R"({"rank": 2, "maximal_cones": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]})");
  auto nf = run_cli({"validate", notfan.string()});
  CHECK(nf.code == 1);
  CHECK(nf.err.find("NotAFan") != std::string::npos);
  CHECK(run_cli({"mv-h3", fixture("cube.fan.json")}).code == 1);

  // Usage: 2.
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"validate"}).code == 2);
  CHECK(run_cli({"pp-basis", fixture("p2.fan.json"), "--degree", "x"}).code == 2);
  CHECK(run_cli({"hypertoric", "--rank", "2", "--vectors", "1,0,0"}).code == 2);

  // File and parse errors: 3.
  CHECK(run_cli({"validate", scratch("missing.fan.json").string()}).code == 3);
  fs::path garbage = scratch("garbage.fan.json");
  write(garbage, "[1, 2");
  auto gr = run_cli({"validate", garbage.string(), "--json"});
  CHECK(gr.code == 3);
}
