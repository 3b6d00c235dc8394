#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FRUSTRA_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::current_path() / "cli_scratch" / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("solve c60") {
  const auto dir = scratch("solve_c60");
  const auto r = run("solve --molecule c60 --out " + dir.string());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("lambda_min").get<double>() == doctest::Approx(-2.6180).epsilon(2e-4));
  CHECK(doc.at("multiplicity") == 3);
  CHECK(doc.at("energy_half_convention").get<double>() == doctest::Approx(-78.541019662496851));
  CHECK(doc.at("energy_paper_convention").get<double>() == doctest::Approx(-157.0820393249937));
  CHECK(doc.at("hypothetical_min").get<double>() == -90.0);
  CHECK(fs::exists(dir / "spins.csv"));
  CHECK(nlohmann::json::parse(slurp(dir / "summary.json")) == doc);
}

TEST_CASE("solve toys") {
  auto r = run("solve --molecule tetrahedron --out " + scratch("tet").string());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("energy").get<double>() == doctest::Approx(-2.0));
  r = run("solve --molecule ring --size 5 --out " + scratch("ring5").string());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("gap_ratio").get<double>() == doctest::Approx(0.191).epsilon(1e-3));
}

TEST_CASE("dynamics from the ground state is stationary") {
  const auto dir = scratch("dyn");
  const auto r = run("dynamics --molecule c60 --init ground --t-end 10 --out " + dir.string());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("stationary") == true);
  CHECK(doc.at("max_displacement").get<double>() <= 1e-7);
  CHECK(slurp(dir / "trajectory.csv").rfind("t,energy,norm_drift,total_moment\n", 0) == 0);
}

TEST_CASE("optimize certifies C60") {
  const auto r = run("optimize --molecule c60 --restarts 20 --seed 7 --out " + scratch("opt").string());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("certification") == "certified_global");
}

TEST_CASE("anisotropy at the nominal delta") {
  const auto dir = scratch("aniso");
  const auto r = run("anisotropy --molecule c60 --delta 0.036 --out " + dir.string());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("overlap").get<double>() >= 0.99);
  CHECK(slurp(dir / "anisotropy_sweep.csv").rfind("delta,lambda_min,splitting,overlap\n", 0) == 0);
}

TEST_CASE("export formats") {
  const auto dir = scratch("export");
  for (const char* fmt : {"json", "csv", "vtk"})
    CHECK(run(std::string("export --molecule c60 --format ") + fmt + " --out " + dir.string()).code == 0);
  CHECK(fs::exists(dir / "graph.json"));
  CHECK(fs::exists(dir / "spins.csv"));
  CHECK(slurp(dir / "spins.vtk").rfind("# vtk DataFile", 0) == 0);

  // A graph exported as JSON can be fed back in.
  const auto back = run("solve --graph " + (dir / "graph.json").string() + " --out " + dir.string());
  REQUIRE(back.code == 0);
  CHECK(nlohmann::json::parse(back.out).at("multiplicity") == 3);
}

TEST_CASE("export falls back to the optimizer when the spectral construction fails") {
  // Two triangles joined by one bond: the bottom eigenspace has an uneven
  // norm profile.
  const auto dir = scratch("fallback");
  fs::create_directories(dir);
  const nlohmann::json doc = {
      {"n", 6},
      {"coords", {{0, 0, 0}, {1, 0, 0}, {0.5, 0.8, 0}, {3, 0, 0}, {4, 0, 0}, {3.5, 0.8, 0}}},
      {"edges", {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {1, 3}}}};
  std::ofstream(dir / "g.json") << doc.dump();
  CHECK(run("solve --graph " + (dir / "g.json").string() + " --out " + dir.string()).code == 2);
  CHECK(run("export --format csv --graph " + (dir / "g.json").string() + " --out " + dir.string()).code == 0);
}

TEST_CASE("identical commands produce identical files") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    REQUIRE(run("optimize --molecule c60 --restarts 4 --seed 11 --out " + dir.string()).code == 0);
    REQUIRE(run("solve --molecule c60 --out " + dir.string()).code == 0);
  }
  for (const char* f : {"optimized_spins.csv", "optimize.json", "spins.csv", "summary.json"})
    CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("FRUSTRA_OUT sets the default output directory") {
  const auto dir = scratch("env");
  const std::string cmd = "FRUSTRA_OUT=" + dir.string() + " " + std::string(FRUSTRA_CLI) +
                          " solve --molecule cube > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(dir / "spins.csv"));
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("solve --bogus").code == 1);
  CHECK(run("solve --molecule dodecahedron").code == 1);
  CHECK(run("solve --j -1 --out " + scratch("bad_j").string()).code == 2);
  CHECK(run("anisotropy --delta 0.7 --out " + scratch("bad_delta").string()).code == 2);
  CHECK(run("solve --graph /nonexistent.json").code == 2);
  CHECK(run("--help").code == 0);
}
