#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hypermonad/hypermonad.hpp"
#include "support.hpp"

using namespace hypermonad;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/** Runs the built binary through a shell, capturing the requested stream. */
RunResult run(const std::string& args, bool capture_stderr = false) {
  std::string cmd = std::string(HM_CLI_BIN) + " " + args +
                    (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "hm_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string put(const fs::path& dir, const char* name, const Json& j) {
  fs::path p = dir / name;
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("state builds the two-qubit controlled-phase amplitudes") {
  fs::path dir = temp_dir();
  std::string h = put(dir, "pair.json", to_json(Hypergraph::make(2, {{0, 1}})));
  RunResult r = run("state --ring 2,1,1 --hypergraph " + h);
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  REQUIRE(out["qudits"] == 2);
  std::vector<double> expected = {0.5, 0.5, 0.5, -0.5};
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(out["amplitudes"][i]["re"].get<double>() == Catch::Approx(expected[i]).margin(1e-12));
    REQUIRE(out["amplitudes"][i]["im"].get<double>() == Catch::Approx(0.0).margin(1e-12));
  }

  std::string empty = put(dir, "empty.json", to_json(Hypergraph::make(2, {})));
  Json flat = Json::parse(run("state --ring 2,1,1 --hypergraph " + empty).out);
  REQUIRE(flat["amplitudes"][0]["re"].get<double>() == Catch::Approx(1.0).margin(1e-12));
  for (std::size_t i = 1; i < 4; ++i)
    REQUIRE(std::abs(flat["amplitudes"][i]["re"].get<double>()) < 1e-12);

  RunResult csv = run("state --ring 2,1,1 --hypergraph " + h + " --format csv");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(csv.out.rfind("x0,x1,re,im\n", 0) == 0);
}

TEST_CASE("pushforward reproduces the recorded morphism action") {
  fs::path dir = temp_dir();
  std::string f =
      put(dir, "map.json", to_json(OrdinalMap::make(5, 4, {0, 1, 3, 3, 1})));
  std::string h =
      put(dir, "hg.json", to_json(Hypergraph::make(5, {{0, 4}, {0, 1}, {1, 2, 3}})));
  RunResult r = run("pushforward --map " + f + " --hypergraph " + h);
  REQUIRE(r.exit_code == 0);
  REQUIRE(hypergraph_from_json(Json::parse(r.out)) == Hypergraph::make(4, {{0, 1}, {1, 3}}));
}

TEST_CASE("join requires both operands to be the same kind") {
  fs::path dir = temp_dir();
  std::string h = put(dir, "left.json", to_json(Hypergraph::make(2, {{0, 1}})));
  std::string w = put(dir, "right.json",
                      to_json(WeightedHypergraph::make(Hypergraph::make(1, {{0}}),
                                                       Monoid::cyclic(0, 2), {{{0}, 1}})));
  RunResult ok = run("join --left " + h + " --right " + h);
  REQUIRE(ok.exit_code == 0);
  REQUIRE(hypergraph_from_json(Json::parse(ok.out)) ==
          Hypergraph::make(4, {{0, 1}, {2, 3}}));

  RunResult mixed = run("join --left " + h + " --right " + w);
  REQUIRE(mixed.exit_code == 2);
}

TEST_CASE("fourier applied twice with opposite directions is the identity") {
  fs::path dir = temp_dir();
  std::string h = put(dir, "fpair.json", to_json(Hypergraph::make(2, {{0, 1}})));
  fs::path psi = dir / "psi.json";
  REQUIRE(run("state --ring 2,2,1 --hypergraph " + h + " --out " + psi.string()).exit_code == 0);

  RunResult forward = run("fourier --state " + psi.string());
  REQUIRE(forward.exit_code == 0);
  std::string hat = put(dir, "hat.json", Json::parse(forward.out));

  RunResult back = run("fourier --inverse --state " + hat);
  REQUIRE(back.exit_code == 0);
  StateVector original = state_from_json(load_json_file(psi.string()));
  StateVector round = state_from_json(Json::parse(back.out));
  REQUIRE(original.ring.q() == 4);
  REQUIRE(max_abs_diff(original, round) < 1e-12);
}

TEST_CASE("gen is reproducible in the seed") {
  RunResult a = run("gen --kind calibrated-hypergraph --seed 11 --grade 2");
  RunResult b = run("gen --kind calibrated-hypergraph --seed 11 --grade 2");
  RunResult c = run("gen --kind calibrated-hypergraph --seed 12 --grade 2");
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(a.out != c.out);
  calibrated_from_json(Json::parse(a.out));

  RunResult bad = run("gen --kind calibration --grade 0");
  REQUIRE(bad.exit_code == 2);
}

TEST_CASE("checks exit zero on success and nonzero on reported failure") {
  RunResult laws = run("check monad-laws --monad g --cases 25");
  REQUIRE(laws.exit_code == 0);
  Json reports = Json::parse(laws.out);
  REQUIRE(reports.is_array());
  for (const Json& r : reports) {
    REQUIRE(r["passed"] == true);
    REQUIRE(r["failure_count"] == 0);
  }

  RunResult text = run("check unit --ring 2,1,1 --format text");
  REQUIRE(text.exit_code == 0);
  REQUIRE(text.out.find("PASS") != std::string::npos);

  RunResult forced = run("check unit --ring 2,1,1 --tolerance -1");
  REQUIRE(forced.exit_code == 1);
}

TEST_CASE("the recorded examples replay from the fixtures tree") {
  RunResult r = run(std::string("check paper-examples --fixtures ") + HM_FIXTURE_DIR);
  REQUIRE(r.exit_code == 0);

  fs::path dir = temp_dir() / "fixtures_broken";
  fs::create_directories(dir);
  Json fx = load_json_file(std::string(HM_FIXTURE_DIR) + "/01_hypergraph_map.json");
  fx["expected"]["edges"] = Json::array({Json::array({0, 1})});
  std::ofstream(dir / "01_hypergraph_map.json") << fx.dump();
  RunResult broken = run("check paper-examples --fixtures " + dir.string());
  REQUIRE(broken.exit_code == 1);
}

TEST_CASE("bad invocations and malformed files exit with code two") {
  REQUIRE(run("--no-such-flag").exit_code == 2);
  REQUIRE(run("state").exit_code == 2);

  fs::path dir = temp_dir();
  fs::path bad = dir / "broken.json";
  std::ofstream(bad) << "{\"vertices\": 2,,}";
  RunResult r = run("state --ring 2,1,1 --hypergraph " + bad.string(), true);
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.out.find("broken.json") != std::string::npos);
}
