#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hypermonad/hypermonad.hpp"
#include "support.hpp"

using namespace hypermonad;
using hmtest::error_code;

namespace {

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("core objects survive a round trip through their JSON forms") {
  OrdinalMap f = OrdinalMap::make(5, 4, {0, 1, 3, 3, 1});
  REQUIRE(ordinal_map_from_json(to_json(f)) == f);

  VertexMap v = VertexMap::make({1, 4}, {0, 2}, {2, 0});
  REQUIRE(vertex_map_from_json(to_json(v)) == v);

  Monoid m = Monoid::direct_sum({CyclicMonoid::make(1, 1), CyclicMonoid::make(0, 3)});
  REQUIRE(monoid_from_json(to_json(m)) == m);
  REQUIRE(monoid_from_json(to_json(Monoid::cyclic(2, 3))) == Monoid::cyclic(2, 3));

  Hypergraph h = Hypergraph::make(5, {{0, 4}, {0, 1}, {1, 2, 3}});
  REQUIRE(hypergraph_from_json(to_json(h)) == h);

  GaloisRing gr = GaloisRing::make(2, 2, 2);
  REQUIRE(ring_from_json(to_json(gr)) == gr);

  CditConfig x = CditConfig::make(gr, {gr.element(5), gr.element(0), gr.element(12)});
  REQUIRE(cdit_from_json(to_json(x)) == x);

  auto rng = case_rng(31, 0);
  LawConfig cfg;
  CalibratedHypergraph ch = gen_calibrated(rng, 3, cfg.exponent_monoid, cfg.value_monoid, cfg.gen);
  REQUIRE(calibrated_from_json(to_json(ch)) == ch);

  WeightedHypergraph wh = gen_weighted(rng, 3, cfg.value_monoid, cfg.gen);
  REQUIRE(weighted_from_json(to_json(wh)) == wh);

  StateVector psi = gen_state(rng, GaloisRing::make(2, 2, 1), 2);
  StateVector back = state_from_json(to_json(psi));
  REQUIRE(back.qudits == psi.qudits);
  REQUIRE(max_abs_diff(back, psi) == 0.0);
}

TEST_CASE("calibration entries serialize sorted with zero values absent") {
  Monoid a = Monoid::cyclic(0, 2), m = Monoid::cyclic(0, 3);
  Calibration cal =
      Calibration::make(a, m, {0, 1}, {{{1, 0}, 2}, {{0, 1}, 1}, {{1, 1}, 0}});
  Json entries = entries_to_json(cal);
  REQUIRE(entries.size() == 2);
  REQUIRE(entries[0]["w"] == Json::array({0, 1}));
  REQUIRE(entries[1]["w"] == Json::array({1, 0}));
  REQUIRE(calibration_from_json(to_json(cal)) == cal);
}

TEST_CASE("missing and malformed fields carry io diagnostics") {
  REQUIRE(error_code([] { ordinal_map_from_json(parse(R"({"source": 1})")); }) == errc::io_error);
  REQUIRE(error_code([] {
            ordinal_map_from_json(parse(R"({"source": 1, "target": 2, "values": "x"})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            calibration_from_json(parse(R"({"domain": [0], "entries": []})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            calibration_from_json(
                parse(R"({"domain": [0], "entries": [{"w": [1], "value": 1}, {"w": [1], "value": 2}],
                          "exponent_monoid": {"index": 0, "period": 2},
                          "value_monoid": {"index": 0, "period": 3}})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            weighted_from_json(parse(R"({"vertices": 1, "edges": [[0]], "weights": []})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            calibrated_from_json(parse(
                R"({"vertices": 1, "edges": [[0]], "calibrations": [{"edge": [0], "entries": []}]})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            cdit_from_json(parse(R"({"entries": [0, 1]})"));
          }) == errc::io_error);
  REQUIRE(error_code([] {
            state_from_json(parse(R"({"qudits": 1, "amplitudes": []})"));
          }) == errc::io_error);
}

TEST_CASE("payload validation still applies after parsing") {
  REQUIRE(error_code([] {
            hypergraph_from_json(parse(R"({"vertices": 2, "edges": [[0, 3]]})"));
          }) == errc::out_of_range);
  REQUIRE(error_code([] {
            weighted_from_json(parse(
                R"({"vertices": 2, "edges": [[0, 1]], "weight_monoid": {"index": 0, "period": 3},
                    "weights": [{"edge": [0], "value": 1}]})"));
          }) == errc::domain_mismatch);
  REQUIRE(error_code([] {
            calibration_from_json(
                parse(R"({"domain": [0], "entries": [{"w": [5], "value": 1}],
                          "exponent_monoid": {"index": 0, "period": 2},
                          "value_monoid": {"index": 0, "period": 3}})"));
          }) == errc::out_of_carrier);
}

TEST_CASE("sparse state JSON fills unlisted amplitudes with zero") {
  GaloisRing f2 = GaloisRing::make(2, 1, 1);
  Json j = {{"qudits", 2},
            {"amplitudes", Json::array({Json{{"basis", {1, 1}}, {"re", 0.5}, {"im", -0.25}}})}};
  StateVector psi = state_from_json(j, &f2);
  REQUIRE(psi.dim() == 4);
  REQUIRE(psi.amplitudes[3] == Amplitude(0.5, -0.25));
  REQUIRE(psi.amplitudes[0] == Amplitude(0.0));
  REQUIRE(error_code([&] {
            state_from_json(Json{{"qudits", 1},
                                 {"amplitudes", Json::array({Json{{"basis", {2}},
                                                                  {"re", 1.0},
                                                                  {"im", 0.0}}})}},
                            &f2);
          }) == errc::out_of_carrier);
}

TEST_CASE("file loading reports the offending path and position") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "hm_serialize_test";
  fs::create_directories(dir);
  fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{\"vertices\": 2,,}";

  try {
    load_json_file(bad.string());
    FAIL("expected io_error");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::io_error);
    REQUIRE(std::string(e.what()).find("bad.json") != std::string::npos);
  }

  REQUIRE(error_code([&] { load_json_file((dir / "absent.json").string()); }) == errc::io_error);

  fs::path good = dir / "good.json";
  write_text_file(good.string(), to_json(Hypergraph::make(2, {{0, 1}})).dump());
  REQUIRE(hypergraph_from_json(load_json_file(good.string())) ==
          Hypergraph::make(2, {{0, 1}}));
  fs::remove_all(dir);
}
