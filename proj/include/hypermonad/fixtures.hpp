#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hypermonad/laws.hpp"
#include "hypermonad/serialize.hpp"

namespace hypermonad {

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline FixtureResult fixture_compare(const std::string& name, const Json& actual,
                                     const Json& expected) {
  if (actual == expected) return FixtureResult{name, true, ""};
  return FixtureResult{name, false,
                       "expected " + expected.dump() + " but computed " + actual.dump()};
}

}  // namespace detail

/**
 * Replay one recorded example: build the inputs, run the named operation,
 * compare against the recorded output. Every comparison is exact.
 */
inline FixtureResult run_fixture(const Json& j) {
  std::string name = detail::field<std::string>(j, "name");
  std::string op = detail::field<std::string>(j, "op");

  if (op == "hg_map") {
    Hypergraph out = hg_map(ordinal_map_from_json(j.at("map")),
                            hypergraph_from_json(j.at("hypergraph")));
    return detail::fixture_compare(name, to_json(out), j.at("expected"));
  }
  if (op == "hg_join") {
    Hypergraph out = hg_join(hypergraph_from_json(j.at("left")),
                             hypergraph_from_json(j.at("right")));
    return detail::fixture_compare(name, to_json(out), j.at("expected"));
  }
  if (op == "exp_pushforward") {
    VertexMap f = vertex_map_from_json(j.at("map"));
    Monoid a = monoid_from_json(j.at("exponent_monoid"));
    Json actual = Json::array(), expected = Json::array();
    for (const Json& c : j.at("cases")) {
      ExponentFunction w =
          ExponentFunction::make(a, f.domain, detail::field<std::vector<std::uint64_t>>(c, "w"));
      actual.push_back(exp_pushforward(f, a, w).values);
      expected.push_back(c.at("expected"));
    }
    return detail::fixture_compare(name, actual, expected);
  }
  if (op == "cal_pushforward") {
    VertexMap f = vertex_map_from_json(j.at("map"));
    Monoid a = monoid_from_json(j.at("exponent_monoid"));
    Monoid m = monoid_from_json(j.at("value_monoid"));
    Json actual = Json::array(), expected = Json::array();
    for (const Json& c : j.at("cases")) {
      Json body = Json{{"domain", f.domain}, {"entries", c.at("entries")}};
      Calibration out = cal_pushforward(f, calibration_from_json(body, a, m));
      actual.push_back(entries_to_json(out));
      expected.push_back(c.at("expected"));
    }
    return detail::fixture_compare(name, actual, expected);
  }
  if (op == "calibrated_pushforward") {
    CalibratedHypergraph ch = calibrated_from_json(j.at("calibrated"));
    CalibratedHypergraph out = gc_map(ordinal_map_from_json(j.at("map")), ch);
    return detail::fixture_compare(name, to_json(out), to_json(calibrated_from_json(j.at("expected"))));
  }
  if (op == "cal_join") {
    CalibratedHypergraph out = gc_join(calibrated_from_json(j.at("left")),
                                       calibrated_from_json(j.at("right")));
    return detail::fixture_compare(name, to_json(out), to_json(calibrated_from_json(j.at("expected"))));
  }
  if (op == "weight_pushforward") {
    WeightedHypergraph out = gw_map(ordinal_map_from_json(j.at("map")),
                                    weighted_from_json(j.at("weighted")));
    return detail::fixture_compare(name, to_json(out), to_json(weighted_from_json(j.at("expected"))));
  }
  if (op == "weight_join") {
    WeightedHypergraph out = gw_join(weighted_from_json(j.at("left")),
                                     weighted_from_json(j.at("right")));
    return detail::fixture_compare(name, to_json(out), to_json(weighted_from_json(j.at("expected"))));
  }
  if (op == "mu") {
    WeightedHypergraph out = mu(calibrated_from_json(j.at("calibrated")));
    return detail::fixture_compare(name, to_json(out), to_json(weighted_from_json(j.at("expected"))));
  }
  if (op == "e_map") {
    GaloisRing ring = ring_from_json(j.at("ring"));
    OrdinalMap f = ordinal_map_from_json(j.at("map"));
    Json actual = Json::array(), expected = Json::array();
    for (const Json& c : j.at("cases")) {
      Json body = Json{{"entries", c.at("entries")}};
      CditConfig out = e_map(f, cdit_from_json(body, &ring));
      actual.push_back(to_json(out).at("entries"));
      expected.push_back(c.at("expected"));
    }
    return detail::fixture_compare(name, actual, expected);
  }
  if (op == "cdit_join") {
    GaloisRing ring = ring_from_json(j.at("ring"));
    Json left = Json{{"entries", j.at("left")}}, right = Json{{"entries", j.at("right")}};
    CditConfig out = cdit_join(cdit_from_json(left, &ring), cdit_from_json(right, &ring));
    return detail::fixture_compare(name, to_json(out).at("entries"), j.at("expected"));
  }
  fail(errc::io_error, "unknown fixture op '" + op + "'");
}

/** Replay every .json fixture in the directory, sorted by filename. */
inline std::vector<FixtureResult> run_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) fail(errc::io_error, "fixture directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(errc::io_error, "no fixtures under '" + dir + "'");
  std::vector<FixtureResult> results;
  for (const fs::path& path : files) {
    try {
      results.push_back(run_fixture(load_json_file(path.string())));
    } catch (const Error& e) {
      results.push_back(FixtureResult{path.filename().string(), false, e.what()});
    }
  }
  return results;
}

}  // namespace hypermonad
