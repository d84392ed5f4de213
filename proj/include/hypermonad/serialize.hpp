#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypermonad/calibrated.hpp"
#include "hypermonad/cdit.hpp"
#include "hypermonad/error.hpp"
#include "hypermonad/exponent.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/hypergraph.hpp"
#include "hypermonad/monoid.hpp"
#include "hypermonad/ordinal.hpp"
#include "hypermonad/state.hpp"
#include "hypermonad/weighted.hpp"

namespace hypermonad {

using Json = nlohmann::json;

namespace detail {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(errc::io_error, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(errc::io_error, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace detail

// ---- ordinal maps ----------------------------------------------------------

inline Json to_json(const OrdinalMap& f) {
  return Json{{"source", f.source_len()}, {"target", f.target_len()}, {"values", f.values()}};
}

inline OrdinalMap ordinal_map_from_json(const Json& j) {
  return OrdinalMap::make(detail::field<std::uint32_t>(j, "source"),
                          detail::field<std::uint32_t>(j, "target"),
                          detail::field<std::vector<std::uint32_t>>(j, "values"));
}

inline Json to_json(const VertexMap& f) {
  return Json{{"domain", f.domain}, {"codomain", f.codomain}, {"values", f.values}};
}

inline VertexMap vertex_map_from_json(const Json& j) {
  return VertexMap::make(detail::field<std::vector<std::uint32_t>>(j, "domain"),
                         detail::field<std::vector<std::uint32_t>>(j, "codomain"),
                         detail::field<std::vector<std::uint32_t>>(j, "values"));
}

// ---- monoids ---------------------------------------------------------------

inline Json to_json(const Monoid& m) {
  if (m.is_cyclic())
    return Json{{"index", m.parts()[0].index}, {"period", m.parts()[0].period}};
  Json parts = Json::array();
  for (const CyclicMonoid& p : m.parts())
    parts.push_back(Json{{"index", p.index}, {"period", p.period}});
  return Json{{"components", parts}};
}

inline Monoid monoid_from_json(const Json& j) {
  if (j.contains("components")) {
    std::vector<CyclicMonoid> parts;
    for (const Json& p : j.at("components"))
      parts.push_back(CyclicMonoid::make(detail::field<std::uint32_t>(p, "index"),
                                         detail::field<std::uint32_t>(p, "period")));
    return Monoid::direct_sum(std::move(parts));
  }
  return Monoid::cyclic(detail::field<std::uint32_t>(j, "index"),
                        detail::field<std::uint32_t>(j, "period"));
}

// ---- exponent functions and calibrations -----------------------------------

inline Json to_json(const ExponentFunction& w) {
  return Json{{"domain", w.domain}, {"values", w.values}};
}

inline ExponentFunction exponent_from_json(const Json& j, const Monoid& a) {
  return ExponentFunction::make(a, detail::field<std::vector<std::uint32_t>>(j, "domain"),
                                detail::field<std::vector<std::uint64_t>>(j, "values"));
}

inline Json entries_to_json(const Calibration& cal) {
  Json entries = Json::array();
  for (const auto& [w, v] : cal.entries) entries.push_back(Json{{"w", w}, {"value", v}});
  return entries;
}

inline Json to_json(const Calibration& cal) {
  return Json{{"domain", cal.domain},
              {"entries", entries_to_json(cal)},
              {"exponent_monoid", to_json(cal.exponent_monoid)},
              {"value_monoid", to_json(cal.value_monoid)}};
}

inline Calibration calibration_from_json(const Json& j, const Monoid& a, const Monoid& m) {
  std::map<std::vector<std::uint64_t>, std::uint64_t> entries;
  for (const Json& e : detail::field<Json>(j, "entries")) {
    auto key = detail::field<std::vector<std::uint64_t>>(e, "w");
    auto [it, inserted] = entries.emplace(std::move(key), detail::field<std::uint64_t>(e, "value"));
    if (!inserted) fail(errc::io_error, "duplicate calibration entry key");
  }
  return Calibration::make(a, m, detail::field<std::vector<std::uint32_t>>(j, "domain"),
                           std::move(entries));
}

inline Calibration calibration_from_json(const Json& j) {
  if (!j.contains("exponent_monoid") || !j.contains("value_monoid"))
    fail(errc::io_error, "calibration without embedded monoids needs them from context");
  return calibration_from_json(j, monoid_from_json(j.at("exponent_monoid")),
                               monoid_from_json(j.at("value_monoid")));
}

// ---- hypergraphs -----------------------------------------------------------

inline Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const Edge& e : h.edges) edges.push_back(e);
  return Json{{"vertices", h.vertex_count}, {"edges", edges}};
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  return Hypergraph::make(detail::field<std::uint32_t>(j, "vertices"),
                          detail::field<std::vector<Edge>>(j, "edges"));
}

inline Json to_json(const CalibratedHypergraph& ch) {
  Json j = to_json(ch.hypergraph);
  Json cals = Json::array();
  for (const auto& [edge, cal] : ch.calibrations)
    cals.push_back(Json{{"edge", edge}, {"entries", entries_to_json(cal)}});
  j["calibrations"] = std::move(cals);
  if (!ch.calibrations.empty()) {
    j["exponent_monoid"] = to_json(ch.calibrations.begin()->second.exponent_monoid);
    j["value_monoid"] = to_json(ch.calibrations.begin()->second.value_monoid);
  }
  return j;
}

/** Monoids come from the file when present, else from the provided pair. */
inline CalibratedHypergraph calibrated_from_json(const Json& j, const Monoid* default_a = nullptr,
                                                 const Monoid* default_m = nullptr) {
  Hypergraph h = hypergraph_from_json(j);
  Monoid a = j.contains("exponent_monoid") ? monoid_from_json(j.at("exponent_monoid"))
             : default_a                   ? *default_a
                                           : Monoid::trivial();
  Monoid m = j.contains("value_monoid") ? monoid_from_json(j.at("value_monoid"))
             : default_m                ? *default_m
                                        : Monoid::trivial();
  if (!j.contains("exponent_monoid") && !default_a && !j.at("calibrations").empty())
    fail(errc::io_error, "calibrated hypergraph needs an exponent monoid");
  if (!j.contains("value_monoid") && !default_m && !j.at("calibrations").empty())
    fail(errc::io_error, "calibrated hypergraph needs a value monoid");
  std::map<Edge, Calibration> cals;
  for (const Json& c : detail::field<Json>(j, "calibrations")) {
    Edge edge = detail::field<Edge>(c, "edge");
    Json body = Json{{"domain", edge}, {"entries", c.contains("entries") ? c.at("entries")
                                                                         : Json::array()}};
    cals.emplace(edge, calibration_from_json(body, a, m));
  }
  return CalibratedHypergraph::make(std::move(h), std::move(cals));
}

inline Json to_json(const WeightedHypergraph& wh) {
  Json j = to_json(wh.hypergraph);
  Json weights = Json::array();
  for (const auto& [edge, w] : wh.weights) weights.push_back(Json{{"edge", edge}, {"value", w}});
  j["weights"] = std::move(weights);
  j["weight_monoid"] = to_json(wh.weight_monoid);
  return j;
}

inline WeightedHypergraph weighted_from_json(const Json& j, const Monoid* default_m = nullptr) {
  Hypergraph h = hypergraph_from_json(j);
  if (!j.contains("weight_monoid") && !default_m)
    fail(errc::io_error, "weighted hypergraph needs a weight monoid");
  Monoid m = j.contains("weight_monoid") ? monoid_from_json(j.at("weight_monoid")) : *default_m;
  std::map<Edge, std::uint64_t> weights;
  for (const Json& e : detail::field<Json>(j, "weights"))
    weights.emplace(detail::field<Edge>(e, "edge"), detail::field<std::uint64_t>(e, "value"));
  return WeightedHypergraph::make(std::move(h), std::move(m), std::move(weights));
}

// ---- rings, configurations, states ------------------------------------------

inline Json to_json(const GaloisRing& ring) {
  return Json{{"p", ring.p()}, {"r", ring.r()}, {"d", ring.d()}, {"modulus", ring.modulus()}};
}

inline GaloisRing ring_from_json(const Json& j) {
  std::vector<std::uint32_t> modulus;
  if (j.contains("modulus")) modulus = detail::field<std::vector<std::uint32_t>>(j, "modulus");
  return GaloisRing::make(detail::field<std::uint32_t>(j, "p"),
                          detail::field<std::uint32_t>(j, "r"),
                          detail::field<std::uint32_t>(j, "d"), std::move(modulus));
}

inline Json to_json(const CditConfig& x) {
  std::vector<std::uint32_t> entries;
  entries.reserve(x.entries.size());
  for (RingElement e : x.entries) entries.push_back(e.index);
  return Json{{"ring", to_json(x.ring)}, {"entries", entries}};
}

inline CditConfig cdit_from_json(const Json& j, const GaloisRing* ring = nullptr) {
  GaloisRing r;
  if (j.contains("ring"))
    r = ring_from_json(j.at("ring"));
  else if (ring)
    r = *ring;
  else
    fail(errc::io_error, "configuration needs a ring");
  std::vector<RingElement> entries;
  for (std::uint32_t idx : detail::field<std::vector<std::uint32_t>>(j, "entries"))
    entries.push_back(r.element(idx));
  return CditConfig::make(std::move(r), std::move(entries));
}

inline Json to_json(const StateVector& psi) {
  Json amps = Json::array();
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    CditConfig x = config_from_index(psi.ring, psi.qudits, i);
    std::vector<std::uint32_t> basis;
    basis.reserve(x.entries.size());
    for (RingElement e : x.entries) basis.push_back(e.index);
    amps.push_back(Json{{"basis", basis},
                        {"re", psi.amplitudes[i].real()},
                        {"im", psi.amplitudes[i].imag()}});
  }
  return Json{{"ring", to_json(psi.ring)}, {"qudits", psi.qudits}, {"amplitudes", amps}};
}

inline StateVector state_from_json(const Json& j, const GaloisRing* default_ring = nullptr) {
  if (!j.contains("ring") && default_ring == nullptr)
    fail(errc::io_error, "state JSON needs a ring");
  GaloisRing ring = j.contains("ring") ? ring_from_json(j.at("ring")) : *default_ring;
  std::uint32_t qudits = detail::field<std::uint32_t>(j, "qudits");
  StateVector psi = StateVector::zero(ring, qudits);
  for (const Json& row : detail::field<Json>(j, "amplitudes")) {
    auto basis = detail::field<std::vector<std::uint32_t>>(row, "basis");
    std::vector<RingElement> entries;
    for (std::uint32_t b : basis) entries.push_back(ring.element(b));
    std::uint64_t idx = config_index(CditConfig::make(ring, std::move(entries)));
    psi.amplitudes.at(idx) =
        Amplitude(detail::field<double>(row, "re"), detail::field<double>(row, "im"));
  }
  return psi;
}

/** One line per amplitude: the basis tuple, then real and imaginary parts. */
inline std::string state_to_csv(const StateVector& psi) {
  std::ostringstream out;
  for (std::uint32_t k = 0; k < psi.qudits; ++k) out << "x" << k << ",";
  out << "re,im\n";
  out.precision(17);
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    CditConfig x = config_from_index(psi.ring, psi.qudits, i);
    for (RingElement e : x.entries) out << e.index << ",";
    out << psi.amplitudes[i].real() << "," << psi.amplitudes[i].imag() << "\n";
  }
  return out.str();
}

// ---- files -----------------------------------------------------------------

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(errc::io_error, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace hypermonad
