#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypermonad/calibrated.hpp"
#include "hypermonad/error.hpp"
#include "hypermonad/hypergraph.hpp"
#include "hypermonad/monoid.hpp"

namespace hypermonad {

/**
 * Hypergraph with one weight per edge, drawn from a shared monoid M.
 * Zero weights are kept: a weight function assigns a value to every edge.
 */
struct WeightedHypergraph {
  Hypergraph hypergraph;
  Monoid weight_monoid;
  std::map<Edge, std::uint64_t> weights;

  static WeightedHypergraph make(Hypergraph h, Monoid m,
                                 std::map<Edge, std::uint64_t> weights) {
    if (weights.size() != h.edges.size()) fail(errc::shape_mismatch, "need one weight per edge");
    for (const auto& [edge, w] : weights) {
      if (!h.edges.count(edge)) fail(errc::domain_mismatch, "weight key is not an edge");
      if (w >= m.size()) fail(errc::out_of_carrier, "weight outside monoid carrier");
    }
    return WeightedHypergraph{std::move(h), std::move(m), std::move(weights)};
  }

  static WeightedHypergraph unit(Monoid m) {
    return WeightedHypergraph{Hypergraph::unit(), std::move(m), {}};
  }

  std::uint64_t at(const Edge& edge) const {
    auto it = weights.find(edge);
    if (it == weights.end()) fail(errc::domain_mismatch, "edge has no weight");
    return it->second;
  }

  bool operator==(const WeightedHypergraph& o) const {
    return hypergraph == o.hypergraph && weight_monoid == o.weight_monoid && weights == o.weights;
  }
};

/** Each image edge receives the M-sum of the weights over its preimage edges. */
inline std::map<Edge, std::uint64_t> weight_pushforward(const OrdinalMap& f,
                                                        const WeightedHypergraph& wh) {
  if (wh.hypergraph.vertex_count != f.source_len())
    fail(errc::shape_mismatch, "hypergraph grade disagrees with map source");
  std::map<Edge, std::uint64_t> out;
  for (const auto& [x, w] : wh.weights) {
    Edge y = edge_image(f, x);
    auto [it, inserted] = out.emplace(std::move(y), w);
    if (!inserted) it->second = wh.weight_monoid.add(it->second, w);
  }
  return out;
}

/** Morphism action on weighted hypergraphs. */
inline WeightedHypergraph gw_map(const OrdinalMap& f, const WeightedHypergraph& wh) {
  return WeightedHypergraph::make(hg_map(f, wh.hypergraph), wh.weight_monoid,
                                  weight_pushforward(f, wh));
}

/** Monoidal product: left weights unchanged, right weights on shifted edges. */
inline WeightedHypergraph gw_join(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  if (!(a.weight_monoid == b.weight_monoid))
    fail(errc::monoid_mismatch, "joined weights disagree on their monoid");
  Hypergraph joined = hg_join(a.hypergraph, b.hypergraph);
  std::map<Edge, std::uint64_t> weights = a.weights;
  for (const auto& [edge, w] : b.weights) {
    Edge shifted;
    shifted.reserve(edge.size());
    for (std::uint32_t r : edge) shifted.push_back(r + a.hypergraph.vertex_count);
    weights.emplace(std::move(shifted), w);
  }
  return WeightedHypergraph::make(std::move(joined), a.weight_monoid, std::move(weights));
}

/** Weight join restricted to the weight functions themselves. */
inline std::map<Edge, std::uint64_t> weight_join(const WeightedHypergraph& a,
                                                 const WeightedHypergraph& b) {
  return gw_join(a, b).weights;
}

/**
 * Weight of a calibration: each edge receives the M-sum of its calibration
 * values. Only the stored support contributes; absent entries are zero.
 */
inline WeightedHypergraph mu(const CalibratedHypergraph& ch, const Monoid& value_monoid) {
  std::map<Edge, std::uint64_t> weights;
  for (const auto& [edge, cal] : ch.calibrations) {
    if (!(cal.value_monoid == value_monoid))
      fail(errc::monoid_mismatch, "calibration value monoid disagrees");
    std::uint64_t total = 0;
    for (const auto& [w, v] : cal.entries) total = value_monoid.add(total, v);
    weights.emplace(edge, total);
  }
  return WeightedHypergraph::make(ch.hypergraph, value_monoid, std::move(weights));
}

/** mu with the value monoid taken from the calibrations themselves. */
inline WeightedHypergraph mu(const CalibratedHypergraph& ch) {
  if (ch.calibrations.empty())
    fail(errc::monoid_mismatch, "empty calibration family does not name a value monoid");
  return mu(ch, ch.calibrations.begin()->second.value_monoid);
}

/** Calibrated-to-weighted morphism: keep the hypergraph, take mu edge-wise. */
inline WeightedHypergraph morphism_h(const CalibratedHypergraph& ch, const Monoid& value_monoid) {
  return mu(ch, value_monoid);
}

/** Projection onto the underlying hypergraph. */
inline Hypergraph proj_w(const WeightedHypergraph& wh) { return wh.hypergraph; }

}  // namespace hypermonad
