#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypermonad/error.hpp"
#include "hypermonad/exponent.hpp"
#include "hypermonad/hypergraph.hpp"

namespace hypermonad {

/**
 * Hypergraph together with one calibration per edge, all calibrations
 * sharing the same exponent monoid A and value monoid M.
 */
struct CalibratedHypergraph {
  Hypergraph hypergraph;
  std::map<Edge, Calibration> calibrations;

  static CalibratedHypergraph make(Hypergraph h, std::map<Edge, Calibration> calibrations) {
    if (calibrations.size() != h.edges.size())
      fail(errc::shape_mismatch, "need exactly one calibration per edge");
    const Monoid* a = nullptr;
    const Monoid* m = nullptr;
    for (const auto& [edge, cal] : calibrations) {
      if (!h.edges.count(edge)) fail(errc::domain_mismatch, "calibration key is not an edge");
      if (cal.domain != edge) fail(errc::domain_mismatch, "calibration domain disagrees with edge");
      if (a && (!(*a == cal.exponent_monoid) || !(*m == cal.value_monoid)))
        fail(errc::monoid_mismatch, "calibrations disagree on their monoids");
      a = &cal.exponent_monoid;
      m = &cal.value_monoid;
    }
    return CalibratedHypergraph{std::move(h), std::move(calibrations)};
  }

  static CalibratedHypergraph unit() { return CalibratedHypergraph{}; }

  const Calibration& at(const Edge& edge) const {
    auto it = calibrations.find(edge);
    if (it == calibrations.end()) fail(errc::domain_mismatch, "edge has no calibration");
    return it->second;
  }

  bool operator==(const CalibratedHypergraph& o) const {
    return hypergraph == o.hypergraph && calibrations == o.calibrations;
  }
};

/**
 * Calibration family of the pushed hypergraph: each image edge receives the
 * M^{A^Y}-sum of the restricted push-forwards over its preimage edges.
 */
inline std::map<Edge, Calibration> hgcal_pushforward(const OrdinalMap& f,
                                                     const CalibratedHypergraph& ch) {
  if (ch.hypergraph.vertex_count != f.source_len())
    fail(errc::shape_mismatch, "hypergraph grade disagrees with map source");
  std::map<Edge, Calibration> out;
  for (const auto& [x, cal] : ch.calibrations) {
    Calibration pushed = cal_pushforward(restrict_map(f, x), cal);
    auto [it, inserted] = out.emplace(pushed.domain, pushed);
    if (!inserted) it->second = cal_add(it->second, pushed);
  }
  return out;
}

/** Morphism action on calibrated hypergraphs. */
inline CalibratedHypergraph gc_map(const OrdinalMap& f, const CalibratedHypergraph& ch) {
  return CalibratedHypergraph::make(hg_map(f, ch.hypergraph), hgcal_pushforward(f, ch));
}

namespace detail {

inline Calibration shift_calibration(const Calibration& cal, std::uint32_t offset) {
  std::vector<std::uint32_t> domain;
  domain.reserve(cal.domain.size());
  for (std::uint32_t r : cal.domain) domain.push_back(r + offset);
  return Calibration{cal.exponent_monoid, cal.value_monoid, std::move(domain), cal.entries};
}

}  // namespace detail

/**
 * Monoidal product of calibration families: left edges keep their
 * calibrations, right edges carry theirs transported along the shift
 * bijection, which leaves the entry table untouched.
 */
inline CalibratedHypergraph gc_join(const CalibratedHypergraph& a, const CalibratedHypergraph& b) {
  if (!a.calibrations.empty() && !b.calibrations.empty()) {
    const Calibration& ca = a.calibrations.begin()->second;
    const Calibration& cb = b.calibrations.begin()->second;
    if (!(ca.exponent_monoid == cb.exponent_monoid) || !(ca.value_monoid == cb.value_monoid))
      fail(errc::monoid_mismatch, "joined calibrations disagree on their monoids");
  }
  Hypergraph joined = hg_join(a.hypergraph, b.hypergraph);
  std::map<Edge, Calibration> cals = a.calibrations;
  for (const auto& [edge, cal] : b.calibrations) {
    Calibration shifted = detail::shift_calibration(cal, a.hypergraph.vertex_count);
    cals.emplace(shifted.domain, std::move(shifted));
  }
  return CalibratedHypergraph::make(std::move(joined), std::move(cals));
}

/** Same product, restricted to the calibration families themselves. */
inline std::map<Edge, Calibration> cal_join(const CalibratedHypergraph& a,
                                            const CalibratedHypergraph& b) {
  return gc_join(a, b).calibrations;
}

/** Projection onto the underlying hypergraph. */
inline Hypergraph proj_c(const CalibratedHypergraph& ch) { return ch.hypergraph; }

}  // namespace hypermonad
