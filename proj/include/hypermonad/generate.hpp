#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypermonad/calibrated.hpp"
#include "hypermonad/cdit.hpp"
#include "hypermonad/error.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/hypergraph.hpp"
#include "hypermonad/state.hpp"
#include "hypermonad/weighted.hpp"

namespace hypermonad {

/** Desk-scale caps for randomized inputs. */
struct GenBounds {
  std::uint32_t max_grade = 3;
  std::uint32_t max_edges = 4;
  std::uint32_t max_edge_size = 3;
  std::uint32_t max_monoid = 4;
  std::uint32_t max_support = 4;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/**
 * Engine for one case: mixing the seed with the case index makes the
 * stream splittable, so a parallel sweep draws the same inputs as a
 * serial one.
 */
inline std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t case_index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(case_index + 1)));
}

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline OrdinalMap gen_ordinal_map(std::mt19937_64& rng, std::uint32_t source,
                                  std::uint32_t target) {
  if (target == 0 && source > 0) fail(errc::out_of_range, "no maps into [0]");
  std::vector<std::uint32_t> values(source);
  for (std::uint32_t& v : values) v = std::uint32_t(pick(rng, 0, target - 1));
  return OrdinalMap::make(source, target, std::move(values));
}

inline Edge gen_edge(std::mt19937_64& rng, std::uint32_t vertices, std::uint32_t max_size) {
  std::uint32_t size = std::uint32_t(pick(rng, 1, std::min(vertices, max_size)));
  std::vector<std::uint32_t> pool(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) pool[v] = v;
  for (std::uint32_t k = 0; k < size; ++k)
    std::swap(pool[k], pool[pick(rng, k, vertices - 1)]);
  pool.resize(size);
  return make_edge(std::move(pool));
}

inline Hypergraph gen_hypergraph(std::mt19937_64& rng, std::uint32_t vertices,
                                 const GenBounds& b) {
  Hypergraph h;
  h.vertex_count = vertices;
  if (vertices == 0) return h;
  std::uint32_t edges = std::uint32_t(pick(rng, 0, b.max_edges));
  for (std::uint32_t k = 0; k < edges; ++k) h.edges.insert(gen_edge(rng, vertices, b.max_edge_size));
  return h;
}

inline Monoid gen_cyclic_monoid(std::mt19937_64& rng, const GenBounds& b) {
  std::uint32_t size = std::uint32_t(pick(rng, 1, b.max_monoid));
  std::uint32_t index = std::uint32_t(pick(rng, 0, size - 1));
  return Monoid::cyclic(index, size - index);
}

inline Calibration gen_calibration(std::mt19937_64& rng, const Monoid& a, const Monoid& m,
                                   const Edge& edge, std::uint32_t max_support) {
  Calibration cal = Calibration::zero(a, m, edge);
  if (m.size() < 2) return cal;
  std::uint32_t support = std::uint32_t(pick(rng, 0, max_support));
  for (std::uint32_t k = 0; k < support; ++k) {
    std::vector<std::uint64_t> w(edge.size());
    for (std::uint64_t& x : w) x = pick(rng, 0, a.size() - 1);
    cal.accumulate(w, pick(rng, 1, m.size() - 1));
  }
  return cal;
}

inline CalibratedHypergraph gen_calibrated(std::mt19937_64& rng, std::uint32_t vertices,
                                           const Monoid& a, const Monoid& m, const GenBounds& b) {
  Hypergraph h = gen_hypergraph(rng, vertices, b);
  std::map<Edge, Calibration> cals;
  for (const Edge& e : h.edges) cals.emplace(e, gen_calibration(rng, a, m, e, b.max_support));
  return CalibratedHypergraph::make(std::move(h), std::move(cals));
}

inline WeightedHypergraph gen_weighted(std::mt19937_64& rng, std::uint32_t vertices,
                                       const Monoid& m, const GenBounds& b) {
  Hypergraph h = gen_hypergraph(rng, vertices, b);
  std::map<Edge, std::uint64_t> weights;
  for (const Edge& e : h.edges) weights.emplace(e, pick(rng, 0, m.size() - 1));
  return WeightedHypergraph::make(std::move(h), m, std::move(weights));
}

/** Calibrated hypergraph whose calibrations feed the state construction. */
inline CalibratedHypergraph gen_ring_calibrated(std::mt19937_64& rng, const GaloisRing& ring,
                                                std::uint32_t vertices, const GenBounds& b) {
  return gen_calibrated(rng, vertices, ring.cyclicity_monoid(), Monoid::cyclic(0, ring.char_mod()),
                        b);
}

inline WeightedHypergraph gen_ring_weighted(std::mt19937_64& rng, const GaloisRing& ring,
                                            std::uint32_t vertices, const GenBounds& b) {
  return gen_weighted(rng, vertices, Monoid::cyclic(0, ring.char_mod()), b);
}

inline CditConfig gen_cdit(std::mt19937_64& rng, const GaloisRing& ring, std::uint32_t grade) {
  std::vector<RingElement> entries(grade);
  for (RingElement& e : entries) e = ring.element(std::uint32_t(pick(rng, 0, ring.q() - 1)));
  return CditConfig::make(ring, std::move(entries));
}

/** Dense random state with unit norm. */
inline StateVector gen_state(std::mt19937_64& rng, const GaloisRing& ring, std::uint32_t grade) {
  StateVector psi = StateVector::zero(ring, grade);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (Amplitude& z : psi.amplitudes) z = Amplitude(gauss(rng), gauss(rng));
  double n = norm(psi);
  if (n > 0)
    for (Amplitude& z : psi.amplitudes) z /= n;
  return psi;
}

}  // namespace hypermonad
