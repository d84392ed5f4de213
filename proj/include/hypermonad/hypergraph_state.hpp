#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "hypermonad/calibrated.hpp"
#include "hypermonad/cdit.hpp"
#include "hypermonad/error.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/parallel.hpp"
#include "hypermonad/state.hpp"
#include "hypermonad/weighted.hpp"

namespace hypermonad {

/** The prime-subring residue monoid Z_{p^r} that phase values live in. */
inline Monoid phase_monoid(const GaloisRing& ring) { return Monoid::cyclic(0, ring.char_mod()); }

namespace detail {

inline void require_phase_monoids(const GaloisRing& ring, const Calibration& cal) {
  if (!(cal.exponent_monoid == ring.cyclicity_monoid()))
    fail(errc::monoid_mismatch, "calibration exponents do not live in the ring cyclicity monoid");
  if (!(cal.value_monoid == phase_monoid(ring)))
    fail(errc::monoid_mismatch, "calibration values do not live in the prime subring");
}

}  // namespace detail

/**
 * Phase of one configuration: over every edge and every supported exponent
 * tuple, the calibration value times the trace of the product of entry
 * powers, reduced in Z_{p^r}. Exponent components select the power of each
 * entry within its own cyclicity monoid, so the sum is exact integer work.
 */
inline std::uint32_t sigma_calibrated(const CalibratedHypergraph& ch, const CditConfig& x) {
  const GaloisRing& ring = x.ring;
  if (ch.hypergraph.vertex_count != x.grade())
    fail(errc::shape_mismatch, "hypergraph grade disagrees with configuration grade");
  std::uint64_t phase = 0;
  for (const auto& [edge, cal] : ch.calibrations) {
    detail::require_phase_monoids(ring, cal);
    for (const auto& [wvals, v] : cal.entries) {
      RingElement prod = ring.one();
      for (std::size_t k = 0; k < edge.size(); ++k) {
        ZExponent u = ring.z_decode(wvals[k]);
        prod = ring.mul(prod, ring.z_power(x.entries[edge[k]], u));
      }
      phase += v * ring.trace(prod) % ring.char_mod();
    }
  }
  return std::uint32_t(phase % ring.char_mod());
}

/** Weighted phase: each edge contributes its weight times tr of the plain entry product. */
inline std::uint32_t sigma_weighted(const WeightedHypergraph& wh, const CditConfig& x) {
  const GaloisRing& ring = x.ring;
  if (wh.hypergraph.vertex_count != x.grade())
    fail(errc::shape_mismatch, "hypergraph grade disagrees with configuration grade");
  if (!(wh.weight_monoid == phase_monoid(ring)))
    fail(errc::monoid_mismatch, "weights do not live in the prime subring");
  std::uint64_t phase = 0;
  for (const auto& [edge, w] : wh.weights) {
    RingElement prod = ring.one();
    for (std::uint32_t r : edge) prod = ring.mul(prod, x.entries[r]);
    phase += w * ring.trace(prod) % ring.char_mod();
  }
  return std::uint32_t(phase % ring.char_mod());
}

/** All phases at a grade, configuration rank order; rows are independent. */
struct StatePhaseTable {
  GaloisRing ring;
  std::uint32_t qudits = 0;
  std::vector<std::uint32_t> phases;
};

template <typename Sigma>
StatePhaseTable phase_table(const GaloisRing& ring, std::uint32_t qudits, Sigma&& sigma) {
  StatePhaseTable t{ring, qudits, {}};
  t.phases.resize(config_count(ring, qudits));
  parallel_for(t.phases.size(), [&](std::uint64_t i) {
    t.phases[i] = sigma(config_from_index(ring, qudits, i));
  });
  return t;
}

/**
 * State of a phase table: the uniform superposition picks up omega^{phase}
 * per configuration, then one inverse tensor-factorized Fourier pass maps
 * the phase vector back to the distinguished basis.
 */
inline StateVector state_of_phases(const StatePhaseTable& t) {
  StateVector psi = StateVector::zero(t.ring, t.qudits);
  const double scale = 1.0 / std::sqrt(double(psi.dim()));
  const double step = 2.0 * std::numbers::pi / double(t.ring.char_mod());
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    double angle = step * double(t.phases[i]);
    psi.amplitudes[i] = scale * Amplitude(std::cos(angle), std::sin(angle));
  }
  return fourier_apply(psi, /*inverse=*/true);
}

inline StateVector build_state(const GaloisRing& ring, const CalibratedHypergraph& ch) {
  std::uint32_t l = ch.hypergraph.vertex_count;
  StatePhaseTable t = phase_table(ring, l, [&](const CditConfig& x) {
    return sigma_calibrated(ch, x);
  });
  return state_of_phases(t);
}

inline StateVector build_state_weighted(const GaloisRing& ring, const WeightedHypergraph& wh) {
  std::uint32_t l = wh.hypergraph.vertex_count;
  StatePhaseTable t = phase_table(ring, l, [&](const CditConfig& x) {
    return sigma_weighted(wh, x);
  });
  return state_of_phases(t);
}

/**
 * Calibrated lift of a weighted hypergraph: every edge concentrates its
 * weight on the exponent tuple that is the distinguished one at each
 * vertex, so both phase functions agree configuration by configuration.
 */
inline CalibratedHypergraph weighted_to_calibrated(const GaloisRing& ring,
                                                   const WeightedHypergraph& wh) {
  if (!(wh.weight_monoid == phase_monoid(ring)))
    fail(errc::monoid_mismatch, "weights do not live in the prime subring");
  std::uint64_t one = ring.z_encode(ring.canonical_one_exponent());
  std::map<Edge, Calibration> cals;
  for (const auto& [edge, w] : wh.weights) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> entries;
    entries.emplace(std::vector<std::uint64_t>(edge.size(), one), w);
    cals.emplace(edge, Calibration::make(ring.cyclicity_monoid(), phase_monoid(ring), edge,
                                         std::move(entries)));
  }
  return CalibratedHypergraph::make(wh.hypergraph, std::move(cals));
}

/** One checked equation; deviation is the max amplitude difference seen. */
struct LawWitness {
  bool passed = true;
  double deviation = 0.0;
};

/** Configuration action before or after the state construction, compared. */
inline LawWitness check_covariance(const GaloisRing& ring, const OrdinalMap& f,
                                   const CalibratedHypergraph& ch, double tolerance) {
  StateVector lhs = apply_hEf(f, build_state(ring, ch));
  StateVector rhs = build_state(ring, gc_map(f, ch));
  double dev = max_abs_diff(lhs, rhs);
  return LawWitness{dev <= tolerance, dev};
}

/** Integer-exact form: the pushed phase at z equals the phase at z o f. */
inline bool check_phase_pullback(const GaloisRing& ring, const OrdinalMap& f,
                                 const CalibratedHypergraph& ch) {
  CalibratedHypergraph pushed = gc_map(f, ch);
  std::uint64_t n = config_count(ring, f.target_len());
  for (std::uint64_t i = 0; i < n; ++i) {
    CditConfig z = config_from_index(ring, f.target_len(), i);
    if (sigma_calibrated(pushed, z) != sigma_calibrated(ch, e_pullback(f, z))) return false;
  }
  return true;
}

/** State of a join against the tensor product of the factor states. */
inline LawWitness check_multiplicativity(const GaloisRing& ring, const CalibratedHypergraph& a,
                                         const CalibratedHypergraph& b, double tolerance) {
  StateVector lhs = build_state(ring, gc_join(a, b));
  StateVector rhs = tensor_states(build_state(ring, a), build_state(ring, b));
  double dev = max_abs_diff(lhs, rhs);
  return LawWitness{dev <= tolerance, dev};
}

/** The empty calibrated hypergraph must build the grade-zero scalar 1. */
inline LawWitness check_unit(const GaloisRing& ring, double tolerance) {
  StateVector psi = build_state(ring, CalibratedHypergraph::unit());
  double dev = std::abs(psi.amplitudes.at(0) - Amplitude(1.0));
  return LawWitness{psi.dim() == 1 && dev <= tolerance, dev};
}

/**
 * Every built state is flat in the Fourier-transformed basis: each
 * component of F_l psi has modulus q^{-l/2}.
 */
inline LawWitness check_flat_fourier(const StateVector& psi, double tolerance) {
  StateVector hat = fourier_apply(psi, /*inverse=*/false);
  double target = 1.0 / std::sqrt(double(psi.dim()));
  double dev = 0.0;
  for (const Amplitude& z : hat.amplitudes) dev = std::max(dev, std::abs(std::abs(z) - target));
  return LawWitness{dev <= tolerance, dev};
}

/** Result of the binary reduction search: a weighted match and its sign. */
struct QubitReduction {
  WeightedHypergraph weighted;
  int sign = 1;
  double deviation = 0.0;
};

/**
 * Over the two-element field, search every weight-one edge subset on the
 * same vertex count for a weighted hypergraph whose state matches the
 * calibrated one up to a global sign. Grades above 3 are refused; the
 * search space is the power set of the 2^l - 1 candidate edges.
 */
inline std::optional<QubitReduction> qubit_reduction(const GaloisRing& ring,
                                                     const CalibratedHypergraph& ch,
                                                     double tolerance) {
  if (ring.q() != 2 || ring.char_mod() != 2)
    fail(errc::ring_not_binary, "reduction is defined over the two-element field");
  std::uint32_t l = ch.hypergraph.vertex_count;
  if (l > 3) fail(errc::too_large, "reduction search supports at most grade 3");

  StateVector target = build_state(ring, ch);

  std::vector<Edge> candidates;
  for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
    Edge e;
    for (std::uint32_t v = 0; v < l; ++v)
      if (mask & (1u << v)) e.push_back(v);
    candidates.push_back(std::move(e));
  }

  Monoid m = phase_monoid(ring);
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << candidates.size()); ++pick) {
    std::vector<Edge> edges;
    std::map<Edge, std::uint64_t> weights;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (pick & (std::uint64_t(1) << k)) {
        edges.push_back(candidates[k]);
        weights.emplace(candidates[k], 1);
      }
    WeightedHypergraph wh =
        WeightedHypergraph::make(Hypergraph::make(l, edges), m, std::move(weights));
    StateVector cand = build_state_weighted(ring, wh);
    for (int sign : {+1, -1}) {
      double dev = 0.0;
      for (std::uint64_t i = 0; i < target.dim(); ++i)
        dev = std::max(dev,
                       std::abs(target.amplitudes[i] - double(sign) * cand.amplitudes[i]));
      if (dev <= tolerance) return QubitReduction{std::move(wh), sign, dev};
    }
  }
  return std::nullopt;
}

}  // namespace hypermonad
