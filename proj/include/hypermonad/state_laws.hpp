#pragma once

#include <string>
#include <vector>

#include "hypermonad/hypergraph_state.hpp"
#include "hypermonad/laws.hpp"

namespace hypermonad {

namespace detail {

inline std::string ring_label(const GaloisRing& ring) {
  return "p" + std::to_string(ring.p()) + "r" + std::to_string(ring.r()) + "d" +
         std::to_string(ring.d());
}

}  // namespace detail

/** Random maps and calibrated inputs; action before vs after state building. */
inline CheckReport check_state_covariance(const GaloisRing& ring, const LawConfig& cfg) {
  CheckReport report;
  report.law = "state-map/covariance/" + detail::ring_label(ring);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(10, 0, 0, 0), i);
    std::uint32_t l = std::uint32_t(pick(rng, 0, cfg.max_grade));
    std::uint32_t m = std::uint32_t(pick(rng, l > 0 ? 1 : 0, cfg.max_grade));
    OrdinalMap f = m == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, l, m);
    CalibratedHypergraph ch = gen_ring_calibrated(rng, ring, l, cfg.gen);
    LawWitness w = check_covariance(ring, f, ch, cfg.tolerance);
    report.max_deviation = std::max(report.max_deviation, w.deviation);
    ++report.cases;
    if (!w.passed)
      report.record_failure(Json{{"law", report.law},
                                 {"map", to_json(f)},
                                 {"input", to_json(ch)},
                                 {"deviation", w.deviation}});
  }
  return report;
}

/** Exhaustive integer identity: pushed phases equal phases of pulled-back configs. */
inline CheckReport check_state_phase_pullback(const GaloisRing& ring, const LawConfig& cfg) {
  CheckReport report;
  report.law = "state-map/phase-pullback/" + detail::ring_label(ring);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(11, 0, 0, 0), i);
    std::uint32_t l = std::uint32_t(pick(rng, 0, cfg.max_grade));
    std::uint32_t m = std::uint32_t(pick(rng, l > 0 ? 1 : 0, cfg.max_grade));
    OrdinalMap f = m == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, l, m);
    CalibratedHypergraph ch = gen_ring_calibrated(rng, ring, l, cfg.gen);
    ++report.cases;
    if (!check_phase_pullback(ring, f, ch))
      report.record_failure(Json{{"law", report.law}, {"map", to_json(f)}, {"input", to_json(ch)}});
  }
  return report;
}

/** States of joins against tensor products of states. */
inline CheckReport check_state_multiplicativity(const GaloisRing& ring, const LawConfig& cfg) {
  CheckReport report;
  report.law = "state-map/multiplicativity/" + detail::ring_label(ring);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(12, 0, 0, 0), i);
    std::uint32_t l = std::uint32_t(pick(rng, 0, cfg.max_grade));
    std::uint32_t m = std::uint32_t(pick(rng, 0, cfg.max_grade));
    CalibratedHypergraph a = gen_ring_calibrated(rng, ring, l, cfg.gen);
    CalibratedHypergraph b = gen_ring_calibrated(rng, ring, m, cfg.gen);
    LawWitness w = check_multiplicativity(ring, a, b, cfg.tolerance);
    report.max_deviation = std::max(report.max_deviation, w.deviation);
    ++report.cases;
    if (!w.passed)
      report.record_failure(Json{{"law", report.law},
                                 {"inputs", {to_json(a), to_json(b)}},
                                 {"deviation", w.deviation}});
  }
  return report;
}

/** The empty input builds the grade-zero scalar 1, exactly. */
inline CheckReport check_state_unit(const GaloisRing& ring, double tolerance) {
  CheckReport report;
  report.law = "state-map/unit/" + detail::ring_label(ring);
  LawWitness w = check_unit(ring, tolerance);
  report.cases = 1;
  report.max_deviation = w.deviation;
  report.exhaustive = true;
  if (!w.passed) report.record_failure(Json{{"law", report.law}, {"deviation", w.deviation}});
  return report;
}

/** Fourier transforms of built states have constant modulus q^{-l/2}. */
inline CheckReport check_state_flatness(const GaloisRing& ring, const LawConfig& cfg) {
  CheckReport report;
  report.law = "state-map/flat-fourier/" + detail::ring_label(ring);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(13, 0, 0, 0), i);
    std::uint32_t l = std::uint32_t(pick(rng, 0, cfg.max_grade));
    CalibratedHypergraph ch = gen_ring_calibrated(rng, ring, l, cfg.gen);
    LawWitness w = check_flat_fourier(build_state(ring, ch), cfg.tolerance);
    report.max_deviation = std::max(report.max_deviation, w.deviation);
    ++report.cases;
    if (!w.passed)
      report.record_failure(
          Json{{"law", report.law}, {"input", to_json(ch)}, {"deviation", w.deviation}});
  }
  return report;
}

/**
 * Weighted inputs lift to calibrations supported on the distinguished
 * exponent: same hypergraph, matching weight recovery, equal states.
 */
inline CheckReport check_weighted_agreement(const GaloisRing& ring, const LawConfig& cfg) {
  CheckReport report;
  report.law = "state-map/weighted-agreement/" + detail::ring_label(ring);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(14, 0, 0, 0), i);
    std::uint32_t l = std::uint32_t(pick(rng, 0, cfg.max_grade));
    WeightedHypergraph wh = gen_ring_weighted(rng, ring, l, cfg.gen);
    CalibratedHypergraph ch = weighted_to_calibrated(ring, wh);
    ++report.cases;
    bool structure_ok = ch.hypergraph == wh.hypergraph && mu(ch, wh.weight_monoid) == wh;
    double dev = max_abs_diff(build_state_weighted(ring, wh), build_state(ring, ch));
    report.max_deviation = std::max(report.max_deviation, dev);
    if (!structure_ok || dev > cfg.tolerance)
      report.record_failure(Json{{"law", report.law},
                                 {"input", to_json(wh)},
                                 {"structure_ok", structure_ok},
                                 {"deviation", dev}});
  }
  return report;
}

/** Exhaustive binary reduction over small calibrated inputs with sparse support. */
inline CheckReport check_qubit_reduction_exhaustive(std::uint32_t max_grade,
                                                    std::uint32_t max_support, double tolerance) {
  GaloisRing f2 = GaloisRing::make(2, 1, 1);
  CheckReport report;
  report.law = "qubit-reduction/exhaustive";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= max_grade; ++l) {
    auto family = enumerate_calibrated(l, f2.cyclicity_monoid(), phase_monoid(f2), 1u << 20);
    if (!family) fail(errc::bounds_too_large, "reduction family too large to enumerate");
    for (const CalibratedHypergraph& ch : *family) {
      bool sparse = true;
      for (const auto& [edge, cal] : ch.calibrations)
        if (cal.entries.size() > max_support) sparse = false;
      if (!sparse) continue;
      ++report.cases;
      auto found = qubit_reduction(f2, ch, tolerance);
      if (found)
        report.max_deviation = std::max(report.max_deviation, found->deviation);
      else
        report.record_failure(Json{{"law", report.law}, {"input", to_json(ch)}});
    }
  }
  return report;
}

/** Randomized binary reduction at a fixed grade. */
inline CheckReport check_qubit_reduction_random(std::uint32_t grade, const LawConfig& cfg) {
  GaloisRing f2 = GaloisRing::make(2, 1, 1);
  CheckReport report;
  report.law = "qubit-reduction/random-grade-" + std::to_string(grade);
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(15, grade, 0, 0), i);
    CalibratedHypergraph ch = gen_ring_calibrated(rng, f2, grade, cfg.gen);
    ++report.cases;
    auto found = qubit_reduction(f2, ch, cfg.tolerance);
    if (found)
      report.max_deviation = std::max(report.max_deviation, found->deviation);
    else
      report.record_failure(Json{{"law", report.law}, {"input", to_json(ch)}});
  }
  return report;
}

}  // namespace hypermonad
