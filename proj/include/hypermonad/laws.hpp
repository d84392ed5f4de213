#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypermonad/generate.hpp"
#include "hypermonad/hypergraph_state.hpp"
#include "hypermonad/serialize.hpp"

namespace hypermonad {

/**
 * Outcome of one law over one input family. Witnesses carry the full
 * serialized inputs; only the first few are kept, all are counted.
 */
struct CheckReport {
  std::string law;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  double max_deviation = 0.0;
  bool exhaustive = false;
  std::vector<Json> failures;

  bool passed() const { return failure_count == 0; }

  void record_failure(Json witness) {
    ++failure_count;
    if (failures.size() < 8) failures.push_back(std::move(witness));
  }
};

inline Json to_json(const CheckReport& r) {
  return Json{{"law", r.law},           {"cases", r.cases},
              {"failures", r.failures}, {"failure_count", r.failure_count},
              {"max_deviation", r.max_deviation}, {"exhaustive", r.exhaustive},
              {"passed", r.passed()}};
}

enum class MonadTag { hypergraph, calibrated, weighted, configuration, state };

inline std::string monad_name(MonadTag t) {
  switch (t) {
    case MonadTag::hypergraph: return "hypergraph";
    case MonadTag::calibrated: return "calibrated";
    case MonadTag::weighted: return "weighted";
    case MonadTag::configuration: return "configuration";
    case MonadTag::state: return "state";
  }
  return "?";
}

/** Shared knobs for every law run; seeds make reruns identical. */
struct LawConfig {
  std::uint32_t max_grade = 2;
  std::uint64_t cap = 100000;  // switch to sampling above this family size
  std::uint64_t cases = 300;   // samples per non-exhaustive grade bucket
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  Monoid exponent_monoid = Monoid::cyclic(0, 3);
  Monoid value_monoid = Monoid::cyclic(0, 3);
  GaloisRing ring = GaloisRing::make(2, 1, 1);
  GenBounds gen;
};

// ---- exhaustive enumerations -------------------------------------------------

inline std::optional<std::vector<Hypergraph>> enumerate_hypergraphs(std::uint32_t l,
                                                                    std::uint64_t cap) {
  if (l >= 6) return std::nullopt;
  std::vector<Edge> all_edges;
  for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
    Edge e;
    for (std::uint32_t v = 0; v < l; ++v)
      if (mask & (1u << v)) e.push_back(v);
    all_edges.push_back(std::move(e));
  }
  if (all_edges.size() >= 63 || (std::uint64_t(1) << all_edges.size()) > cap) return std::nullopt;
  std::vector<Hypergraph> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << all_edges.size()); ++pick) {
    Hypergraph h;
    h.vertex_count = l;
    for (std::size_t k = 0; k < all_edges.size(); ++k)
      if (pick & (std::uint64_t(1) << k)) h.edges.insert(all_edges[k]);
    out.push_back(std::move(h));
  }
  return out;
}

inline std::optional<std::vector<Calibration>> enumerate_calibrations(const Monoid& a,
                                                                      const Monoid& m,
                                                                      const Edge& edge,
                                                                      std::uint64_t cap) {
  std::uint64_t slots = 1;
  for (std::size_t k = 0; k < edge.size(); ++k) {
    if (slots > cap / a.size()) return std::nullopt;
    slots *= a.size();
  }
  std::uint64_t count = 1;
  for (std::uint64_t s = 0; s < slots; ++s) {
    if (count > cap / m.size()) return std::nullopt;
    count *= m.size();
  }
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(std::size_t(slots));
  for (std::uint64_t s = 0; s < slots; ++s)
    keys.push_back(exp_unindex(a, edge, s).values);
  std::vector<Calibration> out;
  out.reserve(std::size_t(count));
  std::vector<std::uint64_t> assign(std::size_t(slots), 0);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> entries;
    std::uint64_t t = c;
    for (std::size_t s = 0; s < slots; ++s) {
      std::uint64_t v = t % m.size();
      t /= m.size();
      if (v != 0) entries.emplace(keys[s], v);
    }
    out.push_back(Calibration::make(a, m, edge, std::move(entries)));
  }
  return out;
}

inline std::optional<std::vector<CalibratedHypergraph>> enumerate_calibrated(
    std::uint32_t l, const Monoid& a, const Monoid& m, std::uint64_t cap) {
  auto hgs = enumerate_hypergraphs(l, cap);
  if (!hgs) return std::nullopt;
  std::uint64_t total = 0;
  std::vector<CalibratedHypergraph> out;
  for (const Hypergraph& h : *hgs) {
    std::vector<std::vector<Calibration>> per_edge;
    std::uint64_t count = 1;
    bool ok = true;
    for (const Edge& e : h.edges) {
      auto cals = enumerate_calibrations(a, m, e, cap);
      if (!cals || count > cap / cals->size()) {
        ok = false;
        break;
      }
      count *= cals->size();
      per_edge.push_back(std::move(*cals));
    }
    if (!ok || total + count > cap) return std::nullopt;
    total += count;
    std::vector<std::size_t> idx(per_edge.size(), 0);
    for (std::uint64_t c = 0; c < count; ++c) {
      std::map<Edge, Calibration> cals;
      std::size_t k = 0;
      for (const Edge& e : h.edges) {
        cals.emplace(e, per_edge[k][idx[k]]);
        ++k;
      }
      out.push_back(CalibratedHypergraph::make(h, std::move(cals)));
      for (std::size_t j = idx.size(); j-- > 0;) {
        if (++idx[j] < per_edge[j].size()) break;
        idx[j] = 0;
      }
    }
  }
  return out;
}

inline std::optional<std::vector<WeightedHypergraph>> enumerate_weighted(std::uint32_t l,
                                                                         const Monoid& m,
                                                                         std::uint64_t cap) {
  auto hgs = enumerate_hypergraphs(l, cap);
  if (!hgs) return std::nullopt;
  std::vector<WeightedHypergraph> out;
  std::uint64_t total = 0;
  for (const Hypergraph& h : *hgs) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < h.edges.size(); ++k) {
      if (count > cap / m.size()) return std::nullopt;
      count *= m.size();
    }
    if (total + count > cap) return std::nullopt;
    total += count;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::map<Edge, std::uint64_t> weights;
      std::uint64_t t = c;
      for (const Edge& e : h.edges) {
        weights.emplace(e, t % m.size());
        t /= m.size();
      }
      out.push_back(WeightedHypergraph::make(h, m, std::move(weights)));
    }
  }
  return out;
}

inline std::optional<std::vector<CditConfig>> enumerate_cdits(const GaloisRing& ring,
                                                              std::uint32_t l, std::uint64_t cap) {
  std::uint64_t n = config_count(ring, l);
  if (n > cap) return std::nullopt;
  std::vector<CditConfig> out;
  out.reserve(std::size_t(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(config_from_index(ring, l, i));
  return out;
}

// ---- monad adapters ----------------------------------------------------------

struct HypergraphMonad {
  using Value = Hypergraph;
  LawConfig cfg;
  std::string name() const { return "hypergraph"; }
  Value map(const OrdinalMap& f, const Value& v) const { return hg_map(f, v); }
  Value join(const Value& x, const Value& y) const { return hg_join(x, y); }
  Value unit() const { return Hypergraph::unit(); }
  bool equal(const Value& x, const Value& y, double&) const { return x == y; }
  std::optional<std::vector<Value>> enumerate(std::uint32_t l) const {
    return enumerate_hypergraphs(l, cfg.cap);
  }
  Value random(std::mt19937_64& rng, std::uint32_t l) const {
    return gen_hypergraph(rng, l, cfg.gen);
  }
  Json serialize(const Value& v) const { return to_json(v); }
};

struct CalibratedMonad {
  using Value = CalibratedHypergraph;
  LawConfig cfg;
  std::string name() const { return "calibrated"; }
  Value map(const OrdinalMap& f, const Value& v) const { return gc_map(f, v); }
  Value join(const Value& x, const Value& y) const { return gc_join(x, y); }
  Value unit() const { return CalibratedHypergraph::unit(); }
  bool equal(const Value& x, const Value& y, double&) const { return x == y; }
  std::optional<std::vector<Value>> enumerate(std::uint32_t l) const {
    return enumerate_calibrated(l, cfg.exponent_monoid, cfg.value_monoid, cfg.cap);
  }
  Value random(std::mt19937_64& rng, std::uint32_t l) const {
    return gen_calibrated(rng, l, cfg.exponent_monoid, cfg.value_monoid, cfg.gen);
  }
  Json serialize(const Value& v) const { return to_json(v); }
};

struct WeightedMonad {
  using Value = WeightedHypergraph;
  LawConfig cfg;
  std::string name() const { return "weighted"; }
  Value map(const OrdinalMap& f, const Value& v) const { return gw_map(f, v); }
  Value join(const Value& x, const Value& y) const { return gw_join(x, y); }
  Value unit() const { return WeightedHypergraph::unit(cfg.value_monoid); }
  bool equal(const Value& x, const Value& y, double&) const { return x == y; }
  std::optional<std::vector<Value>> enumerate(std::uint32_t l) const {
    return enumerate_weighted(l, cfg.value_monoid, cfg.cap);
  }
  Value random(std::mt19937_64& rng, std::uint32_t l) const {
    return gen_weighted(rng, l, cfg.value_monoid, cfg.gen);
  }
  Json serialize(const Value& v) const { return to_json(v); }
};

struct ConfigurationMonad {
  using Value = CditConfig;
  LawConfig cfg;
  std::string name() const { return "configuration"; }
  Value map(const OrdinalMap& f, const Value& v) const { return e_map(f, v); }
  Value join(const Value& x, const Value& y) const { return cdit_join(x, y); }
  Value unit() const { return CditConfig::unit(cfg.ring); }
  bool equal(const Value& x, const Value& y, double&) const { return x == y; }
  std::optional<std::vector<Value>> enumerate(std::uint32_t l) const {
    return enumerate_cdits(cfg.ring, l, cfg.cap);
  }
  Value random(std::mt19937_64& rng, std::uint32_t l) const {
    return gen_cdit(rng, cfg.ring, l);
  }
  Json serialize(const Value& v) const { return to_json(v); }
};

struct StateMonad {
  using Value = StateVector;
  LawConfig cfg;
  std::string name() const { return "state"; }
  Value map(const OrdinalMap& f, const Value& v) const { return apply_hEf(f, v); }
  Value join(const Value& x, const Value& y) const { return tensor_states(x, y); }
  Value unit() const { return zero_basis_state(cfg.ring, 0); }
  bool equal(const Value& x, const Value& y, double& dev) const {
    dev = max_abs_diff(x, y);
    return dev <= cfg.tolerance;
  }
  std::optional<std::vector<Value>> enumerate(std::uint32_t l) const {
    auto cdits = enumerate_cdits(cfg.ring, l, cfg.cap);
    if (!cdits) return std::nullopt;
    std::vector<Value> out;
    out.reserve(cdits->size());
    for (const CditConfig& x : *cdits) out.push_back(basis_state(x));
    return out;
  }
  Value random(std::mt19937_64& rng, std::uint32_t l) const {
    return gen_state(rng, cfg.ring, l);
  }
  Json serialize(const Value& v) const { return to_json(v); }
};

// ---- generic law drivers -------------------------------------------------------

namespace detail {

inline std::uint64_t bucket_key(std::uint64_t law, std::uint64_t a, std::uint64_t b,
                                std::uint64_t c) {
  return splitmix64(law * 1000003 + a * 10007 + b * 101 + c);
}

inline bool fits_cap(std::uint64_t have, std::uint64_t more, std::uint64_t cap) {
  return more != 0 && have <= cap / more;
}

/** All maps [l] -> [p]; empty when p = 0 < l. */
inline std::vector<OrdinalMap> enumerate_ordinal_maps(std::uint32_t l, std::uint32_t p) {
  std::vector<OrdinalMap> out;
  if (p == 0) {
    if (l == 0) out.push_back(OrdinalMap::make(0, 0, {}));
    return out;
  }
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < l; ++k) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> values(l);
    std::uint64_t t = c;
    for (std::uint32_t k = 0; k < l; ++k) {
      values[k] = std::uint32_t(t % p);
      t /= p;
    }
    out.push_back(OrdinalMap::make(l, p, std::move(values)));
  }
  return out;
}

}  // namespace detail

/** join associativity: (x . y) . z = x . (y . z) over all grade triples. */
template <typename M>
CheckReport law_join_assoc(const M& mon, const LawConfig& cfg) {
  CheckReport report;
  report.law = mon.name() + "/join-associativity";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l)
    for (std::uint32_t m = 0; m <= cfg.max_grade; ++m)
      for (std::uint32_t n = 0; n <= cfg.max_grade; ++n) {
        auto check = [&](const auto& x, const auto& y, const auto& z) {
          double dev = 0.0;
          bool ok = mon.equal(mon.join(mon.join(x, y), z), mon.join(x, mon.join(y, z)), dev);
          report.max_deviation = std::max(report.max_deviation, dev);
          ++report.cases;
          if (!ok)
            report.record_failure(Json{{"law", report.law},
                                       {"grades", {l, m, n}},
                                       {"inputs", {mon.serialize(x), mon.serialize(y),
                                                   mon.serialize(z)}}});
        };
        auto el = mon.enumerate(l), em = mon.enumerate(m), en = mon.enumerate(n);
        bool exhaustive = el && em && en &&
                          detail::fits_cap(el->size() * em->size(), en->size(), cfg.cap) &&
                          detail::fits_cap(el->size(), em->size(), cfg.cap);
        if (exhaustive) {
          for (const auto& x : *el)
            for (const auto& y : *em)
              for (const auto& z : *en) check(x, y, z);
        } else {
          report.exhaustive = false;
          std::uint64_t bucket = detail::bucket_key(1, l, m, n);
          for (std::uint64_t i = 0; i < cfg.cases; ++i) {
            auto rng = case_rng(cfg.seed ^ bucket, i);
            auto x = mon.random(rng, l);
            auto y = mon.random(rng, m);
            auto z = mon.random(rng, n);
            check(x, y, z);
          }
        }
      }
  return report;
}

/** join unit: x . unit = unit . x = x at every grade. */
template <typename M>
CheckReport law_join_unit(const M& mon, const LawConfig& cfg) {
  CheckReport report;
  report.law = mon.name() + "/join-unit";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l) {
    auto check = [&](const auto& x) {
      double d1 = 0.0, d2 = 0.0;
      bool ok = mon.equal(mon.join(x, mon.unit()), x, d1) &&
                mon.equal(mon.join(mon.unit(), x), x, d2);
      report.max_deviation = std::max({report.max_deviation, d1, d2});
      ++report.cases;
      if (!ok)
        report.record_failure(
            Json{{"law", report.law}, {"grades", {l}}, {"inputs", {mon.serialize(x)}}});
    };
    auto el = mon.enumerate(l);
    if (el && el->size() <= cfg.cap) {
      for (const auto& x : *el) check(x);
    } else {
      report.exhaustive = false;
      std::uint64_t bucket = detail::bucket_key(2, l, 0, 0);
      for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        auto rng = case_rng(cfg.seed ^ bucket, i);
        check(mon.random(rng, l));
      }
    }
  }
  return report;
}

/** action/join compatibility: (f . g) applied to x . y splits blockwise. */
template <typename M>
CheckReport law_map_join_compat(const M& mon, const LawConfig& cfg) {
  CheckReport report;
  report.law = mon.name() + "/map-join-compatibility";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l)
    for (std::uint32_t p = 0; p <= cfg.max_grade; ++p)
      for (std::uint32_t m = 0; m <= cfg.max_grade; ++m)
        for (std::uint32_t n = 0; n <= cfg.max_grade; ++n) {
          auto fs = detail::enumerate_ordinal_maps(l, p);
          auto gs = detail::enumerate_ordinal_maps(m, n);
          if (fs.empty() || gs.empty()) continue;
          auto check = [&](const OrdinalMap& f, const OrdinalMap& g, const auto& x,
                           const auto& y) {
            double dev = 0.0;
            bool ok = mon.equal(mon.map(tensor(f, g), mon.join(x, y)),
                                mon.join(mon.map(f, x), mon.map(g, y)), dev);
            report.max_deviation = std::max(report.max_deviation, dev);
            ++report.cases;
            if (!ok)
              report.record_failure(Json{{"law", report.law},
                                         {"maps", {to_json(f), to_json(g)}},
                                         {"inputs", {mon.serialize(x), mon.serialize(y)}}});
          };
          auto el = mon.enumerate(l), em = mon.enumerate(m);
          bool exhaustive =
              el && em && detail::fits_cap(fs.size() * gs.size(), el->size(), cfg.cap) &&
              detail::fits_cap(fs.size() * gs.size() * el->size(), em->size(), cfg.cap);
          if (exhaustive) {
            for (const auto& f : fs)
              for (const auto& g : gs)
                for (const auto& x : *el)
                  for (const auto& y : *em) check(f, g, x, y);
          } else {
            report.exhaustive = false;
            std::uint64_t bucket = detail::bucket_key(3, l * 16 + p, m * 16 + n, 0);
            for (std::uint64_t i = 0; i < cfg.cases; ++i) {
              auto rng = case_rng(cfg.seed ^ bucket, i);
              OrdinalMap f =
                  p == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, l, p);
              OrdinalMap g =
                  n == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, m, n);
              auto x = mon.random(rng, l);
              auto y = mon.random(rng, m);
              check(f, g, x, y);
            }
          }
        }
  return report;
}

/** push-forward functoriality: composite maps act as composed actions. */
template <typename M>
CheckReport law_functor_compose(const M& mon, const LawConfig& cfg) {
  CheckReport report;
  report.law = mon.name() + "/pushforward-composition";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l)
    for (std::uint32_t m = 0; m <= cfg.max_grade; ++m)
      for (std::uint32_t n = 0; n <= cfg.max_grade; ++n) {
        auto fs = detail::enumerate_ordinal_maps(l, m);
        auto gs = detail::enumerate_ordinal_maps(m, n);
        if (fs.empty() || gs.empty()) continue;
        auto check = [&](const OrdinalMap& f, const OrdinalMap& g, const auto& x) {
          double dev = 0.0;
          bool ok = mon.equal(mon.map(compose(g, f), x), mon.map(g, mon.map(f, x)), dev);
          report.max_deviation = std::max(report.max_deviation, dev);
          ++report.cases;
          if (!ok)
            report.record_failure(Json{{"law", report.law},
                                       {"maps", {to_json(f), to_json(g)}},
                                       {"inputs", {mon.serialize(x)}}});
        };
        auto el = mon.enumerate(l);
        bool exhaustive =
            el && detail::fits_cap(fs.size() * gs.size(), el->size(), cfg.cap);
        if (exhaustive) {
          for (const auto& f : fs)
            for (const auto& g : gs)
              for (const auto& x : *el) check(f, g, x);
        } else {
          report.exhaustive = false;
          std::uint64_t bucket = detail::bucket_key(4, l, m, n);
          for (std::uint64_t i = 0; i < cfg.cases; ++i) {
            auto rng = case_rng(cfg.seed ^ bucket, i);
            OrdinalMap f = m == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, l, m);
            OrdinalMap g = n == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, m, n);
            check(f, g, mon.random(rng, l));
          }
        }
      }
  return report;
}

/** identity action: the identity map leaves every value unchanged. */
template <typename M>
CheckReport law_functor_identity(const M& mon, const LawConfig& cfg) {
  CheckReport report;
  report.law = mon.name() + "/pushforward-identity";
  report.exhaustive = true;
  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l) {
    auto check = [&](const auto& x) {
      double dev = 0.0;
      bool ok = mon.equal(mon.map(OrdinalMap::identity(l), x), x, dev);
      report.max_deviation = std::max(report.max_deviation, dev);
      ++report.cases;
      if (!ok)
        report.record_failure(
            Json{{"law", report.law}, {"grades", {l}}, {"inputs", {mon.serialize(x)}}});
    };
    auto el = mon.enumerate(l);
    if (el && el->size() <= cfg.cap) {
      for (const auto& x : *el) check(x);
    } else {
      report.exhaustive = false;
      std::uint64_t bucket = detail::bucket_key(5, l, 0, 0);
      for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        auto rng = case_rng(cfg.seed ^ bucket, i);
        check(mon.random(rng, l));
      }
    }
  }
  return report;
}

template <typename M>
std::vector<CheckReport> run_monad_laws(const M& mon, const LawConfig& cfg) {
  return {law_join_assoc(mon, cfg), law_join_unit(mon, cfg), law_map_join_compat(mon, cfg),
          law_functor_compose(mon, cfg), law_functor_identity(mon, cfg)};
}

inline std::vector<CheckReport> check_monad_laws(MonadTag tag, const LawConfig& cfg) {
  switch (tag) {
    case MonadTag::hypergraph: return run_monad_laws(HypergraphMonad{cfg}, cfg);
    case MonadTag::calibrated: return run_monad_laws(CalibratedMonad{cfg}, cfg);
    case MonadTag::weighted: return run_monad_laws(WeightedMonad{cfg}, cfg);
    case MonadTag::configuration: return run_monad_laws(ConfigurationMonad{cfg}, cfg);
    case MonadTag::state: return run_monad_laws(StateMonad{cfg}, cfg);
  }
  return {};
}

// ---- morphisms between monads ---------------------------------------------------

/**
 * The three morphism laws for a map F between graded monads: it commutes
 * with the ordinal action, splits over joins, and preserves the unit.
 */
template <typename SM, typename TM, typename Fn>
std::vector<CheckReport> run_morphism_laws(const std::string& label, const SM& src, const TM& dst,
                                           Fn&& morph, const LawConfig& cfg) {
  CheckReport naturality, join_law, unit_law;
  naturality.law = label + "/action-compatibility";
  join_law.law = label + "/join-compatibility";
  unit_law.law = label + "/unit-compatibility";
  naturality.exhaustive = join_law.exhaustive = false;
  unit_law.exhaustive = true;

  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l)
    for (std::uint32_t m = 0; m <= cfg.max_grade; ++m) {
      if (m == 0 && l > 0) continue;
      std::uint64_t bucket = detail::bucket_key(6, l, m, 0);
      for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        auto rng = case_rng(cfg.seed ^ bucket, i);
        OrdinalMap f = m == 0 ? OrdinalMap::make(0, 0, {}) : gen_ordinal_map(rng, l, m);
        auto x = src.random(rng, l);
        double dev = 0.0;
        bool ok = dst.equal(morph(src.map(f, x)), dst.map(f, morph(x)), dev);
        naturality.max_deviation = std::max(naturality.max_deviation, dev);
        ++naturality.cases;
        if (!ok)
          naturality.record_failure(Json{{"law", naturality.law},
                                         {"map", to_json(f)},
                                         {"inputs", {src.serialize(x)}}});
      }
    }

  for (std::uint32_t l = 0; l <= cfg.max_grade; ++l)
    for (std::uint32_t m = 0; m <= cfg.max_grade; ++m) {
      std::uint64_t bucket = detail::bucket_key(7, l, m, 0);
      for (std::uint64_t i = 0; i < cfg.cases; ++i) {
        auto rng = case_rng(cfg.seed ^ bucket, i);
        auto x = src.random(rng, l);
        auto y = src.random(rng, m);
        double dev = 0.0;
        bool ok = dst.equal(morph(src.join(x, y)), dst.join(morph(x), morph(y)), dev);
        join_law.max_deviation = std::max(join_law.max_deviation, dev);
        ++join_law.cases;
        if (!ok)
          join_law.record_failure(Json{{"law", join_law.law},
                                       {"inputs", {src.serialize(x), src.serialize(y)}}});
      }
    }

  {
    double dev = 0.0;
    bool ok = dst.equal(morph(src.unit()), dst.unit(), dev);
    unit_law.max_deviation = dev;
    unit_law.cases = 1;
    if (!ok) unit_law.record_failure(Json{{"law", unit_law.law}});
  }

  return {naturality, join_law, unit_law};
}

enum class MorphismTag { weight_of_calibration, calibrated_projection, weighted_projection };

inline std::vector<CheckReport> check_morphism_laws(MorphismTag tag, const LawConfig& cfg) {
  CalibratedMonad gc{cfg};
  WeightedMonad gw{cfg};
  HypergraphMonad g{cfg};
  switch (tag) {
    case MorphismTag::weight_of_calibration:
      return run_morphism_laws(
          "weight-of-calibration", gc, gw,
          [&](const CalibratedHypergraph& ch) { return mu(ch, cfg.value_monoid); }, cfg);
    case MorphismTag::calibrated_projection:
      return run_morphism_laws(
          "calibrated-projection", gc, g,
          [](const CalibratedHypergraph& ch) { return proj_c(ch); }, cfg);
    case MorphismTag::weighted_projection:
      return run_morphism_laws(
          "weighted-projection", gw, g,
          [](const WeightedHypergraph& wh) { return proj_w(wh); }, cfg);
  }
  return {};
}

// ---- vertex-level push-forward functoriality ------------------------------------

namespace detail {

inline std::vector<std::uint32_t> gen_vertex_set(std::mt19937_64& rng, std::uint32_t universe,
                                                 std::uint32_t max_size) {
  std::uint32_t size = std::uint32_t(pick(rng, 1, max_size));
  std::vector<std::uint32_t> pool(universe);
  for (std::uint32_t v = 0; v < universe; ++v) pool[v] = v;
  for (std::uint32_t k = 0; k < size && k < universe; ++k)
    std::swap(pool[k], pool[pick(rng, k, universe - 1)]);
  pool.resize(std::min(size, universe));
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline VertexMap gen_vertex_map(std::mt19937_64& rng, std::vector<std::uint32_t> domain,
                                std::vector<std::uint32_t> codomain) {
  std::vector<std::uint32_t> values(domain.size());
  for (std::uint32_t& v : values) v = codomain[pick(rng, 0, codomain.size() - 1)];
  return VertexMap::make(std::move(domain), std::move(codomain), std::move(values));
}

}  // namespace detail

/** (g o f) pushed = g pushed after f pushed, for exponents and calibrations. */
inline std::vector<CheckReport> check_pushforward_functoriality(const LawConfig& cfg) {
  CheckReport exp_comp, exp_id, cal_comp, cal_id;
  exp_comp.law = "exponent/pushforward-composition";
  exp_id.law = "exponent/pushforward-identity";
  cal_comp.law = "calibration/pushforward-composition";
  cal_id.law = "calibration/pushforward-identity";

  const Monoid& a = cfg.exponent_monoid;
  const Monoid& m = cfg.value_monoid;
  for (std::uint64_t i = 0; i < cfg.cases; ++i) {
    auto rng = case_rng(cfg.seed ^ detail::bucket_key(8, 0, 0, 0), i);
    std::uint32_t universe = 9;
    auto x = detail::gen_vertex_set(rng, universe, 4);
    auto y = detail::gen_vertex_set(rng, universe, 4);
    auto z = detail::gen_vertex_set(rng, universe, 4);
    VertexMap f = detail::gen_vertex_map(rng, x, y);
    VertexMap g = detail::gen_vertex_map(rng, y, z);
    VertexMap gf = compose(g, f);
    VertexMap idx = VertexMap::make(x, x, x);

    std::vector<std::uint64_t> values(x.size());
    for (std::uint64_t& v : values) v = pick(rng, 0, a.size() - 1);
    ExponentFunction w = ExponentFunction::make(a, x, values);
    ++exp_comp.cases;
    if (!(exp_pushforward(gf, a, w) ==
          exp_pushforward(g, a, exp_pushforward(f, a, w))))
      exp_comp.record_failure(Json{{"law", exp_comp.law},
                                   {"maps", {to_json(f), to_json(g)}},
                                   {"inputs", {to_json(w)}}});
    ++exp_id.cases;
    if (!(exp_pushforward(idx, a, w) == w))
      exp_id.record_failure(Json{{"law", exp_id.law}, {"inputs", {to_json(w)}}});

    Calibration cal = gen_calibration(rng, a, m, x, cfg.gen.max_support);
    ++cal_comp.cases;
    if (!(cal_pushforward(gf, cal) == cal_pushforward(g, cal_pushforward(f, cal))))
      cal_comp.record_failure(Json{{"law", cal_comp.law},
                                   {"maps", {to_json(f), to_json(g)}},
                                   {"inputs", {to_json(cal)}}});
    ++cal_id.cases;
    if (!(cal_pushforward(idx, cal) == cal))
      cal_id.record_failure(Json{{"law", cal_id.law}, {"inputs", {to_json(cal)}}});
  }
  return {exp_comp, exp_id, cal_comp, cal_id};
}

}  // namespace hypermonad
