#include <catch2/catch_amalgamated.hpp>

#include "hypermonad/hypermonad.hpp"
#include "support.hpp"

using namespace hypermonad;
using hmtest::error_code;

namespace {

LawConfig quick_config() {
  LawConfig cfg;
  cfg.cases = 40;
  cfg.gen.max_grade = 2;
  return cfg;
}

void require_all_pass(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    INFO(r.law << ": " << Json(r.failures).dump());
    REQUIRE(r.passed());
    REQUIRE(r.failures.empty());
    REQUIRE(r.cases > 0);
  }
}

/** Join that sneaks in a stray edge; associativity and units stop working. */
struct SpikedJoinMonad {
  using Value = Hypergraph;
  LawConfig cfg;
  std::string name() const { return "spiked-join"; }
  Value map(const OrdinalMap& f, const Value& v) const { return hg_map(f, v); }
  Value join(const Value& x, const Value& y) const {
    Hypergraph out = hg_join(x, y);
    if (out.vertex_count > 0) out.edges.insert(Edge{0});
    return out;
  }
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

}  // namespace

TEST_CASE("all five element families satisfy the monad laws") {
  LawConfig cfg = quick_config();
  for (MonadTag tag : {MonadTag::hypergraph, MonadTag::calibrated, MonadTag::weighted,
                       MonadTag::configuration, MonadTag::state})
    require_all_pass(check_monad_laws(tag, cfg));

  cfg.ring = GaloisRing::make(3, 1, 1);
  require_all_pass(check_monad_laws(MonadTag::configuration, cfg));
  require_all_pass(check_monad_laws(MonadTag::state, cfg));
}

TEST_CASE("structure morphisms respect action, join, and unit") {
  LawConfig cfg = quick_config();
  for (MorphismTag tag : {MorphismTag::weight_of_calibration, MorphismTag::calibrated_projection,
                          MorphismTag::weighted_projection})
    require_all_pass(check_morphism_laws(tag, cfg));
}

TEST_CASE("push-forwards compose and preserve identities") {
  require_all_pass(check_pushforward_functoriality(quick_config()));
}

TEST_CASE("small law pools run exhaustively, large ones fall back to sampling") {
  LawConfig cfg = quick_config();
  auto hg_reports = run_monad_laws(HypergraphMonad{cfg}, cfg);
  for (const CheckReport& r : hg_reports) REQUIRE(r.exhaustive);

  auto cal_reports = run_monad_laws(CalibratedMonad{cfg}, cfg);
  bool cal_sampled = false;
  for (const CheckReport& r : cal_reports) cal_sampled |= !r.exhaustive;
  REQUIRE(cal_sampled);
}

TEST_CASE("a deliberately spiked join is reported with replayable witnesses") {
  LawConfig cfg = quick_config();
  auto reports = run_monad_laws(SpikedJoinMonad{cfg}, cfg);
  bool any_failed = false;
  for (const CheckReport& r : reports) {
    REQUIRE(r.failures.empty() == r.passed());
    REQUIRE(r.failures.size() <= 8);
    if (!r.passed()) {
      any_failed = true;
      REQUIRE(r.failure_count >= r.failures.size());
      for (const Json& witness : r.failures) REQUIRE(witness.contains("law"));
    }
  }
  REQUIRE(any_failed);

  bool unit_failed = false;
  for (const CheckReport& r : reports)
    if (r.law.find("join-unit") != std::string::npos && !r.passed()) unit_failed = true;
  REQUIRE(unit_failed);
}

TEST_CASE("exhaustive enumerations have the predicted sizes") {
  REQUIRE(enumerate_hypergraphs(2, 100)->size() == 8);
  REQUIRE(enumerate_hypergraphs(0, 100)->size() == 1);
  REQUIRE(!enumerate_hypergraphs(5, 100).has_value());
  REQUIRE(enumerate_cdits(GaloisRing::make(2, 1, 1), 2, 100)->size() == 4);
  REQUIRE(enumerate_weighted(2, Monoid::cyclic(0, 3), 100)->size() == 64);
  REQUIRE(detail::enumerate_ordinal_maps(2, 3).size() == 9);
  REQUIRE(detail::enumerate_ordinal_maps(2, 0).empty());
  REQUIRE(detail::enumerate_ordinal_maps(0, 0).size() == 1);

  auto cals = enumerate_calibrations(Monoid::cyclic(0, 2), Monoid::cyclic(0, 3), {0, 1}, 1 << 20);
  REQUIRE(cals->size() == 81);
}

TEST_CASE("generators are deterministic in the seed and splittable by case") {
  auto rng_a = case_rng(7, 3);
  auto rng_b = case_rng(7, 3);
  LawConfig cfg;
  REQUIRE(to_json(gen_calibrated(rng_a, 2, cfg.exponent_monoid, cfg.value_monoid, cfg.gen)) ==
          to_json(gen_calibrated(rng_b, 2, cfg.exponent_monoid, cfg.value_monoid, cfg.gen)));

  auto rng_c = case_rng(7, 4);
  REQUIRE(to_json(gen_hypergraph(rng_a, 3, cfg.gen)) != to_json(gen_hypergraph(rng_c, 3, cfg.gen)));

  GaloisRing z4 = GaloisRing::make(2, 2, 1);
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = case_rng(9, i);
    CalibratedHypergraph ch = gen_ring_calibrated(rng, z4, 2, cfg.gen);
    for (const auto& [edge, cal] : ch.calibrations) {
      REQUIRE(cal.entries.size() <= cfg.gen.max_support);
      for (const auto& [w, v] : cal.entries) REQUIRE(v != 0);
    }
  }

  REQUIRE(error_code([] {
            auto rng = case_rng(0, 0);
            gen_ordinal_map(rng, 2, 0);
          }) == errc::out_of_range);
}
