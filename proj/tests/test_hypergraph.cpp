#include <catch2/catch_amalgamated.hpp>

#include "hypermonad/hypermonad.hpp"
#include "support.hpp"

using namespace hypermonad;
using hmtest::error_code;

namespace {

Calibration cal(const Monoid& a, const Monoid& m, std::vector<std::uint32_t> domain,
                std::map<std::vector<std::uint64_t>, std::uint64_t> entries) {
  return Calibration::make(a, m, std::move(domain), std::move(entries));
}

}  // namespace

TEST_CASE("edges are sorted nonempty duplicate-free vertex sets") {
  REQUIRE(make_edge({3, 0, 1}) == Edge{0, 1, 3});
  REQUIRE(error_code([] { make_edge({}); }) == errc::shape_mismatch);
  REQUIRE(error_code([] { make_edge({1, 1}); }) == errc::shape_mismatch);
  REQUIRE(error_code([] { Hypergraph::make(3, {{0, 3}}); }) == errc::out_of_range);
}

TEST_CASE("the morphism action takes edge images and collapses duplicates") {
  OrdinalMap f = OrdinalMap::make(5, 4, {0, 1, 3, 3, 1});
  Hypergraph h = Hypergraph::make(5, {{0, 4}, {0, 1}, {1, 2, 3}});
  Hypergraph image = hg_map(f, h);
  REQUIRE(image == Hypergraph::make(4, {{0, 1}, {1, 3}}));

  Hypergraph two = Hypergraph::make(2, {{0}, {1}});
  REQUIRE(hg_map(OrdinalMap::make(2, 1, {0, 0}), two).edges.size() == 1);
  REQUIRE(hg_map(OrdinalMap::identity(5), h) == h);
  REQUIRE(error_code([&] { hg_map(OrdinalMap::identity(4), h); }) == errc::shape_mismatch);
}

TEST_CASE("the join places the right factor on fresh shifted vertices") {
  Hypergraph h = Hypergraph::make(5, {{0, 1}, {0, 4}, {1, 2, 3}});
  Hypergraph k = Hypergraph::make(4, {{0, 1}, {1, 3}});
  Hypergraph joined = hg_join(h, k);
  REQUIRE(joined == Hypergraph::make(9, {{0, 1}, {0, 4}, {1, 2, 3}, {5, 6}, {6, 8}}));

  REQUIRE(hg_join(h, Hypergraph::unit()) == h);
  REQUIRE(hg_join(Hypergraph::unit(), h) == h);
  REQUIRE(hg_join(hg_join(h, k), h) == hg_join(h, hg_join(k, h)));
}

TEST_CASE("calibrations prune zero values and reject stray keys") {
  Monoid a = Monoid::cyclic(0, 2), m = Monoid::cyclic(0, 3);
  Calibration c = cal(a, m, {0, 1}, {{{0, 1}, 1}, {{1, 0}, 0}});
  REQUIRE(c.entries.size() == 1);
  REQUIRE(c.at(ExponentFunction::make(a, {0, 1}, {0, 1})) == 1);
  REQUIRE(c.at(ExponentFunction::make(a, {0, 1}, {1, 0})) == 0);

  c.accumulate({0, 1}, 2);
  REQUIRE(c.entries.empty());

  REQUIRE(error_code([&] { cal(a, m, {0, 1}, {{{0, 2}, 1}}); }) == errc::out_of_carrier);
  REQUIRE(error_code([&] { cal(a, m, {0, 1}, {{{0, 1}, 3}}); }) == errc::out_of_carrier);
  REQUIRE(error_code([&] { cal(a, m, {0, 1}, {{{0}, 1}}); }) == errc::length_mismatch);
  REQUIRE(error_code([&] { cal(a, m, {1, 0}, {}); }) == errc::domain_mismatch);
}

TEST_CASE("calibration push-forward sums over fibres of the exponent push-forward") {
  Monoid a = Monoid::cyclic(0, 2), m = Monoid::cyclic(0, 3);
  VertexMap collapse = VertexMap::make({0, 1}, {0}, {0, 0});

  ExponentFunction w = ExponentFunction::make(a, {0, 1}, {1, 1});
  REQUIRE(exp_pushforward(collapse, a, w) == ExponentFunction::make(a, {0}, {0}));

  Calibration c = cal(a, m, {0, 1}, {{{0, 1}, 1}, {{1, 0}, 2}});
  Calibration pushed = cal_pushforward(collapse, c);
  REQUIRE(pushed.domain == std::vector<std::uint32_t>{0});
  REQUIRE(pushed.entries.empty());

  Calibration d = cal(a, m, {0, 1}, {{{0, 1}, 1}, {{1, 1}, 2}});
  Calibration dp = cal_pushforward(collapse, d);
  REQUIRE(dp.entries == std::map<std::vector<std::uint64_t>, std::uint64_t>{{{1}, 1}, {{0}, 2}});
}

TEST_CASE("calibrated hypergraphs pair every edge with a calibration on it") {
  Monoid a = Monoid::cyclic(0, 2), m = Monoid::cyclic(0, 3);
  Hypergraph h = Hypergraph::make(2, {{0, 1}});
  Calibration c = cal(a, m, {0, 1}, {{{1, 1}, 2}});
  CalibratedHypergraph ch = CalibratedHypergraph::make(h, {{{0, 1}, c}});

  REQUIRE(error_code([&] { CalibratedHypergraph::make(h, {}); }) == errc::shape_mismatch);
  REQUIRE(error_code([&] {
            CalibratedHypergraph::make(h, {{{0}, cal(a, m, {0}, {})}});
          }) == errc::domain_mismatch);
  REQUIRE(error_code([&] {
            CalibratedHypergraph::make(h, {{{0, 1}, cal(a, m, {0}, {})}});
          }) == errc::domain_mismatch);

  CalibratedHypergraph mapped = gc_map(OrdinalMap::make(2, 1, {0, 0}), ch);
  REQUIRE(mapped.hypergraph == Hypergraph::make(1, {{0}}));
  REQUIRE(mapped.at({0}).entries ==
          std::map<std::vector<std::uint64_t>, std::uint64_t>{{{0}, 2}});

  CalibratedHypergraph joined = gc_join(ch, ch);
  REQUIRE(joined.hypergraph == Hypergraph::make(4, {{0, 1}, {2, 3}}));
  REQUIRE(joined.at({2, 3}).domain == std::vector<std::uint32_t>{2, 3});
  REQUIRE(joined.at({2, 3}).entries == c.entries);
  REQUIRE(gc_join(ch, CalibratedHypergraph::unit()) == ch);
  REQUIRE(gc_join(CalibratedHypergraph::unit(), ch) == ch);
}

TEST_CASE("weights cover exactly the edge set and keep zeros") {
  Monoid m = Monoid::cyclic(0, 3);
  Hypergraph h = Hypergraph::make(5, {{0, 1}, {0, 4}, {1, 2, 3}});
  WeightedHypergraph wh =
      WeightedHypergraph::make(h, m, {{{0, 1}, 1}, {{0, 4}, 2}, {{1, 2, 3}, 2}});

  REQUIRE(error_code([&] { WeightedHypergraph::make(h, m, {{{0, 1}, 1}}); }) ==
          errc::shape_mismatch);
  REQUIRE(error_code([&] {
            WeightedHypergraph::make(h, m, {{{0, 1}, 1}, {{0, 4}, 2}, {{1, 2}, 2}});
          }) == errc::domain_mismatch);
  REQUIRE(error_code([&] {
            WeightedHypergraph::make(h, m, {{{0, 1}, 3}, {{0, 4}, 2}, {{1, 2, 3}, 2}});
          }) == errc::out_of_carrier);

  OrdinalMap f = OrdinalMap::make(5, 4, {0, 1, 3, 3, 1});
  WeightedHypergraph pushed = gw_map(f, wh);
  REQUIRE(pushed.weights ==
          std::map<Edge, std::uint64_t>{{{0, 1}, 0}, {{1, 3}, 2}});

  WeightedHypergraph k =
      WeightedHypergraph::make(Hypergraph::make(4, {{0, 1}, {1, 3}}), m, {{{0, 1}, 0}, {{1, 3}, 1}});
  WeightedHypergraph joined = gw_join(wh, k);
  REQUIRE(joined.weights == std::map<Edge, std::uint64_t>{{{0, 1}, 1},
                                                          {{0, 4}, 2},
                                                          {{1, 2, 3}, 2},
                                                          {{5, 6}, 0},
                                                          {{6, 8}, 1}});
  REQUIRE(gw_join(wh, WeightedHypergraph::unit(m)) == wh);
  REQUIRE(gw_join(WeightedHypergraph::unit(m), wh) == wh);
}

TEST_CASE("collapsing a calibrated hypergraph to weights sums the per-edge mass") {
  Monoid a = Monoid::cyclic(1, 1), m = Monoid::cyclic(0, 3);
  Hypergraph h = Hypergraph::make(5, {{0, 1}, {0, 4}, {1, 2, 3}});
  CalibratedHypergraph ch = CalibratedHypergraph::make(
      h, {{{0, 1}, cal(a, m, {0, 1}, {{{0, 0}, 1}, {{1, 0}, 2}})},
          {{0, 4}, cal(a, m, {0, 4}, {{{1, 1}, 1}})},
          {{1, 2, 3}, cal(a, m, {1, 2, 3}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}})}});
  WeightedHypergraph wh = mu(ch, m);
  REQUIRE(wh.hypergraph == h);
  REQUIRE(wh.weights ==
          std::map<Edge, std::uint64_t>{{{0, 1}, 0}, {{0, 4}, 1}, {{1, 2, 3}, 2}});

  REQUIRE(error_code([&] { mu(CalibratedHypergraph::unit()); }) == errc::monoid_mismatch);
  REQUIRE(mu(CalibratedHypergraph::unit(), m).weights.empty());
}
