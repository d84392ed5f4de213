#include <catch2/catch_amalgamated.hpp>

#include "hypermonad/hypermonad.hpp"
#include "support.hpp"

using namespace hypermonad;
using hmtest::error_code;

namespace {

std::vector<GaloisRing> small_rings() {
  return {GaloisRing::make(2, 1, 1), GaloisRing::make(3, 1, 1), GaloisRing::make(2, 1, 2),
          GaloisRing::make(2, 2, 1), GaloisRing::make(2, 1, 3), GaloisRing::make(2, 3, 1),
          GaloisRing::make(3, 1, 2), GaloisRing::make(2, 2, 2)};
}

/** Frobenius orbit sum; agrees with the tabulated trace over fields. */
std::uint32_t frobenius_trace(const GaloisRing& ring, RingElement x) {
  RingElement acc = ring.zero();
  RingElement pow = x;
  for (std::uint32_t i = 0; i < ring.d(); ++i) {
    acc = ring.add(acc, pow);
    RingElement next = pow;
    for (std::uint32_t k = 1; k < ring.p(); ++k) next = ring.mul(next, pow);
    pow = next;
  }
  return ring.coeffs(acc)[0];
}

}  // namespace

TEST_CASE("ring construction fixes sizes and element indexing") {
  std::vector<std::uint32_t> qs = {2, 3, 4, 4, 8, 8, 9, 16};
  auto rings = small_rings();
  for (std::size_t k = 0; k < rings.size(); ++k) {
    REQUIRE(rings[k].q() == qs[k]);
    REQUIRE(rings[k].element_from_coeffs(rings[k].coeffs(rings[k].one())) == rings[k].one());
    REQUIRE(rings[k].zero() == rings[k].element(0));
  }

  GaloisRing f4 = GaloisRing::make(2, 1, 2);
  REQUIRE(f4.coeffs(f4.element(1)) == std::vector<std::uint32_t>{0, 1});
  REQUIRE(f4.coeffs(f4.element(2)) == std::vector<std::uint32_t>{1, 0});
  REQUIRE(f4.one() == f4.element(2));
}

TEST_CASE("ring axioms hold on every element pair") {
  for (const GaloisRing& ring : small_rings()) {
    RingElement zero = ring.zero(), one = ring.one();
    for (std::uint32_t a = 0; a < ring.q(); ++a) {
      RingElement x = ring.element(a);
      REQUIRE(ring.add(x, zero) == x);
      REQUIRE(ring.mul(x, one) == x);
      REQUIRE(ring.add(x, ring.neg(x)) == zero);
      for (std::uint32_t b = 0; b < ring.q(); ++b) {
        RingElement y = ring.element(b);
        REQUIRE(ring.add(x, y) == ring.add(y, x));
        REQUIRE(ring.mul(x, y) == ring.mul(y, x));
        for (std::uint32_t c = 0; c < ring.q(); ++c) {
          RingElement z = ring.element(c);
          REQUIRE(ring.mul(x, ring.mul(y, z)) == ring.mul(ring.mul(x, y), z));
          REQUIRE(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("quartic field and ring products match hand computations") {
  GaloisRing f4 = GaloisRing::make(2, 1, 2);
  REQUIRE(f4.mul(f4.element(1), f4.element(1)) == f4.element(3));
  REQUIRE(f4.mul(f4.element(1), f4.element(3)) == f4.element(2));
  REQUIRE(f4.add(f4.element(2), f4.element(3)) == f4.element(1));

  GaloisRing z4 = GaloisRing::make(2, 2, 1);
  REQUIRE(z4.mul(z4.element(3), z4.element(3)) == z4.element(1));
  REQUIRE(z4.add(z4.element(2), z4.element(3)) == z4.element(1));
  REQUIRE(z4.neg(z4.element(1)) == z4.element(3));

  GaloisRing gr = GaloisRing::make(2, 2, 2);
  REQUIRE(gr.mul(gr.element(5), gr.element(1)) == gr.element(12));
  REQUIRE(gr.one() == gr.element(4));
}

TEST_CASE("the trace lands in the prime subring and is linear over it") {
  for (const GaloisRing& ring : small_rings()) {
    REQUIRE(ring.trace(ring.one()) == ring.d() % ring.char_mod());
    for (std::uint32_t a = 0; a < ring.q(); ++a) {
      RingElement x = ring.element(a);
      REQUIRE(ring.trace(x) < ring.char_mod());
      for (std::uint32_t b = 0; b < ring.q(); ++b) {
        RingElement y = ring.element(b);
        REQUIRE(ring.trace(ring.add(x, y)) ==
                (ring.trace(x) + ring.trace(y)) % ring.char_mod());
      }
    }
    if (ring.r() == 1)
      for (std::uint32_t a = 0; a < ring.q(); ++a)
        REQUIRE(ring.trace(ring.element(a)) == frobenius_trace(ring, ring.element(a)));
  }
  GaloisRing f4 = GaloisRing::make(2, 1, 2);
  REQUIRE(f4.trace(f4.element(1)) == 1);
  GaloisRing gr = GaloisRing::make(2, 2, 2);
  REQUIRE(gr.trace(gr.one()) == 2);
}

TEST_CASE("cyclicity tabulates the index and period of each power sequence") {
  GaloisRing z4 = GaloisRing::make(2, 2, 1);
  REQUIRE(z4.cyclicity(z4.element(2)) == CyclicMonoid::make(2, 1));
  REQUIRE(z4.cyclicity(z4.element(3)) == CyclicMonoid::make(0, 2));
  REQUIRE(z4.cyclicity(z4.element(0)) == CyclicMonoid::make(1, 1));
  REQUIRE(z4.cyclicity(z4.element(1)) == CyclicMonoid::make(0, 1));

  GaloisRing f2 = GaloisRing::make(2, 1, 1);
  REQUIRE(f2.cyclicity_monoid() ==
          Monoid::direct_sum({CyclicMonoid::make(1, 1), CyclicMonoid::make(0, 1)}));
  REQUIRE(f2.canonical_one_exponent().components == std::vector<std::uint64_t>{1, 0});

  for (const GaloisRing& ring : small_rings()) {
    ZExponent one = ring.canonical_one_exponent();
    for (std::uint32_t a = 0; a < ring.q(); ++a) {
      RingElement x = ring.element(a);
      REQUIRE(ring.z_power(x, ring.z_zero()) == ring.one());
      REQUIRE(ring.z_power(x, one) == x);
      REQUIRE(ring.power(x, 0) == ring.one());
    }
  }
}

TEST_CASE("powers are a homomorphism from each cyclicity monoid") {
  for (const GaloisRing& ring : small_rings())
    for (std::uint32_t a = 0; a < ring.q(); ++a) {
      RingElement x = ring.element(a);
      CyclicMonoid zx = ring.cyclicity(x);
      for (std::uint64_t u = 0; u < zx.size(); ++u)
        for (std::uint64_t v = 0; v < zx.size(); ++v)
          REQUIRE(ring.power(x, zx.add(u, v)) == ring.mul(ring.power(x, u), ring.power(x, v)));
      REQUIRE(error_code([&] { ring.power(x, zx.size()); }) == errc::out_of_carrier);
    }
}

TEST_CASE("componentwise exponent sums respect the odometer encoding") {
  GaloisRing z4 = GaloisRing::make(2, 2, 1);
  const Monoid& z = z4.cyclicity_monoid();
  for (std::uint64_t a = 0; a < z.size(); ++a) {
    ZExponent u = z4.z_decode(a);
    REQUIRE(z4.z_encode(u) == a);
    for (std::uint64_t b = 0; b < z.size(); ++b)
      REQUIRE(z4.z_encode(z4.z_add(u, z4.z_decode(b))) == z.add(a, b));
  }
}

TEST_CASE("malformed ring requests are rejected with precise codes") {
  REQUIRE(error_code([] { GaloisRing::make(4, 1, 1); }) == errc::not_prime);
  REQUIRE(error_code([] { GaloisRing::make(2, 0, 1); }) == errc::shape_mismatch);
  REQUIRE(error_code([] { GaloisRing::make(2, 1, 9); }) == errc::too_large);
  REQUIRE(error_code([] { GaloisRing::make(5, 1, 2); }) == errc::missing_modulus);
  REQUIRE(error_code([] { GaloisRing::make(2, 1, 2, {1, 0, 1}); }) == errc::reducible_modulus);
  REQUIRE(error_code([] { GaloisRing::make(2, 1, 2, {1, 1, 0}); }) == errc::reducible_modulus);
  REQUIRE(error_code([] { GaloisRing::make(2, 1, 2, {1, 1}); }) == errc::length_mismatch);
  REQUIRE(error_code([] { GaloisRing::make(2, 1, 1).element(2); }) == errc::out_of_carrier);
  REQUIRE(error_code([] { GaloisRing().q(); }) == errc::shape_mismatch);
}
