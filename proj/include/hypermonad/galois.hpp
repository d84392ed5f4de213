#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hypermonad/error.hpp"
#include "hypermonad/monoid.hpp"

namespace hypermonad {

/** Element of a Galois ring, addressed by its canonical enumeration index. */
struct RingElement {
  std::uint32_t index = 0;
  bool operator==(const RingElement& o) const { return index == o.index; }
  auto operator<=>(const RingElement& o) const { return index <=> o.index; }
};

/**
 * Per-ring-element exponent tuple: component x lives in the cyclicity
 * monoid of x. Stored dense, in canonical ring order.
 */
struct ZExponent {
  std::vector<std::uint64_t> components;
  bool operator==(const ZExponent& o) const { return components == o.components; }
};

/**
 * Galois ring of characteristic p^r with q = p^{rd} elements, presented as
 * the quotient of Z_{p^r}[x] by a monic modulus that is irreducible mod p.
 *
 * Elements are coefficient vectors of length d; the canonical enumeration
 * is the odometer over coefficients with the constant term as the most
 * significant digit. Addition, multiplication, negation, traces and the
 * per-element cyclicity monoids are tabulated once at construction; the
 * descriptor is immutable and cheap to copy.
 */
class GaloisRing {
 public:
  GaloisRing() = default;

  static GaloisRing make(std::uint32_t p, std::uint32_t r, std::uint32_t d,
                         std::vector<std::uint32_t> modulus = {}) {
    return GaloisRing(std::make_shared<const Data>(p, r, d, std::move(modulus)));
  }

  std::uint32_t p() const { return data().p; }
  std::uint32_t r() const { return data().r; }
  std::uint32_t d() const { return data().d; }
  std::uint32_t char_mod() const { return data().char_mod; }  // p^r
  std::uint32_t q() const { return data().q; }
  const std::vector<std::uint32_t>& modulus() const { return data().modulus; }

  RingElement zero() const { return element_from_coeffs(std::vector<std::uint32_t>(d(), 0)); }
  RingElement one() const {
    std::vector<std::uint32_t> c(d(), 0);
    c[0] = 1;
    return element_from_coeffs(c);
  }

  RingElement element(std::uint32_t index) const {
    if (index >= q()) fail(errc::out_of_carrier, "ring element index outside carrier");
    return RingElement{index};
  }

  std::vector<std::uint32_t> coeffs(RingElement x) const {
    check(x);
    return data().coeffs[x.index];
  }

  RingElement element_from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != d()) fail(errc::length_mismatch, "coefficient vector length disagrees");
    std::uint32_t idx = 0;
    for (std::uint32_t ci : c) {
      if (ci >= char_mod()) fail(errc::out_of_carrier, "coefficient outside Z_{p^r}");
      idx = idx * char_mod() + ci;
    }
    return RingElement{idx};
  }

  RingElement add(RingElement a, RingElement b) const {
    check(a);
    check(b);
    return RingElement{data().add_table[std::size_t(a.index) * q() + b.index]};
  }

  RingElement mul(RingElement a, RingElement b) const {
    check(a);
    check(b);
    return RingElement{data().mul_table[std::size_t(a.index) * q() + b.index]};
  }

  RingElement neg(RingElement a) const {
    check(a);
    return RingElement{data().neg_table[a.index]};
  }

  /** Trace into the prime subring, as a residue in {0, ..., p^r - 1}. */
  std::uint32_t trace(RingElement a) const {
    check(a);
    return data().trace_table[a.index];
  }

  /** Cyclicity monoid of x: index and period of the power sequence of x. */
  CyclicMonoid cyclicity(RingElement x) const {
    check(x);
    return data().cyc[x.index];
  }

  /** x^e for e inside the carrier of the cyclicity monoid of x. */
  RingElement power(RingElement x, std::uint64_t e) const {
    check(x);
    const auto& powers = data().powers[x.index];
    if (e >= powers.size()) fail(errc::out_of_carrier, "exponent outside cyclicity carrier");
    return RingElement{powers[std::size_t(e)]};
  }

  /** Direct sum of all cyclicity monoids, in canonical ring order. */
  const Monoid& cyclicity_monoid() const { return data().z_monoid; }

  ZExponent z_zero() const { return ZExponent{std::vector<std::uint64_t>(q(), 0)}; }

  /**
   * The distinguished exponent with x-component min(1, |Z_x| - 1); raising
   * any x to it returns x itself.
   */
  ZExponent canonical_one_exponent() const {
    ZExponent u;
    u.components.reserve(q());
    for (std::uint32_t x = 0; x < q(); ++x)
      u.components.push_back(data().cyc[x].size() > 1 ? 1 : 0);
    return u;
  }

  /** Componentwise sum in the cyclicity monoid. */
  ZExponent z_add(const ZExponent& u, const ZExponent& v) const {
    check_z(u);
    check_z(v);
    ZExponent out;
    out.components.reserve(q());
    for (std::uint32_t x = 0; x < q(); ++x)
      out.components.push_back(data().cyc[x].add(u.components[x], v.components[x]));
    return out;
  }

  /** x raised to the x-component of u. */
  RingElement z_power(RingElement x, const ZExponent& u) const {
    check_z(u);
    return power(x, u.components[x.index]);
  }

  std::uint64_t z_encode(const ZExponent& u) const {
    check_z(u);
    return cyclicity_monoid().encode(u.components);
  }

  ZExponent z_decode(std::uint64_t idx) const { return ZExponent{cyclicity_monoid().decode(idx)}; }

  bool operator==(const GaloisRing& o) const {
    return p() == o.p() && r() == o.r() && d() == o.d() && modulus() == o.modulus();
  }

 private:
  struct Data {
    std::uint32_t p, r, d, char_mod, q;
    std::vector<std::uint32_t> modulus;  // length d+1, monic, low-to-high
    std::vector<std::vector<std::uint32_t>> coeffs;
    std::vector<std::uint32_t> add_table, mul_table, neg_table, trace_table;
    std::vector<CyclicMonoid> cyc;
    std::vector<std::vector<std::uint32_t>> powers;
    Monoid z_monoid;

    Data(std::uint32_t p_, std::uint32_t r_, std::uint32_t d_, std::vector<std::uint32_t> mod)
        : p(p_), r(r_), d(d_) {
      if (p < 2) fail(errc::not_prime, "characteristic base must be at least 2");
      for (std::uint32_t k = 2; std::uint64_t(k) * k <= p; ++k)
        if (p % k == 0) fail(errc::not_prime, std::to_string(p) + " is not prime");
      if (r == 0 || d == 0) fail(errc::shape_mismatch, "ring needs r >= 1 and d >= 1");

      char_mod = checked_pow(p, r);
      std::uint64_t qq = 1;
      for (std::uint32_t k = 0; k < d; ++k) {
        qq *= char_mod;
        if (qq > 256) fail(errc::too_large, "ring larger than the supported 256 elements");
      }
      q = std::uint32_t(qq);

      modulus = mod.empty() ? default_modulus() : std::move(mod);
      validate_modulus();
      build_tables();
    }

    static std::uint32_t checked_pow(std::uint32_t b, std::uint32_t e) {
      std::uint64_t v = 1;
      for (std::uint32_t k = 0; k < e; ++k) {
        v *= b;
        if (v > 256) fail(errc::too_large, "characteristic larger than the supported range");
      }
      return std::uint32_t(v);
    }

    std::vector<std::uint32_t> default_modulus() const {
      if (d == 1) return {0, 1};  // quotient by x recovers Z_{p^r}
      if (p == 2 && d == 2) return {1, 1, 1};     // x^2 + x + 1
      if (p == 2 && d == 3) return {1, 1, 0, 1};  // x^3 + x + 1
      if (p == 3 && d == 2) return {1, 0, 1};     // x^2 + 1
      fail(errc::missing_modulus,
           "no built-in modulus for p=" + std::to_string(p) + ", d=" + std::to_string(d));
    }

    void validate_modulus() const {
      if (modulus.size() != std::size_t(d) + 1)
        fail(errc::length_mismatch, "modulus must have degree d");
      if (modulus[d] != 1) fail(errc::reducible_modulus, "modulus must be monic");
      for (std::uint32_t c : modulus)
        if (c >= char_mod) fail(errc::out_of_carrier, "modulus coefficient outside Z_{p^r}");
      if (d >= 2 && !irreducible_mod_p()) fail(errc::reducible_modulus, "modulus factors mod p");
    }

    // Trial division over F_p by every monic polynomial of degree <= d/2.
    bool irreducible_mod_p() const {
      std::vector<std::uint32_t> f(modulus.size());
      for (std::size_t k = 0; k < modulus.size(); ++k) f[k] = modulus[k] % p;
      for (std::uint32_t deg = 1; deg <= d / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t k = 0; k < deg; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          std::vector<std::uint32_t> g(deg + 1, 0);
          std::uint64_t t = idx;
          for (std::uint32_t k = 0; k < deg; ++k) {
            g[k] = std::uint32_t(t % p);
            t /= p;
          }
          g[deg] = 1;
          if (divides_mod_p(g, f)) return false;
        }
      }
      return true;
    }

    bool divides_mod_p(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f) const {
      std::size_t dg = g.size() - 1;
      while (f.size() > dg) {
        std::uint32_t lead = f.back() % p;
        if (lead != 0) {
          std::size_t shift = f.size() - 1 - dg;
          for (std::size_t k = 0; k <= dg; ++k)
            f[shift + k] = (f[shift + k] + std::uint32_t(std::uint64_t(lead) * (p - g[k] % p))) % p;
        }
        f.pop_back();
      }
      for (std::uint32_t c : f)
        if (c % p != 0) return false;
      return true;
    }

    std::vector<std::uint32_t> coeffs_of(std::uint32_t idx) const {
      std::vector<std::uint32_t> c(d);
      for (std::uint32_t k = d; k-- > 0;) {
        c[k] = idx % char_mod;
        idx /= char_mod;
      }
      return c;
    }

    std::uint32_t index_of(const std::vector<std::uint32_t>& c) const {
      std::uint32_t idx = 0;
      for (std::uint32_t ci : c) idx = idx * char_mod + ci;
      return idx;
    }

    std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const {
      std::vector<std::uint32_t> prod(2 * std::size_t(d) - 1, 0);
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j)
          prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(a[i]) * b[j]) % char_mod);
      // reduce by the monic modulus: x^d == -(lower-degree tail)
      for (std::size_t k = prod.size(); k-- > d;) {
        std::uint32_t lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (std::uint32_t j = 0; j < d; ++j) {
          std::uint64_t sub = std::uint64_t(lead) * modulus[j] % char_mod;
          prod[k - d + j] =
              std::uint32_t((prod[k - d + j] + char_mod - std::uint32_t(sub)) % char_mod);
        }
      }
      prod.resize(d);
      return prod;
    }

    void build_tables() {
      coeffs.resize(q);
      for (std::uint32_t x = 0; x < q; ++x) coeffs[x] = coeffs_of(x);

      add_table.resize(std::size_t(q) * q);
      mul_table.resize(std::size_t(q) * q);
      neg_table.resize(q);
      for (std::uint32_t x = 0; x < q; ++x) {
        std::vector<std::uint32_t> nc(d);
        for (std::uint32_t k = 0; k < d; ++k) nc[k] = (char_mod - coeffs[x][k]) % char_mod;
        neg_table[x] = index_of(nc);
        for (std::uint32_t y = 0; y < q; ++y) {
          std::vector<std::uint32_t> sc(d);
          for (std::uint32_t k = 0; k < d; ++k) sc[k] = (coeffs[x][k] + coeffs[y][k]) % char_mod;
          add_table[std::size_t(x) * q + y] = index_of(sc);
          mul_table[std::size_t(x) * q + y] = index_of(poly_mul(coeffs[x], coeffs[y]));
        }
      }

      // trace = matrix trace of multiplication by x in the power basis
      trace_table.resize(q);
      std::vector<std::uint32_t> xi(d, 0);
      for (std::uint32_t x = 0; x < q; ++x) {
        std::uint64_t t = 0;
        for (std::uint32_t j = 0; j < d; ++j) {
          std::fill(xi.begin(), xi.end(), 0);
          xi[j] = 1;
          std::vector<std::uint32_t> col = poly_mul(coeffs[x], xi);
          t += col[j];
        }
        trace_table[x] = std::uint32_t(t % char_mod);
      }

      // power sequence of each element up to its first repetition
      cyc.resize(q);
      powers.resize(q);
      std::uint32_t one_idx = index_of([&] {
        std::vector<std::uint32_t> c(d, 0);
        c[0] = 1;
        return c;
      }());
      for (std::uint32_t x = 0; x < q; ++x) {
        std::map<std::uint32_t, std::uint32_t> seen;
        std::vector<std::uint32_t> seq;
        std::uint32_t cur = one_idx;
        while (!seen.count(cur)) {
          seen.emplace(cur, std::uint32_t(seq.size()));
          seq.push_back(cur);
          cur = mul_table[std::size_t(cur) * q + x];
        }
        std::uint32_t first = seen[cur];
        cyc[x] = CyclicMonoid::make(first, std::uint32_t(seq.size()) - first);
        powers[x] = std::move(seq);
      }

      std::vector<CyclicMonoid> parts(cyc.begin(), cyc.end());
      z_monoid = Monoid::direct_sum(std::move(parts));
    }
  };

  explicit GaloisRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  const Data& data() const {
    if (!data_) fail(errc::shape_mismatch, "ring handle is empty");
    return *data_;
  }

  void check(RingElement x) const {
    if (x.index >= q()) fail(errc::out_of_carrier, "ring element outside carrier");
  }

  void check_z(const ZExponent& u) const {
    if (u.components.size() != q())
      fail(errc::length_mismatch, "exponent tuple length disagrees with ring size");
    for (std::uint32_t x = 0; x < q(); ++x)
      if (u.components[x] >= data().cyc[x].size())
        fail(errc::out_of_carrier, "exponent component outside its cyclicity carrier");
  }

  std::shared_ptr<const Data> data_;
};

}  // namespace hypermonad
