#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypermonad/error.hpp"

namespace hypermonad {

/**
 * Cyclic commutative monoid with index i and period c >= 1.
 *
 * Carrier is {0, ..., i+c-1}; addition is ordinary addition until the sum
 * reaches the tail, which then wraps around the final c elements. index 0
 * gives the cyclic group of order c; period 1 with index i saturates at i.
 */
struct CyclicMonoid {
  std::uint32_t index = 0;
  std::uint32_t period = 1;

  static CyclicMonoid make(std::uint32_t index, std::uint32_t period) {
    if (period == 0) fail(errc::shape_mismatch, "cyclic monoid period must be positive");
    return CyclicMonoid{index, period};
  }

  std::uint64_t size() const { return std::uint64_t(index) + period; }

  std::uint64_t add(std::uint64_t u, std::uint64_t v) const {
    if (u >= size() || v >= size()) fail(errc::out_of_carrier, "summand outside carrier");
    std::uint64_t s = u + v;
    if (s < size()) return s;
    return index + (s - index) % period;
  }

  bool operator==(const CyclicMonoid& o) const { return index == o.index && period == o.period; }
};

/** h_add in the (i, c) monoid; the free-standing form used throughout. */
inline std::uint64_t h_add(const CyclicMonoid& m, std::uint64_t u, std::uint64_t v) {
  return m.add(u, v);
}

/**
 * Finite direct sum of cyclic monoids, the value space for exponents and
 * calibrations. One component behaves exactly like the bare cyclic monoid.
 *
 * Elements are addressed by a single index: the mixed-radix odometer over
 * component values with the first component as the most significant digit.
 * Index 0 is always the additive unit.
 */
class Monoid {
 public:
  Monoid() : parts_{CyclicMonoid{0, 1}}, size_(1) {}

  static Monoid cyclic(std::uint32_t index, std::uint32_t period) {
    return Monoid({CyclicMonoid::make(index, period)});
  }

  static Monoid direct_sum(std::vector<CyclicMonoid> parts) {
    if (parts.empty()) fail(errc::shape_mismatch, "direct sum needs at least one component");
    return Monoid(std::move(parts));
  }

  static Monoid trivial() { return cyclic(0, 1); }

  const std::vector<CyclicMonoid>& parts() const { return parts_; }
  std::uint64_t size() const { return size_; }
  bool is_cyclic() const { return parts_.size() == 1; }

  /** The single cyclic component; shape error when this is a proper sum. */
  const CyclicMonoid& as_cyclic() const {
    if (!is_cyclic()) fail(errc::shape_mismatch, "monoid is not a single cyclic component");
    return parts_[0];
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (parts_.size() == 1) return parts_[0].add(check(a), check(b));
    std::vector<std::uint64_t> u = decode(a), v = decode(b);
    for (std::size_t k = 0; k < parts_.size(); ++k) u[k] = parts_[k].add(u[k], v[k]);
    return encode(u);
  }

  /** Component tuple of an element, first component first. */
  std::vector<std::uint64_t> decode(std::uint64_t a) const {
    check(a);
    std::vector<std::uint64_t> out(parts_.size());
    for (std::size_t k = parts_.size(); k-- > 0;) {
      out[k] = a % parts_[k].size();
      a /= parts_[k].size();
    }
    return out;
  }

  std::uint64_t encode(const std::vector<std::uint64_t>& tuple) const {
    if (tuple.size() != parts_.size())
      fail(errc::length_mismatch, "component tuple length disagrees with monoid");
    std::uint64_t a = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (tuple[k] >= parts_[k].size()) fail(errc::out_of_carrier, "component outside carrier");
      a = a * parts_[k].size() + tuple[k];
    }
    return a;
  }

  bool operator==(const Monoid& o) const { return parts_ == o.parts_; }

 private:
  explicit Monoid(std::vector<CyclicMonoid> parts) : parts_(std::move(parts)) {
    size_ = 1;
    for (const CyclicMonoid& p : parts_) {
      if (size_ > UINT64_MAX / p.size())
        fail(errc::bounds_too_large, "direct sum carrier does not fit in 64 bits");
      size_ *= p.size();
    }
  }

  std::uint64_t check(std::uint64_t a) const {
    if (a >= size_) fail(errc::out_of_carrier, "element index outside carrier");
    return a;
  }

  std::vector<CyclicMonoid> parts_;
  std::uint64_t size_ = 1;
};

}  // namespace hypermonad
