#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "hypermonad/cdit.hpp"
#include "hypermonad/error.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/ordinal.hpp"
#include "hypermonad/parallel.hpp"

namespace hypermonad {

using Amplitude = std::complex<double>;

/**
 * Dense state of `qudits` q-level systems, one axis per cdit slot. Basis
 * vectors are configurations; the amplitude of x sits at its mixed-radix
 * rank (first qudit most significant). Grade zero is a single scalar.
 */
struct StateVector {
  GaloisRing ring;
  std::uint32_t qudits = 0;
  std::vector<Amplitude> amplitudes;

  static StateVector make(GaloisRing ring, std::uint32_t qudits, std::vector<Amplitude> amps) {
    if (amps.size() != config_count(ring, qudits))
      fail(errc::length_mismatch, "amplitude count disagrees with the grade");
    return StateVector{std::move(ring), qudits, std::move(amps)};
  }

  static StateVector zero(GaloisRing ring, std::uint32_t qudits) {
    std::uint64_t n = config_count(ring, qudits);
    return StateVector{std::move(ring), qudits, std::vector<Amplitude>(n, 0.0)};
  }

  std::uint64_t dim() const { return amplitudes.size(); }
};

/** |x>: the basis state of a configuration. */
inline StateVector basis_state(const CditConfig& x) {
  StateVector psi = StateVector::zero(x.ring, x.grade());
  psi.amplitudes[config_index(x)] = 1.0;
  return psi;
}

/** |0...0> at the given grade; grade zero gives the scalar 1. */
inline StateVector zero_basis_state(const GaloisRing& ring, std::uint32_t qudits) {
  return basis_state(CditConfig::zero(ring, qudits));
}

/**
 * Linear extension of the configuration action: the amplitude of x is
 * added onto the image configuration. Basis order fixes the summation
 * order, so the result does not depend on scheduling.
 */
inline StateVector apply_hEf(const OrdinalMap& f, const StateVector& psi) {
  if (psi.qudits != f.source_len())
    fail(errc::shape_mismatch, "state grade disagrees with map source");
  StateVector out = StateVector::zero(psi.ring, f.target_len());
  for (std::uint64_t xi = 0; xi < psi.dim(); ++xi) {
    if (psi.amplitudes[xi] == Amplitude(0.0)) continue;
    CditConfig x = config_from_index(psi.ring, psi.qudits, xi);
    out.amplitudes[config_index(e_map(f, x))] += psi.amplitudes[xi];
  }
  return out;
}

/** Monoidal product of states: the Kronecker product of amplitude tables. */
inline StateVector tensor_states(const StateVector& a, const StateVector& b) {
  if (!(a.ring == b.ring)) fail(errc::ring_mismatch, "tensor of states over different rings");
  StateVector out = StateVector::zero(a.ring, a.qudits + b.qudits);
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    for (std::uint64_t j = 0; j < b.dim(); ++j)
      out.amplitudes[i * b.dim() + j] = a.amplitudes[i] * b.amplitudes[j];
  return out;
}

namespace detail {

/** Single-qudit kernel K[y][x] = q^{-1/2} omega^{tr(xy)}, conjugated for the inverse. */
inline std::vector<Amplitude> fourier_kernel(const GaloisRing& ring, bool inverse) {
  const std::uint32_t q = ring.q();
  const double norm = 1.0 / std::sqrt(double(q));
  const double sign = inverse ? -1.0 : 1.0;
  std::vector<Amplitude> k(std::size_t(q) * q);
  for (std::uint32_t y = 0; y < q; ++y)
    for (std::uint32_t x = 0; x < q; ++x) {
      std::uint32_t t = ring.trace(ring.mul(ring.element(x), ring.element(y)));
      double angle = sign * 2.0 * std::numbers::pi * double(t) / double(ring.char_mod());
      k[std::size_t(y) * q + x] = norm * Amplitude(std::cos(angle), std::sin(angle));
    }
  return k;
}

}  // namespace detail

/**
 * Tensor-factorized Fourier pass: the single-qudit kernel is applied along
 * each axis in turn, costing O(l q^{l+1}) kernel multiplies instead of the
 * dense q^{2l}. Forward uses omega^{+tr(xy)}; inverse is its conjugate.
 */
inline StateVector fourier_apply(const StateVector& psi, bool inverse = false) {
  const std::uint32_t q = psi.ring.q();
  std::vector<Amplitude> kernel = detail::fourier_kernel(psi.ring, inverse);
  StateVector out = psi;
  std::vector<Amplitude> next(out.amplitudes.size());
  std::uint64_t stride = out.dim() / (psi.qudits ? q : 1);
  for (std::uint32_t axis = 0; axis < psi.qudits; ++axis) {
    const std::vector<Amplitude>& cur = out.amplitudes;
    const std::uint64_t columns = out.dim() / q;
    parallel_for(columns, [&](std::uint64_t c) {
      std::uint64_t outer = c / stride, inner = c % stride;
      std::uint64_t base = outer * stride * q + inner;
      for (std::uint32_t y = 0; y < q; ++y) {
        Amplitude acc = 0.0;
        for (std::uint32_t x = 0; x < q; ++x)
          acc += kernel[std::size_t(y) * q + x] * cur[base + x * stride];
        next[base + y * stride] = acc;
      }
    });
    out.amplitudes.swap(next);
    stride /= q;
  }
  return out;
}

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (!(a.ring == b.ring) || a.qudits != b.qudits)
    fail(errc::shape_mismatch, "states compared across different spaces");
  double m = 0.0;
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return m;
}

inline double norm(const StateVector& a) {
  double s = 0.0;
  for (const Amplitude& z : a.amplitudes) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace hypermonad
