#pragma once

#include <cstdint>
#include <vector>

#include "hypermonad/error.hpp"
#include "hypermonad/galois.hpp"
#include "hypermonad/ordinal.hpp"

namespace hypermonad {

/** Tuple of ring elements, one per cdit; the grade is the tuple length. */
struct CditConfig {
  GaloisRing ring;
  std::vector<RingElement> entries;

  static CditConfig make(GaloisRing ring, std::vector<RingElement> entries) {
    for (RingElement x : entries)
      if (x.index >= ring.q()) fail(errc::out_of_carrier, "entry outside the ring");
    return CditConfig{std::move(ring), std::move(entries)};
  }

  static CditConfig zero(GaloisRing ring, std::uint32_t len) {
    std::vector<RingElement> e(len, ring.zero());
    return CditConfig{std::move(ring), std::move(e)};
  }

  static CditConfig unit(GaloisRing ring) { return CditConfig{std::move(ring), {}}; }

  std::uint32_t grade() const { return std::uint32_t(entries.size()); }

  bool operator==(const CditConfig& o) const { return ring == o.ring && entries == o.entries; }
};

/**
 * Morphism action: each target slot collects the ring sum of the source
 * entries above it; slots outside the image hold zero.
 */
inline CditConfig e_map(const OrdinalMap& f, const CditConfig& x) {
  if (x.grade() != f.source_len())
    fail(errc::length_mismatch, "configuration grade disagrees with map source");
  CditConfig out = CditConfig::zero(x.ring, f.target_len());
  for (std::uint32_t i = 0; i < f.source_len(); ++i) {
    std::uint32_t s = f.values()[i];
    out.entries[s] = x.ring.add(out.entries[s], x.entries[i]);
  }
  return out;
}

/** Monoidal product: concatenation of entry tuples. */
inline CditConfig cdit_join(const CditConfig& x, const CditConfig& y) {
  if (!(x.ring == y.ring)) fail(errc::ring_mismatch, "joined configurations over different rings");
  CditConfig out = x;
  out.entries.insert(out.entries.end(), y.entries.begin(), y.entries.end());
  return out;
}

/** Precomposition z |-> z o f, the dual action used by phase pullbacks. */
inline CditConfig e_pullback(const OrdinalMap& f, const CditConfig& z) {
  if (z.grade() != f.target_len())
    fail(errc::length_mismatch, "configuration grade disagrees with map target");
  std::vector<RingElement> entries;
  entries.reserve(f.source_len());
  for (std::uint32_t i = 0; i < f.source_len(); ++i) entries.push_back(z.entries[f.values()[i]]);
  return CditConfig::make(z.ring, std::move(entries));
}

/** Mixed-radix rank of a configuration; the first cdit is most significant. */
inline std::uint64_t config_index(const CditConfig& x) {
  std::uint64_t idx = 0;
  for (RingElement e : x.entries) idx = idx * x.ring.q() + e.index;
  return idx;
}

inline CditConfig config_from_index(const GaloisRing& ring, std::uint32_t len, std::uint64_t idx) {
  std::vector<RingElement> entries(len);
  for (std::uint32_t k = len; k-- > 0;) {
    entries[k] = RingElement{std::uint32_t(idx % ring.q())};
    idx /= ring.q();
  }
  if (idx != 0) fail(errc::index_out_of_range, "configuration rank outside the family");
  return CditConfig{ring, std::move(entries)};
}

/** Number of configurations at the given grade; 64-bit guarded. */
inline std::uint64_t config_count(const GaloisRing& ring, std::uint32_t len) {
  std::uint64_t n = 1;
  for (std::uint32_t k = 0; k < len; ++k) {
    if (n > UINT64_MAX / ring.q()) fail(errc::bounds_too_large, "configuration family too large");
    n *= ring.q();
  }
  return n;
}

}  // namespace hypermonad
