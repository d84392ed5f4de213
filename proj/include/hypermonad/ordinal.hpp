#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hypermonad/error.hpp"

namespace hypermonad {

/**
 * Map between finite ordinals [l] = {0, ..., l-1} and [m] = {0, ..., m-1}.
 *
 * Every function is admissible; there is no map into [0] except from [0]
 * itself. Values are stored as the image tuple (f(0), ..., f(l-1)).
 */
class OrdinalMap {
 public:
  OrdinalMap() = default;

  static OrdinalMap make(std::uint32_t source_len, std::uint32_t target_len,
                         std::vector<std::uint32_t> values) {
    if (values.size() != source_len)
      fail(errc::length_mismatch, "ordinal map needs one value per source point");
    if (target_len == 0 && source_len > 0)
      fail(errc::out_of_range, "no maps into [0] from a nonempty ordinal");
    for (std::uint32_t v : values)
      if (v >= target_len) fail(errc::out_of_range, "map value " + std::to_string(v) +
                                                        " outside target [" +
                                                        std::to_string(target_len) + "]");
    OrdinalMap f;
    f.source_len_ = source_len;
    f.target_len_ = target_len;
    f.values_ = std::move(values);
    return f;
  }

  static OrdinalMap identity(std::uint32_t len) {
    std::vector<std::uint32_t> v(len);
    for (std::uint32_t i = 0; i < len; ++i) v[i] = i;
    return make(len, len, std::move(v));
  }

  std::uint32_t source_len() const { return source_len_; }
  std::uint32_t target_len() const { return target_len_; }
  const std::vector<std::uint32_t>& values() const { return values_; }

  std::uint32_t operator()(std::uint32_t i) const {
    if (i >= source_len_) fail(errc::out_of_range, "argument outside source ordinal");
    return values_[i];
  }

  bool operator==(const OrdinalMap& o) const {
    return source_len_ == o.source_len_ && target_len_ == o.target_len_ && values_ == o.values_;
  }

 private:
  std::uint32_t source_len_ = 0;
  std::uint32_t target_len_ = 0;
  std::vector<std::uint32_t> values_;
};

/** g after f; requires f's target to be g's source. */
inline OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.target_len() != g.source_len())
    fail(errc::shape_mismatch, "compose: inner lengths disagree");
  std::vector<std::uint32_t> v(f.source_len());
  for (std::uint32_t i = 0; i < f.source_len(); ++i) v[i] = g.values()[f.values()[i]];
  return OrdinalMap::make(f.source_len(), g.target_len(), std::move(v));
}

/**
 * Monoidal product: acts as f on the first block and as g, shifted by f's
 * target length, on the second.
 */
inline OrdinalMap tensor(const OrdinalMap& f, const OrdinalMap& g) {
  std::vector<std::uint32_t> v;
  v.reserve(std::size_t(f.source_len()) + g.source_len());
  for (std::uint32_t i = 0; i < f.source_len(); ++i) v.push_back(f.values()[i]);
  for (std::uint32_t i = 0; i < g.source_len(); ++i) v.push_back(g.values()[i] + f.target_len());
  return OrdinalMap::make(f.source_len() + g.source_len(), f.target_len() + g.target_len(),
                          std::move(v));
}

/** Block swap [l+m] -> [m+l]: the first block moves past the second. */
inline OrdinalMap swap_map(std::uint32_t l, std::uint32_t m) {
  std::vector<std::uint32_t> v(std::size_t(l) + m);
  for (std::uint32_t i = 0; i < l; ++i) v[i] = i + m;
  for (std::uint32_t i = 0; i < m; ++i) v[std::size_t(l) + i] = i;
  return OrdinalMap::make(l + m, m + l, std::move(v));
}

struct MapClass {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

inline MapClass classify(const OrdinalMap& f) {
  std::vector<std::uint32_t> hits(f.target_len(), 0);
  for (std::uint32_t v : f.values()) ++hits[v];
  MapClass c;
  c.injective = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h <= 1; });
  c.surjective = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h >= 1; });
  c.bijective = c.injective && c.surjective;
  return c;
}

/**
 * Function between explicit finite vertex sets (sorted, duplicate-free).
 * values[k] is the image of domain[k] and must be a member of codomain.
 */
struct VertexMap {
  std::vector<std::uint32_t> domain;
  std::vector<std::uint32_t> codomain;
  std::vector<std::uint32_t> values;

  static VertexMap make(std::vector<std::uint32_t> domain, std::vector<std::uint32_t> codomain,
                        std::vector<std::uint32_t> values) {
    auto sorted_unique = [](const std::vector<std::uint32_t>& s) {
      return std::is_sorted(s.begin(), s.end()) &&
             std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!sorted_unique(domain) || !sorted_unique(codomain))
      fail(errc::domain_mismatch, "vertex sets must be sorted and duplicate-free");
    if (values.size() != domain.size())
      fail(errc::length_mismatch, "vertex map needs one value per domain vertex");
    for (std::uint32_t v : values)
      if (!std::binary_search(codomain.begin(), codomain.end(), v))
        fail(errc::out_of_range, "vertex map value outside codomain");
    return VertexMap{std::move(domain), std::move(codomain), std::move(values)};
  }

  std::uint32_t operator()(std::uint32_t vertex) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), vertex);
    if (it == domain.end() || *it != vertex)
      fail(errc::out_of_range, "vertex outside map domain");
    return values[std::size_t(it - domain.begin())];
  }

  bool bijective() const {
    std::vector<std::uint32_t> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    return sorted == codomain;
  }

  bool operator==(const VertexMap& o) const {
    return domain == o.domain && codomain == o.codomain && values == o.values;
  }
};

/** Restriction of an ordinal map to a vertex set; codomain is the image. */
inline VertexMap restrict_map(const OrdinalMap& f, const std::vector<std::uint32_t>& subset) {
  std::vector<std::uint32_t> values;
  values.reserve(subset.size());
  for (std::uint32_t r : subset) values.push_back(f(r));
  std::vector<std::uint32_t> image = values;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return VertexMap::make(subset, std::move(image), std::move(values));
}

/** Shift bijection X -> X - l, r |-> r - l; every vertex must be >= l. */
inline VertexMap shift_map(const std::vector<std::uint32_t>& subset, std::uint32_t l) {
  std::vector<std::uint32_t> shifted;
  shifted.reserve(subset.size());
  for (std::uint32_t r : subset) {
    if (r < l) fail(errc::out_of_range, "shift would move a vertex below zero");
    shifted.push_back(r - l);
  }
  std::vector<std::uint32_t> codomain = shifted;
  return VertexMap::make(subset, std::move(codomain), std::move(shifted));
}

/** Composite g after f between vertex sets; f's codomain must embed in g's domain. */
inline VertexMap compose(const VertexMap& g, const VertexMap& f) {
  for (std::uint32_t y : f.codomain)
    if (!std::binary_search(g.domain.begin(), g.domain.end(), y))
      fail(errc::shape_mismatch, "compose: codomain not contained in next domain");
  std::vector<std::uint32_t> values;
  values.reserve(f.domain.size());
  for (std::uint32_t v : f.values) values.push_back(g(v));
  return VertexMap::make(f.domain, g.codomain, std::move(values));
}

}  // namespace hypermonad
