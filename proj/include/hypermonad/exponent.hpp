#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypermonad/error.hpp"
#include "hypermonad/monoid.hpp"
#include "hypermonad/ordinal.hpp"

namespace hypermonad {

/**
 * Function from a finite vertex set into a shared monoid A, stored as one
 * element index per domain vertex. The monoid itself travels separately;
 * two exponent functions compare equal iff domain and values agree.
 */
struct ExponentFunction {
  std::vector<std::uint32_t> domain;
  std::vector<std::uint64_t> values;

  static ExponentFunction make(const Monoid& a, std::vector<std::uint32_t> domain,
                               std::vector<std::uint64_t> values) {
    if (!std::is_sorted(domain.begin(), domain.end()) ||
        std::adjacent_find(domain.begin(), domain.end()) != domain.end())
      fail(errc::domain_mismatch, "exponent domain must be sorted and duplicate-free");
    if (values.size() != domain.size())
      fail(errc::length_mismatch, "exponent function needs one value per vertex");
    for (std::uint64_t v : values)
      if (v >= a.size()) fail(errc::out_of_carrier, "exponent value outside monoid carrier");
    return ExponentFunction{std::move(domain), std::move(values)};
  }

  static ExponentFunction zero(const Monoid&, std::vector<std::uint32_t> domain) {
    std::vector<std::uint64_t> v(domain.size(), 0);
    return ExponentFunction{std::move(domain), std::move(v)};
  }

  std::uint64_t operator()(std::uint32_t vertex) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), vertex);
    if (it == domain.end() || *it != vertex)
      fail(errc::out_of_range, "vertex outside exponent domain");
    return values[std::size_t(it - domain.begin())];
  }

  bool operator==(const ExponentFunction& o) const {
    return domain == o.domain && values == o.values;
  }
};

/** Number of exponent functions on a domain of the given size; 64-bit guarded. */
inline std::uint64_t exp_family_size(const Monoid& a, std::size_t domain_size) {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < domain_size; ++k) {
    if (a.size() != 0 && n > UINT64_MAX / a.size())
      fail(errc::bounds_too_large, "exponent family does not fit in 64 bits");
    n *= a.size();
  }
  return n;
}

/**
 * Canonical position of w in the odometer enumeration of A^X: digits in
 * base |A|, the smallest vertex being the most significant digit.
 */
inline std::uint64_t exp_index(const Monoid& a, const ExponentFunction& w) {
  exp_family_size(a, w.domain.size());
  std::uint64_t k = 0;
  for (std::uint64_t v : w.values) {
    if (v >= a.size()) fail(errc::out_of_carrier, "exponent value outside monoid carrier");
    k = k * a.size() + v;
  }
  return k;
}

inline ExponentFunction exp_unindex(const Monoid& a, std::vector<std::uint32_t> domain,
                                    std::uint64_t k) {
  if (k >= exp_family_size(a, domain.size()))
    fail(errc::index_out_of_range, "enumeration index outside A^X");
  std::vector<std::uint64_t> values(domain.size());
  for (std::size_t j = domain.size(); j-- > 0;) {
    values[j] = k % a.size();
    k /= a.size();
  }
  return ExponentFunction::make(a, std::move(domain), std::move(values));
}

/**
 * Push-forward along f: each target vertex receives the monoid sum of the
 * values over its fibre; vertices outside the image receive zero.
 */
inline ExponentFunction exp_pushforward(const VertexMap& f, const Monoid& a,
                                        const ExponentFunction& w) {
  if (w.domain != f.domain) fail(errc::domain_mismatch, "exponent domain disagrees with map");
  ExponentFunction out = ExponentFunction::zero(a, f.codomain);
  for (std::size_t k = 0; k < f.domain.size(); ++k) {
    auto it = std::lower_bound(f.codomain.begin(), f.codomain.end(), f.values[k]);
    std::size_t j = std::size_t(it - f.codomain.begin());
    out.values[j] = a.add(out.values[j], w.values[k]);
  }
  return out;
}

/** Pointwise sum in the exponent monoid A^X. */
inline ExponentFunction exp_add(const Monoid& a, const ExponentFunction& u,
                                const ExponentFunction& v) {
  if (u.domain != v.domain) fail(errc::domain_mismatch, "exponent domains disagree");
  ExponentFunction out = u;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = a.add(out.values[k], v.values[k]);
  return out;
}

/**
 * Element of the calibration monoid M^{A^X}: a finitely supported assignment
 * of M-values to exponent functions on X. Zero values are never stored, so
 * structural equality is equality in M^{A^X}.
 */
struct Calibration {
  Monoid exponent_monoid;  // A
  Monoid value_monoid;     // M
  std::vector<std::uint32_t> domain;
  std::map<std::vector<std::uint64_t>, std::uint64_t> entries;  // w.values -> nonzero M element

  static Calibration make(Monoid a, Monoid m, std::vector<std::uint32_t> domain,
                          std::map<std::vector<std::uint64_t>, std::uint64_t> entries) {
    Calibration c{std::move(a), std::move(m), std::move(domain), {}};
    if (!std::is_sorted(c.domain.begin(), c.domain.end()) ||
        std::adjacent_find(c.domain.begin(), c.domain.end()) != c.domain.end())
      fail(errc::domain_mismatch, "calibration domain must be sorted and duplicate-free");
    for (auto& [w, v] : entries) {
      if (w.size() != c.domain.size())
        fail(errc::length_mismatch, "calibration key length disagrees with domain");
      for (std::uint64_t x : w)
        if (x >= c.exponent_monoid.size())
          fail(errc::out_of_carrier, "calibration key outside exponent carrier");
      if (v >= c.value_monoid.size())
        fail(errc::out_of_carrier, "calibration value outside value carrier");
      if (v != 0) c.entries.emplace(w, v);
    }
    return c;
  }

  static Calibration zero(Monoid a, Monoid m, std::vector<std::uint32_t> domain) {
    return make(std::move(a), std::move(m), std::move(domain), {});
  }

  std::uint64_t at(const ExponentFunction& w) const {
    if (w.domain != domain) fail(errc::domain_mismatch, "exponent domain disagrees");
    auto it = entries.find(w.values);
    return it == entries.end() ? 0 : it->second;
  }

  void accumulate(const std::vector<std::uint64_t>& key, std::uint64_t v) {
    auto [it, inserted] = entries.emplace(key, v);
    if (!inserted) it->second = value_monoid.add(it->second, v);
    if (it->second == 0) entries.erase(it);
  }

  bool operator==(const Calibration& o) const {
    return exponent_monoid == o.exponent_monoid && value_monoid == o.value_monoid &&
           domain == o.domain && entries == o.entries;
  }
};

/**
 * Push-forward in the calibration monoid: the value at v is the M-sum of the
 * values over the fibre of the exponent push-forward above v. Computed over
 * the stored support only, which is exact because absent keys carry zero.
 */
inline Calibration cal_pushforward(const VertexMap& f, const Calibration& cal) {
  if (cal.domain != f.domain) fail(errc::domain_mismatch, "calibration domain disagrees with map");
  Calibration out = Calibration::zero(cal.exponent_monoid, cal.value_monoid, f.codomain);
  for (const auto& [wvals, v] : cal.entries) {
    ExponentFunction w{cal.domain, wvals};
    ExponentFunction pushed = exp_pushforward(f, cal.exponent_monoid, w);
    out.accumulate(pushed.values, v);
  }
  return out;
}

/** Pointwise sum in M^{A^X}. */
inline Calibration cal_add(const Calibration& a, const Calibration& b) {
  if (a.exponent_monoid != b.exponent_monoid || a.value_monoid != b.value_monoid)
    fail(errc::monoid_mismatch, "calibration monoids disagree");
  if (a.domain != b.domain) fail(errc::domain_mismatch, "calibration domains disagree");
  Calibration out = a;
  for (const auto& [w, v] : b.entries) out.accumulate(w, v);
  return out;
}

}  // namespace hypermonad
