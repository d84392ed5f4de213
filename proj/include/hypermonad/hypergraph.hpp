#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hypermonad/error.hpp"
#include "hypermonad/ordinal.hpp"

namespace hypermonad {

/** Hyperedge: non-empty, sorted, duplicate-free vertex list. */
using Edge = std::vector<std::uint32_t>;

inline Edge make_edge(std::vector<std::uint32_t> vertices) {
  if (vertices.empty()) fail(errc::shape_mismatch, "hyperedges are non-empty");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(errc::shape_mismatch, "hyperedge vertices must be distinct");
  return vertices;
}

/**
 * Finite hypergraph on the ordinal [vertex_count]. Edges form a set, so a
 * morphism action that collapses two edges keeps a single copy.
 */
struct Hypergraph {
  std::uint32_t vertex_count = 0;
  std::set<Edge> edges;

  static Hypergraph make(std::uint32_t vertex_count, std::vector<Edge> edge_list) {
    Hypergraph h;
    h.vertex_count = vertex_count;
    for (Edge& e : edge_list) {
      Edge edge = make_edge(std::move(e));
      if (edge.back() >= vertex_count)
        fail(errc::out_of_range, "edge vertex outside the vertex ordinal");
      h.edges.insert(std::move(edge));
    }
    return h;
  }

  static Hypergraph unit() { return Hypergraph{}; }

  bool operator==(const Hypergraph& o) const {
    return vertex_count == o.vertex_count && edges == o.edges;
  }
};

/** Image of an edge under an ordinal map, collapsing coincident vertices. */
inline Edge edge_image(const OrdinalMap& f, const Edge& x) {
  Edge y;
  y.reserve(x.size());
  for (std::uint32_t r : x) y.push_back(f(r));
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  return y;
}

/** Morphism action: apply f to every edge; coincident images collapse. */
inline Hypergraph hg_map(const OrdinalMap& f, const Hypergraph& h) {
  if (h.vertex_count != f.source_len())
    fail(errc::shape_mismatch, "hypergraph grade disagrees with map source");
  Hypergraph out;
  out.vertex_count = f.target_len();
  for (const Edge& x : h.edges) out.edges.insert(edge_image(f, x));
  return out;
}

/** Monoidal product: left edges unchanged, right edges shifted past them. */
inline Hypergraph hg_join(const Hypergraph& h, const Hypergraph& k) {
  Hypergraph out;
  out.vertex_count = h.vertex_count + k.vertex_count;
  out.edges = h.edges;
  for (const Edge& x : k.edges) {
    Edge shifted;
    shifted.reserve(x.size());
    for (std::uint32_t r : x) shifted.push_back(r + h.vertex_count);
    out.edges.insert(std::move(shifted));
  }
  return out;
}

}  // namespace hypermonad
