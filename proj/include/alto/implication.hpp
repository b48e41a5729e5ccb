#pragma once

// The forcing relation on ordered pairs of adjacent vertices and its
// transitive closure, which partitions the edge set into implication
// classes. The closure is computed by union-find over all 2|E| ordered
// pairs; an edge class merges the coset of (u,v) with the coset of (v,u)
// and carries a deterministic orientation representative (the coset holding
// the lexicographically smallest pair).

#include <stdexcept>
#include <vector>

#include "alto/pog.hpp"

namespace alto {

// (u,v) forces (x,y): same pair, or head-to-tail meeting with the cross
// pair missing. Both pairs must be ordered pairs of adjacent vertices.
inline bool gamma_forces(const Graph& g, VertexPair p, VertexPair q) {
  auto check = [&](VertexPair z, const char* which) {
    if (z.first == z.second || !g.has_edge(z.first, z.second))
      throw std::invalid_argument(std::string("gamma_forces: ") + which +
                                  " is not an ordered pair of adjacent vertices");
  };
  check(p, "first argument");
  check(q, "second argument");
  auto [u, v] = p;
  auto [x, y] = q;
  if (u == x && v == y) return true;
  if (u == y && v != x && !g.has_edge(v, x)) return true;
  if (v == x && u != y && !g.has_edge(u, y)) return true;
  return false;
}

struct ImplicationPartition {
  // all ordered pairs (u,v) with uv an edge, lex sorted
  std::vector<VertexPair> pairs;
  // coset id per pair (ids ordered by smallest member pair)
  std::vector<int> coset;
  // edge classes: partition of the (u<v) edge list, classes ordered by
  // smallest edge, edges within a class sorted
  std::vector<std::vector<VertexPair>> classes;
  // orientation[i][j]: the chosen direction of classes[i][j]
  std::vector<std::vector<VertexPair>> orientation;

  int pair_index(VertexPair p) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p)
      throw std::invalid_argument("pair not in Z(G)");
    return static_cast<int>(it - pairs.begin());
  }
  // p and q are in the same coset of the closure
  bool implies(VertexPair p, VertexPair q) const {
    return coset[pair_index(p)] == coset[pair_index(q)];
  }
  int class_of(VertexPair edge) const {
    if (edge.first > edge.second) std::swap(edge.first, edge.second);
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::binary_search(classes[i].begin(), classes[i].end(), edge))
        return static_cast<int>(i);
    throw std::invalid_argument("edge not in graph");
  }
  bool trivial(int cls) const { return classes[cls].size() == 1; }
};

inline ImplicationPartition implication_classes(const Graph& g) {
  ImplicationPartition part;
  for (const auto& [u, v] : g.edges()) {
    part.pairs.emplace_back(u, v);
    part.pairs.emplace_back(v, u);
  }
  std::sort(part.pairs.begin(), part.pairs.end());
  int np = static_cast<int>(part.pairs.size());

  std::vector<int> parent(np);
  for (int i = 0; i < np; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  // the relation is symmetric, so one triangle pass closes it
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j)
      if (gamma_forces(g, part.pairs[i], part.pairs[j])) {
        int a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  part.coset.resize(np);
  std::vector<int> coset_id(np, -1);
  int next = 0;
  for (int i = 0; i < np; ++i) {
    int r = find(i);
    if (coset_id[r] == -1) coset_id[r] = next++;
    part.coset[i] = coset_id[r];
  }

  // group edges: uv, xy share a class iff their coset pairs coincide
  std::vector<std::pair<int, int>> edge_key; // minmax of the two cosets, per edge
  const auto& edges = g.edges();
  for (const auto& [u, v] : edges) {
    int a = part.coset[part.pair_index({u, v})];
    int b = part.coset[part.pair_index({v, u})];
    edge_key.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<int> cls_of(edges.size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (cls_of[i] != -1) continue;
    int id = static_cast<int>(part.classes.size());
    part.classes.emplace_back();
    for (std::size_t j = i; j < edges.size(); ++j)
      if (cls_of[j] == -1 && edge_key[j] == edge_key[i]) {
        cls_of[j] = id;
        part.classes[id].push_back(edges[j]);
      }
  }

  // orientation representative: the coset containing the lexicographically
  // smallest pair of the class
  part.orientation.resize(part.classes.size());
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    int chosen = -1;
    for (int i = 0; i < np && chosen == -1; ++i) {
      const auto& e = part.pairs[i];
      VertexPair und{std::min(e.first, e.second), std::max(e.first, e.second)};
      if (std::binary_search(part.classes[c].begin(), part.classes[c].end(), und))
        chosen = part.coset[i];
    }
    for (const auto& [u, v] : part.classes[c]) {
      if (part.coset[part.pair_index({u, v})] == chosen)
        part.orientation[c].emplace_back(u, v);
      else
        part.orientation[c].emplace_back(v, u);
    }
  }
  return part;
}

// Closed neighbourhoods of u and v coincide. Throws when uv is not an edge.
inline bool is_balanced(const Graph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("is_balanced: not an edge");
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
  }
  return true;
}

// Vertices adjacent to all other vertices, ascending.
inline std::vector<VertexId> universal_vertices(const Graph& g) {
  std::vector<VertexId> out;
  int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) out.push_back(v);
  return out;
}

// Vertices (other than the endpoints) adjacent in the underlying graph to
// exactly one endpoint of the arc. The arc has a balancing vertex iff the
// result is a singleton. Throws when the arc is absent.
inline std::vector<VertexId> arc_balancing_candidates(const Pog& h, VertexPair arc) {
  if (!h.has_arc(arc.first, arc.second))
    throw std::invalid_argument("arc_balancing_candidates: arc absent");
  std::vector<VertexId> out;
  for (VertexId w = 0; w < h.vertex_count(); ++w) {
    if (w == arc.first || w == arc.second) continue;
    if (h.adjacent(w, arc.first) != h.adjacent(w, arc.second)) out.push_back(w);
  }
  return out;
}

} // namespace alto
