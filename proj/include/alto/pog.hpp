#pragma once

// Mixed-graph data model: a partially oriented graph on dense vertices
// 0..n-1 with a set of undirected edges and a set of directed arcs. A pair
// of vertices carries at most one role (edge, arc, or arc in the opposite
// direction); digons are rejected. All values are immutable after
// construction, so they can be shared freely between threads.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alto {

using VertexId = int;

// (u, v) with u < v when used as an edge, (tail, head) when used as an arc.
using VertexPair = std::pair<VertexId, VertexId>;

enum class PairState : std::uint8_t {
  None = 0,   // not adjacent
  Edge = 1,   // undirected edge
  ArcOut = 2, // arc row -> col
  ArcIn = 3,  // arc col -> row
};

namespace detail {

inline PairState flipped(PairState s) {
  switch (s) {
  case PairState::ArcOut: return PairState::ArcIn;
  case PairState::ArcIn: return PairState::ArcOut;
  default: return s;
  }
}

inline void check_vertex_range(VertexId v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw std::out_of_range(std::string(what) + ": vertex " +
                            std::to_string(v) + " out of range for n = " +
                            std::to_string(n));
}

} // namespace detail

class Graph;

class Pog {
public:
  Pog() = default;

  // Validates and normalizes: edges are stored with u < v, both lists are
  // sorted and deduplicated. Throws std::invalid_argument on self-loops,
  // digons and pairs that appear both as an edge and as an arc, and
  // std::out_of_range on bad vertex indices.
  Pog(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs)
      : n_(n), st_(static_cast<std::size_t>(n) * n, PairState::None) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
      detail::check_vertex_range(u, n_, "edge");
      detail::check_vertex_range(v, n_, "edge");
      if (u == v) throw std::invalid_argument("self-loop edge at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      PairState cur = state(u, v);
      if (cur == PairState::None) {
        set_state(u, v, PairState::Edge);
      } else if (cur != PairState::Edge) {
        throw std::invalid_argument("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} is both an edge and an arc");
      }
    }
    for (const auto& [t, h] : arcs) {
      detail::check_vertex_range(t, n_, "arc");
      detail::check_vertex_range(h, n_, "arc");
      if (t == h) throw std::invalid_argument("self-loop arc at vertex " + std::to_string(t));
      PairState cur = state(t, h);
      if (cur == PairState::None) {
        set_state(t, h, PairState::ArcOut);
      } else if (cur == PairState::Edge) {
        throw std::invalid_argument("pair {" + std::to_string(t) + "," + std::to_string(h) +
                                    "} is both an edge and an arc");
      } else if (cur == PairState::ArcIn) {
        throw std::invalid_argument("both arc directions present between " +
                                    std::to_string(t) + " and " + std::to_string(h));
      } // ArcOut: duplicate arc, keep
    }
    rebuild_lists();
  }

  // Builds from a full pairwise state matrix (row-major, st[u*n+v] giving the
  // state of (u, v)). Only the upper triangle is read.
  static Pog from_matrix(int n, const std::vector<PairState>& st) {
    std::vector<VertexPair> edges, arcs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        switch (st[static_cast<std::size_t>(u) * n + v]) {
        case PairState::Edge: edges.emplace_back(u, v); break;
        case PairState::ArcOut: arcs.emplace_back(u, v); break;
        case PairState::ArcIn: arcs.emplace_back(v, u); break;
        case PairState::None: break;
        }
    return Pog(n, std::move(edges), std::move(arcs));
  }

  int vertex_count() const { return n_; }
  const std::vector<VertexPair>& edges() const { return edges_; }
  const std::vector<VertexPair>& arcs() const { return arcs_; }

  PairState state(VertexId u, VertexId v) const {
    return st_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool has_edge(VertexId u, VertexId v) const { return state(u, v) == PairState::Edge; }
  bool has_arc(VertexId tail, VertexId head) const { return state(tail, head) == PairState::ArcOut; }
  bool adjacent(VertexId u, VertexId v) const { return u != v && state(u, v) != PairState::None; }

  // Underlying-graph neighbours, ascending.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u)
      if (adjacent(v, u)) out.push_back(u);
    return out;
  }
  std::vector<VertexId> out_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u)
      if (has_arc(v, u)) out.push_back(u);
    return out;
  }
  std::vector<VertexId> in_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < n_; ++u)
      if (has_arc(u, v)) out.push_back(u);
    return out;
  }

  friend bool operator==(const Pog& a, const Pog& b) {
    return a.n_ == b.n_ && a.st_ == b.st_;
  }
  friend bool operator!=(const Pog& a, const Pog& b) { return !(a == b); }

private:
  void set_state(VertexId u, VertexId v, PairState s) {
    st_[static_cast<std::size_t>(u) * n_ + v] = s;
    st_[static_cast<std::size_t>(v) * n_ + u] = detail::flipped(s);
  }
  void rebuild_lists() {
    edges_.clear();
    arcs_.clear();
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = 0; v < n_; ++v) {
        PairState s = state(u, v);
        if (s == PairState::Edge && u < v) edges_.emplace_back(u, v);
        if (s == PairState::ArcOut) arcs_.emplace_back(u, v);
      }
  }

  int n_ = 0;
  std::vector<PairState> st_;
  std::vector<VertexPair> edges_; // u < v, lex sorted
  std::vector<VertexPair> arcs_;  // (tail, head), lex sorted
};

// Plain undirected graph; interchangeable with an arc-free Pog.
class Graph {
public:
  Graph() = default;
  Graph(int n, std::vector<VertexPair> edges) : Graph(Pog(n, std::move(edges), {})) {}
  explicit Graph(const Pog& arcless) : pog_(arcless) {
    if (!pog_.arcs().empty())
      throw std::invalid_argument("graph constructed from a Pog with arcs");
  }

  int vertex_count() const { return pog_.vertex_count(); }
  const std::vector<VertexPair>& edges() const { return pog_.edges(); }
  bool has_edge(VertexId u, VertexId v) const { return pog_.has_edge(u, v); }
  std::vector<VertexId> neighbors(VertexId v) const { return pog_.neighbors(v); }
  int degree(VertexId v) const {
    int d = 0;
    for (VertexId u = 0; u < vertex_count(); ++u)
      if (has_edge(v, u)) ++d;
    return d;
  }
  const Pog& as_pog() const { return pog_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.pog_ == b.pog_; }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
  Pog pog_;
};

inline Pog make_pog(int n, std::vector<VertexPair> edges, std::vector<VertexPair> arcs) {
  return Pog(n, std::move(edges), std::move(arcs));
}

// Every arc replaced by its unordered pair; edges kept.
inline Graph underlying(const Pog& h) {
  std::vector<VertexPair> edges = h.edges();
  for (const auto& [t, hd] : h.arcs())
    edges.emplace_back(std::min(t, hd), std::max(t, hd));
  return Graph(h.vertex_count(), std::move(edges));
}

// Edges unchanged, every arc reversed.
inline Pog dual(const Pog& h) {
  std::vector<VertexPair> arcs;
  arcs.reserve(h.arcs().size());
  for (const auto& [t, hd] : h.arcs()) arcs.emplace_back(hd, t);
  return Pog(h.vertex_count(), h.edges(), std::move(arcs));
}

// Removes v with all incident edges and arcs; vertices above v shift down.
inline Pog delete_vertex(const Pog& h, VertexId v) {
  detail::check_vertex_range(v, h.vertex_count(), "delete_vertex");
  auto shift = [v](VertexId u) { return u > v ? u - 1 : u; };
  std::vector<VertexPair> edges, arcs;
  for (const auto& [a, b] : h.edges())
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  for (const auto& [t, hd] : h.arcs())
    if (t != v && hd != v) arcs.emplace_back(shift(t), shift(hd));
  return Pog(h.vertex_count() - 1, std::move(edges), std::move(arcs));
}

// Replaces the arc with the corresponding undirected edge.
inline Pog relax_arc(const Pog& h, VertexPair arc) {
  if (!h.has_arc(arc.first, arc.second))
    throw std::invalid_argument("relax_arc: arc (" + std::to_string(arc.first) + "," +
                                std::to_string(arc.second) + ") absent");
  std::vector<VertexPair> edges = h.edges();
  edges.emplace_back(std::min(arc.first, arc.second), std::max(arc.first, arc.second));
  std::vector<VertexPair> arcs;
  for (const auto& a : h.arcs())
    if (a != arc) arcs.push_back(a);
  return Pog(h.vertex_count(), std::move(edges), std::move(arcs));
}

// Subgraph induced by `vertices` (must be distinct and in range), relabelled
// to 0..k-1 in the given order.
inline Pog induced(const Pog& h, const std::vector<VertexId>& vertices) {
  int k = static_cast<int>(vertices.size());
  std::vector<int> where(h.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    detail::check_vertex_range(vertices[i], h.vertex_count(), "induced");
    if (where[vertices[i]] != -1) throw std::invalid_argument("induced: repeated vertex");
    where[vertices[i]] = i;
  }
  std::vector<VertexPair> edges, arcs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      switch (h.state(vertices[i], vertices[j])) {
      case PairState::Edge: edges.emplace_back(i, j); break;
      case PairState::ArcOut: arcs.emplace_back(i, j); break;
      case PairState::ArcIn: arcs.emplace_back(j, i); break;
      case PairState::None: break;
      }
  return Pog(k, std::move(edges), std::move(arcs));
}

inline Graph induced(const Graph& g, const std::vector<VertexId>& vertices) {
  return Graph(induced(g.as_pog(), vertices));
}

// Vertex sets of connected components of the underlying graph, each sorted,
// ordered by smallest member.
inline std::vector<std::vector<VertexId>> components(const Pog& h) {
  int n = h.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (VertexId u = 0; u < n; ++u)
        if (h.adjacent(v, u) && comp[u] == -1) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline std::vector<std::vector<VertexId>> components(const Graph& g) {
  return components(g.as_pog());
}

namespace detail {

// Topological order of the arcs of h (edges ignored); empty optional when the
// arcs contain a directed cycle.
inline bool arc_topological_order(const Pog& h, std::vector<VertexId>* order) {
  int n = h.vertex_count();
  std::vector<int> indeg(n, 0);
  for (const auto& [t, hd] : h.arcs()) {
    (void)t;
    ++indeg[hd];
  }
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<VertexId> result;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId v = queue[i];
    result.push_back(v);
    for (VertexId u = 0; u < n; ++u)
      if (h.has_arc(v, u) && --indeg[u] == 0) queue.push_back(u);
  }
  if (static_cast<int>(result.size()) != n) return false;
  if (order) *order = std::move(result);
  return true;
}

// Some directed cycle among the arcs of h, as a vertex sequence
// v0 v1 ... vk-1 with arcs (vi, vi+1) and (vk-1, v0). Empty if acyclic.
inline std::vector<VertexId> find_directed_cycle(const Pog& h) {
  int n = h.vertex_count();
  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> mark(n, 0);
  std::vector<VertexId> path;
  std::vector<VertexId> cycle;

  auto dfs = [&](auto&& self, VertexId v) -> bool {
    mark[v] = 1;
    path.push_back(v);
    for (VertexId u = 0; u < n; ++u) {
      if (!h.has_arc(v, u)) continue;
      if (mark[u] == 1) {
        auto it = std::find(path.begin(), path.end(), u);
        cycle.assign(it, path.end());
        return true;
      }
      if (mark[u] == 0 && self(self, u)) return true;
    }
    path.pop_back();
    mark[v] = 2;
    return false;
  };

  for (VertexId v = 0; v < n; ++v)
    if (mark[v] == 0 && dfs(dfs, v)) break;
  return cycle;
}

// Local tournament condition alone: no edges, and every in- and
// out-neighbourhood is pairwise adjacent. Acyclicity not required.
inline bool is_local_tournament(const Pog& d) {
  if (!d.edges().empty()) return false;
  int n = d.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    auto outs = d.out_neighbors(v);
    for (std::size_t i = 0; i < outs.size(); ++i)
      for (std::size_t j = i + 1; j < outs.size(); ++j)
        if (!d.adjacent(outs[i], outs[j])) return false;
    auto ins = d.in_neighbors(v);
    for (std::size_t i = 0; i < ins.size(); ++i)
      for (std::size_t j = i + 1; j < ins.size(); ++j)
        if (!d.adjacent(ins[i], ins[j])) return false;
  }
  return true;
}

} // namespace detail

// True iff the graph is fully oriented, the orientation has no directed
// cycle, and every in- and out-neighbourhood induces a tournament.
inline bool is_acyclic_local_tournament(const Pog& d) {
  return detail::is_local_tournament(d) && detail::arc_topological_order(d, nullptr);
}

} // namespace alto
