#pragma once

// Proper interval recognition through straight enumerations. A straight
// enumeration is a vertex order with the umbrella property: u < v < w and
// uw an edge force uv and vw to be edges; equivalently every closed
// neighbourhood occupies a contiguous range of positions.
//
// The builder reduces the graph by twin classes (equal closed
// neighbourhoods), orders each connected component of the reduced graph by
// three lexicographic breadth-first sweeps (each sweep breaking ties by the
// previous one), expands twin classes contiguously, and verifies the result
// with the O(n+m) umbrella check before returning it. When recognition
// fails, wegner_witness produces an induced claw, net, tent, or chordless
// cycle of length at least four.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "alto/iso.hpp"
#include "alto/pog.hpp"

namespace alto {

struct StraightEnumeration {
  std::vector<VertexId> order; // order[i] = vertex at position i

  friend bool operator==(const StraightEnumeration& a, const StraightEnumeration& b) {
    return a.order == b.order;
  }
};

struct WegnerWitness {
  enum class Kind { Cycle, Tent, Claw, Net };
  Kind kind;
  std::vector<VertexId> vertices; // sorted; induces the named graph
};

namespace detail {

// Contiguity of every closed neighbourhood under pos[].
inline bool umbrella_on_positions(const Graph& g, const std::vector<int>& pos) {
  int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    int lo = pos[v], hi = pos[v], deg = 0;
    for (VertexId u = 0; u < n; ++u)
      if (g.has_edge(v, u)) {
        ++deg;
        lo = std::min(lo, pos[u]);
        hi = std::max(hi, pos[u]);
      }
    if (hi - lo != deg) return false;
  }
  return true;
}

} // namespace detail

// True iff `order` has the umbrella property on g. Throws on input that is
// not a permutation of the vertices.
inline bool umbrella_holds(const Graph& g, const StraightEnumeration& order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.order.size()) != n)
    throw std::invalid_argument("umbrella_holds: order size mismatch");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = order.order[i];
    detail::check_vertex_range(v, n, "umbrella_holds");
    if (pos[v] != -1) throw std::invalid_argument("umbrella_holds: repeated vertex in order");
    pos[v] = i;
  }
  return detail::umbrella_on_positions(g, pos);
}

namespace detail {

// Twin classes (equal closed neighbourhoods), sorted by smallest member.
inline std::vector<std::vector<VertexId>> twin_classes(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<VertexId>> classes;
  std::vector<int> cls(n, -1);
  auto closed_equal = [&](VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) return false;
    for (VertexId w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.has_edge(u, w) != g.has_edge(v, w)) return false;
    }
    return true;
  };
  for (VertexId v = 0; v < n; ++v) {
    if (cls[v] != -1) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({v});
    cls[v] = id;
    for (VertexId u = v + 1; u < n; ++u)
      if (cls[u] == -1 && closed_equal(v, u)) {
        classes[id].push_back(u);
        cls[u] = id;
      }
  }
  return classes;
}

// Lexicographic BFS restricted to `nodes`; ties (equal labels) are broken by
// the largest prio value. Returns visit order.
inline std::vector<int> lbfs(const std::vector<std::vector<char>>& adj,
                             const std::vector<int>& nodes, const std::vector<int>& prio) {
  int m = static_cast<int>(adj.size());
  std::vector<std::vector<int>> label(m);
  std::vector<char> visited(m, 0), eligible(m, 0);
  for (int v : nodes) eligible[v] = 1;
  std::vector<int> order;
  for (std::size_t step = 0; step < nodes.size(); ++step) {
    int pick = -1;
    for (int v : nodes) {
      if (visited[v]) continue;
      if (pick == -1 || label[v] > label[pick] ||
          (label[v] == label[pick] && prio[v] > prio[pick]))
        pick = v;
    }
    visited[pick] = 1;
    order.push_back(pick);
    int stamp = static_cast<int>(nodes.size() - step);
    for (int u = 0; u < m; ++u)
      if (eligible[u] && !visited[u] && adj[pick][u]) label[u].push_back(stamp);
  }
  return order;
}

} // namespace detail

// A straight enumeration of g, or nullopt when g is not a proper interval
// graph. Components are laid out consecutively in order of their smallest
// vertex; equivalent orders are tie-broken towards the lowest original
// indices. The returned order always passes umbrella_holds.
inline std::optional<StraightEnumeration> straight_enumeration(const Graph& g) {
  int n = g.vertex_count();
  auto classes = detail::twin_classes(g);
  int m = static_cast<int>(classes.size());

  // reduced graph on twin classes
  std::vector<std::vector<char>> radj(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (g.has_edge(classes[a][0], classes[b][0])) radj[a][b] = radj[b][a] = 1;

  // reduced components, ordered by smallest original vertex
  std::vector<int> rcomp(m, -1);
  std::vector<std::vector<int>> rcomps;
  for (int s = 0; s < m; ++s) {
    if (rcomp[s] != -1) continue;
    int id = static_cast<int>(rcomps.size());
    rcomps.emplace_back();
    std::vector<int> stack{s};
    rcomp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      rcomps[id].push_back(v);
      for (int u = 0; u < m; ++u)
        if (radj[v][u] && rcomp[u] == -1) {
          rcomp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(rcomps[id].begin(), rcomps[id].end());
  }

  StraightEnumeration result;
  result.order.reserve(n);
  for (const auto& nodes : rcomps) {
    // three LBFS sweeps; the final one is straight iff the component is a
    // proper interval graph
    std::vector<int> prio(m, 0);
    for (int v : nodes) prio[v] = m - classes[v][0]; // lowest original index first
    auto sweep = detail::lbfs(radj, nodes, prio);
    for (int rep = 0; rep < 2; ++rep) {
      for (std::size_t i = 0; i < sweep.size(); ++i) prio[sweep[i]] = static_cast<int>(i);
      sweep = detail::lbfs(radj, nodes, prio);
    }

    std::vector<int> rpos(m, -1);
    for (std::size_t i = 0; i < sweep.size(); ++i) rpos[sweep[i]] = static_cast<int>(i);
    for (int v : nodes) {
      int lo = rpos[v], hi = rpos[v], deg = 0;
      for (int u : nodes)
        if (radj[v][u]) {
          ++deg;
          lo = std::min(lo, rpos[u]);
          hi = std::max(hi, rpos[u]);
        }
      if (hi - lo != deg) return std::nullopt;
    }

    std::vector<VertexId> block;
    for (int cls : sweep)
      for (VertexId v : classes[cls]) block.push_back(v);
    std::vector<VertexId> rev(block.rbegin(), block.rend());
    if (rev < block) block = std::move(rev);
    result.order.insert(result.order.end(), block.begin(), block.end());
  }

  if (!umbrella_holds(g, result)) return std::nullopt;
  return result;
}

namespace detail {

inline Graph pattern_claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph pattern_net() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph pattern_tent() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

inline std::optional<std::vector<VertexId>> find_claw(const Graph& g) {
  int n = g.vertex_count();
  for (VertexId c = 0; c < n; ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (g.has_edge(nb[i], nb[k]) || g.has_edge(nb[j], nb[k])) continue;
          std::vector<VertexId> vs{c, nb[i], nb[j], nb[k]};
          std::sort(vs.begin(), vs.end());
          return vs;
        }
      }
  }
  return std::nullopt;
}

template <typename Fn> inline void for_each_triangle(const Graph& g, Fn fn) {
  int n = g.vertex_count();
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (VertexId c = b + 1; c < n; ++c)
        if (g.has_edge(a, c) && g.has_edge(b, c)) fn(a, b, c);
    }
}

inline std::optional<std::vector<VertexId>> find_net(const Graph& g) {
  int n = g.vertex_count();
  std::optional<std::vector<VertexId>> found;
  for_each_triangle(g, [&](VertexId a, VertexId b, VertexId c) {
    if (found) return;
    auto pendant_of = [&](VertexId at, VertexId o1, VertexId o2, VertexId skip1, VertexId skip2) {
      std::vector<VertexId> out;
      for (VertexId x = 0; x < n; ++x) {
        if (x == a || x == b || x == c || x == skip1 || x == skip2) continue;
        if (g.has_edge(x, at) && !g.has_edge(x, o1) && !g.has_edge(x, o2)) out.push_back(x);
      }
      return out;
    };
    for (VertexId pa : pendant_of(a, b, c, -1, -1)) {
      for (VertexId pb : pendant_of(b, a, c, pa, -1)) {
        if (g.has_edge(pa, pb)) continue;
        for (VertexId pc : pendant_of(c, a, b, pa, pb)) {
          if (g.has_edge(pa, pc) || g.has_edge(pb, pc)) continue;
          std::vector<VertexId> vs{a, b, c, pa, pb, pc};
          std::sort(vs.begin(), vs.end());
          found = vs;
          return;
        }
      }
      if (found) return;
    }
  });
  return found;
}

inline std::optional<std::vector<VertexId>> find_tent(const Graph& g) {
  int n = g.vertex_count();
  std::optional<std::vector<VertexId>> found;
  for_each_triangle(g, [&](VertexId a, VertexId b, VertexId c) {
    if (found) return;
    auto outer = [&](VertexId p, VertexId q, VertexId miss) {
      std::vector<VertexId> out;
      for (VertexId x = 0; x < n; ++x) {
        if (x == a || x == b || x == c) continue;
        if (g.has_edge(x, p) && g.has_edge(x, q) && !g.has_edge(x, miss)) out.push_back(x);
      }
      return out;
    };
    for (VertexId x : outer(a, b, c))
      for (VertexId y : outer(b, c, a)) {
        if (y == x || g.has_edge(x, y)) continue;
        for (VertexId z : outer(a, c, b)) {
          if (z == x || z == y || g.has_edge(x, z) || g.has_edge(y, z)) continue;
          std::vector<VertexId> vs{a, b, c, x, y, z};
          std::sort(vs.begin(), vs.end());
          found = vs;
          return;
        }
        if (found) return;
      }
  });
  return found;
}

// Shortest induced cycle of length >= 4, as a sorted vertex set. For each
// edge uv, a shortest u-v path avoiding uv's common neighbours closes into a
// chordless cycle; the minimum over all edges is returned.
inline std::optional<std::vector<VertexId>> find_long_induced_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::optional<std::vector<VertexId>> best;
  for (const auto& [u, v] : g.edges()) {
    std::vector<char> blocked(n, 0);
    for (VertexId w = 0; w < n; ++w)
      if (w != u && w != v && g.has_edge(w, u) && g.has_edge(w, v)) blocked[w] = 1;
    // BFS from u to v, not using the edge uv itself
    std::vector<int> parent(n, -2);
    std::vector<VertexId> queue{u};
    parent[u] = -1;
    for (std::size_t qi = 0; qi < queue.size() && parent[v] == -2; ++qi) {
      VertexId x = queue[qi];
      for (VertexId y = 0; y < n; ++y) {
        if (parent[y] != -2 || blocked[y] || !g.has_edge(x, y)) continue;
        if (x == u && y == v) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[v] == -2) continue;
    std::vector<VertexId> cyc;
    for (VertexId x = v; x != -1; x = parent[x]) cyc.push_back(x);
    if (cyc.size() < 4) continue; // common neighbours removed, so unreachable
    if (!best || cyc.size() < best->size()) {
      std::sort(cyc.begin(), cyc.end());
      best = cyc;
    }
  }
  return best;
}

} // namespace detail

// Re-check that the witness set induces what its kind claims.
inline bool verify_wegner_witness(const Graph& g, const WegnerWitness& w) {
  for (VertexId v : w.vertices)
    if (v < 0 || v >= g.vertex_count()) return false;
  {
    auto s = w.vertices;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  Graph sub = induced(g, w.vertices);
  switch (w.kind) {
  case WegnerWitness::Kind::Claw:
    return sub.vertex_count() == 4 && mixed_isomorphic(sub, detail::pattern_claw()).has_value();
  case WegnerWitness::Kind::Net:
    return sub.vertex_count() == 6 && mixed_isomorphic(sub, detail::pattern_net()).has_value();
  case WegnerWitness::Kind::Tent:
    return sub.vertex_count() == 6 && mixed_isomorphic(sub, detail::pattern_tent()).has_value();
  case WegnerWitness::Kind::Cycle: {
    int k = sub.vertex_count();
    if (k < 4) return false;
    if (static_cast<int>(sub.edges().size()) != k) return false;
    for (VertexId v = 0; v < k; ++v)
      if (sub.degree(v) != 2) return false;
    return components(sub).size() == 1;
  }
  }
  return false;
}

// An induced claw, net, tent, or chordless cycle of length >= 4. Throws
// std::invalid_argument when g is a proper interval graph (no witness
// exists).
inline WegnerWitness wegner_witness(const Graph& g) {
  if (auto vs = detail::find_claw(g)) return {WegnerWitness::Kind::Claw, *vs};
  if (auto vs = detail::find_net(g)) return {WegnerWitness::Kind::Net, *vs};
  if (auto vs = detail::find_tent(g)) return {WegnerWitness::Kind::Tent, *vs};
  if (auto vs = detail::find_long_induced_cycle(g)) return {WegnerWitness::Kind::Cycle, *vs};
  throw std::invalid_argument("wegner_witness: graph is a proper interval graph");
}

} // namespace alto
