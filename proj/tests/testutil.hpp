#pragma once

// Shared test helpers. The checkers here are deliberately written as plain
// brute force, independent of the library's algorithms, so the two can
// vouch for each other.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "alto/interval.hpp"
#include "alto/pog.hpp"

namespace testutil {

using alto::Graph;
using alto::PairState;
using alto::Pog;
using alto::VertexId;
using alto::VertexPair;

// O(n!) mixed-graph isomorphism by trying every permutation.
inline bool brute_force_isomorphic(const Pog& a, const Pog& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.state(u, v) != b.state(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

// All 4^(n choose 2) labeled mixed graphs on n vertices. Only sensible for
// n <= 4 or so.
inline std::vector<Pog> all_labeled_pogs(int n) {
  std::vector<VertexPair> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Pog> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= 4;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<VertexPair> edges, arcs;
    std::uint64_t rest = s;
    for (const auto& [u, v] : slots) {
      switch (rest % 4) {
      case 1: edges.emplace_back(u, v); break;
      case 2: arcs.emplace_back(u, v); break;
      case 3: arcs.emplace_back(v, u); break;
      default: break;
      }
      rest /= 4;
    }
    out.emplace_back(n, std::move(edges), std::move(arcs));
  }
  return out;
}

// All 2^m orientations of a graph's edges applied on top of existing arcs.
template <typename Fn> inline void for_each_full_orientation(const Pog& h, Fn fn) {
  const auto& edges = h.edges();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < edges.size(); ++i) total *= 2;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<VertexPair> arcs = h.arcs();
    for (std::size_t i = 0; i < edges.size(); ++i)
      arcs.push_back((s >> i) & 1 ? VertexPair{edges[i].second, edges[i].first} : edges[i]);
    fn(Pog(h.vertex_count(), {}, std::move(arcs)));
  }
}

// Uniform over all labeled mixed graphs on n vertices (every pair takes one
// of the four states with equal probability).
inline Pog random_pog(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> state(0, 3);
  std::vector<VertexPair> edges, arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      switch (state(rng)) {
      case 1: edges.emplace_back(u, v); break;
      case 2: arcs.emplace_back(u, v); break;
      case 3: arcs.emplace_back(v, u); break;
      default: break;
      }
  return Pog(n, std::move(edges), std::move(arcs));
}

// Random connected-ish proper interval graph from a random staircase of
// rightmost neighbours under the identity order.
inline Graph random_proper_interval_graph(std::mt19937_64& rng, int n) {
  std::vector<int> reach(n);
  std::uniform_int_distribution<int> step(0, 2);
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    prev = std::max({prev, i, std::min(n - 1, i + step(rng))});
    reach[i] = prev;
  }
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= reach[i]; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

// Relabels vertices by a random permutation.
inline Pog shuffled(std::mt19937_64& rng, const Pog& h) {
  int n = h.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexPair> edges, arcs;
  for (const auto& [u, v] : h.edges())
    edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  for (const auto& [t, hd] : h.arcs()) arcs.emplace_back(perm[t], perm[hd]);
  return Pog(n, std::move(edges), std::move(arcs));
}

// Completable by construction: orient a random proper interval graph along
// its staircase order, then forget a random subset of the arcs, then
// relabel.
inline Pog random_planted_completable(std::mt19937_64& rng, int n) {
  Graph g = random_proper_interval_graph(rng, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<VertexPair> edges, arcs;
  for (const auto& [u, v] : g.edges())
    (coin(rng) ? arcs : edges).emplace_back(u, v);
  return shuffled(rng, Pog(n, std::move(edges), std::move(arcs)));
}

// Definition-based critical containment: sub is obtained from h by keeping
// exactly the vertices `kept` (in order), then possibly replacing arcs by
// edges.
inline bool critically_contained_via(const Pog& h, const Pog& sub,
                                     const std::vector<VertexId>& kept) {
  if (static_cast<int>(kept.size()) != sub.vertex_count()) return false;
  for (int i = 0; i < sub.vertex_count(); ++i)
    for (int j = 0; j < sub.vertex_count(); ++j) {
      if (i == j) continue;
      PairState inner = sub.state(i, j);
      PairState outer = h.state(kept[i], kept[j]);
      if (inner == PairState::None && outer != PairState::None) return false;
      if (inner == PairState::Edge && outer == PairState::None) return false;
      if ((inner == PairState::ArcOut || inner == PairState::ArcIn) && inner != outer)
        return false;
    }
  return true;
}

// Independent forbidden-subgraph search: some subset induces a claw, net,
// tent, or chordless cycle of length >= 4.
inline bool has_wegner_obstacle(const Graph& g) {
  int n = g.vertex_count();
  Pog claw = alto::detail::pattern_claw().as_pog();
  Pog net = alto::detail::pattern_net().as_pog();
  Pog tent = alto::detail::pattern_tent().as_pog();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (vs.size() < 4) continue;
    Graph sub = induced(g, vs);
    int k = sub.vertex_count();
    if (k == 4 && brute_force_isomorphic(sub.as_pog(), claw)) return true;
    if (k == 6 && brute_force_isomorphic(sub.as_pog(), net)) return true;
    if (k == 6 && brute_force_isomorphic(sub.as_pog(), tent)) return true;
    // chordless cycle: connected and 2-regular
    bool cyclic = static_cast<int>(sub.edges().size()) == k;
    for (int v = 0; v < k && cyclic; ++v)
      if (sub.degree(v) != 2) cyclic = false;
    if (cyclic && alto::components(sub).size() == 1) return true;
  }
  return false;
}

} // namespace testutil
