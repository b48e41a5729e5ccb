#pragma once

// Mixed-graph isomorphism and canonical coding. Both are exact and intended
// for small graphs (catalog scale, n up to ~12): colour refinement narrows
// the search, backtracking finishes it. No sub-exponential guarantee.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "alto/pog.hpp"

namespace alto {

// A vertex bijection witnessing mixed-graph isomorphism: edges map to edges,
// arcs map to arcs preserving direction. map[v of a] = vertex of b.
struct IsoMapping {
  std::vector<VertexId> map;
};

namespace detail {

// Iterated colour refinement over one or two graphs at once. Colours are
// ranks of exact signature values (no hashing), so equal colours mean equal
// signatures across all participating graphs.
inline std::vector<std::vector<int>> refine_colors(const std::vector<const Pog*>& graphs) {
  std::vector<std::vector<int>> colors(graphs.size());
  // signature: per vertex, (edge degree, out degree, in degree)
  {
    std::vector<std::array<int, 3>> keys;
    for (const Pog* g : graphs) {
      int n = g->vertex_count();
      for (VertexId v = 0; v < n; ++v) {
        std::array<int, 3> k{0, 0, 0};
        for (VertexId u = 0; u < n; ++u)
          switch (g->state(v, u)) {
          case PairState::Edge: ++k[0]; break;
          case PairState::ArcOut: ++k[1]; break;
          case PairState::ArcIn: ++k[2]; break;
          default: break;
          }
        keys.push_back(k);
      }
    }
    std::vector<std::array<int, 3>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t at = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      int n = graphs[gi]->vertex_count();
      for (int v = 0; v < n; ++v, ++at)
        colors[gi].push_back(static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[at]) - sorted.begin()));
    }
  }

  // refine until the number of colour classes stabilizes
  using Key = std::pair<int, std::vector<std::pair<int, int>>>; // (own colour, sorted (rel, nbr colour))
  std::size_t prev_classes = 0;
  for (;;) {
    std::vector<Key> keys;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Pog& g = *graphs[gi];
      int n = g.vertex_count();
      for (VertexId v = 0; v < n; ++v) {
        Key k{colors[gi][v], {}};
        for (VertexId u = 0; u < n; ++u) {
          PairState s = g.state(v, u);
          if (s != PairState::None)
            k.second.emplace_back(static_cast<int>(s), colors[gi][u]);
        }
        std::sort(k.second.begin(), k.second.end());
        keys.push_back(std::move(k));
      }
    }
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t at = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      int n = graphs[gi]->vertex_count();
      for (int v = 0; v < n; ++v, ++at)
        colors[gi][v] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), keys[at]) - sorted.begin());
    }
    if (sorted.size() == prev_classes) break;
    prev_classes = sorted.size();
  }
  return colors;
}

} // namespace detail

// A mapping witnessing mixed-graph isomorphism, or nullopt.
inline std::optional<IsoMapping> mixed_isomorphic(const Pog& a, const Pog& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count()) return std::nullopt;
  if (a.edges().size() != b.edges().size() || a.arcs().size() != b.arcs().size())
    return std::nullopt;
  if (n == 0) return IsoMapping{{}};

  auto colors = detail::refine_colors({&a, &b});
  {
    std::vector<int> ha = colors[0], hb = colors[1];
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }

  std::vector<VertexId> map(n, -1);
  std::vector<bool> used(n, false);
  // most-constrained first: order a's vertices by colour class size
  std::vector<int> class_size(n + 1, 0);
  for (int c : colors[0]) ++class_size[c];
  std::vector<VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    if (class_size[colors[0][x]] != class_size[colors[0][y]])
      return class_size[colors[0][x]] < class_size[colors[0][y]];
    return x < y;
  });

  auto dfs = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    VertexId v = order[k];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || colors[1][w] != colors[0][v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        VertexId pv = order[j];
        if (a.state(v, pv) != b.state(w, map[pv])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, k + 1)) return true;
      map[v] = -1;
      used[w] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return IsoMapping{std::move(map)};
}

inline std::optional<IsoMapping> mixed_isomorphic(const Graph& a, const Graph& b) {
  return mixed_isomorphic(a.as_pog(), b.as_pog());
}

// Canonical form: the lexicographically smallest pairwise-state string over
// all vertex orderings that respect the refinement colour classes. Equal
// codes iff the graphs are mixed-isomorphic. Printable: "n:" followed by one
// character in '0'..'3' per ordered position pair (column-major upper
// triangle).
inline std::string canonical_code(const Pog& g) {
  int n = g.vertex_count();
  std::string header = std::to_string(n) + ":";
  if (n == 0) return header;

  auto colors = detail::refine_colors({&g})[0];

  // positions are filled in nondecreasing colour order
  std::vector<VertexId> by_color(n);
  for (int i = 0; i < n; ++i) by_color[i] = i;
  std::stable_sort(by_color.begin(), by_color.end(),
                   [&](VertexId x, VertexId y) { return colors[x] < colors[y]; });
  std::vector<int> pos_color(n);
  for (int i = 0; i < n; ++i) pos_color[i] = colors[by_color[i]];

  const std::size_t body_len = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string best;
  std::string cur(body_len, '\0');
  std::vector<VertexId> perm(n, -1);
  std::vector<bool> used(n, false);

  // cur is filled column by column: placing a vertex at position k appends
  // its states against positions 0..k-1
  auto dfs = [&](auto&& self, int k, std::size_t len) -> void {
    if (k == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (used[v] || colors[v] != pos_color[k]) continue;
      std::size_t l = len;
      bool viable = true;
      for (int i = 0; i < k; ++i, ++l) {
        cur[l] = static_cast<char>('0' + static_cast<int>(g.state(perm[i], v)));
        if (!best.empty() && cur[l] > best[l]) { viable = false; break; }
        if (!best.empty() && cur[l] < best[l]) {
          // strictly better prefix: fill the rest of the column unchecked
          for (++i, ++l; i < k; ++i, ++l)
            cur[l] = static_cast<char>('0' + static_cast<int>(g.state(perm[i], v)));
          best.clear(); // everything found so far is beaten
          break;
        }
      }
      if (!viable) continue;
      perm[k] = v;
      used[v] = true;
      self(self, k + 1, len + k);
      used[v] = false;
    }
  };
  dfs(dfs, 0, 0);
  return header + best;
}

inline std::string canonical_code(const Graph& g) { return canonical_code(g.as_pog()); }

} // namespace alto
