#pragma once

// Brute-force ground truth, independent of the polynomial engine: exhaustive
// orientation search for completability (acyclic local tournament and plain
// local tournament targets), and exhaustive enumeration of all mixed graphs
// and all minimal obstructions at small orders by canonical augmentation.

#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "alto/iso.hpp"
#include "alto/obstruction.hpp"
#include "alto/pog.hpp"

namespace alto {

inline constexpr int kOracleEdgeCap = 25;

namespace detail {

// Backtracking over edge orientations. A branch dies as soon as a fixed or
// chosen arc pair violates the local tournament condition, or (when
// acyclicity is required) as soon as an arc closes a directed cycle.
class OrientationSearch {
public:
  OrientationSearch(const Pog& h, bool require_acyclic)
      : n_(h.vertex_count()), require_acyclic_(require_acyclic),
        und_(static_cast<std::size_t>(n_) * n_, 0),
        arc_(static_cast<std::size_t>(n_) * n_, 0), edges_(h.edges()) {
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = 0; v < n_; ++v)
        if (h.adjacent(u, v)) und_[idx(u, v)] = 1;
    for (const auto& [t, hd] : h.arcs()) arc_[idx(t, hd)] = 1;
  }

  bool run() {
    // fixed arcs may already be inconsistent
    for (VertexId v = 0; v < n_; ++v)
      for (VertexId a = 0; a < n_; ++a)
        for (VertexId b = a + 1; b < n_; ++b) {
          if (arc_[idx(v, a)] && arc_[idx(v, b)] && !und_[idx(a, b)]) return false;
          if (arc_[idx(a, v)] && arc_[idx(b, v)] && !und_[idx(a, b)]) return false;
        }
    if (require_acyclic_ && has_cycle()) return false;
    return dfs(0);
  }

private:
  std::size_t idx(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }

  bool violates_lt(VertexId t, VertexId h) const {
    for (VertexId w = 0; w < n_; ++w) {
      if (w == t || w == h) continue;
      if (arc_[idx(t, w)] && !und_[idx(h, w)]) return true; // out-neighbourhood of t
      if (arc_[idx(w, h)] && !und_[idx(t, w)]) return true; // in-neighbourhood of h
    }
    return false;
  }

  bool reaches(VertexId from, VertexId to) const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (VertexId u = 0; u < n_; ++u)
        if (arc_[idx(v, u)] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    return false;
  }

  bool has_cycle() const {
    std::vector<int> indeg(n_, 0);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v = 0; v < n_; ++v)
        if (arc_[idx(u, v)]) ++indeg[v];
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n_; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    std::size_t done = 0;
    while (done < queue.size()) {
      VertexId v = queue[done++];
      for (VertexId u = 0; u < n_; ++u)
        if (arc_[idx(v, u)] && --indeg[u] == 0) queue.push_back(u);
    }
    return done < static_cast<std::size_t>(n_);
  }

  bool dfs(std::size_t k) {
    if (k == edges_.size()) return true;
    auto [u, v] = edges_[k];
    for (auto [t, h] : {VertexPair{u, v}, VertexPair{v, u}}) {
      if (violates_lt(t, h)) continue;
      if (require_acyclic_ && reaches(h, t)) continue;
      arc_[idx(t, h)] = 1;
      if (dfs(k + 1)) return true;
      arc_[idx(t, h)] = 0;
    }
    return false;
  }

  int n_;
  bool require_acyclic_;
  std::vector<char> und_, arc_;
  std::vector<VertexPair> edges_;
};

inline void check_oracle_cap(const Pog& h, int cap) {
  if (static_cast<int>(h.edges().size()) > cap)
    throw std::invalid_argument("oracle: edge count " + std::to_string(h.edges().size()) +
                                " exceeds cap " + std::to_string(cap));
}

} // namespace detail

// Some assignment of directions to all edges yields an acyclic local
// tournament. Throws when the edge count exceeds the cap.
inline bool oracle_alt_completable(const Pog& h, int edge_cap = kOracleEdgeCap) {
  detail::check_oracle_cap(h, edge_cap);
  return detail::OrientationSearch(h, true).run();
}

// Some full orientation is a local tournament (acyclicity not required).
inline bool oracle_lt_completable(const Pog& h, int edge_cap = kOracleEdgeCap) {
  detail::check_oracle_cap(h, edge_cap);
  return detail::OrientationSearch(h, false).run();
}

namespace detail {

template <typename Work>
inline void run_partitioned(std::size_t jobs, int threads, Work work) {
  if (threads <= 1 || jobs <= 1) {
    work(0, jobs, 0);
    return;
  }
  int used = std::min<std::size_t>(threads, jobs);
  std::vector<std::thread> pool;
  std::size_t chunk = (jobs + used - 1) / used;
  for (int t = 0; t < used; ++t) {
    std::size_t lo = t * chunk, hi = std::min(jobs, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi, t);
  }
  for (auto& th : pool) th.join();
}

// One canonical augmentation level: every graph on n vertices obtained by
// attaching a new vertex to a parent on n-1 vertices, with `states` choices
// per new pair (2 = plain graphs, 4 = mixed graphs), deduplicated by
// canonical code.
inline std::map<std::string, Pog> augment_level(const std::vector<Pog>& parents, int n,
                                                int states, int threads) {
  std::vector<std::map<std::string, Pog>> partial(std::max(threads, 1));
  run_partitioned(parents.size(), threads, [&](std::size_t lo, std::size_t hi, int slot) {
    auto& local = partial[slot];
    std::uint64_t combos = 1;
    for (int i = 0; i < n - 1; ++i) combos *= states;
    for (std::size_t p = lo; p < hi; ++p) {
      const Pog& parent = parents[p];
      for (std::uint64_t s = 0; s < combos; ++s) {
        std::vector<VertexPair> edges = parent.edges();
        std::vector<VertexPair> arcs = parent.arcs();
        std::uint64_t rest = s;
        for (int i = 0; i < n - 1; ++i, rest /= states) {
          switch (rest % states) {
          case 1: edges.emplace_back(i, n - 1); break;
          case 2: arcs.emplace_back(i, n - 1); break;
          case 3: arcs.emplace_back(n - 1, i); break;
          default: break;
          }
        }
        Pog candidate(n, std::move(edges), std::move(arcs));
        local.emplace(canonical_code(candidate), std::move(candidate));
      }
    }
  });
  std::map<std::string, Pog> merged;
  for (auto& part : partial)
    merged.merge(part);
  return merged;
}

inline std::vector<Pog> enumerate_by_states(int max_n, int states, int threads) {
  std::vector<Pog> all;
  if (max_n < 1) return all;
  std::vector<Pog> level{Pog(1, {}, {})};
  all.push_back(level[0]);
  for (int n = 2; n <= max_n; ++n) {
    auto merged = augment_level(level, n, states, threads);
    level.clear();
    for (auto& [code, g] : merged) {
      (void)code;
      level.push_back(std::move(g));
    }
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

} // namespace detail

// Every partially oriented graph with 1..max_n vertices, one per isomorphism
// class, ordered by vertex count then canonical code.
inline std::vector<Pog> enumerate_pogs(int max_n, int threads = 1) {
  return detail::enumerate_by_states(max_n, 4, threads);
}

// Every plain graph with 1..max_n vertices, one per isomorphism class.
inline std::vector<Graph> enumerate_graphs(int max_n, int threads = 1) {
  std::vector<Graph> out;
  for (auto& p : detail::enumerate_by_states(max_n, 2, threads)) out.push_back(Graph(p));
  return out;
}

struct EnumerationReport {
  int max_n = 0;
  std::vector<int> counts;                // counts[k] = obstructions on k vertices
  std::vector<std::string> codes;         // canonical codes, ordered as representatives
  std::vector<Pog> representatives;       // by vertex count, then code
};

// Exhaustive search for obstructions over all mixed graphs with at most
// max_n vertices, with the brute-force oracle (not the polynomial engine) as
// the completability backend. max_n is capped at 6; 5 is already minutes of
// work, 6 is a long run.
inline EnumerationReport enumerate_obstructions(int max_n, int threads = 1) {
  if (max_n < 0 || max_n > 6)
    throw std::invalid_argument("enumerate_obstructions: max_n must be between 0 and 6");
  EnumerationReport report;
  report.max_n = max_n;
  report.counts.assign(max_n + 1, 0);

  auto pogs = enumerate_pogs(max_n, threads);
  CompletableFn oracle = [](const Pog& g) { return oracle_alt_completable(g); };

  std::vector<std::vector<std::pair<std::string, Pog>>> partial(std::max(threads, 1));
  detail::run_partitioned(pogs.size(), threads, [&](std::size_t lo, std::size_t hi, int slot) {
    for (std::size_t i = lo; i < hi; ++i)
      if (is_obstruction(pogs[i], oracle))
        partial[slot].emplace_back(canonical_code(pogs[i]), pogs[i]);
  });
  std::map<std::string, Pog> found;
  for (auto& part : partial)
    for (auto& [code, g] : part) found.emplace(std::move(code), std::move(g));

  std::vector<std::pair<std::string, Pog>> ordered(std::make_move_iterator(found.begin()),
                                                   std::make_move_iterator(found.end()));
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.second.vertex_count() < b.second.vertex_count();
  });
  for (auto& [code, g] : ordered) {
    ++report.counts[g.vertex_count()];
    report.codes.push_back(std::move(code));
    report.representatives.push_back(std::move(g));
  }
  return report;
}

} // namespace alto
