#pragma once

// Decides whether a partially oriented graph extends to an acyclic local
// tournament, and builds either the completed orientation or one of three
// refutation certificates:
//
//   NotProperInterval   the underlying graph fails recognition (witness);
//   DirectedCycle       the given arcs already contain a directed cycle;
//   OpposingUnbalancedArcs  some component carries a positive and a
//                           negative unbalanced arc in a straight
//                           enumeration, which no orientation of the
//                           remaining edges can reconcile.
//
// Checks run in that order; the sign test presupposes the first two. The
// sign test and the constructive completion are applied per connected
// component, since each component's enumeration can be reversed
// independently.

#include <stdexcept>
#include <variant>
#include <vector>

#include "alto/implication.hpp"
#include "alto/interval.hpp"
#include "alto/pog.hpp"

namespace alto {

struct ArcSign {
  VertexPair arc;
  bool positive; // tail precedes head in the stored enumeration
  bool balanced; // the arc's underlying edge is balanced
};

struct Completed {
  Pog orientation;
};
struct NotProperInterval {
  WegnerWitness witness;
};
struct DirectedCycle {
  std::vector<VertexId> cycle;
};
struct OpposingUnbalancedArcs {
  VertexPair positive_arc;
  VertexPair negative_arc;
  StraightEnumeration order;
};

using CompletionCertificate =
    std::variant<Completed, NotProperInterval, DirectedCycle, OpposingUnbalancedArcs>;

// One record per arc of h, in arc order. Throws when `order` is not a
// straight enumeration of underlying(h).
inline std::vector<ArcSign> arc_signs(const Pog& h, const StraightEnumeration& order) {
  Graph g = underlying(h);
  if (!umbrella_holds(g, order))
    throw std::invalid_argument("arc_signs: order is not a straight enumeration");
  std::vector<int> pos(h.vertex_count());
  for (int i = 0; i < h.vertex_count(); ++i) pos[order.order[i]] = i;
  std::vector<ArcSign> out;
  out.reserve(h.arcs().size());
  for (const auto& a : h.arcs())
    out.push_back({a, pos[a.first] < pos[a.second], is_balanced(g, a.first, a.second)});
  return out;
}

namespace detail {

// Per component, the lexicographically smallest positive and negative
// unbalanced arcs under the given enumeration.
struct ComponentSigns {
  std::vector<int> comp_of;
  std::vector<VertexPair> pos_unb, neg_unb; // {-1,-1} when absent
  int conflict = -1;                        // first component holding both
};

inline ComponentSigns component_signs(const Pog& h, const Graph& g,
                                      const StraightEnumeration& se) {
  int n = h.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[se.order[i]] = i;
  auto comps = components(g);
  ComponentSigns out;
  out.comp_of.assign(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) out.comp_of[v] = static_cast<int>(c);
  out.pos_unb.assign(comps.size(), {-1, -1});
  out.neg_unb.assign(comps.size(), {-1, -1});
  for (const auto& a : h.arcs()) {
    if (is_balanced(g, a.first, a.second)) continue;
    auto& slot = pos[a.first] < pos[a.second] ? out.pos_unb[out.comp_of[a.first]]
                                              : out.neg_unb[out.comp_of[a.first]];
    if (slot.first == -1 || a < slot) slot = a;
  }
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (out.pos_unb[c].first != -1 && out.neg_unb[c].first != -1) {
      out.conflict = static_cast<int>(c);
      break;
    }
  return out;
}

} // namespace detail

inline CompletionCertificate complete(const Pog& h) {
  Graph g = underlying(h);
  auto se = straight_enumeration(g);
  if (!se) return NotProperInterval{wegner_witness(g)};

  auto cycle = detail::find_directed_cycle(h);
  if (!cycle.empty()) return DirectedCycle{std::move(cycle)};

  int n = h.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[se->order[i]] = i;

  auto signs = detail::component_signs(h, g, *se);
  const auto& comp_of = signs.comp_of;
  const auto& neg_unb = signs.neg_unb;
  if (signs.conflict != -1)
    return OpposingUnbalancedArcs{signs.pos_unb[signs.conflict],
                                  signs.neg_unb[signs.conflict], *se};

  // constructive completion: reverse components whose unbalanced arcs are
  // negative, then fix balanced arcs by reordering inside twin classes
  std::vector<VertexId> order = se->order;
  {
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j < order.size() && comp_of[order[j]] == comp_of[order[i]]) ++j;
      if (neg_unb[comp_of[order[i]]].first != -1)
        std::reverse(order.begin() + i, order.begin() + j);
      i = j;
    }
  }
  {
    // twin classes are contiguous in any straight enumeration; topologically
    // sort each run by the arcs among its members (acyclic by the check
    // above), preferring the earliest current position
    auto classes = detail::twin_classes(g);
    std::vector<int> cls_of(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (VertexId v : classes[c]) cls_of[v] = static_cast<int>(c);
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j < order.size() && cls_of[order[j]] == cls_of[order[i]]) ++j;
      if (j - i > 1) {
        std::vector<VertexId> run(order.begin() + i, order.begin() + j);
        std::vector<VertexId> sorted;
        std::vector<char> taken(run.size(), 0);
        while (sorted.size() < run.size()) {
          for (std::size_t k = 0; k < run.size(); ++k) {
            if (taken[k]) continue;
            bool source = true;
            for (std::size_t l = 0; l < run.size() && source; ++l)
              if (!taken[l] && h.has_arc(run[l], run[k])) source = false;
            if (source) {
              taken[k] = 1;
              sorted.push_back(run[k]);
              break;
            }
          }
        }
        std::copy(sorted.begin(), sorted.end(), order.begin() + i);
      }
      i = j;
    }
  }

  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexPair> arcs = h.arcs();
  for (const auto& [u, v] : h.edges())
    arcs.emplace_back(pos[u] < pos[v] ? u : v, pos[u] < pos[v] ? v : u);
  Pog d(n, {}, std::move(arcs));
  if (!is_acyclic_local_tournament(d))
    throw std::logic_error("complete: constructed orientation failed re-verification");
  return Completed{std::move(d)};
}

// Same decision as complete(), skipping certificate construction.
inline bool can_complete(const Pog& h) {
  Graph g = underlying(h);
  auto se = straight_enumeration(g);
  if (!se) return false;
  if (!detail::arc_topological_order(h, nullptr)) return false;
  return detail::component_signs(h, g, *se).conflict == -1;
}

// D completes H: same vertices, fully oriented, keeps every arc of H, same
// underlying graph, and is an acyclic local tournament.
inline bool verify_completion(const Pog& h, const Pog& d) {
  if (d.vertex_count() != h.vertex_count()) return false;
  if (!d.edges().empty()) return false;
  for (const auto& a : h.arcs())
    if (!d.has_arc(a.first, a.second)) return false;
  if (underlying(d) != underlying(h)) return false;
  return is_acyclic_local_tournament(d);
}

// Independent re-check of any certificate produced by complete().
inline bool verify_certificate(const Pog& h, const CompletionCertificate& cert) {
  if (const auto* done = std::get_if<Completed>(&cert))
    return verify_completion(h, done->orientation);
  if (const auto* npi = std::get_if<NotProperInterval>(&cert))
    return verify_wegner_witness(underlying(h), npi->witness);
  if (const auto* dc = std::get_if<DirectedCycle>(&cert)) {
    const auto& cyc = dc->cycle;
    if (cyc.size() < 3) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (!h.has_arc(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  const auto& opp = std::get<OpposingUnbalancedArcs>(cert);
  Graph g = underlying(h);
  try {
    if (!umbrella_holds(g, opp.order)) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!h.has_arc(opp.positive_arc.first, opp.positive_arc.second)) return false;
  if (!h.has_arc(opp.negative_arc.first, opp.negative_arc.second)) return false;
  std::vector<int> pos(h.vertex_count());
  for (int i = 0; i < h.vertex_count(); ++i) pos[opp.order.order[i]] = i;
  if (pos[opp.positive_arc.first] > pos[opp.positive_arc.second]) return false;
  if (pos[opp.negative_arc.first] < pos[opp.negative_arc.second]) return false;
  if (is_balanced(g, opp.positive_arc.first, opp.positive_arc.second)) return false;
  if (is_balanced(g, opp.negative_arc.first, opp.negative_arc.second)) return false;
  // refutation is component-local: both arcs must share a component
  auto comps = components(g);
  for (const auto& c : comps) {
    bool has_pos = std::binary_search(c.begin(), c.end(), opp.positive_arc.first);
    bool has_neg = std::binary_search(c.begin(), c.end(), opp.negative_arc.first);
    if (has_pos || has_neg) return has_pos && has_neg;
  }
  return false;
}

} // namespace alto
