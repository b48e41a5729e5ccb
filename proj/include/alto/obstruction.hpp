#pragma once

// The catalog of minimal uncompletable partially oriented graphs, the
// definitional obstruction test, greedy extraction of a minimal obstruction
// from any uncompletable input, and classification against the catalog up
// to isomorphism and duality.
//
// Fixed families are transcribed as explicit edge/arc tables; each is
// cross-checked against the definitional test by the test suite. Four
// families are parametric in the vertex count: chordless cycles, complete
// graphs carrying a directed Hamiltonian cycle, chordless paths with two
// inward end arcs, and the two stretched-path patterns F3_v / F3_viii.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alto/completion.hpp"
#include "alto/iso.hpp"
#include "alto/pog.hpp"

namespace alto {

enum class Family {
  Cycle, Tent, Claw, Net,
  F2_i, F2_ii, F2_iii, F2_iv, F2_v, F2_vi, F2_vii, F2_viii,
  F3_i, F3_ii, F3_iii, F3_iv, F3_v, F3_vi, F3_vii, F3_viii,
};

// Smallest size at which the stretched-path families are obstructions,
// established by running the definitional test over candidate sizes.
inline constexpr int kMinCycle = 4;
inline constexpr int kMinCompleteHamiltonian = 3; // F2_viii
inline constexpr int kMinF3v = 5;
inline constexpr int kMinInwardPath = 3; // F3_vi
inline constexpr int kMinF3viii = 7;

struct CatalogEntry {
  Family family;
  int size = 0; // vertex count; 0 selects the family minimum
  bool dualized = false;
};

// A tagged obstruction with its catalog identity when one is known.
struct ObstructionReport {
  Pog graph;
  std::optional<CatalogEntry> entry;
};

namespace detail {

struct FamilyInfo {
  Family family;
  const char* name;
  int fixed_size; // 0 for parametric families
  int min_size;
};

inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = {
      {Family::Cycle, "Cycle", 0, kMinCycle},
      {Family::Tent, "Tent", 6, 6},
      {Family::Claw, "Claw", 4, 4},
      {Family::Net, "Net", 6, 6},
      {Family::F2_i, "F2_i", 4, 4},
      {Family::F2_ii, "F2_ii", 4, 4},
      {Family::F2_iii, "F2_iii", 5, 5},
      {Family::F2_iv, "F2_iv", 5, 5},
      {Family::F2_v, "F2_v", 5, 5},
      {Family::F2_vi, "F2_vi", 6, 6},
      {Family::F2_vii, "F2_vii", 6, 6},
      {Family::F2_viii, "F2_viii", 0, kMinCompleteHamiltonian},
      {Family::F3_i, "F3_i", 4, 4},
      {Family::F3_ii, "F3_ii", 5, 5},
      {Family::F3_iii, "F3_iii", 5, 5},
      {Family::F3_iv, "F3_iv", 6, 6},
      {Family::F3_v, "F3_v", 0, kMinF3v},
      {Family::F3_vi, "F3_vi", 0, kMinInwardPath},
      {Family::F3_vii, "F3_vii", 6, 6},
      {Family::F3_viii, "F3_viii", 0, kMinF3viii},
  };
  return table;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : family_table())
    if (info.family == f) return info;
  throw std::logic_error("unknown family");
}

} // namespace detail

inline std::string family_name(Family f) { return detail::family_info(f).name; }

inline std::optional<Family> parse_family(const std::string& name) {
  for (const auto& info : detail::family_table())
    if (name == info.name) return info.family;
  return std::nullopt;
}

// "F2_i", "Cycle(5)", "F3_vi(4) dual", ...
inline std::string entry_label(const CatalogEntry& e) {
  const auto& info = detail::family_info(e.family);
  std::string s = info.name;
  if (info.fixed_size == 0) s += "(" + std::to_string(e.size) + ")";
  if (e.dualized) s += " dual";
  return s;
}

// The exact mixed graph of the named family member; the dualized flag
// reverses all arcs. Throws when the size is below the family minimum or
// does not match a fixed family.
inline Pog catalog_build(const CatalogEntry& entry) {
  const auto& info = detail::family_info(entry.family);
  int n = entry.size == 0 ? (info.fixed_size ? info.fixed_size : info.min_size) : entry.size;
  if (info.fixed_size != 0 && n != info.fixed_size)
    throw std::invalid_argument(std::string(info.name) + " has exactly " +
                                std::to_string(info.fixed_size) + " vertices");
  if (n < info.min_size)
    throw std::invalid_argument(std::string(info.name) + " requires at least " +
                                std::to_string(info.min_size) + " vertices");

  std::vector<VertexPair> e, a;
  switch (entry.family) {
  case Family::Cycle:
    for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    break;
  case Family::Tent:
    e = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}};
    break;
  case Family::Claw:
    e = {{0, 1}, {0, 2}, {0, 3}};
    break;
  case Family::Net:
    e = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
    break;
  case Family::F2_i:
    e = {{1, 2}, {0, 2}, {1, 3}};
    a = {{0, 1}, {3, 2}};
    break;
  case Family::F2_ii:
    e = {{1, 2}, {2, 3}, {1, 3}};
    a = {{0, 1}, {2, 0}};
    break;
  case Family::F2_iii:
    e = {{2, 3}, {3, 4}, {0, 2}, {1, 3}, {2, 4}};
    a = {{0, 1}, {2, 1}};
    break;
  case Family::F2_iv:
    e = {{1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 3}};
    a = {{0, 1}, {4, 2}};
    break;
  case Family::F2_v:
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {0, 3}};
    a = {{0, 2}, {3, 1}};
    break;
  case Family::F2_vi:
    e = {{4, 5}, {1, 2}, {3, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {1, 4}, {0, 3}};
    a = {{3, 2}, {0, 1}};
    break;
  case Family::F2_vii:
    e = {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    a = {{1, 2}, {4, 3}};
    break;
  case Family::F2_viii:
    // complete graph whose arcs form one directed Hamiltonian cycle
    for (int i = 0; i < n; ++i) a.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (j != i + 1 && !(i == 0 && j == n - 1)) e.emplace_back(i, j);
    break;
  case Family::F3_i:
    e = {{0, 1}, {2, 3}};
    a = {{1, 2}, {3, 1}};
    break;
  case Family::F3_ii:
    e = {{0, 1}, {1, 3}, {3, 4}};
    a = {{1, 2}, {3, 2}};
    break;
  case Family::F3_iii:
    e = {{0, 1}, {3, 4}, {0, 2}, {1, 3}, {2, 4}};
    a = {{1, 2}, {3, 2}};
    break;
  case Family::F3_iv:
    e = {{0, 1}, {4, 5}, {2, 3}, {1, 3}, {2, 4}, {1, 4}};
    a = {{1, 2}, {4, 3}};
    break;
  case Family::F3_v:
    e = {{0, 1}, {1, 3}, {2, 3}};
    for (int i = 3; i + 1 <= n - 2; ++i) e.emplace_back(i, i + 1);
    a = {{1, 2}, {n - 1, n - 2}};
    break;
  case Family::F3_vi:
    // chordless path with both end edges oriented inward
    for (int i = 1; i + 1 <= n - 2; ++i) e.emplace_back(i, i + 1);
    a = {{0, 1}, {n - 1, n - 2}};
    break;
  case Family::F3_vii:
    e = {{1, 2}, {2, 3}, {3, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 5}};
    a = {{0, 1}, {5, 4}};
    break;
  case Family::F3_viii:
    e = {{0, 1}, {1, 3}, {n - 4, n - 2}, {n - 2, n - 1}};
    for (int i = 2; i + 1 <= n - 3; ++i) e.emplace_back(i, i + 1);
    a = {{1, 2}, {n - 2, n - 3}};
    break;
  }
  Pog base(n, std::move(e), std::move(a));
  return entry.dualized ? dual(base) : base;
}

using CompletableFn = std::function<bool(const Pog&)>;

// Definitional test: uncompletable, but completable after deleting any one
// vertex or relaxing any one arc. The completability backend is pluggable
// so the catalog can be checked against the brute-force oracle.
inline bool is_obstruction(const Pog& h, const CompletableFn& completable = can_complete) {
  if (completable(h)) return false;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (!completable(delete_vertex(h, v))) return false;
  for (const auto& arc : h.arcs())
    if (!completable(relax_arc(h, arc))) return false;
  return true;
}

struct ExtractionTrace {
  Pog obstruction;
  // original_vertices[i] = input vertex that became vertex i of the result
  std::vector<VertexId> original_vertices;
};

// Greedy minimisation: delete vertices (ascending) while the result stays
// uncompletable, then relax arcs (lexicographic) the same way. Once no
// deletion applies, relaxations cannot re-enable one, so the fixpoint is an
// obstruction critically contained in the input. Throws when the input is
// completable.
inline ExtractionTrace extract_obstruction_trace(const Pog& h,
                                                 const CompletableFn& completable = can_complete) {
  if (completable(h))
    throw std::invalid_argument("extract_obstruction: input is completable");
  Pog cur = h;
  std::vector<VertexId> survivors(h.vertex_count());
  for (int i = 0; i < h.vertex_count(); ++i) survivors[i] = i;

  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      Pog next = delete_vertex(cur, v);
      if (!completable(next)) {
        cur = std::move(next);
        survivors.erase(survivors.begin() + v);
        changed = true;
        break;
      }
    }
  }
  changed = true;
  while (changed) {
    changed = false;
    for (const auto& arc : cur.arcs()) {
      Pog next = relax_arc(cur, arc);
      if (!completable(next)) {
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return {std::move(cur), std::move(survivors)};
}

inline Pog extract_obstruction(const Pog& h, const CompletableFn& completable = can_complete) {
  return extract_obstruction_trace(h, completable).obstruction;
}

// All non-dualized catalog entries with at most max_n vertices, in family
// order, parametric families at every admissible size.
inline std::vector<CatalogEntry> catalog_entries_up_to(int max_n) {
  std::vector<CatalogEntry> out;
  for (const auto& info : detail::family_table()) {
    if (info.fixed_size != 0) {
      if (info.fixed_size <= max_n) out.push_back({info.family, info.fixed_size, false});
    } else {
      for (int n = info.min_size; n <= max_n; ++n) out.push_back({info.family, n, false});
    }
  }
  return out;
}

// The catalog entry whose build is mixed-isomorphic to h, preferring
// dualized = false; nullopt when h matches nothing (hence is not an
// obstruction at all).
inline std::optional<CatalogEntry> classify_obstruction(const Pog& h) {
  int n = h.vertex_count();
  std::vector<CatalogEntry> candidates;
  for (const auto& info : detail::family_table()) {
    if (info.fixed_size != 0 ? info.fixed_size == n : n >= info.min_size)
      candidates.push_back({info.family, n, false});
  }
  for (bool dualized : {false, true})
    for (CatalogEntry e : candidates) {
      e.dualized = dualized;
      Pog built = catalog_build(e);
      if (dualized && built == catalog_build({e.family, e.size, false}))
        continue; // arc-free or otherwise self-equal family; already tried
      if (mixed_isomorphic(h, built)) return e;
    }
  return std::nullopt;
}

} // namespace alto
