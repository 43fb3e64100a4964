#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "walkcolor/digraph.hpp"
#include "walkcolor/poset.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace walkcolor {

struct SolverLimits {
  std::size_t max_vertices = 64;
  std::uint64_t max_search_nodes = 200'000'000;
  std::size_t max_chromatic_vertices = kDefaultChromaticLimit;
  std::size_t antichain_limit = kDefaultAntichainLimit;
};

/// Finds colors c(v) in Q with u -> v implying c(u) </= c(v), or proves that
/// none exist. Symmetric graphs are decided by chi(G) <= Dil(Q); all other
/// graphs by backtracking (vertices by decreasing degree, colors by id,
/// forward checking).
std::optional<std::vector<Element>> decide_vertex_poset_colorable(const Digraph& graph, const Poset& poset,
                                                                  const SolverLimits& limits = {});

/// Exact decision for P-colorings of k-walks, through a vertex coloring by
/// A^{k-1}(P) that is lifted back k-1 times. The witness is a P-coloring of
/// the k-walks.
std::optional<WalkColoring> decide_kwalk_colorable(const Digraph& graph, std::size_t k, const Poset& poset,
                                                   const SolverLimits& limits = {});

// ceil(log2 m), with ceil_log2(0) = ceil_log2(1) = 0.
std::size_t ceil_log2(std::uint64_t m);

// Least k with m <= C(k, floor(k/2)).
std::size_t sperner_r(std::uint64_t m);

// Least |S| for which the edges admit an S-coloring with trivially ordered S.
std::size_t directed_chromatic_index(const Digraph& graph, const SolverLimits& limits = {});

struct BoundsReport {
  std::size_t chi = 0;
  std::size_t log2_chi = 0;                // lower bound on c(G); equals c'(G0)
  std::optional<std::size_t> length;       // nullopt: cyclic
  std::optional<std::size_t> log2_len1;    // upper bound on c(G) for acyclic G
  std::size_t sperner_r_of_chi = 0;        // c''(G0)
};

BoundsReport bounds_report(const Digraph& graph, const SolverLimits& limits = {});

/// Edge P-coloring of an acyclic graph with length(G) + 1 <= |A(P)|: vertex v
/// gets the antichain at position class(v) of a reverse linear extension of
/// A(P), then the vertex coloring is lifted to the edges.
WalkColoring proposition_coloring(const Digraph& graph, const Poset& poset,
                                  std::size_t limit = kDefaultAntichainLimit);

}  // namespace walkcolor
