#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "walkcolor/digraph.hpp"
#include "walkcolor/solvers.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace walkcolor {

// Edge colorings with a per-color budget: color i (0-based here, printed as
// i+1) may not appear on every edge of a walk longer than bounds[i].

/// Decides whether such an edge coloring exists by coloring the vertices with
/// the product poset [0,l_1] x ... x [0,l_n]; when it does, edge (u,v) gets
/// the first coordinate where c(u) exceeds c(v). The returned coloring maps
/// 2-walks into the trivial poset on the n colors.
std::optional<WalkColoring> bounded_mono_edge_coloring(const Digraph& graph, std::span<const std::size_t> bounds,
                                                       const SolverLimits& limits = {});

/// The opposite direction, for colorings of k-walks (k >= 2) into {0..n-1}:
/// coordinate i of the color of a (k-1)-walk is the longest run of
/// consecutive color-i k-walks starting with one of its extensions. Throws
/// BudgetViolated, with the offending walk as witness, when some run exceeds
/// its bound (or never ends).
WalkColoring mono_profile_vertex_coloring(const WalkColoring& runs, std::span<const std::size_t> bounds);

}  // namespace walkcolor
