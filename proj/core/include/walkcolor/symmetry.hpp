#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "walkcolor/walk_coloring.hpp"

namespace walkcolor {

// Synchronous deterministic coin tossing on a directed path (list) of nodes.

using Color = std::uint64_t;

/// Colors of the list nodes after `round` rounds. Consecutive nodes always
/// have distinct colors and every color is below domain_size.
struct ListState {
  std::vector<Color> colors;
  std::size_t round = 0;
  Color domain_size = 0;

  std::size_t size() const { return colors.size(); }

  // Domain is max color + 1; throws InvalidArgument if neighbors collide.
  static ListState from_colors(std::vector<Color> colors);
  // A seeded random permutation of 0..n-1 (the unique initial labels).
  static ListState shuffled(std::size_t n, std::uint64_t seed);

  bool is_proper() const;
};

// Color of a node from its own and its right neighbor's color: twice the
// lowest differing bit position, plus this node's bit there.
Color coin_toss(Color own, Color right);

// 2 * ceil(log2 d), never below 2.
Color next_domain_size(Color domain);

/// One synchronous round. Every node but the last applies coin_toss against
/// its right neighbor; the last takes the smallest value that differs from
/// its left neighbor's new color.
ListState cv_step(const ListState& state);

struct RunResult {
  ListState state;
  std::size_t rounds = 0;
  std::vector<Color> domain_trace;  // domain size before each round, then the final one
};

inline constexpr Color kSmallDomain = 6;

// Applies cv_step until the domain has at most six colors.
RunResult run_to_small(const ListState& state);

/// Eliminates colors 5, 4 and 3 in three passes; each node holding the
/// eliminated color takes the least of {0,1,2} unused by its neighbors.
ListState reduce_to_three(const ListState& state);

// Nodes whose color is below both neighbors' colors (one-sided at the ends).
std::vector<std::size_t> ruling_set(const ListState& state);

// Iterated binary logarithm: how many log2 applications bring n to <= 2.
std::size_t log_star(double n);

struct ComposedColoring {
  WalkColoring coloring;
  Verdict verdict;
};

/// The composition of `steps` rounds, read as a function from the colors of
/// steps + 1 consecutive nodes to the final color of the first, materialized
/// as a coloring of the (steps + 1)-walks of the complete symmetric digraph
/// on the initial colors 0..n-1 and checked with verify_coloring.
ComposedColoring composed_walk_coloring(std::size_t n, std::size_t steps, std::uint64_t max_walks = 1'000'000);

}  // namespace walkcolor
