#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "walkcolor/poset.hpp"

namespace walkcolor {

using Vertex = std::size_t;

// A k-walk is stored as its vertex sequence (v1 ... vk).
using Walk = std::vector<Vertex>;

struct Edge {
  Vertex from;
  Vertex to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t kDefaultChromaticLimit = 24;

/// Loop-free digraph on the vertices 0..n-1. Both (u,v) and (v,u) may be
/// present; self loops and repeated edges are rejected.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  Digraph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return u < size() && v < size() && adjacency_[u].test(v); }
  std::span<const Vertex> out(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in(Vertex v) const { return in_[v]; }

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_symmetric() const;
  bool is_walk(std::span<const Vertex> walk) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<Bitset> adjacency_;
  std::size_t edge_count_ = 0;
};

Digraph complete_symmetric(std::size_t n);
Digraph transitive_tournament(std::size_t n);  // i -> j for all i < j
Digraph directed_path(std::size_t n);          // 0 -> 1 -> ... -> n-1
Digraph directed_cycle(std::size_t n);         // path plus n-1 -> 0

// Streams every k-walk exactly once, in lexicographic vertex order. The
// callback receives a view that is only valid during the call; if it returns
// bool, returning false stops the enumeration.
template <class Visitor>
void for_each_walk(const Digraph& graph, std::size_t k, Visitor&& visit);

// Number of k-walks, saturating at UINT64_MAX.
std::uint64_t count_walks(const Digraph& graph, std::size_t k);

std::optional<std::vector<Vertex>> topological_order(const Digraph& graph);

// Number of edges on a longest walk; nullopt means infinite (G has a cycle).
std::optional<std::size_t> longest_walk_length(const Digraph& graph);

// Length of the longest walk ending at each vertex. Requires an acyclic graph.
std::vector<std::size_t> longest_walk_ending_at(const Digraph& graph);

Digraph undirected_version(const Digraph& graph);

// Exact chromatic number of the undirected version (DSATUR branch and bound).
std::size_t chromatic_number(const Digraph& graph, std::size_t max_vertices = kDefaultChromaticLimit);

// An optimal proper coloring of the undirected version, colors 0..chi-1.
std::vector<std::size_t> optimal_vertex_coloring(const Digraph& graph,
                                                 std::size_t max_vertices = kDefaultChromaticLimit);

// Orients every edge {u,v} of a symmetric graph from the endpoint whose color
// comes later in `extension`, a linear extension of `poset`.
Digraph orient_from_coloring(const Digraph& symmetric, const Poset& poset, std::span<const Element> colors,
                             std::span<const Element> extension);

template <class Visitor>
void for_each_walk(const Digraph& graph, std::size_t k, Visitor&& visit) {
  if (k == 0) return;
  Walk walk;
  walk.reserve(k);
  bool stopped = false;
  auto emit = [&]() {
    std::span<const Vertex> view(walk);
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const Vertex>>, bool>) {
      if (!visit(view)) stopped = true;
    } else {
      visit(view);
    }
  };
  auto extend = [&](auto&& self) -> void {
    if (walk.size() == k) {
      emit();
      return;
    }
    for (Vertex next : graph.out(walk.back())) {
      walk.push_back(next);
      self(self);
      walk.pop_back();
      if (stopped) return;
    }
  };
  for (Vertex v = 0; v < graph.size() && !stopped; ++v) {
    walk.push_back(v);
    extend(extend);
    walk.pop_back();
  }
}

}  // namespace walkcolor
