#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "walkcolor/digraph.hpp"
#include "walkcolor/poset.hpp"

namespace walkcolor {

// Identity of a k-walk: a fixed-radix integer when n^k fits in 64 bits,
// otherwise the vertex sequence itself.
struct WalkKey {
  std::uint64_t packed = 0;
  std::vector<Vertex> sequence;
  friend bool operator==(const WalkKey&, const WalkKey&) = default;
};

struct WalkKeyHash {
  std::size_t operator()(const WalkKey& key) const noexcept;
};

class WalkKeyCodec {
 public:
  WalkKeyCodec(std::size_t vertex_count, std::size_t k);
  bool packed() const { return packed_; }
  WalkKey encode(std::span<const Vertex> walk) const;

 private:
  std::uint64_t radix_;
  bool packed_;
};

/// A (not necessarily valid) assignment of poset elements to the k-walks of
/// a digraph. Graph and poset are shared immutable values, so transforms can
/// hand them on without copying.
class WalkColoring {
 public:
  WalkColoring(std::shared_ptr<const Digraph> graph, std::size_t k, std::shared_ptr<const Poset> poset);
  WalkColoring(const Digraph& graph, std::size_t k, const Poset& poset);

  const Digraph& graph() const { return *graph_; }
  const std::shared_ptr<const Digraph>& graph_ptr() const { return graph_; }
  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  std::size_t k() const { return k_; }

  // Throws InvalidArgument if `walk` is not a k-walk of the graph, OutOfRange
  // if the color is not an element of the poset.
  void set(std::span<const Vertex> walk, Element color);
  std::optional<Element> find(std::span<const Vertex> walk) const;
  // Throws MissingColor when the walk has no color.
  Element at(std::span<const Vertex> walk) const;

  std::size_t assigned() const { return colors_.size(); }
  std::optional<Walk> first_uncolored() const;
  bool is_total() const { return !first_uncolored(); }

  // Colored k-walks in lexicographic order.
  template <class Visitor>
  void for_each(Visitor&& visit) const {
    for_each_walk(*graph_, k_, [&](std::span<const Vertex> walk) {
      if (auto c = find(walk)) visit(walk, *c);
    });
  }

  // Same k, graph, order and assignment (labels ignored).
  friend bool same_coloring(const WalkColoring& a, const WalkColoring& b);

 private:
  std::shared_ptr<const Digraph> graph_;
  std::size_t k_;
  std::shared_ptr<const Poset> poset_;
  WalkKeyCodec codec_;
  std::unordered_map<WalkKey, Element, WalkKeyHash> colors_;
};

bool same_coloring(const WalkColoring& a, const WalkColoring& b);

// Vertex (1-walk) coloring from a color per vertex.
WalkColoring vertex_coloring(std::shared_ptr<const Digraph> graph, std::shared_ptr<const Poset> poset,
                             std::span<const Element> colors);

struct Verdict {
  // First (k+1)-walk, in lexicographic order, whose prefix color is <= its
  // suffix color. Empty when the coloring is valid.
  std::optional<Walk> counterexample;
  bool valid() const { return !counterexample.has_value(); }
};

// Checks c(v1..vk) </= c(v2..vk+1) for every (k+1)-walk. Throws MissingColor
// if some k-walk is uncolored.
Verdict verify_coloring(const WalkColoring& coloring);

}  // namespace walkcolor
