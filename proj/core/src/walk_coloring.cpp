#include "walkcolor/walk_coloring.hpp"

#include <limits>
#include <string>

#include "walkcolor/error.hpp"

namespace walkcolor {

namespace {

std::string walk_to_string(std::span<const Vertex> walk) {
  std::string s = "[";
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(walk[i]);
  }
  return s + "]";
}

}  // namespace

std::size_t WalkKeyHash::operator()(const WalkKey& key) const noexcept {
  std::uint64_t h = key.packed * 0x9E3779B97F4A7C15ull;
  for (Vertex v : key.sequence) h = (h ^ v) * 0x100000001B3ull;
  return static_cast<std::size_t>(h ^ (h >> 32));
}

WalkKeyCodec::WalkKeyCodec(std::size_t vertex_count, std::size_t k)
    : radix_(std::max<std::uint64_t>(vertex_count, 2)), packed_(true) {
  std::uint64_t capacity = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (capacity > std::numeric_limits<std::uint64_t>::max() / radix_) {
      packed_ = false;
      break;
    }
    capacity *= radix_;
  }
}

WalkKey WalkKeyCodec::encode(std::span<const Vertex> walk) const {
  WalkKey key;
  if (packed_) {
    for (Vertex v : walk) key.packed = key.packed * radix_ + v;
  } else {
    key.sequence.assign(walk.begin(), walk.end());
  }
  return key;
}

WalkColoring::WalkColoring(std::shared_ptr<const Digraph> graph, std::size_t k, std::shared_ptr<const Poset> poset)
    : graph_(std::move(graph)), k_(k), poset_(std::move(poset)), codec_(graph_ ? graph_->size() : 0, k) {
  if (!graph_ || !poset_) throw Error(ErrorKind::InvalidArgument, "walk coloring needs a graph and a poset");
  if (k_ == 0) throw Error(ErrorKind::InvalidArgument, "walk order k must be at least 1");
}

WalkColoring::WalkColoring(const Digraph& graph, std::size_t k, const Poset& poset)
    : WalkColoring(std::make_shared<const Digraph>(graph), k, std::make_shared<const Poset>(poset)) {}

void WalkColoring::set(std::span<const Vertex> walk, Element color) {
  if (walk.size() != k_ || !graph_->is_walk(walk)) {
    throw Error(ErrorKind::InvalidArgument, walk_to_string(walk) + " is not a " + std::to_string(k_) + "-walk");
  }
  poset_->check_element(color);
  colors_[codec_.encode(walk)] = color;
}

std::optional<Element> WalkColoring::find(std::span<const Vertex> walk) const {
  if (walk.size() != k_) return std::nullopt;
  auto it = colors_.find(codec_.encode(walk));
  if (it == colors_.end()) return std::nullopt;
  return it->second;
}

Element WalkColoring::at(std::span<const Vertex> walk) const {
  if (auto c = find(walk)) return *c;
  throw Error(ErrorKind::MissingColor, "walk " + walk_to_string(walk) + " has no color",
              std::vector<std::size_t>(walk.begin(), walk.end()));
}

std::optional<Walk> WalkColoring::first_uncolored() const {
  std::optional<Walk> missing;
  for_each_walk(*graph_, k_, [&](std::span<const Vertex> walk) {
    if (find(walk)) return true;
    missing = Walk(walk.begin(), walk.end());
    return false;
  });
  return missing;
}

bool same_coloring(const WalkColoring& a, const WalkColoring& b) {
  return a.k_ == b.k_ && *a.graph_ == *b.graph_ && same_order(*a.poset_, *b.poset_) && a.colors_ == b.colors_;
}

WalkColoring vertex_coloring(std::shared_ptr<const Digraph> graph, std::shared_ptr<const Poset> poset,
                             std::span<const Element> colors) {
  WalkColoring coloring(std::move(graph), 1, std::move(poset));
  if (colors.size() != coloring.graph().size()) {
    throw Error(ErrorKind::InvalidArgument, "vertex coloring must assign every vertex");
  }
  for (Vertex v = 0; v < colors.size(); ++v) {
    const Vertex walk[] = {v};
    coloring.set(walk, colors[v]);
  }
  return coloring;
}

Verdict verify_coloring(const WalkColoring& coloring) {
  if (auto missing = coloring.first_uncolored()) {
    throw Error(ErrorKind::MissingColor, "walk " + walk_to_string(*missing) + " has no color", *missing);
  }
  const std::size_t k = coloring.k();
  const Poset& poset = coloring.poset();
  Verdict verdict;
  for_each_walk(coloring.graph(), k + 1, [&](std::span<const Vertex> walk) {
    Element prefix = coloring.at(walk.first(k));
    Element suffix = coloring.at(walk.last(k));
    if (poset.leq(prefix, suffix)) {
      verdict.counterexample = Walk(walk.begin(), walk.end());
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace walkcolor
