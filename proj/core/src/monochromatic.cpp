#include "walkcolor/monochromatic.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "walkcolor/error.hpp"

namespace walkcolor {

namespace {

constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

Poset numbered_colors(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i].set(i);
    labels[i] = std::to_string(i + 1);
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

// Longest run of consecutive equally colored k-walks starting at a given one.
class RunLengths {
 public:
  RunLengths(const WalkColoring& coloring, std::span<const std::size_t> bounds)
      : coloring_(coloring), bounds_(bounds), codec_(coloring.graph().size(), coloring.k()) {}

  std::size_t run(std::span<const Vertex> walk) {
    path_.assign(walk.begin(), walk.end());
    return visit(1);
  }

 private:
  enum class State { Active, Done };
  struct Entry {
    State state = State::Active;
    std::size_t run = 0;
    Vertex next = kNoVertex;
  };

  // path_ ends with the k-walk being visited; depth counts the k-walks on it.
  std::size_t visit(std::size_t depth) {
    const std::size_t k = coloring_.k();
    const Walk walk(path_.end() - static_cast<std::ptrdiff_t>(k), path_.end());
    const Element color = coloring_.at(walk);
    const std::size_t budget = bounds_[color];
    if (depth > budget) violation("color " + std::to_string(color + 1) + " runs longer than its bound");

    WalkKey key = codec_.encode(walk);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second.state == State::Active) {
        violation("color " + std::to_string(color + 1) + " repeats around a cycle");
      }
      return it->second.run;
    }
    memo_.emplace(key, Entry{});

    Entry result{State::Done, 1, kNoVertex};
    const Vertex last = walk.back();
    for (Vertex next : coloring_.graph().out(last)) {
      path_.push_back(next);
      std::span<const Vertex> successor(path_.data() + path_.size() - k, k);
      if (coloring_.at(successor) == color) {
        const std::size_t tail = visit(depth + 1);
        if (tail + 1 > result.run) {
          result.run = tail + 1;
          result.next = next;
        }
      }
      path_.pop_back();
    }
    memo_[key] = result;
    if (result.run > budget) {
      extend_witness(walk);
      violation("color " + std::to_string(color + 1) + " runs longer than its bound");
    }
    return result.run;
  }

  // Appends the recorded best continuation of the current run to path_.
  void extend_witness(std::span<const Vertex> walk) {
    const std::size_t k = coloring_.k();
    Walk current(walk.begin(), walk.end());
    for (;;) {
      auto it = memo_.find(codec_.encode(current));
      if (it == memo_.end() || it->second.next == kNoVertex) break;
      path_.push_back(it->second.next);
      current.erase(current.begin());
      current.push_back(it->second.next);
      if (path_.size() > k + bounds_[coloring_.at(walk)] + 1) break;
    }
  }

  [[noreturn]] void violation(const std::string& what) {
    throw Error(ErrorKind::BudgetViolated, what, std::vector<std::size_t>(path_.begin(), path_.end()));
  }

  const WalkColoring& coloring_;
  std::span<const std::size_t> bounds_;
  WalkKeyCodec codec_;
  std::unordered_map<WalkKey, Entry, WalkKeyHash> memo_;
  Walk path_;
};

}  // namespace

std::optional<WalkColoring> bounded_mono_edge_coloring(const Digraph& graph, std::span<const std::size_t> bounds,
                                                       const SolverLimits& limits) {
  const Poset product = product_poset(bounds);
  auto colors = decide_vertex_poset_colorable(graph, product, limits);
  if (!colors) return std::nullopt;

  WalkColoring edges(std::make_shared<const Digraph>(graph), 2,
                     std::make_shared<const Poset>(numbered_colors(bounds.size())));
  for (const Edge& e : graph.edges()) {
    const auto from = product_tuple(bounds, (*colors)[e.from]);
    const auto to = product_tuple(bounds, (*colors)[e.to]);
    std::size_t i = 0;
    while (from[i] <= to[i]) ++i;  // c(from) </= c(to) guarantees a strict descent
    const Vertex walk[] = {e.from, e.to};
    edges.set(walk, i);
  }
  return edges;
}

WalkColoring mono_profile_vertex_coloring(const WalkColoring& runs, std::span<const std::size_t> bounds) {
  const std::size_t k = runs.k();
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "run profiles need k >= 2");
  if (runs.poset().size() != bounds.size()) {
    throw Error(ErrorKind::InvalidArgument, "coloring uses " + std::to_string(runs.poset().size()) +
                                                " colors but " + std::to_string(bounds.size()) + " bounds were given");
  }
  auto product = std::make_shared<const Poset>(product_poset(bounds));
  WalkColoring profile(runs.graph_ptr(), k - 1, product);
  RunLengths lengths(runs, bounds);

  std::vector<std::size_t> tuple(bounds.size());
  Walk extended;
  for_each_walk(runs.graph(), k - 1, [&](std::span<const Vertex> walk) {
    std::fill(tuple.begin(), tuple.end(), 0);
    for (Vertex next : runs.graph().out(walk.back())) {
      extended.assign(walk.begin(), walk.end());
      extended.push_back(next);
      const Element color = runs.at(extended);
      tuple[color] = std::max(tuple[color], lengths.run(extended));
    }
    profile.set(walk, product_index(bounds, tuple));
  });
  return profile;
}

}  // namespace walkcolor
