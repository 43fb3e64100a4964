#include "walkcolor/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "walkcolor/error.hpp"

namespace walkcolor {

Digraph::Digraph(std::size_t n) : out_(n), in_(n), adjacency_(n, Bitset(n)) {}

Digraph::Digraph(std::size_t n, std::span<const Edge> edges) : Digraph(n) {
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                             ") out of range for " + std::to_string(n) + " vertices");
    }
    if (e.from == e.to) throw Error(ErrorKind::InvalidArgument, "self loop at vertex " + std::to_string(e.from));
    if (adjacency_[e.from].test(e.to)) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")");
    }
    adjacency_[e.from].set(e.to);
    ++edge_count_;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (auto v = adjacency_[u].find_first(); v != Bitset::npos; v = adjacency_[u].find_next(v)) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out_[u]) result.push_back({u, v});
  }
  return result;
}

bool Digraph::is_symmetric() const {
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : out_[u]) {
      if (!adjacency_[v].test(u)) return false;
    }
  }
  return true;
}

bool Digraph::is_walk(std::span<const Vertex> walk) const {
  if (walk.empty()) return false;
  for (Vertex v : walk) {
    if (v >= size()) return false;
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!adjacency_[walk[i]].test(walk[i + 1])) return false;
  }
  return true;
}

Digraph complete_symmetric(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return Digraph(n, edges);
}

Digraph transitive_tournament(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Digraph(n, edges);
}

Digraph directed_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Digraph(n, edges);
}

Digraph directed_cycle(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "a directed cycle needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  edges.push_back({n - 1, 0});
  return Digraph(n, edges);
}

std::uint64_t count_walks(const Digraph& graph, std::size_t k) {
  if (k == 0) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // ending[v] = number of walks of the current order ending at v
  std::vector<std::uint64_t> ending(graph.size(), 1);
  for (std::size_t step = 1; step < k; ++step) {
    std::vector<std::uint64_t> next(graph.size(), 0);
    for (Vertex u = 0; u < graph.size(); ++u) {
      for (Vertex v : graph.out(u)) next[v] = ending[u] > kMax - next[v] ? kMax : next[v] + ending[u];
    }
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : ending) total = c > kMax - total ? kMax : total + c;
  return total;
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> indegree(n);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = graph.in(v).size();
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : graph.out(order[head])) {
      if (--indegree[w] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<std::size_t> longest_walk_ending_at(const Digraph& graph) {
  auto order = topological_order(graph);
  if (!order) throw Error(ErrorKind::PreconditionFailed, "graph has a directed cycle");
  std::vector<std::size_t> length(graph.size(), 0);
  for (Vertex u : *order) {
    for (Vertex v : graph.out(u)) length[v] = std::max(length[v], length[u] + 1);
  }
  return length;
}

std::optional<std::size_t> longest_walk_length(const Digraph& graph) {
  if (!topological_order(graph)) return std::nullopt;
  auto ending = longest_walk_ending_at(graph);
  return ending.empty() ? 0 : *std::max_element(ending.begin(), ending.end());
}

Digraph undirected_version(const Digraph& graph) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < graph.size(); ++u) {
    for (Vertex v = 0; v < graph.size(); ++v) {
      if (u != v && (graph.has_edge(u, v) || graph.has_edge(v, u))) edges.push_back({u, v});
    }
  }
  return Digraph(graph.size(), edges);
}

namespace {

using Mask = std::uint32_t;

class DsaturSearch {
 public:
  explicit DsaturSearch(std::vector<Mask> adjacency)
      : n_(adjacency.size()), adjacency_(std::move(adjacency)), color_(n_, kNone) {}

  std::vector<std::size_t> solve() {
    if (n_ == 0) return {};
    best_ = greedy();
    best_count_ = count_colors(best_);
    lower_ = clique_bound();
    if (best_count_ > lower_) {
      std::fill(color_.begin(), color_.end(), kNone);
      branch(0, 0);
    }
    return best_;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  Mask neighbor_colors(Vertex v) const {
    Mask used = 0;
    for (Mask m = adjacency_[v]; m; m &= m - 1) {
      Vertex u = std::countr_zero(m);
      if (color_[u] != kNone) used |= Mask{1} << color_[u];
    }
    return used;
  }

  std::size_t uncolored_degree(Vertex v) const {
    std::size_t degree = 0;
    for (Mask m = adjacency_[v]; m; m &= m - 1) degree += color_[std::countr_zero(m)] == kNone;
    return degree;
  }

  // Max saturation, then max uncolored degree, then smallest id.
  Vertex pick() const {
    Vertex chosen = kNone;
    int best_sat = -1;
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      int sat = std::popcount(neighbor_colors(v));
      std::size_t degree = uncolored_degree(v);
      if (sat > best_sat || (sat == best_sat && degree > best_degree)) {
        chosen = v;
        best_sat = sat;
        best_degree = degree;
      }
    }
    return chosen;
  }

  std::vector<std::size_t> greedy() {
    for (std::size_t step = 0; step < n_; ++step) {
      Vertex v = pick();
      Mask used = neighbor_colors(v);
      color_[v] = std::countr_one(used);
    }
    return color_;
  }

  std::size_t clique_bound() const {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return std::popcount(adjacency_[a]) > std::popcount(adjacency_[b]);
    });
    std::size_t best = 1;
    for (Vertex seed : order) {
      Mask candidates = adjacency_[seed];
      std::size_t size = 1;
      for (Vertex v : order) {
        if (candidates & (Mask{1} << v)) {
          ++size;
          candidates &= adjacency_[v];
        }
      }
      best = std::max(best, size);
    }
    return best;
  }

  static std::size_t count_colors(const std::vector<std::size_t>& colors) {
    std::size_t top = 0;
    for (std::size_t c : colors) top = std::max(top, c + 1);
    return top;
  }

  void branch(std::size_t colored, std::size_t used) {
    if (best_count_ == lower_) return;
    if (colored == n_) {
      best_ = color_;
      best_count_ = used;
      return;
    }
    Vertex v = pick();
    Mask forbidden = neighbor_colors(v);
    std::size_t limit = std::min(used + 1, best_count_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden & (Mask{1} << c)) continue;
      color_[v] = c;
      branch(colored + 1, std::max(used, c + 1));
      color_[v] = kNone;
      if (best_count_ == lower_) return;
    }
  }

  std::size_t n_;
  std::vector<Mask> adjacency_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> best_;
  std::size_t best_count_ = 0;
  std::size_t lower_ = 0;
};

}  // namespace

std::vector<std::size_t> optimal_vertex_coloring(const Digraph& graph, std::size_t max_vertices) {
  const std::size_t n = graph.size();
  if (n > max_vertices || n > 32) {
    throw Error(ErrorKind::SizeLimitExceeded, "exact chromatic number limited to " +
                                                  std::to_string(std::min<std::size_t>(max_vertices, 32)) +
                                                  " vertices, graph has " + std::to_string(n));
  }
  std::vector<Mask> adjacency(n, 0);
  for (const Edge& e : graph.edges()) {
    adjacency[e.from] |= Mask{1} << e.to;
    adjacency[e.to] |= Mask{1} << e.from;
  }
  return DsaturSearch(std::move(adjacency)).solve();
}

std::size_t chromatic_number(const Digraph& graph, std::size_t max_vertices) {
  auto colors = optimal_vertex_coloring(graph, max_vertices);
  std::size_t chi = 0;
  for (std::size_t c : colors) chi = std::max(chi, c + 1);
  return chi;
}

Digraph orient_from_coloring(const Digraph& symmetric, const Poset& poset, std::span<const Element> colors,
                             std::span<const Element> extension) {
  const std::size_t n = symmetric.size();
  if (!symmetric.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "orient_from_coloring needs a symmetric graph");
  if (colors.size() != n) throw Error(ErrorKind::InvalidArgument, "coloring must assign every vertex");
  if (!is_linear_extension(poset, extension)) {
    throw Error(ErrorKind::InvalidArgument, "supplied order is not a linear extension of the poset");
  }
  for (Element c : colors) poset.check_element(c);

  std::vector<std::size_t> position(poset.size());
  for (std::size_t i = 0; i < extension.size(); ++i) position[extension[i]] = i;

  std::vector<Edge> oriented;
  for (const Edge& e : symmetric.edges()) {
    if (e.from > e.to) continue;
    if (colors[e.from] == colors[e.to]) {
      throw Error(ErrorKind::NotProperColoring, "adjacent vertices " + std::to_string(e.from) + " and " +
                                                    std::to_string(e.to) + " share a color");
    }
    if (position[colors[e.from]] > position[colors[e.to]]) {
      oriented.push_back({e.from, e.to});
    } else {
      oriented.push_back({e.to, e.from});
    }
  }
  std::sort(oriented.begin(), oriented.end());
  return Digraph(n, oriented);
}

}  // namespace walkcolor
