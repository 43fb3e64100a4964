#include "walkcolor/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <memory>
#include <string>

#include "walkcolor/error.hpp"
#include "walkcolor/transforms.hpp"

namespace walkcolor {

namespace {

class PosetColoringSearch {
 public:
  PosetColoringSearch(const Digraph& graph, const Poset& poset, std::uint64_t max_nodes)
      : graph_(graph), poset_(poset), max_nodes_(max_nodes), colors_(graph.size()), assigned_(graph.size()) {
    const std::size_t n = graph.size();
    order_.resize(n);
    for (Vertex v = 0; v < n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return graph.out(a).size() + graph.in(a).size() > graph.out(b).size() + graph.in(b).size();
    });
    Bitset all(poset.size());
    all.set();
    domains_.assign(n, all);
  }

  std::optional<std::vector<Element>> run() {
    if (!descend(0)) return std::nullopt;
    return colors_;
  }

 private:
  struct Saved {
    Vertex vertex;
    Bitset domain;
  };

  // Restricts the domain of w and records the old one; false on wipe-out.
  bool restrict(Vertex w, const Bitset& forbidden, std::vector<Saved>& trail) {
    if (assigned_.test(w) || !domains_[w].intersects(forbidden)) return true;
    trail.push_back({w, domains_[w]});
    domains_[w] -= forbidden;
    return domains_[w].any();
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const Bitset candidates = domains_[v];
    assigned_.set(v);
    for (auto x = candidates.find_first(); x != Bitset::npos; x = candidates.find_next(x)) {
      if (++nodes_ > max_nodes_) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "poset coloring search exceeded " + std::to_string(max_nodes_) + " nodes");
      }
      std::vector<Saved> trail;
      bool consistent = true;
      // v -> w needs c(w) outside the up-set of c(v); u -> v needs c(u) outside its down-set.
      for (Vertex w : graph_.out(v)) {
        if (!(consistent = restrict(w, poset_.up_set(x), trail))) break;
      }
      if (consistent) {
        for (Vertex u : graph_.in(v)) {
          if (!(consistent = restrict(u, poset_.down_set(x), trail))) break;
        }
      }
      if (consistent) {
        colors_[v] = x;
        if (descend(depth + 1)) return true;
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) domains_[it->vertex] = std::move(it->domain);
    }
    assigned_.reset(v);
    return false;
  }

  const Digraph& graph_;
  const Poset& poset_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Bitset> domains_;
  std::vector<Element> colors_;
  Bitset assigned_;
};

}  // namespace

std::optional<std::vector<Element>> decide_vertex_poset_colorable(const Digraph& graph, const Poset& poset,
                                                                  const SolverLimits& limits) {
  const std::size_t n = graph.size();
  if (n == 0) return std::vector<Element>{};
  if (poset.empty()) return std::nullopt;
  if (n > limits.max_vertices) {
    throw Error(ErrorKind::SizeLimitExceeded, "vertex poset coloring limited to " +
                                                  std::to_string(limits.max_vertices) + " vertices");
  }

  if (graph.is_symmetric() && n <= limits.max_chromatic_vertices) {
    // Adjacent vertices need incomparable colors, so color classes map onto an antichain.
    const std::vector<std::size_t> classes = optimal_vertex_coloring(graph, limits.max_chromatic_vertices);
    const std::size_t chi = *std::max_element(classes.begin(), classes.end()) + 1;
    const Antichain widest = maximum_antichain(poset);
    if (chi > widest.size()) return std::nullopt;
    std::vector<Element> colors(n);
    for (Vertex v = 0; v < n; ++v) colors[v] = widest.elements[classes[v]];
    return colors;
  }

  return PosetColoringSearch(graph, poset, limits.max_search_nodes).run();
}

std::optional<WalkColoring> decide_kwalk_colorable(const Digraph& graph, std::size_t k, const Poset& poset,
                                                   const SolverLimits& limits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "walk order k must be at least 1");
  auto graph_ptr = std::make_shared<const Digraph>(graph);
  if (count_walks(graph, k) == 0) {
    return WalkColoring(graph_ptr, k, std::make_shared<const Poset>(poset));
  }

  std::shared_ptr<const Poset> top = std::make_shared<const Poset>(poset);
  for (std::size_t i = 1; i < k; ++i) top = std::make_shared<const Poset>(birkhoff(*top, limits.antichain_limit));

  auto colors = decide_vertex_poset_colorable(graph, *top, limits);
  if (!colors) return std::nullopt;
  WalkColoring coloring = vertex_coloring(graph_ptr, top, *colors);
  for (std::size_t i = 1; i < k; ++i) coloring = lift_coloring(coloring);
  return coloring;
}

std::size_t ceil_log2(std::uint64_t m) {
  if (m <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(m - 1));
}

std::size_t sperner_r(std::uint64_t m) {
  for (std::size_t k = 0;; ++k) {
    // C(k, floor(k/2)), saturating
    const std::size_t half = k / 2;
    std::uint64_t binom = 1;
    for (std::size_t i = 1; i <= half; ++i) {
      const std::uint64_t numerator = k - half + i;
      if (binom > std::numeric_limits<std::uint64_t>::max() / numerator) {
        binom = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      binom = binom * numerator / i;
    }
    if (m <= binom) return k;
  }
}

std::size_t directed_chromatic_index(const Digraph& graph, const SolverLimits& limits) {
  if (graph.edge_count() == 0) return 0;
  const std::size_t chi = chromatic_number(graph, limits.max_chromatic_vertices);
  // Singletons {v} always work, so the search stops by |S| = n.
  for (std::size_t s = ceil_log2(chi);; ++s) {
    if (decide_kwalk_colorable(graph, 2, trivial_poset(s), limits)) return s;
  }
}

BoundsReport bounds_report(const Digraph& graph, const SolverLimits& limits) {
  BoundsReport report;
  report.chi = chromatic_number(graph, limits.max_chromatic_vertices);
  report.log2_chi = ceil_log2(report.chi);
  report.sperner_r_of_chi = report.chi == 0 ? 0 : sperner_r(report.chi);
  report.length = longest_walk_length(graph);
  if (report.length) report.log2_len1 = ceil_log2(*report.length + 1);
  return report;
}

WalkColoring proposition_coloring(const Digraph& graph, const Poset& poset, std::size_t limit) {
  if (!topological_order(graph)) throw Error(ErrorKind::PreconditionFailed, "graph has a directed cycle");
  const std::vector<std::size_t> classes = longest_walk_ending_at(graph);
  const std::size_t length = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end());

  auto lattice = std::make_shared<const Poset>(birkhoff(poset, limit));
  if (length + 1 > lattice->size()) {
    throw Error(ErrorKind::PreconditionFailed, "length(G) + 1 = " + std::to_string(length + 1) +
                                                   " exceeds |A(P)| = " + std::to_string(lattice->size()));
  }
  // Reverse linear extension: i < j implies A_i </= A_j.
  std::vector<Element> descending = linear_extension(*lattice);
  std::reverse(descending.begin(), descending.end());

  std::vector<Element> colors(graph.size());
  for (Vertex v = 0; v < graph.size(); ++v) colors[v] = descending[classes[v]];
  return lift_coloring(vertex_coloring(std::make_shared<const Digraph>(graph), lattice, colors));
}

}  // namespace walkcolor
