#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "walkcolor/digraph.hpp"
#include "walkcolor/poset.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace gen {

inline walkcolor::Poset poset_from_matrix(const oracle::Matrix& le) {
  const std::size_t n = le.size();
  std::vector<walkcolor::Bitset> up(n, walkcolor::Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (le[x][y]) up[x].set(y);
  return walkcolor::Poset::from_up_sets(std::move(up));
}

// Random order: random forward relations, closed transitively, then relabeled.
inline oracle::Matrix random_order(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  oracle::Matrix le = oracle::trivial_order(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) le[x][y] = coin(rng);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (le[x][z] && le[z][y]) le[x][y] = 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  oracle::Matrix out(n, std::vector<char>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out[perm[x]][perm[y]] = le[x][y];
  return out;
}

inline walkcolor::Poset random_poset(std::size_t n, std::mt19937& rng) {
  return poset_from_matrix(random_order(n, std::uniform_real_distribution<double>(0.0, 0.7)(rng), rng));
}

inline walkcolor::Digraph random_digraph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<walkcolor::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v});
  return walkcolor::Digraph(n, edges);
}

inline walkcolor::Digraph random_dag(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<walkcolor::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({perm[i], perm[j]});
  return walkcolor::Digraph(n, edges);
}

inline walkcolor::Digraph random_symmetric(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<walkcolor::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) {
        edges.push_back({u, v});
        edges.push_back({v, u});
      }
  return walkcolor::Digraph(n, edges);
}

// The digraph whose edges are the set bits of `mask` over the ordered pairs
// (u, v), u != v, in lexicographic order.
inline walkcolor::Digraph digraph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<walkcolor::Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) edges.push_back({u, v});
      ++bit;
    }
  return walkcolor::Digraph(n, edges);
}

inline walkcolor::WalkColoring to_coloring(const walkcolor::Digraph& g, std::size_t k, const walkcolor::Poset& p,
                                           const std::map<oracle::Walk, std::size_t>& colors) {
  walkcolor::WalkColoring c(g, k, p);
  for (const auto& [walk, color] : colors) c.set(walk, color);
  return c;
}

inline std::map<oracle::Walk, std::size_t> to_map(const walkcolor::WalkColoring& c) {
  std::map<oracle::Walk, std::size_t> out;
  c.for_each([&](std::span<const walkcolor::Vertex> w, walkcolor::Element x) { out[{w.begin(), w.end()}] = x; });
  return out;
}

}  // namespace gen
