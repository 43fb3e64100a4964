#include "walkcolor/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <string>

#include "walkcolor/error.hpp"
#include "walkcolor/solvers.hpp"

namespace walkcolor {

ListState ListState::from_colors(std::vector<Color> colors) {
  ListState state;
  state.colors = std::move(colors);
  if (!state.is_proper()) throw Error(ErrorKind::InvalidArgument, "adjacent list nodes share a color");
  state.domain_size = state.colors.empty() ? 0 : *std::max_element(state.colors.begin(), state.colors.end()) + 1;
  return state;
}

ListState ListState::shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<Color> colors(n);
  std::iota(colors.begin(), colors.end(), Color{0});
  std::mt19937_64 rng(seed);
  std::shuffle(colors.begin(), colors.end(), rng);
  ListState state;
  state.colors = std::move(colors);
  state.domain_size = n;
  return state;
}

bool ListState::is_proper() const {
  for (std::size_t i = 0; i + 1 < colors.size(); ++i) {
    if (colors[i] == colors[i + 1]) return false;
  }
  return true;
}

Color coin_toss(Color own, Color right) {
  const Color bit = static_cast<Color>(std::countr_zero(own ^ right));
  return 2 * bit + ((own >> bit) & 1);
}

Color next_domain_size(Color domain) { return std::max<Color>(2, 2 * ceil_log2(domain)); }

ListState cv_step(const ListState& state) {
  const std::size_t n = state.size();
  ListState next;
  next.colors.resize(n);
  next.round = state.round + 1;
  next.domain_size = next_domain_size(state.domain_size);
  for (std::size_t i = 0; i + 1 < n; ++i) next.colors[i] = coin_toss(state.colors[i], state.colors[i + 1]);
  if (n > 0) next.colors[n - 1] = (n >= 2 && next.colors[n - 2] == 0) ? 1 : 0;

  for (std::size_t i = 0; i < n; ++i) {
    if (next.colors[i] >= next.domain_size || (i + 1 < n && next.colors[i] == next.colors[i + 1])) {
      throw Error(ErrorKind::DomainCollision, "coin tossing produced an improper coloring at node " +
                                                  std::to_string(i));
    }
  }
  return next;
}

RunResult run_to_small(const ListState& state) {
  RunResult result{state, 0, {state.domain_size}};
  while (result.state.domain_size > kSmallDomain) {
    result.state = cv_step(result.state);
    ++result.rounds;
    result.domain_trace.push_back(result.state.domain_size);
  }
  return result;
}

ListState reduce_to_three(const ListState& state) {
  if (state.domain_size > kSmallDomain) {
    throw Error(ErrorKind::InvalidArgument, "reduce_to_three needs at most six colors");
  }
  if (!state.is_proper()) throw Error(ErrorKind::InvalidArgument, "adjacent list nodes share a color");
  ListState result = state;
  auto& c = result.colors;
  const std::size_t n = c.size();
  for (Color eliminated : {Color{5}, Color{4}, Color{3}}) {
    // Nodes holding the same color are never adjacent, so one sequential sweep
    // equals a synchronous round.
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] != eliminated) continue;
      Color pick = 0;
      while ((i > 0 && c[i - 1] == pick) || (i + 1 < n && c[i + 1] == pick)) ++pick;
      c[i] = pick;
    }
  }
  result.domain_size = std::min<Color>(state.domain_size, 3);
  return result;
}

std::vector<std::size_t> ruling_set(const ListState& state) {
  const auto& c = state.colors;
  const std::size_t n = c.size();
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < n; ++i) {
    if ((i == 0 || c[i] < c[i - 1]) && (i + 1 == n || c[i] < c[i + 1])) chosen.push_back(i);
  }
  return chosen;
}

std::size_t log_star(double n) {
  std::size_t count = 0;
  while (n > 2.0) {
    n = std::log2(n);
    ++count;
  }
  return count;
}

ComposedColoring composed_walk_coloring(std::size_t n, std::size_t steps, std::uint64_t max_walks) {
  const std::size_t k = steps + 1;
  auto graph = std::make_shared<const Digraph>(complete_symmetric(n));
  if (count_walks(*graph, k) > max_walks) {
    throw Error(ErrorKind::SizeLimitExceeded, "complete digraph on " + std::to_string(n) + " vertices has more than " +
                                                  std::to_string(max_walks) + " " + std::to_string(k) + "-walks");
  }
  Color domain = n;
  for (std::size_t s = 0; s < steps; ++s) domain = next_domain_size(domain);

  WalkColoring coloring(graph, k, std::make_shared<const Poset>(trivial_poset(domain)));
  std::vector<Color> level;
  for_each_walk(*graph, k, [&](std::span<const Vertex> walk) {
    level.assign(walk.begin(), walk.end());
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t t = 0; t + 1 < level.size(); ++t) level[t] = coin_toss(level[t], level[t + 1]);
      level.pop_back();
    }
    coloring.set(walk, level.front());
  });
  Verdict verdict = verify_coloring(coloring);
  return {std::move(coloring), std::move(verdict)};
}

}  // namespace walkcolor
