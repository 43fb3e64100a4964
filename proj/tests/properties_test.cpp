#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "walkcolor/solvers.hpp"
#include "walkcolor/symmetry.hpp"

using namespace walkcolor;

TEST(PosetProperties, MaxElementsGenerateTheSameIdeal) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Poset p = gen::random_poset(n, rng);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Bitset xs(n);
      std::vector<Element> ids;
      for (Element x = 0; x < n; ++x)
        if (mask >> x & 1) {
          xs.set(x);
          ids.push_back(x);
        }
      const Antichain top = max_elements(p, xs);
      ASSERT_TRUE(is_antichain(p, top.elements));
      const OrderIdeal ideal = ideal_generated(p, ids);
      EXPECT_EQ(ideal_generated(p, top.elements), ideal);
      EXPECT_EQ(max_elements(p, ideal.members), top);
    }
  }
}

TEST(PosetProperties, AntichainLatticeJoinsAreUnions) {
  std::mt19937 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const Poset p = gen::random_poset(1 + trial % 6, rng);
    const Poset lattice = birkhoff(p, kDefaultAntichainLimit);
    EXPECT_TRUE(is_lattice(lattice));
    const std::size_t m = lattice.size();
    std::vector<Bitset> ideals;
    for (Element x = 0; x < m; ++x) ideals.push_back(ideal_generated(p, lattice.antichain(x).elements).members);
    for (Element x = 0; x < m; ++x) {
      for (Element y = 0; y < m; ++y) {
        EXPECT_EQ(lattice.leq(x, y), antichain_leq(p, lattice.antichain(x), lattice.antichain(y)));
        EXPECT_EQ(ideals[*join(lattice, x, y)], ideals[x] | ideals[y]);
        EXPECT_EQ(ideals[*meet(lattice, x, y)], ideals[x] & ideals[y]);
      }
    }
  }
}

TEST(PosetProperties, AntichainOrderIsAPartialOrder) {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const Poset p = gen::random_poset(1 + trial % 6, rng);
    std::vector<Antichain> all;
    for_each_antichain(p, [&](const Antichain& a) { all.push_back(a); });
    for (const Antichain& a : all) {
      EXPECT_TRUE(antichain_leq(p, a, a));
      for (const Antichain& b : all) {
        if (a != b) {
          EXPECT_FALSE(antichain_leq(p, a, b) && antichain_leq(p, b, a));
        }
        if (!antichain_leq(p, a, b)) continue;
        for (const Antichain& c : all)
          if (antichain_leq(p, b, c)) {
            EXPECT_TRUE(antichain_leq(p, a, c));
          }
      }
    }
  }
}

TEST(PosetProperties, DilworthMatchesExhaustiveWidth) {
  std::mt19937 rng(74);
  for (int trial = 0; trial < 60; ++trial) {
    const auto le = gen::random_order(1 + trial % 15, 0.1 + 0.05 * (trial % 8), rng);
    EXPECT_EQ(dilworth_number(gen::poset_from_matrix(le)), oracle::max_antichain(le));
  }
}

TEST(IndexProperties, OptimalOrientationReachesTheLowerBound) {
  std::mt19937 rng(75);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g0 = gen::random_symmetric(2 + trial % 6, 0.5, rng);
    if (g0.edge_count() == 0) continue;
    const std::vector<Element> colors = optimal_vertex_coloring(g0);
    const std::size_t chi = chromatic_number(g0);
    const Poset chain = chain_poset(chi);
    const Digraph oriented = orient_from_coloring(g0, chain, colors, linear_extension(chain));
    EXPECT_EQ(directed_chromatic_index(oriented), ceil_log2(chi));
    // every orientation is bounded below by the same quantity
    for (int sample = 0; sample < 3; ++sample) {
      std::vector<Edge> edges;
      for (const Edge& e : g0.edges())
        if (e.from < e.to) edges.push_back(rng() % 2 ? e : Edge{e.to, e.from});
      EXPECT_GE(directed_chromatic_index(Digraph(g0.size(), edges)), ceil_log2(chi));
    }
  }
}

TEST(SymmetryProperties, CvStepExhaustiveOnShortLists) {
  const Color domain = 8;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Color> colors(n);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == n) {
        ListState s = ListState::from_colors(colors);
        s.domain_size = domain;
        const ListState next = cv_step(s);
        ASSERT_TRUE(next.is_proper());
        for (Color c : next.colors) ASSERT_LT(c, next.domain_size);
        return;
      }
      for (Color c = 0; c < domain; ++c) {
        if (i > 0 && colors[i - 1] == c) continue;
        colors[i] = c;
        fill(i + 1);
      }
    };
    fill(0);
  }
}

TEST(SymmetryProperties, CvStepRandomLongerLists) {
  std::mt19937 rng(76);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Color> colors{rng() % 8};
    const std::size_t n = 6 + trial % 7;
    while (colors.size() < n) {
      const Color c = rng() % 8;
      if (c != colors.back()) colors.push_back(c);
    }
    ListState s = ListState::from_colors(colors);
    s.domain_size = 8;
    EXPECT_TRUE(cv_step(s).is_proper());
  }
}

TEST(SymmetryProperties, OutputDependsOnlyOnTheWindow) {
  std::mt19937 rng(77);
  const Color domain = 64;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t steps = 1 + trial % 3;
    const std::size_t n = 16;
    std::vector<Color> colors{rng() % domain};
    while (colors.size() < n) {
      const Color c = rng() % domain;
      if (c != colors.back()) colors.push_back(c);
    }
    const std::size_t i = rng() % (n - steps);
    auto run = [&](const std::vector<Color>& initial) {
      ListState s = ListState::from_colors(initial);
      s.domain_size = domain;
      for (std::size_t t = 0; t < steps; ++t) s = cv_step(s);
      return s.colors[i];
    };
    const Color before = run(colors);
    std::vector<Color> perturbed = colors;
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i && j <= i + steps) continue;
      Color c;
      do {
        c = rng() % domain;
      } while ((j > 0 && c == perturbed[j - 1]) || (j + 1 < n && c == perturbed[j + 1]));
      perturbed[j] = c;
    }
    EXPECT_EQ(run(perturbed), before);
  }
}

TEST(SymmetryProperties, RoundsGrowSlowly) {
  std::size_t previous = 0;
  for (std::size_t n = 2; n <= (1u << 16); n *= 2) {
    const std::size_t rounds = run_to_small(ListState::shuffled(n, 0)).rounds;
    EXPECT_GE(rounds, previous);
    EXPECT_LE(rounds, log_star(static_cast<double>(n)) + 4);
    previous = rounds;
  }
}

TEST(SymmetryProperties, RulingSetGaps) {
  std::mt19937 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 1000;
    std::vector<Color> colors{rng() % 3};
    while (colors.size() < n) {
      const Color c = rng() % 3;
      if (c != colors.back()) colors.push_back(c);
    }
    const auto chosen = ruling_set(ListState::from_colors(colors));
    ASSERT_FALSE(chosen.empty());
    EXPECT_LE(chosen.front(), 2u);
    EXPECT_GE(chosen.back() + 3, n);
    for (std::size_t t = 1; t < chosen.size(); ++t) {
      EXPECT_GE(chosen[t] - chosen[t - 1], 2u);
      EXPECT_LE(chosen[t] - chosen[t - 1], 4u);
    }
  }
}
