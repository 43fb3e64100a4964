#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "walkcolor/error.hpp"
#include "walkcolor/symmetry.hpp"

using namespace walkcolor;

TEST(CoinToss, Examples) {
  EXPECT_EQ(coin_toss(0b1010, 0b1000), 3u);
  EXPECT_EQ(coin_toss(5, 4), 1u);
  EXPECT_EQ(coin_toss(4, 5), 0u);
  EXPECT_EQ(coin_toss(0, 1u << 20), 40u);
}

TEST(CoinToss, NeighboursStayDistinct) {
  const Color d = 32;
  for (Color a = 0; a < d; ++a)
    for (Color b = 0; b < d; ++b)
      for (Color c = 0; c < d; ++c) {
        if (a == b || b == c) continue;
        EXPECT_NE(coin_toss(a, b), coin_toss(b, c));
        EXPECT_LT(coin_toss(a, b), next_domain_size(d));
      }
}

TEST(CoinToss, NextDomainSize) {
  EXPECT_EQ(next_domain_size(1), 2u);
  EXPECT_EQ(next_domain_size(2), 2u);
  EXPECT_EQ(next_domain_size(3), 4u);
  EXPECT_EQ(next_domain_size(8), 6u);
  EXPECT_EQ(next_domain_size(64), 12u);
}

TEST(ListState, Construction) {
  EXPECT_THROW(ListState::from_colors({1, 1}), Error);
  const ListState s = ListState::from_colors({2, 0, 7});
  EXPECT_EQ(s.domain_size, 8u);
  const ListState shuffled = ListState::shuffled(10, 3);
  EXPECT_TRUE(shuffled.is_proper());
  EXPECT_EQ(shuffled.domain_size, 10u);
  EXPECT_EQ(ListState::shuffled(10, 3).colors, shuffled.colors);
}

TEST(CvStep, Example) {
  const ListState next = cv_step(ListState::from_colors({5, 4, 7}));
  EXPECT_EQ(next.colors, (std::vector<Color>{1, 0, 1}));
  EXPECT_EQ(next.round, 1u);
  EXPECT_EQ(next.domain_size, 6u);
  EXPECT_EQ(cv_step(ListState::from_colors({9})).colors, (std::vector<Color>{0}));
}

TEST(RunToSmall, Pins) {
  const RunResult r64 = run_to_small(ListState::shuffled(64, 1));
  EXPECT_EQ(r64.rounds, 3u);
  EXPECT_EQ(r64.domain_trace, (std::vector<Color>{64, 12, 8, 6}));
  EXPECT_TRUE(r64.state.is_proper());
  EXPECT_EQ(run_to_small(ListState::shuffled(8, 1)).rounds, 1u);
  EXPECT_EQ(run_to_small(ListState::shuffled(5, 1)).rounds, 0u);
}

TEST(RunToSmall, ProperEveryRound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ListState s = ListState::shuffled(1000, seed);
    while (s.domain_size > kSmallDomain) {
      s = cv_step(s);
      ASSERT_TRUE(s.is_proper());
      for (Color c : s.colors) ASSERT_LT(c, s.domain_size);
    }
  }
}

TEST(ReduceToThree, Example) {
  const ListState r = reduce_to_three(ListState::from_colors({0, 5, 4, 3, 5}));
  EXPECT_EQ(r.colors, (std::vector<Color>{0, 1, 0, 1, 0}));
  EXPECT_EQ(r.domain_size, 3u);
  EXPECT_THROW(reduce_to_three(ListState::from_colors({6, 0})), Error);
}

TEST(ReduceToThree, AfterCoinTossing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ListState r = reduce_to_three(run_to_small(ListState::shuffled(500, seed)).state);
    EXPECT_TRUE(r.is_proper());
    for (Color c : r.colors) EXPECT_LT(c, 3u);
  }
}

TEST(RulingSet, Examples) {
  EXPECT_EQ(ruling_set(ListState::from_colors({0, 1, 0, 1})), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(ruling_set(ListState::from_colors({4})), (std::vector<std::size_t>{0}));
  EXPECT_EQ(ruling_set(ListState::from_colors({2, 1, 0})), (std::vector<std::size_t>{2}));
}

TEST(LogStar, Values) {
  EXPECT_EQ(log_star(2), 0u);
  EXPECT_EQ(log_star(4), 1u);
  EXPECT_EQ(log_star(16), 2u);
  EXPECT_EQ(log_star(65536), 3u);
  EXPECT_EQ(log_star(1 << 20), 4u);
}

TEST(Composed, SmallCasesAreValid) {
  for (auto [n, steps] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {4, 2}}) {
    const ComposedColoring c = composed_walk_coloring(n, steps);
    EXPECT_EQ(c.coloring.k(), steps + 1);
    EXPECT_TRUE(c.coloring.is_total());
    EXPECT_TRUE(c.verdict.valid()) << n << " " << steps;
  }
  EXPECT_THROW(composed_walk_coloring(6, 3, 100), Error);
}

TEST(Composed, MatchesRoundsAwayFromTheTail) {
  std::mt19937 rng(51);
  const std::size_t domain = 5;
  for (std::size_t steps = 1; steps <= 2; ++steps) {
    const ComposedColoring composed = composed_walk_coloring(domain, steps);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Color> colors{rng() % domain};
      while (colors.size() < 12) {
        const Color c = rng() % domain;
        if (c != colors.back()) colors.push_back(c);
      }
      ListState s = ListState::from_colors(colors);
      s.domain_size = domain;
      for (std::size_t t = 0; t < steps; ++t) s = cv_step(s);
      for (std::size_t i = 0; i + steps < colors.size(); ++i) {
        const Walk window(colors.begin() + static_cast<std::ptrdiff_t>(i),
                          colors.begin() + static_cast<std::ptrdiff_t>(i + steps + 1));
        EXPECT_EQ(s.colors[i], composed.coloring.at(window));
      }
    }
  }
}
