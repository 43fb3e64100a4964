#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "support/generators.hpp"
#include "walkcolor/error.hpp"
#include "walkcolor/solvers.hpp"
#include "walkcolor/transforms.hpp"

using namespace walkcolor;

namespace {

template <class F>
Error caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no walkcolor::Error thrown";
  return Error(ErrorKind::InvalidArgument, "none");
}

WalkColoring edges_of_path(Element first, Element second) {
  WalkColoring c(directed_path(3), 2, trivial_poset(2));
  c.set(Walk{0, 1}, first);
  c.set(Walk{1, 2}, second);
  return c;
}

WalkColoring edges_of_k2(Element forward, Element back) {
  WalkColoring c(complete_symmetric(2), 2, trivial_poset(2));
  c.set(Walk{0, 1}, forward);
  c.set(Walk{1, 0}, back);
  return c;
}

// Vertex coloring into A(base) given one antichain per vertex.
WalkColoring antichain_vertices(const Digraph& g, const Poset& base, const std::vector<Antichain>& per_vertex) {
  auto lattice = std::make_shared<const Poset>(birkhoff(base, kDefaultAntichainLimit));
  std::vector<Element> colors;
  for (const Antichain& a : per_vertex) colors.push_back(*lattice->find_antichain(a));
  return vertex_coloring(std::make_shared<const Digraph>(g), lattice, colors);
}

const Antichain& antichain_at(const WalkColoring& c, Vertex v) { return c.poset().antichain(c.at(Walk{v})); }

}  // namespace

TEST(Reduce, PathTakesMaxOfExtensions) {
  const WalkColoring reduced = reduce_coloring(edges_of_path(0, 1));
  EXPECT_EQ(reduced.k(), 1u);
  EXPECT_EQ(antichain_at(reduced, 0).elements, (std::vector<Element>{0}));
  EXPECT_EQ(antichain_at(reduced, 1).elements, (std::vector<Element>{1}));
  EXPECT_TRUE(antichain_at(reduced, 2).empty());
  EXPECT_TRUE(verify_coloring(reduced).valid());
}

TEST(Reduce, SymmetricK2Verifies) {
  const WalkColoring reduced = reduce_coloring(edges_of_k2(0, 1));
  EXPECT_EQ(antichain_at(reduced, 0).elements, (std::vector<Element>{0}));
  EXPECT_EQ(antichain_at(reduced, 1).elements, (std::vector<Element>{1}));
  EXPECT_TRUE(verify_coloring(reduced).valid());
}

TEST(Reduce, SinksGetTheEmptyAntichain) {
  // 0 -> 1 -> 2 with 3-walk color on the only 3-walk; (1,2) has no extension.
  WalkColoring c(directed_path(3), 3, diamond_poset());
  c.set(Walk{0, 1, 2}, 1);
  const WalkColoring reduced = reduce_coloring(c);
  EXPECT_EQ(reduced.poset().antichain(reduced.at(Walk{0, 1})).elements, (std::vector<Element>{1}));
  EXPECT_TRUE(reduced.poset().antichain(reduced.at(Walk{1, 2})).empty());
}

TEST(Reduce, KeepsOnlyMaximalColors) {
  // vertex 0 points at 1 and 2 whose colors are comparable in a chain
  const std::vector<Edge> edges{{0, 1}, {0, 2}};
  WalkColoring c(Digraph(3, edges), 2, chain_poset(3));
  c.set(Walk{0, 1}, 0);
  c.set(Walk{0, 2}, 2);
  const WalkColoring reduced = reduce_coloring(c);
  EXPECT_EQ(antichain_at(reduced, 0).elements, (std::vector<Element>{2}));
}

TEST(Reduce, Errors) {
  const WalkColoring vertices(directed_path(2), 1, trivial_poset(2));
  EXPECT_EQ(caught([&] { reduce_coloring(vertices); }).kind(), ErrorKind::InvalidArgument);
  WalkColoring wide(Digraph(1), 2, trivial_poset(5));
  EXPECT_EQ(caught([&] { reduce_coloring(wide, 10); }).kind(), ErrorKind::AntichainLimitExceeded);
}

TEST(Lift, InvertsThePathReduction) {
  const WalkColoring vertices = antichain_vertices(directed_path(3), trivial_poset(2), {{{0}}, {{1}}, {}});
  const WalkColoring lifted = lift_coloring(vertices);
  EXPECT_EQ(lifted.k(), 2u);
  EXPECT_EQ(lifted.at(Walk{0, 1}), 0u);
  EXPECT_EQ(lifted.at(Walk{1, 2}), 1u);
  EXPECT_TRUE(same_coloring(lifted, edges_of_path(0, 1)));
}

TEST(Lift, SymmetricK2) {
  const WalkColoring lifted = lift_coloring(antichain_vertices(complete_symmetric(2), trivial_poset(2), {{{0}}, {{1}}}));
  EXPECT_EQ(lifted.at(Walk{0, 1}), 0u);
  EXPECT_EQ(lifted.at(Walk{1, 0}), 1u);
  EXPECT_TRUE(verify_coloring(lifted).valid());
}

TEST(Lift, InvalidInputIsReportedWithWitness) {
  const WalkColoring bad = antichain_vertices(directed_path(2), trivial_poset(2), {{{0}}, {{0}}});
  const Error e = caught([&] { lift_coloring(bad); });
  EXPECT_EQ(e.kind(), ErrorKind::InvalidInputColoring);
  EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(caught([&] { lift_coloring_relaxed(bad); }).kind(), ErrorKind::InvalidInputColoring);
}

TEST(Lift, NeedsAnAntichainLattice) {
  WalkColoring plain(directed_path(2), 1, chain_poset(2));
  plain.set(Walk{0}, 1);
  plain.set(Walk{1}, 0);
  EXPECT_EQ(caught([&] { lift_coloring(plain); }).kind(), ErrorKind::InvalidArgument);
}

TEST(LiftRelaxed, ChainPicksTheTop) {
  const WalkColoring vertices = antichain_vertices(directed_path(2), chain_poset(2), {{{1}}, {{0}}});
  EXPECT_EQ(lift_coloring_relaxed(vertices).at(Walk{0, 1}), 1u);
  EXPECT_EQ(lift_coloring(vertices).at(Walk{0, 1}), 1u);
}

TEST(LiftRelaxed, StrictChoiceLiesInTheRelaxedSet) {
  const std::vector<WalkColoring> inputs{
      antichain_vertices(directed_path(3), trivial_poset(2), {{{0}}, {{1}}, {}}),
      antichain_vertices(complete_symmetric(2), trivial_poset(2), {{{0}}, {{1}}}),
      antichain_vertices(directed_path(3), chain_poset(3), {{{2}}, {{1}}, {}}),
  };
  for (const WalkColoring& c : inputs) {
    const WalkColoring strict = lift_coloring(c);
    const WalkColoring relaxed = lift_coloring_relaxed(c);
    const Poset& base = c.poset().base();
    strict.for_each([&](std::span<const Vertex> w, Element x) {
      const auto prefix = ideal_generated(base, c.poset().antichain(c.at(w.first(w.size() - 1))).elements);
      const auto suffix = ideal_generated(base, c.poset().antichain(c.at(w.last(w.size() - 1))).elements);
      EXPECT_TRUE(prefix.contains(x) && !suffix.contains(x));
      const Element r = relaxed.at(w);
      EXPECT_TRUE(prefix.contains(r) && !suffix.contains(r));
      EXPECT_LE(r, x);
    });
    EXPECT_TRUE(verify_coloring(relaxed).valid());
  }
}

TEST(ExpandTrivial, IdentityAndPrefixProjection) {
  const WalkColoring c = edges_of_path(0, 1);
  EXPECT_TRUE(same_coloring(expand_trivial(c, 2), c));

  const std::vector<Element> colors{2, 1, 0};
  const WalkColoring vertices = vertex_coloring(std::make_shared<const Digraph>(directed_path(3)),
                                                std::make_shared<const Poset>(chain_poset(3)), colors);
  const WalkColoring edges = expand_trivial(vertices, 2);
  EXPECT_EQ(edges.at(Walk{0, 1}), 2u);
  EXPECT_EQ(edges.at(Walk{1, 2}), 1u);
  EXPECT_TRUE(verify_coloring(edges).valid());
  EXPECT_EQ(caught([&] { expand_trivial(edges, 1); }).kind(), ErrorKind::InvalidArgument);
}

TEST(MiddleLayer, DistinctHalfSizeSubsets) {
  const SetRepresentation rep = SetRepresentation::middle_layer(6, 4);
  ASSERT_EQ(rep.sets.size(), 6u);
  EXPECT_EQ(rep.ground_size, 4u);
  for (const Bitset& s : rep.sets) EXPECT_EQ(s.count(), 2u);
  EXPECT_TRUE(rep.sets[0].test(0) && rep.sets[0].test(1));
  EXPECT_NO_THROW(rep.validate());
  EXPECT_EQ(caught([] { SetRepresentation::middle_layer(7, 4); }).kind(), ErrorKind::InvalidArgument);
  EXPECT_EQ(SetRepresentation::middle_layer(3, 3).sets.size(), 3u);
}

TEST(ExpandRepresentation, VertexColorsBecomeEdgeColors) {
  const std::size_t n = 6;
  std::vector<Element> colors(n);
  std::iota(colors.begin(), colors.end(), 0);
  const WalkColoring vertices = vertex_coloring(std::make_shared<const Digraph>(complete_symmetric(n)),
                                                std::make_shared<const Poset>(trivial_poset(n)), colors);
  ASSERT_TRUE(verify_coloring(vertices).valid());
  const WalkColoring edges = expand_representation(vertices, SetRepresentation::middle_layer(n, 4));
  EXPECT_EQ(edges.k(), 2u);
  EXPECT_EQ(edges.poset().size(), 4u);
  EXPECT_TRUE(verify_coloring(edges).valid());
}

TEST(ExpandRepresentation, IdealsReproduceTheRelaxedLift) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const Poset base = gen::random_poset(3, rng);
    const Digraph g = gen::random_digraph(4, 0.4, rng);
    auto decided = decide_vertex_poset_colorable(g, birkhoff(base, kDefaultAntichainLimit));
    if (!decided) continue;
    auto lattice = std::make_shared<const Poset>(birkhoff(base, kDefaultAntichainLimit));
    const WalkColoring c = vertex_coloring(std::make_shared<const Digraph>(g), lattice, *decided);
    const WalkColoring expanded = expand_representation(c, SetRepresentation::ideals_of(lattice));
    const WalkColoring relaxed = lift_coloring_relaxed(c);
    EXPECT_EQ(gen::to_map(expanded), gen::to_map(relaxed));
    // valid even under the order of the base poset
    EXPECT_TRUE(verify_coloring(gen::to_coloring(g, 2, base, gen::to_map(expanded))).valid());
  }
}

TEST(ExpandRepresentation, ChainDownSteps) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const std::vector<Element> colors{1, 0, 1, 0};
  auto chain = std::make_shared<const Poset>(chain_poset(2));
  const WalkColoring vertices = vertex_coloring(std::make_shared<const Digraph>(Digraph(4, edges)), chain, colors);
  SetRepresentation rep{chain, 1, {Bitset(1), Bitset(1)}};
  rep.sets[1].set(0);
  const WalkColoring expanded = expand_representation(vertices, rep);
  EXPECT_EQ(expanded.at(Walk{0, 1}), 0u);
  EXPECT_EQ(expanded.at(Walk{2, 3}), 0u);
}

TEST(ExpandRepresentation, RejectsBadEmbeddings) {
  auto chain = std::make_shared<const Poset>(chain_poset(2));
  const WalkColoring vertices(directed_path(2), 1, *chain);
  const SetRepresentation flat{chain, 1, {Bitset(1), Bitset(1)}};
  EXPECT_EQ(caught([&] { expand_representation(vertices, flat); }).kind(), ErrorKind::InvalidRepresentation);
  const SetRepresentation short_list{chain, 1, {Bitset(1)}};
  EXPECT_EQ(caught([&] { short_list.validate(); }).kind(), ErrorKind::InvalidRepresentation);
  SetRepresentation other{std::make_shared<const Poset>(trivial_poset(2)), 2, {Bitset(2), Bitset(2)}};
  other.sets[0].set(0);
  other.sets[1].set(1);
  EXPECT_EQ(caught([&] { expand_representation(vertices, other); }).kind(), ErrorKind::InvalidRepresentation);
}

TEST(ExpandDistributive, SubsetLatticeMatchesIdealRepresentation) {
  auto cube = std::make_shared<const Poset>(birkhoff(trivial_poset(3), kDefaultAntichainLimit));
  std::vector<Element> colors;
  for (Element x = 0; x < 3; ++x) colors.push_back(*cube->find_antichain(Antichain{{x}}));
  const WalkColoring vertices = vertex_coloring(std::make_shared<const Digraph>(complete_symmetric(3)), cube, colors);
  const WalkColoring distributive = expand_distributive(vertices);
  const WalkColoring via_ideals = expand_representation(vertices, SetRepresentation::ideals_of(cube));
  EXPECT_EQ(gen::to_map(distributive), gen::to_map(via_ideals));
  EXPECT_TRUE(find_isomorphism(distributive.poset(), trivial_poset(3)));
  EXPECT_TRUE(verify_coloring(distributive).valid());
}

TEST(ExpandDistributive, ChainOfThree) {
  const std::vector<Element> colors{2, 1, 0};
  const WalkColoring vertices = vertex_coloring(std::make_shared<const Digraph>(directed_path(3)),
                                                std::make_shared<const Poset>(chain_poset(3)), colors);
  const WalkColoring edges = expand_distributive(vertices);
  EXPECT_TRUE(same_order(edges.poset(), chain_poset(2)));
  EXPECT_EQ(edges.at(Walk{0, 1}), 1u);
  EXPECT_EQ(edges.at(Walk{1, 2}), 0u);
  EXPECT_TRUE(verify_coloring(edges).valid());
}

TEST(ExpandDistributive, RejectsNonDistributiveLattices) {
  // M3: bottom, three atoms, top
  const std::vector<std::pair<Element, Element>> m3{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  const WalkColoring c(Digraph(1), 1, from_cover_relations(5, m3));
  EXPECT_EQ(caught([&] { expand_distributive(c); }).kind(), ErrorKind::NotALattice);
  // N5: 0 < a < b < 1, 0 < c < 1
  const std::vector<std::pair<Element, Element>> n5{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  const WalkColoring d(Digraph(1), 1, from_cover_relations(5, n5));
  EXPECT_EQ(caught([&] { expand_distributive(d); }).kind(), ErrorKind::NotALattice);
  const WalkColoring e(Digraph(1), 1, trivial_poset(2));
  EXPECT_EQ(caught([&] { expand_distributive(e); }).kind(), ErrorKind::NotALattice);
}
