#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "walkcolor/poset.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace walkcolor {

/// Turns a P-coloring of k-walks into an A(P)-coloring of (k-1)-walks: each
/// (k-1)-walk gets the maximal elements among the colors of its one-step
/// right extensions (the empty antichain when it has none). A valid input
/// yields a valid output.
WalkColoring reduce_coloring(const WalkColoring& coloring, std::size_t limit = kDefaultAntichainLimit);

/// Inverse direction: the coloring must map (k-1)-walks into a poset built
/// by birkhoff(). Each k-walk receives the smallest element of
/// c(prefix) \ I(c(suffix)). Throws InvalidInputColoring when that set is
/// empty, i.e. the input was not a valid A(P)-coloring.
WalkColoring lift_coloring(const WalkColoring& coloring);

// Like lift_coloring, but picks from the larger set I(c(prefix)) \ I(c(suffix)).
WalkColoring lift_coloring_relaxed(const WalkColoring& coloring);

// Colors each k'-walk with the color of its leading k-walk.
WalkColoring expand_trivial(const WalkColoring& coloring, std::size_t k_prime);

/// Order embedding r of a poset into the subsets of {0..ground_size-1}:
/// x <= y iff r(x) is a subset of r(y).
struct SetRepresentation {
  std::shared_ptr<const Poset> poset;
  std::size_t ground_size = 0;
  std::vector<Bitset> sets;

  // Throws InvalidRepresentation unless r is an order embedding.
  void validate() const;

  // r(X) = I(X) for the elements X of an antichain lattice, over the base poset.
  static SetRepresentation ideals_of(std::shared_ptr<const Poset> antichain_lattice);
  // r(x) = {j in J(L) : j <= x}, indexed by position in join_irreducible_elements(L).
  static SetRepresentation join_irreducibles_of(std::shared_ptr<const Poset> lattice);
  // n distinct ceil(r/2)-subsets of {0..r-1}, in lexicographic order, as a
  // representation of the trivial poset on n elements.
  static SetRepresentation middle_layer(std::size_t n, std::size_t r);
};

/// Expansion through a set representation: the (k+1)-walk (v1..vk+1) gets
/// the smallest i in r(c(v1..vk)) \ r(c(v2..vk+1)). The result colors into
/// the trivial poset on the ground set.
WalkColoring expand_representation(const WalkColoring& coloring, const SetRepresentation& rep);

/// For colorings into a distributive lattice L: as expand_representation with
/// the canonical join-irreducible representation, but the output poset is
/// J(L) itself and the result satisfies the stronger </= condition there.
/// Throws NotALattice when L is not a distributive lattice.
WalkColoring expand_distributive(const WalkColoring& coloring);

}  // namespace walkcolor
