#include "walkcolor/transforms.hpp"

#include <algorithm>
#include <string>

#include "walkcolor/error.hpp"

namespace walkcolor {

namespace {

Walk extended(std::span<const Vertex> walk, Vertex next) {
  Walk w(walk.begin(), walk.end());
  w.push_back(next);
  return w;
}

const Poset& require_antichain_lattice(const WalkColoring& coloring) {
  if (!coloring.poset().is_antichain_lattice()) {
    throw Error(ErrorKind::InvalidArgument, "coloring does not map into an antichain lattice A(P)");
  }
  return coloring.poset();
}

template <class Choose>
WalkColoring lift_with(const WalkColoring& coloring, Choose choose) {
  const Poset& lattice = require_antichain_lattice(coloring);
  const std::size_t k = coloring.k() + 1;
  WalkColoring lifted(coloring.graph_ptr(), k, lattice.base_ptr());
  const Poset& base = lattice.base();
  for_each_walk(coloring.graph(), k, [&](std::span<const Vertex> walk) {
    const Antichain& prefix = lattice.antichain(coloring.at(walk.first(k - 1)));
    const Antichain& suffix = lattice.antichain(coloring.at(walk.last(k - 1)));
    const OrderIdeal below_suffix = ideal_generated(base, suffix.elements);
    std::optional<Element> pick = choose(base, prefix, below_suffix);
    if (!pick) {
      throw Error(ErrorKind::InvalidInputColoring,
                  "prefix color lies below suffix color on a " + std::to_string(k) + "-walk",
                  std::vector<std::size_t>(walk.begin(), walk.end()));
    }
    lifted.set(walk, *pick);
  });
  return lifted;
}

WalkColoring expand_with(const WalkColoring& coloring, const std::vector<Bitset>& sets,
                         std::shared_ptr<const Poset> target) {
  const std::size_t k = coloring.k() + 1;
  WalkColoring expanded(coloring.graph_ptr(), k, std::move(target));
  for_each_walk(coloring.graph(), k, [&](std::span<const Vertex> walk) {
    Bitset difference = sets[coloring.at(walk.first(k - 1))];
    difference -= sets[coloring.at(walk.last(k - 1))];
    auto i = difference.find_first();
    if (i == Bitset::npos) {
      throw Error(ErrorKind::InvalidInputColoring, "prefix color lies below suffix color",
                  std::vector<std::size_t>(walk.begin(), walk.end()));
    }
    expanded.set(walk, i);
  });
  return expanded;
}

}  // namespace

WalkColoring reduce_coloring(const WalkColoring& coloring, std::size_t limit) {
  if (coloring.k() < 2) throw Error(ErrorKind::InvalidArgument, "cannot reduce a coloring of 1-walks");
  const Poset& poset = coloring.poset();
  auto lattice = std::make_shared<const Poset>(birkhoff(poset, limit));
  const std::size_t k = coloring.k() - 1;
  WalkColoring reduced(coloring.graph_ptr(), k, lattice);
  for_each_walk(coloring.graph(), k, [&](std::span<const Vertex> walk) {
    Bitset colors(poset.size());
    for (Vertex next : coloring.graph().out(walk.back())) colors.set(coloring.at(extended(walk, next)));
    // MAX of a set is an antichain of P, hence present in A(P).
    reduced.set(walk, *lattice->find_antichain(max_elements(poset, colors)));
  });
  return reduced;
}

WalkColoring lift_coloring(const WalkColoring& coloring) {
  return lift_with(coloring,
                   [](const Poset&, const Antichain& prefix, const OrderIdeal& below) -> std::optional<Element> {
                     for (Element x : prefix.elements) {
                       if (!below.contains(x)) return x;
                     }
                     return std::nullopt;
                   });
}

WalkColoring lift_coloring_relaxed(const WalkColoring& coloring) {
  return lift_with(coloring,
                   [](const Poset& base, const Antichain& prefix, const OrderIdeal& below) -> std::optional<Element> {
                     Bitset candidates = ideal_generated(base, prefix.elements).members;
                     candidates -= below.members;
                     auto x = candidates.find_first();
                     if (x == Bitset::npos) return std::nullopt;
                     return x;
                   });
}

WalkColoring expand_trivial(const WalkColoring& coloring, std::size_t k_prime) {
  const std::size_t k = coloring.k();
  if (k_prime < k) throw Error(ErrorKind::InvalidArgument, "expansion target must satisfy k' >= k");
  WalkColoring expanded(coloring.graph_ptr(), k_prime, coloring.poset_ptr());
  for_each_walk(coloring.graph(), k_prime,
                [&](std::span<const Vertex> walk) { expanded.set(walk, coloring.at(walk.first(k))); });
  return expanded;
}

void SetRepresentation::validate() const {
  if (!poset) throw Error(ErrorKind::InvalidRepresentation, "representation has no poset");
  if (sets.size() != poset->size()) {
    throw Error(ErrorKind::InvalidRepresentation, "representation must give one set per poset element");
  }
  for (const Bitset& s : sets) {
    if (s.size() != ground_size) throw Error(ErrorKind::InvalidRepresentation, "set over the wrong ground set");
  }
  for (Element x = 0; x < sets.size(); ++x) {
    for (Element y = 0; y < sets.size(); ++y) {
      if (poset->leq(x, y) != sets[x].is_subset_of(sets[y])) {
        throw Error(ErrorKind::InvalidRepresentation, "r is not an order embedding at (" + std::to_string(x) +
                                                          "," + std::to_string(y) + ")");
      }
    }
  }
}

SetRepresentation SetRepresentation::ideals_of(std::shared_ptr<const Poset> antichain_lattice) {
  if (!antichain_lattice || !antichain_lattice->is_antichain_lattice()) {
    throw Error(ErrorKind::InvalidArgument, "ideal representation needs a poset built by birkhoff()");
  }
  SetRepresentation rep;
  const Poset& base = antichain_lattice->base();
  rep.ground_size = base.size();
  for (Element x = 0; x < antichain_lattice->size(); ++x) {
    rep.sets.push_back(ideal_generated(base, antichain_lattice->antichain(x).elements).members);
  }
  rep.poset = std::move(antichain_lattice);
  return rep;
}

SetRepresentation SetRepresentation::join_irreducibles_of(std::shared_ptr<const Poset> lattice) {
  if (!lattice) throw Error(ErrorKind::InvalidArgument, "missing lattice");
  const std::vector<Element> irreducibles = join_irreducible_elements(*lattice);
  SetRepresentation rep;
  rep.ground_size = irreducibles.size();
  rep.sets.assign(lattice->size(), Bitset(irreducibles.size()));
  for (Element x = 0; x < lattice->size(); ++x) {
    for (std::size_t t = 0; t < irreducibles.size(); ++t) {
      if (lattice->leq(irreducibles[t], x)) rep.sets[x].set(t);
    }
  }
  rep.poset = std::move(lattice);
  return rep;
}

SetRepresentation SetRepresentation::middle_layer(std::size_t n, std::size_t r) {
  const std::size_t half = (r + 1) / 2;
  SetRepresentation rep;
  rep.ground_size = r;
  std::vector<bool> selector(r, false);
  std::fill(selector.begin(), selector.begin() + half, true);
  // prev_permutation on a true-first selector walks the subsets in lexicographic order
  do {
    if (rep.sets.size() == n) break;
    Bitset s(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (selector[i]) s.set(i);
    }
    rep.sets.push_back(s);
  } while (std::prev_permutation(selector.begin(), selector.end()));
  if (rep.sets.size() < n) {
    throw Error(ErrorKind::InvalidArgument, "fewer than " + std::to_string(n) + " subsets of size " +
                                                std::to_string(half) + " in a " + std::to_string(r) + "-set");
  }
  rep.poset = std::make_shared<const Poset>(trivial_poset(n));
  return rep;
}

WalkColoring expand_representation(const WalkColoring& coloring, const SetRepresentation& rep) {
  rep.validate();
  if (!same_order(*rep.poset, coloring.poset())) {
    throw Error(ErrorKind::InvalidRepresentation, "representation is for a different poset");
  }
  return expand_with(coloring, rep.sets, std::make_shared<const Poset>(trivial_poset(rep.ground_size)));
}

WalkColoring expand_distributive(const WalkColoring& coloring) {
  const Poset& lattice = coloring.poset();
  SetRepresentation rep = SetRepresentation::join_irreducibles_of(coloring.poset_ptr());
  auto irreducibles = std::make_shared<const Poset>(join_irreducibles(lattice));
  // r always embeds a finite lattice; it is onto the ideals of J(L) exactly when L is distributive.
  if (count_antichains(*irreducibles, lattice.size()) != lattice.size()) {
    throw Error(ErrorKind::NotALattice, "lattice is not distributive");
  }
  return expand_with(coloring, rep.sets, std::move(irreducibles));
}

}  // namespace walkcolor
