#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace walkcolor {

using Element = std::size_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultAntichainLimit = 1'000'000;

// The relation matrix of a materialized poset is dense, so the element count
// is capped independently of any caller-supplied antichain limit.
inline constexpr std::size_t kMaxDenseElements = std::size_t{1} << 16;

inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 16;

// Sorted, duplicate-free ids of pairwise incomparable elements.
struct Antichain {
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  friend auto operator<=>(const Antichain&, const Antichain&) = default;
};

// Downward-closed set of elements.
struct OrderIdeal {
  Bitset members;

  bool contains(Element x) const { return x < members.size() && members.test(x); }
  std::size_t size() const { return members.count(); }
  std::vector<Element> elements() const;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

class Poset;

Poset birkhoff(const Poset& poset, std::size_t limit);

/// Finite partial order on the ids 0..n-1, stored as a dense bit matrix.
///
/// A poset produced by birkhoff() additionally remembers the poset it was
/// built from and the antichain each of its elements stands for; this is
/// what lets colorings into A(P) be lifted back to P.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from the up-sets ({y : x <= y}) of every element.
  /// The relation must already be reflexive, antisymmetric and transitive.
  static Poset from_up_sets(std::vector<Bitset> up, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }

  bool leq(Element x, Element y) const { return up_[x].test(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const Bitset& up_set(Element x) const { return up_[x]; }
  const Bitset& down_set(Element x) const { return down_[x]; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Full reflexive-transitive relation as sorted (x, y) pairs with x <= y.
  std::vector<std::pair<Element, Element>> relation_pairs() const;
  // Covering pairs x < y with nothing strictly in between.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  bool is_antichain_lattice() const { return base_ != nullptr; }
  const Poset& base() const;
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  const Antichain& antichain(Element x) const;
  std::optional<Element> find_antichain(const Antichain& a) const;

  void check_element(Element x) const;

  // Same element count and same order; labels are ignored.
  friend bool same_order(const Poset& a, const Poset& b);

 private:
  friend Poset birkhoff(const Poset& poset, std::size_t limit);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::string> labels_;
  std::shared_ptr<const Poset> base_;
  std::vector<Antichain> antichains_;
};

bool same_order(const Poset& a, const Poset& b);

// Constructors.
Poset trivial_poset(std::size_t n);
Poset chain_poset(std::size_t n);
// Reflexive-transitive closure of the given (x <= y) pairs; throws
// CycleInCoverRelations if the closure is not antisymmetric.
Poset from_cover_relations(std::size_t n, std::span<const std::pair<Element, Element>> pairs,
                           std::vector<std::string> labels = {});
// {0, a, b, 1} with 0 < a < 1, 0 < b < 1; ids 0, 1, 2, 3 in that order.
Poset diamond_poset();
// Componentwise order on [0,l_1] x ... x [0,l_n]; element ids enumerate the
// tuples lexicographically (first coordinate most significant).
Poset product_poset(std::span<const std::size_t> bounds, std::size_t cap = kDefaultProductCap);
std::vector<std::size_t> product_tuple(std::span<const std::size_t> bounds, Element id);
Element product_index(std::span<const std::size_t> bounds, std::span<const std::size_t> tuple);

Poset induced_subposet(const Poset& poset, std::span<const Element> keep);

Antichain max_elements(const Poset& poset, std::span<const Element> xs);
Antichain max_elements(const Poset& poset, const Bitset& xs);
OrderIdeal ideal_generated(const Poset& poset, std::span<const Element> ys);
bool is_antichain(const Poset& poset, std::span<const Element> xs);
bool antichain_leq(const Poset& poset, const Antichain& x, const Antichain& y);

// Visits every antichain exactly once, in lexicographic order of the sorted
// id lists (the empty antichain first). A bool callback may return false to stop.
template <class Visitor>
void for_each_antichain(const Poset& poset, Visitor&& visit);

std::size_t count_antichains(const Poset& poset, std::size_t limit);

Poset birkhoff_power(const Poset& poset, std::size_t m, std::size_t limit);

Antichain maximum_antichain(const Poset& poset);
std::size_t dilworth_number(const Poset& poset);

bool is_lattice(const Poset& poset);
std::optional<Element> join(const Poset& poset, Element x, Element y);
std::optional<Element> meet(const Poset& poset, Element x, Element y);
// Ids (in the lattice) of the join-irreducible elements other than the bottom.
std::vector<Element> join_irreducible_elements(const Poset& lattice);
Poset join_irreducibles(const Poset& lattice);

// Smallest-id-first topological order of the elements.
std::vector<Element> linear_extension(const Poset& poset);
bool is_linear_extension(const Poset& poset, std::span<const Element> order);

// Order isomorphism a -> b as map[x in a] = image in b.
std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b);

template <class Visitor>
void for_each_antichain(const Poset& poset, Visitor&& visit) {
  const std::size_t n = poset.size();
  std::vector<Bitset> incomparable_after(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (!poset.comparable(x, y)) incomparable_after[x].set(y);
    }
  }
  Antichain current;
  bool stopped = false;
  auto descend = [&](auto&& self, const Bitset& candidates) -> void {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Antichain&>, bool>) {
      if (!visit(static_cast<const Antichain&>(current))) {
        stopped = true;
        return;
      }
    } else {
      visit(static_cast<const Antichain&>(current));
    }
    for (auto x = candidates.find_first(); x != Bitset::npos; x = candidates.find_next(x)) {
      current.elements.push_back(x);
      self(self, candidates & incomparable_after[x]);
      current.elements.pop_back();
      if (stopped) return;
    }
  };
  Bitset all(n);
  all.set();
  descend(descend, all);
}

}  // namespace walkcolor
