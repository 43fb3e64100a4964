#include "walkcolor/poset.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "walkcolor/error.hpp"

namespace walkcolor {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::vector<Element> bits_to_ids(const Bitset& bits) {
  std::vector<Element> ids;
  ids.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) ids.push_back(i);
  return ids;
}

}  // namespace

std::vector<Element> OrderIdeal::elements() const { return bits_to_ids(members); }

Poset Poset::from_up_sets(std::vector<Bitset> up, std::vector<std::string> labels) {
  const std::size_t n = up.size();
  for (const auto& row : up) {
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "relation matrix is not square");
  }
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "label count does not match element count");

  for (Element x = 0; x < n; ++x) {
    if (!up[x].test(x)) {
      throw Error(ErrorKind::InvalidArgument, "relation is not reflexive at " + std::to_string(x));
    }
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y)) {
      if (y != x && up[y].test(x)) {
        throw Error(ErrorKind::InvalidArgument, "relation is not antisymmetric on " + std::to_string(x) +
                                                    "," + std::to_string(y));
      }
      if (!up[y].is_subset_of(up[x])) {
        throw Error(ErrorKind::InvalidArgument, "relation is not transitive through " + std::to_string(y));
      }
    }
  }

  Poset p;
  p.down_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y)) p.down_[y].set(x);
  }
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  return p;
}

std::vector<std::pair<Element, Element>> Poset::relation_pairs() const {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < size(); ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) pairs.emplace_back(x, y);
  }
  return pairs;
}

std::vector<std::pair<Element, Element>> Poset::cover_pairs() const {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < size(); ++x) {
    for (auto y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
      if (y != x && (up_[x] & down_[y]).count() == 2) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

const Poset& Poset::base() const {
  if (!base_) throw Error(ErrorKind::InvalidArgument, "poset was not built by birkhoff()");
  return *base_;
}

const Antichain& Poset::antichain(Element x) const {
  if (!base_) throw Error(ErrorKind::InvalidArgument, "poset was not built by birkhoff()");
  check_element(x);
  return antichains_[x];
}

std::optional<Element> Poset::find_antichain(const Antichain& a) const {
  auto it = std::lower_bound(antichains_.begin(), antichains_.end(), a);
  if (it == antichains_.end() || *it != a) return std::nullopt;
  return static_cast<Element>(it - antichains_.begin());
}

void Poset::check_element(Element x) const {
  if (x >= size()) {
    throw Error(ErrorKind::OutOfRange,
                "element " + std::to_string(x) + " out of range for poset of size " + std::to_string(size()));
  }
}

bool same_order(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

Poset trivial_poset(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (Element x = 0; x < n; ++x) up[x].set(x);
  return Poset::from_up_sets(std::move(up));
}

Poset chain_poset(std::size_t n) {
  std::vector<Bitset> up(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) up[x].set(y);
  }
  return Poset::from_up_sets(std::move(up));
}

Poset from_cover_relations(std::size_t n, std::span<const std::pair<Element, Element>> pairs,
                           std::vector<std::string> labels) {
  std::vector<Bitset> up(n, Bitset(n));
  for (Element x = 0; x < n; ++x) up[x].set(x);
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw Error(ErrorKind::OutOfRange, "relation pair (" + std::to_string(x) + "," + std::to_string(y) +
                                             ") out of range for " + std::to_string(n) + " elements");
    }
    up[x].set(y);
  }
  // Square the relation until it stops growing.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Bitset> next = up;
    for (Element x = 0; x < n; ++x) {
      for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y)) next[x] |= up[y];
      if (next[x] != up[x]) changed = true;
    }
    up = std::move(next);
  }
  for (Element x = 0; x < n; ++x) {
    for (auto y = up[x].find_next(x); y != Bitset::npos; y = up[x].find_next(y)) {
      if (up[y].test(x)) {
        throw Error(ErrorKind::CycleInCoverRelations,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) + " lie on a cycle");
      }
    }
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

Poset diamond_poset() {
  const std::pair<Element, Element> covers[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return from_cover_relations(4, covers, {"0", "a", "b", "1"});
}

Poset product_poset(std::span<const std::size_t> bounds, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t l : bounds) {
    if (l < 1) throw Error(ErrorKind::InvalidArgument, "product bounds must be at least 1");
    if (total > cap / (l + 1)) {
      throw Error(ErrorKind::SizeLimitExceeded, "product poset exceeds " + std::to_string(cap) + " elements");
    }
    total *= l + 1;
  }
  if (total > cap) {
    throw Error(ErrorKind::SizeLimitExceeded, "product poset exceeds " + std::to_string(cap) + " elements");
  }

  std::vector<std::vector<std::size_t>> tuples(total);
  std::vector<std::string> labels(total);
  for (Element id = 0; id < total; ++id) {
    tuples[id] = product_tuple(bounds, id);
    std::string label = "(";
    for (std::size_t i = 0; i < tuples[id].size(); ++i) {
      if (i) label += ',';
      label += std::to_string(tuples[id][i]);
    }
    labels[id] = label + ")";
  }
  std::vector<Bitset> up(total, Bitset(total));
  for (Element x = 0; x < total; ++x) {
    for (Element y = 0; y < total; ++y) {
      bool below = true;
      for (std::size_t i = 0; i < bounds.size() && below; ++i) below = tuples[x][i] <= tuples[y][i];
      if (below) up[x].set(y);
    }
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

std::vector<std::size_t> product_tuple(std::span<const std::size_t> bounds, Element id) {
  std::vector<std::size_t> tuple(bounds.size());
  for (std::size_t i = bounds.size(); i-- > 0;) {
    tuple[i] = id % (bounds[i] + 1);
    id /= bounds[i] + 1;
  }
  if (id != 0) throw Error(ErrorKind::OutOfRange, "product element id out of range");
  return tuple;
}

Element product_index(std::span<const std::size_t> bounds, std::span<const std::size_t> tuple) {
  if (tuple.size() != bounds.size()) throw Error(ErrorKind::InvalidArgument, "tuple arity mismatch");
  Element id = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (tuple[i] > bounds[i]) throw Error(ErrorKind::OutOfRange, "tuple component exceeds its bound");
    id = id * (bounds[i] + 1) + tuple[i];
  }
  return id;
}

Poset induced_subposet(const Poset& poset, std::span<const Element> keep) {
  const std::size_t m = keep.size();
  Bitset seen(poset.size());
  for (Element x : keep) {
    poset.check_element(x);
    if (seen.test(x)) throw Error(ErrorKind::InvalidArgument, "duplicate element in subposet selection");
    seen.set(x);
  }
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = poset.label(keep[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (poset.leq(keep[i], keep[j])) up[i].set(j);
    }
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

Antichain max_elements(const Poset& poset, const Bitset& xs) {
  Antichain result;
  for (auto x = xs.find_first(); x != Bitset::npos; x = xs.find_next(x)) {
    if ((poset.up_set(x) & xs).count() == 1) result.elements.push_back(x);
  }
  return result;
}

Antichain max_elements(const Poset& poset, std::span<const Element> xs) {
  Bitset set(poset.size());
  for (Element x : xs) {
    poset.check_element(x);
    set.set(x);
  }
  return max_elements(poset, set);
}

OrderIdeal ideal_generated(const Poset& poset, std::span<const Element> ys) {
  OrderIdeal ideal{Bitset(poset.size())};
  for (Element y : ys) {
    poset.check_element(y);
    ideal.members |= poset.down_set(y);
  }
  return ideal;
}

bool is_antichain(const Poset& poset, std::span<const Element> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    poset.check_element(xs[i]);
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (poset.comparable(xs[i], xs[j])) return false;
    }
  }
  return true;
}

bool antichain_leq(const Poset& poset, const Antichain& x, const Antichain& y) {
  for (Element a : x.elements) {
    poset.check_element(a);
    bool covered = false;
    for (Element b : y.elements) {
      poset.check_element(b);
      if (poset.leq(a, b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::size_t count_antichains(const Poset& poset, std::size_t limit) {
  std::size_t count = 0;
  for_each_antichain(poset, [&](const Antichain&) { return ++count <= limit; });
  return count;
}

Poset birkhoff(const Poset& poset, std::size_t limit) {
  const std::size_t cap = std::min(limit, kMaxDenseElements);
  std::vector<Antichain> antichains;
  bool overflow = false;
  for_each_antichain(poset, [&](const Antichain& a) {
    if (antichains.size() == cap) {
      overflow = true;
      return false;
    }
    antichains.push_back(a);
    return true;
  });
  if (overflow) {
    throw Error(ErrorKind::AntichainLimitExceeded,
                "poset has more than " + std::to_string(cap) + " antichains");
  }

  const std::size_t m = antichains.size();
  std::vector<Bitset> ideals;
  ideals.reserve(m);
  for (const auto& a : antichains) ideals.push_back(ideal_generated(poset, a.elements).members);

  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (ideals[i].is_subset_of(ideals[j])) up[i].set(j);
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string label = "{";
    for (std::size_t t = 0; t < antichains[i].elements.size(); ++t) {
      if (t) label += ',';
      label += poset.label(antichains[i].elements[t]);
    }
    labels[i] = label + "}";
  }

  Poset result = Poset::from_up_sets(std::move(up), std::move(labels));
  result.base_ = std::make_shared<const Poset>(poset);
  result.antichains_ = std::move(antichains);
  return result;
}

Poset birkhoff_power(const Poset& poset, std::size_t m, std::size_t limit) {
  Poset current = poset;
  for (std::size_t i = 0; i < m; ++i) current = birkhoff(current, limit);
  return current;
}

namespace {

// Maximum matching in the bipartite graph left x -> right y for x < y
// (Hopcroft-Karp). Returns match_left[x] = y or npos.
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct ComparabilityMatching {
  std::vector<std::size_t> match_left;
  std::vector<std::size_t> match_right;
  std::size_t size = 0;
};

ComparabilityMatching match_comparabilities(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::vector<Element>> adj(n);
  for (Element x = 0; x < n; ++x) {
    const Bitset& up = poset.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (y != x) adj[x].push_back(y);
    }
  }

  ComparabilityMatching m{std::vector<std::size_t>(n, npos), std::vector<std::size_t>(n, npos), 0};
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> next_edge(n);

  auto bfs = [&] {
    std::queue<Element> queue;
    bool reachable_free = false;
    for (Element x = 0; x < n; ++x) {
      if (m.match_left[x] == npos) {
        dist[x] = 0;
        queue.push(x);
      } else {
        dist[x] = npos;
      }
    }
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop();
      for (Element y : adj[x]) {
        std::size_t partner = m.match_right[y];
        if (partner == npos) {
          reachable_free = true;
        } else if (dist[partner] == npos) {
          dist[partner] = dist[x] + 1;
          queue.push(partner);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, Element x) -> bool {
    for (std::size_t& e = next_edge[x]; e < adj[x].size(); ++e) {
      Element y = adj[x][e];
      std::size_t partner = m.match_right[y];
      if (partner == npos || (dist[partner] == dist[x] + 1 && self(self, partner))) {
        m.match_left[x] = y;
        m.match_right[y] = x;
        return true;
      }
    }
    dist[x] = npos;
    return false;
  };

  while (bfs()) {
    std::fill(next_edge.begin(), next_edge.end(), 0);
    for (Element x = 0; x < n; ++x) {
      if (m.match_left[x] == npos && dfs(dfs, x)) ++m.size;
    }
  }
  return m;
}

}  // namespace

Antichain maximum_antichain(const Poset& poset) {
  const std::size_t n = poset.size();
  ComparabilityMatching m = match_comparabilities(poset);

  // Koenig: alternating reachability from free left vertices yields a minimum
  // vertex cover (L \ Z) + (R & Z); elements with neither side covered form a
  // maximum antichain.
  Bitset left_reached(n), right_reached(n);
  std::vector<Element> stack;
  for (Element x = 0; x < n; ++x) {
    if (m.match_left[x] == npos) {
      left_reached.set(x);
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    const Bitset& up = poset.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (y == x || right_reached.test(y) || m.match_left[x] == y) continue;
      right_reached.set(y);
      std::size_t partner = m.match_right[y];
      if (partner != npos && !left_reached.test(partner)) {
        left_reached.set(partner);
        stack.push_back(partner);
      }
    }
  }

  Antichain result;
  for (Element x = 0; x < n; ++x) {
    if (left_reached.test(x) && !right_reached.test(x)) result.elements.push_back(x);
  }
  if (result.size() != n - m.size || !is_antichain(poset, result.elements)) {
    throw Error(ErrorKind::DomainCollision, "internal error: Koenig construction failed");
  }
  return result;
}

std::size_t dilworth_number(const Poset& poset) {
  return poset.size() - match_comparabilities(poset).size;
}

std::optional<Element> join(const Poset& poset, Element x, Element y) {
  poset.check_element(x);
  poset.check_element(y);
  const Bitset upper = poset.up_set(x) & poset.up_set(y);
  for (auto z = upper.find_first(); z != Bitset::npos; z = upper.find_next(z)) {
    if (upper.is_subset_of(poset.up_set(z))) return z;
  }
  return std::nullopt;
}

std::optional<Element> meet(const Poset& poset, Element x, Element y) {
  poset.check_element(x);
  poset.check_element(y);
  const Bitset lower = poset.down_set(x) & poset.down_set(y);
  for (auto z = lower.find_first(); z != Bitset::npos; z = lower.find_next(z)) {
    if (lower.is_subset_of(poset.down_set(z))) return z;
  }
  return std::nullopt;
}

bool is_lattice(const Poset& poset) {
  if (poset.empty()) return false;
  for (Element x = 0; x < poset.size(); ++x) {
    for (Element y = x + 1; y < poset.size(); ++y) {
      if (!join(poset, x, y) || !meet(poset, x, y)) return false;
    }
  }
  return true;
}

std::vector<Element> join_irreducible_elements(const Poset& lattice) {
  if (!is_lattice(lattice)) throw Error(ErrorKind::NotALattice, "poset is not a lattice");
  std::vector<Element> result;
  for (Element x = 0; x < lattice.size(); ++x) {
    Bitset below = lattice.down_set(x);
    below.reset(x);
    // In a finite lattice, x is join-irreducible iff it has exactly one lower cover.
    if (max_elements(lattice, below).size() == 1) result.push_back(x);
  }
  return result;
}

Poset join_irreducibles(const Poset& lattice) {
  return induced_subposet(lattice, join_irreducible_elements(lattice));
}

std::vector<Element> linear_extension(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> pending(n);
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x) {
    pending[x] = poset.down_set(x).count() - 1;
    if (pending[x] == 0) ready.push(x);
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    const Bitset& up = poset.up_set(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (y != x && --pending[y] == 0) ready.push(y);
    }
  }
  return order;
}

bool is_linear_extension(const Poset& poset, std::span<const Element> order) {
  const std::size_t n = poset.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != npos) return false;
    position[order[i]] = i;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (poset.less(x, y) && position[x] > position[y]) return false;
    }
  }
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto signature = [](const Poset& p, Element x) {
    return std::pair{p.down_set(x).count(), p.up_set(x).count()};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sig_a(n), sig_b(n);
  for (Element x = 0; x < n; ++x) {
    sig_a[x] = signature(a, x);
    sig_b[x] = signature(b, x);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<Element> map(n, npos);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool consistent = true;
      for (Element w = 0; w < x && consistent; ++w) {
        consistent = a.leq(w, x) == b.leq(map[w], y) && a.leq(x, w) == b.leq(y, map[w]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

}  // namespace walkcolor
