#include "walkcolor/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "walkcolor/error.hpp"

namespace walkcolor::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) parse_error(std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

std::size_t as_index(const json& value, const char* what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
    parse_error(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<std::size_t> as_index_list(const json& value, const char* what) {
  if (!value.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<std::size_t> ids;
  for (const auto& v : value) ids.push_back(as_index(v, what));
  return ids;
}

std::pair<std::size_t, std::size_t> as_pair(const json& value, const char* what) {
  if (!value.is_array() || value.size() != 2) parse_error(std::string(what) + " entries must be [a, b] pairs");
  return {as_index(value[0], what), as_index(value[1], what)};
}

// Runs `body`, turning nlohmann exceptions into ParseError.
template <class F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

}  // namespace

json poset_to_json(const Poset& poset) {
  json doc;
  doc["elements"] = poset.labels();
  json leq = json::array();
  for (const auto& [x, y] : poset.relation_pairs()) leq.push_back({x, y});
  doc["leq"] = std::move(leq);
  if (poset.is_antichain_lattice()) {
    doc["base"] = poset_to_json(poset.base());
    json antichains = json::array();
    for (Element x = 0; x < poset.size(); ++x) antichains.push_back(poset.antichain(x).elements);
    doc["antichains"] = std::move(antichains);
  }
  return doc;
}

Poset poset_from_json(const json& doc, std::size_t limit) {
  return guarded([&] {
    const json& elements = field(doc, "elements");
    if (!elements.is_array()) parse_error("\"elements\" must be an array");
    std::vector<std::string> labels;
    for (const auto& e : elements) labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());

    std::vector<std::pair<Element, Element>> pairs;
    const json& leq = field(doc, "leq");
    if (!leq.is_array()) parse_error("\"leq\" must be an array");
    for (const auto& p : leq) pairs.push_back(as_pair(p, "leq"));
    Poset poset = from_cover_relations(labels.size(), pairs, labels);

    if (!doc.contains("base")) return poset;
    Poset lattice = birkhoff(poset_from_json(doc.at("base"), limit), limit);
    if (!same_order(lattice, poset)) parse_error("\"leq\" does not match the antichain lattice of \"base\"");
    if (doc.contains("antichains")) {
      const json& antichains = doc.at("antichains");
      if (!antichains.is_array() || antichains.size() != lattice.size()) {
        parse_error("\"antichains\" does not list every element of A(base)");
      }
      for (Element x = 0; x < lattice.size(); ++x) {
        if (as_index_list(antichains[x], "antichain") != lattice.antichain(x).elements) {
          parse_error("antichain " + std::to_string(x) + " does not match A(base)");
        }
      }
    }
    return lattice;
  });
}

json digraph_to_json(const Digraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.from, e.to});
  return json{{"edges", std::move(edges)}, {"n", graph.size()}};
}

Digraph digraph_from_json(const json& doc) {
  return guarded([&] {
    const std::size_t n = as_index(field(doc, "n"), "n");
    const json& list = field(doc, "edges");
    if (!list.is_array()) parse_error("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& e : list) {
      auto [u, v] = as_pair(e, "edges");
      edges.push_back({u, v});
    }
    return Digraph(n, edges);
  });
}

Digraph digraph_from_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t top = 0;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "n") {
      std::size_t n;
      if (!(fields >> n)) parse_error("line " + std::to_string(number) + ": expected \"n <count>\"");
      declared = n;
      continue;
    }
    std::size_t u, v;
    std::istringstream head(first);
    if (!(head >> u) || !head.eof() || !(fields >> v)) {
      parse_error("line " + std::to_string(number) + ": expected \"u v\"");
    }
    std::string rest;
    if (fields >> rest) parse_error("line " + std::to_string(number) + ": trailing text");
    edges.push_back({u, v});
    top = std::max({top, u + 1, v + 1});
  }
  return Digraph(declared.value_or(top), edges);
}

std::string digraph_to_dot(const Digraph& graph) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < graph.size(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : graph.edges()) out << "  " << e.from << " -> " << e.to << ";\n";
  out << "}\n";
  return out.str();
}

json coloring_to_json(const WalkColoring& coloring) {
  json colors = json::array();
  coloring.for_each([&](std::span<const Vertex> walk, Element color) {
    colors.push_back(json{{"color", color}, {"walk", std::vector<Vertex>(walk.begin(), walk.end())}});
  });
  return json{{"colors", std::move(colors)}, {"k", coloring.k()}, {"poset", poset_to_json(coloring.poset())}};
}

WalkColoring coloring_from_json(const json& doc, const Digraph& graph, std::size_t limit,
                                const std::filesystem::path& base_dir) {
  return guarded([&] {
    const std::size_t k = as_index(field(doc, "k"), "k");
    if (k == 0) parse_error("\"k\" must be at least 1");
    const json& poset_doc = field(doc, "poset");
    Poset poset = poset_doc.is_string() ? read_poset(base_dir / poset_doc.get<std::string>(), limit)
                                        : poset_from_json(poset_doc, limit);
    WalkColoring coloring(std::make_shared<const Digraph>(graph), k, std::make_shared<const Poset>(std::move(poset)));
    const json& colors = field(doc, "colors");
    if (!colors.is_array()) parse_error("\"colors\" must be an array");
    for (const auto& entry : colors) {
      const auto walk = as_index_list(field(entry, "walk"), "walk");
      const Element color = as_index(field(entry, "color"), "color");
      if (coloring.find(walk)) parse_error("walk listed twice in \"colors\"");
      try {
        coloring.set(walk, color);
      } catch (const Error& e) {
        parse_error(e.what());
      }
    }
    return coloring;
  });
}

json representation_to_json(const SetRepresentation& rep) {
  json sets = json::array();
  for (const Bitset& s : rep.sets) {
    std::vector<std::size_t> members;
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) members.push_back(i);
    sets.push_back(members);
  }
  return json{{"ground", rep.ground_size}, {"sets", std::move(sets)}};
}

SetRepresentation representation_from_json(const json& doc, std::shared_ptr<const Poset> poset) {
  return guarded([&] {
    SetRepresentation rep;
    rep.ground_size = as_index(field(doc, "ground"), "ground");
    const json& sets = field(doc, "sets");
    if (!sets.is_array()) parse_error("\"sets\" must be an array");
    for (const auto& s : sets) {
      Bitset bits(rep.ground_size);
      for (std::size_t i : as_index_list(s, "sets")) {
        if (i >= rep.ground_size) parse_error("set member " + std::to_string(i) + " outside the ground set");
        bits.set(i);
      }
      rep.sets.push_back(std::move(bits));
    }
    rep.poset = std::move(poset);
    return rep;
  });
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Poset read_poset(const std::filesystem::path& path, std::size_t limit) {
  return poset_from_json(read_json_file(path), limit);
}

Digraph read_digraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') return digraph_from_json(read_json_file(path));
  return digraph_from_edge_list(in);
}

}  // namespace walkcolor::io
