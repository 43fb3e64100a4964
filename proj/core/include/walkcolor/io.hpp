#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "walkcolor/digraph.hpp"
#include "walkcolor/poset.hpp"
#include "walkcolor/transforms.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace walkcolor::io {

using nlohmann::json;

// Every reader throws Error(ParseError) on malformed input.

// {"elements": [labels...], "leq": [[i, j], ...]}. On input "leq" may list
// cover or partial relations (the closure is taken); on output it always lists
// the full reflexive-transitive relation. Antichain lattices also carry
// "base" (the poset they were built from) and "antichains".
json poset_to_json(const Poset& poset);
Poset poset_from_json(const json& doc, std::size_t limit = kDefaultAntichainLimit);

// {"n": int, "edges": [[u, v], ...]}
json digraph_to_json(const Digraph& graph);
Digraph digraph_from_json(const json& doc);

// One "u v" pair per line; '#' starts a comment. A line "n <count>" fixes the
// vertex count, otherwise it is one more than the largest id.
Digraph digraph_from_edge_list(std::istream& in);

std::string digraph_to_dot(const Digraph& graph);

// {"k": int, "poset": <poset>, "colors": [{"walk": [...], "color": id}, ...]}
// with colors listed in lexicographic walk order. On input "poset" may also
// be a string naming a poset file, resolved against `base_dir`.
json coloring_to_json(const WalkColoring& coloring);
WalkColoring coloring_from_json(const json& doc, const Digraph& graph, std::size_t limit = kDefaultAntichainLimit,
                                const std::filesystem::path& base_dir = {});

// {"ground": int, "sets": [[...], ...]}, one set per element of `poset`.
json representation_to_json(const SetRepresentation& rep);
SetRepresentation representation_from_json(const json& doc, std::shared_ptr<const Poset> poset);

json read_json_file(const std::filesystem::path& path);
Poset read_poset(const std::filesystem::path& path, std::size_t limit = kDefaultAntichainLimit);
// Picks JSON or edge-list format by content.
Digraph read_digraph(const std::filesystem::path& path);

}  // namespace walkcolor::io
