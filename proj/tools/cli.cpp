#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "walkcolor/digraph.hpp"
#include "walkcolor/error.hpp"
#include "walkcolor/io.hpp"
#include "walkcolor/monochromatic.hpp"
#include "walkcolor/poset.hpp"
#include "walkcolor/solvers.hpp"
#include "walkcolor/symmetry.hpp"
#include "walkcolor/transforms.hpp"
#include "walkcolor/walk_coloring.hpp"

namespace walkcolor::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  std::size_t limit = kDefaultAntichainLimit;
  std::size_t max_n = kDefaultChromaticLimit;
  std::string output;

  std::string graph;
  std::string poset;
  std::string coloring;
  std::string representation;
  std::string runs;
  std::vector<std::size_t> bounds;
  std::vector<std::size_t> colors;
  std::size_t k = 1;
  std::optional<std::size_t> target_k;
  std::size_t power = 1;
  std::size_t count = 0;
  std::size_t steps = 1;
  std::uint64_t seed = 0;
  bool relaxed = false;
  bool distributive = false;
  bool trace = false;
  bool list = false;
};

int exit_code_for(ErrorKind kind) {
  if (is_resource_limit(kind)) return kResourceLimit;
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfRange:
    case ErrorKind::CycleInCoverRelations:
      return kUsage;
    default:
      return kInfeasible;
  }
}

json optional_json(const std::optional<std::size_t>& value) { return value ? json(*value) : json(nullptr); }

class Runner {
 public:
  Runner(Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int poset_birkhoff() {
    emit(io::poset_to_json(birkhoff_power(load_poset(), opt_.power, opt_.limit)));
    return kOk;
  }

  int poset_dilworth() {
    emit(json{{"dilworth", dilworth_number(load_poset())}});
    return kOk;
  }

  int poset_irreducibles() {
    emit(io::poset_to_json(join_irreducibles(load_poset())));
    return kOk;
  }

  int poset_product() {
    emit(io::poset_to_json(product_poset(opt_.bounds, std::min(opt_.limit, kMaxDenseElements))));
    return kOk;
  }

  int poset_trivial() {
    emit(io::poset_to_json(trivial_poset(opt_.count)));
    return kOk;
  }

  int poset_chain() {
    emit(io::poset_to_json(chain_poset(opt_.count)));
    return kOk;
  }

  int poset_diamond() {
    emit(io::poset_to_json(diamond_poset()));
    return kOk;
  }

  int graph_chi() {
    const Digraph g = load_graph();
    const auto colors = optimal_vertex_coloring(g, opt_.max_n);
    const std::size_t chi = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    emit(json{{"chi", chi}, {"coloring", colors}});
    return kOk;
  }

  int graph_length() {
    const auto length = longest_walk_length(load_graph());
    emit(json{{"acyclic", length.has_value()}, {"length", optional_json(length)}});
    return kOk;
  }

  int graph_walks() {
    const Digraph g = load_graph();
    json doc{{"count", count_walks(g, opt_.k)}, {"k", opt_.k}};
    if (opt_.list) {
      json walks = json::array();
      for_each_walk(g, opt_.k, [&](std::span<const Vertex> w) { walks.push_back(Walk(w.begin(), w.end())); });
      doc["walks"] = std::move(walks);
    }
    emit(doc);
    return kOk;
  }

  int graph_orient() {
    const Digraph symmetric = undirected_version(load_graph());
    const Poset p = load_poset();
    std::vector<Element> colors = opt_.colors;
    if (colors.empty()) {
      // Any proper coloring by distinct elements of P will do.
      colors = optimal_vertex_coloring(symmetric, opt_.max_n);
      const std::size_t used = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
      if (used > p.size()) {
        emit(json{{"chi", used}, {"feasible", false}});
        return kInfeasible;
      }
    } else if (colors.size() != symmetric.size()) {
      throw Error(ErrorKind::InvalidArgument, "--colors needs one color per vertex");
    }
    const Digraph oriented = orient_from_coloring(symmetric, p, colors, linear_extension(p));
    emit(json{{"colors", colors}, {"feasible", true}, {"graph", io::digraph_to_json(oriented)}});
    return kOk;
  }

  int graph_dot() {
    sink() << io::digraph_to_dot(load_graph());
    return kOk;
  }

  int color_verify() {
    const Digraph g = load_graph();
    const Verdict verdict = verify_coloring(load_coloring(g));
    if (verdict.valid()) {
      emit(json{{"valid", true}});
      return kOk;
    }
    emit(json{{"counterexample", *verdict.counterexample}, {"valid", false}});
    return kInfeasible;
  }

  int color_reduce() {
    const Digraph g = load_graph();
    emit(io::coloring_to_json(reduce_coloring(load_coloring(g), opt_.limit)));
    return kOk;
  }

  int color_lift() {
    const Digraph g = load_graph();
    const WalkColoring c = load_coloring(g);
    emit(io::coloring_to_json(opt_.relaxed ? lift_coloring_relaxed(c) : lift_coloring(c)));
    return kOk;
  }

  int color_expand() {
    const Digraph g = load_graph();
    const WalkColoring c = load_coloring(g);
    const int modes = !opt_.representation.empty() + opt_.distributive + opt_.target_k.has_value();
    if (modes != 1) {
      throw Error(ErrorKind::InvalidArgument, "choose exactly one of --to, --representation, --distributive");
    }
    if (opt_.target_k) {
      emit(io::coloring_to_json(expand_trivial(c, *opt_.target_k)));
    } else if (opt_.distributive) {
      emit(io::coloring_to_json(expand_distributive(c)));
    } else {
      const auto rep = io::representation_from_json(io::read_json_file(opt_.representation), c.poset_ptr());
      emit(io::coloring_to_json(expand_representation(c, rep)));
    }
    return kOk;
  }

  int color_decide() {
    const auto result = decide_kwalk_colorable(load_graph(), opt_.k, load_poset(), limits());
    if (!result) {
      emit(json{{"feasible", false}});
      return kInfeasible;
    }
    emit(json{{"coloring", io::coloring_to_json(*result)}, {"feasible", true}});
    return kOk;
  }

  int color_mono() {
    const Digraph g = load_graph();
    if (!opt_.runs.empty()) {
      opt_.coloring = opt_.runs;
      emit(io::coloring_to_json(mono_profile_vertex_coloring(load_coloring(g), opt_.bounds)));
      return kOk;
    }
    const auto result = bounded_mono_edge_coloring(g, opt_.bounds, limits());
    if (!result) {
      emit(json{{"feasible", false}});
      return kInfeasible;
    }
    emit(json{{"coloring", io::coloring_to_json(*result)}, {"feasible", true}});
    return kOk;
  }

  int index_directed() {
    emit(json{{"index", directed_chromatic_index(load_graph(), limits())}});
    return kOk;
  }

  int index_bounds() {
    const BoundsReport r = bounds_report(load_graph(), limits());
    emit(json{{"chi", r.chi},
              {"length", optional_json(r.length)},
              {"log2_chi", r.log2_chi},
              {"log2_len1", optional_json(r.log2_len1)},
              {"sperner_r", r.sperner_r_of_chi}});
    return kOk;
  }

  int index_sperner() {
    emit(json{{"r", sperner_r(opt_.count)}});
    return kOk;
  }

  int cv_run() {
    const RunResult run = run_to_small(ListState::shuffled(opt_.count, opt_.seed));
    if (opt_.trace) {
      for (std::size_t round = 0; round < run.domain_trace.size(); ++round) {
        emit(json{{"domain", run.domain_trace[round]}, {"round", round}});
      }
    }
    const ListState three = reduce_to_three(run.state);
    emit(json{{"domain", three.domain_size},
              {"log_star", log_star(static_cast<double>(opt_.count))},
              {"n", opt_.count},
              {"proper", three.is_proper()},
              {"rounds", run.rounds},
              {"ruling_set", ruling_set(three)},
              {"seed", opt_.seed}});
    return kOk;
  }

  int cv_compose() {
    const ComposedColoring composed = composed_walk_coloring(opt_.count, opt_.steps, opt_.limit);
    const auto& cex = composed.verdict.counterexample;
    emit(json{{"counterexample", cex ? json(*cex) : json(nullptr)},
              {"domain", composed.coloring.poset().size()},
              {"n", opt_.count},
              {"steps", opt_.steps},
              {"valid", composed.verdict.valid()},
              {"walks", composed.coloring.assigned()}});
    return composed.verdict.valid() ? kOk : kInfeasible;
  }

 private:
  SolverLimits limits() const {
    SolverLimits l;
    l.max_vertices = opt_.max_n;
    l.max_chromatic_vertices = opt_.max_n;
    l.antichain_limit = opt_.limit;
    return l;
  }

  Digraph load_graph() const { return io::read_digraph(opt_.graph); }
  Poset load_poset() const { return io::read_poset(opt_.poset, opt_.limit); }

  WalkColoring load_coloring(const Digraph& g) const {
    const fs::path path(opt_.coloring);
    json doc = io::read_json_file(path);
    // accept the output of `color decide` as is
    if (doc.is_object() && doc.contains("coloring")) doc = doc.at("coloring");
    return io::coloring_from_json(doc, g, opt_.limit, path.parent_path());
  }

  std::ostream& sink() {
    if (opt_.output.empty()) return out_;
    if (!file_) {
      file_.emplace(opt_.output);
      if (!*file_) throw Error(ErrorKind::ParseError, "cannot write " + opt_.output);
    }
    return *file_;
  }

  void emit(const json& doc) { sink() << doc.dump() << '\n'; }

  Options& opt_;
  std::ostream& out_;
  std::optional<std::ofstream> file_;
};

using Action = int (Runner::*)();

class Parser {
 public:
  explicit Parser(Options& opt) : opt_(opt), app_("Posets, walk colorings and coin tossing", "walkcolor") {
    app_.option_defaults()->always_capture_default();
    app_.add_option("--limit", opt_.limit, "Cap on materialized antichains")->check(CLI::PositiveNumber);
    app_.add_option("--max-n", opt_.max_n, "Vertex cap for exact solvers")->check(CLI::PositiveNumber);
    app_.add_option("-o,--output", opt_.output, "Write the result to this file");
    app_.fallthrough();
    app_.require_subcommand(1);

    auto* poset = group("poset", "Poset constructions");
    leaf(poset, "birkhoff", "Antichain lattice A(P), or A^m(P) with --power", &Runner::poset_birkhoff,
         [&](CLI::App* c) {
           poset_arg(c);
           c->add_option("--power", opt_.power, "How many times to apply A");
         });
    leaf(poset, "dilworth", "Size of a maximum antichain", &Runner::poset_dilworth, [&](CLI::App* c) { poset_arg(c); });
    leaf(poset, "irreducibles", "Join-irreducibles J(L) of a lattice", &Runner::poset_irreducibles,
         [&](CLI::App* c) { poset_arg(c); });
    leaf(poset, "product", "Product order on [0,l1] x ... x [0,ln]", &Runner::poset_product, [&](CLI::App* c) {
      c->add_option("bounds", opt_.bounds, "Upper bounds l1 ... ln")->required();
    });
    leaf(poset, "trivial", "Antichain on n elements", &Runner::poset_trivial, [&](CLI::App* c) { count_arg(c, "n"); });
    leaf(poset, "chain", "Chain 0 < 1 < ... < n-1", &Runner::poset_chain, [&](CLI::App* c) { count_arg(c, "n"); });
    leaf(poset, "diamond", "{0, a, b, 1}", &Runner::poset_diamond, [](CLI::App*) {});

    auto* graph = group("graph", "Digraph queries");
    leaf(graph, "chi", "Chromatic number of the undirected version", &Runner::graph_chi,
         [&](CLI::App* c) { graph_arg(c); });
    leaf(graph, "length", "Length of a longest walk (null when cyclic)", &Runner::graph_length,
         [&](CLI::App* c) { graph_arg(c); });
    leaf(graph, "walks", "Count (or --list) the k-walks", &Runner::graph_walks, [&](CLI::App* c) {
      graph_arg(c);
      k_opt(c);
      c->add_flag("--list", opt_.list, "Also list the walks");
    });
    leaf(graph, "orient", "Acyclic orientation induced by a coloring into P", &Runner::graph_orient,
         [&](CLI::App* c) {
           graph_arg(c);
           poset_arg(c);
           c->add_option("--colors", opt_.colors, "Color per vertex (default: an optimal coloring)")
               ->delimiter(',');
         });
    leaf(graph, "dot", "Export in DOT format", &Runner::graph_dot, [&](CLI::App* c) { graph_arg(c); });

    auto* color = group("color", "Walk colorings");
    leaf(color, "verify", "Check a coloring; exit 1 with a counterexample walk", &Runner::color_verify,
         [&](CLI::App* c) { coloring_args(c); });
    leaf(color, "reduce", "k-walk P-coloring to (k-1)-walk A(P)-coloring", &Runner::color_reduce,
         [&](CLI::App* c) { coloring_args(c); });
    leaf(color, "lift", "(k-1)-walk A(P)-coloring to k-walk P-coloring", &Runner::color_lift, [&](CLI::App* c) {
      coloring_args(c);
      c->add_flag("--relaxed", opt_.relaxed, "Pick from I(prefix) \\ I(suffix)");
    });
    leaf(color, "expand", "Expansion to longer walks", &Runner::color_expand, [&](CLI::App* c) {
      coloring_args(c);
      c->add_option("--to", opt_.target_k, "Trivial expansion to k'-walks");
      c->add_option("--representation", opt_.representation, "Set representation JSON")->check(CLI::ExistingFile);
      c->add_flag("--distributive", opt_.distributive, "Expand into J(L) of a distributive lattice");
    });
    leaf(color, "decide", "Decide P-colorability of the k-walks", &Runner::color_decide, [&](CLI::App* c) {
      graph_arg(c);
      poset_arg(c);
      k_opt(c);
    });
    leaf(color, "mono", "Edge coloring with bounded monochromatic walks", &Runner::color_mono, [&](CLI::App* c) {
      graph_arg(c);
      c->add_option("--bounds", opt_.bounds, "Per-color walk length bounds")->delimiter(',')->required();
      c->add_option("--runs", opt_.runs, "Emit the run-length profile of this coloring instead")
          ->check(CLI::ExistingFile);
    });

    auto* index = group("index", "Directed chromatic index");
    leaf(index, "directed", "Exact directed chromatic index", &Runner::index_directed,
         [&](CLI::App* c) { graph_arg(c); });
    leaf(index, "bounds", "chi-based and length-based bounds", &Runner::index_bounds,
         [&](CLI::App* c) { graph_arg(c); });
    leaf(index, "sperner", "Least r with m <= C(r, floor(r/2))", &Runner::index_sperner, [&](CLI::App* c) {
      c->add_option("m", opt_.count, "m >= 1")->required()->check(CLI::PositiveNumber);
    });

    auto* cv = group("cv", "Deterministic coin tossing on a list");
    leaf(cv, "run", "Shrink a shuffled list coloring, then 3-color and pick a ruling set", &Runner::cv_run,
         [&](CLI::App* c) {
           c->add_option("--n", opt_.count, "List length")->required();
           c->add_option("--seed", opt_.seed, "Shuffle seed");
           c->add_flag("--trace", opt_.trace, "Emit the domain size of every round");
         });
    leaf(cv, "compose", "Check the composed step as a walk coloring", &Runner::cv_compose, [&](CLI::App* c) {
      c->add_option("--n", opt_.count, "Initial color count")->required()->check(CLI::PositiveNumber);
      c->add_option("--steps", opt_.steps, "Rounds to compose")->required()->check(CLI::PositiveNumber);
    });
  }

  CLI::App& app() { return app_; }

  Action selected() const {
    for (const auto& [command, action] : leaves_) {
      if (command->parsed()) return action;
    }
    return nullptr;
  }

 private:
  CLI::App* group(const char* name, const char* description) {
    auto* command = app_.add_subcommand(name, description);
    command->require_subcommand(1);
    return command;
  }

  template <class Configure>
  void leaf(CLI::App* parent, const char* name, const char* description, Action action, Configure&& configure) {
    auto* command = parent->add_subcommand(name, description);
    configure(command);
    leaves_.emplace_back(command, action);
  }

  void graph_arg(CLI::App* c) {
    c->add_option("graph", opt_.graph, "Digraph JSON or edge list")->required()->check(CLI::ExistingFile);
  }
  void poset_arg(CLI::App* c) {
    c->add_option("poset", opt_.poset, "Poset JSON")->required()->check(CLI::ExistingFile);
  }
  void coloring_args(CLI::App* c) {
    graph_arg(c);
    c->add_option("coloring", opt_.coloring, "Walk coloring JSON")->required()->check(CLI::ExistingFile);
  }
  void count_arg(CLI::App* c, const char* name) { c->add_option(name, opt_.count)->required(); }
  void k_opt(CLI::App* c) { c->add_option("-k,--k", opt_.k, "Walk order")->check(CLI::PositiveNumber); }

  Options& opt_;
  CLI::App app_;
  std::vector<std::pair<CLI::App*, Action>> leaves_;
};

void report(std::ostream& err, const std::string& kind, const std::string& message,
            const std::vector<std::size_t>& witness = {}) {
  json doc{{"error", kind}, {"message", message}};
  if (!witness.empty()) doc["witness"] = witness;
  err << doc.dump() << '\n';
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  Parser parser(opt);
  try {
    parser.app().parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::Success& e) {
    return parser.app().exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "usage", e.what());
    return kUsage;
  }

  const Action action = parser.selected();
  if (action == nullptr) {
    report(err, "usage", "missing subcommand");
    return kUsage;
  }
  try {
    Runner runner(opt, out);
    return (runner.*action)();
  } catch (const Error& e) {
    report(err, std::string(to_string(e.kind())), e.what(), e.witness());
    return exit_code_for(e.kind());
  } catch (const std::bad_alloc&) {
    report(err, "out_of_memory", "allocation failed");
    return kResourceLimit;
  }
}

}  // namespace walkcolor::cli
