#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "sandgraph/error.hpp"
#include "sandgraph/generators.hpp"
#include "sandgraph/linegraph.hpp"
#include "sandgraph/sandpile.hpp"
#include "sandgraph/treecount.hpp"

namespace sandgraph::cli {

namespace {

// Bad graph files and unknown ids are usage errors, not failed checks.
struct InputError : Error {
  using Error::Error;
};

struct GraphSource {
  std::string path;
  std::optional<std::uint64_t> seed;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t k = 2;
};

Digraph load_graph(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return read_graph(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open graph file '" + path + "'");
    return read_graph(file);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string write_graph(const Digraph& g, const std::string& format) {
  if (format == "json") return to_json(g);
  return to_edge_list(g);
}

std::string least(std::vector<std::string> ids) {
  if (ids.empty()) throw InputError("graph has no vertices or edges to choose a default from");
  return *std::min_element(ids.begin(), ids.end());
}

std::vector<std::string> edge_ids(const Digraph& g) {
  std::vector<std::string> ids;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) ids.push_back(g.edge_id(e));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> non_loop_edge_ids(const Digraph& g) {
  std::vector<std::string> ids;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!g.is_loop(e)) ids.push_back(g.edge_id(e));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

void require_vertex(const Digraph& g, const std::string& id) {
  if (!g.has_vertex(id)) throw InputError("unknown vertex '" + id + "'");
}

void require_edge(const Digraph& g, const std::string& id) {
  if (!g.has_edge(id)) throw InputError("unknown edge '" + id + "'");
}

int emit(const Report& report, bool json, std::ostream& out) {
  if (json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? 0 : 1;
}

class Cli {
 public:
  Cli(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all", "Show help for every subcommand");
    add_gen();
    add_linegraph();
    add_kappa();
    add_sandpile();
    add_verify();
  }

  int run(const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app_.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app_.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n\n" << usage_for_failure();
      return 2;
    }
    try {
      return action_();
    } catch (const HypothesisError& e) {
      err_ << e.what() << "\n";
      return 1;
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return 1;
    }
  }

 private:
  std::string usage_for_failure() {
    for (auto* sub : app_.get_subcommands()) return sub->help();
    return app_.help();
  }

  Digraph input_graph(const GraphSource& src) {
    if (src.seed && src.path.empty()) return random_graph_(src);
    return load_graph(src.path, in_);
  }

  GraphSource& add_graph_source(CLI::App* cmd, std::size_t vertices, std::size_t edges) {
    GraphSource& src = sources_.emplace_back();
    src.vertices = vertices;
    src.edges = edges;
    cmd->add_option("graph", src.path, "Graph file (edge list or JSON); '-' or omitted reads stdin");
    cmd->add_option("--seed", src.seed, "Use a seeded random graph instead of reading input");
    cmd->add_option("--vertices", src.vertices, "Vertices of the random graph")->capture_default_str();
    cmd->add_option("--edges", src.edges, "Edges of the random source-free graph")->capture_default_str();
    cmd->add_option("--k", src.k, "Degree of the random balanced regular graph")->capture_default_str();
    return src;
  }

  void add_gen() {
    auto* gen = app_.add_subcommand("gen", "Emit a graph from a named family");
    gen->require_subcommand(1);
    gen->fallthrough();
    gen->add_option("--out", out_path_, "Write to FILE instead of standard output");
    gen->add_option("--format", format_, "edges or json")->check(CLI::IsMember({"edges", "json"}));

    auto simple = [this, gen](const std::string& name, const std::string& help, std::function<Digraph()> make) {
      auto* cmd = gen->add_subcommand(name, help);
      cmd->callback([this, make] { action_ = [this, make] { return emit_graph(make()); }; });
      return cmd;
    };
    simple("debruijn", "de Bruijn graph DB_n", [this] { return de_bruijn(n_); })
        ->add_option("n", n_, "Word length")->required();
    simple("kautz", "Kautz graph Kautz_n", [this] { return kautz(n_); })->add_option("n", n_)->required();
    simple("complete", "Complete directed graph with loops", [this] { return complete_directed(n_); })
        ->add_option("n", n_)->required();
    auto* bip = simple("bipartite", "Bidirected complete bipartite graph K_{m,n}",
                       [this] { return bidirected_complete_bipartite(m_, n_); });
    bip->add_option("m", m_)->required();
    bip->add_option("n", n_)->required();
    auto* multi = simple("multigraph", "Two vertices, m edges a->b and n edges b->a",
                         [this] { return two_vertex_multigraph(m_, n_); });
    multi->add_option("m", m_)->required();
    multi->add_option("n", n_)->required();
    simple("fibonacci", "({0,1}, {00, 01, 10})", [] { return fibonacci_graph(); });
    simple("loops", "One vertex with k loops", [this] { return one_vertex_loops(n_); })
        ->add_option("k", n_)->required();
    simple("cycle", "Directed n-cycle", [this] { return directed_cycle(n_); })->add_option("n", n_)->required();
    auto* rnd = simple("random", "Seeded random source-free graph", [this] {
      Rng rng(seed_);
      return random_source_free(rng, m_, n_);
    });
    rnd->add_option("--seed", seed_)->capture_default_str();
    rnd->add_option("--vertices", m_)->required();
    rnd->add_option("--edges", n_)->required();
    auto* reg = simple("regular", "Seeded random balanced k-regular strongly connected graph", [this] {
      Rng rng(seed_);
      return random_balanced_regular(rng, m_, n_);
    });
    reg->add_option("--seed", seed_)->capture_default_str();
    reg->add_option("--vertices", m_)->required();
    reg->add_option("--k", n_)->required();
  }

  int emit_graph(const Digraph& g) {
    const std::string text = write_graph(g, format_);
    if (out_path_.empty()) {
      out_ << text;
      return 0;
    }
    std::ofstream file(out_path_);
    if (!file) throw InputError("cannot write '" + out_path_ + "'");
    file << text;
    return 0;
  }

  void add_linegraph() {
    auto* cmd = app_.add_subcommand("linegraph", "Directed line graph (optionally iterated)");
    cmd->add_option("graph", graph_.path, "Graph file; '-' or omitted reads stdin");
    cmd->add_option("--iterate", iterate_, "Apply the construction N times")->capture_default_str();
    cmd->add_option("--format", format_, "edges or json")->check(CLI::IsMember({"edges", "json"}));
    cmd->add_option("--out", out_path_, "Write to FILE");
    cmd->callback([this] {
      action_ = [this] { return emit_graph(iterated_line_graph(load_graph(graph_.path, in_), iterate_).graph); };
    });
  }

  void add_kappa() {
    auto* cmd = app_.add_subcommand("kappa", "Oriented spanning tree counts and enumerators");
    cmd->add_option("graph", graph_.path, "Graph file; '-' or omitted reads stdin");
    cmd->add_option("--root", root_, "Count trees rooted at this vertex");
    cmd->add_option("--poly", poly_, "Print the edge- or vertex-weighted enumerator")
        ->check(CLI::IsMember({"edge", "vertex"}));
    cmd->add_flag("--total", total_, "Print only the total count");
    cmd->callback([this] { action_ = [this] { return run_kappa(); }; });
  }

  int run_kappa() {
    const Digraph g = load_graph(graph_.path, in_);
    if (!root_.empty()) require_vertex(g, root_);
    if (!poly_.empty()) {
      const Weighting kind = poly_ == "edge" ? Weighting::Edge : Weighting::Vertex;
      const SparsePoly p = root_.empty() ? kappa_poly(g, kind) : kappa_poly_rooted(g, g.vertex_index(root_), kind);
      out_ << p.to_string() << "\n";
      return 0;
    }
    if (!root_.empty()) {
      out_ << to_decimal(kappa_rooted(g, root_)) << "\n";
      return 0;
    }
    const std::vector<Integer> all = kappa_all_roots(g);
    Integer total = 0;
    for (const auto& k : all) total += k;
    if (!total_) {
      for (VertexIndex v = 0; v < g.vertex_count(); ++v) out_ << g.vertex_id(v) << " " << to_decimal(all[v]) << "\n";
      out_ << "total ";
    }
    out_ << to_decimal(total) << "\n";
    return 0;
  }

  void add_sandpile() {
    auto* cmd = app_.add_subcommand("sandpile", "Sandpile group K(G, v*) or K(line G, e*)");
    cmd->add_option("graph", graph_.path, "Graph file; '-' or omitted reads stdin");
    auto* base = cmd->add_option("--base", root_, "Base vertex v* (default: least vertex id)");
    cmd->add_option("--base-edge", edge_, "Compute K(line G, e*) for this edge instead")->excludes(base);
    cmd->add_flag("--json", json_, "Emit the JSON report");
    cmd->callback([this] { action_ = [this] { return run_sandpile(); }; });
  }

  int run_sandpile() {
    const Digraph g = load_graph(graph_.path, in_);
    std::optional<SandpilePresentation> k;
    if (!edge_.empty()) {
      require_edge(g, edge_);
      k = sandpile_group(line_graph(g).graph, edge_);
    } else {
      const std::string base = root_.empty() ? least(g.vertex_ids()) : root_;
      require_vertex(g, base);
      k = sandpile_group(g, base);
    }
    Report report = sandpile_report(*k);
    if (json_) {
      out_ << sandpile_json(*k, report).dump(2) << "\n";
    } else {
      out_ << report.to_text();
    }
    return report.passed() ? 0 : 1;
  }

  void add_verify() {
    auto* verify = app_.add_subcommand("verify", "Check a theorem exactly, optionally against brute force");
    verify->require_subcommand(1);
    verify->add_flag("--json", json_, "Emit the JSON report");
    verify->add_flag("--oracle", opts_.oracle, "Cross-check against exhaustive enumeration");

    auto graph_cmd = [this, verify](const std::string& name, const std::string& help, std::size_t v, std::size_t e,
                                    std::function<Report(const Digraph&)> body) {
      auto* cmd = verify->add_subcommand(name, help);
      GraphSource* src = &add_graph_source(cmd, v, e);
      cmd->add_flag("--json", json_, "Emit the JSON report");
      cmd->add_flag("--oracle", opts_.oracle, "Cross-check against exhaustive enumeration");
      cmd->callback([this, body, src] { action_ = [this, body, src] { return emit(body(input_graph(*src)), json_, out_); }; });
      return cmd;
    };
    random_graph_ = [](const GraphSource& src) {
      Rng rng(*src.seed);
      return random_source_free(rng, src.vertices, src.edges);
    };

    graph_cmd("thm1", "Weighted line-graph enumerator identity", 4, 7,
              [this](const Digraph& g) { return verify_theorem1(g, opts_); });

    auto* rooted = graph_cmd("rooted", "Rooted enumerator identity and product formula", 4, 7,
                             [this](const Digraph& g) { return for_base_edges(g, rooted_edges(g), [this, &g](const std::string& e) {
                               return verify_rooted_theorem(g, e, opts_);
                             }); });
    rooted->add_option("--edge", edge_, "Base edge e* (default: least admissible)");
    rooted->add_flag("--all-edges", all_edges_, "Check every admissible base edge");

    auto* knuth = graph_cmd("knuth", "Knuth's formula for kappa(line G, e*)", 4, 7,
                            [this](const Digraph& g) { return for_base_edges(g, knuth_edges(g), [this, &g](const std::string& e) {
                              return verify_knuth(g, e, opts_);
                            }); });
    knuth->add_option("--edge", edge_, "Base edge e* (default: least admissible)");
    knuth->add_flag("--all-edges", all_edges_, "Check every admissible base edge");

    auto* uni = graph_cmd("unicycle", "Unicycle lemma at a root", 4, 7, [this](const Digraph& g) {
      const std::string root = root_.empty() ? least(g.vertex_ids()) : root_;
      require_vertex(g, root);
      return verify_unicycle_lemma(g, root, opts_);
    });
    uni->add_option("--root", root_, "Vertex v* (default: least vertex id)");

    auto* delcon = graph_cmd("delcon", "Deletion-contraction for the edge enumerator", 4, 7, [this](const Digraph& g) {
      const std::string e = edge_.empty() ? least(non_loop_edge_ids(g)) : edge_;
      require_edge(g, e);
      return verify_deletion_contraction(g, e, opts_);
    });
    delcon->add_option("--edge", edge_, "Non-loop edge (default: least)");

    auto* indeg = graph_cmd("indeg-prop", "Trees of line G by indegree of a vertex e", 4, 7, [this](const Digraph& g) {
      const std::string e = edge_.empty() ? least(non_loop_edge_ids(g)) : edge_;
      require_edge(g, e);
      Report r = verify_line_indegree_counts(g, e, opts_);
      if (ell_) {
        r.result("requested ell=" + std::to_string(*ell_), to_decimal(count_trees_with_line_indegree(g, e, *ell_)));
      }
      return r;
    });
    indeg->add_option("--edge", edge_, "Non-loop edge (default: least)");
    indeg->add_option("--ell", ell_, "Also print the count for this indegree");

    auto* thm2 = verify->add_subcommand("thm2", "phi surjective with k-torsion kernel");
    GraphSource* thm2_src = &add_graph_source(thm2, 6, 0);
    thm2->add_flag("--json", json_, "Emit the JSON report");
    thm2->add_option("--edge", edge_, "Base edge e* (default: the two least edge ids)");
    thm2->add_flag("--all-edges", all_edges_, "Check every base edge");
    thm2->callback([this, thm2_src] {
      action_ = [this, thm2_src] {
        random_graph_ = [](const GraphSource& src) {
          Rng rng(*src.seed);
          return random_balanced_regular(rng, src.vertices, src.k);
        };
        const Digraph g = input_graph(*thm2_src);
        std::vector<std::string> edges = edge_ids(g);
        if (!edge_.empty()) {
          require_edge(g, edge_);
          edges = {edge_};
        } else if (!all_edges_ && edges.size() > 2) {
          edges.resize(2);
        }
        return emit(for_base_edges(g, edges, [&g](const std::string& e) { return verify_theorem2(g, e); }), json_,
                    out_);
      };
    });

    auto* thm5 = verify->add_subcommand("thm5", "Tree count of iterated line graphs, n = 0..N");
    GraphSource* thm5_src = &add_graph_source(thm5, 4, 7);
    thm5->add_flag("--json", json_, "Emit the JSON report");
    thm5->add_flag("--oracle", opts_.oracle, "Cross-check against exhaustive enumeration");
    thm5->add_option("--n", thm5_n_, "Largest iteration depth")->capture_default_str();
    thm5->add_option("--family", family_, "debruijn, ternary, kautz or fibonacci instead of a graph")
        ->check(CLI::IsMember({"debruijn", "ternary", "kautz", "fibonacci"}));
    thm5->callback([this, thm5_src] {
      action_ = [this, thm5_src] {
        if (!family_.empty()) return emit(thm5_family(), json_, out_);
        const Digraph g = input_graph(*thm5_src);
        Report r;
        r.command = "thm5";
        for (std::size_t n = 0; n <= thm5_n_; ++n) r.merge(verify_theorem5(g, n, opts_), "n=" + std::to_string(n) + ": ");
        return emit(r, json_, out_);
      };
    });

    auto* closed = verify->add_subcommand("closed-forms", "Sandpile groups of DB_n, Kautz_n and p-regular families");
    closed->add_option("--family", family_, "debruijn, kautz, pregular, sequences or all")
        ->check(CLI::IsMember({"debruijn", "kautz", "pregular", "sequences", "all"}));
    closed->add_option("--max-n", max_n_, "Largest n")->capture_default_str();
    closed->add_flag("--json", json_, "Emit the JSON report");
    closed->callback([this] { action_ = [this] { return emit(closed_forms(), json_, out_); }; });
  }

  std::vector<std::string> rooted_edges(const Digraph& g) {
    if (!edge_.empty()) {
      require_edge(g, edge_);
      return {edge_};
    }
    std::vector<std::string> ok;
    for (const auto& id : edge_ids(g)) {
      if (g.indegree(g.target(g.edge_index(id))) >= 2) ok.push_back(id);
    }
    // Leave hypothesis reporting to the theorem when nothing qualifies.
    if (ok.empty()) return {least(edge_ids(g))};
    if (!all_edges_) ok.resize(1);
    return ok;
  }

  std::vector<std::string> knuth_edges(const Digraph& g) {
    if (!edge_.empty()) {
      require_edge(g, edge_);
      return {edge_};
    }
    std::vector<std::string> ok;
    for (const auto& id : edge_ids(g)) {
      const VertexIndex v = g.target(g.edge_index(id));
      if (g.indegree(v) >= 2 && g.outdegree(v) >= 1) ok.push_back(id);
    }
    if (ok.empty()) return {least(edge_ids(g))};
    if (!all_edges_) ok.resize(1);
    return ok;
  }

  static Report for_base_edges(const Digraph&, const std::vector<std::string>& edges,
                               const std::function<Report(const std::string&)>& body) {
    if (edges.size() == 1) return body(edges.front());
    Report all;
    for (const auto& e : edges) {
      Report one = body(e);
      if (all.command.empty()) all.command = one.command.substr(0, one.command.find(' '));
      all.merge(one, "e*=" + e + ": ");
    }
    return all;
  }

  Report thm5_family() {
    Report r;
    r.command = "thm5 family " + family_;
    Digraph base;
    if (family_ == "debruijn") base = one_vertex_loops(2);
    if (family_ == "ternary") base = one_vertex_loops(3);
    if (family_ == "kautz") base = kautz(1);
    if (family_ == "fibonacci") base = fibonacci_graph();
    // F_1 = F_2 = 1
    std::vector<Integer> fib{0, 1, 1};
    while (fib.size() < thm5_n_ + 3) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (std::size_t n = 0; n <= thm5_n_; ++n) {
      const std::string tag = "n=" + std::to_string(n) + ": ";
      r.merge(verify_theorem5(base, n, opts_), tag);
      if (family_ == "fibonacci") {
        const Integer expected = power(Integer(2), fib[n + 2]);
        const Integer direct = kappa_total(iterated_line_graph(base, n).graph);
        r.check(tag + "kappa(line^n G) = 2^F_(n+2)", direct == expected, to_decimal(direct) + " vs " + to_decimal(expected));
      }
    }
    return r;
  }

  Report closed_forms() {
    Report r;
    r.command = "closed-forms";
    const std::string f = family_.empty() ? "all" : family_;
    if (f == "debruijn" || f == "all") r.merge(verify_de_bruijn_groups(max_n_), "");
    if (f == "kautz" || f == "all") r.merge(verify_kautz_groups(max_n_), "");
    if (f == "pregular" || f == "all") {
      r.merge(verify_p_regular_specializations(max_n_), "");
      r.merge(verify_p_regular_groups(one_vertex_loops(3), 3, std::min<std::size_t>(max_n_, 3)), "p=3: ");
    }
    if (f == "sequences" || f == "all") r.merge(verify_sequence_counts(max_n_), "");
    return r;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_{"Spanning trees, sandpile groups and line graphs of directed multigraphs", "sandgraph"};
  std::function<int()> action_;
  std::function<Digraph(const GraphSource&)> random_graph_;

  GraphSource graph_;
  std::deque<GraphSource> sources_;
  VerifyOptions opts_;
  std::string out_path_;
  std::string format_ = "edges";
  std::string root_;
  std::string edge_;
  std::string poly_;
  std::string family_;
  std::optional<std::size_t> ell_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t iterate_ = 1;
  std::size_t thm5_n_ = 3;
  std::size_t max_n_ = 5;
  std::uint64_t seed_ = 1;
  bool total_ = false;
  bool json_ = false;
  bool all_edges_ = false;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Cli cli(in, out, err);
  return cli.run(args);
}

}  // namespace sandgraph::cli
