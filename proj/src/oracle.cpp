#include "sandgraph/oracle.hpp"

#include <algorithm>
#include <string>

#include "sandgraph/error.hpp"

namespace sandgraph::oracle {

std::vector<EdgeIndex> OrientedTree::edges() const {
  std::vector<EdgeIndex> out;
  for (VertexIndex v = 0; v < out_edge.size(); ++v) {
    if (v != root) out.push_back(out_edge[v]);
  }
  return out;
}

bool Unicycle::on_cycle(VertexIndex v) const { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); }

bool Unicycle::cycle_contains_edge(const Digraph& g, EdgeIndex e) const {
  const VertexIndex s = g.source(e);
  return out_edge[s] == e && on_cycle(s);
}

namespace {

VariablesPtr edge_variables(const Digraph& g) {
  std::vector<std::string> names;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) names.push_back(g.edge_id(e));
  return make_variables(std::move(names));
}

VariablesPtr vertex_variables(const Digraph& g) { return make_variables(g.vertex_ids()); }

void check_caps(const Digraph& g, const std::vector<VertexIndex>& choosers, const Caps& caps) {
  if (g.vertex_count() > caps.max_vertices) {
    throw Error("oracle cap exceeded: " + std::to_string(g.vertex_count()) +
                " vertices; use the matrix-tree path instead");
  }
  Integer product = 1;
  for (VertexIndex v : choosers) {
    product *= static_cast<unsigned long>(g.outdegree(v));
    if (product > caps.max_choices) {
      throw Error("oracle cap exceeded: more than " + std::to_string(caps.max_choices) +
                  " out-edge choices; use the matrix-tree path instead");
    }
  }
}

// Visits every assignment of one out-edge to each vertex in `choosers`.
template <typename Visit>
void for_each_choice(const Digraph& g, const std::vector<VertexIndex>& choosers, std::vector<EdgeIndex>& out_edge,
                     Visit&& visit) {
  for (VertexIndex v : choosers) {
    if (g.outdegree(v) == 0) return;
  }
  std::vector<std::size_t> digit(choosers.size(), 0);
  for (std::size_t i = 0; i < choosers.size(); ++i) out_edge[choosers[i]] = g.out_edges(choosers[i])[0];
  while (true) {
    visit();
    std::size_t i = 0;
    for (; i < choosers.size(); ++i) {
      const VertexIndex v = choosers[i];
      if (++digit[i] < g.outdegree(v)) {
        out_edge[v] = g.out_edges(v)[digit[i]];
        break;
      }
      digit[i] = 0;
      out_edge[v] = g.out_edges(v)[0];
    }
    if (i == choosers.size()) return;
  }
}

}  // namespace

TreeEnumeration enumerate_trees(const Digraph& g, VertexIndex root, const Caps& caps) {
  if (root >= g.vertex_count()) throw Error("enumerate_trees: root out of range");
  std::vector<VertexIndex> choosers;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v != root) choosers.push_back(v);
  }
  check_caps(g, choosers, caps);

  TreeEnumeration result;
  result.edge_poly = SparsePoly(edge_variables(g));
  result.vertex_poly = SparsePoly(vertex_variables(g));
  std::vector<EdgeIndex> out_edge(g.vertex_count(), 0);
  // state: 0 unvisited, 1 on current walk, 2 known to reach the root
  std::vector<int> state(g.vertex_count());
  std::vector<std::uint32_t> edge_exp(g.edge_count());
  std::vector<std::uint32_t> vertex_exp(g.vertex_count());

  for_each_choice(g, choosers, out_edge, [&] {
    std::fill(state.begin(), state.end(), 0);
    state[root] = 2;
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
      std::vector<VertexIndex> walk;
      VertexIndex v = start;
      while (state[v] == 0) {
        state[v] = 1;
        walk.push_back(v);
        v = g.target(out_edge[v]);
      }
      if (state[v] == 1) return;  // closed a cycle
      for (VertexIndex w : walk) state[w] = 2;
    }
    OrientedTree tree{root, out_edge};
    std::fill(edge_exp.begin(), edge_exp.end(), 0);
    std::fill(vertex_exp.begin(), vertex_exp.end(), 0);
    for (EdgeIndex e : tree.edges()) {
      ++edge_exp[e];
      ++vertex_exp[g.target(e)];
    }
    result.edge_poly.add_term(edge_exp, 1);
    result.vertex_poly.add_term(vertex_exp, 1);
    result.trees.push_back(std::move(tree));
  });
  result.count = static_cast<unsigned long>(result.trees.size());
  return result;
}

UnicycleEnumeration enumerate_unicycles(const Digraph& g, std::optional<VertexIndex> through, const Caps& caps) {
  if (through && *through >= g.vertex_count()) throw Error("enumerate_unicycles: vertex out of range");
  std::vector<VertexIndex> choosers(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) choosers[v] = v;
  check_caps(g, choosers, caps);

  UnicycleEnumeration result;
  result.edge_poly = SparsePoly(edge_variables(g));
  if (g.vertex_count() == 0) return result;
  std::vector<EdgeIndex> out_edge(g.vertex_count(), 0);
  std::vector<int> color(g.vertex_count());
  std::vector<std::uint32_t> edge_exp(g.edge_count());

  for_each_choice(g, choosers, out_edge, [&] {
    // Functional graph: count cycles by walking from every vertex.
    std::fill(color.begin(), color.end(), 0);
    std::vector<VertexIndex> cycle;
    std::size_t cycles = 0;
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
      std::vector<VertexIndex> walk;
      VertexIndex v = start;
      while (color[v] == 0) {
        color[v] = 1;
        walk.push_back(v);
        v = g.target(out_edge[v]);
      }
      if (color[v] == 1) {
        ++cycles;
        if (cycles > 1) return;
        const auto pos = std::find(walk.begin(), walk.end(), v);
        cycle.assign(pos, walk.end());
      }
      for (VertexIndex w : walk) color[w] = 2;
    }
    if (cycles != 1) return;
    Unicycle u{out_edge, cycle};
    if (through && !u.on_cycle(*through)) return;
    std::fill(edge_exp.begin(), edge_exp.end(), 0);
    for (EdgeIndex e : out_edge) ++edge_exp[e];
    result.edge_poly.add_term(edge_exp, 1);
    result.unicycles.push_back(std::move(u));
  });
  result.count = static_cast<unsigned long>(result.unicycles.size());
  return result;
}

}  // namespace sandgraph::oracle
