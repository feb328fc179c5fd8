#include "sandgraph/linegraph.hpp"

#include <map>

#include "sandgraph/error.hpp"

namespace sandgraph {

LineGraph line_graph(const Digraph& g) {
  LineGraph out;
  out.base_edge.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out.graph.add_vertex(g.edge_id(e));
    out.base_edge.push_back(e);
  }
  for (EdgeIndex e1 = 0; e1 < g.edge_count(); ++e1) {
    for (EdgeIndex e2 : g.out_edges(g.target(e1))) {
      out.graph.add_edge(g.edge_id(e1) + "|" + g.edge_id(e2), e1, e2);
    }
  }
  return out;
}

std::string path_label(const Digraph& g, const std::vector<EdgeIndex>& path) {
  std::string label;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) label += '|';
    label += g.edge_id(path[i]);
  }
  return label;
}

IteratedLineGraph iterated_line_graph(const Digraph& g, std::size_t n) {
  IteratedLineGraph out;
  out.depth = n;
  if (n == 0) {
    out.graph = g;
    out.paths.assign(g.vertex_count(), {});
    return out;
  }

  std::vector<std::vector<EdgeIndex>> paths;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) paths.push_back({e});
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<std::vector<EdgeIndex>> longer;
    for (const auto& p : paths) {
      for (EdgeIndex f : g.out_edges(g.target(p.back()))) {
        auto q = p;
        q.push_back(f);
        longer.push_back(std::move(q));
      }
    }
    paths = std::move(longer);
  }

  std::map<std::vector<EdgeIndex>, VertexIndex> index;
  for (const auto& p : paths) index.emplace(p, out.graph.add_vertex(path_label(g, p)));

  for (VertexIndex v = 0; v < paths.size(); ++v) {
    const auto& p = paths[v];
    for (EdgeIndex f : g.out_edges(g.target(p.back()))) {
      std::vector<EdgeIndex> shifted(p.begin() + 1, p.end());
      shifted.push_back(f);
      auto extended = p;
      extended.push_back(f);
      out.graph.add_edge(path_label(g, extended), v, index.at(shifted));
    }
  }
  out.paths = std::move(paths);
  return out;
}

std::vector<Integer> path_count(const Digraph& g, std::size_t n) {
  std::vector<Integer> counts(g.vertex_count(), Integer(1));
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Integer> next(g.vertex_count(), Integer(0));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) next[g.target(e)] += counts[g.source(e)];
    counts = std::move(next);
  }
  return counts;
}

}  // namespace sandgraph
