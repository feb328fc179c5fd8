#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sandgraph/digraph.hpp"
#include "sandgraph/integer.hpp"

namespace sandgraph {

/// Directed line graph together with its correspondence to the base graph.
///
/// Vertex i of `graph` is edge i of the base graph and carries the same id;
/// the edge (e1, e2) is named "e1|e2".
struct LineGraph {
  Digraph graph;
  std::vector<EdgeIndex> base_edge;  // line-graph vertex -> base edge
};

LineGraph line_graph(const Digraph& g);

/// line^n G with vertices labeled by directed n-edge paths of G.
///
/// For n >= 1 vertex ids are the path's edge ids joined by '|', and edge ids
/// are the (n+1)-edge paths spelled the same way; line^0 G is G itself and
/// line^1 G coincides label-for-label with line_graph(G).
struct IteratedLineGraph {
  Digraph graph;
  std::size_t depth = 0;
  /// paths[v] is the edge sequence labelling vertex v (empty when depth is 0).
  std::vector<std::vector<EdgeIndex>> paths;
};

IteratedLineGraph iterated_line_graph(const Digraph& g, std::size_t n);

/// p(n, v): number of directed n-edge paths of G ending at v, indexed by vertex.
std::vector<Integer> path_count(const Digraph& g, std::size_t n);

/// Joins path labels the way iterated_line_graph names vertices.
std::string path_label(const Digraph& g, const std::vector<EdgeIndex>& path);

}  // namespace sandgraph
