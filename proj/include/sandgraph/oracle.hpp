#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sandgraph/digraph.hpp"
#include "sandgraph/integer.hpp"
#include "sandgraph/multipoly.hpp"

namespace sandgraph::oracle {

/// Limits on exhaustive enumeration. The edge-choice product is the number
/// of candidate out-edge functions, i.e. the true enumeration size.
struct Caps {
  std::size_t max_vertices = 9;
  std::size_t max_choices = 10'000'000;
};

/// Oriented spanning tree: every non-root vertex picks one out-edge.
struct OrientedTree {
  VertexIndex root = 0;
  /// out_edge[v] for v != root; the root's slot is unused.
  std::vector<EdgeIndex> out_edge;
  std::vector<EdgeIndex> edges() const;
};

/// Spanning subgraph where each vertex has one out-edge and there is a single cycle.
struct Unicycle {
  std::vector<EdgeIndex> out_edge;
  std::vector<VertexIndex> cycle;  // vertices on the cycle
  bool on_cycle(VertexIndex v) const;
  /// True when e is one of the chosen edges and both ends lie on the cycle.
  bool cycle_contains_edge(const Digraph& g, EdgeIndex e) const;
};

struct TreeEnumeration {
  std::vector<OrientedTree> trees;
  Integer count = 0;
  SparsePoly edge_poly;    // sum over trees of prod x_e
  SparsePoly vertex_poly;  // sum over trees of prod x_{t(e)}
};

struct UnicycleEnumeration {
  std::vector<Unicycle> unicycles;
  Integer count = 0;
  SparsePoly edge_poly;  // sum over unicycles of prod x_e
};

/// All oriented spanning trees rooted at `root`; throws Error past the caps.
TreeEnumeration enumerate_trees(const Digraph& g, VertexIndex root, const Caps& caps = {});

/// All unicycles, or only those whose cycle passes through `through`.
UnicycleEnumeration enumerate_unicycles(const Digraph& g, std::optional<VertexIndex> through = std::nullopt,
                                        const Caps& caps = {});

}  // namespace sandgraph::oracle
