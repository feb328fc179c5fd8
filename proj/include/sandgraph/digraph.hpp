#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sandgraph {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct EdgeRecord {
  std::string id;
  std::string source;
  std::string target;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Finite directed multigraph. Loops and parallel edges are allowed.
///
/// Vertices and edges carry opaque string ids and are kept in insertion
/// order, which fixes the row/column order of every matrix built from the
/// graph. Indices returned by the lookup functions refer to that order.
class Digraph {
 public:
  Digraph() = default;

  /// Adds a vertex; throws Error on a duplicate id.
  VertexIndex add_vertex(std::string id);

  /// Adds an edge between declared vertices; throws Error on a duplicate
  /// edge id or an undeclared endpoint.
  EdgeIndex add_edge(std::string id, std::string_view source, std::string_view target);
  EdgeIndex add_edge(std::string id, VertexIndex source, VertexIndex target);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const std::string& edge_id(EdgeIndex e) const { return edges_.at(e).id; }

  VertexIndex source(EdgeIndex e) const { return edges_.at(e).source; }
  VertexIndex target(EdgeIndex e) const { return edges_.at(e).target; }
  bool is_loop(EdgeIndex e) const { return source(e) == target(e); }

  EdgeRecord edge(EdgeIndex e) const;
  std::vector<EdgeRecord> edges() const;

  bool has_vertex(std::string_view id) const { return find_vertex(id).has_value(); }
  bool has_edge(std::string_view id) const { return find_edge(id).has_value(); }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  /// Like find_vertex/find_edge but throws Error for unknown ids.
  VertexIndex vertex_index(std::string_view id) const;
  EdgeIndex edge_index(std::string_view id) const;

  /// Edges leaving / entering v, in edge insertion order. Loops appear in both.
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }

  std::size_t indegree(VertexIndex v) const { return in_edges(v).size(); }
  std::size_t outdegree(VertexIndex v) const { return out_edges(v).size(); }
  std::size_t indegree(std::string_view v) const { return indegree(vertex_index(v)); }
  std::size_t outdegree(std::string_view v) const { return outdegree(vertex_index(v)); }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_;
  }

 private:
  struct StoredEdge {
    std::string id;
    VertexIndex source;
    VertexIndex target;
    friend bool operator==(const StoredEdge&, const StoredEdge&) = default;
  };

  std::vector<std::string> vertex_ids_;
  std::vector<StoredEdge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

// Structural predicates.

std::vector<VertexIndex> sources(const Digraph& g);
inline bool has_source(const Digraph& g) { return !sources(g).empty(); }

/// True when every vertex reaches every other; the empty graph and a single
/// vertex without edges both count as strongly connected.
bool is_strongly_connected(const Digraph& g);

/// Vertices reachable from `from` along directed edges (including `from`).
std::vector<bool> reachable_from(const Digraph& g, VertexIndex from);

bool is_eulerian(const Digraph& g);

/// k when indeg(v) = outdeg(v) = k at every vertex; empty otherwise or for the empty graph.
std::optional<std::size_t> balanced_regular_degree(const Digraph& g);

// Constructions.

/// G \ e: same vertices, edge e removed.
Digraph delete_edge(const Digraph& g, std::string_view edge_id);

/// G / e: removes every edge f with s(f) = s(e), then identifies s(e) and
/// t(e) into a vertex named by the id of e (placed where s(e) was).
/// Throws Error when e is a loop or its id collides with a vertex id.
Digraph contract_edge(const Digraph& g, std::string_view edge_id);

/// Order-independent text form: sorted vertex ids, then sorted edge triples.
std::string canonical_form(const Digraph& g);

// Serialization. The edge-list format has one `edge_id source target` line
// per edge, optional `vertex id` lines, and `#` comments.

std::string to_edge_list(const Digraph& g);
Digraph parse_edge_list(std::string_view text);
std::string to_json(const Digraph& g);
Digraph parse_json(std::string_view text);
/// Dispatches on the first non-blank character: `{` selects JSON.
Digraph parse_graph(std::string_view text);
Digraph read_graph(std::istream& in);

}  // namespace sandgraph
