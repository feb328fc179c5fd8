#include "sandgraph/digraph.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "sandgraph/error.hpp"

namespace sandgraph {

VertexIndex Digraph::add_vertex(std::string id) {
  if (vertex_lookup_.contains(id)) throw Error("duplicate vertex id '" + id + "'");
  const VertexIndex v = vertex_ids_.size();
  vertex_lookup_.emplace(id, v);
  vertex_ids_.push_back(std::move(id));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeIndex Digraph::add_edge(std::string id, std::string_view source, std::string_view target) {
  const auto s = find_vertex(source);
  const auto t = find_vertex(target);
  if (!s) throw Error("edge '" + id + "' has undeclared source '" + std::string(source) + "'");
  if (!t) throw Error("edge '" + id + "' has undeclared target '" + std::string(target) + "'");
  return add_edge(std::move(id), *s, *t);
}

EdgeIndex Digraph::add_edge(std::string id, VertexIndex source, VertexIndex target) {
  if (source >= vertex_count() || target >= vertex_count()) {
    throw Error("edge '" + id + "' has an out-of-range endpoint");
  }
  if (edge_lookup_.contains(id)) throw Error("duplicate edge id '" + id + "'");
  const EdgeIndex e = edges_.size();
  edge_lookup_.emplace(id, e);
  edges_.push_back({std::move(id), source, target});
  out_[source].push_back(e);
  in_[target].push_back(e);
  return e;
}

EdgeRecord Digraph::edge(EdgeIndex e) const {
  const StoredEdge& stored = edges_.at(e);
  return {stored.id, vertex_ids_[stored.source], vertex_ids_[stored.target]};
}

std::vector<EdgeRecord> Digraph::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) out.push_back(edge(e));
  return out;
}

std::optional<VertexIndex> Digraph::find_vertex(std::string_view id) const {
  const auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Digraph::find_edge(std::string_view id) const {
  const auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Digraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error("unknown vertex '" + std::string(id) + "'");
}

EdgeIndex Digraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error("unknown edge '" + std::string(id) + "'");
}

std::vector<VertexIndex> sources(const Digraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.indegree(v) == 0) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<bool> reach(const Digraph& g, VertexIndex from, bool forward) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : forward ? g.out_edges(v) : g.in_edges(v)) {
      const VertexIndex w = forward ? g.target(e) : g.source(e);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

}  // namespace

std::vector<bool> reachable_from(const Digraph& g, VertexIndex from) {
  if (from >= g.vertex_count()) throw Error("vertex index out of range");
  return reach(g, from, true);
}

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count() == 0) return true;
  return all_true(reach(g, 0, true)) && all_true(reach(g, 0, false));
}

bool is_eulerian(const Digraph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.indegree(v) != g.outdegree(v)) return false;
  }
  return true;
}

std::optional<std::size_t> balanced_regular_degree(const Digraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t k = g.outdegree(VertexIndex{0});
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.indegree(v) != k || g.outdegree(v) != k) return std::nullopt;
  }
  return k;
}

Digraph delete_edge(const Digraph& g, std::string_view edge_id) {
  const EdgeIndex removed = g.edge_index(edge_id);
  Digraph out;
  for (const auto& v : g.vertex_ids()) out.add_vertex(v);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (e != removed) out.add_edge(g.edge_id(e), g.source(e), g.target(e));
  }
  return out;
}

Digraph contract_edge(const Digraph& g, std::string_view edge_id) {
  const EdgeIndex contracted = g.edge_index(edge_id);
  const VertexIndex s = g.source(contracted);
  const VertexIndex t = g.target(contracted);
  if (s == t) throw Error("cannot contract loop '" + std::string(edge_id) + "'");
  if (g.has_vertex(edge_id)) {
    throw Error("contracted vertex name '" + std::string(edge_id) + "' collides with an existing vertex");
  }

  Digraph out;
  std::vector<VertexIndex> merge(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (v == t) continue;
    merge[v] = out.add_vertex(v == s ? std::string(edge_id) : g.vertex_id(v));
  }
  merge[t] = merge[s];
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (g.source(f) == s) continue;
    out.add_edge(g.edge_id(f), merge[g.source(f)], merge[g.target(f)]);
  }
  return out;
}

std::string canonical_form(const Digraph& g) {
  std::vector<std::string> vertices = g.vertex_ids();
  std::sort(vertices.begin(), vertices.end());
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    return std::tie(a.id, a.source, a.target) < std::tie(b.id, b.source, b.target);
  });
  std::string out;
  for (const auto& v : vertices) out += "vertex " + v + "\n";
  for (const auto& e : edges) out += e.id + " " + e.source + " " + e.target + "\n";
  return out;
}

std::string to_edge_list(const Digraph& g) {
  std::string out = "# " + std::to_string(g.vertex_count()) + " vertices, " +
                    std::to_string(g.edge_count()) + " edges\n";
  for (const auto& v : g.vertex_ids()) out += "vertex " + v + "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    out += g.edge_id(e) + " " + g.vertex_id(g.source(e)) + " " + g.vertex_id(g.target(e)) + "\n";
  }
  return out;
}

Digraph parse_edge_list(std::string_view text) {
  Digraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto declare = [&g](const std::string& v) {
    if (!g.has_vertex(v)) g.add_vertex(v);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields{std::istream_iterator<std::string>(tokens),
                                    std::istream_iterator<std::string>()};
    if (fields.empty()) continue;
    try {
      if (fields.size() == 2 && fields[0] == "vertex") {
        declare(fields[1]);
      } else if (fields.size() == 3) {
        declare(fields[1]);
        declare(fields[2]);
        g.add_edge(fields[0], fields[1], fields[2]);
      } else {
        throw Error("expected `edge_id source target` or `vertex id`");
      }
    } catch (const Error& err) {
      throw Error("edge list line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return g;
}

std::string to_json(const Digraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_ids();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"id", e.id}, {"source", e.source}, {"target", e.target}});
  }
  return doc.dump(2) + "\n";
}

Digraph parse_json(std::string_view text) {
  Digraph g;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : doc.at("edges")) {
      const auto source = e.at("source").get<std::string>();
      const auto target = e.at("target").get<std::string>();
      for (const auto& v : {source, target}) {
        if (!g.has_vertex(v)) g.add_vertex(v);
      }
      g.add_edge(e.at("id").get<std::string>(), source, target);
    }
  } catch (const nlohmann::json::exception& err) {
    throw Error(std::string("graph JSON: ") + err.what());
  }
  return g;
}

Digraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_edge_list(text);
}

Digraph read_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

}  // namespace sandgraph
