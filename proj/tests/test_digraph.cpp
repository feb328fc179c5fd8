#include <gtest/gtest.h>

#include "sandgraph/digraph.hpp"
#include "sandgraph/error.hpp"
#include "sandgraph/generators.hpp"
#include "test_support.hpp"

using namespace sandgraph;

namespace {

Digraph two_cycle() {
  Digraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("ab", "a", "b");
  g.add_edge("ba", "b", "a");
  return g;
}

}  // namespace

TEST(Digraph, BuildAndQuery) {
  Digraph g = two_cycle();
  g.add_edge("aa", "a", "a");
  g.add_edge("ab2", "a", "b");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.outdegree(g.vertex_index("a")), 3u);
  EXPECT_EQ(g.indegree(g.vertex_index("b")), 2u);
  EXPECT_TRUE(g.is_loop(g.edge_index("aa")));
  EXPECT_EQ(g.vertex_id(g.target(g.edge_index("ab2"))), "b");
  EXPECT_FALSE(g.has_edge("zz"));
  EXPECT_THROW(g.edge_index("zz"), Error);
}

TEST(Digraph, RejectsDuplicatesAndUnknownEndpoints) {
  Digraph g = two_cycle();
  EXPECT_THROW(g.add_vertex("a"), Error);
  EXPECT_THROW(g.add_edge("ab", "a", "b"), Error);
  EXPECT_THROW(g.add_edge("ac", "a", "c"), Error);
}

TEST(Digraph, SourcesAndConnectivity) {
  Digraph g;
  g.add_vertex("s");
  g.add_vertex("t");
  g.add_edge("st", "s", "t");
  g.add_edge("tt", "t", "t");
  ASSERT_EQ(sources(g).size(), 1u);
  EXPECT_EQ(g.vertex_id(sources(g)[0]), "s");
  EXPECT_FALSE(is_strongly_connected(g));
  EXPECT_TRUE(is_strongly_connected(two_cycle()));
  EXPECT_TRUE(is_strongly_connected(Digraph{}));
}

TEST(Digraph, StrongConnectivityMatchesClosure) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> pv(1, 6);
    const std::size_t v = pv(rng);
    std::uniform_int_distribution<std::size_t> pe(v, 2 * v + 2);
    const Digraph g = random_source_free(rng, v, pe(rng));
    EXPECT_EQ(is_strongly_connected(g), testsupport::strongly_connected_by_closure(g)) << canonical_form(g);
    const auto closure = testsupport::transitive_closure(g);
    for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
      const auto reach = reachable_from(g, s);
      for (VertexIndex t = 0; t < g.vertex_count(); ++t) EXPECT_EQ(reach[t], closure[s][t]);
    }
  }
}

TEST(Digraph, EulerianAndRegular) {
  EXPECT_TRUE(is_eulerian(de_bruijn(3)));
  EXPECT_EQ(balanced_regular_degree(de_bruijn(3)), 2u);
  EXPECT_EQ(balanced_regular_degree(kautz(2)), 2u);
  EXPECT_EQ(balanced_regular_degree(complete_directed(4)), 4u);
  EXPECT_FALSE(balanced_regular_degree(fibonacci_graph()).has_value());
  EXPECT_TRUE(is_eulerian(fibonacci_graph()));
  EXPECT_FALSE(is_eulerian(two_vertex_multigraph(2, 1)));
  EXPECT_TRUE(is_eulerian(bidirected_complete_bipartite(2, 3)));
  EXPECT_FALSE(balanced_regular_degree(bidirected_complete_bipartite(2, 3)).has_value());
}

TEST(Digraph, DeleteEdge) {
  const Digraph g = delete_edge(de_bruijn(1), "01");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_FALSE(g.has_edge("01"));
  EXPECT_THROW(delete_edge(g, "01"), Error);
}

TEST(Digraph, ContractEdgeRemovesSiblingsOfTheTail) {
  // DB_1: loops 00, 11 and edges 01, 10. Contracting 01 drops every edge
  // leaving 0 (00 and 01) and merges 0 and 1 into the vertex "01".
  const Digraph g = contract_edge(de_bruijn(1), "01");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.vertex_id(0), "01");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge("10"));
  EXPECT_TRUE(g.has_edge("11"));
  EXPECT_TRUE(g.is_loop(g.edge_index("10")));
  EXPECT_THROW(contract_edge(de_bruijn(1), "00"), Error);
}

TEST(Digraph, ContractNameCollision) {
  Digraph g = two_cycle();
  g.add_vertex("ab");
  EXPECT_THROW(contract_edge(g, "ab"), Error);
}

TEST(Digraph, EdgeListRoundTrip) {
  for (const Digraph& g : {de_bruijn(3), kautz(2), fibonacci_graph(), bidirected_complete_bipartite(2, 3),
                           one_vertex_loops(3), Digraph{}}) {
    const Digraph back = parse_edge_list(to_edge_list(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(parse_json(to_json(g)), g);
    EXPECT_EQ(parse_graph(to_json(g)), g);
    EXPECT_EQ(parse_graph(to_edge_list(g)), g);
  }
}

TEST(Digraph, EdgeListKeepsIsolatedVertices) {
  Digraph g;
  g.add_vertex("lonely");
  EXPECT_EQ(parse_edge_list(to_edge_list(g)).vertex_count(), 1u);
}

TEST(Digraph, EdgeListParsing) {
  const Digraph g = parse_edge_list("# comment\nx a b  # trailing\n\ny b a\nvertex c\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  try {
    parse_edge_list("x a b\nbroken line here too\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("x a b\nx b a\n"), Error);
  EXPECT_THROW(parse_json("{\"edges\": [{\"id\": 1}]}"), Error);
}

TEST(Digraph, CanonicalFormIgnoresInsertionOrder) {
  Digraph a;
  a.add_vertex("p");
  a.add_vertex("q");
  a.add_edge("1", "p", "q");
  a.add_edge("2", "q", "p");
  Digraph b;
  b.add_vertex("q");
  b.add_vertex("p");
  b.add_edge("2", "q", "p");
  b.add_edge("1", "p", "q");
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_FALSE(a == b);
}
