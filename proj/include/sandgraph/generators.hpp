#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sandgraph/digraph.hpp"

namespace sandgraph {

/// One vertex "_" with `loops` loops named "0", "1", ...
Digraph one_vertex_loops(std::size_t loops);

/// de Bruijn graph DB_n from the word model: vertices are binary words of
/// length n (DB_0 has the single vertex "_"); the edge b1..bn -> b2..bn c is
/// named by the word b1..bn c.
Digraph de_bruijn(std::size_t n);

/// Kautz graph Kautz_n, n >= 1: words of length n over {1,2,3} with no two
/// equal neighbours; edges are the admissible words of length n+1.
Digraph kautz(std::size_t n);

/// Complete directed graph on vertices "1".."n" with a loop at every vertex;
/// the edge i -> j is named "i-j".
Digraph complete_directed(std::size_t n);

/// Bidirected complete bipartite graph with parts a1..am and b1..bn.
Digraph bidirected_complete_bipartite(std::size_t m, std::size_t n);

/// Two vertices a, b with m edges a -> b (x1..xm) and n edges b -> a (y1..yn).
Digraph two_vertex_multigraph(std::size_t m, std::size_t n);

/// ({0,1}, {(0,0),(0,1),(1,0)}), edges named "00", "01", "10".
Digraph fibonacci_graph();

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(std::size_t n);

using Rng = std::mt19937_64;

/// Random graph without sources: vertex i first receives an edge from a
/// uniformly random vertex, then the remaining edges get uniform endpoints.
/// Loops and parallel edges may occur. Requires edges >= vertices >= 1.
Digraph random_source_free(Rng& rng, std::size_t vertices, std::size_t edges);

/// Union of k uniformly random permutation digraphs on m vertices,
/// rejection-sampled until strongly connected.
Digraph random_balanced_regular(Rng& rng, std::size_t m, std::size_t k);

}  // namespace sandgraph
