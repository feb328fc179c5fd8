#include "sandgraph/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sandgraph/error.hpp"

namespace sandgraph {

namespace {

void words(std::size_t length, const std::string& alphabet, bool no_repeats, std::string& prefix,
           std::vector<std::string>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  for (char c : alphabet) {
    if (no_repeats && !prefix.empty() && prefix.back() == c) continue;
    prefix.push_back(c);
    words(length, alphabet, no_repeats, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::string> all_words(std::size_t length, const std::string& alphabet, bool no_repeats) {
  std::vector<std::string> out;
  std::string prefix;
  words(length, alphabet, no_repeats, prefix, out);
  return out;
}

// Word-model graph: vertices are words of length n, edges words of length n+1
// running from their length-n prefix to their length-n suffix.
Digraph word_graph(std::size_t n, const std::string& alphabet, bool no_repeats,
                   const std::string& empty_word) {
  Digraph g;
  for (const auto& w : all_words(n, alphabet, no_repeats)) g.add_vertex(w.empty() ? empty_word : w);
  for (const auto& w : all_words(n + 1, alphabet, no_repeats)) {
    const std::string prefix = w.substr(0, n);
    const std::string suffix = w.substr(1);
    g.add_edge(w, prefix.empty() ? empty_word : prefix, suffix.empty() ? empty_word : suffix);
  }
  return g;
}

}  // namespace

Digraph one_vertex_loops(std::size_t loops) {
  Digraph g;
  g.add_vertex("_");
  for (std::size_t i = 0; i < loops; ++i) g.add_edge(std::to_string(i), VertexIndex{0}, VertexIndex{0});
  return g;
}

Digraph de_bruijn(std::size_t n) {
  if (n > 16) throw Error("de Bruijn order too large: " + std::to_string(n));
  return word_graph(n, "01", false, "_");
}

Digraph kautz(std::size_t n) {
  if (n < 1) throw Error("Kautz graphs start at n = 1");
  if (n > 14) throw Error("Kautz order too large: " + std::to_string(n));
  return word_graph(n, "123", true, "_");
}

Digraph complete_directed(std::size_t n) {
  if (n < 1) throw Error("complete directed graph needs n >= 1");
  Digraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      g.add_edge(std::to_string(i) + "-" + std::to_string(j), std::to_string(i), std::to_string(j));
    }
  }
  return g;
}

Digraph bidirected_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error("bipartite parts must be nonempty");
  Digraph g;
  for (std::size_t i = 1; i <= m; ++i) g.add_vertex("a" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) g.add_vertex("b" + std::to_string(j));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::string a = "a" + std::to_string(i);
      const std::string b = "b" + std::to_string(j);
      g.add_edge(a + "-" + b, a, b);
      g.add_edge(b + "-" + a, b, a);
    }
  }
  return g;
}

Digraph two_vertex_multigraph(std::size_t m, std::size_t n) {
  Digraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  for (std::size_t i = 1; i <= m; ++i) g.add_edge("x" + std::to_string(i), "a", "b");
  for (std::size_t j = 1; j <= n; ++j) g.add_edge("y" + std::to_string(j), "b", "a");
  return g;
}

Digraph fibonacci_graph() {
  Digraph g;
  g.add_vertex("0");
  g.add_vertex("1");
  g.add_edge("00", "0", "0");
  g.add_edge("01", "0", "1");
  g.add_edge("10", "1", "0");
  return g;
}

Digraph directed_cycle(std::size_t n) {
  if (n < 1) throw Error("cycle needs n >= 1");
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    g.add_edge("c" + std::to_string(i), i, (i + 1) % n);
  }
  return g;
}

Digraph random_source_free(Rng& rng, std::size_t vertices, std::size_t edges) {
  if (vertices < 1 || edges < vertices) throw Error("random_source_free needs edges >= vertices >= 1");
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  Digraph g;
  for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  std::size_t next = 0;
  for (std::size_t v = 0; v < vertices; ++v) g.add_edge("e" + std::to_string(next++), pick(rng), v);
  while (next < edges) {
    const std::size_t s = pick(rng);
    const std::size_t t = pick(rng);
    g.add_edge("e" + std::to_string(next++), s, t);
  }
  return g;
}

Digraph random_balanced_regular(Rng& rng, std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw Error("random_balanced_regular needs m, k >= 1");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Digraph g;
    for (std::size_t v = 0; v < m; ++v) g.add_vertex("v" + std::to_string(v));
    std::vector<std::size_t> perm(m);
    for (std::size_t j = 0; j < k; ++j) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < m; ++i) {
        g.add_edge("p" + std::to_string(j) + "_" + std::to_string(i), i, perm[i]);
      }
    }
    if (is_strongly_connected(g)) return g;
  }
  throw Error("random_balanced_regular: no strongly connected sample found");
}

}  // namespace sandgraph
