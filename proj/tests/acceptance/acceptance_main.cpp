#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sandgraph/error.hpp"
#include "sandgraph/generators.hpp"
#include "sandgraph/linegraph.hpp"
#include "sandgraph/oracle.hpp"
#include "sandgraph/sandpile.hpp"
#include "sandgraph/treecount.hpp"
#include "test_support.hpp"

using namespace sandgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
  void require(const Report& r, const std::string& what) {
    std::string failed;
    for (const auto& c : r.checks) {
      if (!c.pass) failed += " [" + c.name + ": " + c.detail + "]";
    }
    require(r.passed(), what + failed);
  }
};

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SANDGRAPH_GOLDEN_DIR) + "/" + name);
  std::string line;
  std::getline(in, line);
  return line;
}

SparsePoly sum_of(const VariablesPtr& vars, const std::vector<std::string>& names) {
  SparsePoly s(vars);
  for (const auto& n : names) s += SparsePoly::variable(vars, n);
  return s;
}

std::vector<Digraph> enumerator_corpus() {
  std::vector<Digraph> graphs{de_bruijn(1), kautz(1), complete_directed(3), bidirected_complete_bipartite(2, 2)};
  for (auto& g : testsupport::random_source_free_corpus(2718, 25, 5, 9)) graphs.push_back(std::move(g));
  return graphs;
}

Outcome criterion1() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const Digraph g = de_bruijn(n);
    const Integer expected = power(Integer(2), (1UL << n) - n - 1);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      o.require(kappa_rooted(g, v) == expected, "matrix-tree DB_" + std::to_string(n) + " root " + g.vertex_id(v));
      o.require(sandpile_group(g, v).group().order() == expected,
                "SNF order DB_" + std::to_string(n) + " root " + g.vertex_id(v));
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    const AbelianGroup k = sandpile_group(de_bruijn(n), VertexIndex{0}).group();
    o.require(k == closed_form_de_bruijn(n), "DB_" + std::to_string(n) + ": " + k.to_string() +
                                                 " vs " + closed_form_de_bruijn(n).to_string());
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const AbelianGroup k = sandpile_group(kautz(n), VertexIndex{0}).group();
    o.require(k == closed_form_kautz(n),
              "Kautz_" + std::to_string(n) + ": " + k.to_string() + " vs " + closed_form_kautz(n).to_string());
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const Digraph& g : enumerator_corpus()) o.require(verify_theorem1(g), canonical_form(g));
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t checked = 0;
  for (const Digraph& g : enumerator_corpus()) {
    const Digraph line = line_graph(g).graph;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const VertexIndex w = g.source(e);
      const VertexIndex v = g.target(e);
      if (g.indegree(v) < 2) continue;
      const std::string id = g.edge_id(e);
      o.require(verify_rooted_theorem(g, id), "rooted " + id + " on " + canonical_form(g));
      // product formula, recomputed here from the definitions
      const Integer direct = kappa_rooted(line, id);
      const Integer lhs = direct * Integer(static_cast<unsigned long>(g.outdegree(v)));
      o.require(lhs == kappa_rooted(g, w) * pi_factor(g), "product formula " + id);
      if (g.outdegree(v) == 0) continue;
      o.require(verify_knuth(g, id), "knuth " + id + " on " + canonical_form(g));
      ++checked;
    }
  }
  o.require(checked > 0, "no admissible edges");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const Digraph g = de_bruijn(n);
    for (const auto& e : {g.edge_id(0), g.edge_id(g.edge_count() - 1)}) {
      o.require(verify_theorem2(g, e), "DB_" + std::to_string(n) + " e*=" + e);
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const Digraph g = kautz(n);
    for (const auto& e : {g.edge_id(0), g.edge_id(g.edge_count() - 1)}) {
      o.require(verify_theorem2(g, e), "Kautz_" + std::to_string(n) + " e*=" + e);
    }
  }
  Rng rng(6006);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = trial % 2 == 0 ? 2 : 3;
    const Digraph g = random_balanced_regular(rng, 6, k);
    for (const EdgeIndex e : {EdgeIndex{0}, EdgeIndex{g.edge_count() / 2}}) {
      o.require(verify_theorem2(g, g.edge_id(e)), "random k=" + std::to_string(k) + " " + canonical_form(g));
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<unsigned long> fib{0, 1};
  while (fib.size() < 10) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (std::size_t n = 0; n <= 6; ++n) {
    const Integer count = kappa_total(iterated_line_graph(fibonacci_graph(), n).graph);
    o.require(count == power(Integer(2), fib[n + 2]), "Fibonacci n=" + std::to_string(n));
    o.require(verify_theorem5(fibonacci_graph(), n), "Fibonacci report n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    const Integer count = kappa_total(iterated_line_graph(de_bruijn(0), n).graph);
    o.require(count == power(Integer(2), (1UL << n) - 1), "DB n=" + std::to_string(n));
    o.require(verify_theorem5(de_bruijn(0), n), "DB report n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    unsigned long pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= 3;
    const Integer count = kappa_total(iterated_line_graph(one_vertex_loops(3), n).graph);
    o.require(count == power(Integer(3), pn - 1), "ternary n=" + std::to_string(n));
    o.require(verify_theorem5(one_vertex_loops(3), n), "ternary report n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.require(verify_p_regular_specializations(10), "specializations");
  o.require(verify_p_regular_groups(one_vertex_loops(3), 3, 3), "p=3 SNF");
  return o;
}

Outcome criterion9() {
  Outcome o;
  VerifyOptions opts;
  opts.oracle = true;
  for (const Digraph& g : testsupport::random_source_free_corpus(9009, 200, 7, 14)) {
    const auto ve = weight_variables(g, Weighting::Edge);
    const auto vv = weight_variables(g, Weighting::Vertex);
    for (VertexIndex r = 0; r < g.vertex_count(); ++r) {
      const oracle::TreeEnumeration en = oracle::enumerate_trees(g, r);
      o.require(en.count == kappa_rooted(g, r), "count " + canonical_form(g));
      o.require(en.edge_poly == kappa_poly_rooted(g, r, Weighting::Edge, ve), "edge poly " + canonical_form(g));
      o.require(en.vertex_poly == kappa_poly_rooted(g, r, Weighting::Vertex, vv), "vertex poly " + canonical_form(g));
      o.require(verify_unicycle_lemma(g, g.vertex_id(r), opts), "unicycle " + canonical_form(g));
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string name = "kappa_vertex_db" + std::to_string(n) + ".txt";
    const SparsePoly p = kappa_poly(de_bruijn(n), Weighting::Vertex);
    o.require(p.to_string() == read_golden(name), name);
    o.require(p == parse_poly(read_golden(name)), name + " parsed");
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const Digraph g = complete_directed(n);
    const SparsePoly p = kappa_poly(g, Weighting::Vertex);
    std::vector<std::string> names(g.vertex_ids().begin(), g.vertex_ids().end());
    o.require(p == sum_of(p.variables(), names).pow(n - 1), "complete " + std::to_string(n));
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const SparsePoly p = kappa_poly(bidirected_complete_bipartite(m, n), Weighting::Vertex);
      std::vector<std::string> xs;
      std::vector<std::string> ys;
      for (std::size_t i = 1; i <= m; ++i) xs.push_back("a" + std::to_string(i));
      for (std::size_t j = 1; j <= n; ++j) ys.push_back("b" + std::to_string(j));
      const SparsePoly x = sum_of(p.variables(), xs);
      const SparsePoly y = sum_of(p.variables(), ys);
      o.require(p == (x + y) * x.pow(n - 1) * y.pow(m - 1),
                "bipartite " + std::to_string(m) + "," + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto [cyclic, started] = de_bruijn_sequence_count(n);
    o.require(cyclic == power(Integer(2), (1UL << (n - 1)) - n), "cyclic n=" + std::to_string(n));
    o.require(started == power(Integer(2), 1UL << (n - 1)), "started n=" + std::to_string(n));
    o.require(cyclic == kappa_rooted(de_bruijn(n - 1), VertexIndex{0}), "kappa_rooted n=" + std::to_string(n));
  }
  o.require(verify_sequence_counts(5), "report");
  return o;
}

Outcome criterion12() {
  Outcome o;
  const std::size_t invocations = SnfAudit::invocations();
  const std::size_t verified = SnfAudit::verified();
  o.require(invocations > 0, "no SNF invocations recorded");
  o.require(invocations == verified,
            std::to_string(invocations) + " invocations, " + std::to_string(verified) + " verified");
  if (o.pass) o.detail = std::to_string(verified) + " certificates";
  return o;
}

struct Criterion {
  int number;
  std::string description;
  double limit_seconds;  // zero means untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  SnfAudit::enable(true);
  const std::vector<Criterion> criteria{
      {1, "kappa(DB_n, v*) = 2^(2^n-n-1), n = 1..6, every root, matrix-tree and SNF", 10, criterion1},
      {2, "K(DB_n) invariant factors, n = 1..6", 30, criterion2},
      {3, "K(Kautz_n) invariant factors, n = 1..5", 30, criterion3},
      {4, "weighted line-graph enumerator identity on named graphs and 25 random graphs", 60, criterion4},
      {5, "rooted identity, product formula and Knuth's formula, every admissible e*", 0, criterion5},
      {6, "phi/psi report on DB_n, Kautz_n and 50 random balanced regular graphs", 0, criterion6},
      {7, "iterated line graph tree counts: Fibonacci, de Bruijn and ternary families", 0, criterion7},
      {8, "general p-regular display: de Bruijn, Kautz and p = 3 SNF", 0, criterion8},
      {9, "brute-force oracle equivalence and unicycle identity on the <= 7 vertex corpus", 120, criterion9},
      {10, "golden enumerators for DB_1..3, complete directed and bipartite formulas", 0, criterion10},
      {11, "de Bruijn sequence counts, n = 1..5", 0, criterion11},
      {12, "SNF certificate on every invocation", 0, criterion12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.description << " ("
         << std::fixed;
    line.precision(2);
    line << seconds << " s)";
    if (!o.detail.empty()) line << " " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
