#include "sandgraph/treecount.hpp"

#include <map>
#include <string>

#include "sandgraph/error.hpp"
#include "sandgraph/linegraph.hpp"

namespace sandgraph {

namespace {

const char* const kCharVariable = "__t";

std::string count_detail(const Integer& a, const Integer& b) { return to_decimal(a) + " vs " + to_decimal(b); }

std::string poly_detail(const SparsePoly& a, const SparsePoly& b) {
  return std::to_string(a.term_count()) + " terms vs " + std::to_string(b.term_count()) + " terms";
}

void require_no_sources(const Digraph& g) {
  const auto src = sources(g);
  if (!src.empty()) throw HypothesisError("no sources", "vertex '" + g.vertex_id(src.front()) + "' has indegree 0");
}

void require_indegree_positive(const Digraph& g) {
  const auto src = sources(g);
  if (!src.empty()) {
    throw HypothesisError("indeg(v) >= 1 for all v", "vertex '" + g.vertex_id(src.front()) + "' has indegree 0");
  }
}

// sum_{s(e)=v} x_e
SparsePoly out_weight_sum(const Digraph& g, VertexIndex v, const VariablesPtr& vars) {
  SparsePoly sum(vars);
  for (EdgeIndex e : g.out_edges(v)) sum += SparsePoly::variable(vars, g.edge_id(e));
  return sum;
}

// Drops a variable that no longer occurs from a polynomial's variable set.
SparsePoly restrict_to(const SparsePoly& p, const VariablesPtr& vars) {
  SparsePoly out(vars);
  std::vector<std::uint32_t> exps(vars->size());
  const auto& source_vars = *p.variables();
  for (const auto& [m, c] : p.terms()) {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t i = 0; i < source_vars.size(); ++i) {
      if (m[i + 1] == 0) continue;
      const auto j = vars->find(source_vars.name(i));
      if (!j) throw Error("restrict_to: variable '" + source_vars.name(i) + "' still occurs");
      exps[*j] = m[i + 1];
    }
    out.add_term(exps, c);
  }
  return out;
}

void compare_with_oracle_rooted(Report& report, const Digraph& g, VertexIndex root, Weighting kind,
                                const SparsePoly& enumerator, const Integer& count, const VerifyOptions& opts,
                                const std::string& label) {
  const auto trees = oracle::enumerate_trees(g, root, opts.caps);
  report.check("oracle " + label + " count", trees.count == count, count_detail(trees.count, count));
  const SparsePoly& brute = kind == Weighting::Edge ? trees.edge_poly : trees.vertex_poly;
  report.check("oracle " + label + " polynomial", brute == enumerator, poly_detail(brute, enumerator));
}

}  // namespace

VariablesPtr weight_variables(const Digraph& g, Weighting kind) {
  if (kind == Weighting::Vertex) return make_variables(g.vertex_ids());
  std::vector<std::string> names;
  names.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) names.push_back(g.edge_id(e));
  return make_variables(std::move(names));
}

PolyMatrix laplacian(const Digraph& g, Weighting kind) { return laplacian(g, kind, weight_variables(g, kind)); }

PolyMatrix laplacian(const Digraph& g, Weighting kind, const VariablesPtr& vars) {
  PolyMatrix m(g.vertex_count(), vars);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const VertexIndex v = g.source(e);
    const VertexIndex w = g.target(e);
    const SparsePoly weight =
        SparsePoly::variable(vars, kind == Weighting::Edge ? g.edge_id(e) : g.vertex_id(w));
    m(w, v) += weight;
    m(v, v) -= weight;
  }
  return m;
}

IntMatrix integer_laplacian(const Digraph& g) {
  IntMatrix m(g.vertex_count(), g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    m(g.target(e), g.source(e)) += 1;
    m(g.source(e), g.source(e)) -= 1;
  }
  return m;
}

Integer kappa_rooted(const Digraph& g, VertexIndex root) {
  if (root >= g.vertex_count()) throw Error("kappa_rooted: root out of range");
  const std::size_t n = g.vertex_count();
  IntMatrix reduced(n - 1, n - 1);
  auto slot = [root](VertexIndex v) { return v < root ? v : v - 1; };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const VertexIndex v = g.source(e);
    const VertexIndex w = g.target(e);
    if (v == root) continue;
    reduced(slot(v), slot(v)) += 1;
    if (w != root) reduced(slot(w), slot(v)) -= 1;
  }
  return determinant(reduced);
}

Integer kappa_rooted(const Digraph& g, std::string_view root) { return kappa_rooted(g, g.vertex_index(root)); }

std::vector<Integer> kappa_all_roots(const Digraph& g) {
  std::vector<Integer> out;
  out.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(kappa_rooted(g, v));
  return out;
}

Integer kappa_total(const Digraph& g) {
  Integer total = 0;
  for (const auto& k : kappa_all_roots(g)) total += k;
  return total;
}

SparsePoly kappa_poly_rooted(const Digraph& g, VertexIndex root, Weighting kind) {
  return kappa_poly_rooted(g, root, kind, weight_variables(g, kind));
}

SparsePoly kappa_poly_rooted(const Digraph& g, VertexIndex root, Weighting kind, const VariablesPtr& vars) {
  if (root >= g.vertex_count()) throw Error("kappa_poly_rooted: root out of range");
  return poly_determinant(-laplacian(g, kind, vars).minor(root, root));
}

SparsePoly kappa_poly(const Digraph& g, Weighting kind) { return kappa_poly(g, kind, weight_variables(g, kind)); }

SparsePoly kappa_poly(const Digraph& g, Weighting kind, const VariablesPtr& vars) {
  const PolyMatrix negated = -laplacian(g, kind, vars);
  SparsePoly total(vars);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) total += poly_determinant(negated.minor(v, v));
  return total;
}

SparsePoly kappa_poly_via_charpoly(const Digraph& g, Weighting kind) {
  const VariablesPtr base = weight_variables(g, kind);
  if (base->find(kCharVariable)) throw Error("graph uses the reserved variable name __t");
  std::vector<std::string> names = base->names();
  names.emplace_back(kCharVariable);
  const VariablesPtr with_t = make_variables(std::move(names));
  PolyMatrix m = -laplacian(g, kind, with_t);
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) += SparsePoly::variable(with_t, kCharVariable);
  return restrict_to(poly_determinant(m).coefficient_of(kCharVariable, 1), base);
}

Integer pi_factor(const Digraph& g) {
  require_indegree_positive(g);
  Integer pi = 1;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    pi *= power(Integer(static_cast<unsigned long>(g.outdegree(v))), g.indegree(v) - 1);
  }
  return pi;
}

Report verify_theorem1(const Digraph& g, const VerifyOptions& opts) {
  require_no_sources(g);
  Report report;
  report.command = "thm1";
  const LineGraph line = line_graph(g);
  const VariablesPtr vars = weight_variables(g, Weighting::Edge);

  const SparsePoly lhs = kappa_poly(line.graph, Weighting::Vertex, vars);
  const SparsePoly tree_part = kappa_poly(g, Weighting::Edge, vars);
  SparsePoly rhs = tree_part;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    rhs *= out_weight_sum(g, v, vars).pow(static_cast<unsigned>(g.indegree(v) - 1));
  }
  report.result("kappa_vertex(line G)", lhs.to_string());
  report.result("kappa_edge(G)", tree_part.to_string());
  report.check("polynomial identity", lhs == rhs, poly_detail(lhs, rhs));

  const Integer line_count = kappa_total(line.graph);
  const Integer product = kappa_total(g) * pi_factor(g);
  report.result("kappa(line G)", to_decimal(line_count));
  report.result("kappa(G)*pi(G)", to_decimal(product));
  report.check("product formula", line_count == product, count_detail(line_count, product));
  report.check("all-ones evaluation", lhs.evaluate_all(1) == line_count,
               count_detail(lhs.evaluate_all(1), line_count));

  if (opts.oracle) {
    SparsePoly brute_line(vars);
    for (VertexIndex v = 0; v < line.graph.vertex_count(); ++v) {
      brute_line += oracle::enumerate_trees(line.graph, v, opts.caps).vertex_poly;
    }
    report.check("oracle kappa_vertex(line G)", brute_line == lhs, poly_detail(brute_line, lhs));
    SparsePoly brute_base(vars);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      brute_base += oracle::enumerate_trees(g, v, opts.caps).edge_poly;
    }
    report.check("oracle kappa_edge(G)", brute_base == tree_part, poly_detail(brute_base, tree_part));
  }
  return report;
}

namespace {

struct RootedSetup {
  EdgeIndex base;
  VertexIndex tail;  // w*
  VertexIndex head;  // v*
};

RootedSetup rooted_hypotheses(const Digraph& g, std::string_view base_edge) {
  const EdgeIndex e = g.edge_index(base_edge);
  require_indegree_positive(g);
  const VertexIndex head = g.target(e);
  if (g.indegree(head) < 2) {
    throw HypothesisError("indeg(v*) >= 2", "v* = '" + g.vertex_id(head) + "' has indegree " +
                                                 std::to_string(g.indegree(head)));
  }
  return {e, g.source(e), head};
}

// kappa(G,w*) * outdeg(v*)^(indeg(v*)-2) * prod_{v != v*} outdeg(v)^(indeg(v)-1), i.e. the
// product formula with the division by outdeg(v*) carried out symbolically.
Integer rooted_product_formula(const Digraph& g, const RootedSetup& s, const Integer& kappa_tail) {
  Integer value = kappa_tail;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t exponent = g.indegree(v) - (v == s.head ? 2 : 1);
    value *= power(Integer(static_cast<unsigned long>(g.outdegree(v))), exponent);
  }
  return value;
}

}  // namespace

Report verify_rooted_theorem(const Digraph& g, std::string_view base_edge, const VerifyOptions& opts) {
  const RootedSetup s = rooted_hypotheses(g, base_edge);
  Report report;
  report.command = "rooted e*=" + std::string(base_edge);
  const LineGraph line = line_graph(g);
  const VariablesPtr vars = weight_variables(g, Weighting::Edge);

  const SparsePoly lhs = kappa_poly_rooted(line.graph, s.base, Weighting::Vertex, vars);
  const SparsePoly tail_trees = kappa_poly_rooted(g, s.tail, Weighting::Edge, vars);
  SparsePoly rhs = SparsePoly::variable(vars, g.edge_id(s.base)) * tail_trees;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t exponent = g.indegree(v) - (v == s.head ? 2 : 1);
    rhs *= out_weight_sum(g, v, vars).pow(static_cast<unsigned>(exponent));
  }
  report.result("kappa_vertex(line G, e*)", lhs.to_string());
  report.check("rooted polynomial identity", lhs == rhs, poly_detail(lhs, rhs));

  const Integer line_count = kappa_rooted(line.graph, s.base);
  const Integer tail_count = kappa_rooted(g, s.tail);
  const Integer formula = rooted_product_formula(g, s, tail_count);
  report.result("kappa(line G, e*)", to_decimal(line_count));
  report.result("kappa(G, w*)", to_decimal(tail_count));
  report.check("rooted product formula", line_count == formula, count_detail(line_count, formula));

  const std::size_t head_out = g.outdegree(s.head);
  if (head_out > 0) {
    const Integer pi = pi_factor(g);
    const Integer literal = exact_quotient(tail_count * pi, Integer(static_cast<unsigned long>(head_out)));
    report.check("kappa(G,w*) pi(G) / outdeg(v*)", literal == line_count, count_detail(literal, line_count));
  }
  const bool divides = tail_count == 0 ? line_count == 0 : mpz_divisible_p(line_count.get_mpz_t(), tail_count.get_mpz_t());
  report.check("kappa(G,w*) divides kappa(line G,e*)", divides, count_detail(tail_count, line_count));

  if (opts.oracle) compare_with_oracle_rooted(report, line.graph, s.base, Weighting::Vertex, lhs, line_count, opts, "line G");
  return report;
}

Report verify_knuth(const Digraph& g, std::string_view base_edge, const VerifyOptions& opts) {
  const RootedSetup s = rooted_hypotheses(g, base_edge);
  const std::size_t head_out = g.outdegree(s.head);
  if (head_out == 0) {
    throw HypothesisError("outdeg(v*) >= 1", "v* = '" + g.vertex_id(s.head) + "' has outdegree 0");
  }
  Report report;
  report.command = "knuth e*=" + std::string(base_edge);
  const std::vector<Integer> kappa = kappa_all_roots(g);
  Integer others = 0;
  for (EdgeIndex e : g.in_edges(s.head)) {
    if (e != s.base) others += kappa[g.source(e)];
  }
  const Integer out = static_cast<unsigned long>(head_out);
  const Integer pi = pi_factor(g);
  // (kappa(v*) - others/out) * pi, with the division applied after multiplying by pi.
  const Integer knuth = exact_quotient((kappa[s.head] * out - others) * pi, out);
  const Integer line_count = kappa_rooted(line_graph(g).graph, s.base);
  const Integer product = exact_quotient(kappa[s.tail] * pi, out);
  report.result("knuth", to_decimal(knuth));
  report.result("kappa(line G, e*)", to_decimal(line_count));
  report.check("knuth formula = kappa(line G, e*)", knuth == line_count, count_detail(knuth, line_count));
  report.check("knuth formula = rooted product formula", knuth == product, count_detail(knuth, product));
  if (opts.oracle) {
    const auto trees = oracle::enumerate_trees(line_graph(g).graph, s.base, opts.caps);
    report.check("oracle kappa(line G, e*)", trees.count == knuth, count_detail(trees.count, knuth));
  }
  return report;
}

Report verify_unicycle_lemma(const Digraph& g, std::string_view root, const VerifyOptions& opts) {
  const VertexIndex r = g.vertex_index(root);
  Report report;
  report.command = "unicycle v*=" + std::string(root);
  const VariablesPtr vars = weight_variables(g, Weighting::Edge);
  const SparsePoly lhs = kappa_poly_rooted(g, r, Weighting::Edge, vars) * out_weight_sum(g, r, vars);
  SparsePoly rhs(vars);
  for (EdgeIndex e : g.in_edges(r)) {
    rhs += kappa_poly_rooted(g, g.source(e), Weighting::Edge, vars) * SparsePoly::variable(vars, g.edge_id(e));
  }
  report.result("unicycle sum", lhs.to_string());
  report.check("unicycle polynomial identity", lhs == rhs, poly_detail(lhs, rhs));

  const std::vector<Integer> kappa = kappa_all_roots(g);
  const Integer left = kappa[r] * static_cast<unsigned long>(g.outdegree(r));
  Integer right = 0;
  for (EdgeIndex e : g.in_edges(r)) right += kappa[g.source(e)];
  report.check("kappa(G,v*) outdeg(v*) = sum kappa(G,s(e))", left == right, count_detail(left, right));

  if (opts.oracle) {
    const auto unicycles = oracle::enumerate_unicycles(g, r, opts.caps);
    report.check("oracle unicycle polynomial", unicycles.edge_poly == lhs, poly_detail(unicycles.edge_poly, lhs));
    const auto all = oracle::enumerate_unicycles(g, std::nullopt, opts.caps);
    bool bijection = true;
    std::string where;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      Integer containing = 0;
      for (const auto& u : all.unicycles) containing += u.cycle_contains_edge(g, e) ? 1 : 0;
      if (containing != kappa[g.source(e)]) {
        bijection = false;
        where = g.edge_id(e);
        break;
      }
    }
    report.check("unicycles on e <-> trees rooted at s(e)", bijection, where.empty() ? "all edges" : "fails at " + where);
  }
  return report;
}

Report verify_deletion_contraction(const Digraph& g, std::string_view edge, const VerifyOptions& opts) {
  const EdgeIndex e = g.edge_index(edge);
  if (g.is_loop(e)) throw HypothesisError("e is not a loop", "edge '" + std::string(edge) + "' is a loop");
  Report report;
  report.command = "delcon e=" + std::string(edge);
  const VariablesPtr vars = weight_variables(g, Weighting::Edge);
  const Digraph deleted = delete_edge(g, edge);
  const Digraph contracted = contract_edge(g, edge);

  const SparsePoly whole = kappa_poly(g, Weighting::Edge, vars);
  const SparsePoly del = kappa_poly(deleted, Weighting::Edge, vars);
  const SparsePoly con = kappa_poly(contracted, Weighting::Edge, vars);
  const SparsePoly rhs = del + SparsePoly::variable(vars, edge) * con;
  report.result("kappa_edge(G)", whole.to_string());
  report.check("deletion-contraction identity", whole == rhs, poly_detail(whole, rhs));

  const Integer total = kappa_total(g);
  const Integer split = kappa_total(deleted) + kappa_total(contracted);
  report.check("kappa(G) = kappa(G\\e) + kappa(G/e)", total == split, count_detail(total, split));

  if (opts.oracle) {
    Integer with_e = 0;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      for (const auto& t : oracle::enumerate_trees(g, v, opts.caps).trees) {
        if (t.root != g.source(e) && t.out_edge[g.source(e)] == e) with_e += 1;
      }
    }
    const Integer con_count = kappa_total(contracted);
    report.check("oracle trees containing e = kappa(G/e)", with_e == con_count, count_detail(with_e, con_count));
  }
  return report;
}

Integer count_trees_with_line_indegree(const Digraph& g, std::string_view edge, std::size_t ell) {
  require_no_sources(g);
  const EdgeIndex e = g.edge_index(edge);
  if (g.is_loop(e)) throw HypothesisError("e is not a loop", "edge '" + std::string(edge) + "' is a loop");
  const VertexIndex v = g.source(e);
  const long k = static_cast<long>(g.indegree(v));
  const Integer m_minus_1 = static_cast<unsigned long>(g.outdegree(v) - 1);
  const long l = static_cast<long>(ell);

  Integer prefactor = 1;
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    if (w != v) prefactor *= power(Integer(static_cast<unsigned long>(g.outdegree(w))), g.indegree(w) - 1);
  }
  Integer bracket = 0;
  if (l <= k - 1) {
    bracket += binomial(k - 1, l) * kappa_total(delete_edge(g, edge)) *
               power(m_minus_1, static_cast<unsigned long>(k - 1 - l));
  }
  if (l >= 1 && l <= k) {
    bracket += binomial(k - 1, l - 1) * kappa_total(contract_edge(g, edge)) *
               power(m_minus_1, static_cast<unsigned long>(k - l));
  }
  return prefactor * bracket;
}

Report verify_line_indegree_counts(const Digraph& g, std::string_view edge, const VerifyOptions& opts) {
  require_no_sources(g);
  const EdgeIndex e = g.edge_index(edge);
  if (g.is_loop(e)) throw HypothesisError("e is not a loop", "edge '" + std::string(edge) + "' is a loop");
  Report report;
  report.command = "indeg-prop e=" + std::string(edge);
  const LineGraph line = line_graph(g);
  const VariablesPtr vars = weight_variables(g, Weighting::Edge);
  std::map<std::string, Integer> ones;
  for (const auto& name : vars->names()) {
    if (name != edge) ones.emplace(name, 1);
  }
  const SparsePoly in_e = kappa_poly(line.graph, Weighting::Vertex, vars).specialize(ones);
  const std::size_t k = g.indegree(g.source(e));

  std::vector<Integer> brute;
  if (opts.oracle) {
    brute.assign(line.graph.vertex_count() + 1, 0);
    for (VertexIndex root = 0; root < line.graph.vertex_count(); ++root) {
      for (const auto& t : oracle::enumerate_trees(line.graph, root, opts.caps).trees) {
        std::size_t indeg = 0;
        for (EdgeIndex f : t.edges()) indeg += line.graph.target(f) == e;
        brute[indeg] += 1;
      }
    }
  }

  Integer sum = 0;
  for (std::size_t ell = 0; ell <= k + 1; ++ell) {
    const Integer formula = count_trees_with_line_indegree(g, edge, ell);
    const SparsePoly coefficient = in_e.coefficient_of(edge, static_cast<std::uint32_t>(ell));
    const Integer from_poly = coefficient.is_zero() ? Integer(0) : coefficient.evaluate_all(1);
    sum += formula;
    report.result("count(ell=" + std::to_string(ell) + ")", to_decimal(formula));
    report.check("ell=" + std::to_string(ell) + " formula = coefficient", formula == from_poly,
                 count_detail(formula, from_poly));
    if (opts.oracle) {
      const Integer b = ell < brute.size() ? brute[ell] : Integer(0);
      report.check("ell=" + std::to_string(ell) + " oracle", b == formula, count_detail(b, formula));
    }
  }
  const Integer line_count = kappa_total(line.graph);
  report.check("sum over ell = kappa(line G)", sum == line_count, count_detail(sum, line_count));
  return report;
}

Integer iterated_line_closed_form(const Digraph& g, std::size_t n) {
  require_no_sources(g);
  const std::vector<Integer> paths = path_count(g, n);
  Integer value = kappa_total(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    value *= power(Integer(static_cast<unsigned long>(g.outdegree(v))), Integer(paths[v] - 1));
  }
  return value;
}

Report verify_theorem5(const Digraph& g, std::size_t n, const VerifyOptions& opts) {
  require_no_sources(g);
  Report report;
  report.command = "thm5 n=" + std::to_string(n);
  const Integer closed = iterated_line_closed_form(g, n);
  const Digraph iterated = iterated_line_graph(g, n).graph;
  const Integer direct = kappa_total(iterated);
  report.result("kappa(line^n G)", to_decimal(direct));
  report.result("closed form", to_decimal(closed));
  report.check("kappa(line^n G) = kappa(G) prod outdeg^(p(n,v)-1)", direct == closed, count_detail(direct, closed));
  if (const auto k = balanced_regular_degree(g)) {
    const Integer kk = static_cast<unsigned long>(*k);
    const Integer regular =
        kappa_total(g) * power(kk, (power(kk, static_cast<unsigned long>(n)) - 1) * static_cast<unsigned long>(g.vertex_count()));
    report.check("balanced regular: kappa(G) k^((k^n-1)N)", regular == direct, count_detail(regular, direct));
  }
  if (opts.oracle && iterated.vertex_count() <= opts.caps.max_vertices) {
    Integer brute = 0;
    for (VertexIndex v = 0; v < iterated.vertex_count(); ++v) brute += oracle::enumerate_trees(iterated, v, opts.caps).count;
    report.check("oracle kappa(line^n G)", brute == direct, count_detail(brute, direct));
  }
  return report;
}

}  // namespace sandgraph
