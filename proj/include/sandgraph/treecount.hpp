#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sandgraph/digraph.hpp"
#include "sandgraph/exactalg.hpp"
#include "sandgraph/integer.hpp"
#include "sandgraph/multipoly.hpp"
#include "sandgraph/oracle.hpp"
#include "sandgraph/report.hpp"

namespace sandgraph {

enum class Weighting { Edge, Vertex };

/// Variables of the weighted enumerators: x_e for edge weighting (edge ids),
/// x_v for vertex weighting (vertex ids).
VariablesPtr weight_variables(const Digraph& g, Weighting kind);

/// V x V weighted Laplacian whose column v is
///   sum over s(e) = v of w(e) (t(e) - v),
/// with w(e) = x_e (edge weighting) or x_{t(e)} (vertex weighting).
PolyMatrix laplacian(const Digraph& g, Weighting kind);
PolyMatrix laplacian(const Digraph& g, Weighting kind, const VariablesPtr& vars);

/// Integer Laplacian (all weights one); column v is Delta_v. Loops contribute nothing.
IntMatrix integer_laplacian(const Digraph& g);

/// Number of oriented spanning trees rooted at `root`: det of -Laplacian with
/// the root's row and column removed. Zero when no such tree exists.
Integer kappa_rooted(const Digraph& g, VertexIndex root);
Integer kappa_rooted(const Digraph& g, std::string_view root);
/// kappa_rooted for every vertex, in vertex order.
std::vector<Integer> kappa_all_roots(const Digraph& g);
/// Total number of oriented spanning trees (sum over roots).
Integer kappa_total(const Digraph& g);

SparsePoly kappa_poly_rooted(const Digraph& g, VertexIndex root, Weighting kind);
SparsePoly kappa_poly(const Digraph& g, Weighting kind);
SparsePoly kappa_poly_rooted(const Digraph& g, VertexIndex root, Weighting kind, const VariablesPtr& vars);
SparsePoly kappa_poly(const Digraph& g, Weighting kind, const VariablesPtr& vars);

/// [t] det(t Id - Delta), computed symbolically with t as an extra variable.
/// Independent route to kappa_poly, meant for small graphs.
SparsePoly kappa_poly_via_charpoly(const Digraph& g, Weighting kind);

/// pi(G) = prod_v outdeg(v)^(indeg(v) - 1); requires every indegree >= 1.
Integer pi_factor(const Digraph& g);

/// Options shared by the verification routines.
struct VerifyOptions {
  /// Also cross-check against brute-force enumeration (within caps).
  bool oracle = false;
  oracle::Caps caps{};
};

/// Weighted line-graph enumerator identity: for G without sources,
///   kappa^vertex(line G) = kappa^edge(G) * prod_v (sum_{s(e)=v} x_e)^(indeg(v)-1).
/// Throws HypothesisError if G has a source.
Report verify_theorem1(const Digraph& g, const VerifyOptions& opts = {});

/// Rooted line-graph enumerator for base edge e* = (w*, v*), plus the
/// numeric product formula and the divisibility kappa(G,w*) | kappa(line G,e*).
/// Requires indeg(v) >= 1 everywhere and indeg(v*) >= 2.
Report verify_rooted_theorem(const Digraph& g, std::string_view base_edge, const VerifyOptions& opts = {});

/// Knuth's formula for kappa(line G, e*); same hypotheses as the rooted
/// theorem plus outdeg(v*) >= 1 so that the formula is defined.
Report verify_knuth(const Digraph& g, std::string_view base_edge, const VerifyOptions& opts = {});

/// kappa^edge(G,v*) sum_{s(e)=v*} x_e = sum_{t(e)=v*} kappa^edge(G,s(e)) x_e,
/// its all-ones corollary, and (with opts.oracle) the unicycle sum.
Report verify_unicycle_lemma(const Digraph& g, std::string_view root, const VerifyOptions& opts = {});

/// kappa^edge(G) = kappa^edge(G \ e) + x_e kappa^edge(G / e) for a non-loop e.
Report verify_deletion_contraction(const Digraph& g, std::string_view edge, const VerifyOptions& opts = {});

/// Number of oriented spanning trees T of line G with indeg_T(e) = ell, from
/// the closed binomial expression. Requires G source-free and e not a loop.
Integer count_trees_with_line_indegree(const Digraph& g, std::string_view edge, std::size_t ell);

/// Compares the closed binomial count with the coefficient of x_e^ell in
/// kappa^vertex(line G) at x_f = 1 (f != e), for every ell in [0, indeg(s(e))].
Report verify_line_indegree_counts(const Digraph& g, std::string_view edge, const VerifyOptions& opts = {});

/// kappa(line^n G) = kappa(G) prod_v outdeg(v)^(p(n,v) - 1), and for balanced
/// k-regular G also kappa(G) k^((k^n - 1) |V|).
Integer iterated_line_closed_form(const Digraph& g, std::size_t n);
Report verify_theorem5(const Digraph& g, std::size_t n, const VerifyOptions& opts = {});

}  // namespace sandgraph
