#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sandgraph/digraph.hpp"
#include "sandgraph/exactalg.hpp"
#include "sandgraph/integer.hpp"
#include "sandgraph/report.hpp"

namespace sandgraph {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r, every d_i >= 2.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Validates a divisibility chain; factors equal to 1 are dropped, zero is an error.
  static AbelianGroup from_invariant_factors(std::vector<Integer> factors);
  /// Normalizes an arbitrary direct sum of cyclic groups Z/c_1 + Z/c_2 + ...
  static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  /// Appends `count` copies of Z/order to a list of cyclic orders.
  static void add_cyclic(std::vector<Integer>& orders, const Integer& order, std::size_t count);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Exponents of the Sylow p-subgroup: result[j] = number of Z/p^j summands (index 0 unused).
  std::vector<std::size_t> sylow_exponents(const Integer& p) const;
  /// The group with its Sylow p-subgroup removed.
  AbelianGroup prime_to(const Integer& p) const;

  /// "(Z/2)^2 + Z/4"; the trivial group prints as "0".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Integer> factors_;
};

/// Sandpile group K(G, v*) = Z^V / L_V with L_V spanned by v* and the Delta_v, v != v*.
class SandpilePresentation {
 public:
  const Digraph& graph() const noexcept { return graph_; }
  VertexIndex base() const noexcept { return base_; }
  /// Column v is Delta_v, except column v* which is the unit vector of v*.
  const IntMatrix& relations() const noexcept { return relations_; }
  const SnfDecomposition& snf() const noexcept { return snf_; }
  const AbelianGroup& group() const noexcept { return group_; }

  /// Number of nontrivial cyclic coordinates (= group rank).
  std::size_t rank() const noexcept { return group_.invariant_factors().size(); }
  /// Image of x in Z^V under the coordinate map Z^V -> (+) Z/d_i, reduced into [0, d_i).
  std::vector<Integer> coordinates(std::span<const Integer> x) const;
  /// Ambient vector representing the i-th cyclic generator.
  std::vector<Integer> generator(std::size_t i) const;

  friend SandpilePresentation sandpile_group(const Digraph& g, VertexIndex base);

 private:
  Digraph graph_;
  VertexIndex base_ = 0;
  IntMatrix relations_;
  SnfDecomposition snf_;
  AbelianGroup group_;
  std::vector<std::size_t> nontrivial_;  // SNF positions with d_i >= 2
};

/// Throws Error if G is not strongly connected.
SandpilePresentation sandpile_group(const Digraph& g, VertexIndex base);
SandpilePresentation sandpile_group(const Digraph& g, std::string_view base);

/// Relation matrix that sandpile_group would factor (no connectivity check).
IntMatrix sandpile_relations(const Digraph& g, VertexIndex base);

/// Homomorphism between two sandpile groups. Column j of `matrix` is the image of
/// the domain's j-th generator in codomain coordinates.
struct GroupHom {
  SandpilePresentation domain;
  SandpilePresentation codomain;
  IntMatrix matrix;

  bool is_surjective() const;
  /// Order of the image subgroup.
  Integer image_order() const;
  /// Structure of the kernel.
  AbelianGroup kernel() const;
};

/// Matrix of an ambient linear map Z^{dom} -> Z^{cod} pushed through both
/// coordinate changes. Throws Error unless it maps relations into relations.
GroupHom induced_hom(const SandpilePresentation& domain, const SandpilePresentation& codomain,
                     const IntMatrix& ambient);

/// phi: e -> t(e), inducing K(line G, e*) -> K(G, t(e*)). Requires G strongly connected and Eulerian.
GroupHom phi_bar(const Digraph& g, std::string_view base_edge);
/// psi: v -> sum_{s(e)=v} e, inducing K(G, t(e*)) -> K(line G, e*). Requires G balanced regular
/// and strongly connected.
GroupHom psi_bar(const Digraph& g, std::string_view base_edge);

/// Composition second o first, with entries reduced modulo the target's factors.
IntMatrix compose(const GroupHom& second, const GroupHom& first);

/// Surjectivity of phi, psi o phi = k, kernel order and quotient structure.
Report verify_theorem2(const Digraph& g, std::string_view base_edge);

/// Factors gcd(d_i, k), respectively d_i / gcd(d_i, k). k >= 1.
AbelianGroup k_torsion(const AbelianGroup& a, const Integer& k);
AbelianGroup quotient_by_k_torsion(const AbelianGroup& a, const Integer& k);

/// (+)_{j=1}^{n-1} (Z/2^j)^(2^(n-1-j)). n >= 1.
AbelianGroup closed_form_de_bruijn(std::size_t n);
/// Z/3 + (Z/2^(n-1))^2 + (+)_{j=1}^{n-2} (Z/2^j)^(3 2^(n-2-j)). n >= 1.
AbelianGroup closed_form_kautz(std::size_t n);
/// K(line^n G) for G balanced p-regular on N vertices with sandpile group k_g.
/// Throws HypothesisError when the multiplicity (p-1)N - r - 1 is negative.
AbelianGroup closed_form_p_regular(const AbelianGroup& k_g, const Integer& p, std::size_t vertices, std::size_t n);

/// (cyclic classes, with distinguished start) = (2^(2^(n-1)-n), 2^(2^(n-1))). n >= 1.
std::pair<Integer, Integer> de_bruijn_sequence_count(std::size_t n);

/// Sandpile groups of DB_n / Kautz_n computed by SNF against the closed forms, n = 1..max_n,
/// including order = kappa_rooted.
Report verify_de_bruijn_groups(std::size_t max_n);
Report verify_kautz_groups(std::size_t max_n);
/// closed_form_p_regular against SNF of line^n(base) for n = 1..max_n; base must be balanced p-regular.
Report verify_p_regular_groups(const Digraph& base, const Integer& p, std::size_t max_n);
/// The p-regular display specialized to DB_0 (p=2, N=1) and Kautz_1 (p=2, N=3) against the
/// de Bruijn and Kautz closed forms, n = 1..max_n, without any SNF.
Report verify_p_regular_specializations(std::size_t max_n);
/// de_bruijn_sequence_count(n) against the displayed powers and kappa_rooted(DB_{n-1}).
Report verify_sequence_counts(std::size_t max_n);

/// Group, order and the order = kappa_rooted check for the CLI `sandpile` command.
Report sandpile_report(const SandpilePresentation& k);
/// Report in the sandpile JSON schema.
nlohmann::json sandpile_json(const SandpilePresentation& k, const Report& report);

}  // namespace sandgraph
