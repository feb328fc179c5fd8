#include "sandgraph/sandpile.hpp"

#include <algorithm>
#include <limits>

#include "sandgraph/error.hpp"
#include "sandgraph/generators.hpp"
#include "sandgraph/linegraph.hpp"
#include "sandgraph/treecount.hpp"

namespace sandgraph {

namespace {

constexpr std::size_t kMaxSummands = std::size_t{1} << 22;

std::size_t to_count(const Integer& value) {
  if (value < 0) throw Error("negative summand count");
  if (value > kMaxSummands) throw Error("closed form has more than 2^22 cyclic summands");
  return value.get_ui();
}

Integer product(const std::vector<Integer>& values) {
  Integer p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

Integer pow2(std::size_t e) { return power(Integer(2), static_cast<unsigned long>(e)); }

}  // namespace

AbelianGroup AbelianGroup::from_invariant_factors(std::vector<Integer> factors) {
  AbelianGroup g;
  for (auto& d : factors) {
    if (d <= 0) throw Error("invariant factors must be positive");
    if (d == 1) continue;
    if (!g.factors_.empty() && !mpz_divisible_p(d.get_mpz_t(), g.factors_.back().get_mpz_t())) {
      throw Error("invariant factors do not form a divisibility chain");
    }
    g.factors_.push_back(std::move(d));
  }
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  AbelianGroup g;
  auto& d = g.factors_;
  Integer next;
  for (const auto& c : orders) {
    if (c <= 0) throw Error("cyclic orders must be positive");
    Integer carry = c;
    bool absorbed = false;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (carry == 1) {
        absorbed = true;
        break;
      }
      next = sandgraph::lcm(d[i], carry);
      carry = sandgraph::gcd(d[i], carry);
      d[i] = next;
    }
    if (!absorbed && carry != 1) d.insert(d.begin(), carry);
  }
  return g;
}

void AbelianGroup::add_cyclic(std::vector<Integer>& orders, const Integer& order, std::size_t count) {
  if (orders.size() + count > kMaxSummands) throw Error("too many cyclic summands");
  orders.insert(orders.end(), count, order);
}

Integer AbelianGroup::order() const { return product(factors_); }

std::vector<std::size_t> AbelianGroup::sylow_exponents(const Integer& p) const {
  std::vector<std::size_t> a(1, 0);
  Integer rest;
  for (const auto& d : factors_) {
    const std::size_t v = mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (v == 0) continue;
    if (a.size() <= v) a.resize(v + 1, 0);
    ++a[v];
  }
  return a;
}

AbelianGroup AbelianGroup::prime_to(const Integer& p) const {
  std::vector<Integer> rest(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) mpz_remove(rest[i].get_mpz_t(), factors_[i].get_mpz_t(), p.get_mpz_t());
  return from_invariant_factors(std::move(rest));
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += " + ";
    const std::string cyclic = "Z/" + to_decimal(factors_[i]);
    out += j - i == 1 ? cyclic : "(" + cyclic + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

IntMatrix sandpile_relations(const Digraph& g, VertexIndex base) {
  if (base >= g.vertex_count()) throw Error("base vertex out of range");
  IntMatrix m = integer_laplacian(g);
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, base) = r == base ? 1 : 0;
  return m;
}

SandpilePresentation sandpile_group(const Digraph& g, VertexIndex base) {
  if (!is_strongly_connected(g)) throw Error("sandpile group: graph is not strongly connected (group may be infinite)");
  SandpilePresentation k;
  k.graph_ = g;
  k.base_ = base;
  k.relations_ = sandpile_relations(g, base);
  k.snf_ = smith_normal_form(k.relations_);
  const auto d = k.snf_.diagonal();
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) throw Error("sandpile group: relation matrix is singular");
    if (d[i] == 1) continue;
    k.nontrivial_.push_back(i);
    factors.push_back(d[i]);
  }
  k.group_ = AbelianGroup::from_invariant_factors(std::move(factors));
  return k;
}

SandpilePresentation sandpile_group(const Digraph& g, std::string_view base) {
  return sandpile_group(g, g.vertex_index(base));
}

std::vector<Integer> SandpilePresentation::coordinates(std::span<const Integer> x) const {
  if (x.size() != graph_.vertex_count()) throw Error("coordinates: vector has the wrong length");
  const std::vector<Integer> y = snf_.U * x;
  std::vector<Integer> out(nontrivial_.size());
  for (std::size_t i = 0; i < nontrivial_.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), y[nontrivial_[i]].get_mpz_t(), group_.invariant_factors()[i].get_mpz_t());
  }
  return out;
}

std::vector<Integer> SandpilePresentation::generator(std::size_t i) const {
  return snf_.U_inverse.column(nontrivial_.at(i));
}

GroupHom induced_hom(const SandpilePresentation& domain, const SandpilePresentation& codomain,
                     const IntMatrix& ambient) {
  if (ambient.rows() != codomain.graph().vertex_count() || ambient.cols() != domain.graph().vertex_count()) {
    throw Error("induced_hom: ambient map has the wrong shape");
  }
  const IntMatrix& rel = domain.relations();
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    const std::vector<Integer> column = rel.column(j);
    if (!solve_in_lattice(codomain.snf(), ambient * std::span<const Integer>(column))) {
      throw Error("induced_hom: relation " + std::to_string(j) + " does not map into the codomain relations");
    }
  }
  GroupHom hom{domain, codomain, IntMatrix(codomain.rank(), domain.rank())};
  for (std::size_t j = 0; j < domain.rank(); ++j) {
    const std::vector<Integer> gen = domain.generator(j);
    const std::vector<Integer> image = codomain.coordinates(ambient * std::span<const Integer>(gen));
    for (std::size_t i = 0; i < image.size(); ++i) hom.matrix(i, j) = image[i];
  }
  return hom;
}

namespace {

// Cokernel sizes of [H | D_codomain].
std::vector<Integer> image_snf_diagonal(const GroupHom& h) {
  const auto& d = h.codomain.group().invariant_factors();
  if (d.empty()) return {};
  const IntMatrix m = h.matrix.concat_columns(IntMatrix::diagonal(d));
  return smith_normal_form(m).diagonal();
}

}  // namespace

bool GroupHom::is_surjective() const {
  const auto diag = image_snf_diagonal(*this);
  return std::all_of(diag.begin(), diag.end(), [](const Integer& s) { return s == 1; });
}

Integer GroupHom::image_order() const {
  const Integer coker = product(image_snf_diagonal(*this));
  if (coker == 0) throw Error("image_order: degenerate cokernel");
  return exact_quotient(codomain.group().order(), coker);
}

AbelianGroup GroupHom::kernel() const {
  const std::size_t rd = domain.rank();
  const std::size_t rc = codomain.rank();
  const auto& dd = domain.group().invariant_factors();
  if (rd == 0) return {};
  if (rc == 0) return domain.group();

  // Lambda = { y : H y in D_c Z^rc }, the projection of ker [H | -D_c].
  IntMatrix stacked = matrix.concat_columns(IntMatrix::diagonal(codomain.group().invariant_factors()));
  for (std::size_t i = 0; i < rc; ++i) stacked(i, rd + i) = -stacked(i, rd + i);
  const SnfDecomposition s = smith_normal_form(stacked);
  const std::size_t rho = s.rank();
  IntMatrix span(rd, stacked.cols() - rho);
  for (std::size_t j = rho; j < stacked.cols(); ++j) {
    for (std::size_t i = 0; i < rd; ++i) span(i, j - rho) = s.W(i, j);
  }

  // Basis B = U'^{-1} diag(s'_1..s'_rd) of Lambda; then ker = Lambda / D_d Z^rd.
  const SnfDecomposition t = smith_normal_form(span);
  if (t.rank() != rd) throw Error("kernel: lattice has the wrong rank");
  const std::vector<Integer> sd = t.diagonal();
  IntMatrix c(rd, rd);
  for (std::size_t j = 0; j < rd; ++j) {
    // Solve B x = d_j e_j: x = S'^{-1} U' (d_j e_j).
    for (std::size_t i = 0; i < rd; ++i) c(i, j) = exact_quotient(t.U(i, j) * dd[j], sd[i]);
  }
  std::vector<Integer> factors;
  for (const auto& f : smith_normal_form(c).diagonal()) factors.push_back(f);
  return AbelianGroup::from_invariant_factors(std::move(factors));
}

GroupHom phi_bar(const Digraph& g, std::string_view base_edge) {
  const EdgeIndex e = g.edge_index(base_edge);
  if (!is_strongly_connected(g)) throw HypothesisError("G strongly connected", "graph is not strongly connected");
  if (!is_eulerian(g)) throw HypothesisError("G Eulerian", "some vertex has indegree != outdegree");
  const LineGraph line = line_graph(g);
  const SandpilePresentation domain = sandpile_group(line.graph, e);
  const SandpilePresentation codomain = sandpile_group(g, g.target(e));
  IntMatrix ambient(g.vertex_count(), line.graph.vertex_count());
  for (VertexIndex l = 0; l < line.graph.vertex_count(); ++l) ambient(g.target(line.base_edge[l]), l) = 1;
  return induced_hom(domain, codomain, ambient);
}

GroupHom psi_bar(const Digraph& g, std::string_view base_edge) {
  const EdgeIndex e = g.edge_index(base_edge);
  if (!is_strongly_connected(g)) throw HypothesisError("G strongly connected", "graph is not strongly connected");
  if (!balanced_regular_degree(g)) {
    throw HypothesisError("G balanced k-regular", "indegrees and outdegrees are not all equal");
  }
  const LineGraph line = line_graph(g);
  const SandpilePresentation domain = sandpile_group(g, g.target(e));
  const SandpilePresentation codomain = sandpile_group(line.graph, e);
  IntMatrix ambient(line.graph.vertex_count(), g.vertex_count());
  for (VertexIndex l = 0; l < line.graph.vertex_count(); ++l) ambient(l, g.source(line.base_edge[l])) = 1;
  return induced_hom(domain, codomain, ambient);
}

IntMatrix compose(const GroupHom& second, const GroupHom& first) {
  if (first.matrix.rows() != second.matrix.cols() ||
      !(first.codomain.group() == second.domain.group())) {
    throw Error("compose: homomorphisms are not composable");
  }
  IntMatrix c = second.matrix * first.matrix;
  const auto& d = second.codomain.group().invariant_factors();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) mpz_fdiv_r(c(i, j).get_mpz_t(), c(i, j).get_mpz_t(), d[i].get_mpz_t());
  }
  return c;
}

AbelianGroup k_torsion(const AbelianGroup& a, const Integer& k) {
  if (k < 1) throw Error("k_torsion: k must be >= 1");
  std::vector<Integer> orders;
  for (const auto& d : a.invariant_factors()) orders.push_back(gcd(d, k));
  return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup quotient_by_k_torsion(const AbelianGroup& a, const Integer& k) {
  if (k < 1) throw Error("quotient_by_k_torsion: k must be >= 1");
  std::vector<Integer> orders;
  for (const auto& d : a.invariant_factors()) orders.push_back(d / gcd(d, k));
  return AbelianGroup::from_cyclic_orders(orders);
}

Report verify_theorem2(const Digraph& g, std::string_view base_edge) {
  Report report;
  report.command = "thm2 e*=" + std::string(base_edge);
  const GroupHom phi = phi_bar(g, base_edge);
  const AbelianGroup& line_group = phi.domain.group();
  const AbelianGroup& base_group = phi.codomain.group();
  report.result("K(line G, e*)", line_group.to_string());
  report.result("K(G, v*)", base_group.to_string());
  report.check("phi well-defined", true, "relations map into L_V");
  report.check("(i) phi surjective", phi.is_surjective(), "image of [H | D] spans the codomain");

  const AbelianGroup kernel = phi.kernel();
  report.result("ker phi", kernel.to_string());
  report.result("|ker phi|", to_decimal(kernel.order()));
  const Integer lhs = line_group.order();
  const Integer rhs = base_group.order() * kernel.order();
  report.check("|K(line G)| = |K(G)| |ker phi|", lhs == rhs, to_decimal(lhs) + " vs " + to_decimal(rhs));

  const auto k_opt = balanced_regular_degree(g);
  if (!k_opt) {
    report.result("kernel structure", "not asserted: G is Eulerian but not balanced regular");
    return report;
  }
  const Integer k = static_cast<unsigned long>(*k_opt);
  report.result("k", to_decimal(k));
  const GroupHom psi = psi_bar(g, base_edge);
  report.check("psi well-defined", true, "relations map into L_E");

  const IntMatrix composite = compose(psi, phi);
  IntMatrix times_k(line_group.invariant_factors().size(), line_group.invariant_factors().size());
  for (std::size_t i = 0; i < times_k.rows(); ++i) {
    mpz_fdiv_r(times_k(i, i).get_mpz_t(), k.get_mpz_t(), line_group.invariant_factors()[i].get_mpz_t());
  }
  report.check("(ii) psi o phi = multiplication by k", composite == times_k, "in SNF coordinates");

  const AbelianGroup torsion = k_torsion(line_group, k);
  report.check("(iii) |ker phi| = prod gcd(d_i, k)", kernel.order() == torsion.order(),
               to_decimal(kernel.order()) + " vs " + to_decimal(torsion.order()));
  report.check("ker phi = k-torsion subgroup", kernel == torsion, kernel.to_string() + " vs " + torsion.to_string());
  const AbelianGroup quotient = quotient_by_k_torsion(line_group, k);
  report.check("(iv) K(line G)/ker phi = K(G)", quotient == base_group,
               quotient.to_string() + " vs " + base_group.to_string());

  const Integer image = psi.image_order();
  report.check("psi injective", image == base_group.order(),
               to_decimal(image) + " vs " + to_decimal(base_group.order()));
  bool in_k_multiples = true;
  const auto& d = line_group.invariant_factors();
  for (std::size_t i = 0; i < psi.matrix.rows(); ++i) {
    const Integer gk = gcd(d[i], k);
    for (std::size_t j = 0; j < psi.matrix.cols(); ++j) {
      if (!mpz_divisible_p(psi.matrix(i, j).get_mpz_t(), gk.get_mpz_t())) in_k_multiples = false;
    }
  }
  report.check("psi image = k K(line G)", in_k_multiples && image == quotient.order(),
               to_decimal(image) + " vs " + to_decimal(quotient.order()));
  return report;
}

AbelianGroup closed_form_de_bruijn(std::size_t n) {
  if (n < 1) throw Error("closed_form_de_bruijn: n must be >= 1");
  if (n > 24) throw Error("closed_form_de_bruijn: n too large");
  std::vector<Integer> orders;
  for (std::size_t j = 1; j + 1 <= n; ++j) AbelianGroup::add_cyclic(orders, pow2(j), to_count(pow2(n - 1 - j)));
  return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup closed_form_kautz(std::size_t n) {
  if (n < 1) throw Error("closed_form_kautz: n must be >= 1");
  if (n > 24) throw Error("closed_form_kautz: n too large");
  std::vector<Integer> orders{3};
  AbelianGroup::add_cyclic(orders, pow2(n - 1), 2);
  for (std::size_t j = 1; j + 2 <= n; ++j) AbelianGroup::add_cyclic(orders, pow2(j), to_count(3 * pow2(n - 2 - j)));
  return AbelianGroup::from_cyclic_orders(orders);
}

AbelianGroup closed_form_p_regular(const AbelianGroup& k_g, const Integer& p, std::size_t vertices, std::size_t n) {
  if (!is_prime(p)) throw Error("closed_form_p_regular: p must be prime");
  if (n == 0) return k_g;
  const std::vector<std::size_t> a = k_g.sylow_exponents(p);
  std::size_t r = 0;
  for (std::size_t j = 1; j < a.size(); ++j) r += a[j];
  const Integer big_n = static_cast<unsigned long>(vertices);
  const Integer top = (p - 1) * big_n - static_cast<unsigned long>(r) - 1;
  if (top < 0) {
    throw HypothesisError("(p-1)N - r - 1 >= 0", "multiplicity is " + to_decimal(top));
  }
  std::vector<Integer> orders = k_g.prime_to(p).invariant_factors();
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    const Integer count = power(p, static_cast<unsigned long>(n - 1 - j)) * (p - 1) * (p - 1) * big_n;
    AbelianGroup::add_cyclic(orders, power(p, static_cast<unsigned long>(j)), to_count(count));
  }
  AbelianGroup::add_cyclic(orders, power(p, static_cast<unsigned long>(n)), to_count(top));
  for (std::size_t j = 1; j < a.size(); ++j) {
    AbelianGroup::add_cyclic(orders, power(p, static_cast<unsigned long>(n + j)), a[j]);
  }
  return AbelianGroup::from_cyclic_orders(orders);
}

std::pair<Integer, Integer> de_bruijn_sequence_count(std::size_t n) {
  if (n < 1) throw Error("de_bruijn_sequence_count: n must be >= 1");
  if (n > 24) throw Error("de_bruijn_sequence_count: n too large");
  const std::size_t half = std::size_t{1} << (n - 1);
  return {pow2(half - n), pow2(half)};
}

namespace {

void compare_groups(Report& report, const std::string& name, const AbelianGroup& computed,
                    const AbelianGroup& expected) {
  report.check(name, computed == expected, computed.to_string() + " vs " + expected.to_string());
}

}  // namespace

Report verify_de_bruijn_groups(std::size_t max_n) {
  Report report;
  report.command = "closed-forms debruijn";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Digraph g = de_bruijn(n);
    const SandpilePresentation k = sandpile_group(g, VertexIndex{0});
    const std::string tag = "DB_" + std::to_string(n);
    compare_groups(report, "K(" + tag + ") = closed form", k.group(), closed_form_de_bruijn(n));
    const Integer expected = pow2((std::size_t{1} << n) - n - 1);
    const Integer kappa = kappa_rooted(g, VertexIndex{0});
    report.check("|K(" + tag + ")| = kappa = 2^(2^n-n-1)", k.group().order() == expected && kappa == expected,
                 to_decimal(k.group().order()) + ", " + to_decimal(kappa) + " vs " + to_decimal(expected));
  }
  return report;
}

Report verify_kautz_groups(std::size_t max_n) {
  Report report;
  report.command = "closed-forms kautz";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Digraph g = kautz(n);
    const SandpilePresentation k = sandpile_group(g, VertexIndex{0});
    const std::string tag = "Kautz_" + std::to_string(n);
    compare_groups(report, "K(" + tag + ") = closed form", k.group(), closed_form_kautz(n));
    const Integer kappa = kappa_rooted(g, VertexIndex{0});
    report.check("|K(" + tag + ")| = kappa", k.group().order() == kappa,
                 to_decimal(k.group().order()) + " vs " + to_decimal(kappa));
  }
  return report;
}

Report verify_p_regular_groups(const Digraph& base, const Integer& p, std::size_t max_n) {
  const auto k = balanced_regular_degree(base);
  if (!k || Integer(static_cast<unsigned long>(*k)) != p) {
    throw HypothesisError("G balanced p-regular", "base graph is not balanced " + to_decimal(p) + "-regular");
  }
  Report report;
  report.command = "closed-forms p-regular p=" + to_decimal(p);
  const AbelianGroup k_g = sandpile_group(base, VertexIndex{0}).group();
  report.result("K(G)", k_g.to_string());
  for (std::size_t n = 1; n <= max_n; ++n) {
    const Digraph line = iterated_line_graph(base, n).graph;
    const AbelianGroup computed = sandpile_group(line, VertexIndex{0}).group();
    compare_groups(report, "K(line^" + std::to_string(n) + " G) = display", computed,
                   closed_form_p_regular(k_g, p, base.vertex_count(), n));
  }
  return report;
}

Report verify_p_regular_specializations(std::size_t max_n) {
  Report report;
  report.command = "closed-forms p-regular specializations";
  const AbelianGroup z3 = AbelianGroup::from_invariant_factors({3});
  for (std::size_t n = 1; n <= max_n; ++n) {
    compare_groups(report, "p=2, N=1, trivial K_G, n=" + std::to_string(n) + " gives de Bruijn form",
                   closed_form_p_regular(AbelianGroup{}, 2, 1, n), closed_form_de_bruijn(n));
    compare_groups(report, "p=2, N=3, K_G=Z/3, n=" + std::to_string(n) + " gives Kautz form",
                   closed_form_p_regular(z3, 2, 3, n), closed_form_kautz(n + 1));
  }
  return report;
}

Report verify_sequence_counts(std::size_t max_n) {
  Report report;
  report.command = "closed-forms sequences";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto [cyclic, started] = de_bruijn_sequence_count(n);
    const std::size_t half = std::size_t{1} << (n - 1);
    const std::string tag = "n=" + std::to_string(n);
    report.result("sequences " + tag, "(" + to_decimal(cyclic) + ", " + to_decimal(started) + ")");
    report.check("displayed powers " + tag, cyclic == pow2(half - n) && started == pow2(half));
    const Digraph g = de_bruijn(n - 1);
    bool all_roots = true;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) all_roots = all_roots && kappa_rooted(g, v) == cyclic;
    report.check("cyclic count = kappa(DB_" + std::to_string(n - 1) + ", v) " + tag, all_roots,
                 to_decimal(cyclic) + " vs " + to_decimal(kappa_rooted(g, VertexIndex{0})));
    report.check("distinguished start = cyclic * 2^n " + tag, started == cyclic * pow2(n));
  }
  return report;
}

Report sandpile_report(const SandpilePresentation& k) {
  Report report;
  report.command = "sandpile v*=" + k.graph().vertex_id(k.base());
  report.result("group", k.group().to_string());
  report.result("order", to_decimal(k.group().order()));
  const Integer kappa = kappa_rooted(k.graph(), k.base());
  report.check("order = kappa(G, v*)", k.group().order() == kappa,
               to_decimal(k.group().order()) + " vs " + to_decimal(kappa));
  const std::string failure = check_snf_certificate(k.relations(), k.snf());
  report.check("SNF certificate", failure.empty(), failure.empty() ? "U M W = S, unimodular, divisibility" : failure);
  return report;
}

nlohmann::json sandpile_json(const SandpilePresentation& k, const Report& report) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& d : k.group().invariant_factors()) factors.push_back(to_decimal(d));
  nlohmann::json out;
  out["base"] = k.graph().vertex_id(k.base());
  out["group"] = {{"invariant_factors", factors}};
  out["order"] = to_decimal(k.group().order());
  out["checks"] = report.to_json()["checks"];
  out["pass"] = report.passed();
  return out;
}

}  // namespace sandgraph
