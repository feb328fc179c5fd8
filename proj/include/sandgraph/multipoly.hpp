#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sandgraph/integer.hpp"

namespace sandgraph {

/// Ordered set of variable names shared by every polynomial of one computation.
class Variables {
 public:
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws Error when absent

  /// Position of each variable in alphabetical order; fixes canonical output.
  const std::vector<std::size_t>& alphabetical() const noexcept { return alphabetical_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::size_t> alphabetical_;
};

using VariablesPtr = std::shared_ptr<const Variables>;
VariablesPtr make_variables(std::vector<std::string> names);

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are keyed by dense exponent vectors over the polynomial's variable
/// set; zero coefficients are never stored. Binary operations on operands
/// with different variable sets first embed both into the union (left
/// operand's names first).
class SparsePoly {
 public:
  /// Exponent vector prefixed by the total degree, so that descending
  /// lexicographic order on the vector is graded-lex order.
  using Monomial = std::vector<std::uint32_t>;
  using TermMap = std::map<Monomial, Integer, std::greater<Monomial>>;

  SparsePoly() : SparsePoly(make_variables({})) {}
  explicit SparsePoly(VariablesPtr vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(VariablesPtr vars, const Integer& c);
  static SparsePoly variable(VariablesPtr vars, std::string_view name);

  const VariablesPtr& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t total_degree() const;
  /// Exponent of variable `var` in a monomial.
  std::uint32_t exponent(const Monomial& m, std::size_t var) const { return m[var + 1]; }

  /// Adds c * monomial (exponents given per variable, without the degree prefix).
  void add_term(std::span<const std::uint32_t> exponents, const Integer& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Integer& c);
  SparsePoly operator-() const;

  SparsePoly pow(unsigned exponent) const;

  /// Exact quotient; throws Error when `divisor` does not divide *this.
  SparsePoly exact_divide(const SparsePoly& divisor) const;

  /// Substitutes integers for every variable; throws Error when one is missing.
  Integer evaluate(const std::map<std::string, Integer>& assignment) const;
  Integer evaluate_all(const Integer& value) const;
  /// Substitutes only the listed variables, keeping the others symbolic.
  SparsePoly specialize(const std::map<std::string, Integer>& assignment) const;
  /// Coefficient of name^power viewed as a polynomial in the remaining variables.
  SparsePoly coefficient_of(std::string_view name, std::uint32_t power) const;

  /// Same polynomial over a superset of its variables.
  SparsePoly embed(const VariablesPtr& vars) const;

  /// `coef*x_a^k*x_b` terms ordered by degree, then lex on alphabetically sorted
  /// variable names; independent of the variable-set ordering.
  std::string to_string() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  void add_monomial(const Monomial& m, const Integer& c);

  VariablesPtr vars_;
  TermMap terms_;
};

/// Union of two variable sets; returns `a` itself when `b` adds nothing.
VariablesPtr union_variables(const VariablesPtr& a, const VariablesPtr& b);

/// Parses the canonical text form produced by SparsePoly::to_string. Terms
/// are separated by " + " or " - "; variables are `x_<name>`.
SparsePoly parse_poly(std::string_view text, VariablesPtr vars = nullptr);

/// Square matrix of polynomials over one variable set.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, VariablesPtr vars);

  std::size_t size() const noexcept { return n_; }
  const VariablesPtr& variables() const noexcept { return vars_; }
  SparsePoly& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const SparsePoly& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  PolyMatrix minor(std::size_t skip_row, std::size_t skip_col) const;
  PolyMatrix operator-() const;

 private:
  std::size_t n_;
  VariablesPtr vars_;
  std::vector<SparsePoly> data_;
};

/// Exact determinant: cofactor expansion up to 4x4, fraction-free Bareiss above.
SparsePoly poly_determinant(const PolyMatrix& m);

/// Bareiss path regardless of size (exposed so tests can compare both routes).
SparsePoly poly_determinant_bareiss(const PolyMatrix& m);
SparsePoly poly_determinant_cofactor(const PolyMatrix& m);

}  // namespace sandgraph
