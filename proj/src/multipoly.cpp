#include "sandgraph/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "sandgraph/error.hpp"

namespace sandgraph {

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second) throw Error("duplicate variable name '" + names_[i] + "'");
  }
  alphabetical_.resize(names_.size());
  std::iota(alphabetical_.begin(), alphabetical_.end(), std::size_t{0});
  std::sort(alphabetical_.begin(), alphabetical_.end(),
            [this](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });
}

std::optional<std::size_t> Variables::find(std::string_view name) const {
  const auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Variables::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

VariablesPtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const Variables>(std::move(names));
}

VariablesPtr union_variables(const VariablesPtr& a, const VariablesPtr& b) {
  if (a == b || a->names() == b->names()) return a;
  std::vector<std::string> names = a->names();
  bool grew = false;
  for (const auto& n : b->names()) {
    if (!a->find(n)) {
      names.push_back(n);
      grew = true;
    }
  }
  return grew ? make_variables(std::move(names)) : a;
}

namespace {

// Brings both operands onto one shared variable set.
std::pair<SparsePoly, SparsePoly> aligned(const SparsePoly& a, const SparsePoly& b) {
  const VariablesPtr target = union_variables(a.variables(), b.variables());
  return {a.embed(target), b.embed(target)};
}

bool same_variables(const SparsePoly& a, const SparsePoly& b) { return a.variables() == b.variables(); }

}  // namespace

SparsePoly SparsePoly::constant(VariablesPtr vars, const Integer& c) {
  SparsePoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Monomial(p.vars_->size() + 1, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(VariablesPtr vars, std::string_view name) {
  SparsePoly p(std::move(vars));
  Monomial m(p.vars_->size() + 1, 0);
  m[0] = 1;
  m[p.vars_->index(name) + 1] = 1;
  p.terms_.emplace(std::move(m), Integer(1));
  return p;
}

std::uint32_t SparsePoly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first[0]; }

void SparsePoly::add_monomial(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::add_term(std::span<const std::uint32_t> exponents, const Integer& c) {
  if (exponents.size() != vars_->size()) throw Error("add_term: exponent vector has the wrong length");
  Monomial m(exponents.size() + 1);
  std::copy(exponents.begin(), exponents.end(), m.begin() + 1);
  m[0] = std::accumulate(exponents.begin(), exponents.end(), std::uint32_t{0});
  add_monomial(m, c);
}

SparsePoly SparsePoly::embed(const VariablesPtr& vars) const {
  if (vars == vars_) return *this;
  SparsePoly out(vars);
  if (vars->names() == vars_->names()) {
    out.terms_ = terms_;
    return out;
  }
  std::vector<std::size_t> position(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    const auto j = vars->find(vars_->name(i));
    if (!j) throw Error("embed: variable '" + vars_->name(i) + "' missing from the target set");
    position[i] = *j;
  }
  for (const auto& [m, c] : terms_) {
    Monomial moved(vars->size() + 1, 0);
    moved[0] = m[0];
    for (std::size_t i = 0; i < position.size(); ++i) moved[position[i] + 1] = m[i + 1];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (!same_variables(*this, other)) {
    auto [a, b] = aligned(*this, other);
    *this = std::move(a);
    return *this += b;
  }
  for (const auto& [m, c] : other.terms_) add_monomial(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (!same_variables(*this, other)) {
    auto [a, b] = aligned(*this, other);
    *this = std::move(a);
    return *this -= b;
  }
  for (const auto& [m, c] : other.terms_) add_monomial(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (!same_variables(a, b)) {
    auto [x, y] = aligned(a, b);
    return x * y;
  }
  SparsePoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t width = a.vars_->size() + 1;
  SparsePoly::Monomial m(width);
  Integer product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) m[i] = ma[i] + mb[i];
      mpz_mul(product.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_monomial(m, product);
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = *this * other;
  return *this;
}

SparsePoly operator*(SparsePoly a, const Integer& c) {
  if (c == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [m, coef] : a.terms_) coef *= c;
  return a;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::pow(unsigned exponent) const {
  SparsePoly result = constant(vars_, 1);
  SparsePoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::exact_divide(const SparsePoly& divisor) const {
  if (!same_variables(*this, divisor)) {
    auto [a, b] = aligned(*this, divisor);
    return a.exact_divide(b);
  }
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  SparsePoly quotient(vars_);
  const auto& [lead_m, lead_c] = *divisor.terms_.begin();
  if (divisor.term_count() == 1 && lead_m[0] == 0) {
    for (const auto& [m, c] : terms_) quotient.terms_.emplace(m, exact_quotient(c, lead_c));
    return quotient;
  }
  SparsePoly remainder = *this;
  const std::size_t width = vars_->size() + 1;
  Monomial shift(width);
  Monomial m(width);
  Integer product;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms_.begin();
    for (std::size_t i = 0; i < width; ++i) {
      if (rm[i] < lead_m[i]) throw Error("inexact polynomial division");
      shift[i] = rm[i] - lead_m[i];
    }
    const Integer factor = exact_quotient(rc, lead_c);
    for (const auto& [dm, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < width; ++i) m[i] = dm[i] + shift[i];
      mpz_mul(product.get_mpz_t(), factor.get_mpz_t(), dc.get_mpz_t());
      remainder.add_monomial(m, -product);
    }
    quotient.add_monomial(shift, factor);
  }
  return quotient;
}

Integer SparsePoly::evaluate(const std::map<std::string, Integer>& assignment) const {
  std::vector<Integer> values(vars_->size());
  std::vector<bool> used(vars_->size(), false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < vars_->size(); ++i) used[i] = used[i] || m[i + 1] > 0;
  }
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    const auto it = assignment.find(vars_->name(i));
    if (it != assignment.end()) {
      values[i] = it->second;
    } else if (used[i]) {
      throw Error("evaluate: no value for variable '" + vars_->name(i) + "'");
    }
  }
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (m[i + 1] > 0) term *= power(values[i], m[i + 1]);
    }
    total += term;
  }
  return total;
}

Integer SparsePoly::evaluate_all(const Integer& value) const {
  std::map<std::string, Integer> assignment;
  for (const auto& n : vars_->names()) assignment.emplace(n, value);
  return evaluate(assignment);
}

SparsePoly SparsePoly::specialize(const std::map<std::string, Integer>& assignment) const {
  std::vector<std::optional<Integer>> values(vars_->size());
  for (const auto& [name, v] : assignment) {
    if (auto i = vars_->find(name)) values[*i] = v;
  }
  SparsePoly out(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    Integer coef = c;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (values[i] && m[i + 1] > 0) {
        coef *= power(*values[i], m[i + 1]);
        reduced[0] -= m[i + 1];
        reduced[i + 1] = 0;
      }
    }
    out.add_monomial(reduced, coef);
  }
  return out;
}

SparsePoly SparsePoly::coefficient_of(std::string_view name, std::uint32_t power_of) const {
  SparsePoly out(vars_);
  const auto var = vars_->find(name);
  if (!var) {
    if (power_of == 0) out = *this;
    return out;
  }
  for (const auto& [m, c] : terms_) {
    if (m[*var + 1] != power_of) continue;
    Monomial reduced = m;
    reduced[0] -= power_of;
    reduced[*var + 1] = 0;
    out.add_monomial(reduced, c);
  }
  return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  if (same_variables(a, b) || a.vars_->names() == b.vars_->names()) return a.terms_ == b.terms_;
  auto [x, y] = aligned(a, b);
  return x.terms_ == y.terms_;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& order = vars_->alphabetical();
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&order](const auto* a, const auto* b) {
    if (a->first[0] != b->first[0]) return a->first[0] > b->first[0];
    for (std::size_t i : order) {
      if (a->first[i + 1] != b->first[i + 1]) return a->first[i + 1] > b->first[i + 1];
    }
    return false;
  });

  std::string out;
  bool first = true;
  for (const auto* term : sorted) {
    const auto& [m, c] = *term;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer magnitude = abs(c);
    std::string body;
    if (m[0] == 0 || magnitude != 1) body = to_decimal(magnitude);
    for (std::size_t i : order) {
      if (m[i + 1] == 0) continue;
      if (!body.empty()) body += '*';
      body += "x_" + vars_->name(i);
      if (m[i + 1] > 1) body += "^" + std::to_string(m[i + 1]);
    }
    out += body;
  }
  return out;
}

SparsePoly parse_poly(std::string_view text, VariablesPtr vars) {
  struct ParsedTerm {
    Integer coef;
    std::vector<std::pair<std::string, std::uint32_t>> factors;
  };
  std::string body(text);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
  std::size_t start = body.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw Error("parse_poly: empty input");
  body = body.substr(start);

  std::vector<std::pair<bool, std::string>> pieces;
  bool negative = false;
  if (body.front() == '-') {
    negative = true;
    body.erase(0, 1);
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = body.find(" + ", pos);
    const std::size_t minus = body.find(" - ", pos);
    const std::size_t cut = std::min(plus, minus);
    pieces.emplace_back(negative, body.substr(pos, cut - pos));
    if (cut == std::string::npos) break;
    negative = cut == minus;
    pos = cut + 3;
  }

  std::vector<ParsedTerm> parsed;
  std::vector<std::string> names;
  for (const auto& [neg, piece] : pieces) {
    ParsedTerm term{Integer(neg ? -1 : 1), {}};
    std::size_t p = 0;
    while (p <= piece.size()) {
      const std::size_t star = std::min(piece.find('*', p), piece.size());
      const std::string factor = piece.substr(p, star - p);
      if (factor.empty()) throw Error("parse_poly: empty factor in '" + piece + "'");
      if (factor.rfind("x_", 0) == 0) {
        std::string name = factor.substr(2);
        std::uint32_t exp = 1;
        if (const auto caret = name.rfind('^'); caret != std::string::npos) {
          exp = static_cast<std::uint32_t>(std::stoul(name.substr(caret + 1)));
          name.erase(caret);
        }
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
        term.factors.emplace_back(std::move(name), exp);
      } else {
        Integer c;
        if (c.set_str(factor, 10) != 0) throw Error("parse_poly: bad coefficient '" + factor + "'");
        term.coef *= c;
      }
      p = star + 1;
    }
    parsed.push_back(std::move(term));
  }

  VariablesPtr target = vars ? union_variables(vars, make_variables(names)) : make_variables(names);
  SparsePoly out(target);
  std::vector<std::uint32_t> exps(target->size());
  for (const auto& term : parsed) {
    std::fill(exps.begin(), exps.end(), 0);
    for (const auto& [name, e] : term.factors) exps[target->index(name)] += e;
    out.add_term(exps, term.coef);
  }
  return out;
}

PolyMatrix::PolyMatrix(std::size_t n, VariablesPtr vars)
    : n_(n), vars_(std::move(vars)), data_(n * n, SparsePoly(vars_)) {}

PolyMatrix PolyMatrix::minor(std::size_t skip_row, std::size_t skip_col) const {
  if (skip_row >= n_ || skip_col >= n_) throw Error("minor index out of range");
  PolyMatrix out(n_ - 1, vars_);
  for (std::size_t r = 0, rr = 0; r < n_; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < n_; ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(n_, vars_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

SparsePoly poly_determinant_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePoly::constant(m.variables(), 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  SparsePoly det(m.variables());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    SparsePoly term = m(0, c) * poly_determinant_cofactor(m.minor(0, c));
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

SparsePoly poly_determinant_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePoly::constant(m.variables(), 1);
  PolyMatrix a = m;
  SparsePoly previous = SparsePoly::constant(m.variables(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a(r, k).is_zero()) ++r;
      if (r == n) return SparsePoly(m.variables());
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(r, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePoly numerator = a(i, j) * a(k, k);
        if (!a(i, k).is_zero() && !a(k, j).is_zero()) numerator -= a(i, k) * a(k, j);
        a(i, j) = k == 0 ? std::move(numerator) : numerator.exact_divide(previous);
      }
      a(i, k) = SparsePoly(m.variables());
    }
    previous = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

SparsePoly poly_determinant(const PolyMatrix& m) {
  return m.size() <= 4 ? poly_determinant_cofactor(m) : poly_determinant_bareiss(m);
}

}  // namespace sandgraph
