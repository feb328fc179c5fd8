#include "sandgraph/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sandgraph/error.hpp"

namespace sandgraph {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::minor(std::size_t skip_row, std::size_t skip_col) const {
  if (skip_row >= rows_ || skip_col >= cols_) throw Error("minor index out of range");
  IntMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return out;
}

IntMatrix IntMatrix::concat_columns(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw Error("concat_columns: row count mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols_ != x.size()) throw Error("matrix-vector dimension mismatch");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      mpz_addmul(out[i].get_mpz_t(), a(i, k).get_mpz_t(), x[k].get_mpz_t());
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << "]\n";
  }
  return out.str();
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  Integer scratch;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a(i,j) = (a(i,j) a(k,k) - a(i,k) a(k,j)) / previous, exactly.
        mpz_mul(scratch.get_mpz_t(), a(i, j).get_mpz_t(), a(k, k).get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        if (!mpz_divisible_p(scratch.get_mpz_t(), previous.get_mpz_t())) {
          throw Error("Bareiss elimination produced an inexact division");
        }
        mpz_divexact(a(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SnfDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal()) r += (d != 0);
  return r;
}

namespace {

// Working state of the Smith reduction. Row operations act on A and U (and
// inversely on U_inv); column operations act on A and W.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : a_(m),
        u_(IntMatrix::identity(m.rows())),
        u_inv_(IntMatrix::identity(m.rows())),
        w_(IntMatrix::identity(m.cols())) {}

  SnfDecomposition run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_pivot(t)) break;
    }
    return {std::move(u_), std::move(a_), std::move(w_), std::move(u_inv_)};
  }

 private:
  // Returns false when the remaining submatrix is zero.
  bool reduce_pivot(std::size_t t) {
    while (true) {
      if (!bring_min_to(t)) return false;
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_tdiv_q(q_.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        q_ = -q_;
        add_row_multiple(i, t, q_);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_tdiv_q(q_.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        q_ = -q_;
        add_col_multiple(j, t, q_);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (const auto bad = non_divisible_row(t)) {
        add_row_multiple(t, *bad, Integer(1));
        continue;
      }
      if (a_(t, t) < 0) negate_row(t);
      return true;
    }
  }

  bool bring_min_to(std::size_t t) {
    std::size_t best_r = 0;
    std::size_t best_c = 0;
    bool found = false;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const Integer& v = a_(r, c);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), a_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = r;
          best_c = c;
          found = true;
          if (mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) goto done;
        }
      }
    }
  done:
    if (!found) return false;
    if (best_r != t) swap_rows(t, best_r);
    if (best_c != t) swap_cols(t, best_c);
    return true;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  static void row_axpy(IntMatrix& m, std::size_t target, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(src, c) != 0) mpz_addmul(m(target, c).get_mpz_t(), q.get_mpz_t(), m(src, c).get_mpz_t());
    }
  }
  static void col_axpy(IntMatrix& m, std::size_t target, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, src) != 0) mpz_addmul(m(r, target).get_mpz_t(), q.get_mpz_t(), m(r, src).get_mpz_t());
    }
  }

  // row_target += q * row_src
  void add_row_multiple(std::size_t target, std::size_t src, const Integer& q) {
    row_axpy(a_, target, src, q);
    row_axpy(u_, target, src, q);
    col_axpy(u_inv_, src, target, -q);
  }
  // col_target += q * col_src
  void add_col_multiple(std::size_t target, std::size_t src, const Integer& q) {
    col_axpy(a_, target, src, q);
    col_axpy(w_, target, src, q);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < w_.rows(); ++r) std::swap(w_(r, i), w_(r, j));
  }
  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(t, c) = -a_(t, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, t) = -u_inv_(r, t);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix u_inv_;
  IntMatrix w_;
  Integer q_;
};

}  // namespace

std::atomic<bool>& SnfAudit::enabled() noexcept {
  static std::atomic<bool> flag{false};
  return flag;
}
std::atomic<std::size_t>& SnfAudit::invocation_counter() noexcept {
  static std::atomic<std::size_t> count{0};
  return count;
}
std::atomic<std::size_t>& SnfAudit::verified_counter() noexcept {
  static std::atomic<std::size_t> count{0};
  return count;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  SnfAudit::invocation_counter().fetch_add(1);
  SnfDecomposition snf = SmithReducer(m).run();
  if (SnfAudit::is_enabled()) {
    if (const auto failure = check_snf_certificate(m, snf); !failure.empty()) {
      throw Error("Smith normal form certificate failed: " + failure);
    }
    SnfAudit::verified_counter().fetch_add(1);
  }
  return snf;
}

std::string check_snf_certificate(const IntMatrix& m, const SnfDecomposition& snf) {
  if (snf.U.rows() != m.rows() || !snf.U.is_square()) return "U has the wrong shape";
  if (snf.W.rows() != m.cols() || !snf.W.is_square()) return "W has the wrong shape";
  if (snf.S.rows() != m.rows() || snf.S.cols() != m.cols()) return "S has the wrong shape";
  if (!(snf.U * m * snf.W == snf.S)) return "U*M*W != S";
  if (!snf.S.is_diagonal()) return "S is not diagonal";
  if (!(snf.U * snf.U_inverse == IntMatrix::identity(m.rows()))) return "U_inverse is not the inverse of U";
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return "negative diagonal entry";
    if (i + 1 < d.size()) {
      const bool divides = d[i] == 0 ? d[i + 1] == 0 : mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()) != 0;
      if (!divides) return "divisibility chain broken at position " + std::to_string(i);
    }
  }
  if (abs(determinant(snf.U)) != 1) return "U is not unimodular";
  if (abs(determinant(snf.W)) != 1) return "W is not unimodular";
  return {};
}

std::optional<std::vector<Integer>> solve_in_lattice(const SnfDecomposition& snf,
                                                     std::span<const Integer> b) {
  if (b.size() != snf.U.cols()) throw Error("solve_in_lattice: right-hand side has the wrong length");
  const std::vector<Integer> c = snf.U * b;
  const std::size_t n = snf.W.rows();
  std::vector<Integer> y(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Integer s = i < n ? snf.S(i, i) : Integer(0);
    if (s == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(c[i].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), s.get_mpz_t());
  }
  return snf.W * std::span<const Integer>(y);
}

std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw Error("solve_in_lattice: right-hand side has the wrong length");
  return solve_in_lattice(smith_normal_form(m), b);
}

}  // namespace sandgraph
