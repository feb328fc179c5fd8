#pragma once

#include <atomic>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sandgraph/integer.hpp"

namespace sandgraph {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;

  IntMatrix transpose() const;
  /// Removes one row and one column.
  IntMatrix minor(std::size_t skip_row, std::size_t skip_col) const;
  /// Horizontal concatenation [*this | other].
  IntMatrix concat_columns(const IntMatrix& other) const;

  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by Bareiss fraction-free elimination; throws Error for
/// non-square input.
Integer determinant(const IntMatrix& m);

/// U * M * W = S with U, W unimodular and S diagonal, its diagonal
/// nonnegative and forming a divisibility chain (zeros last).
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix W;
  IntMatrix U_inverse;

  /// The diagonal of S, length min(rows, cols).
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Checks every certificate property of `snf` against its source matrix.
/// Returns an empty string on success or a description of the first failure.
std::string check_snf_certificate(const IntMatrix& m, const SnfDecomposition& snf);

/// When enabled, smith_normal_form checks its own certificate and throws on
/// failure. Counters are process-wide.
struct SnfAudit {
  static void enable(bool on) noexcept { enabled().store(on); }
  static bool is_enabled() noexcept { return enabled().load(); }
  static std::size_t invocations() noexcept { return invocation_counter().load(); }
  static std::size_t verified() noexcept { return verified_counter().load(); }

  static std::atomic<bool>& enabled() noexcept;
  static std::atomic<std::size_t>& invocation_counter() noexcept;
  static std::atomic<std::size_t>& verified_counter() noexcept;
};

/// Integer solution x of M x = b, if one exists.
std::optional<std::vector<Integer>> solve_in_lattice(const IntMatrix& m, std::span<const Integer> b);
/// Same, reusing a precomputed decomposition of M.
std::optional<std::vector<Integer>> solve_in_lattice(const SnfDecomposition& snf,
                                                     std::span<const Integer> b);

}  // namespace sandgraph
