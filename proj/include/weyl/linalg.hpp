#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(const std::vector<Rational>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column_values(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using SparseVector = std::map<std::size_t, Rational>;

/// Row-sparse matrix builder. Entries accumulate; zeros are dropped.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  void add(std::size_t row, std::size_t col, const Rational& value);
  /// Adds `values` as column `col` (row index -> value).
  void add_column(std::size_t col, const SparseVector& values);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<SparseVector>& row_data() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

/// Basis of {x : A x = 0}, one vector per free column, in column order.
std::vector<SparseVector> sparse_kernel(const SparseMatrix& a);
/// Some solution of A x = b with free variables set to zero, or nullopt if inconsistent.
std::optional<SparseVector> sparse_solve(const SparseMatrix& a, const SparseVector& b);
std::size_t sparse_rank(const SparseMatrix& a);

struct SolveResult {
  bool consistent = false;
  /// cols(A) x cols(b); free variables set to zero. Empty when inconsistent.
  Matrix solution;
  /// Null-space basis of A.
  std::vector<std::vector<Rational>> kernel;
};

/// Exact solve of A X = B over Q. Inconsistency is reported through
/// `consistent`, never silently. Throws std::invalid_argument on shape mismatch.
SolveResult linear_solve_exact(const Matrix& a, const Matrix& b);
std::vector<std::vector<Rational>> kernel_basis(const Matrix& a);

}  // namespace weyl
