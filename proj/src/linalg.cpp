#include "weyl/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weyl {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(const std::vector<Rational>& values) {
  Matrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  return m;
}

std::vector<Rational> Matrix::column_values(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_.size() || col >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (value.is_zero()) return;
  auto [it, inserted] = rows_[row].try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) rows_[row].erase(it);
  }
}

void SparseMatrix::add_column(std::size_t col, const SparseVector& values) {
  for (const auto& [r, v] : values) add(r, col, v);
}

namespace {

// Row echelon structure; pivot rows are normalized (pivot entry 1). Column
// index `cols` holds the right-hand side when one is present.
struct Echelon {
  std::map<std::size_t, SparseVector> pivots;
  bool inconsistent = false;
};

void axpy(SparseVector& row, const Rational& factor, const SparseVector& pivot) {
  for (const auto& [c, v] : pivot) {
    auto [it, inserted] = row.try_emplace(c, -(factor * v));
    if (!inserted) {
      it->second -= factor * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

std::size_t row_cost(const SparseVector& row) {
  std::size_t bits = 0;
  for (const auto& [_, v] : row) bits += v.bit_size();
  return bits;
}

Echelon eliminate(std::vector<SparseVector> rows, std::size_t cols) {
  // Cheapest rows become pivots first; the largest rows are reduced last.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> cost(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) cost[i] = row_cost(rows[i]);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return cost[a] < cost[b]; });

  Echelon e;
  for (auto idx : order) {
    SparseVector& r = rows[idx];
    auto it = r.begin();
    while (it != r.end() && it->first < cols) {
      auto p = e.pivots.find(it->first);
      if (p == e.pivots.end()) {
        ++it;
        continue;
      }
      std::size_t col = it->first;
      Rational factor = it->second;
      axpy(r, factor, p->second);
      it = r.upper_bound(col);
    }
    if (r.empty()) continue;
    auto first = r.begin();
    if (first->first >= cols) {
      e.inconsistent = true;
      continue;
    }
    Rational inv = first->second.inverse();
    for (auto& [_, v] : r) v *= inv;
    std::size_t pc = first->first;
    e.pivots.emplace(pc, std::move(r));
  }

  // Back substitution to reduced row echelon form.
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    SparseVector& row = it->second;
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (auto c = std::next(row.begin()); c != row.end(); ++c) {
      if (c->first < cols && e.pivots.count(c->first)) hits.emplace_back(c->first, c->second);
    }
    for (const auto& [c, v] : hits) axpy(row, v, e.pivots.at(c));
  }
  return e;
}

}  // namespace

std::vector<SparseVector> sparse_kernel(const SparseMatrix& a) {
  Echelon e = eliminate(a.row_data(), a.cols());
  std::map<std::size_t, SparseVector> by_free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!e.pivots.count(c)) by_free[c][c] = Rational(1);
  for (const auto& [p, row] : e.pivots) {
    for (const auto& [c, v] : row) {
      if (c == p) continue;
      by_free.at(c)[p] = -v;
    }
  }
  std::vector<SparseVector> out;
  out.reserve(by_free.size());
  for (auto& [_, v] : by_free) out.push_back(std::move(v));
  return out;
}

std::optional<SparseVector> sparse_solve(const SparseMatrix& a, const SparseVector& b) {
  std::vector<SparseVector> rows = a.row_data();
  for (const auto& [r, v] : b) {
    if (r >= rows.size()) throw std::out_of_range("right-hand side longer than the system");
    if (!v.is_zero()) rows[r][a.cols()] = v;
  }
  Echelon e = eliminate(std::move(rows), a.cols());
  if (e.inconsistent) return std::nullopt;
  SparseVector x;
  for (const auto& [p, row] : e.pivots) {
    auto rhs = row.find(a.cols());
    if (rhs != row.end()) x[p] = rhs->second;
  }
  return x;
}

std::size_t sparse_rank(const SparseMatrix& a) { return eliminate(a.row_data(), a.cols()).pivots.size(); }

namespace {

SparseMatrix to_sparse(const Matrix& a) {
  SparseMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s.add(r, c, a(r, c));
  return s;
}

std::vector<Rational> densify(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : sparse_kernel(to_sparse(a))) out.push_back(densify(v, a.cols()));
  return out;
}

SolveResult linear_solve_exact(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("linear system shape mismatch");
  SparseMatrix s = to_sparse(a);
  SolveResult result;
  result.kernel = kernel_basis(a);
  Matrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    SparseVector rhs;
    for (std::size_t i = 0; i < b.rows(); ++i)
      if (!b(i, j).is_zero()) rhs[i] = b(i, j);
    auto sol = sparse_solve(s, rhs);
    if (!sol) return result;
    for (const auto& [i, v] : *sol) x(i, j) = v;
  }
  result.consistent = true;
  result.solution = std::move(x);
  return result;
}

}  // namespace weyl
