#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "opwork/linalg/rational.hpp"

namespace opwork {

using Index = std::size_t;

/// Sparse vector: entries sorted by index, no explicit zeros.
class SparseVec {
 public:
  using Entry = std::pair<Index, Rational>;

  SparseVec() = default;
  static SparseVec unit(Index i) {
    SparseVec v;
    v.entries_.emplace_back(i, Rational(1));
    return v;
  }
  /// Builds from unsorted, possibly repeated entries; duplicates are summed.
  static SparseVec from_entries(std::vector<Entry> entries);
  static SparseVec from_dense(std::span<const Rational> dense);

  const std::vector<Entry>& entries() const& { return entries_; }
  std::vector<Entry> entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  Rational at(Index i) const;
  /// Largest index + 1, or 0.
  Index extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  /// this += c * other
  void axpy(const Rational& c, const SparseVec& other);
  void scale(const Rational& c);
  SparseVec operator+(const SparseVec& o) const;
  SparseVec operator-(const SparseVec& o) const;
  SparseVec operator*(const Rational& c) const;
  bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

  std::vector<Rational> to_dense(Index dim) const;

  /// Appends an entry with an index strictly larger than all existing ones.
  void push_back(Index i, Rational c) {
    if (!is_zero(c)) entries_.emplace_back(i, std::move(c));
  }

 private:
  std::vector<Entry> entries_;
};

/// Sparse matrix stored by columns. Exact, shape-checked.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static Matrix identity(Index n);
  static Matrix zero(Index rows, Index cols) { return Matrix(rows, cols); }
  /// Row-major dense data of size rows*cols.
  static Matrix from_dense(Index rows, Index cols, std::span<const Rational> row_major);
  static Matrix from_columns(Index rows, std::vector<SparseVec> columns);
  /// Columns of the result are the given vectors; `rows` is the ambient dimension.
  static Matrix from_rows(Index cols, const std::vector<SparseVec>& rows);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  const SparseVec& column(Index j) const { return columns_[j]; }
  SparseVec& column(Index j) { return columns_[j]; }
  const std::vector<SparseVec>& columns() const { return columns_; }

  Rational at(Index i, Index j) const;
  void set(Index i, Index j, const Rational& value);
  void add_to(Index i, Index j, const Rational& value);

  SparseVec apply(const SparseVec& v) const;
  std::vector<Rational> apply_dense(std::span<const Rational> v) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  /// Rows of the matrix as sparse vectors.
  std::vector<SparseVec> row_vectors() const;
  /// Kronecker product; the first factor is the most significant index.
  Matrix kron(const Matrix& o) const;

  std::size_t nnz() const;
  bool is_zero_matrix() const { return nnz() == 0; }
  /// max |entry|, exact.
  Rational max_abs() const;
  std::vector<Rational> to_dense_row_major() const;

  /// Restricts to the given columns, in order.
  Matrix select_columns(std::span<const Index> cols) const;
  Matrix select_rows(std::span<const Index> rows) const;
  /// [this | o]
  Matrix hconcat(const Matrix& o) const;
  /// [this ; o]
  Matrix vconcat(const Matrix& o) const;
  /// block diagonal
  Matrix direct_sum(const Matrix& o) const;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// Tensor index helpers: the first factor is the most significant digit.
Index tensor_size(std::span<const Index> dims);
Index tensor_index(std::span<const Index> dims, std::span<const Index> digits);
void tensor_digits(std::span<const Index> dims, Index index, std::span<Index> digits);

/// Tensor product of sparse vectors (first factor most significant).
SparseVec kron(const SparseVec& a, Index dim_b, const SparseVec& b);
SparseVec kron_all(std::span<const SparseVec> factors, std::span<const Index> dims);

}  // namespace opwork
